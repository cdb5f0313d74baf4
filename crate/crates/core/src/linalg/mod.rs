//! Exact linear algebra over the rationals and prime fields.

mod field;
mod matrix;
mod poly;
mod sparse;
mod subspace;

pub use field::{FieldSpec, Scalar, MAX_CHARACTERISTIC};
pub use matrix::{Matrix, Rref};
pub use poly::Poly;
pub use sparse::SparseEchelon;
pub use subspace::{unit, Subspace};
