//! Exact computations with quiver algebras, their Auslander-Dlab-Ringel
//! algebras and quasihereditary structures.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact linear algebra over `Q` and `F_p`;
//! * [`presentation`]: quivers with relations and normal-form path bases;
//! * [`modrep`]: modules as quiver representations and their homological toolkit;
//! * [`adr`]: the ADR algebra `End_A(G)^op` and the functor `Hom_A(G, -)`;
//! * [`qh`]: standard, costandard and tilting modules, filtrations and Ringel duals;
//! * [`cli`]: the command-line front end.

// Index loops mirror the matrix notation they implement.
#![allow(clippy::needless_range_loop)]

pub mod adr;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod modrep;
pub mod presentation;
pub mod qh;

pub use error::{Error, Result};
