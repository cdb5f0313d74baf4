//! Finite-dimensional modules as quiver representations.
//!
//! A left module `M` over `A = KQ/I` is a vector space `M_v` per vertex and a
//! matrix `M_a: M_s -> M_t` (shape `dim M_t x dim M_s`) per arrow `a: s -> t`.
//! A path acts by composing its arrow matrices in traversal order.

mod homology;
mod iso;
mod map;
mod sub;

use std::sync::{Arc, OnceLock};

use rand::Rng;

pub use homology::{
    ext1_basis, ext1_dim, global_dimension, pushout, universal_extension, ExtClass, Syzygy,
};
pub use map::{hom_basis, hom_dim, ModuleMap};
pub use sub::Submodule;

use crate::error::{Error, Result};
use crate::linalg::{unit, FieldSpec, Matrix, Scalar};
use crate::presentation::{AlgebraBasis, Path};

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<AlgebraBasis>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
    basis_action: OnceLock<Arc<Vec<Matrix>>>,
    syzygy: OnceLock<Arc<Syzygy>>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.dims == other.dims
            && self.action == other.action
    }
}

impl Eq for Representation {}

pub(crate) fn same_algebra(a: &Arc<AlgebraBasis>, b: &Arc<AlgebraBasis>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<AlgebraBasis>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if action.len() != q.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow matrices for {} arrows",
                action.len(),
                q.arrow_count()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidArgument(format!(
                    "arrow `{}` matrix is over the wrong field",
                    a.name
                )));
            }
        }
        let rep = Representation::new_unchecked(algebra, dims, action);
        for r in rep.algebra.presentation().relations() {
            let (s, t) = (r.source().unwrap(), r.target().unwrap());
            let mut acc = Matrix::zeros(rep.field(), rep.dims[t], rep.dims[s]);
            for (c, p) in r.terms() {
                acc.add_scaled(c, &rep.path_matrix(p));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(r.display(rep.algebra.quiver())));
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<AlgebraBasis>,
        dims: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Self {
        Representation {
            algebra,
            dims,
            action,
            basis_action: OnceLock::new(),
            syzygy: OnceLock::new(),
        }
    }

    pub fn zero(algebra: Arc<AlgebraBasis>) -> Self {
        let n = algebra.vertex_count();
        Representation::from_dims_zero_action(algebra, vec![0; n])
    }

    fn from_dims_zero_action(algebra: Arc<AlgebraBasis>, dims: Vec<usize>) -> Self {
        let f = algebra.field();
        let action = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation::new_unchecked(algebra, dims, action)
    }

    /// The simple module `L(v)`.
    pub fn simple(algebra: Arc<AlgebraBasis>, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        Representation::from_dims_zero_action(algebra, dims)
    }

    /// The indecomposable projective `P(v) = A e_v`.
    ///
    /// The basis of `P(v)_w` is the basis paths `v -> w` in increasing index order.
    pub fn projective(algebra: Arc<AlgebraBasis>, v: usize) -> Self {
        let n = algebra.vertex_count();
        let f = algebra.field();
        let mut pos = vec![usize::MAX; algebra.dim()];
        let mut dims = vec![0; n];
        for &i in algebra.basis_from(v) {
            let w = algebra.path(i).target();
            pos[i] = dims[w];
            dims[w] += 1;
        }
        let q = algebra.quiver();
        let mut action: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        for &i in algebra.basis_from(v) {
            let p = algebra.path(i);
            for a in q.arrows_from(p.target()) {
                let ext = p.then_arrow(q, a).unwrap();
                for (j, c) in algebra.reduce_path(&ext) {
                    action[a].set(pos[j], pos[i], c);
                }
            }
        }
        Representation::new_unchecked(algebra, dims, action)
    }

    /// The indecomposable injective `I(v) = D(e_v A)`.
    pub fn injective(algebra: Arc<AlgebraBasis>, v: usize) -> Result<Self> {
        let op = algebra.opposite()?;
        Ok(Representation::projective(op, v).dual_over(algebra))
    }

    /// `A` as a left module over itself.
    pub fn regular(algebra: Arc<AlgebraBasis>) -> Self {
        let parts: Vec<_> = (0..algebra.vertex_count())
            .map(|v| Representation::projective(algebra.clone(), v))
            .collect();
        Representation::direct_sum(algebra, &parts.iter().collect::<Vec<_>>())
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Vertices with a nonzero space.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Composite action of a path, `M_{a_k} ... M_{a_1}`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source()]);
        for &a in p.arrows() {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Action of every basis path of the algebra, indexed like the basis.
    pub fn basis_action(&self) -> Arc<Vec<Matrix>> {
        self.basis_action
            .get_or_init(|| {
                let alg = &self.algebra;
                let q = alg.quiver();
                let mut out: Vec<Matrix> = Vec::with_capacity(alg.dim());
                for (i, p) in alg.paths().iter().enumerate() {
                    let m = match p.arrows().split_last() {
                        None => Matrix::identity(self.field(), self.dims[p.source()]),
                        Some((&last, prefix)) => {
                            let head = if prefix.is_empty() {
                                Path::trivial(p.source())
                            } else {
                                Path::from_arrows(q, prefix).unwrap()
                            };
                            // Basis paths are closed under prefixes, and come sorted by length.
                            match alg.index_of(&head) {
                                Some(j) if j < i => self.action[last].mul(&out[j]),
                                _ => self.path_matrix(p),
                            }
                        }
                    };
                    out.push(m);
                }
                Arc::new(out)
            })
            .clone()
    }

    /// `A x` for `x` in `M_v`, as spanning vectors grouped by vertex.
    pub fn orbit(&self, v: usize, x: &[Scalar]) -> Vec<Vec<Vec<Scalar>>> {
        let acts = self.basis_action();
        let mut out = vec![Vec::new(); self.dims.len()];
        for &i in self.algebra.basis_from(v) {
            let w = self.algebra.path(i).target();
            out[w].push(acts[i].mul_vec(x));
        }
        out
    }

    /// Direct sum, with summands stacked in order at every vertex.
    pub fn direct_sum(algebra: Arc<AlgebraBasis>, parts: &[&Representation]) -> Self {
        let n = algebra.vertex_count();
        let f = algebra.field();
        let mut dims = vec![0; n];
        for p in parts {
            for v in 0..n {
                dims[v] += p.dims[v];
            }
        }
        let action = (0..algebra.quiver().arrow_count())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.action[a]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Representation::new_unchecked(algebra, dims, action)
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Self {
        Representation::direct_sum(self.algebra.clone(), &vec![self; k])
    }

    /// `D M = Hom_K(M, K)` over the opposite algebra.
    pub fn dual(&self) -> Result<Self> {
        Ok(self.dual_over(self.algebra.opposite()?))
    }

    /// `D M` over a given copy of the opposite algebra.
    pub(crate) fn dual_over(&self, opposite: Arc<AlgebraBasis>) -> Self {
        let action = self.action.iter().map(Matrix::transpose).collect();
        Representation::new_unchecked(opposite, self.dims.clone(), action)
    }

    /// Offsets of each vertex in the total space `⊕ M_v`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        out.push(0);
        for d in &self.dims {
            acc += d;
            out.push(acc);
        }
        out
    }

    /// Composition factor multiplicities `[M : L(v)]`.
    pub fn dim_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// The submodule generated by one random vector at each vertex of `support`.
    pub fn random_submodule<R: Rng>(&self, rng: &mut R) -> Submodule {
        let f = self.field();
        let supp = self.support();
        if supp.is_empty() {
            return Submodule::zero(self);
        }
        let count = rng.gen_range(1..=supp.len().min(2));
        let mut gens = vec![Vec::new(); self.dims.len()];
        for _ in 0..count {
            let v = supp[rng.gen_range(0..supp.len())];
            let x: Vec<Scalar> = (0..self.dims[v]).map(|_| f.random(rng, 3)).collect();
            gens[v].push(x);
        }
        Submodule::generated(self, &gens)
    }

    /// A pseudo-random module: a quotient of one or two projectives, or a
    /// submodule of an injective, cut by a random submodule.
    pub fn random<R: Rng>(algebra: &Arc<AlgebraBasis>, rng: &mut R) -> Result<Self> {
        let n = algebra.vertex_count();
        let u = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 => {
                let p = Representation::projective(algebra.clone(), u);
                Ok(p.random_submodule(rng).quotient(&p).0)
            }
            1 => {
                let v = rng.gen_range(0..n);
                let p = Representation::direct_sum(
                    algebra.clone(),
                    &[
                        &Representation::projective(algebra.clone(), u),
                        &Representation::projective(algebra.clone(), v),
                    ],
                );
                Ok(p.random_submodule(rng).quotient(&p).0)
            }
            _ => {
                let q = Representation::injective(algebra.clone(), u)?;
                Ok(q.random_submodule(rng).to_representation(&q).0)
            }
        }
    }

    /// Standard basis vector `i` of `M_v`.
    pub fn unit(&self, v: usize, i: usize) -> Vec<Scalar> {
        unit(self.field(), self.dims[v], i)
    }

    /// Label-free summary for diagnostics.
    pub fn describe(&self) -> String {
        let q = self.algebra.quiver();
        let parts: Vec<String> = self
            .dims
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > 0)
            .map(|(v, d)| format!("{}:{}", q.vertices()[v], d))
            .collect();
        format!("[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators;

    fn brauer() -> Arc<AlgebraBasis> {
        generators::brauer_tree(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap()
    }

    #[test]
    fn projectives_satisfy_relations() {
        let a = brauer();
        for v in 0..3 {
            let p = Representation::projective(a.clone(), v);
            let again = Representation::new(a.clone(), p.dims.clone(), p.action.clone());
            assert!(again.is_ok());
        }
        assert_eq!(Representation::regular(a.clone()).dim(), a.dim());
    }

    #[test]
    fn injectives_and_duals() {
        let a = brauer();
        // Brauer tree algebras are symmetric, so P(v) and I(v) have equal dimension vectors.
        for v in 0..3 {
            let i = Representation::injective(a.clone(), v).unwrap();
            assert_eq!(i.dims(), Representation::projective(a.clone(), v).dims());
            assert!(Representation::new(a.clone(), i.dims.clone(), i.action.clone()).is_ok());
        }
    }

    #[test]
    fn relation_violation_detected() {
        let a = brauer();
        let f = a.field();
        let one = Matrix::identity(f, 1);
        let action = vec![
            one.clone(),
            Matrix::zeros(f, 1, 1),
            one.clone(),
            Matrix::zeros(f, 1, 1),
        ];
        let err = Representation::new(a, vec![1, 1, 1], action).unwrap_err();
        assert!(matches!(err, Error::RelationViolated(_)));
    }
}
