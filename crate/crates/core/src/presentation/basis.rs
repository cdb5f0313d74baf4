//! Normal-form path bases by degreewise linear algebra.
//!
//! For `D = 0, 1, ...` the quotient `Q_D = KQ / (I + J^{D+1})` is the span of
//! paths of length at most `D` modulo the truncations of all products
//! `w * r * u` of a relation `r` with paths. The dimensions of `Q_D` increase
//! until `J^D` lies in `I`; at that point `Q_D = KQ/I`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use super::{AlgebraPresentation, Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, SparseEchelon};

/// Upper limit on the number of enumerated short paths.
const PATH_BUDGET: usize = 2_000_000;

type Key = (usize, Vec<usize>);

/// The algebra `A = KQ/I` with a basis of normal-form paths.
///
/// Basis paths are ordered by length, then source vertex, then arrow
/// sequence, so the idempotent `e_v` has index `v`. The product `x * y`
/// applies `y` first: on paths it is "`y` followed by `x`".
#[derive(Debug)]
pub struct AlgebraBasis {
    presentation: AlgebraPresentation,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    rewrite: HashMap<Path, Vec<(usize, Scalar)>>,
    depth: usize,
    from: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    opposite: OnceLock<Arc<AlgebraBasis>>,
}

impl PartialEq for AlgebraBasis {
    fn eq(&self, other: &Self) -> bool {
        self.presentation == other.presentation
    }
}

impl Eq for AlgebraBasis {}

pub fn compute_basis(p: &AlgebraPresentation) -> Result<AlgebraBasis> {
    let bound = p.max_path_length();
    let mut previous = None;
    for d in 0..=bound + 1 {
        let level = Truncation::build(p, d)?;
        let dim = level.normal.len();
        if previous == Some(dim) {
            return Ok(level.into_basis(p));
        }
        previous = Some(dim);
    }
    Err(Error::PossiblyInfiniteDimensional(bound))
}

struct Truncation {
    depth: usize,
    blocks: HashMap<(usize, usize), SparseEchelon<Key>>,
    normal: Vec<Path>,
}

impl Truncation {
    fn build(p: &AlgebraPresentation, depth: usize) -> Result<Self> {
        let q = p.quiver();
        let field = p.field();
        let short = enumerate_paths(q, depth.saturating_sub(2))?;
        let n = q.vertex_count();
        let mut starting: Vec<Vec<&Path>> = vec![Vec::new(); n];
        let mut ending: Vec<Vec<&Path>> = vec![Vec::new(); n];
        for path in &short {
            starting[path.source()].push(path);
            ending[path.target()].push(path);
        }
        let mut blocks: HashMap<(usize, usize), SparseEchelon<Key>> = HashMap::new();
        for r in p.relations() {
            let m = r.min_len();
            if m > depth {
                continue;
            }
            let (s, t) = (r.source().unwrap(), r.target().unwrap());
            for w in ending[s].iter().filter(|w| w.len() + m <= depth) {
                for u in starting[t]
                    .iter()
                    .filter(|u| w.len() + u.len() + m <= depth)
                {
                    let mut v: BTreeMap<Key, Scalar> = BTreeMap::new();
                    for (c, path) in r.terms() {
                        let total = w.len() + path.len() + u.len();
                        if total > depth {
                            continue;
                        }
                        let mut arrows = Vec::with_capacity(total);
                        arrows.extend_from_slice(w.arrows());
                        arrows.extend_from_slice(path.arrows());
                        arrows.extend_from_slice(u.arrows());
                        let e = v.entry((total, arrows)).or_insert_with(|| field.zero());
                        *e = e.add(c);
                    }
                    blocks
                        .entry((w.source(), u.target()))
                        .or_insert_with(|| SparseEchelon::new(field))
                        .insert(v);
                }
            }
        }
        // Non-pivot paths are closed under subpaths, so they grow arrow by arrow.
        let mut normal: Vec<Path> = (0..n).map(Path::trivial).collect();
        let mut frontier = normal.clone();
        for _ in 1..=depth {
            let mut next = Vec::new();
            for path in &frontier {
                for a in q.arrows_from(path.target()) {
                    let np = path.then_arrow(q, a).unwrap();
                    let pivot = blocks
                        .get(&(np.source(), np.target()))
                        .is_some_and(|e| e.is_pivot(&np.key()));
                    if !pivot {
                        next.push(np);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            normal.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(Truncation {
            depth,
            blocks,
            normal,
        })
    }

    fn into_basis(self, p: &AlgebraPresentation) -> AlgebraBasis {
        let mut paths = self.normal;
        paths.sort_by(|a, b| {
            (a.len(), a.source(), a.arrows()).cmp(&(b.len(), b.source(), b.arrows()))
        });
        let index: HashMap<Path, usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut rewrite = HashMap::new();
        for ((s, t), ech) in self.blocks {
            for (pivot, row) in ech.into_reduced_rows() {
                let expr = row
                    .iter()
                    .filter(|(k, _)| **k != pivot)
                    .map(|((_, arrows), c)| {
                        let path = Path::from_parts(s, t, arrows.clone());
                        (index[&path], c.neg())
                    })
                    .collect::<Vec<_>>();
                let mut expr = expr;
                expr.sort_by_key(|(i, _)| *i);
                rewrite.insert(Path::from_parts(s, t, pivot.1), expr);
            }
        }
        let n = p.quiver().vertex_count();
        let mut from = vec![Vec::new(); n];
        let mut into = vec![Vec::new(); n];
        for (i, path) in paths.iter().enumerate() {
            from[path.source()].push(i);
            into[path.target()].push(i);
        }
        AlgebraBasis {
            presentation: p.clone(),
            paths,
            index,
            rewrite,
            depth: self.depth,
            from,
            into,
            opposite: OnceLock::new(),
        }
    }
}

/// All paths of length at most `max_len`, trivial ones included.
fn enumerate_paths(q: &Quiver, max_len: usize) -> Result<Vec<Path>> {
    let mut all: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.arrows_from(p.target()) {
                next.push(p.then_arrow(q, a).unwrap());
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        if all.len() > PATH_BUDGET {
            return Err(Error::InvalidArgument(format!(
                "more than {PATH_BUDGET} paths of length at most {max_len}; the presentation is too large"
            )));
        }
        frontier = next;
    }
    Ok(all)
}

impl AlgebraBasis {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field()
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver().vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Every path of length at least this vanishes; it is the Loewy length of `A`.
    pub fn loewy_length(&self) -> usize {
        self.depth
    }

    /// Basis indices of paths starting at `v`, i.e. a basis of `A e_v`.
    pub fn basis_from(&self, v: usize) -> &[usize] {
        &self.from[v]
    }

    /// Basis indices of paths ending at `v`, i.e. a basis of `e_v A`.
    pub fn basis_into(&self, v: usize) -> &[usize] {
        &self.into[v]
    }

    /// Basis indices of paths `u -> v`.
    pub fn basis_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.from[u]
            .iter()
            .copied()
            .filter(|&i| self.paths[i].target() == v)
            .collect()
    }

    /// Image of a path in `A`, as a sparse combination of basis indices.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Scalar)> {
        if p.len() >= self.depth {
            return Vec::new();
        }
        if let Some(&i) = self.index.get(p) {
            return vec![(i, self.field().one())];
        }
        if let Some(expr) = self.rewrite.get(p) {
            return expr.clone();
        }
        // Split off the last arrow; the prefix is shorter.
        let q = self.quiver();
        let (&last, prefix) = p
            .arrows()
            .split_last()
            .expect("trivial paths are basis elements");
        let head = if prefix.is_empty() {
            Path::trivial(p.source())
        } else {
            Path::from_arrows(q, prefix).expect("subpath of a path")
        };
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in self.reduce_path(&head) {
            let ext = self.paths[i].then_arrow(q, last).unwrap();
            for (j, d) in self.reduce_path(&ext) {
                let e = acc.entry(j).or_insert_with(|| self.field().zero());
                e.add_mul_assign(&c, &d);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Image of a linear combination of paths as a dense coordinate vector.
    pub fn normal_form(&self, expr: &[(Scalar, Path)]) -> Result<Vec<Scalar>> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (c, p) in expr {
            if !p.is_trivial()
                && Path::from_arrows(self.quiver(), p.arrows()).ok().as_ref() != Some(p)
            {
                return Err(Error::InvalidArgument("malformed path".into()));
            }
            if p.source() >= self.vertex_count() {
                return Err(Error::InvalidArgument("vertex out of range".into()));
            }
            for (i, d) in self.reduce_path(p) {
                out[i].add_mul_assign(c, &d);
            }
        }
        Ok(out)
    }

    /// `b_i * b_j`: the path `b_j` followed by `b_i`, reduced.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        match self.paths[j].then(&self.paths[i]) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// Product of two dense elements.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.mul(b);
                for (k, c) in self.product(i, j) {
                    out[k].add_mul_assign(&ab, &c);
                }
            }
        }
        out
    }

    /// Basis of the opposite algebra, computed once.
    pub fn opposite(&self) -> Result<Arc<AlgebraBasis>> {
        if let Some(op) = self.opposite.get() {
            return Ok(op.clone());
        }
        let op = Arc::new(compute_basis(&self.presentation.opposite())?);
        let _ = self.opposite.set(op);
        Ok(self.opposite.get().unwrap().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators;

    #[test]
    fn linear_quiver_dimension() {
        let b = compute_basis(&generators::linear(3, FieldSpec::Rational).unwrap()).unwrap();
        assert_eq!(b.dim(), 6);
        assert_eq!(b.loewy_length(), 3);
    }

    #[test]
    fn loop_square() {
        let b = compute_basis(&generators::loop_power(2, FieldSpec::Rational).unwrap()).unwrap();
        assert_eq!(b.dim(), 2);
        let x = b.index_of(&Path::arrow(b.quiver(), 0)).unwrap();
        assert!(b.product(x, x).is_empty());
    }

    #[test]
    fn brauer_relations_hold() {
        let f = FieldSpec::Rational;
        let b = compute_basis(&generators::brauer_tree(3, f).unwrap()).unwrap();
        assert_eq!(b.dim(), 10);
        let q = b.quiver();
        let p = |names: &[&str]| Path::from_names(q, names).unwrap();
        assert!(b.reduce_path(&p(&["alpha1", "alpha2"])).is_empty());
        assert_eq!(
            b.reduce_path(&p(&["beta1", "alpha1"])),
            b.reduce_path(&p(&["alpha2", "beta2"]))
        );
        assert_eq!(b.reduce_path(&Path::trivial(1)), vec![(1, f.one())]);
    }

    #[test]
    fn unbounded_algebra_is_reported() {
        let p = generators::free_loop(FieldSpec::Rational).with_max_path_length(5);
        assert!(matches!(
            compute_basis(&p),
            Err(Error::PossiblyInfiniteDimensional(5))
        ));
    }
}
