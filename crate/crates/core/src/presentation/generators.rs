//! Ready-made presentations used by examples, tests and the CLI.

use super::{AlgebraPresentation, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn path(q: &Quiver, names: &[&str]) -> Path {
    Path::from_names(q, names).expect("generator paths are well formed")
}

/// Linearly oriented `A_n` with arrows `k+1 -> k` and no relations.
pub fn linear(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("linear quiver needs n >= 1".into()));
    }
    let arrows = (1..n).map(|k| (format!("a{k}"), k, k - 1)).collect();
    let q = Quiver::checked(labels(n), arrows)?;
    AlgebraPresentation::new(field, q, Vec::new())
}

/// The path algebra of `2 <- 1 -> 3`.
pub fn star(field: FieldSpec) -> Result<AlgebraPresentation> {
    let q = Quiver::checked(labels(3), vec![("a".into(), 0, 1), ("b".into(), 0, 2)])?;
    AlgebraPresentation::new(field, q, Vec::new())
}

/// `K[x]/(x^k)` for `k >= 2`.
pub fn loop_power(k: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "loop relation needs exponent >= 2".into(),
        ));
    }
    let q = Quiver::checked(labels(1), vec![("x".into(), 0, 0)])?;
    let r = Relation::monomial(field, Path::from_arrows(&q, &vec![0; k])?);
    AlgebraPresentation::new(field, q, vec![r])
}

/// `K[x]`, which is infinite dimensional.
pub fn free_loop(field: FieldSpec) -> AlgebraPresentation {
    let q = Quiver::checked(labels(1), vec![("x".into(), 0, 0)]).unwrap();
    AlgebraPresentation::new(field, q, Vec::new()).unwrap()
}

/// The Brauer tree algebra of a line with `n` edges and no exceptional vertex.
///
/// Vertices `1..n`, arrows `alpha{i}: i -> i+1` and `beta{i}: i+1 -> i`,
/// relations `α_{i+1} α_i = 0`, `β_i β_{i+1} = 0` and `α_i β_i = β_{i+1} α_{i+1}`
/// for `1 <= i <= n-2`.
pub fn brauer_tree(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "Brauer tree algebra needs n >= 3".into(),
        ));
    }
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push((format!("alpha{i}"), i - 1, i));
        arrows.push((format!("beta{i}"), i, i - 1));
    }
    let q = Quiver::checked(labels(n), arrows)?;
    let mut rels = Vec::new();
    for i in 1..n - 1 {
        let (a, a1) = (format!("alpha{i}"), format!("alpha{}", i + 1));
        let (b, b1) = (format!("beta{i}"), format!("beta{}", i + 1));
        rels.push(Relation::monomial(field, path(&q, &[&a, &a1])));
        rels.push(Relation::monomial(field, path(&q, &[&b1, &b])));
        rels.push(Relation::binomial(
            field,
            path(&q, &[&b, &a]),
            path(&q, &[&a1, &b1]),
        ));
    }
    AlgebraPresentation::new(field, q, rels)
}

/// Label of the vertex `(i, j)` of the ADR quiver.
pub fn adr_label(i: usize, j: usize) -> String {
    format!("({i},{j})")
}

/// The expected ADR algebra of [`brauer_tree`] as a quiver with relations.
///
/// Vertices `(i,j)` for `1 <= i <= n`, `1 <= j <= 3`; arrows `t{i}_{j}` from
/// `(i,j-1)` to `(i,j)`, `alpha{i}_1: (i,2) -> (i+1,1)`,
/// `beta{i}_1: (i+1,2) -> (i,1)`, `alpha{i}_2: (i,3) -> (i+1,2)` and
/// `beta{i}_2: (i+1,3) -> (i,2)`.
pub fn brauer_adr_quiver(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "Brauer tree algebra needs n >= 3".into(),
        ));
    }
    let v = |i: usize, j: usize| 3 * (i - 1) + (j - 1);
    let vertices = (1..=n)
        .flat_map(|i| (1..=3).map(move |j| adr_label(i, j)))
        .collect();
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in 2..=3 {
            arrows.push((format!("t{i}_{j}"), v(i, j - 1), v(i, j)));
        }
    }
    for i in 1..n {
        arrows.push((format!("alpha{i}_1"), v(i, 2), v(i + 1, 1)));
        arrows.push((format!("beta{i}_1"), v(i + 1, 2), v(i, 1)));
        arrows.push((format!("alpha{i}_2"), v(i, 3), v(i + 1, 2)));
        arrows.push((format!("beta{i}_2"), v(i + 1, 3), v(i, 2)));
    }
    let q = Quiver::checked(vertices, arrows)?;
    let t = |i: usize, j: usize| format!("t{i}_{j}");
    let al = |i: usize, k: usize| format!("alpha{i}_{k}");
    let be = |i: usize, k: usize| format!("beta{i}_{k}");
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(Relation::monomial(field, path(&q, &[&t(i, 2), &al(i, 1)])));
        rels.push(Relation::monomial(
            field,
            path(&q, &[&t(i + 1, 2), &be(i, 1)]),
        ));
        rels.push(Relation::binomial(
            field,
            path(&q, &[&t(i, 3), &al(i, 2)]),
            path(&q, &[&al(i, 1), &t(i + 1, 2)]),
        ));
        rels.push(Relation::binomial(
            field,
            path(&q, &[&t(i + 1, 3), &be(i, 2)]),
            path(&q, &[&be(i, 1), &t(i, 2)]),
        ));
    }
    for i in 1..n - 1 {
        rels.push(Relation::monomial(
            field,
            path(&q, &[&al(i, 2), &al(i + 1, 1)]),
        ));
        rels.push(Relation::monomial(
            field,
            path(&q, &[&be(i + 1, 2), &be(i, 1)]),
        ));
        rels.push(Relation::binomial(
            field,
            path(&q, &[&be(i, 2), &al(i, 1)]),
            path(&q, &[&al(i + 1, 2), &be(i + 1, 1)]),
        ));
    }
    AlgebraPresentation::new(field, q, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::compute_basis;

    #[test]
    fn brauer_dimensions() {
        for n in 3..=5 {
            let a = compute_basis(&brauer_tree(n, FieldSpec::Rational).unwrap()).unwrap();
            assert_eq!(a.dim(), 4 * n - 2);
            let r = compute_basis(&brauer_adr_quiver(n, FieldSpec::Rational).unwrap()).unwrap();
            assert_eq!(r.quiver().vertex_count(), 3 * n);
            assert_eq!(r.quiver().arrow_count(), 6 * n - 4);
            assert_eq!(r.dim(), 19 * n - 10);
        }
        assert!(brauer_tree(2, FieldSpec::Rational).is_err());
    }
}
