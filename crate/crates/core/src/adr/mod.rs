//! The ADR algebra `R_A = End_A(G)^op` of a finite-dimensional algebra `A`,
//! where `G` is the direct sum of the quotients `P_i / rad^j P_i` for
//! `1 <= j <= l_i`, `l_i` the Loewy length of `P_i`.
//!
//! Vertex `(i, j)` of `R_A` is the summand `G_(i,j) = P_i / rad^j P_i`.
//! Summands are ordered by `i`, then `j`, and labelled `"(i,j)"` with
//! one-based indices.

mod endo;

use std::sync::Arc;

use serde::Serialize;

pub use endo::EndoPresentation;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace};
use crate::modrep::{ModuleMap, Representation};
use crate::presentation::{
    compute_basis, generators::adr_label, AlgebraBasis, AlgebraPresentation, Quiver,
};

/// One indecomposable summand `P_i / rad^j P_i` of `G`.
#[derive(Clone, Debug)]
pub struct GSummand {
    /// Zero-based vertex `i` of `A`.
    pub vertex: usize,
    /// One-based radical layer `j`.
    pub layer: usize,
    pub module: Representation,
    /// The projection `P_i -> G_(i,j)`.
    pub projection: ModuleMap,
}

/// The summands of `G`, in vertex order.
pub fn build_g(a: &Arc<AlgebraBasis>) -> Vec<GSummand> {
    let mut out = Vec::new();
    for i in 0..a.vertex_count() {
        let p = Representation::projective(a.clone(), i);
        let series = p.radical_series();
        for (j, sub) in series.iter().enumerate().skip(1) {
            let (module, projection) = sub.quotient(&p);
            out.push(GSummand {
                vertex: i,
                layer: j,
                module,
                projection,
            });
        }
    }
    out
}

/// The ADR algebra of `A` together with the data realizing it.
#[derive(Debug)]
pub struct AdrData {
    algebra: Arc<AlgebraBasis>,
    summands: Vec<GSummand>,
    endo: EndoPresentation,
}

/// How the corner `ξ R_A ξ`, `ξ = Σ_i e_(i,l_i)`, compares with `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerReport {
    pub dim: usize,
    pub algebra_dim: usize,
    /// Arrow counts `(i, k, count)` of the corner's quiver, indexed by vertices of `A`.
    pub arrows: Vec<(usize, usize, usize)>,
    /// Whether dimension and quiver agree with `A` under `(i, l_i) -> i`.
    pub matches: bool,
}

/// The outcome of matching `R_A` against an expected presentation.
#[derive(Clone, Debug)]
pub struct Calibration {
    /// Scaling of each expected arrow, in the expected quiver's arrow order.
    pub scalings: Vec<Scalar>,
    pub expected_dim: usize,
    pub dim: usize,
}

impl Calibration {
    /// The arrows generate `R_A` and the relations hold, so equal dimensions
    /// make the induced surjection an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.expected_dim == self.dim
    }
}

impl AdrData {
    /// Builds `G` and presents `End_A(G)^op` by quiver and relations.
    pub fn new(a: Arc<AlgebraBasis>) -> Result<Self> {
        let summands = build_g(&a);
        let labels = summands
            .iter()
            .map(|s| adr_label(s.vertex + 1, s.layer))
            .collect();
        let endo =
            EndoPresentation::new(labels, summands.iter().map(|s| s.module.clone()).collect())?;
        Ok(AdrData {
            algebra: a,
            summands,
            endo,
        })
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        &self.algebra
    }

    pub fn summands(&self) -> &[GSummand] {
        &self.summands
    }

    pub fn endo(&self) -> &EndoPresentation {
        &self.endo
    }

    /// The presented ADR algebra.
    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        self.endo.basis()
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        self.endo.presentation()
    }

    pub fn dim(&self) -> usize {
        self.endo.dim()
    }

    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.summands
            .iter()
            .map(|s| (s.vertex + 1, s.layer))
            .collect()
    }

    /// Loewy length `l_i` of each `P_i`.
    pub fn loewy_lengths(&self) -> Vec<usize> {
        let mut out = vec![0; self.algebra.vertex_count()];
        for s in &self.summands {
            out[s.vertex] = out[s.vertex].max(s.layer);
        }
        out
    }

    /// Vertex of `R_A` for the one-based label `(i, j)`.
    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.summands
            .iter()
            .position(|s| s.vertex + 1 == i && s.layer == j)
    }

    /// `G` itself.
    pub fn g_module(&self) -> Representation {
        let parts: Vec<&Representation> = self.summands.iter().map(|s| &s.module).collect();
        Representation::direct_sum(self.algebra.clone(), &parts)
    }

    /// `Hom_A(G, M)` as an `R_A`-module.
    pub fn apply(&self, m: &Representation) -> Result<Representation> {
        self.endo.apply(m)
    }

    /// The vertices `(i, l_i)`, whose summands are the projectives `P_i`.
    pub fn xi_vertices(&self) -> Vec<usize> {
        let ll = self.loewy_lengths();
        (0..self.summands.len())
            .filter(|&u| self.summands[u].layer == ll[self.summands[u].vertex])
            .collect()
    }

    /// Compares `ξ R_A ξ` with `A`.
    pub fn corner(&self) -> Result<CornerReport> {
        let xi = self.xi_vertices();
        let f = self.algebra.field();
        let endo = &self.endo;
        let dim = xi
            .iter()
            .flat_map(|&u| xi.iter().map(move |&v| endo.hom_space(u, v).len()))
            .sum();
        let radical = |u: usize, v: usize| -> Result<Vec<ModuleMap>> {
            if u != v {
                return Ok(endo.hom_space(u, v).to_vec());
            }
            let g = &endo.summands()[u];
            let mut ends = vec![ModuleMap::identity(g)];
            ends.extend(endo.hom_space(u, u).iter().cloned());
            endo::radical_of_endomorphisms(g, &ends)
        };
        let mut rad = vec![vec![Vec::new(); xi.len()]; xi.len()];
        for (x, &u) in xi.iter().enumerate() {
            for (y, &v) in xi.iter().enumerate() {
                rad[x][y] = radical(u, v)?;
            }
        }
        let mut arrows = Vec::new();
        let mut matches = dim == self.algebra.dim();
        let aq = self.algebra.quiver();
        for x in 0..xi.len() {
            for y in 0..xi.len() {
                let sq: Vec<_> = (0..xi.len())
                    .flat_map(|w| {
                        let rad = &rad;
                        rad[x][w].iter().flat_map(move |phi| {
                            rad[w][y].iter().map(move |psi| phi.compose(psi).flatten())
                        })
                    })
                    .collect();
                let sq_dim = match sq.first() {
                    Some(v) => Subspace::spanned_by(f, v.len(), sq.clone()).dim(),
                    None => 0,
                };
                let count = rad[x][y].len() - sq_dim;
                let (i, k) = (self.summands[xi[x]].vertex, self.summands[xi[y]].vertex);
                if count > 0 {
                    arrows.push((i, k, count));
                }
                if count != aq.arrows_between(i, k) {
                    matches = false;
                }
            }
        }
        Ok(CornerReport {
            dim,
            algebra_dim: self.algebra.dim(),
            arrows,
            matches,
        })
    }

    /// Matches `R_A` against `expected`, which must use the same vertex labels.
    ///
    /// On success the relations of `expected` hold for suitably scaled arrows of
    /// `R_A`; together with equal dimensions this is an isomorphism.
    pub fn calibrate(&self, expected: &AlgebraPresentation) -> Result<Calibration> {
        let scalings = self.endo.calibrate(expected)?;
        let expected_dim = compute_basis(expected)?.dim();
        Ok(Calibration {
            scalings,
            expected_dim,
            dim: self.dim(),
        })
    }

    /// The quiver of `R_A`.
    pub fn quiver(&self) -> &Quiver {
        self.basis().quiver()
    }
}

/// `R_A` for the algebra presented by `p`.
pub fn adr_algebra(p: &AlgebraPresentation) -> Result<AdrData> {
    let a = Arc::new(compute_basis(p)?);
    if a.dim() == 0 {
        return Err(Error::InvalidArgument(
            "the zero algebra has no ADR algebra".into(),
        ));
    }
    AdrData::new(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn linear_quiver_adr() {
        // A_2: P_1 = L_1, P_2 = 2 > 1. G = L_1 ⊕ L_2 ⊕ P_2.
        let adr = adr_algebra(&generators::linear(2, FieldSpec::Rational).unwrap()).unwrap();
        assert_eq!(adr.loewy_lengths(), vec![1, 2]);
        assert_eq!(adr.labels(), vec![(1, 1), (2, 1), (2, 2)]);
        // End: three identities, L_1 -> P_2 and P_2 -> L_2.
        assert_eq!(adr.dim(), 5);
        assert_eq!(adr.quiver().arrow_count(), 2);
        assert!(adr.corner().unwrap().matches);
    }

    #[test]
    fn brauer_adr_matches_expected_presentation() {
        let f = FieldSpec::Rational;
        let adr = adr_algebra(&generators::brauer_tree(3, f).unwrap()).unwrap();
        assert_eq!(adr.dim(), 47);
        assert_eq!(adr.quiver().arrow_count(), 14);
        let cal = adr
            .calibrate(&generators::brauer_adr_quiver(3, f).unwrap())
            .unwrap();
        assert!(cal.is_isomorphism());
        assert!(cal.scalings.iter().all(|s| !s.is_zero()));
        let corner = adr.corner().unwrap();
        assert_eq!(corner.dim, 10);
        assert!(corner.matches);
    }

    #[test]
    fn hom_g_of_projective_is_projective() {
        let f = FieldSpec::Rational;
        let adr = adr_algebra(&generators::brauer_tree(3, f).unwrap()).unwrap();
        let p = Representation::projective(adr.algebra().clone(), 1);
        let image = adr.apply(&p).unwrap();
        let u = adr.index_of(2, 3).unwrap();
        let pr = Representation::projective(adr.basis().clone(), u);
        assert!(image.is_isomorphic(&pr).unwrap());
    }
}
