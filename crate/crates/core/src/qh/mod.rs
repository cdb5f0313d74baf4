//! Quasihereditary structure: label posets, standard and costandard modules,
//! filtrations, the (A1)/(A2) axioms, tilting modules and Ringel duals.
//!
//! Labels are the vertices of the algebra, so `L_i`, `P_i` and `Q_i` are the
//! simple, projective and injective modules at vertex `i`.

mod checks;
mod filtration;
mod poset;
mod ringel;
mod tilting;
mod verify;

use std::sync::{Arc, OnceLock};

use serde::Serialize;

pub use checks::{LabelVerdict, QhReport, UsqLabelVerdict, UsqRelabel, UsqReport};
pub use filtration::{FiltrationReport, SubmoduleChain};
pub use poset::LabelPoset;
pub use ringel::RingelDual;
pub use tilting::TiltingChain;
pub use verify::{verify_structure_theorems, CheckItem, VerifyOptions, VerifyReport};

use crate::adr::AdrData;
use crate::error::{Error, Result};
use crate::modrep::{hom_dim, Representation};
use crate::presentation::AlgebraBasis;

/// How the adaptedness of the poset is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Adaptedness {
    /// The ADR order on an ADR algebra, adapted by a general argument.
    ProvedAdr,
    /// Standard modules agree under sampled linear extensions.
    Sampled,
    /// Not checked.
    Assumed,
}

/// An algebra with a label poset, caching the modules attached to each label.
#[derive(Debug)]
pub struct QhContext {
    algebra: Arc<AlgebraBasis>,
    poset: LabelPoset,
    adaptedness: Adaptedness,
    projective: Vec<OnceLock<Representation>>,
    injective: Vec<OnceLock<Representation>>,
    standard: Vec<OnceLock<Representation>>,
    costandard: Vec<OnceLock<Representation>>,
    tilting: Vec<OnceLock<Representation>>,
    opposite: OnceLock<Arc<QhContext>>,
}

fn cells(n: usize) -> Vec<OnceLock<Representation>> {
    (0..n).map(|_| OnceLock::new()).collect()
}

/// Returns the cached value, computing it on first use.
fn cached(
    cell: &OnceLock<Representation>,
    compute: impl FnOnce() -> Result<Representation>,
) -> Result<&Representation> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = compute()?;
    Ok(cell.get_or_init(|| v))
}

impl QhContext {
    pub fn new(algebra: Arc<AlgebraBasis>, poset: LabelPoset) -> Result<Self> {
        let n = algebra.vertex_count();
        if poset.len() != n {
            return Err(Error::InvalidArgument(format!(
                "poset has {} labels but the algebra has {n} vertices",
                poset.len()
            )));
        }
        Ok(QhContext {
            algebra,
            poset,
            adaptedness: Adaptedness::Assumed,
            projective: cells(n),
            injective: cells(n),
            standard: cells(n),
            costandard: cells(n),
            tilting: cells(n),
            opposite: OnceLock::new(),
        })
    }

    /// `R_A` with the order `(i,j) ◁ (k,l)` iff `j > l`.
    pub fn for_adr(adr: &AdrData) -> Result<Self> {
        let poset = LabelPoset::adr(&adr.labels());
        let mut ctx = QhContext::new(adr.basis().clone(), poset)?;
        ctx.adaptedness = Adaptedness::ProvedAdr;
        Ok(ctx)
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        &self.algebra
    }

    pub fn poset(&self) -> &LabelPoset {
        &self.poset
    }

    pub fn adaptedness(&self) -> Adaptedness {
        self.adaptedness
    }

    pub fn label_count(&self) -> usize {
        self.poset.len()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn simple(&self, i: usize) -> Representation {
        Representation::simple(self.algebra.clone(), i)
    }

    pub fn projective(&self, i: usize) -> &Representation {
        self.projective[i].get_or_init(|| Representation::projective(self.algebra.clone(), i))
    }

    pub fn injective(&self, i: usize) -> Result<&Representation> {
        cached(&self.injective[i], || {
            Representation::injective(self.algebra.clone(), i)
        })
    }

    /// `Δ(i) = P_i / Tr(⊕_{j ⋢ i} P_j, P_i)`.
    pub fn standard(&self, i: usize) -> &Representation {
        self.standard[i].get_or_init(|| standard_for(&self.poset, self.projective(i), i))
    }

    /// `∇(i)`: the largest submodule of `Q_i` with composition factors `⊑ i`.
    pub fn costandard(&self, i: usize) -> Result<&Representation> {
        cached(&self.costandard[i], || {
            let q = self.injective(i)?;
            let allowed: Vec<bool> = (0..self.label_count())
                .map(|j| self.poset.leq(j, i))
                .collect();
            Ok(q.largest_submodule_supported_in(&allowed)
                .to_representation(q)
                .0)
        })
    }

    /// The same poset over the opposite algebra; `D` exchanges its `Δ` with our `∇`.
    pub fn opposite(&self) -> Result<&QhContext> {
        if let Some(o) = self.opposite.get() {
            return Ok(o);
        }
        let mut o = QhContext::new(self.algebra.opposite()?, self.poset.clone())?;
        o.adaptedness = self.adaptedness;
        Ok(self.opposite.get_or_init(|| Arc::new(o)))
    }

    /// `Δ(i)` computed as the dual of the largest submodule of `D P_i` over the
    /// opposite algebra with factors `⊑ i`; an independent route to [`Self::standard`].
    pub fn standard_by_duality(&self, i: usize) -> Result<Representation> {
        let dp = self.projective(i).dual()?;
        let allowed: Vec<bool> = (0..self.label_count())
            .map(|j| self.poset.leq(j, i))
            .collect();
        let (sub, _) = dp
            .largest_submodule_supported_in(&allowed)
            .to_representation(&dp);
        Ok(sub.dual_over(self.algebra.clone()))
    }

    /// `(M : Δ(i)) = dim Hom(M, ∇(i)) / dim End(∇(i))`, for `M ∈ F(Δ)`.
    pub fn reciprocity_multiplicity(&self, m: &Representation, i: usize) -> Result<usize> {
        let report = self.delta_filtration(m)?;
        if !report.filtered {
            return Err(Error::NotFiltered(format!(
                "module {} has no Δ-filtration",
                m.describe()
            )));
        }
        let nabla = self.costandard(i)?;
        self.hom_ratio(hom_dim(m, nabla)?, hom_dim(nabla, nabla)?, i)
    }

    /// `(M : ∇(i)) = dim Hom(Δ(i), M) / dim End(Δ(i))`, for `M ∈ F(∇)`.
    pub fn costandard_reciprocity_multiplicity(
        &self,
        m: &Representation,
        i: usize,
    ) -> Result<usize> {
        let report = self.nabla_filtration(m)?;
        if !report.filtered {
            return Err(Error::NotFiltered(format!(
                "module {} has no ∇-filtration",
                m.describe()
            )));
        }
        let delta = self.standard(i);
        self.hom_ratio(hom_dim(delta, m)?, hom_dim(delta, delta)?, i)
    }

    fn hom_ratio(&self, h: usize, e: usize, i: usize) -> Result<usize> {
        if e == 0 || !h.is_multiple_of(e) {
            return Err(Error::Internal(format!(
                "dim Hom = {h} is not a multiple of dim End = {e} at label {}",
                self.label(i)
            )));
        }
        Ok(h / e)
    }
}

/// `P_i` modulo the trace of the projectives at labels not below `i`.
pub(crate) fn standard_for(poset: &LabelPoset, p: &Representation, i: usize) -> Representation {
    let outside: Vec<usize> = (0..poset.len()).filter(|&j| !poset.leq(j, i)).collect();
    p.trace_of_projectives(&outside).quotient(p).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn linear_quiver_standard_modules_are_projective() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap();
        for i in 0..3 {
            assert_eq!(ctx.standard(i).dims(), ctx.projective(i).dims());
            assert_eq!(
                ctx.standard_by_duality(i).unwrap().dims(),
                ctx.standard(i).dims()
            );
            assert_eq!(ctx.reciprocity_multiplicity(ctx.standard(i), i).unwrap(), 1);
        }
        // ∇(1) = L_1 at the minimal label.
        assert_eq!(ctx.costandard(0).unwrap().dims(), &[1, 0, 0]);
    }
}
