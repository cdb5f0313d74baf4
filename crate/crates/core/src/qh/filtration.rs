use serde::Serialize;

use super::QhContext;
use crate::error::Result;
use crate::linalg::Subspace;
use crate::modrep::{ModuleMap, Representation, Submodule};

/// A chain `0 = M_0 ⊆ M_1 ⊆ ... ⊆ M_k = M` of submodules.
#[derive(Clone, Debug)]
pub struct SubmoduleChain {
    pub module: Representation,
    pub steps: Vec<Submodule>,
}

impl SubmoduleChain {
    pub fn new(module: Representation, steps: Vec<Submodule>) -> Self {
        SubmoduleChain { module, steps }
    }

    /// Whether the steps are nested submodules from zero up to the module.
    pub fn is_valid(&self) -> bool {
        let m = &self.module;
        self.steps.first().is_some_and(Submodule::is_zero)
            && self.steps.last().is_some_and(|s| s.dim() == m.dim())
            && self.steps.iter().all(|s| s.is_submodule_of(m))
            && self.steps.windows(2).all(|w| w[1].contains(&w[0]))
    }

    /// The quotients `M_k / M_{k-1}`, bottom first.
    pub fn quotients(&self) -> Vec<Representation> {
        self.steps
            .windows(2)
            .map(|w| w[0].subquotient(&w[1], &self.module))
            .collect()
    }
}

/// The outcome of a Δ- or ∇-filtration search.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub filtered: bool,
    /// `(label, multiplicity)` per layer, bottom layer first.
    pub factors: Vec<(usize, usize)>,
    /// Why the search stopped, when it failed.
    pub failure: Option<String>,
    #[serde(skip)]
    pub chain: Option<SubmoduleChain>,
}

impl FiltrationReport {
    /// `(M : Δ(i))` or `(M : ∇(i))` from the certified chain.
    pub fn multiplicity(&self, label: usize) -> usize {
        self.factors
            .iter()
            .filter(|(l, _)| *l == label)
            .map(|(_, m)| m)
            .sum()
    }

    fn refuted(factors: Vec<(usize, usize)>, why: String) -> Self {
        FiltrationReport {
            filtered: false,
            factors,
            failure: Some(why),
            chain: None,
        }
    }
}

impl QhContext {
    /// Searches for a Δ-filtration of `M` by peeling off traces of projectives.
    ///
    /// At each step `i` is the first label maximal in the composition support of
    /// the current quotient `N`, and `U = Tr(P_i, N)` must be `Δ(i)^m`. The
    /// search succeeds on every `M ∈ F(Δ)`, and each accepted layer is certified.
    pub fn delta_filtration(&self, m: &Representation) -> Result<FiltrationReport> {
        let mut cur = m.clone();
        let mut proj = ModuleMap::identity(m);
        let mut steps = vec![Submodule::zero(m)];
        let mut factors = Vec::new();
        let poset = self.poset();
        while !cur.is_zero() {
            let support = cur.support();
            let i = poset.maximal_in(&support)[0];
            let delta = self.standard(i);
            let u = cur.trace_of_projectives(&[i]);
            let d = delta.dims()[i];
            let top = u.dims()[i];
            let label = self.label(i);
            if !top.is_multiple_of(d) {
                return Ok(FiltrationReport::refuted(
                    factors,
                    format!("[Tr(P_{label}) : L_{label}] = {top} is not a multiple of [Δ({label}) : L_{label}] = {d}"),
                ));
            }
            let mult = top / d;
            let expected: Vec<usize> = delta.dims().iter().map(|x| x * mult).collect();
            if u.dims() != expected {
                return Ok(FiltrationReport::refuted(
                    factors,
                    format!(
                        "Tr(P_{label}) has dimension vector {:?}, not that of Δ({label})^{mult} {:?}",
                        u.dims(),
                        expected
                    ),
                ));
            }
            let certified = if d == 1 {
                // U is generated by U_i, so it is a quotient of P_i^m; it is one of Δ(i)^m
                // exactly when it vanishes at the labels defining the trace in P_i.
                (0..self.label_count()).all(|j| poset.leq(j, i) || u.dims()[j] == 0)
            } else {
                let (ur, _) = u.to_representation(&cur);
                ur.is_isomorphic(&delta.power(mult))?
            };
            if !certified {
                return Ok(FiltrationReport::refuted(
                    factors,
                    format!("Tr(P_{label}) is not isomorphic to Δ({label})^{mult}"),
                ));
            }
            factors.push((i, mult));
            let (next, p) = u.quotient(&cur);
            steps.push(Submodule::preimage(&proj, &u));
            proj = p.compose(&proj);
            cur = next;
        }
        Ok(FiltrationReport {
            filtered: true,
            factors,
            failure: None,
            chain: Some(SubmoduleChain::new(m.clone(), steps)),
        })
    }

    /// Searches for a ∇-filtration of `M` through a Δ-filtration of `D M`.
    ///
    /// Factors are listed bottom first, as for [`Self::delta_filtration`].
    pub fn nabla_filtration(&self, m: &Representation) -> Result<FiltrationReport> {
        let op = self.opposite()?;
        let dm = m.dual_over(op.algebra().clone());
        let report = op.delta_filtration(&dm)?;
        let mut factors = report.factors.clone();
        factors.reverse();
        if !report.filtered {
            return Ok(FiltrationReport::refuted(
                factors,
                report.failure.unwrap_or_default(),
            ));
        }
        // N ⊆ D M corresponds to its annihilator N^⊥ ⊆ M.
        let chain = report.chain.expect("filtered reports carry a chain");
        let steps = chain
            .steps
            .iter()
            .rev()
            .map(|s| {
                Submodule::new(
                    s.spaces()
                        .iter()
                        .map(|sp| Subspace::kernel_of(&sp.basis_matrix().transpose()))
                        .collect(),
                )
            })
            .collect();
        Ok(FiltrationReport {
            filtered: true,
            factors,
            failure: None,
            chain: Some(SubmoduleChain::new(m.clone(), steps)),
        })
    }

    pub fn in_f_delta(&self, m: &Representation) -> Result<bool> {
        Ok(self.delta_filtration(m)?.filtered)
    }

    pub fn in_f_nabla(&self, m: &Representation) -> Result<bool> {
        Ok(self.nabla_filtration(m)?.filtered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;
    use crate::qh::LabelPoset;

    fn linear_ctx() -> QhContext {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap()
    }

    #[test]
    fn projectives_and_injectives_are_filtered() {
        let ctx = linear_ctx();
        for i in 0..3 {
            let r = ctx.delta_filtration(ctx.projective(i)).unwrap();
            assert!(r.filtered);
            assert_eq!(r.factors, vec![(i, 1)]);
            let chain = r.chain.unwrap();
            assert!(chain.is_valid());
            let q = ctx.injective(i).unwrap();
            let r = ctx.nabla_filtration(q).unwrap();
            assert!(r.filtered, "{:?}", r.failure);
            let chain = r.chain.unwrap();
            assert!(chain.is_valid());
            for (quot, &(l, m)) in chain.quotients().iter().zip(&r.factors) {
                assert!(quot
                    .is_isomorphic(&ctx.costandard(l).unwrap().power(m))
                    .unwrap());
            }
        }
    }

    #[test]
    fn simple_top_module_is_refuted() {
        let ctx = linear_ctx();
        // L_2 has no Δ-filtration: Δ(2) = P_2 has dimension 2.
        let r = ctx.delta_filtration(&ctx.simple(1)).unwrap();
        assert!(!r.filtered);
        assert!(r.failure.is_some());
    }
}
