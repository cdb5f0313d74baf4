use serde::Serialize;

use super::QhContext;
use crate::error::{Error, Result};
use crate::modrep::{ext1_dim, universal_extension, Representation, Submodule};

/// The tilting modules `T(c_1) ⊇ ... ⊇ T(c_l)` of a maximal chain `c`, realized
/// inside `Q_{c_l}` as largest submodules with bounded composition factors.
#[derive(Clone, Debug, Serialize)]
pub struct TiltingChain {
    /// The chain's labels from the top of `Δ(c_1)` to its socle.
    pub labels: Vec<String>,
    /// Dimension vectors of `T(c_1), ..., T(c_l)` inside `Q_{c_l}`.
    pub dims: Vec<Vec<usize>>,
    /// `T(c_1) = Q_{c_l}`.
    pub top_is_injective: bool,
    /// Each step is isomorphic to the tilting module built by universal extensions.
    pub steps_are_tilting: bool,
    /// Each step equals the reject of `⊕_{k ⋢ c_j} Q_k` in `Q_{c_l}`.
    pub reject_formula: bool,
    /// `T(c_j) / T(c_{j+1}) ≅ ∇(c_j)`, and no other costandard module matches.
    pub quotients_costandard: bool,
    /// `T(c_{j+1})` is ∇-filtered with labels `⊏ c_j`.
    pub kernels_filtered: bool,
    /// `Q_{c_j} ≅ T(c_1) / T(c_{j+1})`.
    pub injective_quotients: bool,
    #[serde(skip)]
    pub container: Option<Representation>,
    /// `T(c_1) ⊇ ... ⊇ T(c_l) ⊇ 0` as submodules of the container.
    #[serde(skip)]
    pub steps: Vec<Submodule>,
}

impl TiltingChain {
    pub fn passed(&self) -> bool {
        self.top_is_injective
            && self.steps_are_tilting
            && self.reject_formula
            && self.quotients_costandard
            && self.kernels_filtered
            && self.injective_quotients
    }
}

impl QhContext {
    /// `T(i)`, built from `Δ(i)` by universal extensions with `Δ(j)`, `j ⊏ i`.
    pub fn tilting(&self, i: usize) -> Result<&Representation> {
        super::cached(&self.tilting[i], || self.build_tilting(i))
    }

    fn build_tilting(&self, i: usize) -> Result<Representation> {
        let n = self.label_count();
        let poset = self.poset();
        let below: Vec<usize> = (0..n).filter(|&j| poset.less(j, i)).collect();
        let bound: usize = (0..n).map(|j| self.standard(j).dim()).sum();
        let mut cur = self.standard(i).clone();
        let mut rounds = 0;
        loop {
            let mut nonzero = Vec::new();
            for &j in &below {
                if ext1_dim(self.standard(j), &cur)? > 0 {
                    nonzero.push(j);
                }
            }
            let Some(&j) = poset.maximal_in(&nonzero).first() else {
                break;
            };
            rounds += 1;
            if rounds > bound {
                return Err(Error::Internal(format!(
                    "tilting construction for {} exceeded {bound} extensions",
                    self.label(i)
                )));
            }
            cur = universal_extension(&cur, self.standard(j))?.0;
        }
        let label = self.label(i);
        let delta = self.delta_filtration(&cur)?;
        let ok = delta.filtered
            && delta.multiplicity(i) == 1
            && delta
                .factors
                .iter()
                .all(|&(l, _)| l == i || poset.less(l, i))
            && self.in_f_nabla(&cur)?
            && cur.is_indecomposable()?;
        if !ok {
            return Err(Error::Internal(format!(
                "the module built for T({label}) is not an indecomposable tilting module"
            )));
        }
        Ok(cur)
    }

    /// Builds and checks the tilting chain of a maximal chain `labels`, listed
    /// from the top of its standard module to the socle.
    pub fn tilting_chain(&self, labels: &[usize]) -> Result<TiltingChain> {
        let n = self.label_count();
        let poset = self.poset();
        let l = labels.len();
        let q = self.injective(labels[l - 1])?.clone();
        let mut steps: Vec<Submodule> = labels
            .iter()
            .map(|&c| {
                let allowed: Vec<bool> = (0..n).map(|k| poset.leq(k, c)).collect();
                q.largest_submodule_supported_in(&allowed)
            })
            .collect();
        steps.push(Submodule::zero(&q));
        let top_is_injective = steps[0].dim() == q.dim();
        let mut steps_are_tilting = true;
        let mut reject_formula = true;
        let mut quotients_costandard = true;
        let mut kernels_filtered = true;
        let mut injective_quotients = true;
        for (j, &c) in labels.iter().enumerate() {
            let (t, _) = steps[j].to_representation(&q);
            steps_are_tilting &= t.is_isomorphic(self.tilting(c)?)?;
            let others: Vec<&Representation> = (0..n)
                .filter(|&k| !poset.leq(k, c))
                .map(|k| self.injective(k))
                .collect::<Result<_>>()?;
            reject_formula &= q.reject(&others)? == steps[j];
            let quot = steps[j + 1].subquotient(&steps[j], &q);
            let mut matches = 0;
            let mut matches_c = false;
            for k in 0..n {
                let nabla = self.costandard(k)?;
                if nabla.dims() == quot.dims() && nabla.is_isomorphic(&quot)? {
                    matches += 1;
                    matches_c |= k == c;
                }
            }
            quotients_costandard &= matches == 1 && matches_c;
            let (y, _) = steps[j + 1].to_representation(&q);
            let yf = self.nabla_filtration(&y)?;
            kernels_filtered &= yf.filtered && yf.factors.iter().all(|&(k, _)| poset.less(k, c));
            let (top_quot, _) = steps[j + 1].quotient(&q);
            injective_quotients &= top_quot.is_isomorphic(self.injective(c)?)?;
        }
        Ok(TiltingChain {
            labels: labels.iter().map(|&c| self.label(c).to_string()).collect(),
            dims: steps[..l].iter().map(Submodule::dims).collect(),
            top_is_injective,
            steps_are_tilting,
            reject_formula,
            quotients_costandard,
            kernels_filtered,
            injective_quotients,
            container: Some(q),
            steps,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;
    use crate::qh::{LabelPoset, QhContext};

    #[test]
    fn linear_quiver_tilting_modules() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap();
        // T(1) = L_1, and T(3) = P_3 = Q_1 is projective-injective.
        assert_eq!(ctx.tilting(0).unwrap().dims(), &[1, 0, 0]);
        assert_eq!(ctx.tilting(2).unwrap().dims(), &[1, 1, 1]);
        let chain = ctx.tilting_chain(&[2, 1, 0]).unwrap();
        assert!(chain.passed(), "{chain:?}");
    }
}
