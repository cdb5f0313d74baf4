use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{standard_for, Adaptedness, LabelPoset, QhContext};
use crate::error::{Error, Result};

/// Per-label outcome of [`QhContext::check_quasihereditary`].
#[derive(Clone, Debug, Serialize)]
pub struct LabelVerdict {
    pub label: String,
    pub standard_dims: Vec<usize>,
    /// `[Δ(i) : L_i]`, which must be one.
    pub top_multiplicity: usize,
    pub projective_filtered: bool,
    pub injective_filtered: bool,
    /// `(P_i : Δ(j))` as `(label, multiplicity)`.
    pub projective_factors: Vec<(String, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QhReport {
    pub passed: bool,
    pub adaptedness: Adaptedness,
    pub extensions_sampled: usize,
    pub stable_under_extensions: bool,
    pub labels: Vec<LabelVerdict>,
    pub failures: Vec<String>,
}

/// Per-label outcome of [`QhContext::check_usq`].
#[derive(Clone, Debug, Serialize)]
pub struct UsqLabelVerdict {
    pub label: String,
    pub radical_dims: Vec<usize>,
    /// For nonzero `rad Δ(i)`: whether it is a standard module.
    pub a1: Option<bool>,
    /// The label `j` with `rad Δ(i) ≅ Δ(j)`.
    pub radical_is: Option<String>,
    /// For zero `rad Δ(i)`: whether `Q_i ∈ F(Δ)`.
    pub a2: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UsqReport {
    pub passed: bool,
    pub labels: Vec<UsqLabelVerdict>,
    pub a1_failures: Vec<String>,
    pub a2_failures: Vec<String>,
}

/// The relabelling of a USQ algebra by pairs `(i, j)`.
#[derive(Clone, Debug, Serialize)]
pub struct UsqRelabel {
    /// Pairs `(a, b)`, `a ≠ b`, with `L_a` a composition factor of `Δ(b)`.
    pub order: Vec<(String, String)>,
    pub maximal: Vec<String>,
    /// For each maximal `i`, the labels of `Δ(i)` from top to socle.
    #[serde(skip)]
    pub chains: Vec<Vec<usize>>,
    /// `i*` for every label: `L_{i*} = soc Δ(i)`.
    #[serde(skip)]
    pub socle: Vec<usize>,
    /// New label `(chain, position)` of each old label.
    pub new_labels: Vec<(String, usize)>,
    pub refines_input: bool,
    /// `Δ(i*)` simple and `Q_{i*} ∈ F(Δ)` for every maximal `i`.
    pub socle_checks: bool,
    /// `Q_{i*} ≅ T(i)` for every maximal `i`.
    pub injective_is_tilting: bool,
}

impl QhReport {
    fn failed(&mut self, msg: String) {
        self.passed = false;
        self.failures.push(msg);
    }
}

/// Name of the chain headed by `label`: `i` for labels `(i,1)`, else the label.
fn chain_name(label: &str) -> String {
    label
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(",1)"))
        .map_or_else(|| label.to_string(), str::to_string)
}

impl QhContext {
    /// Checks that `[Δ(i) : L_i] = 1`, that projectives are Δ-filtered and
    /// injectives ∇-filtered, and that `Δ` is stable under `samples` random
    /// linear extensions of the poset.
    pub fn check_quasihereditary(&self, samples: usize, seed: u64) -> Result<QhReport> {
        let n = self.label_count();
        let mut report = QhReport {
            passed: true,
            adaptedness: self.adaptedness(),
            extensions_sampled: samples,
            stable_under_extensions: true,
            labels: Vec::new(),
            failures: Vec::new(),
        };
        for i in 0..n {
            let delta = self.standard(i);
            let label = self.label(i).to_string();
            let top = delta.dims()[i];
            if top != 1 {
                report.failed(format!("[Δ({label}) : L_{label}] = {top}"));
            }
            let pf = self.delta_filtration(self.projective(i))?;
            if !pf.filtered {
                report.failed(format!(
                    "P_{label} has no Δ-filtration: {}",
                    pf.failure.clone().unwrap_or_default()
                ));
            }
            let inf = self.nabla_filtration(self.injective(i)?)?;
            if !inf.filtered {
                report.failed(format!(
                    "Q_{label} has no ∇-filtration: {}",
                    inf.failure.clone().unwrap_or_default()
                ));
            }
            report.labels.push(LabelVerdict {
                label,
                standard_dims: delta.dims().to_vec(),
                top_multiplicity: top,
                projective_filtered: pf.filtered,
                injective_filtered: inf.filtered,
                projective_factors: pf
                    .factors
                    .iter()
                    .map(|&(l, m)| (self.label(l).to_string(), m))
                    .collect(),
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let ext = self.poset().random_linear_extension(&mut rng);
            let total = LabelPoset::total(self.poset().labels().to_vec(), &ext)?;
            for i in 0..n {
                let d = standard_for(&total, self.projective(i), i);
                if d.dims() != self.standard(i).dims() {
                    report.stable_under_extensions = false;
                    report.failed(format!(
                        "Δ({}) changes under a linear extension of the order",
                        self.label(i)
                    ));
                    break;
                }
            }
        }
        if report.adaptedness == Adaptedness::Assumed
            && samples > 0
            && report.stable_under_extensions
        {
            report.adaptedness = Adaptedness::Sampled;
        }
        report.failures.dedup();
        Ok(report)
    }

    /// Checks (A1) `rad Δ(i)` is zero or standard, and (A2) `Q_i ∈ F(Δ)` when `rad Δ(i) = 0`.
    pub fn check_usq(&self) -> Result<UsqReport> {
        let n = self.label_count();
        let mut report = UsqReport {
            passed: true,
            labels: Vec::new(),
            a1_failures: Vec::new(),
            a2_failures: Vec::new(),
        };
        for i in 0..n {
            let delta = self.standard(i);
            let (rad, _) = delta.radical().to_representation(delta);
            let label = self.label(i).to_string();
            let mut verdict = UsqLabelVerdict {
                label: label.clone(),
                radical_dims: rad.dims().to_vec(),
                a1: None,
                radical_is: None,
                a2: None,
            };
            if rad.is_zero() {
                let ok = self.in_f_delta(self.injective(i)?)?;
                verdict.a2 = Some(ok);
                if !ok {
                    report.a2_failures.push(label);
                }
            } else {
                let mut found = None;
                for j in 0..n {
                    let dj = self.standard(j);
                    if dj.dims() == rad.dims() && dj.is_isomorphic(&rad)? {
                        found = Some(j);
                        break;
                    }
                }
                verdict.a1 = Some(found.is_some());
                verdict.radical_is = found.map(|j| self.label(j).to_string());
                if found.is_none() {
                    report.a1_failures.push(label);
                }
            }
            report.labels.push(verdict);
        }
        report.passed = report.a1_failures.is_empty() && report.a2_failures.is_empty();
        Ok(report)
    }

    /// Relabels a USQ algebra by chains of uniserial standard modules.
    pub fn usq_relabel(&self) -> Result<UsqRelabel> {
        let n = self.label_count();
        // below[a][b]: L_a is a composition factor of Δ(b).
        let below: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| self.standard(b).dims()[a] > 0).collect())
            .collect();
        let order: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && below[a][b])
            .collect();
        let refines_input = order.iter().all(|&(a, b)| self.poset().less(a, b));
        let maximal: Vec<usize> = (0..n)
            .filter(|&a| !(0..n).any(|b| b != a && below[a][b]))
            .collect();
        let mut chains = Vec::new();
        let mut new_labels: Vec<Option<(String, usize)>> = vec![None; n];
        for &m in &maximal {
            let delta = self.standard(m);
            let series = delta.radical_series();
            let mut chain = Vec::new();
            for w in series.windows(2) {
                let layer: Vec<usize> = w[0]
                    .dims()
                    .iter()
                    .zip(w[1].dims())
                    .map(|(a, b)| a - b)
                    .collect();
                let simple: Vec<usize> = (0..n).filter(|&v| layer[v] > 0).collect();
                if simple.len() != 1 || layer[simple[0]] != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "Δ({}) is not uniserial; the algebra does not satisfy (A1)",
                        self.label(m)
                    )));
                }
                chain.push(simple[0]);
            }
            let name = chain_name(self.label(m));
            for (j, &l) in chain.iter().enumerate() {
                if new_labels[l].is_some() {
                    return Err(Error::Internal(format!(
                        "standard modules of maximal labels share the factor L_{}",
                        self.label(l)
                    )));
                }
                new_labels[l] = Some((name.clone(), j + 1));
            }
            chains.push(chain);
        }
        let new_labels: Vec<(String, usize)> = new_labels
            .into_iter()
            .enumerate()
            .map(|(l, x)| {
                x.ok_or_else(|| {
                    Error::Internal(format!("label {} lies in no maximal chain", self.label(l)))
                })
            })
            .collect::<Result<_>>()?;
        let socle: Vec<usize> = (0..n)
            .map(|i| {
                let s = self.standard(i).socle_dims();
                s.iter().position(|&d| d > 0).unwrap_or(i)
            })
            .collect();
        let mut socle_checks = true;
        let mut injective_is_tilting = true;
        for &m in &maximal {
            let star = socle[m];
            socle_checks &=
                self.standard(star).dim() == 1 && self.in_f_delta(self.injective(star)?)?;
            injective_is_tilting &= self.injective(star)?.is_isomorphic(self.tilting(m)?)?;
        }
        Ok(UsqRelabel {
            order: order
                .iter()
                .map(|&(a, b)| (self.label(a).to_string(), self.label(b).to_string()))
                .collect(),
            maximal: maximal.iter().map(|&m| self.label(m).to_string()).collect(),
            chains,
            socle,
            new_labels,
            refines_input,
            socle_checks,
            injective_is_tilting,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn linear_quiver_is_usq() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap();
        let qh = ctx.check_quasihereditary(5, 1).unwrap();
        assert!(qh.passed, "{:?}", qh.failures);
        assert_eq!(qh.adaptedness, Adaptedness::Sampled);
        assert!(ctx.check_usq().unwrap().passed);
        let r = ctx.usq_relabel().unwrap();
        assert_eq!(r.maximal, vec!["3"]);
        assert_eq!(
            r.new_labels,
            vec![
                ("3".to_string(), 3),
                ("3".to_string(), 2),
                ("3".to_string(), 1)
            ]
        );
        assert!(r.refines_input && r.socle_checks && r.injective_is_tilting);
    }

    #[test]
    fn star_quiver_fails_a1_at_its_source() {
        let a = generators::star(FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let poset = LabelPoset::parse("2<1,3<1", a.quiver().vertices()).unwrap();
        let ctx = QhContext::new(a, poset).unwrap();
        assert!(ctx.check_quasihereditary(5, 1).unwrap().passed);
        let usq = ctx.check_usq().unwrap();
        assert!(!usq.passed);
        assert_eq!(usq.a1_failures, vec!["1"]);
    }

    #[test]
    fn truncated_loop_is_not_quasihereditary() {
        let a = generators::loop_power(2, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap();
        let r = ctx.check_quasihereditary(0, 0).unwrap();
        assert!(!r.passed);
        assert_eq!(r.labels[0].top_multiplicity, 2);
    }
}
