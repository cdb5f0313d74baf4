//! The structure theorems for ultra strongly quasihereditary algebras, checked
//! on a concrete algebra item by item.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{QhContext, TiltingChain};
use crate::adr::AdrData;
use crate::error::Result;
use crate::modrep::{ModuleMap, Representation};
use crate::presentation::Quiver;

/// Knobs for [`verify_structure_theorems`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Random `A`-modules `M` for which `Hom_A(G, M)` must be Δ-filtered.
    pub random_modules: usize,
    /// Random submodules of Δ-filtered modules that must be Δ-filtered.
    pub random_submodules: usize,
    pub seed: u64,
    /// Whether to build the Ringel dual and check it.
    pub ringel: bool,
    /// A quiver the Ringel dual's quiver must be isomorphic to.
    pub expected_ringel_quiver: Option<Quiver>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            random_modules: 50,
            random_submodules: 50,
            seed: 2024,
            ringel: true,
            expected_ringel_quiver: None,
        }
    }
}

/// One verified statement.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    /// Group letter `a` to `f`.
    pub item: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub items: Vec<CheckItem>,
    pub tilting_chains: Vec<TiltingChain>,
}

#[derive(Default)]
struct Items(Vec<CheckItem>);

impl Items {
    fn push(&mut self, item: &str, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckItem {
            item: item.into(),
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs the verification suite on a USQ algebra; `adr` enables the items that
/// only make sense for `R_A`.
pub fn verify_structure_theorems(
    ctx: &QhContext,
    adr: Option<&AdrData>,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut items = Items::default();
    let n = ctx.label_count();
    let relabel = ctx.usq_relabel()?;
    let chains: Vec<Vec<usize>> = relabel.chains.clone();

    // (a)-(c): tilting chains inside Q_{i,l_i}.
    let mut tilting_chains = Vec::new();
    for chain in &chains {
        let tc = ctx.tilting_chain(chain)?;
        let name = tc.labels.join(" > ");
        items.push(
            "a",
            "tilting chain with costandard quotients",
            tc.top_is_injective
                && tc.steps_are_tilting
                && tc.quotients_costandard
                && tc.kernels_filtered,
            format!("chain {name}: dims {:?}", tc.dims),
        );
        items.push(
            "b",
            "tilting modules as largest submodules and rejects",
            tc.reject_formula && tc.steps_are_tilting,
            format!("chain {name}"),
        );
        items.push(
            "c",
            "injectives as quotients of T(i,1)",
            tc.injective_quotients,
            format!("chain {name}"),
        );
        tilting_chains.push(tc);
    }

    // (d): injective dimension of ∇, radicals of Δ, submodule closure.
    let bound = ctx.algebra().dim();
    let mut worst = None;
    for i in 0..n {
        let d = ctx.costandard(i)?.injective_dimension(bound)?.unwrap_or(0);
        if d > 1 {
            worst = Some((i, d));
            break;
        }
    }
    items.push(
        "d",
        "costandard modules have injective dimension at most one",
        worst.is_none(),
        worst.map_or("all labels".to_string(), |(i, d)| {
            format!("inj.dim ∇({}) = {d}", ctx.label(i))
        }),
    );
    let mut bad_rad = None;
    for i in 0..n {
        let delta = ctx.standard(i);
        let (rad, _) = delta.radical().to_representation(delta);
        if !ctx.in_f_delta(&rad)? {
            bad_rad = Some(i);
            break;
        }
    }
    items.push(
        "d",
        "radicals of standard modules are Δ-filtered",
        bad_rad.is_none(),
        bad_rad.map_or("all labels".to_string(), |i| {
            format!("rad Δ({}) fails", ctx.label(i))
        }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failure = None;
    for _ in 0..opts.random_submodules {
        let u = rng.gen_range(0..n);
        let base = match rng.gen_range(0..3) {
            0 => ctx.projective(u).clone(),
            1 => {
                let v = rng.gen_range(0..n);
                Representation::direct_sum(
                    ctx.algebra().clone(),
                    &[ctx.projective(u), ctx.projective(v)],
                )
            }
            _ => ctx.tilting(u)?.clone(),
        };
        let (sub, _) = base.random_submodule(&mut rng).to_representation(&base);
        if !ctx.in_f_delta(&sub)? {
            failure = Some(sub.describe());
            break;
        }
    }
    items.push(
        "d",
        "random submodules of Δ-filtered modules are Δ-filtered",
        failure.is_none(),
        failure.map_or(format!("{} samples", opts.random_submodules), |m| {
            format!("counterexample {m}")
        }),
    );

    // (e): the Ringel dual.
    if opts.ringel {
        ringel_items(ctx, &chains, &tilting_chains, opts, &mut items)?;
    }

    // (f): statements about R_A.
    if let Some(adr) = adr {
        adr_items(ctx, adr, opts, &mut items)?;
    }

    let passed = items.0.iter().all(|c| c.passed);
    Ok(VerifyReport {
        passed,
        items: items.0,
        tilting_chains,
    })
}

fn ringel_items(
    ctx: &QhContext,
    chains: &[Vec<usize>],
    tilting_chains: &[TiltingChain],
    opts: &VerifyOptions,
    items: &mut Items,
) -> Result<()> {
    let n = ctx.label_count();
    let rd = ctx.ringel_dual()?;
    let r = &rd.context;
    // The standard correspondences under Hom(T, -).
    let mut corr = true;
    for i in 0..n {
        corr &= rd.apply(ctx.costandard(i)?)?.is_isomorphic(r.standard(i))?;
        corr &= rd.apply(ctx.injective(i)?)?.is_isomorphic(r.tilting(i)?)?;
    }
    items.push(
        "e",
        "Hom(T, ∇(i)) = Δ'(i) and Hom(T, Q_i) = T'(i)",
        corr,
        format!("Ringel dual of dimension {}", rd.endo.dim()),
    );
    let mut first = true;
    let mut second = true;
    let mut third = true;
    let mut detail = Vec::new();
    for (chain, tc) in chains.iter().zip(tilting_chains) {
        let l = chain.len();
        let p1 = r.projective(chain[0]);
        if !p1.is_isomorphic(r.tilting(chain[l - 1])?)? {
            first = false;
            detail.push(format!(
                "P'_{} is not T'_{}",
                ctx.label(chain[0]),
                ctx.label(chain[l - 1])
            ));
        }
        let container = tc.container.as_ref().expect("chains keep their container");
        for j in 0..l - 1 {
            let quot = rd.apply_quotient(container, &tc.steps[j + 1])?;
            if !quot.is_isomorphic(r.tilting(chain[j])?)? {
                second = false;
                detail.push(format!(
                    "T'({}) is not a quotient of P'",
                    ctx.label(chain[j])
                ));
            }
        }
        for j in 0..l {
            let nabla = r.costandard(chain[j])?;
            let ok = nabla.is_uniserial() && nabla.loewy_length() == j + 1;
            let ok = ok
                && if j == 0 {
                    true
                } else {
                    let below = nabla.socle().quotient(nabla).0;
                    below.is_isomorphic(r.costandard(chain[j - 1])?)?
                };
            if !ok {
                third = false;
                detail.push(format!("∇'({}) has the wrong shape", ctx.label(chain[j])));
            }
        }
    }
    let detail = if detail.is_empty() {
        "all chains".to_string()
    } else {
        detail.join("; ")
    };
    items.push("e", "P'(i,1) ≅ T'(i,l_i)", first, detail.clone());
    items.push("e", "T'(i,j) ≅ P'(i,1)/P'(i,j+1)", second, detail.clone());
    items.push(
        "e",
        "∇'(i,j) uniserial of Loewy length j with ∇'(i,j)/L' ≅ ∇'(i,j-1)",
        third,
        detail,
    );
    let op = QhContext::new(r.algebra().opposite()?, r.poset().clone())?;
    let qh = op.check_quasihereditary(0, opts.seed)?;
    let usq = op.check_usq()?;
    items.push(
        "e",
        "the opposite of the Ringel dual is ultra strongly quasihereditary",
        qh.passed && usq.passed,
        format!(
            "(A1) failures {:?}, (A2) failures {:?}",
            usq.a1_failures, usq.a2_failures
        ),
    );
    if let Some(expected) = &opts.expected_ringel_quiver {
        let q = rd.endo.basis().quiver();
        items.push(
            "e",
            "quiver of the Ringel dual matches the expected quiver",
            q.isomorphism_to(expected).is_some(),
            format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count()),
        );
    }
    Ok(())
}

fn adr_items(
    ctx: &QhContext,
    adr: &AdrData,
    opts: &VerifyOptions,
    items: &mut Items,
) -> Result<()> {
    let a = adr.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA5A5);
    let mut failure = None;
    for _ in 0..opts.random_modules {
        let m = Representation::random(a, &mut rng)?;
        if m.is_zero() {
            continue;
        }
        if !ctx.in_f_delta(&adr.apply(&m)?)? {
            failure = Some(m.describe());
            break;
        }
    }
    items.push(
        "f",
        "Hom_A(G, M) is Δ-filtered",
        failure.is_none(),
        failure.map_or(format!("{} random A-modules", opts.random_modules), |m| {
            format!("counterexample {m}")
        }),
    );
    let ll = adr.loewy_lengths();
    let mut shape = true;
    let mut standard = true;
    let mut sequences = true;
    let mut detail = Vec::new();
    for i in 0..a.vertex_count() {
        let top = adr
            .index_of(i + 1, 1)
            .expect("every vertex has a layer one");
        let p1 = ctx.projective(top);
        if !(p1.is_uniserial() && p1.loewy_length() == ll[i]) {
            shape = false;
            detail.push(format!(
                "P_({},1) is not uniserial of Loewy length {}",
                i + 1,
                ll[i]
            ));
        }
        let series = p1.radical_series();
        for j in 1..=ll[i] {
            let u = adr.index_of(i + 1, j).unwrap();
            let (rad, _) = series[j - 1].to_representation(p1);
            if !rad.is_isomorphic(ctx.standard(u))? {
                standard = false;
                detail.push(format!(
                    "Δ({},{j}) is not rad^{} P_({},1)",
                    i + 1,
                    j - 1,
                    i + 1
                ));
            }
            if !prop22_sequence(ctx, adr, i, j)? {
                sequences = false;
                detail.push(format!("the sequence for ({},{j}) is not exact", i + 1));
            }
        }
    }
    let detail = if detail.is_empty() {
        "all labels".to_string()
    } else {
        detail.join("; ")
    };
    items.push(
        "f",
        "P(i,1) is uniserial of Loewy length l_i",
        shape,
        detail.clone(),
    );
    items.push("f", "Δ(i,j) ≅ rad^{j-1} P(i,1)", standard, detail.clone());
    items.push(
        "f",
        "0 -> Hom(G, rad P_i/rad^j P_i) -> P(i,j) -> rad^{j-1} P(i,1) -> 0",
        sequences,
        detail,
    );
    let corner = adr.corner()?;
    items.push(
        "f",
        "the corner algebra at the vertices (i,l_i) has the dimension and quiver of A",
        corner.matches,
        format!("dim {} against {}", corner.dim, corner.algebra_dim),
    );
    Ok(())
}

/// Builds `0 -> Hom(G, K) -> Hom(G, G_(i,j)) -> Hom(G, L_i)` for
/// `K = rad P_i / rad^j P_i` and checks exactness with image `rad^{j-1} P_(i,1)`.
pub(crate) fn prop22_sequence(ctx: &QhContext, adr: &AdrData, i: usize, j: usize) -> Result<bool> {
    let endo = adr.endo();
    let u = adr.index_of(i + 1, j).expect("label exists");
    let s = &adr.summands()[u];
    let g = &s.module;
    let p = Representation::projective(adr.algebra().clone(), i);
    let k = p.radical().map(&s.projection);
    let (kr, inc) = k.to_representation(g);
    let (l, q) = k.quotient(g);
    let (_, fk) = endo.apply_with_fibers(&kr)?;
    let (hg, fg) = endo.apply_with_fibers(g)?;
    let (hl, fl) = endo.apply_with_fibers(&l)?;
    let f1: ModuleMap = endo.apply_map(&inc, &kr, &fk, &fg)?;
    let f2: ModuleMap = endo.apply_map(&q, g, &fg, &fl)?;
    let exact = f1.is_injective() && f2.compose(&f1).is_zero() && f1.image() == f2.kernel();
    let image_ok = f2.image() == hl.radical_series()[j - 1];
    let projective_ok = hg.is_isomorphic(ctx.projective(u))?;
    Ok(exact && image_ok && projective_ok)
}
