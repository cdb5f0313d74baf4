//! Tilting modules by universal extensions, and the tilting chains of a USQ algebra.

use adrlab::adr::adr_algebra;
use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;
use adrlab::qh::QhContext;

fn main() -> adrlab::Result<()> {
    let adr = adr_algebra(&generators::brauer_tree(3, FieldSpec::Rational)?)?;
    let ctx = QhContext::for_adr(&adr)?;
    for i in 0..ctx.label_count() {
        let t = ctx.tilting(i)?;
        let df = ctx.delta_filtration(t)?;
        let factors: Vec<(&str, usize)> =
            df.factors.iter().map(|&(l, m)| (ctx.label(l), m)).collect();
        println!(
            "T{}: dims {:?}, Δ-factors bottom first {:?}",
            ctx.label(i),
            t.dims(),
            factors
        );
    }
    for chain in ctx.usq_relabel()?.chains {
        let tc = ctx.tilting_chain(&chain)?;
        println!("chain {}: passed {}", tc.labels.join(" > "), tc.passed());
        for (label, dims) in tc.labels.iter().zip(&tc.dims) {
            println!("  T{label} inside the injective: {dims:?}");
        }
    }
    Ok(())
}
