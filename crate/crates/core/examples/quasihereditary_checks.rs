//! Standard and costandard modules, filtrations and the (A1)/(A2) conditions.

use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;
use adrlab::qh::{LabelPoset, QhContext};

fn main() -> adrlab::Result<()> {
    let a = generators::linear(3, FieldSpec::Rational)?.into_basis()?;
    let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices()))?;
    for i in 0..ctx.label_count() {
        let pf = ctx.delta_filtration(ctx.projective(i))?;
        println!(
            "label {}: Δ dims {:?}, ∇ dims {:?}, P factors {:?}",
            ctx.label(i),
            ctx.standard(i).dims(),
            ctx.costandard(i)?.dims(),
            pf.factors
        );
    }
    let qh = ctx.check_quasihereditary(10, 1)?;
    let usq = ctx.check_usq()?;
    println!(
        "linear quiver, natural order: quasihereditary {}, USQ {}",
        qh.passed, usq.passed
    );
    let relabel = ctx.usq_relabel()?;
    println!("chain labels {:?}", relabel.new_labels);

    let star = generators::star(FieldSpec::Rational)?.into_basis()?;
    let poset = LabelPoset::parse("2<1,3<1", star.quiver().vertices())?;
    let ctx = QhContext::new(star, poset)?;
    let usq = ctx.check_usq()?;
    println!(
        "star quiver: quasihereditary {}, (A1) fails at {:?}, (A2) fails at {:?}",
        ctx.check_quasihereditary(10, 1)?.passed,
        usq.a1_failures,
        usq.a2_failures
    );
    let l = ctx.simple(0);
    println!("L_1 Δ-filtered: {}", ctx.in_f_delta(&l)?);
    Ok(())
}
