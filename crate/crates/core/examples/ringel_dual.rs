//! The Ringel dual of an ADR algebra and its quiver.

use adrlab::adr::adr_algebra;
use adrlab::cli::emit_dot;
use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;
use adrlab::qh::QhContext;

fn main() -> adrlab::Result<()> {
    let f = FieldSpec::Rational;
    let adr = adr_algebra(&generators::brauer_tree(3, f)?)?;
    let ctx = QhContext::for_adr(&adr)?;
    let dual = ctx.ringel_dual()?;
    let q = dual.endo.presentation().quiver();
    println!(
        "R(R_A): dim {}, {} vertices, {} arrows",
        dual.endo.dim(),
        q.vertex_count(),
        q.arrows().len()
    );
    let expected = generators::brauer_adr_quiver(3, f)?.quiver().opposite();
    println!(
        "quiver is the opposite of the ADR quiver: {}",
        q.isomorphism_to(&expected).is_some()
    );
    println!(
        "quasihereditary for the reversed order: {}",
        dual.context.check_quasihereditary(5, 3)?.passed
    );
    let op = dual.context.opposite()?;
    println!("opposite is USQ: {}", op.check_usq()?.passed);
    print!("{}", emit_dot(q));
    Ok(())
}
