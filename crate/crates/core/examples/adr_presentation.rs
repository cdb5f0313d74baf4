//! Builds the ADR algebra of a Brauer tree algebra and compares it with the
//! expected quiver with relations.
//!
//! Usage: `cargo run --example adr_presentation -- [n]` (default `n = 3`).

use adrlab::adr::adr_algebra;
use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;

fn main() -> adrlab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let f = FieldSpec::Rational;
    let adr = adr_algebra(&generators::brauer_tree(n, f)?)?;
    let q = adr.quiver();
    println!(
        "R_A: dim {} (19n-10 = {}), {} vertices, {} arrows",
        adr.dim(),
        19 * n - 10,
        q.vertex_count(),
        q.arrows().len()
    );
    for a in q.arrows() {
        println!(
            "  {}: {} -> {}",
            a.name,
            q.vertices()[a.source],
            q.vertices()[a.target]
        );
    }
    println!("relations:");
    for r in adr.presentation().relations() {
        println!("  {}", r.display(q));
    }
    let expected = generators::brauer_adr_quiver(n, f)?;
    let cal = adr.calibrate(&expected)?;
    let scalings: Vec<String> = cal.scalings.iter().map(ToString::to_string).collect();
    println!("arrow scalings onto the expected presentation: {scalings:?}");
    println!(
        "expected presentation has dim {}, isomorphism: {}",
        cal.expected_dim,
        cal.is_isomorphism()
    );
    let corner = adr.corner()?;
    println!(
        "corner at (i,l_i): dim {} against dim A = {}, matches {}",
        corner.dim, corner.algebra_dim, corner.matches
    );
    Ok(())
}
