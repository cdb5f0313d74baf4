//! Runs the full structure-theorem suite on the ADR algebra of a Brauer tree algebra.
//!
//! Usage: `cargo run --example brauer_theorems -- [n]` (default `n = 3`).

use std::time::Instant;

use adrlab::adr::adr_algebra;
use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;
use adrlab::qh::{verify_structure_theorems, QhContext, VerifyOptions};

fn main() -> adrlab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let f = FieldSpec::Rational;
    let start = Instant::now();
    let adr = adr_algebra(&generators::brauer_tree(n, f)?)?;
    println!("R_A: dim {} ({:.2?})", adr.dim(), start.elapsed());
    let ctx = QhContext::for_adr(&adr)?;
    let opts = VerifyOptions {
        expected_ringel_quiver: Some(generators::brauer_adr_quiver(n, f)?.quiver().opposite()),
        ..VerifyOptions::default()
    };
    let report = verify_structure_theorems(&ctx, Some(&adr), &opts)?;
    for item in &report.items {
        let mark = if item.passed { "ok  " } else { "FAIL" };
        println!("{mark} ({}) {}: {}", item.item, item.name, item.detail);
    }
    println!("all passed: {} ({:.2?})", report.passed, start.elapsed());
    Ok(())
}
