//! Normal-form path bases of quotients of path algebras.
//!
//! Usage: `cargo run --example path_basis -- [n]` (Brauer tree with `n` edges, default 3).

use adrlab::linalg::FieldSpec;
use adrlab::presentation::generators;

fn main() -> adrlab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let p = generators::brauer_tree(n, FieldSpec::Rational)?;
    let q = p.quiver();
    println!("relations:");
    for r in p.relations() {
        println!("  {}", r.display(q));
    }
    let a = p.clone().into_basis()?;
    println!(
        "dim {} (expected {}), Loewy length {}",
        a.dim(),
        4 * n - 2,
        a.loewy_length()
    );
    for v in 0..a.vertex_count() {
        let paths: Vec<String> = a
            .basis_from(v)
            .iter()
            .map(|&i| a.path(i).display(q).to_string())
            .collect();
        println!("  P_{}: {}", q.vertices()[v], paths.join(", "));
    }
    // Structure constants of two basis paths that compose.
    let (i, j) = (a.basis_from(0)[1], a.basis_from(0)[0]);
    println!(
        "product of basis elements {i} and {j}: {:?}",
        a.product(i, j)
            .iter()
            .map(|(k, c)| (k, c.to_string()))
            .collect::<Vec<_>>()
    );
    Ok(())
}
