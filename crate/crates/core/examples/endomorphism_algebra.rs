//! Quiver and relations of `End(M)^op` for a basic module `M`, and the functor `Hom(M, -)`.

use adrlab::adr::EndoPresentation;
use adrlab::linalg::FieldSpec;
use adrlab::modrep::Representation;
use adrlab::presentation::generators;

fn main() -> adrlab::Result<()> {
    let a = generators::linear(3, FieldSpec::Rational)?.into_basis()?;
    // The projective-injective P_3 together with every simple module.
    let mut summands = vec![Representation::projective(a.clone(), 2)];
    summands.extend((0..3).map(|v| Representation::simple(a.clone(), v)));
    let labels = ["P3", "L1", "L2", "L3"].map(String::from).to_vec();
    let e = EndoPresentation::new(labels, summands)?;
    let p = e.presentation();
    println!("dim {}, Loewy length {}", e.dim(), e.loewy_length());
    for arrow in p.quiver().arrows() {
        println!(
            "  arrow {}: {} -> {}",
            arrow.name,
            p.quiver().vertices()[arrow.source],
            p.quiver().vertices()[arrow.target]
        );
    }
    for r in p.relations() {
        println!("  relation {}", r.display(p.quiver()));
    }
    let m = Representation::projective(a.clone(), 1);
    println!("Hom(M, P_2) has dims {:?}", e.apply(&m)?.dims());
    Ok(())
}
