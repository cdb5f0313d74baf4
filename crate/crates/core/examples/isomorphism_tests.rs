//! Isomorphism and indecomposability tests on random modules.

use adrlab::linalg::FieldSpec;
use adrlab::modrep::Representation;
use adrlab::presentation::generators;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> adrlab::Result<()> {
    let a = generators::brauer_tree(3, FieldSpec::prime(5)?)?.into_basis()?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..6 {
        let m = Representation::random(&a, &mut rng)?;
        let n = Representation::random(&a, &mut rng)?;
        println!(
            "{} vs {}: isomorphic {}, first indecomposable {}",
            m.describe(),
            n.describe(),
            m.is_isomorphic(&n)?,
            m.is_indecomposable()?
        );
    }
    let p = Representation::projective(a.clone(), 1);
    let q = Representation::injective(a.clone(), 1)?;
    println!(
        "P_2 ≅ I_2 (self-injective algebra): {}",
        p.is_isomorphic(&q)?
    );
    let sum = Representation::direct_sum(a.clone(), &[&p, &Representation::simple(a.clone(), 0)]);
    println!("P_2 ⊕ L_1 indecomposable: {}", sum.is_indecomposable()?);
    Ok(())
}
