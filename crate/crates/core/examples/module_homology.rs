//! Projective, injective and simple modules; Hom, Ext and projective dimensions.

use adrlab::linalg::FieldSpec;
use adrlab::modrep::{ext1_dim, global_dimension, hom_dim, universal_extension, Representation};
use adrlab::presentation::generators;

fn main() -> adrlab::Result<()> {
    let a = generators::star(FieldSpec::Rational)?.into_basis()?;
    let q = a.quiver();
    let n = a.vertex_count();
    for v in 0..n {
        let p = Representation::projective(a.clone(), v);
        let i = Representation::injective(a.clone(), v)?;
        println!(
            "vertex {}: P dims {:?}, I dims {:?}, pd(L) = {:?}",
            q.vertices()[v],
            p.dims(),
            i.dims(),
            Representation::simple(a.clone(), v).projective_dimension(8)?
        );
    }
    println!("Ext^1(L_v, L_w):");
    for v in 0..n {
        let row: Vec<usize> = (0..n)
            .map(|w| {
                ext1_dim(
                    &Representation::simple(a.clone(), v),
                    &Representation::simple(a.clone(), w),
                )
            })
            .collect::<adrlab::Result<_>>()?;
        println!("  {} {row:?}", q.vertices()[v]);
    }
    let p2 = Representation::projective(a.clone(), 1);
    let l1 = Representation::simple(a.clone(), 0);
    println!(
        "dim Hom(P_2, L_1) = {}, dim Hom(L_1, P_2) = {}",
        hom_dim(&p2, &l1)?,
        hom_dim(&l1, &p2)?
    );

    // Ext^1(L_1, L_2) is one-dimensional; its universal extension is uniserial with top L_1.
    let l2 = Representation::simple(a.clone(), 1);
    let (e, k) = universal_extension(&l2, &l1)?;
    println!(
        "universal extension of L_1 by L_2 ({k} class): dims {:?}, uniserial {}",
        e.dims(),
        e.is_uniserial()
    );
    println!("global dimension {}", global_dimension(&a, 8)?);

    let brauer = generators::brauer_tree(3, FieldSpec::Rational)?.into_basis()?;
    let s = Representation::simple(brauer.clone(), 0);
    let omega: Vec<Vec<usize>> = (1..=4).map(|k| s.syzygy_power(k).dims().to_vec()).collect();
    println!("Brauer tree: syzygies of L_1 never vanish: {omega:?}");
    Ok(())
}
