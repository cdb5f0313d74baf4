//! Row reduction, kernels and characteristic polynomials over `Q` and `F_5`.

use adrlab::linalg::{FieldSpec, Matrix, Subspace};

fn show(m: &Matrix) {
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn main() -> adrlab::Result<()> {
    for field in [FieldSpec::Rational, FieldSpec::prime(5)?] {
        println!("over {field}");
        let m = Matrix::from_i64(field, &[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]]);
        let rref = m.rref();
        println!("rref, pivots {:?}:", rref.pivots);
        show(&rref.matrix);
        println!(
            "rank {}, kernel {:?}",
            m.rank(),
            m.kernel_basis()
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );

        let n = Matrix::from_i64(field, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let chi = n.charpoly()?;
        let coeffs: Vec<String> = chi.coefficients().iter().map(ToString::to_string).collect();
        println!("charpoly of a unipotent Jordan block, low degree first: {coeffs:?}");
        println!(
            "unique eigenvalue: {:?}",
            n.unique_eigenvalue()?.map(|s| s.to_string())
        );

        let u = Subspace::image_of(&m);
        let k = Subspace::kernel_of(&m);
        println!(
            "image dim {}, kernel dim {}, image ∩ kernel dim {}",
            u.dim(),
            k.dim(),
            u.intersect(&k).dim()
        );
    }
    Ok(())
}
