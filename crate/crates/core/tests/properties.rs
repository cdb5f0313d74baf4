//! Property tests: linear-algebra laws and module-theoretic oracles.

use std::sync::Arc;

use adrlab::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use adrlab::modrep::{hom_dim, Representation};
use adrlab::presentation::{generators, AlgebraBasis, AlgebraPresentation};
use adrlab::qh::{LabelPoset, QhContext};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
    ]
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..5, 0usize..5).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(-4i64..=4, r * c).prop_map(move |xs| {
            let rows = xs
                .chunks(c.max(1))
                .take(r)
                .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
                .collect();
            Matrix::from_rows(f, c, rows)
        })
    })
}

/// Two matrices over one field with the same number of columns.
fn matrix_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (field(), 0usize..5, 0usize..5, 1usize..5).prop_flat_map(|(f, r1, r2, c)| {
        (
            proptest::collection::vec(-3i64..=3, r1 * c),
            proptest::collection::vec(-3i64..=3, r2 * c),
        )
            .prop_map(move |(xs, ys)| {
                let build = |v: &[i64]| {
                    let rows = v
                        .chunks(c)
                        .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
                        .collect();
                    Matrix::from_rows(f, c, rows)
                };
                (build(&xs), build(&ys))
            })
    })
}

fn square() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5).prop_flat_map(|(f, n)| {
        proptest::collection::vec(-4i64..=4, n * n).prop_map(move |xs| {
            let rows = xs
                .chunks(n)
                .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
                .collect();
            Matrix::from_rows(f, n, rows)
        })
    })
}

fn row_space(m: &Matrix) -> Subspace {
    Subspace::spanned_by(
        m.field(),
        m.cols(),
        (0..m.rows()).map(|r| m.row(r).to_vec()).collect(),
    )
}

fn algebras() -> Vec<Arc<AlgebraBasis>> {
    let mut out = Vec::new();
    for f in [FieldSpec::Rational, FieldSpec::prime(3).unwrap()] {
        let ps: Vec<AlgebraPresentation> = vec![
            generators::linear(3, f).unwrap(),
            generators::star(f).unwrap(),
            generators::loop_power(3, f).unwrap(),
            generators::brauer_tree(3, f).unwrap(),
        ];
        out.extend(ps.into_iter().map(|p| p.into_basis().unwrap()));
    }
    out
}

fn random_module(which: usize, seed: u64) -> Representation {
    let algs = algebras();
    let a = &algs[which % algs.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Representation::random(a, &mut rng).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_keeps_the_row_space(m in matrix()) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(r.pivots.len(), m.rank());
        let (reduced, original) = (row_space(&r.matrix), row_space(&m));
        prop_assert_eq!(reduced.basis(), original.basis());
        for (k, &c) in r.pivots.iter().enumerate() {
            for i in 0..m.rows() {
                let e = r.matrix.get(i, c);
                let expected_one = i == k;
                prop_assert!(e.is_one() == expected_one && (expected_one || e.is_zero()));
            }
        }
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_is_two_sided(m in square()) {
        let n = m.rows();
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(m.field(), n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(m.field(), n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn scalar_arithmetic(f in field(), a in -50i64..50, b in -50i64..50) {
        let (x, y) = (f.from_i64(a), f.from_i64(b));
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if let Some(inv) = y.inv() {
            prop_assert!(y.mul(&inv).is_one());
        } else {
            prop_assert!(y.is_zero());
        }
        prop_assert_eq!(f.parse_scalar(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn subspace_dimension_formula((a, b) in matrix_pair()) {
        let (u, v) = (row_space(&a), row_space(&b));
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.sum(&v).contains_subspace(&u));
        prop_assert!(u.contains_subspace(&u.intersect(&v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_from_projectives_and_into_injectives(which in 0usize..8, seed in any::<u64>()) {
        let m = random_module(which, seed);
        let a = m.algebra().clone();
        for v in 0..a.vertex_count() {
            let p = Representation::projective(a.clone(), v);
            prop_assert_eq!(hom_dim(&p, &m).unwrap(), m.dims()[v]);
            let q = Representation::injective(a.clone(), v).unwrap();
            prop_assert_eq!(hom_dim(&m, &q).unwrap(), m.dims()[v]);
        }
    }

    #[test]
    fn duality_and_sums(which in 0usize..8, s1 in any::<u64>(), s2 in any::<u64>()) {
        let m = random_module(which, s1);
        let n = random_module(which, s2);
        let a = m.algebra().clone();
        let dd = m.dual().unwrap().dual().unwrap();
        prop_assert!(dd.is_isomorphic(&m).unwrap());
        let sum = Representation::direct_sum(a.clone(), &[&m, &n]);
        for v in 0..a.vertex_count() {
            let p = Representation::projective(a.clone(), v);
            prop_assert_eq!(
                hom_dim(&sum, &p).unwrap(),
                hom_dim(&m, &p).unwrap() + hom_dim(&n, &p).unwrap()
            );
        }
        if !m.is_zero() && !n.is_zero() {
            prop_assert!(!sum.is_indecomposable().unwrap());
        }
    }

    #[test]
    fn delta_multiplicities_match_reciprocity(seed in any::<u64>()) {
        let a = generators::linear(3, FieldSpec::Rational).unwrap().into_basis().unwrap();
        let ctx = QhContext::new(a.clone(), LabelPoset::natural(a.quiver().vertices())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Representation::random(&a, &mut rng).unwrap();
        let r = ctx.delta_filtration(&m).unwrap();
        if r.filtered {
            for i in 0..3 {
                prop_assert_eq!(r.multiplicity(i), ctx.reciprocity_multiplicity(&m, i).unwrap());
            }
            let chain = r.chain.unwrap();
            prop_assert!(chain.is_valid());
        }
    }
}

#[test]
fn presentations_round_trip_through_json() {
    for f in [FieldSpec::Rational, FieldSpec::prime(5).unwrap()] {
        for p in [
            generators::linear(4, f).unwrap(),
            generators::brauer_tree(4, f).unwrap(),
            generators::brauer_adr_quiver(3, f).unwrap(),
        ] {
            let back = AlgebraPresentation::from_json(&p.to_json()).unwrap();
            assert_eq!(back.to_json(), p.to_json());
            assert_eq!(
                back.into_basis().unwrap().dim(),
                p.clone().into_basis().unwrap().dim()
            );
        }
    }
}
