mod common;

use std::collections::HashMap;

use common::{dense_rank, suite};
use leibniz_core::algebra::heisenberg;
use leibniz_core::cochain::{apply_leibniz_coboundary, Cochain, CochainScheme};
use leibniz_core::linalg::{kernel, Matrix};
use leibniz_core::poly::{diamond_family, g54_family, sl2_plus_c_family, Monomial, PolyScalar};
use leibniz_core::{Coefficients, Scalar, Subspace};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| &Scalar::from_ratio(a, b) + &(&Scalar::from_ratio(c, d) * &Scalar::i()))
}

fn small() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        2 => (-2i64..=2).prop_map(Scalar::from_int),
        1 => (-2i64..=2, 1i64..=2).prop_map(|(a, b)| Scalar::from_ratio(a, b)),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(small(), cols), rows)
        .prop_map(move |r| Matrix::from_rows(r, cols))
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
    (0..=ambient)
        .prop_flat_map(move |k| proptest::collection::vec(proptest::collection::vec(small(), ambient), k))
        .prop_map(move |vs| Subspace::span(ambient, &vs))
}

fn poly(nvars: usize) -> impl Strategy<Value = PolyScalar> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, nvars), scalar()), 0..6).prop_map(|ts| {
        let mut p = PolyScalar::zero();
        for (e, c) in ts {
            p.add_term(Monomial::new(e), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn rank_nullity_and_dense_rank(m in matrix(5, 6)) {
        let r = leibniz_core::linalg::rank(&m);
        prop_assert_eq!(r, dense_rank(m.row_vecs()));
        prop_assert_eq!(kernel(&m).dim() + r, 6);
        for v in kernel(&m).basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let (r, p, k) = leibniz_core::linalg::rref(&m);
        let (r2, p2, k2) = leibniz_core::linalg::rref(&r);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(p, p2);
        prop_assert_eq!(k, k2);
    }

    #[test]
    fn grassmann_formula(u in subspace(5), v in subspace(5)) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
        let mut all = u.basis_vectors();
        all.extend(v.basis_vectors());
        prop_assert_eq!(s.dim(), if all.is_empty() { 0 } else { dense_rank(all) });
    }

    #[test]
    fn quotient_reps_complete_a_basis(u in subspace(5), v in subspace(5)) {
        let s = u.sum(&v).unwrap();
        let reps = s.quotient_reps(&u).unwrap();
        prop_assert_eq!(reps.len(), s.dim() - u.dim());
        let mut all = u.basis_vectors();
        all.extend(reps);
        prop_assert_eq!(Subspace::span(5, &all), s);
    }

    #[test]
    fn poly_arithmetic(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        let names: Vec<String> = ["t", "s", "u"].iter().map(|s| s.to_string()).collect();
        prop_assert_eq!(PolyScalar::parse(&f.display(&names), &names).unwrap(), f);
    }

    #[test]
    fn poly_eval_is_a_ring_map(f in poly(2), g in poly(2), x in scalar(), y in scalar()) {
        let at = [x, y];
        prop_assert_eq!(f.mul(&g).eval(&at), &f.eval(&at) * &g.eval(&at));
        prop_assert_eq!(f.add(&g).eval(&at), &f.eval(&at) + &g.eval(&at));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn specialization_keeps_jacobi(a in scalar(), b in scalar(), c in scalar()) {
        let mut fams = vec![diamond_family(), sl2_plus_c_family()];
        for n in [1, 2, 3, 5] {
            fams.push(g54_family(n).unwrap());
        }
        let vals = [a, b, c];
        for fam in fams {
            prop_assert!(fam.jacobi_defect().is_empty());
            let at: HashMap<String, Scalar> =
                fam.params().iter().cloned().zip(vals.iter().cloned()).collect();
            let spec = fam.specialize(&at).unwrap();
            prop_assert!(spec.is_jacobi() && spec.is_antisymmetric());
        }
    }

    #[test]
    fn heisenberg_coboundary_squares_to_zero(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let spec = heisenberg(2);
        for coeff in [Coefficients::Adjoint, Coefficients::Trivial] {
            for n in 1..=3 {
                let sc = CochainScheme::new(n, coeff, spec.dim());
                let c = common::random_cochain(&mut rng, sc, 0.2);
                let dd = apply_leibniz_coboundary(&spec, &apply_leibniz_coboundary(&spec, &c).unwrap()).unwrap();
                prop_assert!(dd.is_zero());
            }
        }
    }
}

#[test]
fn coboundary_squares_to_zero_on_the_catalog() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (name, spec) in suite() {
        for coeff in [Coefficients::Adjoint, Coefficients::Trivial] {
            for n in 1..=3 {
                let sc = CochainScheme::new(n, coeff, spec.dim());
                let density = (40.0 / sc.total_dim() as f64).min(0.5);
                let c: Cochain = common::random_cochain(&mut rng, sc, density);
                let dd = apply_leibniz_coboundary(&spec, &apply_leibniz_coboundary(&spec, &c).unwrap()).unwrap();
                assert!(dd.is_zero(), "{name} {coeff} degree {n}");
            }
        }
    }
}
