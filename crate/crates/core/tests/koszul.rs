mod common;

use common::{diamond_phis, int, lift, phi11, phi14, suite, triv2};
use leibniz_core::algebra::{diamond_e, g54, gl, heisenberg};
use leibniz_core::cochain::{apply_leibniz_coboundary, split_degree2, Cochain, CochainScheme};
use leibniz_core::koszul::{decompose_HL2, koszul_map, koszul_report, koszul_tensor};
use leibniz_core::{Coefficients, Subspace};

const BOTH: [Coefficients; 2] = [Coefficients::Adjoint, Coefficients::Trivial];

fn span(cs: &[Cochain]) -> Subspace {
    let n = cs[0].scheme().total_dim();
    Subspace::span_sparse(n, cs.iter().map(|c| c.to_sparse()))
}

#[test]
fn invariant_form_count() {
    for (name, spec) in suite() {
        let r = koszul_report(&spec).unwrap();
        assert_eq!(r.inv_forms.dim(), r.p * (r.p + 1) / 2 + r.im_i.dim(), "{name}");
    }
}

#[test]
fn coboundary_of_a_form_is_minus_its_koszul_form() {
    for (name, spec) in suite() {
        let d = spec.dim();
        let sc = CochainScheme::new(2, Coefficients::Trivial, d);
        let map = koszul_map(&spec).unwrap();
        for b in map.forms.sparse_basis() {
            let db = apply_leibniz_coboundary(&spec, &Cochain::from_sparse(sc, b)).unwrap();
            let ib = Cochain::from_sparse(sc.next(), &koszul_tensor(&spec, b));
            assert!(db.add(&ib).is_zero(), "{name}");
        }
    }
}

#[test]
fn dimension_sum_over_the_catalog() {
    for (name, spec) in suite() {
        let r = koszul_report(&spec).unwrap();
        for coeff in BOTH {
            let dec = decompose_HL2(&spec, coeff).unwrap();
            let coupled = match coeff {
                Coefficients::Trivial => r.im_i_cap_b3_trivial.dim(),
                Coefficients::Adjoint => r.c_tensor_im_i_cap_b3_adjoint.dim(),
            };
            let sym = match coeff {
                Coefficients::Trivial => r.ker_i.dim(),
                Coefficients::Adjoint => r.c * r.ker_i.dim(),
            };
            assert_eq!(dec.dims(), (dec.lie.h2_dim(), sym, coupled), "{name} {coeff}");
            assert_eq!(dec.leibniz.hl2_dim(), dec.total(), "{name} {coeff}");
        }
    }
}

#[test]
fn coupled_representatives_are_genuinely_coupled() {
    for (name, spec) in suite() {
        for coeff in BOTH {
            let dec = decompose_HL2(&spec, coeff).unwrap();
            for rep in &dec.coupled_part {
                assert!(apply_leibniz_coboundary(&spec, rep).unwrap().is_zero(), "{name}");
                let (anti, sym) = split_degree2(rep).unwrap();
                assert!(!apply_leibniz_coboundary(&spec, &anti).unwrap().is_zero(), "{name}");
                assert!(!apply_leibniz_coboundary(&spec, &sym).unwrap().is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn heisenberg_is_i_null() {
    for n in 1..=3 {
        let r = koszul_report(&heisenberg(n)).unwrap();
        assert!(r.is_i_null && r.is_i_exact);
        assert_eq!((r.adjoint_uncoupling, r.trivial_uncoupling), (true, true));
    }
}

fn g54_b() -> Cochain {
    triv2(
        5,
        &[(1, 5, int(1)), (5, 1, int(1)), (2, 4, int(-1)), (4, 2, int(-1)), (3, 3, int(1))],
    )
}

fn g54_g1() -> Cochain {
    g54_b().add(&triv2(5, &[(1, 5, int(1)), (5, 1, int(-1))]))
}

#[test]
fn g54_image_is_spanned_by_b() {
    let spec = g54();
    let b = g54_b();
    let map = koszul_map(&spec).unwrap();
    assert!(map.forms.contains_sparse(&b.to_sparse()));
    let r = koszul_report(&spec).unwrap();
    let w3 = leibniz_core::cochain::WedgeScheme::new(3, Coefficients::Trivial, 5);
    let ib = w3.project(&koszul_tensor(&spec, &b.to_sparse()));
    assert_eq!(r.im_i, Subspace::span_sparse(r.im_i.ambient_dim(), [ib]));
    assert!(!r.is_i_null);
}

#[test]
fn g54_coupled_classes() {
    let spec = g54();
    let t = decompose_HL2(&spec, Coefficients::Trivial).unwrap();
    let base = t.lie.z2.sum(&t.leibniz.zl2_sym).unwrap();
    let g1 = g54_g1();
    assert!(apply_leibniz_coboundary(&spec, &g1).unwrap().is_zero());
    assert_eq!(
        span(&t.coupled_part).sum(&base).unwrap(),
        span(&[g1.clone()]).sum(&base).unwrap()
    );

    let a = decompose_HL2(&spec, Coefficients::Adjoint).unwrap();
    let base = a.lie.z2.sum(&a.leibniz.zl2_sym).unwrap();
    let gs = [lift(4, &g1, 5), lift(3, &g1, 5)];
    for g in &gs {
        assert!(apply_leibniz_coboundary(&spec, g).unwrap().is_zero());
    }
    assert_eq!(a.coupled_part.len(), 2);
    assert_eq!(
        span(&a.coupled_part).sum(&base).unwrap(),
        span(&gs).sum(&base).unwrap()
    );
}

#[test]
fn diamond_split_matches_the_cocycle_list() {
    let spec = diamond_e();
    let mut anti_only = 0;
    let mut sym_only = 0;
    let mut coupled = 0;
    for phi in diamond_phis() {
        let (anti, sym) = split_degree2(&phi).unwrap();
        let closed = |c: &Cochain| apply_leibniz_coboundary(&spec, c).unwrap().is_zero();
        match (sym.is_zero(), anti.is_zero()) {
            (true, false) => anti_only += 1,
            (false, true) => sym_only += 1,
            _ if !closed(&anti) && !closed(&sym) => coupled += 1,
            _ => panic!("mixed representative with closed parts"),
        }
    }
    let dec = decompose_HL2(&spec, Coefficients::Adjoint).unwrap();
    assert_eq!(dec.dims(), (anti_only, sym_only, coupled));
    assert_eq!(dec.dims(), (2, 1, 1));

    let base = dec.lie.z2.sum(&dec.leibniz.zl2_sym).unwrap();
    assert_eq!(
        span(&dec.coupled_part).sum(&base).unwrap(),
        span(&[phi11()]).sum(&base).unwrap()
    );
    assert!(dec.leibniz.zl2_sym.sum(&dec.leibniz.bl2).unwrap()
        == span(&[phi14()]).sum(&dec.leibniz.bl2).unwrap());
}

#[test]
fn gl2_class_is_the_square_of_the_trace() {
    let spec = gl(2);
    let w4 = triv2(4, &[(4, 4, int(2))]);
    let psi = lift(3, &w4, 4);
    let l = leibniz_core::cochain::leibniz_spaces(&spec, Coefficients::Adjoint).unwrap();
    assert!(l.zl2.contains_sparse(&psi.to_sparse()));
    assert_eq!(l.zl2, l.bl2.sum(&span(&[psi])).unwrap());
}
