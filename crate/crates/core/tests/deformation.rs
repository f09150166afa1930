mod common;

use std::collections::HashMap;

use common::{diamond_phis, int, phi11, phi14, phi3, phi7, random_cochain, symbolic_defect_coefficient};
use leibniz_core::algebra::{diamond_e, g54, heisenberg, Kind};
use leibniz_core::cochain::{apply_leibniz_coboundary, leibniz_spaces, Cochain, CochainScheme};
use leibniz_core::deformation::{
    bracket, classify3, comp, massey_products_named, structure_cochain, Deformation, Verdict,
};
use leibniz_core::poly::{diamond_family, sl2_plus_c_family, ParamAlgebra};
use leibniz_core::{Coefficients, Monomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn t_line(pa: &ParamAlgebra, base: &leibniz_core::AlgebraSpec, phi: &Cochain) {
    assert!(pa.jacobi_defect().is_empty());
    let def = Deformation::from_param_algebra(pa).unwrap();
    assert_eq!(def.term(&Monomial::one()).unwrap(), &structure_cochain(base));
    assert_eq!(def.term(&Monomial::var(0)).unwrap(), phi);
}

#[test]
fn lie_lines_close_at_first_order() {
    let base = diamond_e();
    let mut fam3 = ParamAlgebra::with_prefix("e", 4, &["t"], Kind::Lie);
    fam3.set_antisymmetric(1, 2, &[(0, "1")]).unwrap();
    fam3.set_antisymmetric(1, 3, &[(1, "1")]).unwrap();
    fam3.set_antisymmetric(2, 3, &[(1, "1"), (2, "t-1")]).unwrap();
    fam3.set_antisymmetric(0, 3, &[(0, "t")]).unwrap();
    t_line(&fam3, &base, &phi3());

    let fam7 = sl2_plus_c_family();
    t_line(&fam7, &base, &phi7());

    for phi in [phi3(), phi7(), phi14()] {
        let def = Deformation::linear(&base, vec!["t".into()], &[phi]).unwrap();
        let (ext, obs) = def.extend_through(4).unwrap();
        assert!(obs.is_none());
        assert_eq!(ext.terms.len(), 2);
        assert!(ext.to_param_algebra().leibniz_defect_sym().is_empty());
    }
}

#[test]
fn diamond_family_contains_the_diamond() {
    let fam = diamond_family();
    assert!(fam.jacobi_defect().is_empty());
    let at = HashMap::from([("lambda".to_string(), int(1)), ("mu".to_string(), int(-1))]);
    assert_eq!(fam.specialize(&at).unwrap(), diamond_e());
}

#[test]
fn phi14_table() {
    let def = Deformation::linear(&diamond_e(), vec!["t".into()], &[phi14()]).unwrap();
    let pa = def.to_param_algebra();
    assert_eq!(pa.get(3, 3, 0).display(pa.params()), "t");
    assert_eq!(pa.kind(), Kind::Leibniz);
}

#[test]
fn phi11_is_obstructed_at_second_order() {
    let def = Deformation::linear(&diamond_e(), vec!["u".into()], &[phi11()]).unwrap();
    let (_, obs) = def.extend_through(3).unwrap();
    let obs = obs.expect("obstructed");
    let u2 = Monomial::new(vec![2]);
    assert_eq!(obs[&u2].verdict, Verdict::Nontrivial);
    assert!(obs[&u2].is_cocycle);
}

#[test]
fn brackets_are_symmetric_closed_and_class_invariant() {
    let spec = diamond_e();
    let phis = diamond_phis();
    let sc = CochainScheme::new(1, Coefficients::Adjoint, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for a in &phis {
        for b in &phis {
            let ab = bracket(a, b).unwrap();
            assert_eq!(ab, bracket(b, a).unwrap());
            assert!(apply_leibniz_coboundary(&spec, &ab).unwrap().is_zero());
            let g = random_cochain(&mut rng, sc, 0.5);
            let a2 = a.add(&apply_leibniz_coboundary(&spec, &g).unwrap());
            let before = classify3(&spec, &ab).unwrap();
            let after = classify3(&spec, &bracket(&a2, b).unwrap()).unwrap();
            assert_eq!(before.class_rep, after.class_rep);
        }
    }
}

#[test]
fn defect_expansion_matches_symbolic_defect() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in [diamond_e(), g54(), heisenberg(1)] {
        let sc = CochainScheme::new(2, Coefficients::Adjoint, spec.dim());
        for _ in 0..5 {
            let phi = random_cochain(&mut rng, sc, 0.3);
            let def = Deformation::linear(&spec, vec!["t".into()], &[phi.clone()]).unwrap();
            let pa = def.to_param_algebra();
            let t = Monomial::var(0);
            let t2 = Monomial::new(vec![2]);
            let dphi = apply_leibniz_coboundary(&spec, &phi).unwrap();
            assert!(symbolic_defect_coefficient(&pa, &t).add(&dphi).is_zero());
            assert_eq!(symbolic_defect_coefficient(&pa, &t2), comp(&phi, &phi).unwrap());
            assert_eq!(def.defect_coefficient(&t2).unwrap(), comp(&phi, &phi).unwrap());
        }
    }
}

#[test]
fn ledger_agrees_with_the_truncated_symbolic_defect() {
    let spec = diamond_e();
    let params: Vec<String> = ["t", "s", "u", "w"].iter().map(|s| s.to_string()).collect();
    let ledger = massey_products_named(&spec, params.clone(), &diamond_phis(), 2).unwrap();
    let def = Deformation::linear(&spec, params, &diamond_phis()).unwrap();
    let pa = def.to_param_algebra();
    let cls = leibniz_core::deformation::Classifier::new(&spec);
    for e in &ledger.entries {
        let o = symbolic_defect_coefficient(&pa, &e.monomial);
        let direct = cls.classify(&o).unwrap();
        assert_eq!(direct.verdict, e.class.verdict);
        assert_eq!(direct.class_rep, e.class.class_rep);
    }
    let verdict = |g: &[usize]| ledger.product(g).unwrap().class.verdict;
    assert_eq!(verdict(&[0, 0]), Verdict::Zero);
    assert_eq!(verdict(&[2, 2]), Verdict::Nontrivial);
    assert_eq!(verdict(&[1, 2]), Verdict::Coboundary);
}

#[test]
fn representatives_span_hl2() {
    let spec = diamond_e();
    let l = leibniz_spaces(&spec, Coefficients::Adjoint).unwrap();
    let span = l.bl2.sum(&leibniz_core::Subspace::span_sparse(
        l.zl2.ambient_dim(),
        diamond_phis().iter().map(|p| p.to_sparse()),
    ));
    assert_eq!(span.unwrap(), l.zl2);
    assert_eq!(l.hl2_dim(), 4);
}
