use std::collections::BTreeMap;

use leibniz_core::cochain::{
    leibniz_cohomology, leibniz_spaces, lie_cohomology, Cochain, CochainScheme, WedgeScheme,
};
use leibniz_core::deformation::{massey_products_named, verify_versal_table, MasseyEntry};
use leibniz_core::koszul::{decompose_HL2, koszul_report};
use leibniz_core::poly::{DefectEntry, Monomial, ParamAlgebra};
use leibniz_core::{AlgebraSpec, Coefficients, Kind};
use serde::Serialize;

pub type NamedCochain = BTreeMap<String, String>;

#[derive(Serialize, Debug)]
pub struct Report {
    pub tool: Tool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul: Option<KoszulSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub massey: Option<MasseySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub versal: Option<VersalSection>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize, Debug)]
pub struct AlgebraEcho {
    pub dim: usize,
    pub kind: Kind,
    pub basis: Vec<String>,
    pub is_antisymmetric: bool,
    pub is_jacobi: bool,
    pub is_leibniz: bool,
    pub claim_holds: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub p: usize,
    pub c: usize,
}

#[derive(Serialize, Debug)]
pub struct FamilyEcho {
    pub dim: usize,
    pub kind: Kind,
    pub basis: Vec<String>,
    pub params: Vec<String>,
    pub claim_holds: bool,
    pub antisymmetry_defect: Vec<Defect>,
    pub jacobi_defect: Vec<Defect>,
    pub leibniz_defect: Vec<Defect>,
}

#[derive(Serialize, Debug)]
pub struct Defect {
    pub inputs: Vec<String>,
    pub output: String,
    pub poly: String,
}

#[derive(Serialize, Debug)]
pub struct CohomologySection {
    pub complex: &'static str,
    pub coefficients: Coefficients,
    pub degree: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub dim: usize,
    #[serde(flatten)]
    pub named: BTreeMap<String, usize>,
    pub representatives: Vec<NamedCochain>,
}

#[derive(Serialize, Debug)]
pub struct KoszulSection {
    pub inv_forms_dim: usize,
    #[serde(rename = "ker_I_dim")]
    pub ker_i_dim: usize,
    #[serde(rename = "im_I_dim")]
    pub im_i_dim: usize,
    #[serde(rename = "im_I_cap_B3_trivial_dim")]
    pub im_i_cap_b3_trivial_dim: usize,
    #[serde(rename = "c_im_I_cap_B3_adjoint_dim")]
    pub c_im_i_cap_b3_adjoint_dim: usize,
    #[serde(rename = "is_I_null")]
    pub is_i_null: bool,
    #[serde(rename = "is_I_exact")]
    pub is_i_exact: bool,
    pub adjoint_uncoupling: bool,
    pub trivial_uncoupling: bool,
    pub p: usize,
    pub c: usize,
    pub inv_forms: Vec<NamedCochain>,
    #[serde(rename = "im_I")]
    pub im_i: Vec<NamedCochain>,
}

#[derive(Serialize, Debug)]
pub struct DecompositionSection {
    pub coefficients: Coefficients,
    pub hl2_dim: usize,
    pub h2_dim: usize,
    pub zl2_0_dim: usize,
    pub coupled_dim: usize,
    pub h2_reps: Vec<NamedCochain>,
    pub symmetric_reps: Vec<NamedCochain>,
    pub coupled_reps: Vec<NamedCochain>,
}

#[derive(Serialize, Debug)]
pub struct MasseySection {
    pub params: Vec<String>,
    pub order: u32,
    pub generators: Vec<NamedCochain>,
    pub entries: Vec<MasseyRow>,
}

#[derive(Serialize, Debug)]
pub struct MasseyRow {
    pub monomial: String,
    pub order: u32,
    pub verdict: String,
    pub defined: bool,
    pub is_cocycle: bool,
    pub indeterminacy_dim: usize,
    pub survives_indeterminacy: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NamedCochain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_rep: Option<NamedCochain>,
}

#[derive(Serialize, Debug)]
pub struct VersalSection {
    pub params: Vec<String>,
    pub ideal: Vec<String>,
    pub holds: bool,
    pub outside_monomials: Vec<String>,
    pub violations: Vec<Violation>,
}

#[derive(Serialize, Debug)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub output: String,
    pub monomial: String,
    pub coeff: String,
}

fn empty() -> Report {
    Report {
        tool: Tool { name: "leibcoh", version: env!("CARGO_PKG_VERSION") },
        algebra: None,
        family: None,
        cohomology: None,
        koszul: None,
        decomposition: None,
        massey: None,
        versal: None,
        notes: Vec::new(),
    }
}

fn echo(spec: &AlgebraSpec) -> AlgebraEcho {
    let r = spec.validate();
    AlgebraEcho {
        dim: spec.dim(),
        kind: spec.kind(),
        basis: spec.names().to_vec(),
        is_antisymmetric: r.is_antisymmetric,
        is_jacobi: r.is_jacobi,
        is_leibniz: r.is_leibniz,
        claim_holds: r.claim_holds,
        center_dim: r.center.dim(),
        derived_dim: r.derived.dim(),
        p: r.p,
        c: r.c,
    }
}

fn with_algebra(spec: &AlgebraSpec) -> Report {
    Report { algebra: Some(echo(spec)), ..empty() }
}

fn named(c: &Cochain, spec: &AlgebraSpec) -> NamedCochain {
    c.to_named_map(spec.names())
}

fn named_sparse(sc: CochainScheme, v: &[(usize, leibniz_core::Scalar)], spec: &AlgebraSpec) -> NamedCochain {
    named(&Cochain::from_sparse(sc, v), spec)
}

pub fn validate(spec: &AlgebraSpec) -> Report {
    let mut r = with_algebra(spec);
    if !spec.validate().claim_holds {
        r.notes.push(format!("the {} identities fail", kind_name(spec.kind())));
    }
    r
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Lie => "Lie",
        Kind::Leibniz => "Leibniz",
    }
}

fn defects(pa: &ParamAlgebra, list: Vec<DefectEntry>) -> Vec<Defect> {
    let names = pa.names();
    list.into_iter()
        .map(|e| Defect {
            inputs: e.inputs.iter().map(|i| names[*i].clone()).collect(),
            output: names[e.output].clone(),
            poly: e.poly.display(pa.params()),
        })
        .collect()
}

pub fn validate_family(pa: &ParamAlgebra) -> (Report, bool) {
    let names = pa.names();
    let anti: Vec<Defect> = pa
        .antisymmetry_defect()
        .into_iter()
        .map(|(i, j, k, p)| Defect {
            inputs: vec![names[i].clone(), names[j].clone()],
            output: names[k].clone(),
            poly: p.display(pa.params()),
        })
        .collect();
    let jacobi = defects(pa, pa.jacobi_defect());
    let leibniz = defects(pa, pa.leibniz_defect_sym());
    let ok = match pa.kind() {
        Kind::Lie => anti.is_empty() && jacobi.is_empty(),
        Kind::Leibniz => leibniz.is_empty(),
    };
    let mut r = empty();
    if !ok {
        r.notes.push(format!("the {} identities fail as polynomial identities", kind_name(pa.kind())));
    }
    r.family = Some(FamilyEcho {
        dim: pa.dim(),
        kind: pa.kind(),
        basis: names.to_vec(),
        params: pa.params().to_vec(),
        claim_holds: ok,
        antisymmetry_defect: anti,
        jacobi_defect: jacobi,
        leibniz_defect: leibniz,
    });
    (r, ok)
}

pub fn cohomology(
    spec: &AlgebraSpec,
    n: usize,
    coeff: Coefficients,
    lie: bool,
) -> leibniz_core::Result<Report> {
    let d = spec.dim();
    let sc = CochainScheme::new(n, coeff, d);
    let (h, prefix, reps) = if lie {
        let h = lie_cohomology(spec, n, coeff)?;
        let w = WedgeScheme::new(n, coeff, d);
        let reps = h.reps.iter().map(|r| named_sparse(sc, &w.include(r), spec)).collect();
        (h, "", reps)
    } else {
        let h = leibniz_cohomology(spec, n, coeff)?;
        let reps = h.reps.iter().map(|r| named_sparse(sc, r, spec)).collect();
        (h, "l", reps)
    };
    let named = BTreeMap::from([
        (format!("z{prefix}{n}_dim"), h.cocycles.dim()),
        (format!("b{prefix}{n}_dim"), h.coboundaries.dim()),
        (format!("h{prefix}{n}_dim"), h.dim()),
    ]);
    Ok(Report {
        cohomology: Some(CohomologySection {
            complex: if lie { "lie" } else { "leibniz" },
            coefficients: coeff,
            degree: n,
            cocycle_dim: h.cocycles.dim(),
            coboundary_dim: h.coboundaries.dim(),
            dim: h.dim(),
            named,
            representatives: reps,
        }),
        ..with_algebra(spec)
    })
}

pub fn koszul(spec: &AlgebraSpec) -> leibniz_core::Result<Report> {
    let r = koszul_report(spec)?;
    let d = spec.dim();
    let sc2 = CochainScheme::new(2, Coefficients::Trivial, d);
    let sc3 = CochainScheme::new(3, Coefficients::Trivial, d);
    let w3 = WedgeScheme::new(3, Coefficients::Trivial, d);
    Ok(Report {
        koszul: Some(KoszulSection {
            inv_forms_dim: r.inv_forms.dim(),
            ker_i_dim: r.ker_i.dim(),
            im_i_dim: r.im_i.dim(),
            im_i_cap_b3_trivial_dim: r.im_i_cap_b3_trivial.dim(),
            c_im_i_cap_b3_adjoint_dim: r.c_tensor_im_i_cap_b3_adjoint.dim(),
            is_i_null: r.is_i_null,
            is_i_exact: r.is_i_exact,
            adjoint_uncoupling: r.adjoint_uncoupling,
            trivial_uncoupling: r.trivial_uncoupling,
            p: r.p,
            c: r.c,
            inv_forms: r.inv_forms.sparse_basis().iter().map(|b| named_sparse(sc2, b, spec)).collect(),
            im_i: r.im_i.sparse_basis().iter().map(|b| named_sparse(sc3, &w3.include(b), spec)).collect(),
        }),
        ..with_algebra(spec)
    })
}

pub fn decompose(spec: &AlgebraSpec, coeff: Coefficients) -> leibniz_core::Result<Report> {
    let dec = decompose_HL2(spec, coeff)?;
    let (h2, sym, coupled) = dec.dims();
    let names = |v: &[Cochain]| v.iter().map(|c| named(c, spec)).collect();
    Ok(Report {
        decomposition: Some(DecompositionSection {
            coefficients: coeff,
            hl2_dim: dec.leibniz.hl2_dim(),
            h2_dim: h2,
            zl2_0_dim: sym,
            coupled_dim: coupled,
            h2_reps: names(&dec.h2_part),
            symmetric_reps: names(&dec.symmetric_part),
            coupled_reps: names(&dec.coupled_part),
        }),
        ..with_algebra(spec)
    })
}

pub enum GeneratorError {
    Index(String),
    Core(leibniz_core::Error),
}

/// Canonical `HL^2(g,g)` representatives picked by 1-based index; all of
/// them when `picks` is `None`.
pub fn hl2_generators(spec: &AlgebraSpec, picks: Option<&[usize]>) -> Result<Vec<Cochain>, GeneratorError> {
    let l = leibniz_spaces(spec, Coefficients::Adjoint).map_err(GeneratorError::Core)?;
    let sc = CochainScheme::new(2, Coefficients::Adjoint, spec.dim());
    let all: Vec<Cochain> = l.hl2_reps.iter().map(|r| Cochain::from_sparse(sc, r)).collect();
    match picks {
        None => Ok(all),
        Some(p) => p
            .iter()
            .map(|&i| {
                if i == 0 || i > all.len() {
                    Err(GeneratorError::Index(format!(
                        "generator index {i} out of range 1..={}",
                        all.len()
                    )))
                } else {
                    Ok(all[i - 1].clone())
                }
            })
            .collect(),
    }
}

fn massey_row(e: &MasseyEntry, params: &[String], spec: &AlgebraSpec) -> MasseyRow {
    let sc3 = CochainScheme::new(3, Coefficients::Adjoint, spec.dim());
    MasseyRow {
        monomial: e.monomial.display(params),
        order: e.order,
        verdict: e.class.verdict.to_string(),
        defined: e.defined,
        is_cocycle: e.class.is_cocycle,
        indeterminacy_dim: e.indeterminacy_dim,
        survives_indeterminacy: e.survives_indeterminacy,
        witness: e.class.witness.as_ref().filter(|w| !w.is_zero()).map(|w| named(w, spec)),
        class_rep: (!e.class.class_rep.is_empty()).then(|| named_sparse(sc3, &e.class.class_rep, spec)),
    }
}

pub fn massey(
    spec: &AlgebraSpec,
    params: Vec<String>,
    gens: &[Cochain],
    order: u32,
) -> leibniz_core::Result<Report> {
    let ledger = massey_products_named(spec, params, gens, order)?;
    let entries = ledger.entries.iter().map(|e| massey_row(e, &ledger.params, spec)).collect();
    Ok(Report {
        massey: Some(MasseySection {
            params: ledger.params.clone(),
            order,
            generators: gens.iter().map(|g| named(g, spec)).collect(),
            entries,
        }),
        ..with_algebra(spec)
    })
}

pub fn versal(pa: &ParamAlgebra, ideal: &[String]) -> leibniz_core::Result<(Report, bool)> {
    let gens = ideal
        .iter()
        .map(|g| Monomial::parse(g, pa.params()))
        .collect::<leibniz_core::Result<Vec<_>>>()?;
    let check = verify_versal_table(pa, &gens);
    let names = pa.names();
    let mut outside: Vec<Monomial> = check.violations.iter().map(|(_, m, _)| m.clone()).collect();
    outside.sort();
    outside.dedup();
    let violations = check
        .violations
        .iter()
        .map(|(e, m, c)| Violation {
            inputs: e.inputs.iter().map(|i| names[*i].clone()).collect(),
            output: names[e.output].clone(),
            monomial: m.display(pa.params()),
            coeff: c.to_string(),
        })
        .collect();
    let (mut fam, _) = validate_family(pa);
    fam.notes.clear();
    Ok((
        Report {
            versal: Some(VersalSection {
                params: pa.params().to_vec(),
                ideal: gens.iter().map(|g| g.display(pa.params())).collect(),
                holds: check.holds,
                outside_monomials: outside.iter().map(|m| m.display(pa.params())).collect(),
                violations,
            }),
            ..fam
        },
        check.holds,
    ))
}
