//! Order-by-order deformation calculus for Leibniz brackets.
//!
//! A bracket is a degree-2 adjoint cochain. With
//! `comp(φ,ψ)(x,y,z) = φ(ψ(x,y),z) − φ(ψ(x,z),y) − φ(x,ψ(y,z))`
//! the Leibniz defect of `μ` is `comp(μ,μ)`, and for a Leibniz `μ₀`
//! `comp(μ₀,φ) + comp(φ,μ₀) = −δφ`. Expanding the defect of
//! `μ₀ + Σ_m m·ψ_m` in parameter monomials `m`, the coefficient of `m` is
//! `−δψ_m + O_m` where `O_m = Σ_{ab=m, a,b≠1} comp(ψ_a, ψ_b)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, Kind};
use crate::cochain::{
    apply_leibniz_coboundary, coboundary_rows, leibniz_cohomology, Cochain, CochainScheme,
    Coefficients,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{ParticularSolver, SparseRow, Subspace};
use crate::poly::{in_monomial_ideal, DefectEntry, Monomial, ParamAlgebra, PolyScalar};

/// The bracket of `spec` as a degree-2 adjoint cochain.
pub fn structure_cochain(spec: &AlgebraSpec) -> Cochain {
    let d = spec.dim();
    let sc = CochainScheme::new(2, Coefficients::Adjoint, d);
    let mut coords = vec![Scalar::zero(); sc.total_dim()];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in spec.bracket_basis(i, j).iter().enumerate() {
                coords[sc.index(k, &[i, j])] = c.clone();
            }
        }
    }
    Cochain::from_coords(sc, coords).expect("length matches scheme")
}

pub fn spec_from_cochain(mu: &Cochain, names: Vec<String>, kind: Kind) -> Result<AlgebraSpec> {
    check2(mu)?;
    let d = mu.scheme().algebra_dim;
    let mut c = vec![Scalar::zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                c[(i * d + j) * d + k] = mu.get(k, &[i, j]).clone();
            }
        }
    }
    AlgebraSpec::from_tensor(names, kind, c)
}

fn check2(c: &Cochain) -> Result<()> {
    if c.degree() != 2 {
        return Err(Error::Degree {
            expected: 2,
            got: c.degree(),
        });
    }
    if c.scheme().coefficients != Coefficients::Adjoint {
        return Err(Error::Shape("bracket cochains need adjoint coefficients".into()));
    }
    Ok(())
}

/// `comp(φ,ψ)(x,y,z) = φ(ψ(x,y),z) − φ(ψ(x,z),y) − φ(x,ψ(y,z))`.
pub fn comp(phi: &Cochain, psi: &Cochain) -> Result<Cochain> {
    check2(phi)?;
    check2(psi)?;
    if phi.scheme() != psi.scheme() {
        return Err(Error::DimensionMismatch {
            expected: phi.scheme().algebra_dim,
            got: psi.scheme().algebra_dim,
        });
    }
    let out = phi.scheme().next();
    let d = out.algebra_dim;
    let vals: Vec<Vec<Scalar>> = (0..out.tuples())
        .into_par_iter()
        .map(|t| {
            let xs = out.decode(t).1;
            let (x, y, z) = (xs[0], xs[1], xs[2]);
            let a = phi.eval_with_vector(0, &psi.eval(&[x, y]), &[z]);
            let b = phi.eval_with_vector(0, &psi.eval(&[x, z]), &[y]);
            let c = phi.eval_with_vector(1, &psi.eval(&[y, z]), &[x]);
            (0..d).map(|k| &(&a[k] - &b[k]) - &c[k]).collect()
        })
        .collect();
    let mut coords = vec![Scalar::zero(); out.total_dim()];
    for (t, v) in vals.into_iter().enumerate() {
        for (k, x) in v.into_iter().enumerate() {
            coords[k * out.tuples() + t] = x;
        }
    }
    Cochain::from_coords(out, coords)
}

/// `bracket(φ,ψ) = comp(φ,ψ) + comp(ψ,φ)`.
pub fn bracket(phi: &Cochain, psi: &Cochain) -> Result<Cochain> {
    Ok(comp(phi, psi)?.add(&comp(psi, phi)?))
}

/// `L(μ) = comp(μ, μ)`; zero iff `μ` is a right Leibniz bracket.
pub fn defect(mu: &Cochain) -> Result<Cochain> {
    comp(mu, mu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Zero,
    Coboundary,
    Nontrivial,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Zero => "zero",
            Verdict::Coboundary => "coboundary",
            Verdict::Nontrivial => "nontrivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionClass {
    pub cochain: Cochain,
    pub verdict: Verdict,
    /// `ψ` with `δψ = cochain` when the verdict is `Coboundary`.
    pub witness: Option<Cochain>,
    pub is_cocycle: bool,
    /// Canonical remainder of `cochain` modulo `BL^3`.
    pub class_rep: SparseRow,
}

/// `BL^3` together with a deterministic solver for `δψ = χ`.
pub struct Classifier<'a> {
    spec: &'a AlgebraSpec,
    solver: ParticularSolver,
}

impl<'a> Classifier<'a> {
    pub fn new(spec: &'a AlgebraSpec) -> Self {
        let d = spec.dim();
        let cols = CochainScheme::new(2, Coefficients::Adjoint, d).total_dim();
        let solver = ParticularSolver::new(coboundary_rows(spec, 2, Coefficients::Adjoint), cols);
        Classifier { spec, solver }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.spec
    }

    pub fn coboundaries(&self) -> &Subspace {
        self.solver.image()
    }

    pub fn reduce(&self, chi: &Cochain) -> SparseRow {
        self.coboundaries().reduce_sparse(&chi.to_sparse())
    }

    /// Some `ψ` with `δψ = chi`, if one exists.
    pub fn solve(&self, chi: &Cochain) -> Option<Cochain> {
        let sc = CochainScheme::new(2, Coefficients::Adjoint, self.spec.dim());
        self.solver
            .solve_sparse(&chi.to_sparse())
            .map(|v| Cochain::from_sparse(sc, &v))
    }

    pub fn classify(&self, chi: &Cochain) -> Result<ObstructionClass> {
        if chi.degree() != 3 {
            return Err(Error::Degree {
                expected: 3,
                got: chi.degree(),
            });
        }
        let is_cocycle = apply_leibniz_coboundary(self.spec, chi)?.is_zero();
        if chi.is_zero() {
            return Ok(ObstructionClass {
                cochain: chi.clone(),
                verdict: Verdict::Zero,
                witness: None,
                is_cocycle,
                class_rep: Vec::new(),
            });
        }
        let witness = self.solve(chi);
        let class_rep = self.reduce(chi);
        Ok(ObstructionClass {
            cochain: chi.clone(),
            verdict: if witness.is_some() {
                Verdict::Coboundary
            } else {
                Verdict::Nontrivial
            },
            witness,
            is_cocycle,
            class_rep,
        })
    }
}

pub fn classify3(spec: &AlgebraSpec, chi: &Cochain) -> Result<ObstructionClass> {
    Classifier::new(spec).classify(chi)
}

/// `μ₀ + Σ_m m·ψ_m` known to satisfy the Leibniz identity through
/// `max_order`. The term at monomial `1` is `μ₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    pub base: AlgebraSpec,
    pub params: Vec<String>,
    pub terms: BTreeMap<Monomial, Cochain>,
    pub max_order: u32,
}

/// Outcome of one extension step.
#[derive(Clone, Debug)]
pub enum Extension {
    Extended(Deformation),
    Obstructed(BTreeMap<Monomial, ObstructionClass>),
}

impl Deformation {
    /// `μ₀ + Σ_a p_a·φ_a` with one parameter per generator.
    pub fn linear(base: &AlgebraSpec, params: Vec<String>, generators: &[Cochain]) -> Result<Self> {
        if params.len() != generators.len() {
            return Err(Error::DimensionMismatch {
                expected: params.len(),
                got: generators.len(),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), structure_cochain(base));
        for (i, g) in generators.iter().enumerate() {
            check2(g)?;
            if !g.is_zero() {
                terms.insert(Monomial::var(i), g.clone());
            }
        }
        Ok(Deformation {
            base: base.clone(),
            params,
            terms,
            max_order: 1,
        })
    }

    /// Reads every coefficient of a parameterized bracket as a term; the
    /// order is the total degree of the table.
    pub fn from_param_algebra(pa: &ParamAlgebra) -> Result<Self> {
        let d = pa.dim();
        let sc = CochainScheme::new(2, Coefficients::Adjoint, d);
        let mut terms = BTreeMap::new();
        let mut max_order = 0;
        for (m, tensor) in pa.coefficient_tensors() {
            max_order = max_order.max(m.degree());
            let mut coords = vec![Scalar::zero(); sc.total_dim()];
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        coords[sc.index(k, &[i, j])] = tensor[(i * d + j) * d + k].clone();
                    }
                }
            }
            terms.insert(m, Cochain::from_coords(sc, coords)?);
        }
        let base_c = terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(|| Cochain::zero(sc));
        let base = spec_from_cochain(&base_c, pa.names().to_vec(), pa.kind())?;
        terms.entry(Monomial::one()).or_insert(base_c);
        Ok(Deformation {
            base,
            params: pa.params().to_vec(),
            terms,
            max_order,
        })
    }

    pub fn to_param_algebra(&self) -> ParamAlgebra {
        let d = self.base.dim();
        let antisymmetric = self
            .terms
            .values()
            .all(|c| c.transpose2().map_or(false, |t| t.add(c).is_zero()));
        let kind = if self.base.kind() == Kind::Lie && antisymmetric {
            Kind::Lie
        } else {
            Kind::Leibniz
        };
        let mut pa = ParamAlgebra::new(self.base.names().to_vec(), self.params.clone(), kind);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut p = PolyScalar::zero();
                    for (m, c) in &self.terms {
                        p.add_term(m.clone(), c.get(k, &[i, j]).clone());
                    }
                    pa.set(i, j, k, p);
                }
            }
        }
        pa
    }

    pub fn term(&self, m: &Monomial) -> Option<&Cochain> {
        self.terms.get(m)
    }

    /// `Σ comp(ψ_a, ψ_b)` over factorizations `m = a·b` with `a, b ≠ 1`.
    pub fn quadratic_part(&self, m: &Monomial) -> Result<Cochain> {
        let sc = CochainScheme::new(3, Coefficients::Adjoint, self.base.dim());
        let mut acc = Cochain::zero(sc);
        for (a, pa) in &self.terms {
            if a.is_one() {
                continue;
            }
            if let Some(b) = a.quotient(m) {
                if b.is_one() {
                    continue;
                }
                if let Some(pb) = self.terms.get(&b) {
                    acc = acc.add(&comp(pa, pb)?);
                }
            }
        }
        Ok(acc)
    }

    /// Coefficient of `m` in the full defect.
    pub fn defect_coefficient(&self, m: &Monomial) -> Result<Cochain> {
        let sc = CochainScheme::new(3, Coefficients::Adjoint, self.base.dim());
        let mut acc = Cochain::zero(sc);
        for (a, pa) in &self.terms {
            if let Some(b) = a.quotient(m) {
                if let Some(pb) = self.terms.get(&b) {
                    acc = acc.add(&comp(pa, pb)?);
                }
            }
        }
        Ok(acc)
    }

    pub fn extend_order(&self) -> Result<Extension> {
        self.extend_with(&Classifier::new(&self.base))
    }

    pub fn extend_with(&self, cls: &Classifier) -> Result<Extension> {
        let next = self.max_order + 1;
        let mut classes = BTreeMap::new();
        let mut blocked = false;
        for m in Monomial::all_of_degree(self.params.len(), next) {
            let o = self.quadratic_part(&m)?;
            let class = cls.classify(&o)?;
            blocked |= class.verdict == Verdict::Nontrivial;
            classes.insert(m, class);
        }
        if blocked {
            return Ok(Extension::Obstructed(classes));
        }
        let mut out = self.clone();
        for (m, class) in classes {
            if let Some(w) = class.witness {
                if !w.is_zero() {
                    out.terms.insert(m, w);
                }
            }
        }
        out.max_order = next;
        Ok(Extension::Extended(out))
    }

    /// Repeats `extend_order` up to `order`, stopping at the first obstruction.
    pub fn extend_through(&self, order: u32) -> Result<(Deformation, Option<BTreeMap<Monomial, ObstructionClass>>)> {
        let cls = Classifier::new(&self.base);
        let mut cur = self.clone();
        while cur.max_order < order {
            match cur.extend_with(&cls)? {
                Extension::Extended(d) => cur = d,
                Extension::Obstructed(o) => return Ok((cur, Some(o))),
            }
        }
        Ok((cur, None))
    }

    pub fn monomial_name(&self, m: &Monomial) -> String {
        m.display(&self.params)
    }
}

/// One monomial of the Massey ledger.
#[derive(Clone, Debug)]
pub struct MasseyEntry {
    pub monomial: Monomial,
    pub order: u32,
    pub class: ObstructionClass,
    /// False when a proper divisor of degree at least 2 has a nonzero class.
    pub defined: bool,
    pub indeterminacy_dim: usize,
    /// The class is nonzero modulo the indeterminacy.
    pub survives_indeterminacy: bool,
}

#[derive(Clone, Debug)]
pub struct MasseyLedger {
    pub params: Vec<String>,
    pub entries: Vec<MasseyEntry>,
}

impl MasseyLedger {
    pub fn entry(&self, m: &Monomial) -> Option<&MasseyEntry> {
        self.entries.iter().find(|e| e.monomial == *m)
    }

    /// Looks up the entry for a product of generator indices, e.g. `[0,0,1]`.
    pub fn product(&self, gens: &[usize]) -> Option<&MasseyEntry> {
        let mut exps = vec![0; self.params.len()];
        for g in gens {
            exps[*g] += 1;
        }
        self.entry(&Monomial::new(exps))
    }
}

/// Multi-parameter extension of `μ₀ + Σ s_a φ_a`. Every monomial of degree
/// `2..=through_order` is classified; its witness solves `δψ_m = O_m − r_m`
/// where `r_m` is the canonical remainder of `O_m` modulo `BL^3`, so the
/// extension continues past nonzero classes.
pub fn massey_products(
    spec: &AlgebraSpec,
    generators: &[Cochain],
    through_order: u32,
) -> Result<MasseyLedger> {
    let params: Vec<String> = (1..=generators.len()).map(|i| format!("s{i}")).collect();
    massey_products_named(spec, params, generators, through_order)
}

pub fn massey_products_named(
    spec: &AlgebraSpec,
    params: Vec<String>,
    generators: &[Cochain],
    through_order: u32,
) -> Result<MasseyLedger> {
    let cls = Classifier::new(spec);
    let d = spec.dim();
    let sc2 = CochainScheme::new(2, Coefficients::Adjoint, d);
    let sc3 = CochainScheme::new(3, Coefficients::Adjoint, d);
    for g in generators {
        check2(g)?;
        if !apply_leibniz_coboundary(spec, g)?.is_zero() {
            return Err(Error::Shape("Massey generator is not a cocycle".into()));
        }
    }
    let mut def = Deformation::linear(spec, params.clone(), generators)?;
    let zl2 = leibniz_cohomology(spec, 2, Coefficients::Adjoint)?.cocycles;
    // reduced classes of bracket(φ_a, η) for each generator a
    let mut indet_parts: Vec<Vec<SparseRow>> = Vec::new();
    if through_order >= 3 {
        for g in generators {
            let mut v = Vec::new();
            for eta in zl2.sparse_basis() {
                let e = Cochain::from_sparse(sc2, eta);
                v.push(cls.reduce(&bracket(g, &e)?));
            }
            indet_parts.push(v);
        }
    }
    let mut entries: Vec<MasseyEntry> = Vec::new();
    for order in 2..=through_order {
        let monos = Monomial::all_of_degree(params.len(), order);
        let mut new_terms = Vec::new();
        for m in monos {
            let o = def.quadratic_part(&m)?;
            let class = cls.classify(&o)?;
            let defined = entries
                .iter()
                .filter(|e| e.monomial != m && e.monomial.divides(&m))
                .all(|e| e.class.class_rep.is_empty());
            let (indeterminacy_dim, survives) = if order >= 3 {
                let vecs = (0..params.len())
                    .filter(|a| m.exp(*a) > 0)
                    .flat_map(|a| indet_parts[a].iter().cloned());
                let indet = Subspace::span_sparse(sc3.total_dim(), vecs);
                let survives = !class.class_rep.is_empty() && !indet.contains_sparse(&class.class_rep);
                (indet.dim(), survives)
            } else {
                (0, !class.class_rep.is_empty())
            };
            let remainder = Cochain::from_sparse(sc3, &class.class_rep);
            let w = cls
                .solve(&o.sub(&remainder))
                .expect("O minus its remainder is a coboundary");
            if !w.is_zero() {
                new_terms.push((m.clone(), w));
            }
            entries.push(MasseyEntry {
                monomial: m,
                order,
                class,
                defined,
                indeterminacy_dim,
                survives_indeterminacy: survives,
            });
        }
        def.terms.extend(new_terms);
        def.max_order = order;
    }
    Ok(MasseyLedger { params, entries })
}

#[derive(Clone, Debug)]
pub struct VersalCheck {
    pub holds: bool,
    /// Defect components with monomials outside the ideal.
    pub violations: Vec<(DefectEntry, Monomial, Scalar)>,
}

/// Checks that every monomial of the symbolic Leibniz defect lies in the
/// monomial ideal spanned by `ideal`.
pub fn verify_versal_table(pa: &ParamAlgebra, ideal: &[Monomial]) -> VersalCheck {
    let mut violations = Vec::new();
    for e in pa.leibniz_defect_sym() {
        if in_monomial_ideal(&e.poly, ideal) {
            continue;
        }
        for (m, c) in e.poly.terms() {
            if !ideal.iter().any(|g| g.divides(m)) {
                violations.push((e.clone(), m.clone(), c.clone()));
            }
        }
    }
    VersalCheck {
        holds: violations.is_empty(),
        violations,
    }
}

pub fn verify_versal(def: &Deformation, ideal: &[String]) -> Result<VersalCheck> {
    let gens = ideal
        .iter()
        .map(|g| Monomial::parse(g, &def.params))
        .collect::<Result<Vec<_>>>()?;
    Ok(verify_versal_table(&def.to_param_algebra(), &gens))
}
