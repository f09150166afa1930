//! Invariant symmetric bilinear forms, the Koszul map `I_B(x,y,z) = B([x,y],z)`
//! and the splitting of `HL^2` of a Lie algebra into its antisymmetric,
//! symmetric and coupled parts.
//!
//! Forms live in trivial 2-cochain coordinates (`B(e_x, e_y)` at `x·d + y`);
//! `I` lands in the wedge coordinates of trivial 3-cochains.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::AlgebraSpec;
use crate::cochain::{
    apply_leibniz_coboundary, leibniz_spaces, lie_cohomology, lie_coboundary_rows, lie_spaces,
    Cochain, CochainScheme, Coefficients, LeibnizSpaces, LieSpaces, WedgeScheme,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_of_rows, Matrix, ParticularSolver, SparseRow, Subspace};

/// `B(x, y) = xᵀ·gram·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Shape(format!(
                "gram matrix is {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if gram.transpose() != gram {
            return Err(Error::Shape("gram matrix is not symmetric".into()));
        }
        Ok(BilinearForm { gram })
    }

    /// Reads a form from trivial 2-cochain coordinates.
    pub fn from_cochain(d: usize, v: &[(usize, Scalar)]) -> Result<Self> {
        let mut gram = Matrix::zeros(d, d);
        for (idx, x) in v {
            gram.set(idx / d, idx % d, x.clone());
        }
        BilinearForm::new(gram)
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval_basis(&self, x: usize, y: usize) -> &Scalar {
        self.gram.get(x, y)
    }

    pub fn to_cochain(&self) -> SparseRow {
        let d = self.dim();
        let mut out = Vec::new();
        for x in 0..d {
            for y in 0..d {
                let v = self.gram.get(x, y);
                if !v.is_zero() {
                    out.push((x * d + y, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_invariant(&self, spec: &AlgebraSpec) -> bool {
        let d = spec.dim();
        (0..d).all(|z| {
            (0..d).all(|x| {
                (0..d).all(|y| {
                    let mut s = Scalar::zero();
                    for a in 0..d {
                        s += &(spec.get(z, x, a) * self.gram.get(a, y));
                        s += &(spec.get(z, y, a) * self.gram.get(x, a));
                    }
                    s.is_zero()
                })
            })
        })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.inverse().is_ok()
    }
}

fn sym_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect()
}

/// Invariant symmetric forms, as a subspace of trivial 2-cochains.
pub fn invariant_forms(spec: &AlgebraSpec) -> Subspace {
    let d = spec.dim();
    let pairs = sym_pairs(d);
    let pair_index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let col = |a: usize, b: usize| pair_index[&(a.min(b), a.max(b))];
    let mut rows = Vec::new();
    for z in 0..d {
        for x in 0..d {
            for y in x..d {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for a in 0..d {
                    let c1 = spec.get(z, x, a);
                    if !c1.is_zero() {
                        *acc.entry(col(a, y)).or_insert_with(Scalar::zero) += c1;
                    }
                    let c2 = spec.get(z, y, a);
                    if !c2.is_zero() {
                        *acc.entry(col(x, a)).or_insert_with(Scalar::zero) += c2;
                    }
                }
                rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect::<SparseRow>());
            }
        }
    }
    let ker = kernel_of_rows(rows.into_iter(), pairs.len());
    ker.map(d * d, |v| {
        let mut out = Vec::new();
        for (i, x) in v {
            let (a, b) = pairs[*i];
            out.push((a * d + b, x.clone()));
            if a != b {
                out.push((b * d + a, x.clone()));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    })
}

/// `I_B` in tensor coordinates of trivial 3-cochains.
pub fn koszul_tensor(spec: &AlgebraSpec, form: &[(usize, Scalar)]) -> SparseRow {
    let d = spec.dim();
    let sc = CochainScheme::new(3, Coefficients::Trivial, d);
    let b = BTreeMap::from_iter(form.iter().cloned());
    let mut out = Vec::new();
    for t in 0..sc.total_dim() {
        let (_, xs) = sc.decode(t);
        let mut s = Scalar::zero();
        for (a, c) in spec.bracket_basis(xs[0], xs[1]).iter().enumerate() {
            if let Some(v) = b.get(&(a * d + xs[2])) {
                s += &(c * v);
            }
        }
        if !s.is_zero() {
            out.push((t, s));
        }
    }
    out
}

/// The Koszul map on a basis of invariant forms.
#[derive(Clone, Debug)]
pub struct KoszulMap {
    pub forms: Subspace,
    /// `I_B` of each basis form, in wedge coordinates.
    pub images: Vec<SparseRow>,
}

pub fn koszul_map(spec: &AlgebraSpec) -> Result<KoszulMap> {
    spec.require_lie()?;
    let forms = invariant_forms(spec);
    let w3 = WedgeScheme::new(3, Coefficients::Trivial, spec.dim());
    let mut images = Vec::new();
    for b in forms.sparse_basis() {
        let t = koszul_tensor(spec, b);
        let w = w3.project(&t);
        assert_eq!(w3.include(&w), t, "I_B is not alternating");
        images.push(w);
    }
    Ok(KoszulMap { forms, images })
}

impl KoszulMap {
    pub fn wedge_dim(&self) -> usize {
        let d = (self.forms.ambient_dim() as f64).sqrt() as usize;
        WedgeScheme::new(3, Coefficients::Trivial, d).total_dim()
    }

    pub fn apply(&self, coeffs: &[Scalar]) -> SparseRow {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, img) in coeffs.iter().zip(&self.images) {
            for (i, v) in img {
                *acc.entry(*i).or_insert_with(Scalar::zero) += &(c * v);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Kernel of `I`, as a subspace of trivial 2-cochains.
    pub fn kernel(&self) -> Subspace {
        let m = self.images.len();
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.wedge_dim()];
        for (j, img) in self.images.iter().enumerate() {
            for (i, v) in img {
                rows[*i].push((j, v.clone()));
            }
        }
        let coeffs = kernel_of_rows(rows.into_iter(), m);
        coeffs.map(self.forms.ambient_dim(), |c| self.combine(c))
    }

    pub fn image(&self) -> Subspace {
        Subspace::span_sparse(self.wedge_dim(), self.images.iter().cloned())
    }

    fn combine(&self, c: &[(usize, Scalar)]) -> SparseRow {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, x) in c {
            for (i, v) in &self.forms.sparse_basis()[*j] {
                *acc.entry(*i).or_insert_with(Scalar::zero) += &(x * v);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

/// `z ⊗ w` for `z` in the coefficient module and `w` a trivial cochain in
/// coordinates of length `inner`.
fn tensor_with(z: &[(usize, Scalar)], w: &[(usize, Scalar)], inner: usize) -> SparseRow {
    let mut out = Vec::new();
    for (k, zk) in z {
        for (r, wr) in w {
            out.push((k * inner + r, zk * wr));
        }
    }
    out
}

/// The coefficient-side directions a symmetric cocycle may take values in:
/// a basis of the center for adjoint coefficients, `1` for trivial ones.
fn value_directions(spec: &AlgebraSpec, coeff: Coefficients) -> Vec<SparseRow> {
    match coeff {
        Coefficients::Adjoint => spec.center().sparse_basis().to_vec(),
        Coefficients::Trivial => vec![vec![(0, Scalar::one())]],
    }
}

fn tensor_space(spec: &AlgebraSpec, coeff: Coefficients, s: &Subspace, inner: usize) -> Subspace {
    let out_dim = match coeff {
        Coefficients::Adjoint => spec.dim(),
        Coefficients::Trivial => 1,
    };
    let zs = value_directions(spec, coeff);
    Subspace::span_sparse(
        out_dim * inner,
        zs.iter()
            .flat_map(|z| s.sparse_basis().iter().map(move |w| tensor_with(z, w, inner))),
    )
}

#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub inv_forms: Subspace,
    pub ker_i: Subspace,
    pub im_i: Subspace,
    pub im_i_cap_b3_trivial: Subspace,
    pub c_tensor_im_i_cap_b3_adjoint: Subspace,
    pub is_i_null: bool,
    pub is_i_exact: bool,
    pub adjoint_uncoupling: bool,
    pub trivial_uncoupling: bool,
    pub p: usize,
    pub c: usize,
}

pub fn koszul_report(spec: &AlgebraSpec) -> Result<KoszulReport> {
    let map = koszul_map(spec)?;
    let d = spec.dim();
    let im_i = map.image();
    let ker_i = map.kernel();
    let b3_triv = lie_cohomology(spec, 3, Coefficients::Trivial)?.coboundaries;
    let b3_adj = lie_cohomology(spec, 3, Coefficients::Adjoint)?.coboundaries;
    let im_i_cap_b3_trivial = im_i.intersect(&b3_triv)?;
    let inner = WedgeScheme::new(3, Coefficients::Trivial, d).total_dim();
    let c_im = tensor_space(spec, Coefficients::Adjoint, &im_i, inner);
    let c_tensor_im_i_cap_b3_adjoint = c_im.intersect(&b3_adj)?;
    let c = spec.center().dim();
    let p = d - spec.derived().dim();
    let adjoint_uncoupling = c_tensor_im_i_cap_b3_adjoint.is_zero();
    let trivial_uncoupling = im_i_cap_b3_trivial.is_zero();
    if c != 0 && adjoint_uncoupling {
        assert!(trivial_uncoupling, "adjoint uncoupling without trivial uncoupling");
    }
    Ok(KoszulReport {
        is_i_null: im_i.is_zero(),
        is_i_exact: im_i.is_subspace_of(&b3_triv),
        inv_forms: map.forms,
        ker_i,
        im_i,
        im_i_cap_b3_trivial,
        c_tensor_im_i_cap_b3_adjoint,
        adjoint_uncoupling,
        trivial_uncoupling,
        p,
        c,
    })
}

pub fn uncoupling_predicates(spec: &AlgebraSpec) -> Result<(bool, bool)> {
    let r = koszul_report(spec)?;
    Ok((r.adjoint_uncoupling, r.trivial_uncoupling))
}

/// Class representatives of `HL^2` split as antisymmetric (`H^2`), symmetric
/// (`ZL^2_0`) and coupled parts, all in tensor coordinates of `CL^2`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub coefficients: Coefficients,
    pub h2_part: Vec<Cochain>,
    pub symmetric_part: Vec<Cochain>,
    pub coupled_part: Vec<Cochain>,
    pub lie: LieSpaces,
    pub leibniz: LeibnizSpaces,
}

impl Decomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (
            self.h2_part.len(),
            self.symmetric_part.len(),
            self.coupled_part.len(),
        )
    }

    pub fn total(&self) -> usize {
        self.h2_part.len() + self.symmetric_part.len() + self.coupled_part.len()
    }
}

#[allow(non_snake_case)]
pub fn decompose_HL2(spec: &AlgebraSpec, coeff: Coefficients) -> Result<Decomposition> {
    let map = koszul_map(spec)?;
    let d = spec.dim();
    let scheme = CochainScheme::new(2, coeff, d);
    let lie = lie_spaces(spec, coeff)?;
    let leibniz = leibniz_spaces(spec, coeff)?;
    assert_eq!(leibniz.bl2, lie.b2, "BL^2 differs from B^2");
    assert!(
        leibniz.zl2_sym.intersect(&leibniz.bl2)?.is_zero(),
        "symmetric cocycle is a coboundary"
    );

    // W: non-pivot complement of ker I inside the invariant forms
    let ker = map.kernel();
    let w = Subspace::span_sparse(map.forms.ambient_dim(), map.forms.quotient_reps_sparse(&ker)?);
    let w3 = WedgeScheme::new(3, coeff, d);
    let inner3 = WedgeScheme::new(3, Coefficients::Trivial, d).total_dim();
    let zs = value_directions(spec, coeff);
    let b3 = lie_cohomology(spec, 3, coeff)?.coboundaries;

    // candidates z ⊗ B and their images z ⊗ I_B
    let mut cands: Vec<(SparseRow, SparseRow)> = Vec::new();
    for z in &zs {
        for b in w.sparse_basis() {
            let ib = w3_trivial_project(spec, b);
            cands.push((tensor_with(z, b, d * d), tensor_with(z, &ib, inner3)));
        }
    }
    let mut rows: Vec<SparseRow> = vec![Vec::new(); w3.total_dim()];
    for (j, (_, img)) in cands.iter().enumerate() {
        for (i, v) in b3.reduce_sparse(img) {
            rows[i].push((j, v));
        }
    }
    let combos = kernel_of_rows(rows.into_iter(), cands.len());
    let d2 = ParticularSolver::new(lie_coboundary_rows(spec, 2, coeff), WedgeScheme::new(2, coeff, d).total_dim());
    let w2 = WedgeScheme::new(2, coeff, d);
    let mut coupled = Vec::new();
    for c in combos.sparse_basis() {
        let psi0 = combine(c, cands.iter().map(|(a, _)| a));
        let target = combine(c, cands.iter().map(|(_, b)| b));
        let omega = d2
            .solve_sparse(&target)
            .expect("coupled image lies in B^3 by construction");
        let rep = Cochain::from_sparse(scheme, &psi0).add(&Cochain::from_sparse(scheme, &w2.include(&omega)));
        debug_assert!(apply_leibniz_coboundary(spec, &rep)?.is_zero());
        coupled.push(rep);
    }

    let to_cochains =
        |v: &[SparseRow]| v.iter().map(|r| Cochain::from_sparse(scheme, r)).collect::<Vec<_>>();
    Ok(Decomposition {
        coefficients: coeff,
        h2_part: to_cochains(&lie.h2_reps),
        symmetric_part: to_cochains(leibniz.zl2_sym.sparse_basis()),
        coupled_part: coupled,
        lie,
        leibniz,
    })
}

fn w3_trivial_project(spec: &AlgebraSpec, form: &[(usize, Scalar)]) -> SparseRow {
    WedgeScheme::new(3, Coefficients::Trivial, spec.dim()).project(&koszul_tensor(spec, form))
}

fn combine<'a, I: Iterator<Item = &'a SparseRow>>(c: &[(usize, Scalar)], vecs: I) -> SparseRow {
    let vecs: Vec<&SparseRow> = vecs.collect();
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (j, x) in c {
        for (i, v) in vecs[*j] {
            *acc.entry(*i).or_insert_with(Scalar::zero) += &(x * v);
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}
