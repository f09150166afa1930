//! Algebras given by structure constants `[e_i, e_j] = sum_k c_ij^k e_k`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_of_rows, Matrix, SparseRow, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Leibniz,
}

/// Dense structure tensor of an `n`-dimensional algebra. Lie algebras are
/// stored with the full (not triangular) tensor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    names: Vec<String>,
    kind: Kind,
    // index (i * n + j) * n + k
    c: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub is_antisymmetric: bool,
    pub is_jacobi: bool,
    pub is_leibniz: bool,
    /// Whether the claimed kind's identities hold.
    pub claim_holds: bool,
    pub center: Subspace,
    pub derived: Subspace,
    /// `dim g / [g, g]`
    pub p: usize,
    /// `dim` of the center
    pub c: usize,
}

impl AlgebraSpec {
    pub fn new(names: Vec<String>, kind: Kind) -> Self {
        let n = names.len();
        AlgebraSpec {
            names,
            kind,
            c: vec![Scalar::zero(); n * n * n],
        }
    }

    /// Algebra on basis `prefix1..prefixn`.
    pub fn with_prefix(prefix: &str, n: usize, kind: Kind) -> Self {
        AlgebraSpec::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), kind)
    }

    pub fn from_tensor(names: Vec<String>, kind: Kind, c: Vec<Scalar>) -> Result<Self> {
        let n = names.len();
        if c.len() != n * n * n {
            return Err(Error::Shape(format!(
                "expected {} structure constants, got {}",
                n * n * n,
                c.len()
            )));
        }
        Ok(AlgebraSpec { names, kind, c })
    }

    /// Expands a sparse list of nonzero `(i, j, k, c_ij^k)`.
    pub fn from_sparse(
        names: Vec<String>,
        kind: Kind,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut a = AlgebraSpec::new(names, kind);
        let n = a.dim();
        for (i, j, k, v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Shape(format!("index ({i},{j},{k}) out of range")));
            }
            a.set(i, j, k, v);
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.c
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim();
        self.c[(i * n + j) * n + k] = v;
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, v: &[(usize, Scalar)]) {
        let n = self.dim();
        for k in 0..n {
            self.set(i, j, k, Scalar::zero());
            self.set(j, i, k, Scalar::zero());
        }
        for (k, x) in v {
            self.set(i, j, *k, x.clone());
            self.set(j, i, *k, -x);
        }
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = xi * yj;
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&f * c);
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                (0..n).all(|k| (self.get(i, j, k) + self.get(j, i, k)).is_zero())
            })
        })
    }

    fn all_triples(&self, f: impl Fn(usize, usize, usize) -> Vec<Scalar>) -> bool {
        let n = self.dim();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z).iter().all(Zero::is_zero))))
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on all basis triples.
    pub fn is_jacobi(&self) -> bool {
        self.all_triples(|x, y, z| {
            let (ex, ey, ez) = (self.unit(x), self.unit(y), self.unit(z));
            let a = self.bracket(&self.bracket(&ex, &ey), &ez);
            let b = self.bracket(&self.bracket(&ey, &ez), &ex);
            let c = self.bracket(&self.bracket(&ez, &ex), &ey);
            a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
        })
    }

    /// Right Leibniz identity `[[x,y],z] = [[x,z],y] + [x,[y,z]]`.
    pub fn is_leibniz(&self) -> bool {
        self.all_triples(|x, y, z| {
            let (ex, ey, ez) = (self.unit(x), self.unit(y), self.unit(z));
            let a = self.bracket(&self.bracket(&ex, &ey), &ez);
            let b = self.bracket(&self.bracket(&ex, &ez), &ey);
            let c = self.bracket(&ex, &self.bracket(&ey, &ez));
            a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b - c).collect()
        })
    }

    /// Two-sided center `{x : [x, y] = [y, x] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows: Vec<SparseRow> = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let left: SparseRow = (0..n)
                    .filter_map(|i| {
                        let v = self.get(i, j, k);
                        (!v.is_zero()).then(|| (i, v.clone()))
                    })
                    .collect();
                let right: SparseRow = (0..n)
                    .filter_map(|i| {
                        let v = self.get(j, i, k);
                        (!v.is_zero()).then(|| (i, v.clone()))
                    })
                    .collect();
                rows.push(left);
                rows.push(right);
            }
        }
        kernel_of_rows(rows.into_iter(), n)
    }

    /// `C^2 g = [g, g]`.
    pub fn derived(&self) -> Subspace {
        let n = self.dim();
        let vecs: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis(i, j).to_vec())
            .collect();
        Subspace::span(n, &vecs)
    }

    pub fn validate(&self) -> StructureReport {
        let is_antisymmetric = self.is_antisymmetric();
        let is_jacobi = self.is_jacobi();
        let is_leibniz = self.is_leibniz();
        let center = self.center();
        let derived = self.derived();
        let claim_holds = match self.kind {
            Kind::Lie => is_antisymmetric && is_jacobi,
            Kind::Leibniz => is_leibniz,
        };
        StructureReport {
            is_antisymmetric,
            is_jacobi,
            is_leibniz,
            claim_holds,
            p: self.dim() - derived.dim(),
            c: center.dim(),
            center,
            derived,
        }
    }

    /// Errors unless the bracket is antisymmetric and satisfies Jacobi.
    pub fn require_lie(&self) -> Result<()> {
        if !self.is_antisymmetric() {
            return Err(Error::NotLie("bracket is not antisymmetric".into()));
        }
        if !self.is_jacobi() {
            return Err(Error::NotLie("Jacobi identity fails".into()));
        }
        Ok(())
    }

    /// Transports the bracket to the basis `f_a = sum_b t[a][b] e_b`.
    pub fn change_basis(&self, t: &Matrix) -> Result<AlgebraSpec> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.rows().max(t.cols()),
            });
        }
        let tinv = t.inverse()?;
        let mut out = AlgebraSpec::new(self.names.clone(), self.kind);
        for a in 0..n {
            for b in 0..n {
                let w = self.bracket(t.row(a), t.row(b));
                for c in 0..n {
                    let mut acc = Scalar::zero();
                    for (k, wk) in w.iter().enumerate() {
                        if !wk.is_zero() {
                            acc += &(wk * tinv.get(k, c));
                        }
                    }
                    out.set(a, b, c, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    /// Nonzero brackets as `(i, j, [(k, c)])`, in index order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<(usize, Scalar)>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v: Vec<(usize, Scalar)> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect();
                if !v.is_empty() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> AlgebraDoc {
        AlgebraDoc {
            dim: self.dim(),
            kind: self.kind,
            basis: self.names.clone(),
            brackets: self
                .nonzero_brackets()
                .into_iter()
                .map(|(i, j, v)| BracketDoc {
                    left: self.names[i].clone(),
                    right: self.names[j].clone(),
                    value: v
                        .into_iter()
                        .map(|(k, c)| TermDoc {
                            basis: self.names[k].clone(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &AlgebraDoc) -> Result<AlgebraSpec> {
        if doc.basis.len() != doc.dim {
            return Err(Error::Parse(format!(
                "field `basis`: {} names for dim {}",
                doc.basis.len(),
                doc.dim
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &doc.basis {
            if !seen.insert(name) {
                return Err(Error::Parse(format!("field `basis`: duplicate name `{name}`")));
            }
        }
        let mut a = AlgebraSpec::new(doc.basis.clone(), doc.kind);
        let lookup = |name: &str, field: &str, k: usize| {
            a.index_of(name).ok_or_else(|| {
                Error::Parse(format!("field `brackets[{k}].{field}`: unknown basis name `{name}`"))
            })
        };
        let mut entries = Vec::new();
        for (k, b) in doc.brackets.iter().enumerate() {
            let i = lookup(&b.left, "left", k)?;
            let j = lookup(&b.right, "right", k)?;
            for t in &b.value {
                let m = lookup(&t.basis, "value.basis", k)?;
                let c: Scalar = t.coeff.parse().map_err(|e: Error| {
                    Error::Parse(format!("field `brackets[{k}].value.coeff`: {e}"))
                })?;
                entries.push((i, j, m, c));
            }
        }
        for (i, j, m, c) in entries {
            let acc = a.get(i, j, m) + &c;
            a.set(i, j, m, acc);
        }
        Ok(a)
    }
}

/// On-disk algebra document. Omitted brackets are zero; both orders of a
/// Lie bracket are listed explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub kind: Kind,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: String,
    pub right: String,
    pub value: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub basis: String,
    pub coeff: String,
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "abelian(n)",
    "heisenberg(N)",
    "diamond_x",
    "diamond_e",
    "g54",
    "gl(n)",
    "sl2",
    "sl2_plus_abelian(k)",
];

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn lie_from(prefix: &str, n: usize, rels: &[(usize, usize, &[(usize, Scalar)])]) -> AlgebraSpec {
    let mut a = AlgebraSpec::with_prefix(prefix, n, Kind::Lie);
    for (i, j, v) in rels {
        a.set_antisymmetric(i - 1, j - 1, &v.iter().map(|(k, c)| (k - 1, c.clone())).collect::<Vec<_>>());
    }
    a
}

pub fn abelian(n: usize) -> AlgebraSpec {
    AlgebraSpec::with_prefix("x", n, Kind::Lie)
}

/// `H_N`: `[x_i, x_{N+i}] = x_{2N+1}`.
pub fn heisenberg(big_n: usize) -> AlgebraSpec {
    let n = 2 * big_n + 1;
    let mut a = AlgebraSpec::with_prefix("x", n, Kind::Lie);
    for i in 0..big_n {
        a.set_antisymmetric(i, big_n + i, &[(n - 1, int(1))]);
    }
    a
}

pub fn diamond_x() -> AlgebraSpec {
    lie_from(
        "x",
        4,
        &[
            (1, 2, &[(3, int(1))]),
            (1, 3, &[(2, int(-1))]),
            (2, 3, &[(4, int(1))]),
        ],
    )
}

pub fn diamond_e() -> AlgebraSpec {
    lie_from(
        "e",
        4,
        &[
            (2, 3, &[(1, int(1))]),
            (2, 4, &[(2, int(1))]),
            (3, 4, &[(2, int(1)), (3, int(-1))]),
        ],
    )
}

/// Rows express `x_1..x_4` in the `e` basis: `x1 = i e4, x2 = e3,
/// x3 = i(-e2 + e3), x4 = i e1`.
pub fn diamond_e_to_x() -> Matrix {
    let z = Scalar::zero;
    let i = Scalar::i;
    Matrix::from_rows(
        vec![
            vec![z(), z(), z(), i()],
            vec![z(), z(), int(1), z()],
            vec![z(), -i(), i(), z()],
            vec![i(), z(), z(), z()],
        ],
        4,
    )
}

pub fn g54() -> AlgebraSpec {
    lie_from(
        "x",
        5,
        &[
            (1, 2, &[(3, int(1))]),
            (1, 3, &[(4, int(1))]),
            (2, 3, &[(5, int(1))]),
        ],
    )
}

/// `sl2` on `(e, f, h)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> AlgebraSpec {
    sl2_plus_abelian(0)
}

pub fn sl2_plus_abelian(k: usize) -> AlgebraSpec {
    let mut names: Vec<String> = ["e", "f", "h"].iter().map(|s| s.to_string()).collect();
    names.extend((1..=k).map(|i| format!("z{i}")));
    let mut a = AlgebraSpec::new(names, Kind::Lie);
    a.set_antisymmetric(0, 1, &[(2, int(1))]);
    a.set_antisymmetric(2, 0, &[(0, int(2))]);
    a.set_antisymmetric(2, 1, &[(1, int(-2))]);
    a
}

/// `gl(n)` on `E_ij (i != j)` in lexicographic order, then
/// `H_i = E_ii - E_{i+1,i+1}`, then the identity matrix last. The first
/// `n^2 - 1` vectors span `sl(n)`.
pub fn gl(n: usize) -> AlgebraSpec {
    assert!(n >= 1, "gl(0) is empty");
    let dim = n * n;
    let mut basis: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
    let mut names = Vec::with_capacity(dim);
    let unit = |i: usize, j: usize| {
        let mut m = vec![Scalar::zero(); dim];
        m[i * n + j] = int(1);
        m
    };
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(i, j));
                names.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut m = unit(i, i);
        m[(i + 1) * n + i + 1] = int(-1);
        basis.push(m);
        names.push(format!("H{}", i + 1));
    }
    basis.push((0..dim).map(|k| if k % (n + 1) == 0 { int(1) } else { Scalar::zero() }).collect());
    names.push("I".to_string());

    let coords = Matrix::from_rows(basis.clone(), dim)
        .inverse()
        .expect("gl(n) basis is invertible");
    let matmul = |a: &[Scalar], b: &[Scalar]| {
        let mut out = vec![Scalar::zero(); dim];
        for i in 0..n {
            for k in 0..n {
                let x = &a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &b[k * n + j];
                    if !y.is_zero() {
                        out[i * n + j] += &(x * y);
                    }
                }
            }
        }
        out
    };
    let mut a = AlgebraSpec::new(names, Kind::Lie);
    for p in 0..dim {
        for q in 0..dim {
            let ab = matmul(&basis[p], &basis[q]);
            let ba = matmul(&basis[q], &basis[p]);
            let comm: Vec<Scalar> = ab.iter().zip(&ba).map(|(x, y)| x - y).collect();
            for r in 0..dim {
                let mut acc = Scalar::zero();
                for (k, v) in comm.iter().enumerate() {
                    if !v.is_zero() {
                        acc += &(v * coords.get(k, r));
                    }
                }
                a.set(p, q, r, acc);
            }
        }
    }
    a
}

fn parse_call(name: &str) -> (String, Vec<usize>, bool) {
    let name = name.trim();
    match name.split_once('(') {
        Some((head, rest)) => {
            let Some(args) = rest.strip_suffix(')') else {
                return (head.to_string(), vec![], false);
            };
            let parsed: std::result::Result<Vec<usize>, _> =
                args.split(',').map(|a| a.trim().parse::<usize>()).collect();
            match parsed {
                Ok(v) => (head.to_string(), v, true),
                Err(_) => (head.to_string(), vec![], false),
            }
        }
        None => (name.to_string(), vec![], true),
    }
}

/// Catalog lookup, e.g. `catalog("heisenberg", &[2])`. The name may also
/// carry its parameters inline: `catalog("gl(3)", &[])`.
pub fn catalog(name: &str, params: &[usize]) -> Result<AlgebraSpec> {
    let (head, mut args, ok) = parse_call(name);
    let unknown = || Error::UnknownAlgebra {
        name: name.to_string(),
        known: CATALOG_NAMES.join(", "),
    };
    if !ok {
        return Err(unknown());
    }
    args.extend_from_slice(params);
    let one = |args: &[usize], min: usize| match args {
        [n] if *n >= min => Ok(*n),
        _ => Err(unknown()),
    };
    let none = |args: &[usize]| if args.is_empty() { Ok(()) } else { Err(unknown()) };
    match head.as_str() {
        "abelian" => Ok(abelian(one(&args, 1)?)),
        "heisenberg" => Ok(heisenberg(one(&args, 1)?)),
        "diamond_x" => none(&args).map(|_| diamond_x()),
        "diamond_e" => none(&args).map(|_| diamond_e()),
        "g54" => none(&args).map(|_| g54()),
        "gl" => Ok(gl(one(&args, 1)?)),
        "sl2" => none(&args).map(|_| sl2()),
        "sl2_plus_abelian" => Ok(sl2_plus_abelian(one(&args, 0)?)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_report() {
        let r = abelian(3).validate();
        assert!(r.is_antisymmetric && r.is_jacobi && r.is_leibniz);
        assert_eq!(r.center, Subspace::full(3));
        assert!(r.derived.is_zero());
        assert_eq!((r.p, r.c), (3, 3));
    }

    #[test]
    fn diamond_x_report() {
        let r = diamond_x().validate();
        assert!(r.claim_holds);
        let x4 = vec![int(0), int(0), int(0), int(1)];
        assert_eq!(r.center, Subspace::span(4, &[x4]));
        assert_eq!((r.p, r.c), (1, 1));
    }

    #[test]
    fn heisenberg_invariants() {
        for n in 1..=4 {
            let r = heisenberg(n).validate();
            assert!(r.claim_holds);
            assert_eq!((r.c, r.p), (1, 2 * n));
        }
        let h1 = heisenberg(1);
        assert_eq!(h1.dim(), 3);
        assert_eq!(h1.nonzero_brackets().len(), 2);
        assert_eq!(h1.bracket_basis(0, 1), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn diamond_e_brackets() {
        let d = diamond_e();
        assert_eq!(d.bracket_basis(2, 3), &[int(0), int(1), int(-1), int(0)]);
        assert_eq!(d.bracket_basis(3, 2), &[int(0), int(-1), int(1), int(0)]);
    }

    #[test]
    fn diamond_basis_change() {
        let x = diamond_e().change_basis(&diamond_e_to_x()).unwrap();
        assert_eq!(x.tensor(), diamond_x().tensor());
    }

    #[test]
    fn gl2_identity_last_and_central() {
        let g = gl(2);
        assert_eq!(g.dim(), 4);
        let r = g.validate();
        assert!(r.claim_holds);
        let id = vec![int(0), int(0), int(0), int(1)];
        assert_eq!(r.center, Subspace::span(4, &[id]));
        assert_eq!(r.derived.dim(), 3);
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(catalog("heisenberg", &[1]).unwrap(), heisenberg(1));
        assert_eq!(catalog("gl(3)", &[]).unwrap().dim(), 9);
        assert_eq!(catalog("sl2_plus_abelian(2)", &[]).unwrap().dim(), 5);
        match catalog("so3", &[]) {
            Err(Error::UnknownAlgebra { known, .. }) => assert!(known.contains("diamond_e")),
            other => panic!("{other:?}"),
        }
        assert!(catalog("g54", &[2]).is_err());
    }

    #[test]
    fn catalog_lie_entries_validate() {
        for a in [
            abelian(2),
            heisenberg(2),
            diamond_x(),
            diamond_e(),
            g54(),
            gl(2),
            gl(3),
            sl2(),
            sl2_plus_abelian(2),
        ] {
            let r = a.validate();
            assert!(r.is_antisymmetric && r.is_jacobi && r.is_leibniz, "{:?}", a.names());
        }
    }

    #[test]
    fn broken_jacobi_is_reported_not_raised() {
        let mut a = heisenberg(1);
        a.set_antisymmetric(0, 2, &[(0, int(1))]);
        a.set_antisymmetric(1, 2, &[(0, int(1))]);
        let r = a.validate();
        assert!(r.is_antisymmetric);
        assert!(!r.is_jacobi);
        assert!(!r.claim_holds);
    }

    #[test]
    fn singular_change_of_basis() {
        assert_eq!(
            g54().change_basis(&Matrix::zeros(5, 5)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn document_round_trip() {
        let d = diamond_e();
        assert_eq!(AlgebraSpec::from_document(&d.to_document()).unwrap(), d);
        let mut doc = d.to_document();
        doc.brackets[0].left = "q".into();
        let err = AlgebraSpec::from_document(&doc).unwrap_err();
        assert!(err.to_string().contains("brackets[0].left"), "{err}");
    }
}
