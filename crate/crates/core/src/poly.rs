//! Multivariate polynomials over `Scalar` in named parameters, algebras whose
//! structure constants are such polynomials, and exact identity checks.
//!
//! Monomials are exponent vectors indexed by parameter position. They are
//! ordered by total degree, then lexicographically with higher powers of
//! earlier parameters first (`t^2 < t*s < s^2` for parameters `t, s`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, Kind};
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.exps.len()).all(|i| self.exp(i) <= other.exp(i))
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            let n = other.exps.len();
            Monomial::new((0..n).map(|i| other.exp(i) - self.exp(i)).collect())
        })
    }

    /// All monomials of total degree `deg` in `nvars` variables, in order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(i: usize, nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial::new(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(i + 1, nvars, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if deg == 0 { vec![Monomial::one()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(0, nvars, deg, &mut Vec::new(), &mut out);
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Parses `t^2*s`, `ts^2u` or `1`, matching the longest parameter name
    /// at each step.
    pub fn parse(text: &str, names: &[String]) -> Result<Monomial> {
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if t == "1" {
            return Ok(Monomial::one());
        }
        if t.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut exps = vec![0u32; names.len()];
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (idx, name) = names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .ok_or_else(|| Error::NonMonomialGenerator(text.to_string()))?;
            rest = &rest[name.len()..];
            let mut e = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
                e = digits
                    .parse()
                    .map_err(|_| Error::NonMonomialGenerator(text.to_string()))?;
                rest = &r[digits.len()..];
            }
            exps[idx] += e;
        }
        Ok(Monomial::new(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyScalar {
    terms: BTreeMap<Monomial, Scalar>,
}

impl PolyScalar {
    pub fn zero() -> Self {
        PolyScalar::default()
    }

    pub fn constant(c: Scalar) -> Self {
        PolyScalar::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        PolyScalar::term(Monomial::var(i), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = PolyScalar::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyScalar {
        PolyScalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &PolyScalar) -> PolyScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyScalar) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, e: u32) -> PolyScalar {
        (0..e).fold(PolyScalar::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    v *= &values[i];
                }
            }
            total += &v;
        }
        total
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let (neg, body) = if c.is_real() {
                let neg = c.re() < &num_rational::BigRational::zero();
                let abs = if neg { -c } else { c.clone() };
                let body = if m.is_one() {
                    abs.to_string()
                } else if abs.is_one() {
                    m.display(names)
                } else {
                    format!("{}*{}", abs, m.display(names))
                };
                (neg, body)
            } else if m.is_one() {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{}", m.display(names)))
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }

    /// Parses an expression in the given parameters: `+ - * / ^`,
    /// parentheses, integer constants and `i`.
    pub fn parse(text: &str, names: &[String]) -> Result<PolyScalar> {
        let mut p = Parser {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            names,
            src: text,
        };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PolyScalar> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyScalar> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                '/' => {
                    self.pos += 1;
                    let den = self.number()?;
                    let inv = den.inv().map_err(|_| self.error("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<PolyScalar> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            let e: u32 = e
                .to_string()
                .parse()
                .map_err(|_| self.error("exponent must be a non-negative integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<Scalar> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
    }

    fn atom(&mut self) -> Result<PolyScalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('-') => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyScalar::constant(self.number()?)),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .map_or(false, |c| c.is_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let ident: String = self.chars[start..self.pos].iter().collect();
                if let Some(i) = self.names.iter().position(|n| *n == ident) {
                    Ok(PolyScalar::var(i))
                } else if ident == "i" {
                    Ok(PolyScalar::constant(Scalar::i()))
                } else {
                    self.pos = start;
                    Err(self.error(&format!("unknown parameter `{ident}`")))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// An algebra whose structure constants are polynomials in named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamAlgebra {
    names: Vec<String>,
    params: Vec<String>,
    kind: Kind,
    c: Vec<PolyScalar>,
}

/// One nonzero component of an identity defect: inputs `(x, y, z)`, output
/// basis index and the polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectEntry {
    pub inputs: [usize; 3],
    pub output: usize,
    pub poly: PolyScalar,
}

impl ParamAlgebra {
    pub fn new(names: Vec<String>, params: Vec<String>, kind: Kind) -> Self {
        let n = names.len();
        ParamAlgebra {
            names,
            params,
            kind,
            c: vec![PolyScalar::zero(); n * n * n],
        }
    }

    pub fn with_prefix(prefix: &str, n: usize, params: &[&str], kind: Kind) -> Self {
        ParamAlgebra::new(
            (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            params.iter().map(|s| s.to_string()).collect(),
            kind,
        )
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &PolyScalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: PolyScalar) {
        let n = self.dim();
        self.c[(i * n + j) * n + k] = v;
    }

    pub fn poly(&self, expr: &str) -> Result<PolyScalar> {
        PolyScalar::parse(expr, &self.params)
    }

    /// Sets `[e_i, e_j]` from `(k, expression)` pairs, 0-based.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[(usize, &str)]) -> Result<()> {
        for (k, e) in value {
            let p = self.poly(e)?;
            self.set(i, j, *k, p);
        }
        Ok(())
    }

    /// Sets `[e_i, e_j]` and `[e_j, e_i] = -[e_i, e_j]`.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, value: &[(usize, &str)]) -> Result<()> {
        for (k, e) in value {
            let p = self.poly(e)?;
            self.set(j, i, *k, p.neg());
            self.set(i, j, *k, p);
        }
        Ok(())
    }

    fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, &PolyScalar)> {
        (0..self.dim())
            .map(|k| (k, self.get(i, j, k)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    /// `[[e_i, e_j], e_k]` as coordinates.
    fn left_nested(&self, i: usize, j: usize, k: usize) -> Vec<PolyScalar> {
        let mut out = vec![PolyScalar::zero(); self.dim()];
        for (a, p) in self.bracket_basis(i, j) {
            for (b, q) in self.bracket_basis(a, k) {
                out[b] = out[b].add(&p.mul(q));
            }
        }
        out
    }

    /// `[e_i, [e_j, e_k]]` as coordinates.
    fn right_nested(&self, i: usize, j: usize, k: usize) -> Vec<PolyScalar> {
        let mut out = vec![PolyScalar::zero(); self.dim()];
        for (a, p) in self.bracket_basis(j, k) {
            for (b, q) in self.bracket_basis(i, a) {
                out[b] = out[b].add(&p.mul(q));
            }
        }
        out
    }

    fn collect_defect<F>(&self, f: F) -> Vec<DefectEntry>
    where
        F: Fn(usize, usize, usize) -> Vec<PolyScalar>,
    {
        let n = self.dim();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for (k, poly) in f(x, y, z).into_iter().enumerate() {
                        if !poly.is_zero() {
                            out.push(DefectEntry {
                                inputs: [x, y, z],
                                output: k,
                                poly,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Nonzero components of `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_defect(&self) -> Vec<DefectEntry> {
        self.collect_defect(|x, y, z| {
            let a = self.left_nested(x, y, z);
            let b = self.left_nested(y, z, x);
            let c = self.left_nested(z, x, y);
            a.iter()
                .zip(&b)
                .zip(&c)
                .map(|((a, b), c)| a.add(b).add(c))
                .collect()
        })
    }

    /// Nonzero components of `[[x,y],z] - [[x,z],y] - [x,[y,z]]`.
    pub fn leibniz_defect_sym(&self) -> Vec<DefectEntry> {
        self.collect_defect(|x, y, z| {
            let a = self.left_nested(x, y, z);
            let b = self.left_nested(x, z, y);
            let c = self.right_nested(x, y, z);
            a.iter()
                .zip(&b)
                .zip(&c)
                .map(|((a, b), c)| a.sub(b).sub(c))
                .collect()
        })
    }

    /// Pairs `(i, j, k)` where `[e_i,e_j] + [e_j,e_i]` has a nonzero component.
    pub fn antisymmetry_defect(&self) -> Vec<(usize, usize, usize, PolyScalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let p = self.get(i, j, k).add(self.get(j, i, k));
                    if !p.is_zero() {
                        out.push((i, j, k, p));
                    }
                }
            }
        }
        out
    }

    pub fn specialize(&self, assignment: &HashMap<String, Scalar>) -> Result<AlgebraSpec> {
        let values = self
            .params
            .iter()
            .map(|p| {
                assignment
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::MissingParameter(p.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraSpec::from_tensor(
            self.names.clone(),
            self.kind,
            self.c.iter().map(|p| p.eval(&values)).collect(),
        )
    }

    /// Splits `Σ_m m·μ_m` into its coefficient algebras, keyed by monomial.
    pub fn coefficient_tensors(&self) -> BTreeMap<Monomial, Vec<Scalar>> {
        let mut out: BTreeMap<Monomial, Vec<Scalar>> = BTreeMap::new();
        let len = self.c.len();
        for (idx, p) in self.c.iter().enumerate() {
            for (m, c) in p.terms() {
                out.entry(m.clone())
                    .or_insert_with(|| vec![Scalar::zero(); len])[idx] = c.clone();
            }
        }
        out
    }

    pub fn to_document(&self) -> ParamAlgebraDoc {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let value: Vec<ParamTermDoc> = (0..n)
                    .filter(|k| !self.get(i, j, *k).is_zero())
                    .map(|k| ParamTermDoc {
                        basis: self.names[k].clone(),
                        coeff: self.get(i, j, k).display(&self.params),
                    })
                    .collect();
                if !value.is_empty() {
                    brackets.push(ParamBracketDoc {
                        left: self.names[i].clone(),
                        right: self.names[j].clone(),
                        value,
                    });
                }
            }
        }
        ParamAlgebraDoc {
            dim: n,
            kind: self.kind,
            params: self.params.clone(),
            basis: self.names.clone(),
            brackets,
        }
    }

    pub fn from_document(doc: &ParamAlgebraDoc) -> Result<ParamAlgebra> {
        if doc.basis.len() != doc.dim {
            return Err(Error::Parse(format!(
                "field `basis`: {} names for dim {}",
                doc.basis.len(),
                doc.dim
            )));
        }
        let mut pa = ParamAlgebra::new(doc.basis.clone(), doc.params.clone(), doc.kind);
        let lookup = |field: String, name: &str| {
            doc.basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::Parse(format!("field `{field}`: unknown basis name `{name}`")))
        };
        for (bi, b) in doc.brackets.iter().enumerate() {
            let i = lookup(format!("brackets[{bi}].left"), &b.left)?;
            let j = lookup(format!("brackets[{bi}].right"), &b.right)?;
            for (ti, t) in b.value.iter().enumerate() {
                let k = lookup(format!("brackets[{bi}].value[{ti}].basis"), &t.basis)?;
                let p = PolyScalar::parse(&t.coeff, &doc.params).map_err(|e| {
                    Error::Parse(format!("field `brackets[{bi}].value[{ti}].coeff`: {e}"))
                })?;
                let sum = pa.get(i, j, k).add(&p);
                pa.set(i, j, k, sum);
            }
        }
        Ok(pa)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamAlgebraDoc {
    pub dim: usize,
    pub kind: Kind,
    pub params: Vec<String>,
    pub basis: Vec<String>,
    pub brackets: Vec<ParamBracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamBracketDoc {
    pub left: String,
    pub right: String,
    pub value: Vec<ParamTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamTermDoc {
    pub basis: String,
    pub coeff: String,
}

fn lie_family(prefix: &str, n: usize, params: &[&str], rels: &[(usize, usize, &[(usize, &str)])]) -> ParamAlgebra {
    let mut pa = ParamAlgebra::with_prefix(prefix, n, params, Kind::Lie);
    for (i, j, v) in rels {
        let v: Vec<(usize, &str)> = v.iter().map(|(k, e)| (k - 1, *e)).collect();
        pa.set_antisymmetric(i - 1, j - 1, &v).expect("family expressions parse");
    }
    pa
}

pub const FAMILY_NAMES: &[&str] = &[
    "diamond_lambda_mu",
    "sl2_plus_c",
    "g54_family1",
    "g54_family2",
    "g54_family3",
    "g54_family4",
    "g54_family5",
    "diamond_versal",
];

/// `d(λ,μ)`: `[e2,e3] = e1`, `[e2,e4] = λe2`, `[e3,e4] = e2 + μe3`,
/// `[e1,e4] = (λ+μ)e1`.
pub fn diamond_family() -> ParamAlgebra {
    lie_family(
        "e",
        4,
        &["lambda", "mu"],
        &[
            (2, 3, &[(1, "1")]),
            (2, 4, &[(2, "lambda")]),
            (3, 4, &[(2, "1"), (3, "mu")]),
            (1, 4, &[(1, "lambda+mu")]),
        ],
    )
}

/// `[e2,e3] = e1 + t·e4`, `[e2,e4] = e2`, `[e3,e4] = e2 - e3`.
pub fn sl2_plus_c_family() -> ParamAlgebra {
    lie_family(
        "e",
        4,
        &["t"],
        &[
            (2, 3, &[(1, "1"), (4, "t")]),
            (2, 4, &[(2, "1")]),
            (3, 4, &[(2, "1"), (3, "-1")]),
        ],
    )
}

pub fn g54_family(n: usize) -> Option<ParamAlgebra> {
    let fam = match n {
        1 => lie_family(
            "x",
            5,
            &["p", "q", "r"],
            &[
                (3, 4, &[(2, "1")]),
                (1, 5, &[(1, "r")]),
                (2, 5, &[(2, "p+q")]),
                (3, 5, &[(3, "p"), (1, "1")]),
                (4, 5, &[(3, "1"), (4, "q")]),
            ],
        ),
        2 => lie_family(
            "x",
            5,
            &[],
            &[
                (3, 4, &[(4, "2")]),
                (3, 5, &[(5, "-2")]),
                (4, 5, &[(3, "1")]),
                (1, 2, &[(1, "1")]),
            ],
        ),
        3 => lie_family(
            "x",
            5,
            &[],
            &[
                (3, 4, &[(4, "2")]),
                (3, 5, &[(5, "-2")]),
                (4, 5, &[(3, "1")]),
                (1, 3, &[(1, "1")]),
                (2, 5, &[(1, "1")]),
                (2, 3, &[(2, "-1")]),
                (1, 4, &[(2, "1")]),
            ],
        ),
        4 => lie_family(
            "x",
            5,
            &["p", "q"],
            &[
                (2, 5, &[(1, "1"), (2, "p")]),
                (3, 5, &[(2, "1"), (3, "q")]),
                (4, 5, &[(3, "1"), (4, "p+q")]),
                (1, 5, &[(1, "p+q")]),
                (2, 3, &[(1, "p*q")]),
                (2, 4, &[(1, "q")]),
                (3, 4, &[(1, "1")]),
            ],
        ),
        5 => lie_family(
            "x",
            5,
            &["p", "q"],
            &[
                (3, 4, &[(2, "1")]),
                (2, 5, &[(2, "p+q")]),
                (3, 5, &[(1, "1"), (3, "p")]),
                (4, 5, &[(3, "1"), (4, "q")]),
                (1, 5, &[(1, "q+2*p")]),
                (2, 3, &[(1, "p-q")]),
                (2, 4, &[(1, "1")]),
            ],
        ),
        _ => return None,
    };
    Some(fam)
}

/// Four-parameter Leibniz deformation of the diamond in the `e` basis.
pub fn diamond_versal() -> ParamAlgebra {
    let mut pa = ParamAlgebra::with_prefix("e", 4, &["t", "s", "u", "w"], Kind::Leibniz);
    let rels: &[(usize, usize, &[(usize, &str)])] = &[
        (1, 4, &[(1, "t")]),
        (4, 1, &[(1, "-(t+u)")]),
        (2, 3, &[(1, "1"), (4, "s")]),
        (3, 2, &[(1, "u-1"), (4, "-s")]),
        (2, 4, &[(2, "1")]),
        (4, 2, &[(2, "-1")]),
        (3, 4, &[(2, "1"), (3, "t-1")]),
        (4, 3, &[(2, "-1"), (3, "1-t")]),
        (3, 3, &[(1, "1/2*u")]),
        (4, 4, &[(1, "w")]),
    ];
    for (i, j, v) in rels {
        let v: Vec<(usize, &str)> = v.iter().map(|(k, e)| (k - 1, *e)).collect();
        pa.set_bracket(i - 1, j - 1, &v).expect("versal expressions parse");
    }
    pa
}

pub fn family(name: &str) -> Result<ParamAlgebra> {
    match name {
        "diamond_lambda_mu" => Ok(diamond_family()),
        "sl2_plus_c" => Ok(sl2_plus_c_family()),
        "diamond_versal" => Ok(diamond_versal()),
        _ => name
            .strip_prefix("g54_family")
            .and_then(|n| n.parse().ok())
            .and_then(g54_family)
            .ok_or_else(|| Error::UnknownAlgebra {
                name: name.to_string(),
                known: FAMILY_NAMES.join(", "),
            }),
    }
}

/// True when every monomial of `p` is divisible by some generator.
pub fn in_monomial_ideal(p: &PolyScalar, generators: &[Monomial]) -> bool {
    p.terms()
        .all(|(m, _)| generators.iter().any(|g| g.divides(m)))
}
