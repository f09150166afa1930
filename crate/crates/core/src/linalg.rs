//! Exact dense matrices and RREF-canonical subspaces over [`Scalar`].
//!
//! Elimination runs on sparse rows internally: coboundary matrices have a
//! handful of nonzeros per row, and keeping the rows sparse avoids touching
//! the many zero entries of a dense grid.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn from_sparse_rows(rows: &[SparseRow], cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn sparse_row(&self, i: usize) -> SparseRow {
        to_sparse(self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut red = RowReducer::new(2 * n);
        for i in 0..n {
            let mut row = to_sparse(self.row(i));
            row.push((n + i, Scalar::one()));
            red.insert(row);
        }
        let (rows, pivots) = red.into_rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                if *j >= n {
                    inv.set(i, j - n, v.clone());
                }
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Scalar)], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (j, x) in v {
        out[*j] = x.clone();
    }
    out
}

fn sparse_get(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

/// `a - f * b` on sparse rows.
fn sub_scaled(a: &[(usize, Scalar)], f: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - &(f * &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(f * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental Gauss-Jordan elimination that keeps its rows in reduced row
/// echelon form after every insertion.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    rows: Vec<SparseRow>,
    // pivot column -> index into `rows`
    pivot_row: Vec<Option<usize>>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Normal form of `row` modulo the current row space: zero in every
    /// pivot column.
    pub fn reduce(&self, row: &[(usize, Scalar)]) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row[*c].map(|r| (r, v.clone())))
            .collect();
        let mut out = row.to_vec();
        // Pivot rows are zero in every other pivot column, so the pivot
        // entries of `row` are exactly the multipliers.
        for (r, f) in hits {
            out = sub_scaled(&out, &f, &self.rows[r]);
        }
        out
    }

    /// Adds a row; returns whether it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(&row);
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero lead");
            for e in r.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        for existing in self.rows.iter_mut() {
            if let Some(f) = sparse_get(existing, p).cloned() {
                *existing = sub_scaled(existing, &f, &r);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Rows sorted by pivot column, and the pivot columns.
    pub fn into_rref(self) -> (Vec<SparseRow>, Vec<usize>) {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let pivots = rows.iter().map(|r| r[0].0).collect();
        (rows, pivots)
    }

    pub fn rref_rows(&self) -> (Vec<SparseRow>, Vec<usize>) {
        self.clone().into_rref()
    }
}

/// Unique reduced row echelon form of `m`, its pivot columns and rank.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>, usize) {
    let mut red = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        red.insert(m.sparse_row(i));
    }
    let (rows, pivots) = red.into_rref();
    let rank = rows.len();
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row {
            out.set(i, *j, v.clone());
        }
    }
    (out, pivots, rank)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).2
}

/// Subspace of `Scalar^ambient` stored as its RREF basis.
///
/// Two subspaces are equal exactly when their RREF bases are identical, so
/// the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vec![(i, Scalar::one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_reducer(red: RowReducer) -> Self {
        let ambient = red.ncols();
        let (basis, pivots) = red.into_rref();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn span_sparse<I: IntoIterator<Item = SparseRow>>(ambient: usize, vecs: I) -> Self {
        let mut red = RowReducer::new(ambient);
        for v in vecs {
            red.insert(v);
        }
        Subspace::from_reducer(red)
    }

    pub fn span(ambient: usize, vecs: &[Vec<Scalar>]) -> Self {
        for v in vecs {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        Subspace::span_sparse(ambient, vecs.iter().map(|v| to_sparse(v)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sparse_basis(&self) -> &[SparseRow] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.iter().map(|r| to_dense(r, self.ambient)).collect()
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_sparse_rows(&self.basis, self.ambient)
    }

    fn reducer(&self) -> RowReducer {
        let mut pivot_row = vec![None; self.ambient];
        for (i, p) in self.pivots.iter().enumerate() {
            pivot_row[*p] = Some(i);
        }
        RowReducer {
            ncols: self.ambient,
            rows: self.basis.clone(),
            pivot_row,
        }
    }

    /// Canonical remainder of `v` modulo this subspace (zero in every pivot
    /// column). Two vectors are congruent iff their remainders agree.
    pub fn reduce_sparse(&self, v: &[(usize, Scalar)]) -> SparseRow {
        let mut out = v.to_vec();
        for (c, f) in v {
            if let Ok(k) = self.pivots.binary_search(c) {
                out = sub_scaled(&out, f, &self.basis[k]);
            }
        }
        out
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        to_dense(&self.reduce_sparse(&to_sparse(v)), self.ambient)
    }

    pub fn contains_sparse(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce_sparse(v).is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.contains_sparse(&to_sparse(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains_sparse(b))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut red = self.reducer();
        for b in &other.basis {
            red.insert(b.clone());
        }
        Ok(Subspace::from_reducer(red))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: a relation
    /// `sum a_i x_i = sum b_j y_j` gives the common vector `sum a_i x_i`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let k = self.dim();
        let l = other.dim();
        // Columns of the stacked system are coefficient slots; rows are
        // ambient coordinates.
        let mut cols: Vec<SparseRow> = vec![Vec::new(); self.ambient];
        for (i, b) in self.basis.iter().enumerate() {
            for (c, v) in b {
                cols[*c].push((i, v.clone()));
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for (c, v) in b {
                cols[*c].push((k + j, -v));
            }
        }
        let relations = kernel_of_rows(cols.into_iter(), k + l);
        let vecs = relations.basis.iter().map(|rel| {
            let mut acc: SparseRow = Vec::new();
            for (slot, coeff) in rel.iter().filter(|(s, _)| *s < k) {
                acc = sub_scaled(&acc, &(-coeff), &self.basis[*slot]);
            }
            acc
        });
        Ok(Subspace::span_sparse(self.ambient, vecs))
    }

    /// `dim self - dim sub`, after checking `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        self.check_ambient(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Vectors of `self` whose classes form a basis of `self / sub`: the RREF
    /// of the remainders of `self`'s basis modulo `sub`.
    pub fn quotient_reps(&self, sub: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        Ok(self
            .quotient_reps_sparse(sub)?
            .iter()
            .map(|r| to_dense(r, self.ambient))
            .collect())
    }

    pub fn quotient_reps_sparse(&self, sub: &Subspace) -> Result<Vec<SparseRow>> {
        self.quotient_dim(sub)?;
        let rem = Subspace::span_sparse(
            self.ambient,
            self.basis.iter().map(|b| sub.reduce_sparse(b)),
        );
        debug_assert_eq!(rem.dim(), self.dim() - sub.dim());
        Ok(rem.basis)
    }

    /// The subspace as a set of remainders modulo `sub` (canonical class
    /// representatives). Does not require containment.
    pub fn modulo(&self, sub: &Subspace) -> Subspace {
        Subspace::span_sparse(
            self.ambient,
            self.basis.iter().map(|b| sub.reduce_sparse(b)),
        )
    }

    /// Image under a linear map given by its action on sparse vectors.
    pub fn map<F>(&self, target_dim: usize, f: F) -> Subspace
    where
        F: Fn(&SparseRow) -> SparseRow,
    {
        Subspace::span_sparse(target_dim, self.basis.iter().map(f))
    }
}

/// Kernel of the matrix whose rows are given sparsely.
pub fn kernel_of_rows<I: Iterator<Item = SparseRow>>(rows: I, ncols: usize) -> Subspace {
    let mut red = RowReducer::new(ncols);
    for r in rows {
        red.insert(r);
    }
    kernel_from_reducer(red)
}

pub fn kernel_from_reducer(red: RowReducer) -> Subspace {
    let ncols = red.ncols();
    let (rows, pivots) = red.into_rref();
    let mut is_pivot = vec![false; ncols];
    for p in &pivots {
        is_pivot[*p] = true;
    }
    // Column-wise view of the non-pivot entries.
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().skip(1) {
            by_free[*c].push((pivots[r], -v));
        }
    }
    let vecs = (0..ncols).filter(|c| !is_pivot[*c]).map(|f| {
        let mut v = std::mem::take(&mut by_free[f]);
        v.push((f, Scalar::one()));
        v.sort_by_key(|e| e.0);
        v
    });
    let vecs: Vec<SparseRow> = vecs.collect();
    Subspace::span_sparse(ncols, vecs)
}

pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rows((0..m.rows()).map(|i| m.sparse_row(i)), m.cols())
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    let t = m.transpose();
    Subspace::span_sparse(m.rows(), (0..t.rows()).map(|i| t.sparse_row(i)))
}

/// The particular solution of `m x = rhs` whose free coordinates are zero,
/// read off the RREF of `[m | rhs]`; `None` if the system is inconsistent.
pub fn solve_particular(m: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(rhs.len(), m.rows(), "rhs length mismatch");
    let n = m.cols();
    let mut red = RowReducer::new(n + 1);
    for i in 0..m.rows() {
        let mut row = m.sparse_row(i);
        if !rhs[i].is_zero() {
            row.push((n, rhs[i].clone()));
        }
        red.insert(row);
    }
    let (rows, pivots) = red.into_rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, p) in rows.iter().zip(&pivots) {
        if let Some((c, v)) = row.last() {
            if *c == n {
                x[*p] = v.clone();
            }
        }
    }
    Some(x)
}

/// Repeated [`solve_particular`] against a fixed matrix given by sparse
/// rows. Produces the same solutions, with the elimination done once.
#[derive(Clone, Debug)]
pub struct ParticularSolver {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
    // rref rows of [m | I] restricted to pivots inside m
    transform: Vec<(usize, SparseRow)>,
    image: Subspace,
}

impl ParticularSolver {
    pub fn new(rows: Vec<SparseRow>, ncols: usize) -> Self {
        let nrows = rows.len();
        let mut red = RowReducer::new(ncols + nrows);
        for (i, r) in rows.iter().enumerate() {
            let mut aug = r.clone();
            aug.push((ncols + i, Scalar::one()));
            red.insert(aug);
        }
        let (rref_rows, pivots) = red.into_rref();
        let transform: Vec<(usize, SparseRow)> = rref_rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p < ncols)
            .map(|(row, p)| {
                let t: SparseRow = row
                    .into_iter()
                    .filter(|(c, _)| *c >= ncols)
                    .map(|(c, v)| (c - ncols, v))
                    .collect();
                (p, t)
            })
            .collect();
        // Column space, for membership tests.
        let mut cols: Vec<SparseRow> = vec![Vec::new(); ncols];
        for (i, r) in rows.iter().enumerate() {
            for (c, v) in r {
                cols[*c].push((i, v.clone()));
            }
        }
        let image = Subspace::span_sparse(nrows, cols);
        ParticularSolver {
            nrows,
            ncols,
            rows,
            transform,
            image,
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        ParticularSolver::new((0..m.rows()).map(|i| m.sparse_row(i)).collect(), m.cols())
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn rank(&self) -> usize {
        self.transform.len()
    }

    pub fn apply_sparse(&self, x: &[(usize, Scalar)]) -> SparseRow {
        let dense = to_dense(x, self.ncols);
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (c, v) in r {
                if !dense[*c].is_zero() {
                    acc += &(v * &dense[*c]);
                }
            }
            if !acc.is_zero() {
                out.push((i, acc));
            }
        }
        out
    }

    pub fn solve_sparse(&self, rhs: &[(usize, Scalar)]) -> Option<SparseRow> {
        if !self.image.contains_sparse(rhs) {
            return None;
        }
        let dense = to_dense(rhs, self.nrows);
        let mut x: SparseRow = self
            .transform
            .iter()
            .filter_map(|(p, t)| {
                let mut acc = Scalar::zero();
                for (j, v) in t {
                    if !dense[*j].is_zero() {
                        acc += &(v * &dense[*j]);
                    }
                }
                (!acc.is_zero()).then_some((*p, acc))
            })
            .collect();
        x.sort_by_key(|e| e.0);
        Some(x)
    }

    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.nrows, "rhs length mismatch");
        self.solve_sparse(&to_sparse(rhs))
            .map(|x| to_dense(&x, self.ncols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p, k) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(k, 3);

        let (r, p, k) = rref(&Matrix::zeros(2, 5));
        assert!(r.is_zero());
        assert!(p.is_empty());
        assert_eq!(k, 0);

        let (r, _, k) = rref(&Matrix::from_ints(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(k, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(4)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(3, 3)), Subspace::full(3));
        let k = kernel(&Matrix::from_ints(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(k.basis_vectors(), vec![ints(&[1, -1, 0])]);
    }

    #[test]
    fn image_examples() {
        assert!(image(&Matrix::zeros(3, 2)).is_zero());
        let outer = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[-1, -2, -3]]);
        assert_eq!(image(&outer).dim(), 1);
        assert!(image(&outer).contains(&ints(&[1, 2, -1])));
    }

    #[test]
    fn intersect_examples() {
        let xy = Subspace::span(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let yz = Subspace::span(3, &[ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
        assert_eq!(xy.intersect(&xy).unwrap(), xy);
        assert_eq!(
            xy.intersect(&yz).unwrap(),
            Subspace::span(3, &[ints(&[0, 1, 0])])
        );
        assert!(matches!(
            xy.intersect(&Subspace::full(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotients() {
        let full = Subspace::full(3);
        assert_eq!(full.quotient_dim(&Subspace::zero(3)).unwrap(), 3);
        let line = Subspace::span(3, &[ints(&[1, 1, 0])]);
        let plane = Subspace::span(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let reps = plane.quotient_reps(&line).unwrap();
        assert_eq!(reps, vec![ints(&[0, 1, 0])]);
        let other = Subspace::span(3, &[ints(&[0, 0, 1])]);
        assert_eq!(plane.quotient_dim(&other), Err(Error::NotASubspace));
    }

    #[test]
    fn solve_examples() {
        let rhs = ints(&[3, -1, 4]);
        assert_eq!(solve_particular(&Matrix::identity(3), &rhs), Some(rhs.clone()));
        let m = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve_particular(&m, &ints(&[1, 3])), None);
        // free coordinate set to zero
        assert_eq!(solve_particular(&m, &ints(&[1, 2])), Some(ints(&[1, 0])));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::SingularMatrix)
        );
    }
}
