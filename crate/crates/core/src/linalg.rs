//! Dense exact linear algebra over GF(p^e).
//!
//! Vectors are coordinate rows (`[u32]` slices of raw field elements).
//! A matrix acts on column vectors, so `kernel(m)` is `{v : m v = 0}` and
//! the image of `m` is its column space.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    /// The reduced matrix with zero rows removed.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries
    /// lying in the field.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            if let Some(&bad) = r.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::InvalidField(format!("{bad} is not an element of {field}")));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<R: AsRef<[u32]>>(field: &Field, rows: usize, columns: &[R]) -> Result<Matrix> {
        Ok(Matrix::from_rows(field, rows, columns)?.transpose())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        self.field.ensure_same(&other.field)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let c = self.data[i * self.cols + k];
                if c != 0 {
                    f.axpy(dst, c, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference of different shapes".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Entrywise `x -> x^(p^k)` for a signed `k`.
    pub fn twist(&self, k: i64) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.twist(x, k)).collect(),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            f.scale(m.row_mut(r), inv);
            let pivot_row: Vec<u32> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let x = m.get(i, c);
                    if x != 0 {
                        f.axpy(m.row_mut(i), f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(&self.field, self.cols);
        for row in self.row_iter() {
            e.insert(row.to_vec());
        }
        e.rank()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(&self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else {
                u32::from(j - n == i)
            }
        });
        let red = aug.rref();
        if red.rank < n || red.pivots[n - 1] >= n {
            return Err(Error::DegenerateInput("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(&self.field, n, n, |i, j| red.matrix.get(i, n + j)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let red = self.rref();
        let n = self.cols;
        let f = &self.field;
        let mut is_pivot = vec![false; n];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = f.neg(red.matrix.get(r, free));
            }
            basis.push(v);
        }
        Subspace::span(f, n, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    /// Row space.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }
}

/// Free function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let r = m.rref();
    (r.matrix, r.rank, r.pivots)
}

/// Free function form of [`Matrix::kernel`].
pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// Incremental semi-echelon basis. Each stored row has a leading 1 in its
/// pivot column and zeros in the pivot columns of all earlier rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: &Field, n: usize) -> Echelon {
        Echelon { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; n] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Residue of `v` after eliminating all pivot columns.
    pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                f.axpy(&mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]).expect("nonzero");
        self.field.scale(&mut v, inv);
        self.pivot_row[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(v);
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(&self.field, self.n, &self.rows)
    }
}

/// A subspace of `K^n`, stored as the RREF of a spanning set.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim())?;
        f.debug_list().entries(self.basis.row_iter()).finish()
    }
}

impl Subspace {
    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, n), pivots: Vec::new() }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace { basis: r.matrix, pivots: r.pivots }
    }

    /// Span of the given vectors (each of length `n`).
    pub fn span<R: AsRef<[u32]>>(field: &Field, n: usize, vectors: &[R]) -> Subspace {
        let m = Matrix::from_rows(field, n, vectors).expect("vectors of ambient length");
        Subspace::from_matrix(&m)
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// RREF basis; rows span the subspace.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        self.field().ensure_same(other.field())?;
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    /// Coefficients of `v` in the RREF basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.field();
        let coords: Vec<u32> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (i, &c) in coords.iter().enumerate() {
            f.axpy(&mut r, f.neg(c), self.basis.row(i));
        }
        r.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient_dim() && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.row_iter().all(|r| self.contains(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let n = self.ambient_dim();
        let f = self.field();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis.row_iter() {
            let mut v = r.to_vec();
            v.extend_from_slice(r);
            rows.push(v);
        }
        for r in other.basis.row_iter() {
            let mut v = r.to_vec();
            v.extend(core::iter::repeat_n(0, n));
            rows.push(v);
        }
        let red = Matrix::from_rows(f, 2 * n, &rows)?.rref();
        let inter: Vec<Vec<u32>> = (0..red.rank)
            .filter(|&i| red.pivots[i] >= n)
            .map(|i| red.matrix.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::span(f, n, &inter))
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !self.contains_subspace(sub)? {
            return Err(Error::NotASubspace("quotient by a space that is not contained".into()));
        }
        Ok(self.dim() - sub.dim())
    }

    /// `{w : wᵀ G x = 0 for all x in self}`.
    pub fn orthogonal(&self, gram: &Matrix) -> Result<Subspace> {
        self.check_gram(gram)?;
        // Rows x Gᵀ express the functionals w -> (G x)·w.
        Ok(self.basis.mul(&gram.transpose())?.kernel())
    }

    /// `{w : xᵀ G w = 0 for all x in self}`.
    pub fn orthogonal_right(&self, gram: &Matrix) -> Result<Subspace> {
        self.check_gram(gram)?;
        Ok(self.basis.mul(gram)?.kernel())
    }

    fn check_gram(&self, gram: &Matrix) -> Result<()> {
        self.field().ensure_same(gram.field())?;
        let n = self.ambient_dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "gram is {}x{}, ambient dimension is {n}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(())
    }

    /// `{m v : v in self}` for a matrix with `ambient_dim` columns.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        self.field().ensure_same(m.field())?;
        if m.cols() != self.ambient_dim() {
            return Err(Error::AmbientMismatch(m.cols(), self.ambient_dim()));
        }
        Ok(Subspace::from_matrix(&self.basis.mul(&m.transpose())?))
    }

    /// `{v : m v in self}` for a matrix with `ambient_dim` rows.
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace> {
        self.field().ensure_same(m.field())?;
        if m.rows() != self.ambient_dim() {
            return Err(Error::AmbientMismatch(m.rows(), self.ambient_dim()));
        }
        Ok(self.complement_projector().mul(m)?.kernel())
    }

    /// Linear map `x -> x - Σ x[p_r] b_r` whose kernel is exactly `self`.
    pub fn complement_projector(&self) -> Matrix {
        let n = self.ambient_dim();
        let f = self.field();
        let mut m = Matrix::identity(f, n);
        // column p_r of the identity is e_{p_r}; subtract b_r there.
        for (r, &p) in self.pivots.iter().enumerate() {
            for i in 0..n {
                let b = self.basis.get(r, i);
                if b != 0 {
                    let cur = m.get(i, p);
                    m.set(i, p, f.sub(cur, b));
                }
            }
        }
        m
    }

    /// Indices not used as pivots; the corresponding unit vectors span a
    /// complement of `self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&i| !is_pivot[i]).collect()
    }

    /// Entrywise Frobenius twist of every vector.
    pub fn twist(&self, k: i64) -> Subspace {
        Subspace::from_matrix(&self.basis.twist(k))
    }
}

/// Free function form of the subspace lattice operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    Contains,
    QuotientDim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceOpResult {
    Space(Subspace),
    Bool(bool),
    Dim(usize),
}

pub fn subspace_ops(a: &Subspace, b: &Subspace, op: SubspaceOp) -> Result<SubspaceOpResult> {
    Ok(match op {
        SubspaceOp::Sum => SubspaceOpResult::Space(a.sum(b)?),
        SubspaceOp::Intersect => SubspaceOpResult::Space(a.intersect(b)?),
        SubspaceOp::Contains => SubspaceOpResult::Bool(a.contains_subspace(b)?),
        SubspaceOp::QuotientDim => SubspaceOpResult::Dim(a.quotient_dim(b)?),
    })
}

pub fn orthogonal(v: &Subspace, gram: &Matrix) -> Result<Subspace> {
    v.orthogonal(gram)
}

/// `v -> M σ^k(v)` where `σ` is the Frobenius applied entrywise.
#[derive(Clone, PartialEq, Eq)]
pub struct SemilinearMap {
    matrix: Matrix,
    twist: u32,
}

impl fmt::Debug for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemilinearMap(twist {}) {:?}", self.twist, self.matrix)
    }
}

impl SemilinearMap {
    /// `twist` is reduced modulo the field degree.
    pub fn new(matrix: Matrix, twist: i64) -> Result<SemilinearMap> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("semilinear maps must be endomorphisms".into()));
        }
        let e = matrix.field().degree() as i64;
        Ok(SemilinearMap { twist: twist.rem_euclid(e) as u32, matrix })
    }

    pub fn identity(field: &Field, n: usize) -> SemilinearMap {
        SemilinearMap { matrix: Matrix::identity(field, n), twist: 0 }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let f = self.matrix.field();
        let tv: Vec<u32> = v.iter().map(|&x| f.frobenius(x, self.twist)).collect();
        self.matrix.mul_vec(&tv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SemilinearMap) -> Result<SemilinearMap> {
        // M σ^k (N σ^l v) = M σ^k(N) σ^{k+l} v
        let m = self.matrix.mul(&other.matrix.twist(self.twist as i64))?;
        SemilinearMap::new(m, self.twist as i64 + other.twist as i64)
    }

    pub fn power(&self, n: usize) -> SemilinearMap {
        let mut acc = SemilinearMap::identity(self.matrix.field(), self.dim());
        for _ in 0..n {
            acc = self.compose(&acc).expect("same shape");
        }
        acc
    }

    /// The map `ζ` with `⟨v, f(w)⟩ = σ^k(⟨ζ(v), w⟩)` for `⟨x, y⟩ = xᵀ G y`.
    /// Its twist is `-k`.
    pub fn adjoint(&self, gram: &Matrix) -> Result<SemilinearMap> {
        if gram.rows() != self.dim() || gram.cols() != self.dim() {
            return Err(Error::DimensionMismatch("gram does not match map dimension".into()));
        }
        let gt_inv = gram.transpose().inverse().map_err(|_| Error::SingularGram)?;
        let k = self.twist as i64;
        let gm_t = gram.mul(&self.matrix)?.transpose().twist(-k);
        SemilinearMap::new(gt_inv.mul(&gm_t)?, -k)
    }

    /// `{v : f(v) = 0}`, which is `σ^{-k}(ker M)`.
    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel().twist(-(self.twist as i64))
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }
}

pub fn semilinear_power(f: &SemilinearMap, n: usize) -> SemilinearMap {
    f.power(n)
}

pub fn semilinear_adjoint(f: &SemilinearMap, gram: &Matrix) -> Result<SemilinearMap> {
    f.adjoint(gram)
}

/// Shrinks `basis` to a basis of `{x in span(basis) : op(x) = 0}` for a
/// linear `op`. Intersecting many kernels this way stays cheap once the
/// running space becomes small.
pub fn refine_kernel(field: &Field, basis: Vec<Vec<u32>>, op: impl Fn(&[u32]) -> Vec<u32>) -> Vec<Vec<u32>> {
    if basis.is_empty() {
        return basis;
    }
    let images: Vec<Vec<u32>> = basis.iter().map(|b| op(b)).collect();
    let m = images[0].len();
    if images.iter().all(|y| y.iter().all(|&x| x == 0)) {
        return basis;
    }
    let n = basis[0].len();
    let coeffs = Matrix::from_columns(field, m, &images).expect("images share a length").kernel();
    coeffs
        .basis()
        .row_iter()
        .map(|c| {
            let mut v = vec![0; n];
            for (ci, b) in c.iter().zip(&basis) {
                field.axpy(&mut v, *ci, b);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, e: u32) -> Field {
        Field::default_for(p, e).unwrap()
    }

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, cols, rows).unwrap()
    }

    fn all_vectors(f: &Field, n: usize) -> Vec<Vec<u32>> {
        let q = f.order() as usize;
        (0..q.pow(n as u32))
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let c = (x % q) as u32;
                        x /= q;
                        c
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rref_examples() {
        let f = gf(2, 1);
        let id = Matrix::identity(&f, 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(z.rref().rank, 0);
        let r = m(&f, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2, 1);
        assert!(Matrix::identity(&f, 3).kernel().is_zero());
        assert!(Matrix::zeros(&f, 2, 4).kernel().is_full());
        let k = m(&f, &[&[1, 1]]).kernel();
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn intersection_example() {
        let f = gf(2, 1);
        let a = Subspace::span(&f, 2, &[[1, 0]]);
        let b = Subspace::span(&f, 2, &[[1, 1]]);
        assert!(a.intersect(&b).unwrap().is_zero());
        let full = Subspace::full(&f, 2);
        assert_eq!(full.intersect(&b).unwrap(), b);
        assert_eq!(b.sum(&b).unwrap(), b);
        assert_eq!(full.quotient_dim(&b).unwrap(), 1);
        assert!(matches!(a.quotient_dim(&b), Err(Error::NotASubspace(_))));
        let c = Subspace::full(&f, 3);
        assert!(matches!(a.sum(&c), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn intersection_matches_enumeration() {
        let f = gf(3, 1);
        let a = Subspace::span(&f, 3, &[[1, 2, 0], [0, 1, 1]]);
        let b = Subspace::span(&f, 3, &[[1, 0, 2], [1, 1, 1]]);
        let inter = a.intersect(&b).unwrap();
        let brute: Vec<Vec<u32>> = all_vectors(&f, 3).into_iter().filter(|v| a.contains(v) && b.contains(v)).collect();
        assert_eq!(brute.len(), 3usize.pow(inter.dim() as u32));
        assert!(brute.iter().all(|v| inter.contains(v)));
    }

    #[test]
    fn orthogonal_examples() {
        let f = gf(2, 1);
        let g = Matrix::identity(&f, 3);
        assert!(Subspace::zero(&f, 3).orthogonal(&g).unwrap().is_full());
        assert!(Subspace::full(&f, 3).orthogonal(&g).unwrap().is_zero());
        let v = Subspace::span(&f, 3, &[[1, 1, 0]]);
        let expected = Subspace::span(&f, 3, &[[1, 1, 0], [0, 0, 1]]);
        assert_eq!(v.orthogonal(&g).unwrap(), expected);
    }

    #[test]
    fn preimage_and_image() {
        let f = gf(3, 1);
        let a = m(&f, &[&[1, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
        let w = Subspace::span(&f, 3, &[[0, 0, 1]]);
        let pre = w.preimage_under(&a).unwrap();
        assert_eq!(pre, Subspace::span(&f, 3, &[[0, 1, 0], [0, 0, 1]]));
        let img = Subspace::full(&f, 3).image_under(&a).unwrap();
        assert_eq!(img, a.image());
        assert_eq!(img.dim(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(2, 2);
        let a = m(&f, &[&[1, 2], &[2, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(m(&f, &[&[1, 1], &[1, 1]]).inverse().is_err());
    }

    #[test]
    fn semilinear_power_examples() {
        let f = gf(2, 2);
        let mat = m(&f, &[&[2, 1], &[0, 3]]);
        let s = SemilinearMap::new(mat.clone(), 1).unwrap();
        assert_eq!(s.power(0), SemilinearMap::identity(&f, 2));
        let sq = s.power(2);
        assert_eq!(sq.twist(), 0);
        assert_eq!(sq.matrix(), &mat.mul(&mat.twist(1)).unwrap());
        for v in all_vectors(&f, 2) {
            assert_eq!(sq.apply(&v), s.apply(&s.apply(&v)));
        }
        let g = gf(5, 1);
        let pm = m(&g, &[&[1, 2], &[3, 4]]);
        let ps = SemilinearMap::new(pm.clone(), 1).unwrap();
        assert_eq!(ps.power(3).matrix(), &pm.mul(&pm).unwrap().mul(&pm).unwrap());
    }

    #[test]
    fn adjoint_examples() {
        let f = gf(2, 1);
        let g = m(&f, &[&[0, 1], &[1, 0]]);
        let id = SemilinearMap::identity(&f, 2);
        assert_eq!(id.adjoint(&g).unwrap(), id);
        let a = SemilinearMap::new(m(&f, &[&[1, 1], &[0, 1]]), 0).unwrap();
        let tr = a.adjoint(&Matrix::identity(&f, 2)).unwrap();
        assert_eq!(tr.matrix(), &a.matrix().transpose());
        let s = SemilinearMap::new(m(&f, &[&[0, 0], &[1, 0]]), 1).unwrap();
        let z = s.adjoint(&g).unwrap();
        let pair = |x: &[u32], y: &[u32]| f.dot(x, &g.mul_vec(y));
        for v in all_vectors(&f, 2) {
            for w in all_vectors(&f, 2) {
                assert_eq!(pair(&v, &s.apply(&w)), f.frobenius(pair(&z.apply(&v), &w), 1));
            }
        }
    }

    #[test]
    fn adjoint_defining_identity_gf4() {
        let f = gf(2, 2);
        let g = m(&f, &[&[1, 2], &[2, 0]]);
        let s = SemilinearMap::new(m(&f, &[&[3, 1], &[2, 2]]), 1).unwrap();
        let z = s.adjoint(&g).unwrap();
        assert_eq!(z.twist(), 1);
        let pair = |x: &[u32], y: &[u32]| f.dot(x, &g.mul_vec(y));
        for v in all_vectors(&f, 2) {
            for w in all_vectors(&f, 2) {
                assert_eq!(pair(&v, &s.apply(&w)), f.frobenius(pair(&z.apply(&v), &w), 1));
            }
        }
        assert!(matches!(s.adjoint(&Matrix::zeros(&f, 2, 2)), Err(Error::SingularGram)));
    }

    #[test]
    fn semilinear_kernel() {
        let f = gf(2, 2);
        let s = SemilinearMap::new(m(&f, &[&[1, 2], &[1, 2]]), 1).unwrap();
        let k = s.kernel();
        let brute: Vec<_> = all_vectors(&f, 2).into_iter().filter(|v| s.apply(v).iter().all(|&x| x == 0)).collect();
        assert_eq!(brute.len(), 4usize.pow(k.dim() as u32));
        assert!(brute.iter().all(|v| k.contains(v)));
    }

    #[test]
    fn echelon_tracks_rank() {
        let f = gf(3, 1);
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(vec![1, 2, 0]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(!e.insert(vec![2, 0, 2]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 0, 1]));
        assert_eq!(e.into_subspace().dim(), 2);
    }
}
