//! Exact dense linear algebra over small prime fields.
//!
//! Everything downstream (hom spaces, kernels of module maps, resolutions,
//! structure-constant checks) reduces to the handful of primitives here:
//! [`Matrix::rank`], [`Matrix::kernel`], [`Matrix::solve`] and [`quotient`].
//! Pivoting always takes the leftmost nonzero column, so every basis produced
//! is reproducible run to run.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `F_p`, `p ∈ {2, 3, 5, 7}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Fp(u32);

impl TryFrom<u32> for Fp {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Fp::new(p)
    }
}

impl From<Fp> for u32 {
    fn from(f: Fp) -> u32 {
        f.0
    }
}

impl Default for Fp {
    fn default() -> Self {
        Fp(2)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        match p {
            2 | 3 | 5 | 7 => Ok(Fp(p)),
            _ => Err(Error::UnsupportedField(p)),
        }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.0
    }

    /// Reduce an arbitrary integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        // a^(p-2)
        let mut r = 1;
        for _ in 0..self.0 - 2 {
            r = self.mul(r, a);
        }
        Some(r)
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.0
    }

    pub fn zero_vec(self, n: usize) -> Vec<u32> {
        vec![0; n]
    }

    pub fn unit_vec(self, n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    pub fn vec_add(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_sub(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn vec_scale(self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `acc += c * v`
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = (*a + c * x) % self.0;
        }
    }

    /// Kronecker product of two vectors, row-major (`a` outer, `b` inner).
    pub fn vec_kron(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for &x in a {
            for &y in b {
                out.push(self.mul(x, y));
            }
        }
        out
    }
}

/// A field element tagged with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u32,
    field: Fp,
}

impl Scalar {
    pub fn new(field: Fp, value: i64) -> Self {
        Scalar {
            value: field.reduce(value),
            field,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> Fp {
        self.field
    }

    pub fn inv(self) -> Option<Scalar> {
        self.field.inv(self.value).map(|value| Scalar {
            value,
            field: self.field,
        })
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        Scalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        Scalar {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        Scalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Result of Gaussian elimination: the reduced row echelon form and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from integer rows, reducing mod `p`. All rows must have length `cols`.
    pub fn from_rows(field: Fp, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("expected {rows}x{cols} entries")));
        }
        let data = entries
            .iter()
            .flat_map(|r| r.iter().map(|&x| field.reduce(x)))
            .collect();
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Build from already-reduced row-major data.
    pub fn from_vec(field: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must be rows*cols");
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_fn(field: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        Matrix::from_fn(field, rows, cols, |r, c| columns[c][r])
    }

    pub fn from_row_vectors(field: Fp, cols: usize, vectors: &[Vec<u32>]) -> Self {
        let rows = vectors.len();
        Matrix::from_fn(field, rows, cols, |r, c| vectors[r][c])
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let p = self.field.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for r in 0..self.rows {
            let orow = &mut out[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b as u64;
                }
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| (x % p) as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.vec_add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.vec_sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.vec_scale(c, &self.data),
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Linear combination `Σ coeffs[i] * mats[i]` (all of the given shape).
    pub fn combination(field: Fp, rows: usize, cols: usize, coeffs: &[u32], mats: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (&c, m) in coeffs.iter().zip(mats) {
            out.axpy(c, m);
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: Fp, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    /// Kronecker product, row-major convention matching [`Fp::vec_kron`].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Matrix::from_fn(self.field, rows, cols, |r, c| {
            let (r1, r2) = (r / other.rows, r % other.rows);
            let (c1, c2) = (c / other.cols, c % other.cols);
            self.field.mul(self.get(r1, c1), other.get(r2, c2))
        })
    }

    /// Gaussian elimination with leftmost-nonzero pivoting.
    pub fn echelon(&self) -> Echelon {
        let f = self.field;
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
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, r * m.cols + k);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for k in c..m.cols {
                let v = f.mul(m.get(r, k), inv);
                m.data[r * m.cols + k] = v;
            }
            let pivot_row: Vec<u32> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor != 0 {
                    let neg = f.neg(factor);
                    let row = &mut m.data[i * m.cols..(i + 1) * m.cols];
                    f.axpy(row, neg, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space `{v : self·v = 0}`.
    pub fn kernel(&self) -> Basis {
        let f = self.field;
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.get(i, free));
            }
            vectors.push(v);
        }
        Basis {
            field: f,
            ambient_dim: self.cols,
            vectors,
        }
    }

    /// Some `x` with `self·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(i, self.cols);
        }
        Ok(Some(x))
    }

    /// Basis of the column space, in reduced echelon form.
    pub fn column_space(&self) -> Basis {
        let e = self.transpose().echelon();
        let vectors = (0..e.pivots.len()).map(|i| e.reduced.row(i).to_vec()).collect();
        Basis {
            field: self.field,
            ambient_dim: self.rows,
            vectors,
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let e = self.hstack(&Matrix::identity(self.field, n)).echelon();
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(e.reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `true` if `self^k = 0` for `k = rows`.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows.max(1)).is_zero()
    }
}

/// A linearly independent family of vectors in `F_p^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    field: Fp,
    ambient_dim: usize,
    vectors: Vec<Vec<u32>>,
}

impl Basis {
    pub fn empty(field: Fp, ambient_dim: usize) -> Self {
        Basis {
            field,
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// Checked constructor; rejects dependent families.
    pub fn new(field: Fp, ambient_dim: usize, vectors: Vec<Vec<u32>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch("basis vector length".into()));
        }
        let b = Basis {
            field,
            ambient_dim,
            vectors,
        };
        if b.as_rows().rank() != b.vectors.len() {
            return Err(Error::NotIndependent);
        }
        Ok(b)
    }

    /// Independent subfamily spanning the same space, chosen greedily in order.
    pub fn span(field: Fp, ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut basis = Basis::empty(field, ambient_dim);
        let mut builder = SpanBuilder::new(field, ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim);
            if builder.insert(&v) {
                basis.vectors.push(v);
            }
        }
        basis
    }

    /// Span in canonical reduced echelon form.
    pub fn canonical_span(field: Fp, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Basis::empty(field, ambient_dim);
        }
        let e = Matrix::from_row_vectors(field, ambient_dim, vectors).echelon();
        Basis {
            field,
            ambient_dim,
            vectors: (0..e.pivots.len()).map(|i| e.reduced.row(i).to_vec()).collect(),
        }
    }

    pub fn full(field: Fp, n: usize) -> Self {
        Basis {
            field,
            ambient_dim: n,
            vectors: (0..n).map(|i| field.unit_vec(n, i)).collect(),
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<u32>> {
        self.vectors
    }

    /// Vectors as rows (`len × ambient_dim`).
    pub fn as_rows(&self) -> Matrix {
        Matrix::from_row_vectors(self.field, self.ambient_dim, &self.vectors)
    }

    /// Vectors as columns (`ambient_dim × len`): the inclusion map.
    pub fn as_columns(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.vectors)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        self.as_columns().solve(v).expect("length checked").is_some()
    }

    pub fn contains_all(&self, other: &Basis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if self.is_empty() {
            return v.iter().all(|&x| x == 0).then(Vec::new);
        }
        self.as_columns().solve(v).expect("length checked")
    }

    pub fn sum(&self, other: &Basis) -> Basis {
        Basis::span(
            self.field,
            self.ambient_dim,
            self.vectors.iter().chain(&other.vectors).cloned(),
        )
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.ambient_dim
    }

    /// A left inverse `L` of the inclusion (`L · as_columns() = I`).
    pub fn left_inverse(&self) -> Matrix {
        let k = self.len();
        let incl = self.as_columns();
        // Choose k independent rows of the inclusion.
        let e = incl.transpose().echelon();
        let rows = e.pivots.clone();
        debug_assert_eq!(rows.len(), k);
        let square = Matrix::from_fn(self.field, k, k, |r, c| incl.get(rows[r], c));
        let inv = square.inverse().expect("independent basis has invertible minor");
        let mut select = Matrix::zeros(self.field, k, self.ambient_dim);
        for (i, &r) in rows.iter().enumerate() {
            select.set(i, r, 1);
        }
        inv.mul(&select)
    }
}

fn reduce_against(field: Fp, echelon: &[(usize, Vec<u32>)], mut v: Vec<u32>) -> Option<Vec<u32>> {
    for (pc, row) in echelon {
        let c = v[*pc];
        if c != 0 {
            field.axpy(&mut v, field.neg(c), row);
        }
    }
    v.iter().any(|&x| x != 0).then_some(v)
}

fn incremental_insert(field: Fp, mut echelon: Vec<(usize, Vec<u32>)>, v: Vec<u32>) -> Vec<(usize, Vec<u32>)> {
    if let Some(mut r) = reduce_against(field, &echelon, v) {
        let pc = r.iter().position(|&x| x != 0).expect("nonzero");
        let inv = field.inv(r[pc]).expect("nonzero");
        r = field.vec_scale(inv, &r);
        for (_, row) in echelon.iter_mut() {
            let c = row[pc];
            if c != 0 {
                field.axpy(row, field.neg(c), &r);
            }
        }
        echelon.push((pc, r));
    }
    echelon
}

/// Incremental rank tracker: feed vectors one at a time and learn whether each
/// enlarges the span.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Fp,
    ambient_dim: usize,
    echelon: Vec<(usize, Vec<u32>)>,
}

impl SpanBuilder {
    pub fn new(field: Fp, ambient_dim: usize) -> Self {
        SpanBuilder {
            field,
            ambient_dim,
            echelon: Vec::new(),
        }
    }

    /// Adds `v`; returns `true` if it was independent of what came before.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim);
        if reduce_against(self.field, &self.echelon, v.to_vec()).is_none() {
            return false;
        }
        let ech = std::mem::take(&mut self.echelon);
        self.echelon = incremental_insert(self.field, ech, v.to_vec());
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        reduce_against(self.field, &self.echelon, v.to_vec()).is_none()
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }
}

/// A surjection `F_p^ambient → F_p^dim` with kernel exactly `span(sub)`,
/// together with a section of it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
    pub dim: usize,
}

/// Quotient of `F_p^ambient_dim` by `span(sub)`.
///
/// Coordinates of the quotient are the non-pivot columns of the reduced
/// echelon form of `sub`; the section sends each quotient coordinate to the
/// corresponding standard basis vector.
pub fn quotient(field: Fp, ambient_dim: usize, sub: &Basis) -> Result<Quotient> {
    if sub.ambient_dim != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace lives in dimension {}, ambient is {}",
            sub.ambient_dim, ambient_dim
        )));
    }
    let (reduced, pivots) = if sub.is_empty() {
        (Matrix::zeros(field, 0, ambient_dim), Vec::new())
    } else {
        let e = sub.as_rows().echelon();
        if e.pivots.len() != sub.len() {
            return Err(Error::NotIndependent);
        }
        (e.reduced, e.pivots)
    };
    let mut is_pivot = vec![false; ambient_dim];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let dim = free.len();
    let mut projection = Matrix::zeros(field, dim, ambient_dim);
    let mut section = Matrix::zeros(field, ambient_dim, dim);
    for (q, &c) in free.iter().enumerate() {
        projection.set(q, c, 1);
        section.set(c, q, 1);
        // v ↦ v - Σ v[pivot_i] row_i, then read coordinate c.
        for (i, &pc) in pivots.iter().enumerate() {
            let coef = reduced.get(i, c);
            if coef != 0 {
                projection.set(q, pc, field.neg(coef));
            }
        }
    }
    Ok(Quotient {
        projection,
        section,
        dim,
    })
}
