//! Exact rational scalars, dense matrices and canonical subspaces.
//!
//! Everything here is exact: there is no tolerance anywhere. Subspaces are
//! stored in reduced row echelon form, so two subspaces are equal exactly
//! when their representations are equal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer literal as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Canonical string form: `"p/q"` in lowest terms, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| c * x).collect()
}

pub fn neg_vec(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x).collect()
}

/// `a += c * b`, skipping the work when `c` is zero.
pub fn axpy(a: &mut [Rational], c: &Rational, b: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = zero_vec(self.cols);
        for (r, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: add_vec(&self.entries, &other.entries),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: sub_vec(&self.entries, &other.entries),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: scale_vec(c, &self.entries) }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            let pivot_row: Vec<Rational> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let start = r * m.cols;
                axpy(&mut m.entries[start..start + m.cols], &-factor, &pivot_row);
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = unit_vec(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Solves `M x = b`. Returns `None` when the system is inconsistent, otherwise a
    /// particular solution (free variables set to zero) and the kernel.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<(Vec<Rational>, Subspace)>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vec(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Ok(Some((x, self.kernel())))
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.cols, self.to_rows())
    }

    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    /// Determinant by Gaussian elimination. Panics if not square.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let pivot_row = m.row(col).to_vec();
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                let start = r * n;
                axpy(&mut m.entries[start..start + n], &-factor, &pivot_row);
            }
        }
        det
    }

    /// True if every entry is 0 or 1 with exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        let mut col_seen = vec![false; n];
        for r in 0..n {
            let mut ones = 0;
            for c in 0..n {
                let x = self.get(r, c);
                if x.is_one() {
                    ones += 1;
                    if col_seen[c] {
                        return false;
                    }
                    col_seen[c] = true;
                } else if !x.is_zero() {
                    return false;
                }
            }
            if ones != 1 {
                return false;
            }
        }
        true
    }

    /// Sum of the series `sum_k self^k / k!`. Panics unless `self` is nilpotent.
    pub fn exp_nilpotent(&self) -> Matrix {
        self.try_exp_nilpotent().expect("exp of a non-nilpotent matrix")
    }

    /// Finite exponential series, or `None` when the matrix is not nilpotent.
    pub fn try_exp_nilpotent(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut total = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(&frac(1, k as i64));
            if term.is_zero() {
                return Some(total);
            }
            total = total.add(&term);
        }
        if term.mul(self).is_zero() {
            Some(total)
        } else {
            None
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q^n`, stored canonically as the rows of its reduced
/// row echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: (0..n).map(|i| unit_vec(n, i)).collect(), pivots: (0..n).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors of length `n`.
    pub fn span(n: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Subspace::zero(n);
        }
        let m = Matrix::from_rows(n, rows).expect("span: vector of wrong length");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim: n, basis, pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(n, indices.into_iter().map(|i| unit_vec(n, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Indices of the standard basis vectors spanning this subspace, if it is a
    /// coordinate subspace.
    pub fn coordinate_indices(&self) -> Option<Vec<usize>> {
        let is_coord = self
            .basis
            .iter()
            .all(|v| v.iter().filter(|x| !x.is_zero()).count() == 1);
        is_coord.then(|| self.pivots.clone())
    }

    /// `v` minus its components along the pivot columns; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Standard coordinates not used as pivots; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !used[i]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, in the basis given by the
    /// complement unit vectors.
    pub fn quotient_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient_dim);
        }
        let residues: Vec<Vec<Rational>> = self.basis.iter().map(|u| other.reduce(u)).collect();
        let m = Matrix::from_columns(self.ambient_dim, &residues);
        let coeffs = m.kernel();
        Subspace::span(
            self.ambient_dim,
            coeffs.basis.iter().map(|a| self.combine(a)),
        )
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.dim());
        let mut v = zero_vec(self.ambient_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the subspace.
    pub fn coords_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient_dim)?;
        for v in &self.basis {
            let row: Vec<String> = v.iter().map(format_rational).collect();
            write!(f, " ({})", row.join(","))?;
        }
        write!(f, " ]")
    }
}
