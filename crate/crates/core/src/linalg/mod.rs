//! Dense exact matrices over any [`Ring`].
//!
//! Storage is row-major. Determinants use Gaussian elimination over fields
//! and fraction-free (Bareiss) elimination on integer representatives over
//! the other rings; inverses over non-fields go through the adjugate.

mod pascal;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{domain, Error, Result};
use crate::ring::Ring;

pub use pascal::{pascal_inverse_reflected, pascal_inverse_signed, pascal_matrix, reversal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(domain!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            ));
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        ring: R,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> R::Elem,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let zero = ring.zero();
        Self::from_fn(ring, rows, cols, |_, _| zero)
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let (zero, one) = (ring.zero(), ring.one());
        Self::from_fn(ring, n, n, |i, j| if i == j { one } else { zero })
    }

    pub fn ring(&self) -> &R {
        &self.ring
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

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> R::Elem {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R::Elem) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// The `rows × cols` submatrix with top-left corner `(i0, j0)`.
    pub fn submatrix(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(self.ring.clone(), rows, cols, |i, j| self.get(i0 + i, j0 + j))
    }

    /// Applies `f` to every entry, staying in the same ring.
    pub fn map(&self, f: impl Fn(R::Elem) -> R::Elem) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, c: R::Elem) -> Self {
        self.map(|x| self.ring.mul(c, x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let want = if i == j { self.ring.one() } else { self.ring.zero() };
                    self.get(i, j) == want
                })
            })
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::DimensionMismatch {
            left: (self.rows, self.cols),
            right: (other.rows, other.cols),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(self.mismatch(other));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.ring.add(a, b))
            .collect();
        Matrix::new(self.ring.clone(), self.rows, self.cols, entries)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        let ring = &self.ring;
        let mut out = Matrix::zeros(ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = ring.add(out.entries[idx], ring.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.ring.zero(), |acc, (&a, &b)| {
                        self.ring.add(acc, self.ring.mul(a, b))
                    })
            })
            .collect())
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(self.mismatch(self));
        }
        let mut result = Matrix::identity(self.ring.clone(), self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(result)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// The block matrix `(a_ij · B)`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let (r, s) = (other.rows, other.cols);
        Ok(Self::from_fn(
            self.ring.clone(),
            self.rows * r,
            self.cols * s,
            |i, j| self.ring.mul(self.get(i / r, j / s), other.get(i % r, j % s)),
        ))
    }

    /// `k`-fold Kronecker power; the 0-fold power is `[1]`.
    pub fn kronecker_power(&self, k: u32) -> Result<Self> {
        let mut acc = Matrix::identity(self.ring.clone(), 1);
        for _ in 0..k {
            acc = acc.kronecker(self)?;
        }
        Ok(acc)
    }

    pub fn determinant(&self) -> Result<R::Elem> {
        if !self.is_square() {
            return Err(self.mismatch(self));
        }
        let mut buf = self.entries.clone();
        Ok(det_in_place(&self.ring, &mut buf, self.rows))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(self.mismatch(self));
        }
        if self.ring.is_field() {
            self.inverse_gauss_jordan()
        } else {
            self.inverse_adjugate()
        }
    }

    fn inverse_gauss_jordan(&self) -> Result<Self> {
        let n = self.rows;
        let ring = &self.ring;
        let mut a = self.clone();
        let mut inv = Matrix::identity(ring.clone(), n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !ring.is_zero(a.get(r, col)))
                .ok_or(Error::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = ring.inv(a.get(col, col)).ok_or(Error::Singular)?;
            a.scale_row(col, scale);
            inv.scale_row(col, scale);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if ring.is_zero(factor) {
                    continue;
                }
                let neg = ring.neg(factor);
                a.add_row_multiple(r, col, neg);
                inv.add_row_multiple(r, col, neg);
            }
        }
        Ok(inv)
    }

    fn inverse_adjugate(&self) -> Result<Self> {
        let n = self.rows;
        let ring = &self.ring;
        let det = self.determinant()?;
        let det_inv = ring.inv(det).ok_or(Error::Singular)?;
        if n == 1 {
            return Matrix::new(ring.clone(), 1, 1, vec![det_inv]);
        }
        let mut adj = Matrix::zeros(ring.clone(), n, n);
        let mut minor = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            for j in 0..n {
                minor.clear();
                for r in (0..n).filter(|&r| r != i) {
                    for c in (0..n).filter(|&c| c != j) {
                        minor.push(self.get(r, c));
                    }
                }
                let cofactor = det_in_place(ring, &mut minor, n - 1);
                let signed = if (i + j) % 2 == 0 {
                    cofactor
                } else {
                    ring.neg(cofactor)
                };
                adj.set(j, i, ring.mul(signed, det_inv));
            }
        }
        Ok(adj)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, row: usize, c: R::Elem) {
        for j in 0..self.cols {
            let idx = row * self.cols + j;
            self.entries[idx] = self.ring.mul(c, self.entries[idx]);
        }
    }

    // row[target] += c * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: R::Elem) {
        for j in 0..self.cols {
            let s = self.entries[source * self.cols + j];
            let idx = target * self.cols + j;
            self.entries[idx] = self.ring.add(self.entries[idx], self.ring.mul(c, s));
        }
    }
}

/// Determinant of the `n × n` row-major matrix in `buf`, destroying `buf`.
///
/// Used directly by the enumeration loops to avoid allocating per candidate.
pub fn det_in_place<R: Ring>(ring: &R, buf: &mut [R::Elem], n: usize) -> R::Elem {
    debug_assert_eq!(buf.len(), n * n);
    if n == 0 {
        return ring.one();
    }
    if ring.is_field() {
        det_gauss(ring, buf, n)
    } else {
        det_bareiss(ring, buf, n)
    }
}

fn det_gauss<R: Ring>(ring: &R, a: &mut [R::Elem], n: usize) -> R::Elem {
    let mut det = ring.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !ring.is_zero(a[r * n + col])) else {
            return ring.zero();
        };
        if pivot != col {
            for j in col..n {
                a.swap(pivot * n + j, col * n + j);
            }
            det = ring.neg(det);
        }
        let p = a[col * n + col];
        det = ring.mul(det, p);
        let p_inv = ring.inv(p).expect("nonzero field element");
        for r in col + 1..n {
            let f = a[r * n + col];
            if ring.is_zero(f) {
                continue;
            }
            let f = ring.neg(ring.mul(f, p_inv));
            for j in col..n {
                a[r * n + j] = ring.add(a[r * n + j], ring.mul(f, a[col * n + j]));
            }
        }
    }
    det
}

fn det_bareiss<R: Ring>(ring: &R, a: &[R::Elem], n: usize) -> R::Elem {
    let lifted: Vec<i128> = a
        .iter()
        .map(|&x| ring.lift(x).expect("ring without integer representatives"))
        .collect();
    match bareiss_i128(lifted.clone(), n) {
        Some(d) => ring.from_i128(d),
        None => {
            let big: Vec<BigInt> = lifted.into_iter().map(BigInt::from).collect();
            ring.from_bigint(&bareiss_big(big, n))
        }
    }
}

// Fraction-free elimination over Z; None on overflow.
fn bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i * n + j].checked_mul(a[k * n + k])?;
                let rhs = a[i * n + k].checked_mul(a[k * n + j])?;
                a[i * n + j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = a[k * n + k];
    }
    Some(sign * a[n * n - 1])
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let zero = BigInt::from(0);
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k * n + k] == zero {
            match (k + 1..n).find(|&r| a[r * n + k] != zero) {
                Some(swap) => {
                    for j in 0..n {
                        a.swap(k * n + j, swap * n + j);
                    }
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Block permutation matrix moving block-row `i` to block-row `perm[i]`.
///
/// With blocks of size `block`, the result is `k·block × k·block` and
/// orthogonal: its inverse is its transpose.
pub fn permutation_matrix<R: Ring>(ring: R, perm: &[usize], block: usize) -> Result<Matrix<R>> {
    let k = perm.len();
    let mut seen = vec![false; k];
    for &target in perm {
        if target >= k || core::mem::replace(&mut seen[target], true) {
            return Err(domain!("{perm:?} is not a permutation"));
        }
    }
    let n = k * block;
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for (i, &target) in perm.iter().enumerate() {
        for l in 0..block {
            m.set(target * block + l, i * block + l, ring.one());
        }
    }
    Ok(m)
}
