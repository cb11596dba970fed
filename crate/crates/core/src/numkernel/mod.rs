//! Self-contained dense complex linear algebra: vectors, row-major matrices,
//! a Schur-based eigensolver, null-space extraction, polynomial roots via the
//! companion matrix, and adaptive quadrature. Everything here is deterministic
//! and serves as the oracle layer for the rest of the crate.

mod eig;
mod nullspace;
mod quad;
mod random;
mod roots;

pub use eig::{eig_dense, eigenvalues, unit_circle_project, EigenDecomposition, MAX_EIG_DIM};
pub use nullspace::null_space;
pub use quad::adaptive_quadrature;
pub use random::random_unitary;
pub use roots::{poly_roots, PolyRoots};

use num_complex::Complex;

use crate::{cast, Error, Real, Result};

/// Dense complex vector. Constructors reject empty and non-finite data.
#[derive(Debug, Clone, PartialEq)]
pub struct CVec<T> {
    data: Vec<Complex<T>>,
}

impl<T: Real> CVec<T> {
    pub fn new(data: Vec<Complex<T>>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::Empty);
        }
        for (i, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
        }
        Ok(Self { data })
    }

    /// Internal builder for values produced by our own arithmetic.
    pub(crate) fn from_raw(data: Vec<Complex<T>>) -> Self {
        debug_assert!(!data.is_empty());
        Self { data }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            data: vec![Complex::new(T::zero(), T::zero()); n],
        }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Complex<T>) -> Self {
        Self::from_raw((0..n).map(f).collect())
    }

    /// Standard basis vector e_i (0-based) in dimension n.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.data[i] = Complex::new(T::one(), T::zero());
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.data
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn norm_sq(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Inner product <self, other> conjugate-linear in self.
    pub fn dot(&self, other: &Self) -> Complex<T> {
        debug_assert_eq!(self.dim(), other.dim());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * *b)
            .fold(Complex::new(T::zero(), T::zero()), |acc, z| acc + z)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_raw(self.data.iter().map(|z| *z * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_raw(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_raw(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    /// Returns self scaled to unit norm. Fails on (numerically) zero vectors.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= T::zero() || !n.is_finite() {
            return Err(Error::Degenerate("cannot normalize zero vector".into()));
        }
        Ok(self.scale(Complex::new(T::one() / n, T::zero())))
    }

    /// Distance to `target` minimized over a global phase; both arguments are
    /// normalized internally, so the result is sqrt(2 - 2|<t,v>|).
    pub fn phase_aligned_distance(&self, target: &Self) -> T {
        let a = self.norm();
        let b = target.norm();
        let ip = self.dot(target).norm() / (a * b);
        let two = cast::<T>(2.0);
        (two - two * ip).max(T::zero()).sqrt()
    }

    /// Probability weights |v_i|^2 / ||v||^2. Never assumes unit input.
    pub fn probabilities(&self) -> Result<Vec<T>> {
        let ns = self.norm_sq();
        if ns <= T::zero() || !ns.is_finite() {
            return Err(Error::Degenerate(
                "probability weights of a zero vector".into(),
            ));
        }
        Ok(self.data.iter().map(|z| z.norm_sqr() / ns).collect())
    }
}

impl<T: Real> std::ops::Index<usize> for CVec<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, i: usize) -> &Complex<T> {
        &self.data[i]
    }
}

impl<T: Real> std::ops::IndexMut<usize> for CVec<T> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Complex<T> {
        &mut self.data[i]
    }
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        for (i, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_raw(rows, cols, data)
    }

    pub fn diagonal(entries: &[Complex<T>]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
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
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &CVec<T>) -> CVec<T> {
        debug_assert_eq!(self.cols, v.dim());
        let mut out = CVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc = acc + self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_raw(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_raw(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_raw(
            self.rows,
            self.cols,
            self.data.iter().map(|z| *z * s).collect(),
        )
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Max-norm deviation of M M^dagger from the identity.
    pub fn unitarity_error(&self) -> T {
        debug_assert!(self.is_square());
        let n = self.rows;
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..n {
                    acc = acc + self[(i, k)] * self[(j, k)].conj();
                }
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((acc - Complex::new(target, T::zero())).norm());
            }
        }
        worst
    }

    pub fn require_unitary(&self, tol: T) -> Result<()> {
        let err = self.unitarity_error();
        if err > tol {
            return Err(Error::NotUnitary(err.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(())
    }

    /// I - self (square only).
    pub fn identity_minus(&self) -> Self {
        debug_assert!(self.is_square());
        let mut out = self.scale(Complex::new(-T::one(), T::zero()));
        for i in 0..self.rows {
            out[(i, i)] = out[(i, i)] + Complex::new(T::one(), T::zero());
        }
        out
    }

    /// Assemble [[0, top_right], [bottom_left, 0]] from two n x n blocks.
    pub fn block_antidiagonal(top_right: &Self, bottom_left: &Self) -> Self {
        debug_assert!(top_right.is_square() && bottom_left.is_square());
        debug_assert_eq!(top_right.rows, bottom_left.rows);
        let n = top_right.rows;
        let mut out = Self::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                out[(i, n + j)] = top_right[(i, j)];
                out[(n + i, j)] = bottom_left[(i, j)];
            }
        }
        out
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for CMat<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for CMat<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    #[test]
    fn vector_constructor_rejects_non_finite() {
        assert!(matches!(
            CVec::new(vec![c(f64::NAN, 0.0)]),
            Err(Error::NonFinite { index: 0 })
        ));
        assert!(matches!(
            CVec::new(vec![c(0.0, f64::INFINITY)]),
            Err(Error::NonFinite { index: 0 })
        ));
        assert!(matches!(CVec::<f64>::new(vec![]), Err(Error::Empty)));
    }

    #[test]
    fn matrix_constructor_checks_shape_and_finiteness() {
        assert!(CMat::new(2, 2, vec![c(1.0, 0.0); 3]).is_err());
        assert!(matches!(
            CMat::new(1, 2, vec![c(1.0, 0.0), c(f64::NAN, 0.0)]),
            Err(Error::NonFinite { index: 1 })
        ));
        assert!(CMat::new(2, 2, vec![c(1.0, 0.0); 4]).is_ok());
    }

    #[test]
    fn dot_is_conjugate_linear_in_first_argument() {
        let a = CVec::new(vec![c(0.0, 1.0), c(2.0, 0.0)]).unwrap();
        let b = CVec::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        // conj(i)*1 + conj(2)*i = -i + 2i = i
        let d = a.dot(&b);
        assert!((d - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn identity_is_unitary_and_matmul_agrees() {
        let id = CMat::<f64>::identity(3);
        assert!(id.unitarity_error() < 1e-15);
        let m = CMat::from_fn(3, 3, |i, j| c((i * 3 + j) as f64, 1.0));
        let p = id.mul(&m);
        assert_eq!(p, m);
    }

    #[test]
    fn phase_aligned_distance_ignores_global_phase() {
        let a = CVec::new(vec![c(1.0, 0.0), c(0.0, 1.0)])
            .unwrap()
            .normalized()
            .unwrap();
        let rotated = a.scale(Complex::from_polar(1.0, 1.234));
        assert!(a.phase_aligned_distance(&rotated) < 1e-7);
        let orth = CVec::new(vec![c(0.0, 1.0), c(1.0, 0.0)])
            .unwrap()
            .normalized()
            .unwrap();
        // |<a,orth>| = 0 here? <a,orth> = conj(1)*i/2... compute: (1,i)/sqrt2 vs (i,1)/sqrt2
        // <a,b> = (1*i + (-i)*1)/2 = 0, so distance sqrt(2).
        assert!((a.phase_aligned_distance(&orth) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn block_antidiagonal_layout() {
        let s = CMat::from_fn(2, 2, |i, j| c((10 * i + j) as f64, 0.0));
        let p = CMat::<f64>::identity(2);
        let b = CMat::block_antidiagonal(&s, &p);
        assert_eq!(b[(0, 2)], c(0.0, 0.0));
        assert_eq!(b[(0, 3)], c(1.0, 0.0));
        assert_eq!(b[(1, 2)], c(10.0, 0.0));
        assert_eq!(b[(2, 0)], c(1.0, 0.0));
        assert_eq!(b[(3, 1)], c(1.0, 0.0));
        assert_eq!(b[(0, 0)], c(0.0, 0.0));
    }
}
