//! Dense complex eigensolver: Householder reduction to upper Hessenberg form,
//! explicit-shift QR iteration with Givens rotations (Wilkinson shift,
//! exceptional shifts), Schur vectors accumulated, eigenvectors recovered by
//! back-substitution on the triangular factor. Deterministic: no randomized
//! pivoting or balancing.

use num_complex::Complex;

use super::{CMat, CVec};
use crate::{cast, Error, Real, Result};

/// Hard cap on the matrix dimension accepted by the eigensolver.
pub const MAX_EIG_DIM: usize = 2048;

/// Eigenvalues with unit-norm eigenvectors and per-pair residuals ||Av - lv||.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T> {
    pub values: Vec<Complex<T>>,
    pub vectors: Vec<CVec<T>>,
    pub residuals: Vec<T>,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn max_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |a, b| a.max(*b))
    }
}

/// Projects a nonzero complex number onto the unit circle. Callers that know
/// their spectrum is unitary use this to clean raw eigenvalues; the solver
/// itself never snaps values.
pub fn unit_circle_project<T: Real>(z: Complex<T>) -> Complex<T> {
    let r = z.norm();
    if r <= T::zero() {
        Complex::new(T::one(), T::zero())
    } else {
        z / r
    }
}

/// Full eigendecomposition of a square complex matrix.
pub fn eig_dense<T: Real>(a: &CMat<T>) -> Result<EigenDecomposition<T>> {
    let n = check_dim(a)?;
    if n == 1 {
        let lambda = a[(0, 0)];
        let v = CVec::basis(1, 0);
        return Ok(EigenDecomposition {
            values: vec![lambda],
            vectors: vec![v],
            residuals: vec![T::zero()],
        });
    }
    let mut h = Workspace::new(a);
    let mut q = Some(identity_flat::<T>(n));
    hessenberg(&mut h, q.as_mut());
    qr_triangularize(&mut h, q.as_mut())?;
    let q = q.unwrap();

    let values: Vec<Complex<T>> = (0..n).map(|i| h.get(i, i)).collect();
    let tnorm = h.upper_norm();
    let mut vectors = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for m in 0..n {
        let y = triangular_eigvec(&h, m, tnorm);
        // v = Q y
        let mut v = CVec::zeros(n);
        for i in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..=m {
                acc = acc + q[i * n + j] * y[j];
            }
            v[i] = acc;
        }
        let v = v.normalized().map_err(|_| {
            Error::EigConvergence(format!("eigenvector {m} collapsed to zero"))
        })?;
        let av = a.mul_vec(&v);
        let res = av.sub(&v.scale(values[m])).norm();
        vectors.push(v);
        residuals.push(res);
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        residuals,
    })
}

/// Eigenvalues only; skips Schur-vector accumulation and eigenvector recovery.
pub fn eigenvalues<T: Real>(a: &CMat<T>) -> Result<Vec<Complex<T>>> {
    let n = check_dim(a)?;
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let mut h = Workspace::new(a);
    hessenberg(&mut h, None);
    qr_triangularize(&mut h, None)?;
    Ok((0..n).map(|i| h.get(i, i)).collect())
}

fn check_dim<T: Real>(a: &CMat<T>) -> Result<usize> {
    let n = a.require_square()?;
    if n > MAX_EIG_DIM {
        return Err(Error::DimTooLarge {
            dim: n,
            max: MAX_EIG_DIM,
        });
    }
    Ok(n)
}

struct Workspace<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Workspace<T> {
    fn new(a: &CMat<T>) -> Self {
        Self {
            n: a.rows(),
            data: a.as_slice().to_vec(),
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.n + j] = v;
    }

    /// 1-norm-like scale of the upper Hessenberg part, used for thresholds.
    fn upper_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.n {
            for j in i.saturating_sub(1)..self.n {
                s = s + self.get(i, j).norm();
            }
        }
        s.max(T::min_positive_value())
    }
}

fn identity_flat<T: Real>(n: usize) -> Vec<Complex<T>> {
    let mut q = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        q[i * n + i] = Complex::new(T::one(), T::zero());
    }
    q
}

/// Householder reduction to upper Hessenberg form; Q accumulated when given.
fn hessenberg<T: Real>(h: &mut Workspace<T>, mut q: Option<&mut Vec<Complex<T>>>) {
    let n = h.n;
    let mut v = vec![Complex::new(T::zero(), T::zero()); n];
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1; // length of the column tail below the diagonal
        let mut nrm_sq = T::zero();
        for i in 0..m {
            nrm_sq = nrm_sq + h.get(k + 1 + i, k).norm_sqr();
        }
        let nrm = nrm_sq.sqrt();
        if nrm <= T::min_positive_value() {
            continue;
        }
        let x0 = h.get(k + 1, k);
        let s = if x0.norm() > T::zero() {
            x0 / x0.norm()
        } else {
            Complex::new(T::one(), T::zero())
        };
        // v = x + s*||x||*e1; reflector I - beta v v* maps x to -s*||x||*e1
        for i in 0..m {
            v[i] = h.get(k + 1 + i, k);
        }
        v[0] = v[0] + s * nrm;
        let vnorm_sq = (0..m).map(|i| v[i].norm_sqr()).fold(T::zero(), |a, b| a + b);
        if vnorm_sq <= T::min_positive_value() {
            continue;
        }
        let beta = cast::<T>(2.0) / vnorm_sq;

        // left update: rows k+1..n, columns k..n
        for j in k..n {
            let mut w = Complex::new(T::zero(), T::zero());
            for i in 0..m {
                w = w + v[i].conj() * h.get(k + 1 + i, j);
            }
            w = w * beta;
            for i in 0..m {
                let cur = h.get(k + 1 + i, j);
                h.set(k + 1 + i, j, cur - v[i] * w);
            }
        }
        // right update: columns k+1..n, all rows
        for i in 0..n {
            let mut w = Complex::new(T::zero(), T::zero());
            for j in 0..m {
                w = w + h.get(i, k + 1 + j) * v[j];
            }
            w = w * beta;
            for j in 0..m {
                let cur = h.get(i, k + 1 + j);
                h.set(i, k + 1 + j, cur - w * v[j].conj());
            }
        }
        if let Some(q) = q.as_deref_mut() {
            for i in 0..n {
                let mut w = Complex::new(T::zero(), T::zero());
                for j in 0..m {
                    w = w + q[i * n + k + 1 + j] * v[j];
                }
                w = w * beta;
                for j in 0..m {
                    q[i * n + k + 1 + j] = q[i * n + k + 1 + j] - w * v[j].conj();
                }
            }
        }
        // the reflector zeroes the tail exactly; store the clean column
        h.set(k + 1, k, -s * nrm);
        for i in 2..=m {
            h.set(k + i, k, Complex::new(T::zero(), T::zero()));
        }
    }
}

/// Complex Givens rotation [[c, s], [-conj(s), c]] with real c zeroing g.
fn givens<T: Real>(f: Complex<T>, g: Complex<T>) -> (T, Complex<T>, Complex<T>) {
    if g.norm() <= T::zero() {
        return (T::one(), Complex::new(T::zero(), T::zero()), f);
    }
    if f.norm() <= T::zero() {
        let s = g.conj() / g.norm();
        return (T::zero(), s, Complex::new(g.norm(), T::zero()));
    }
    let fa = f.norm();
    let d = (fa * fa + g.norm_sqr()).sqrt();
    let c = fa / d;
    let fs = f / fa;
    let s = fs * (g.conj() / d);
    (c, s, fs * d)
}

/// Explicit-shift QR iteration reducing the Hessenberg matrix to triangular
/// form, accumulating rotations into Q when given.
fn qr_triangularize<T: Real>(
    h: &mut Workspace<T>,
    mut q: Option<&mut Vec<Complex<T>>>,
) -> Result<()> {
    let n = h.n;
    let eps = T::epsilon();
    let hnorm = h.upper_norm();
    let total_cap = 40 * n + 100;
    let mut total_iter = 0usize;
    let mut block_iter = 0usize;
    let mut hi = n - 1;
    let mut rot: Vec<(T, Complex<T>)> = Vec::with_capacity(n);

    while hi > 0 {
        // deflation scan: find the top of the active unreduced block
        let mut l = hi;
        while l > 0 {
            let mut s = h.get(l - 1, l - 1).norm() + h.get(l, l).norm();
            if s <= T::zero() {
                s = hnorm;
            }
            if h.get(l, l - 1).norm() <= eps * s {
                h.set(l, l - 1, Complex::new(T::zero(), T::zero()));
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            block_iter = 0;
            continue;
        }

        total_iter += 1;
        block_iter += 1;
        if total_iter > total_cap || block_iter > 60 {
            return Err(Error::EigConvergence(format!(
                "QR stalled on block {l}..={hi} after {total_iter} sweeps \
                 (trailing subdiagonal {:e})",
                h.get(hi, hi - 1).norm().to_f64().unwrap_or(f64::NAN)
            )));
        }

        let mu = if block_iter % 13 == 0 {
            // exceptional shift to break symmetry-induced cycling
            h.get(hi, hi) + Complex::new(cast::<T>(0.75) * h.get(hi, hi - 1).norm(), T::zero())
        } else {
            wilkinson_shift(
                h.get(hi - 1, hi - 1),
                h.get(hi - 1, hi),
                h.get(hi, hi - 1),
                h.get(hi, hi),
            )
        };

        for i in l..=hi {
            let d = h.get(i, i);
            h.set(i, i, d - mu);
        }
        // forward sweep: rotate rows to annihilate the subdiagonal
        rot.clear();
        for i in l..hi {
            let (c, s, r) = givens(h.get(i, i), h.get(i + 1, i));
            rot.push((c, s));
            h.set(i, i, r);
            h.set(i + 1, i, Complex::new(T::zero(), T::zero()));
            for j in (i + 1)..n {
                let a = h.get(i, j);
                let b = h.get(i + 1, j);
                h.set(i, j, a * c + s * b);
                h.set(i + 1, j, b * c - s.conj() * a);
            }
        }
        // backward sweep: multiply by the adjoint rotations on the right
        for (idx, i) in (l..hi).enumerate() {
            let (c, s) = rot[idx];
            let rmax = (i + 1).min(hi);
            for r in 0..=rmax {
                let a = h.get(r, i);
                let b = h.get(r, i + 1);
                h.set(r, i, a * c + s.conj() * b);
                h.set(r, i + 1, b * c - s * a);
            }
            if let Some(q) = q.as_deref_mut() {
                for r in 0..n {
                    let a = q[r * n + i];
                    let b = q[r * n + i + 1];
                    q[r * n + i] = a * c + s.conj() * b;
                    q[r * n + i + 1] = b * c - s * a;
                }
            }
        }
        for i in l..=hi {
            let d = h.get(i, i);
            h.set(i, i, d + mu);
        }
    }
    Ok(())
}

/// Eigenvalue of the trailing 2x2 [[a, b], [c, d]] closest to d.
fn wilkinson_shift<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> Complex<T> {
    let half = cast::<T>(0.5);
    let tr2 = (a + d) * Complex::new(half, T::zero());
    let delta = (a - d) * Complex::new(half, T::zero());
    let disc = (delta * delta + b * c).sqrt();
    let m1 = tr2 + disc;
    let m2 = tr2 - disc;
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Back-substitution for the eigenvector of the m-th diagonal entry of the
/// triangular factor. Near-zero pivots are regularized at eps * ||T|| and the
/// intermediate vector is rescaled when it grows too large.
fn triangular_eigvec<T: Real>(h: &Workspace<T>, m: usize, tnorm: T) -> Vec<Complex<T>> {
    let lambda = h.get(m, m);
    let eps = T::epsilon();
    // The pivot floor must survive squaring inside complex division, hence
    // sqrt(min_positive) rather than min_positive itself.
    let smin = (eps * tnorm).max(T::min_positive_value().sqrt());
    let big = T::max_value().sqrt() * cast::<T>(1e-4);
    let mut y = vec![Complex::new(T::zero(), T::zero()); m + 1];
    y[m] = Complex::new(T::one(), T::zero());
    for i in (0..m).rev() {
        let mut num = Complex::new(T::zero(), T::zero());
        for j in (i + 1)..=m {
            num = num + h.get(i, j) * y[j];
        }
        if num.norm() == T::zero() {
            continue;
        }
        let mut den = h.get(i, i) - lambda;
        if den.norm() < smin {
            den = Complex::new(smin, T::zero());
        }
        y[i] = -num / den;
        let mag = y[i].norm();
        if mag > big {
            let inv = T::one() / mag;
            for z in y.iter_mut() {
                *z = *z * inv;
            }
        }
    }
    y
}
