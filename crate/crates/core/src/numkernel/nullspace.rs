//! Null-space extraction through column-pivoted Householder QR. The pivoted
//! diagonal of R tracks the singular values closely for gap-separated ranks,
//! so small singular directions are resolved at machine precision instead of
//! the sqrt(eps) floor a normal-equations approach would impose.

use num_complex::Complex;

use super::{CMat, CVec};
use crate::{cast, Error, Real, Result};

/// Orthonormal basis of the numerical null space of `a`: all right singular
/// directions with singular value below `tol`. Every returned vector v
/// satisfies ||A v|| < 10 * tol. The full-rank case returns an empty list.
pub fn null_space<T: Real>(a: &CMat<T>, tol: T) -> Result<Vec<CVec<T>>> {
    if tol <= T::zero() || !tol.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "null-space tolerance must be positive and finite, got {tol}"
        )));
    }
    let m = a.rows();
    let n = a.cols();
    let zero = Complex::new(T::zero(), T::zero());

    // Working copy of A in column-permuted order; perm[k] is the original
    // column index now stored at position k.
    let mut r = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let steps = m.min(n);
    let mut rank = steps;
    for k in 0..steps {
        // Exact column norms below the current row; the matrices here are
        // small enough that recomputing beats downdating for robustness.
        let mut best = k;
        let mut best_norm = T::zero();
        for j in k..n {
            let mut s = T::zero();
            for i in k..m {
                s += r[(i, j)].norm_sqr();
            }
            if s > best_norm {
                best_norm = s;
                best = j;
            }
        }
        if best != k {
            perm.swap(k, best);
            for i in 0..m {
                let tmp = r[(i, k)];
                r[(i, k)] = r[(i, best)];
                r[(i, best)] = tmp;
            }
        }
        let nrm = best_norm.sqrt();
        if nrm < tol {
            rank = k;
            break;
        }
        // Householder reflector sending the pivot column to -s*nrm*e1.
        let x0 = r[(k, k)];
        let s = if x0.norm() > T::zero() {
            x0 / Complex::new(x0.norm(), T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        };
        let mut v: Vec<Complex<T>> = (k..m).map(|i| r[(i, k)]).collect();
        v[0] = v[0] + s * Complex::new(nrm, T::zero());
        let vv: T = v.iter().map(|z| z.norm_sqr()).sum();
        if vv > T::zero() {
            let beta = cast::<T>(2.0) / vv;
            for j in k..n {
                let mut w = zero;
                for (t, vi) in v.iter().enumerate() {
                    w = w + vi.conj() * r[(k + t, j)];
                }
                let wb = w * Complex::new(beta, T::zero());
                for (t, vi) in v.iter().enumerate() {
                    let cur = r[(k + t, j)];
                    r[(k + t, j)] = cur - *vi * wb;
                }
            }
        }
        r[(k, k)] = -s * Complex::new(nrm, T::zero());
        for i in (k + 1)..m {
            r[(i, k)] = zero;
        }
    }

    // Null directions in permuted coordinates: for each free column f solve
    // R11 w = -R[0..rank, f] by back substitution, append the unit at f.
    let mut basis: Vec<CVec<T>> = Vec::with_capacity(n - rank);
    for f in rank..n {
        let mut w = vec![zero; rank];
        for i in (0..rank).rev() {
            let mut acc = r[(i, f)];
            for (j, wj) in w.iter().enumerate().skip(i + 1) {
                acc = acc + r[(i, j)] * *wj;
            }
            w[i] = -acc / r[(i, i)];
        }
        let mut y = vec![zero; n];
        for (k, wk) in w.iter().enumerate() {
            y[perm[k]] = *wk;
        }
        y[perm[f]] = Complex::new(T::one(), T::zero());
        let mut v = CVec::from_raw(y);
        // Gram-Schmidt against the vectors already chosen, then normalize.
        for b in &basis {
            let proj = b.dot(&v);
            v = v.sub(&b.scale(proj));
        }
        match v.normalized() {
            Ok(unit) => basis.push(unit),
            Err(_) => {
                return Err(Error::Degenerate(
                    "null-space basis collapsed during orthonormalization".into(),
                ))
            }
        }
    }
    Ok(basis)
}
