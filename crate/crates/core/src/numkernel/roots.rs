//! Polynomial roots via the companion-matrix eigenproblem, with a single
//! guarded Newton step to polish each root.

use num_complex::Complex;

use super::eig::eigenvalues;
use super::CMat;
use crate::{Error, Real, Result};

/// Roots of a polynomial with residuals |p(root)|.
#[derive(Debug, Clone)]
pub struct PolyRoots<T> {
    pub roots: Vec<Complex<T>>,
    pub residuals: Vec<T>,
}

impl<T: Real> PolyRoots<T> {
    pub fn max_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |a, b| a.max(*b))
    }
}

/// Computes all roots of c[0] + c[1] x + ... + c[d] x^d. Requires degree >= 1
/// and a nonzero leading coefficient.
pub fn poly_roots<T: Real>(coeffs: &[Complex<T>]) -> Result<PolyRoots<T>> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidParameter(
            "polynomial degree must be at least 1".into(),
        ));
    }
    for (i, z) in coeffs.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite { index: i });
        }
    }
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    if lead.norm() <= T::zero() {
        return Err(Error::InvalidParameter(
            "leading coefficient must be nonzero".into(),
        ));
    }
    // monic normalization, then the Frobenius companion matrix
    let monic: Vec<Complex<T>> = coeffs[..d].iter().map(|c| *c / lead).collect();
    let mut comp = CMat::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = Complex::new(T::one(), T::zero());
    }
    for i in 0..d {
        comp[(i, d - 1)] = -monic[i];
    }
    let raw = eigenvalues(&comp)?;
    let mut roots = Vec::with_capacity(d);
    let mut residuals = Vec::with_capacity(d);
    for z in raw {
        let polished = newton_polish(coeffs, z);
        residuals.push(eval(coeffs, polished).norm());
        roots.push(polished);
    }
    Ok(PolyRoots { roots, residuals })
}

fn eval<T: Real>(coeffs: &[Complex<T>], x: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for c in coeffs.iter().rev() {
        acc = acc * x + *c;
    }
    acc
}

fn eval_deriv<T: Real>(coeffs: &[Complex<T>], x: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (k, c) in coeffs.iter().enumerate().skip(1).rev() {
        let kc = *c * T::from_usize(k).unwrap();
        acc = acc * x + kc;
    }
    acc
}

/// One Newton step, kept only if it does not increase the residual.
fn newton_polish<T: Real>(coeffs: &[Complex<T>], z: Complex<T>) -> Complex<T> {
    let p = eval(coeffs, z);
    let dp = eval_deriv(coeffs, z);
    if dp.norm() <= T::min_positive_value() {
        return z;
    }
    let cand = z - p / dp;
    if eval(coeffs, cand).norm() <= p.norm() {
        cand
    } else {
        z
    }
}
