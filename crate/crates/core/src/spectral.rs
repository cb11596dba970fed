//! Secular spectrum of a star graph: momenta k where the evolution operator
//! U(k) = D(k) S has eigenvalue 1, found by winding-count bisection on the
//! eigenphase sum, plus eigenvector extraction, multiplicity counting, and
//! convergence scans toward a target vector.
//!
//! The counting identity: det U(k) = e^{2ik sum(L)} det S, so the total
//! eigenphase advances at the exact rate 2 sum(L), while each individual
//! eigenphase is strictly increasing with velocity between min(L) and
//! max(L). Crossings of eigenvalue 1 on (k1, k2] therefore equal
//! (2 sum(L) (k2-k1) - (Theta(k2) - Theta(k1))) / 2 pi, with Theta the sum
//! of eigenphases folded to [0, 2 pi), an integer recoverable by rounding
//! for any step size. The trivial k=0 solution is never reported.

use num_complex::Complex;

use crate::graphcore::StarGraph;
use crate::numkernel::{eig_dense, eigenvalues, null_space, CMat, CVec};
use crate::{cast, Error, Real, Result};

/// One solution of the secular equation with its certificate data.
#[derive(Debug, Clone)]
pub struct SecularRoot<T: Real> {
    /// Momentum of the root.
    pub k: T,
    /// ||(I - U(k)) v|| for the reported eigenvector.
    pub residual: T,
    /// Unit-norm eigenvector of U(k) with eigenvalue closest to 1.
    pub eigenvector: CVec<T>,
    /// Number of eigenphase crossings merged into this root.
    pub multiplicity: usize,
}

/// One record of a convergence scan.
#[derive(Debug, Clone, Copy)]
pub struct TraceRecord<T: Real> {
    pub k: T,
    /// Secular residual of the root this record came from.
    pub residual: T,
    /// Multiplicity of that root.
    pub multiplicity: usize,
    pub distance: T,
    pub running_min: T,
}

/// Distances from secular-root eigenvectors to a fixed target vector,
/// with the running minimum. `running_min` is +infinity when no roots
/// were seen.
#[derive(Debug, Clone)]
pub struct ConvergenceTrace<T: Real> {
    pub target: CVec<T>,
    pub records: Vec<TraceRecord<T>>,
    pub running_min: T,
}

/// Roots of det(I - U(k)) = 0 in [kmin, kmax] at the default scan step
/// pi / (8 max(L)), a 4x safety margin under the eigenphase velocity bound.
pub fn secular_roots<T: Real>(g: &StarGraph<T>, kmin: T, kmax: T) -> Result<Vec<SecularRoot<T>>> {
    let step = T::PI() / (cast::<T>(8.0) * g.max_length());
    secular_roots_with_step(g, kmin, kmax, step)
}

/// Roots with an explicit scan step. The step must satisfy
/// step * 2 * max(L) < pi so no eigenphase can wrap unseen between grid
/// points.
pub fn secular_roots_with_step<T: Real>(
    g: &StarGraph<T>,
    kmin: T,
    kmax: T,
    step: T,
) -> Result<Vec<SecularRoot<T>>> {
    if !kmin.is_finite() || !kmax.is_finite() || kmin < T::zero() || kmin > kmax {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= kmin <= kmax, got [{kmin}, {kmax}]"
        )));
    }
    let two_max_l = cast::<T>(2.0) * g.max_length();
    if !(step > T::zero()) || step * two_max_l >= T::PI() {
        return Err(Error::StepTooLarge(format!(
            "step {step} times 2 max(L) = {} must stay below pi; eigenphases move at up to max(L) per unit k",
            step * two_max_l
        )));
    }
    if kmin == kmax {
        return Ok(Vec::new());
    }

    let two_sl = cast::<T>(2.0) * g.total_length();
    let phase_sum = |k: T| -> Result<T> {
        let vals = eigenvalues(&g.evolution_operator(k))?;
        let two_pi = cast::<T>(2.0) * T::PI();
        Ok(vals
            .iter()
            .map(|v| {
                let a = v.arg();
                if a < T::zero() {
                    a + two_pi
                } else {
                    a
                }
            })
            .sum())
    };
    let two_pi = cast::<T>(2.0) * T::PI();
    let count = |k1: T, th1: T, k2: T, th2: T| -> i64 {
        let raw = (two_sl * (k2 - k1) - (th2 - th1)) / two_pi;
        raw.round().to_i64().expect("crossing count fits i64")
    };

    // (k, multiplicity) accumulated from bisection
    let mut crossings: Vec<(T, usize)> = Vec::new();

    // kmin itself counts as a root when U(kmin) already has eigenvalue 1,
    // except at the trivial k=0 point.
    if kmin > T::zero() {
        let vals = eigenvalues(&g.evolution_operator(kmin))?;
        let one = Complex::new(T::one(), T::zero());
        let hits = vals
            .iter()
            .filter(|v| (*v - one).norm() < cast::<T>(1e-9))
            .count();
        if hits > 0 {
            crossings.push((kmin, hits));
        }
    }

    // outer grid walk; each cell with a nonzero count is bisected
    let mut stack: Vec<(T, T, T, T, i64)> = Vec::new();
    let mut k1 = kmin;
    let mut th1 = phase_sum(kmin)?;
    while k1 < kmax {
        let k2 = (k1 + step).min(kmax);
        let th2 = phase_sum(k2)?;
        let c = count(k1, th1, k2, th2);
        if c > 0 {
            stack.push((k1, th1, k2, th2, c));
        }
        k1 = k2;
        th1 = th2;
    }

    while let Some((a, tha, b, thb, c)) = stack.pop() {
        let width = b - a;
        let tol = cast::<T>(1e-12) * T::one().max(b);
        if width <= tol {
            let mid = (a + b) * cast::<T>(0.5);
            crossings.push((mid, c as usize));
            continue;
        }
        let m = (a + b) * cast::<T>(0.5);
        let thm = phase_sum(m)?;
        let c1 = count(a, tha, m, thm);
        let c2 = c - c1;
        if c1 > 0 {
            stack.push((a, tha, m, thm, c1));
        }
        if c2 > 0 {
            stack.push((m, thm, b, thb, c2));
        }
    }

    crossings.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    // merge crossings within 1e-6 in k into one root with summed multiplicity
    let merge = cast::<T>(1e-6);
    let mut merged: Vec<(T, usize)> = Vec::new();
    for (k, m) in crossings {
        match merged.last_mut() {
            Some((kp, mp)) if k - *kp <= merge => {
                // weighted midpoint keeps the merged k centered
                let total = *mp + m;
                *kp = (*kp * crate::cast_usize::<T>(*mp) + k * crate::cast_usize::<T>(m))
                    / crate::cast_usize::<T>(total);
                *mp = total;
            }
            _ => merged.push((k, m)),
        }
    }

    let mut roots = Vec::with_capacity(merged.len());
    for (k, multiplicity) in merged {
        let (eigenvector, residual) = best_unit_eigenvector(g, k)?;
        roots.push(SecularRoot {
            k,
            residual,
            eigenvector,
            multiplicity,
        });
    }
    Ok(roots)
}

/// Unit eigenvector of U(k) for the eigenvalue closest to 1, with its
/// residual ||(I - U(k)) v||.
fn best_unit_eigenvector<T: Real>(g: &StarGraph<T>, k: T) -> Result<(CVec<T>, T)> {
    let u = g.evolution_operator(k);
    let basis = null_space(&u.identity_minus(), cast::<T>(1e-7))?;
    let v = if let Some(first) = basis.into_iter().next() {
        first
    } else {
        // fall back to the full decomposition when bisection precision
        // left the singular value just above the null-space cut
        let e = eig_dense(&u)?;
        let one = Complex::new(T::one(), T::zero());
        let mut best = 0;
        let mut best_d = T::infinity();
        for (i, val) in e.values.iter().enumerate() {
            let d = (val - one).norm();
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        e.vectors[best].clone().normalized()?
    };
    let iu = u.identity_minus();
    let residual = iu.mul_vec(&v).norm();
    Ok((v, residual))
}

/// Orthonormal basis of the eigenvalue-1 eigenspace of U(k), empty when k
/// is not a secular root. The null-space cut matches the SecularRoot
/// residual bound 1e-7.
pub fn eigenvector_at<T: Real>(g: &StarGraph<T>, k: T) -> Result<Vec<CVec<T>>> {
    let u = g.evolution_operator(k);
    null_space(&u.identity_minus(), cast::<T>(1e-7))
}

/// Number of eigenvalues of `a` within `tol` of `lambda`.
pub fn multiplicity_estimate<T: Real>(
    a: &CMat<T>,
    lambda: Complex<T>,
    tol: T,
) -> Result<usize> {
    a.require_square()?;
    if !(tol > T::zero()) || !tol.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "multiplicity tolerance must be positive and finite, got {tol}"
        )));
    }
    let vals = eigenvalues(a)?;
    Ok(vals.iter().filter(|v| (*v - lambda).norm() < tol).count())
}

/// Scan all secular roots in (0, kmax] and record phase-aligned distances
/// from their eigenvectors to `target`. A record is kept whenever the
/// running minimum improves or `report_every` units of k have passed since
/// the last record, so the trace stays small while the minimum stays exact.
pub fn scar_convergence_scan<T: Real>(
    g: &StarGraph<T>,
    target: &CVec<T>,
    kmax: T,
    report_every: T,
) -> Result<ConvergenceTrace<T>> {
    if target.dim() != 2 * g.bonds() {
        return Err(Error::Shape(format!(
            "target dim {} must equal 2B = {}",
            target.dim(),
            2 * g.bonds()
        )));
    }
    if !(report_every > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "report_every must be positive, got {report_every}"
        )));
    }
    let roots = secular_roots(g, T::zero(), kmax)?;
    let mut records = Vec::new();
    let mut running_min = T::infinity();
    let mut last_reported = T::neg_infinity();
    for root in &roots {
        let distance = target.phase_aligned_distance(&root.eigenvector);
        let improved = distance < running_min;
        if improved {
            running_min = distance;
        }
        if improved || root.k - last_reported >= report_every {
            records.push(TraceRecord {
                k: root.k,
                residual: root.residual,
                multiplicity: root.multiplicity,
                distance,
                running_min,
            });
            last_reported = root.k;
        }
    }
    Ok(ConvergenceTrace {
        target: target.clone(),
        records,
        running_min,
    })
}
