//! Entropy landscape over the dimension-3 affine family of complex Hadamard
//! matrices: at each parameter point the doubled Shannon entropy of the
//! least-entropy eigenvector of diag(1, e^{i x1}, e^{i x2}) F_3, scanned on a
//! periodic grid, with local-minimum location and a degeneracy flag.

use crate::entropy::shannon;
use crate::graphcore::hadamard_family_member;
use crate::numkernel::eig_dense;
use crate::{cast, cast_usize, Error, Real, Result};

/// Grid nodes per axis when the caller does not choose.
pub const DEFAULT_RESOLUTION: usize = 200;
/// Eigenvalue-gap threshold under which a node is flagged as near-degenerate.
/// The landscape's one spectral degeneracy pulls the gap at the nearest
/// default-grid node down to ~7e-3 while every other node stays above 1.4e-2.
pub const DEFAULT_GAP_THRESHOLD: f64 = 1e-2;

/// One evaluated parameter point.
#[derive(Debug, Clone)]
pub struct LandscapePoint<T: Real> {
    pub x1: T,
    pub x2: T,
    /// Twice the Shannon entropy of the least-entropy eigenvector; lies in
    /// [log 3, 2 log 3] by the uncertainty bound for unbiased unitaries.
    pub min_doubled_entropy: T,
    /// Which of the three eigenvectors attains the minimum.
    pub arg_eigenvector_index: usize,
    /// Smallest pairwise eigenvalue distance at this point.
    pub eigenvalue_gap: T,
    /// True when the gap falls under the scan's threshold; the minimum
    /// entropy is discontinuous across spectral degeneracies, so flagged
    /// values should not be over-interpreted.
    pub degenerate: bool,
}

/// A full periodic scan.
#[derive(Debug, Clone)]
pub struct LandscapeGrid<T: Real> {
    pub resolution: usize,
    pub gap_threshold: T,
    /// Row-major: index m * resolution + n holds (x1, x2) = 2 pi (m, n) / resolution.
    pub points: Vec<LandscapePoint<T>>,
}

impl<T: Real> LandscapeGrid<T> {
    pub fn at(&self, m: usize, n: usize) -> &LandscapePoint<T> {
        &self.points[m * self.resolution + n]
    }
}

/// The landscape's exact global minimum, log 3 + 2 log 2 - (2/sqrt 3) log(sqrt 3 + 1),
/// attained at (0, 0) and its two order-3 images.
pub fn exact_minimum_value<T: Real>() -> T {
    let r3 = cast::<T>(3.0).sqrt();
    cast::<T>(3.0).ln() + cast::<T>(2.0) * cast::<T>(2.0).ln()
        - cast::<T>(2.0) / r3 * (r3 + T::one()).ln()
}

/// Evaluates one parameter point: diagonalizes the 3x3 family member and
/// doubles the smallest eigenvector Shannon entropy. Angles are folded into
/// [0, 2 pi).
pub fn landscape_point<T: Real>(x1: T, x2: T, gap_threshold: T) -> Result<LandscapePoint<T>> {
    if !x1.is_finite() || !x2.is_finite() {
        return Err(Error::InvalidParameter(
            "landscape angles must be finite".into(),
        ));
    }
    let m = hadamard_family_member(fold(x1), fold(x2));
    let eig = eig_dense(&m)?;
    let mut best = T::infinity();
    let mut best_index = 0;
    for (i, v) in eig.vectors.iter().enumerate() {
        let s = shannon(v)?;
        if s < best {
            best = s;
            best_index = i;
        }
    }
    let mut gap = T::infinity();
    for i in 0..eig.values.len() {
        for j in (i + 1)..eig.values.len() {
            gap = gap.min((eig.values[i] - eig.values[j]).norm());
        }
    }
    Ok(LandscapePoint {
        x1: fold(x1),
        x2: fold(x2),
        min_doubled_entropy: cast::<T>(2.0) * best,
        arg_eigenvector_index: best_index,
        eigenvalue_gap: gap,
        degenerate: gap < gap_threshold,
    })
}

/// Scans the resolution x resolution periodic grid with the default
/// degeneracy threshold.
pub fn scan<T: Real>(resolution: usize) -> Result<LandscapeGrid<T>> {
    scan_with_threshold(resolution, cast::<T>(DEFAULT_GAP_THRESHOLD))
}

/// Scan with a caller-chosen degeneracy threshold.
pub fn scan_with_threshold<T: Real>(
    resolution: usize,
    gap_threshold: T,
) -> Result<LandscapeGrid<T>> {
    if resolution < 8 {
        return Err(Error::InvalidParameter(format!(
            "scan resolution must be at least 8, got {resolution}"
        )));
    }
    let step = cast::<T>(2.0) * T::PI() / cast_usize::<T>(resolution);
    let mut points = Vec::with_capacity(resolution * resolution);
    for m in 0..resolution {
        for n in 0..resolution {
            points.push(landscape_point(
                step * cast_usize::<T>(m),
                step * cast_usize::<T>(n),
                gap_threshold,
            )?);
        }
    }
    Ok(LandscapeGrid {
        resolution,
        gap_threshold,
        points,
    })
}

/// Local minima of the scanned values under 8-neighbor comparison with
/// periodic wrapping, sorted ascending by value. Ties count as minima, so a
/// constant grid reports every node; callers filter as needed.
pub fn find_minima<T: Real>(grid: &LandscapeGrid<T>) -> Vec<(T, T, T)> {
    let res = grid.resolution;
    let mut out = Vec::new();
    for m in 0..res {
        for n in 0..res {
            let value = grid.at(m, n).min_doubled_entropy;
            let mut is_min = true;
            'nbr: for dm in [res - 1, 0, 1] {
                for dn in [res - 1, 0, 1] {
                    if dm == 0 && dn == 0 {
                        continue;
                    }
                    if grid.at((m + dm) % res, (n + dn) % res).min_doubled_entropy < value {
                        is_min = false;
                        break 'nbr;
                    }
                }
            }
            if is_min {
                let p = grid.at(m, n);
                out.push((p.x1, p.x2, value));
            }
        }
    }
    out.sort_by(|a, b| a.2.partial_cmp(&b.2).expect("finite landscape values"));
    out
}

fn fold<T: Real>(a: T) -> T {
    let two_pi = cast::<T>(2.0) * T::PI();
    let folded = a - (a / two_pi).floor() * two_pi;
    // guard against folding exactly onto 2 pi through rounding
    if folded >= two_pi {
        folded - two_pi
    } else {
        folded
    }
}
