//! Shannon and Renyi entropies of component distributions, entropic
//! uncertainty lower bounds for eigenvectors of unitary matrices, the closed
//! forms the scar families attain, and a log-trigonometric integral with its
//! quadrature oracle.
//!
//! All entropies are in nats and act on p_b = |v_b|^2 / |v|^2; inputs are
//! never assumed pre-normalized, and 0 log 0 = 0 by continuity.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_complex::Complex;

use crate::numkernel::{adaptive_quadrature, CMat, CVec};
use crate::{cast, cast_usize, Error, Real, Result, Sign};

/// Renyi orders closer to zero than this are routed to the Shannon limit,
/// which the Renyi entropy approaches as the order vanishes.
const RENYI_SHANNON_GUARD: f64 = 1e-6;

/// -sum p log p over the component distribution of v.
pub fn shannon<T: Real>(v: &CVec<T>) -> Result<T> {
    Ok(shannon_of_probs(&v.probabilities()?))
}

/// Renyi entropy of order rho: -(1/rho) log sum p^(1+rho). Requires
/// rho > -1; orders within 1e-6 of zero fall back to the Shannon limit.
pub fn renyi<T: Real>(v: &CVec<T>, rho: T) -> Result<T> {
    if !rho.is_finite() || rho <= -T::one() {
        return Err(Error::InvalidParameter(format!(
            "Renyi order must be finite and greater than -1, got {rho}"
        )));
    }
    let probs = v.probabilities()?;
    if rho.abs() < cast::<T>(RENYI_SHANNON_GUARD) {
        return Ok(shannon_of_probs(&probs));
    }
    // factor out the largest probability so the power sum stays in [1, dim]
    // even for very large orders, where p^(1+rho) would underflow
    let max = probs.iter().copied().fold(T::zero(), T::max);
    let mut acc = T::zero();
    for p in &probs {
        if *p > T::zero() {
            acc += (*p / max).powf(T::one() + rho);
        }
    }
    Ok(-((T::one() + rho) * max.ln() + acc.ln()) / rho)
}

/// Min-entropy: -log max_b p_b, the rho -> infinity limit of the Renyi
/// entropy.
pub fn renyi_inf<T: Real>(v: &CVec<T>) -> Result<T> {
    let probs = v.probabilities()?;
    let max = probs.iter().copied().fold(T::zero(), T::max);
    Ok(-max.ln())
}

fn shannon_of_probs<T: Real>(probs: &[T]) -> T {
    let mut acc = T::zero();
    for p in probs {
        if *p > T::zero() {
            acc -= *p * p.ln();
        }
    }
    acc
}

/// Entropy measures of one vector at the requested Renyi orders, optionally
/// carrying the uncertainty lower bounds of the matrix whose eigenvector the
/// vector is.
#[derive(Debug, Clone)]
pub struct EntropyReport<T: Real> {
    pub dim: usize,
    pub shannon: T,
    /// (order, value) pairs in the requested order.
    pub renyi: Vec<(T, T)>,
    pub renyi_inf: T,
    pub lower_bound_shannon: Option<T>,
    pub lower_bound_renyi_pair: Option<T>,
}

/// Evaluates Shannon, the requested Renyi orders, and the min-entropy.
pub fn entropy_report<T: Real>(v: &CVec<T>, rhos: &[T]) -> Result<EntropyReport<T>> {
    let mut pairs = Vec::with_capacity(rhos.len());
    for &rho in rhos {
        pairs.push((rho, renyi(v, rho)?));
    }
    Ok(EntropyReport {
        dim: v.dim(),
        shannon: shannon(v)?,
        renyi: pairs,
        renyi_inf: renyi_inf(v)?,
        lower_bound_shannon: None,
        lower_bound_renyi_pair: None,
    })
}

/// As entropy_report, with the uncertainty lower bounds of the given unitary
/// attached.
pub fn entropy_report_with_bounds<T: Real>(
    v: &CVec<T>,
    rhos: &[T],
    u: &CMat<T>,
    sigma: T,
) -> Result<EntropyReport<T>> {
    let (s_bound, pair_bound) = uncertainty_bounds(u, sigma)?;
    let mut report = entropy_report(v, rhos)?;
    report.lower_bound_shannon = Some(s_bound);
    report.lower_bound_renyi_pair = Some(pair_bound);
    Ok(report)
}

/// Entropic uncertainty lower bounds for eigenvectors of a unitary matrix U:
/// every eigenvector x satisfies s(x) >= -log max|U_ij| (Shannon) and
/// r_{sigma/(1-sigma)}(x) + r_{-sigma/(1+sigma)}(x) >= -log max|U_ij|^2 for
/// 0 <= sigma <= 1. The bound values do not depend on sigma; it is accepted
/// and validated because it names which Renyi pair the second bound governs.
pub fn uncertainty_bounds<T: Real>(u: &CMat<T>, sigma: T) -> Result<(T, T)> {
    u.require_unitary(cast::<T>(1e-10))?;
    if !(sigma >= T::zero() && sigma <= T::one()) {
        return Err(Error::InvalidParameter(format!(
            "sigma must lie in [0, 1], got {sigma}"
        )));
    }
    let max = u.max_abs();
    let pair = -(cast::<T>(2.0) * max.ln());
    Ok((-max.ln(), pair))
}

/// Shannon entropy of the reduced half-scar eigenvector (eps2 N, 1, ..., 1):
/// log(2D) - ((N^2 - (B-1))/(N^2 + (B-1))) log N with D = sqrt(B - sin^2 kappa)
/// and N = D + eps2 cos kappa. Valid for B >= 2 and 0 <= kappa < pi/2.
pub fn halfscar_entropy_closed_form<T: Real>(bonds: usize, kappa: T, eps2: Sign) -> Result<T> {
    let (d, n) = halfscar_dn(bonds, kappa, eps2)?;
    let b1 = cast_usize::<T>(bonds - 1);
    let n2 = n * n;
    Ok((cast::<T>(2.0) * d).ln() - (n2 - b1) / (n2 + b1) * n.ln())
}

/// The sigma -> 1 Renyi pair r_inf + r_{-1/2} of the reduced half-scar:
/// -log N + 2 log(N^(1/2) + (B-1) N^(-1/2)). The identity presumes the
/// enhanced component dominates, so N >= 1 is required.
pub fn halfscar_renyi_pair_closed_form<T: Real>(
    bonds: usize,
    kappa: T,
    eps2: Sign,
) -> Result<T> {
    let (_, n) = halfscar_dn(bonds, kappa, eps2)?;
    if n < T::one() {
        return Err(Error::Degenerate(format!(
            "pair identity needs the enhanced component to dominate, N = {n} < 1"
        )));
    }
    let b1 = cast_usize::<T>(bonds - 1);
    let root = n.sqrt();
    Ok(-n.ln() + cast::<T>(2.0) * (root + b1 / root).ln())
}

/// The sigma -> 1 Renyi pair of the reduced equi-transmitting eigenvector:
/// log(B-1) + 2 log(1 + (B-1)^(-1/2)), exact for every admissible B.
pub fn et_renyi_pair_closed_form<T: Real>(bonds: usize) -> Result<T> {
    if bonds < 3 {
        return Err(Error::InvalidParameter(format!(
            "pair value needs at least 3 bonds, got {bonds}"
        )));
    }
    let b1 = cast_usize::<T>(bonds - 1);
    Ok(b1.ln() + cast::<T>(2.0) * (T::one() + b1.sqrt().recip()).ln())
}

fn halfscar_dn<T: Real>(bonds: usize, kappa: T, eps2: Sign) -> Result<(T, T)> {
    if bonds < 2 {
        return Err(Error::InvalidParameter(format!(
            "half-scar closed forms need at least 2 bonds, got {bonds}"
        )));
    }
    if !(kappa >= T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::InvalidParameter(
            "kappa must lie in [0, pi/2) for the half-scar closed forms".into(),
        ));
    }
    let sin_k = kappa.sin();
    let d = (cast_usize::<T>(bonds) - sin_k * sin_k).sqrt();
    let n = d + eps2.scalar::<T>() * kappa.cos();
    Ok((d, n))
}

/// Outcome of checking the doubling relations S(a) = s(x) + log 2 and
/// R_rho(a) = r_rho(x) + log 2 on the lifted vector a built from x.
#[derive(Debug, Clone)]
pub struct LiftRelationReport<T: Real> {
    /// The lifted unit vector (mu x_hat; P(kappa) x_hat) / sqrt 2.
    pub lifted: CVec<T>,
    /// |S(a) - s(x) - log 2|.
    pub shannon_gap: T,
    /// (rho, |R_rho(a) - r_rho(x) - log 2|) for each requested order.
    pub renyi_gaps: Vec<(T, T)>,
}

impl<T: Real> LiftRelationReport<T> {
    pub fn max_gap(&self) -> T {
        self.renyi_gaps
            .iter()
            .map(|(_, g)| *g)
            .fold(self.shannon_gap, T::max)
    }
}

/// Builds the lift a = (lambda^(1/2) x_hat; P(kappa) x_hat) / sqrt 2, whose
/// halves carry the component moduli of x at half weight, and reports how
/// far the entropies sit from s(x) + log 2 and r_rho(x) + log 2.
pub fn entropy_relations_check<T: Real>(
    x: &CVec<T>,
    kappa: T,
    lambda: Complex<T>,
    rhos: &[T],
) -> Result<LiftRelationReport<T>> {
    if (lambda.norm() - T::one()).abs() > cast::<T>(1e-12) {
        return Err(Error::InvalidParameter(
            "lift eigenvalue must have unit modulus".into(),
        ));
    }
    let x_hat = x.normalized()?;
    let bonds = x_hat.dim();
    let mu = lambda.sqrt();
    let inv_sqrt2 = cast::<T>(0.5).sqrt();
    let lifted = CVec::from_fn(2 * bonds, |i| {
        if i < bonds {
            mu * x_hat[i] * inv_sqrt2
        } else {
            let phase = if i == bonds {
                Complex::from_polar(T::one(), kappa)
            } else {
                Complex::new(T::one(), T::zero())
            };
            phase * x_hat[i - bonds] * inv_sqrt2
        }
    });
    let log2 = cast::<T>(2.0).ln();
    let shannon_gap = (shannon(&lifted)? - shannon(x)? - log2).abs();
    let mut renyi_gaps = Vec::with_capacity(rhos.len());
    for &rho in rhos {
        renyi_gaps.push((rho, (renyi(&lifted, rho)? - renyi(x, rho)? - log2).abs()));
    }
    Ok(LiftRelationReport {
        lifted,
        shannon_gap,
        renyi_gaps,
    })
}

/// Reference entropy values the scar families approach (or attain) as the
/// bond count grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScarEntropyAsymptote {
    /// Lifted first-bond Fourier scar Shannon entropy, leading order.
    FourierFirstBondShannon,
    /// Its sigma -> 1 Renyi pair, leading order.
    FourierFirstBondRenyiPair,
    /// Lifted equi-transmitting scar Shannon entropy, exact for all B.
    EquiTransmittingShannon,
    /// Its sigma -> 1 Renyi pair, leading order.
    EquiTransmittingRenyiPair,
    /// Reduced two-bond eigenvector Shannon entropy, leading order.
    GeneralJReducedShannon,
    /// Lifted two-bond scar Shannon entropy, leading order.
    GeneralJLiftedShannon,
    /// Kirchhoff two-bond eigenvector Shannon entropy, exact for all B.
    KirchhoffShannon,
}

impl Display for ScarEntropyAsymptote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ScarEntropyAsymptote::FourierFirstBondShannon => "fourier-first-bond-shannon",
            ScarEntropyAsymptote::FourierFirstBondRenyiPair => "fourier-first-bond-renyi-pair",
            ScarEntropyAsymptote::EquiTransmittingShannon => "equi-transmitting-shannon",
            ScarEntropyAsymptote::EquiTransmittingRenyiPair => "equi-transmitting-renyi-pair",
            ScarEntropyAsymptote::GeneralJReducedShannon => "general-j-reduced-shannon",
            ScarEntropyAsymptote::GeneralJLiftedShannon => "general-j-lifted-shannon",
            ScarEntropyAsymptote::KirchhoffShannon => "kirchhoff-shannon",
        };
        write!(f, "{name}")
    }
}

impl FromStr for ScarEntropyAsymptote {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fourier-first-bond-shannon" => Ok(Self::FourierFirstBondShannon),
            "fourier-first-bond-renyi-pair" => Ok(Self::FourierFirstBondRenyiPair),
            "equi-transmitting-shannon" => Ok(Self::EquiTransmittingShannon),
            "equi-transmitting-renyi-pair" => Ok(Self::EquiTransmittingRenyiPair),
            "general-j-reduced-shannon" => Ok(Self::GeneralJReducedShannon),
            "general-j-lifted-shannon" => Ok(Self::GeneralJLiftedShannon),
            "kirchhoff-shannon" => Ok(Self::KirchhoffShannon),
            other => Err(Error::InvalidParameter(format!(
                "unknown entropy reference family '{other}'"
            ))),
        }
    }
}

/// Evaluates the reference expression at a given bond count.
pub fn asymptotic_reference<T: Real>(
    family: ScarEntropyAsymptote,
    bonds: usize,
) -> Result<T> {
    if bonds < 2 {
        return Err(Error::InvalidParameter(format!(
            "reference values need at least 2 bonds, got {bonds}"
        )));
    }
    let b = cast_usize::<T>(bonds);
    let b1 = cast_usize::<T>(bonds - 1);
    let log2 = cast::<T>(2.0).ln();
    let half = cast::<T>(0.5);
    let two = cast::<T>(2.0);
    let three = cast::<T>(3.0);
    Ok(match family {
        ScarEntropyAsymptote::FourierFirstBondShannon => half * b.ln() + two * log2,
        ScarEntropyAsymptote::FourierFirstBondRenyiPair => b.ln() + two * log2,
        ScarEntropyAsymptote::EquiTransmittingShannon => half * b1.ln() + two * log2,
        ScarEntropyAsymptote::EquiTransmittingRenyiPair => b1.ln() + two * log2,
        ScarEntropyAsymptote::GeneralJReducedShannon => half * b.ln() + two * log2 - half,
        ScarEntropyAsymptote::GeneralJLiftedShannon => half * b.ln() + three * log2 - half,
        ScarEntropyAsymptote::KirchhoffShannon => two * log2,
    })
}

/// Closed form of the integral of (alpha + beta cos t) log(a + b cos t) over
/// one period: 2 pi (alpha log((a + sqrt(a^2-b^2))/2) + beta b/(a + sqrt(a^2-b^2))).
/// Admissible for a > 0 and |b| < a, plus the boundary instance
/// alpha = beta = a = b, where the limit 2 pi a (1 + log(a/2)) is returned.
pub fn log_cos_integral<T: Real>(alpha: T, beta: T, a: T, b: T) -> Result<T> {
    if !(a > T::zero()) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "integral needs finite parameters with a > 0, got a = {a}, b = {b}"
        )));
    }
    let two_pi = cast::<T>(2.0) * T::PI();
    if b == a && alpha == a && beta == b {
        // integrable log singularity at t = pi; the closed form's limit
        return Ok(two_pi * a * (T::one() + (a / cast::<T>(2.0)).ln()));
    }
    if b.abs() >= a {
        return Err(Error::InvalidParameter(format!(
            "integral needs |b| < a, got a = {a}, b = {b}"
        )));
    }
    // (a - sqrt(a^2-b^2))/b rewritten as b/(a + sqrt(a^2-b^2)) to dodge
    // cancellation near b = 0; the b -> 0 limit is then automatic
    let s = (a * a - b * b).sqrt();
    Ok(two_pi * (alpha * ((a + s) / cast::<T>(2.0)).ln() + beta * b / (a + s)))
}

/// The defining integrand of log_cos_integral, exposed so the closed form
/// can be checked against direct quadrature.
pub fn log_cos_integrand<T: Real>(alpha: T, beta: T, a: T, b: T, t: T) -> T {
    (alpha + beta * t.cos()) * (a + b * t.cos()).ln()
}

/// Quadrature evaluation of the same integral, for use as an oracle.
pub fn log_cos_integral_quadrature<T: Real>(alpha: T, beta: T, a: T, b: T, tol: T) -> Result<T> {
    if !(a > T::zero()) || b.abs() >= a {
        return Err(Error::InvalidParameter(
            "quadrature oracle needs a > 0 and |b| < a".into(),
        ));
    }
    let two_pi = cast::<T>(2.0) * T::PI();
    adaptive_quadrature(
        &|t| log_cos_integrand(alpha, beta, a, b, t),
        T::zero(),
        two_pi,
        tol,
    )
}
