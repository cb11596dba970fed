//! Closed-form eigenvector families that pile half of their mass onto chosen
//! bonds, each certified at construction time: eigen-residual against the
//! doubled matrix, simplicity of the reduced eigenvalue, and the norm
//! identities the family obeys.

use std::fmt::{self, Display};

use num_complex::Complex;

use crate::graphcore::{
    fourier_matrix, fourier_permuter, lift_pair, paley_equitransmitting, phase_point,
};
use crate::numkernel::{eigenvalues, poly_roots, CMat, CVec};
use crate::spectral::multiplicity_estimate;
use crate::{cast, cast_usize, Error, Real, Result, Sign};

/// Eigen-residual ceiling demanded of every constructed scar.
const RESIDUAL_TOL: f64 = 1e-9;
/// Cluster radius used when certifying that the reduced eigenvalue is simple.
const SIMPLICITY_TOL: f64 = 1e-6;

/// The four analytic scar families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScarFamily {
    /// Fourier centre, first bond stretched; half the mass on bond 1.
    FourierFirstBond,
    /// Fourier centre, bond j stretched; mass split over bonds j and B+2-j.
    FourierGeneralJ,
    /// Fourier centre conjugated so the enhanced bond sits at index j.
    FourierPermuted,
    /// Equi-transmitting centre, first bond stretched.
    EquiTransmitting,
}

impl Display for ScarFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ScarFamily::FourierFirstBond => "fourier-first-bond",
            ScarFamily::FourierGeneralJ => "fourier-general-j",
            ScarFamily::FourierPermuted => "fourier-permuted",
            ScarFamily::EquiTransmitting => "equi-transmitting",
        };
        write!(f, "{name}")
    }
}

/// A certified eigenvector of a doubled 2B x 2B bond matrix together with the
/// parameters that produced it.
#[derive(Debug, Clone)]
pub struct ScarVector<T: Real> {
    pub family: ScarFamily,
    /// Unit-norm eigenvector, inward components first.
    pub vec: CVec<T>,
    /// Stretch phase of the enhanced bond.
    pub kappa: T,
    /// Sign of the square-root eigenvalue picked by the lift.
    pub eps1: Sign,
    /// Branch of the reduced eigenpair. Unused by the general-j family,
    /// which indexes its four branches by eigenvalue phase instead; stored
    /// as +1 there.
    pub eps2: Sign,
    /// Enhanced bond, 1-based.
    pub j: usize,
    /// Unit-modulus eigenvalue of the doubled matrix.
    pub eigenvalue: Complex<T>,
}

impl<T: Real> ScarVector<T> {
    pub fn bonds(&self) -> usize {
        self.vec.dim() / 2
    }

    /// Rebuilds the doubled 2B x 2B matrix this vector was certified against.
    /// The equi-transmitting branch reassembles the Paley matrix; vectors
    /// built from a caller-supplied central matrix must be checked against
    /// that matrix directly.
    pub fn doubled_matrix(&self) -> Result<CMat<T>> {
        let b = self.bonds();
        let (sigma, pi) = match self.family {
            ScarFamily::FourierFirstBond | ScarFamily::FourierPermuted => {
                let diag = phase_point::<T>(b, self.j, self.kappa)?
                    .mul(&fourier_permuter::<T>(b, self.j)?);
                (diag.mul(&fourier_matrix::<T>(b)?), diag)
            }
            ScarFamily::FourierGeneralJ => {
                let pj = phase_point::<T>(b, self.j, self.kappa)?;
                (pj.mul(&fourier_matrix::<T>(b)?), pj)
            }
            ScarFamily::EquiTransmitting => {
                let p = phase_point::<T>(b, 1, self.kappa)?;
                (p.mul(&paley_equitransmitting::<T>(b)?), p)
            }
        };
        Ok(CMat::block_antidiagonal(&sigma, &pi))
    }

    fn certify(&self, doubled: &CMat<T>) -> Result<()> {
        let tol = cast::<T>(1e-12);
        if (self.vec.norm() - T::one()).abs() > tol {
            return Err(Error::Degenerate("scar vector lost unit norm".into()));
        }
        if (self.eigenvalue.norm() - T::one()).abs() > tol {
            return Err(Error::Degenerate("scar eigenvalue lost unit modulus".into()));
        }
        let res = eigen_residual(doubled, &self.vec, self.eigenvalue);
        if res > cast::<T>(RESIDUAL_TOL) {
            return Err(Error::NotAnEigenpair(res.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(())
    }
}

/// Reduced B-dimensional eigenvector data for a stretched bond, kept with the
/// uniform components equal to one so the identities stay in closed form:
/// the enhanced entry is eps2 * n, |x|^2 = 2 d n, and n^2 = B - 1 + 2 eps2 n cos(kappa).
#[derive(Debug, Clone)]
pub struct HalfScarCore<T: Real> {
    /// Unnormalized eigenvector of the reduced matrix.
    pub x: CVec<T>,
    /// Its eigenvalue, e^{i(pi/2 + kappa + eps2 phi)}.
    pub lambda: Complex<T>,
    /// Enhancement factor: the modulus of the enhanced entry, d + eps2 cos(kappa).
    pub n: T,
    /// Half-spread sqrt(B - sin^2 kappa) of the perturbed eigenphase pair.
    pub d: T,
    /// Branch angle in (-pi/2, 0) satisfying sin(phi) sin(kappa) + d cos(phi) = 0.
    pub phi: T,
}

/// Scar on the first bond of a Fourier star: the reduced eigenvector is
/// (eps2 n, 1, ..., 1) up to scale, and the lift doubles it with the
/// square-root eigenvalue eps1 e^{i(pi/4 + kappa/2 + eps2 phi/2)}.
pub fn fourier_halfscar<T: Real>(
    bonds: usize,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
) -> Result<(ScarVector<T>, HalfScarCore<T>)> {
    assemble_halfscar(ScarFamily::FourierFirstBond, bonds, 1, kappa, eps1, eps2)
}

/// The first-bond construction conjugated by the diagonal permuter so the
/// enhanced bond sits at index j. Component moduli, and hence entropies, are
/// a permutation of the first-bond case's.
pub fn permuted_halfscar<T: Real>(
    bonds: usize,
    j: usize,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
) -> Result<ScarVector<T>> {
    assemble_halfscar(ScarFamily::FourierPermuted, bonds, j, kappa, eps1, eps2).map(|(s, _)| s)
}

/// Scar on the first bond of an equi-transmitting star over the admissible
/// prime bond counts.
pub fn equitransmitting_halfscar<T: Real>(
    bonds: usize,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
) -> Result<ScarVector<T>> {
    let e = paley_equitransmitting::<T>(bonds)?;
    equitransmitting_halfscar_with(&e, kappa, eps1, eps2)
}

/// Equi-transmitting scar for a caller-supplied central matrix. The matrix
/// must be unitary and must exchange the first coordinate direction with the
/// flat unit vector on the remaining entries; kappa may range over (0, pi]
/// as long as eps2 e^{i kappa} stays clear of the matrix spectrum.
pub fn equitransmitting_halfscar_with<T: Real>(
    e: &CMat<T>,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
) -> Result<ScarVector<T>> {
    let bonds = e.require_square()?;
    if bonds < 2 {
        return Err(Error::InvalidParameter(format!(
            "equi-transmitting construction needs at least 2 bonds, got {bonds}"
        )));
    }
    e.require_unitary(cast::<T>(1e-10))?;
    if !(kappa > T::zero() && kappa <= T::PI()) {
        return Err(Error::InvalidParameter(
            "kappa must lie in (0, pi] for the equi-transmitting scar".into(),
        ));
    }
    let zero = Complex::new(T::zero(), T::zero());
    let flat_entry = cast_usize::<T>(bonds - 1).sqrt().recip();
    let u1 = CVec::basis(bonds, 0);
    let flat = CVec::from_fn(bonds, |i| {
        if i == 0 {
            zero
        } else {
            Complex::new(flat_entry, T::zero())
        }
    });
    let swap_tol = cast::<T>(1e-10);
    if e.mul_vec(&u1).sub(&flat).norm() > swap_tol || e.mul_vec(&flat).sub(&u1).norm() > swap_tol {
        return Err(Error::InvalidParameter(
            "central matrix does not exchange the first coordinate with the flat direction"
                .into(),
        ));
    }
    let mu = Complex::from_polar(T::one(), kappa) * eps2.scalar::<T>();
    let gap = eigenvalues(e)?
        .iter()
        .map(|z| (z - mu).norm())
        .fold(T::infinity(), T::min);
    if gap < cast::<T>(1e-8) {
        return Err(Error::Degenerate(format!(
            "eps2 e^(i kappa) lies within {:.1e} of the central spectrum",
            gap.to_f64().unwrap_or(f64::NAN)
        )));
    }

    let enhanced = eps2.scalar::<T>() * cast_usize::<T>(bonds - 1).sqrt();
    let y = CVec::from_fn(bonds, |i| {
        if i == 0 {
            Complex::new(enhanced, T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        }
    })
    .normalized()?;
    let p = phase_point::<T>(bonds, 1, kappa)?;
    let sigma = p.mul(e);
    let reduced = sigma.mul(&p);
    if eigen_residual(&reduced, &y, mu) > cast::<T>(1e-10) {
        return Err(Error::NotAnEigenpair(f64::NAN));
    }
    if multiplicity_estimate(&reduced, mu, cast::<T>(SIMPLICITY_TOL))? != 1 {
        return Err(Error::Degenerate(
            "reduced eigenvalue is not simple at this kappa".into(),
        ));
    }

    let quarter_pi = T::FRAC_PI_4();
    let half = cast::<T>(0.5);
    let target = Complex::from_polar(
        T::one(),
        quarter_pi * (T::one() - eps2.scalar::<T>()) + half * kappa,
    ) * eps1.scalar::<T>();
    let scar = pick_lift_branch(
        ScarFamily::EquiTransmitting,
        &sigma,
        &p,
        &y,
        mu,
        target,
        kappa,
        eps1,
        eps2,
        1,
    )?;
    Ok(scar)
}

/// The Fourier matrix with its jth row scaled by e^{2 i kappa}: a rank-one
/// change that leaves the matrix untouched on the complement of the jth
/// coordinate direction.
pub fn perturbed_fourier<T: Real>(bonds: usize, j: usize, kappa: T) -> Result<CMat<T>> {
    let f = fourier_matrix::<T>(bonds)?;
    Ok(phase_point::<T>(bonds, j, cast::<T>(2.0) * kappa)?.mul(&f))
}

/// The four perturbed eigenvalues of the row-phased Fourier matrix: roots of
/// z^4 - (K/sqrt B) e^{i theta} z^3 - (K/sqrt B) e^{-i theta} z - e^{2 i kappa}
/// with K = e^{2 i kappa} - 1 and theta = 2 pi (j-1)^2 / B, sorted by phase
/// in [0, 2 pi). At kappa = 0 they are the fourth roots of unity.
pub fn general_j_quartic<T: Real>(bonds: usize, j: usize, kappa: T) -> Result<[Complex<T>; 4]> {
    let coeffs = general_j_coeffs(bonds, j, kappa)?;
    let sol = poly_roots(&coeffs)?;
    if sol.max_residual() > cast::<T>(1e-10) {
        return Err(Error::Degenerate(format!(
            "quartic residual {:.1e} too large",
            sol.max_residual().to_f64().unwrap_or(f64::NAN)
        )));
    }
    let mut roots = sol.roots;
    for z in &roots {
        if (z.norm() - T::one()).abs() > cast::<T>(1e-9) {
            return Err(Error::Degenerate(
                "quartic produced a root off the unit circle".into(),
            ));
        }
    }
    roots.sort_by(|a, b| {
        fold_to_two_pi(a.arg())
            .partial_cmp(&fold_to_two_pi(b.arg()))
            .expect("finite phases")
    });
    Ok([roots[0], roots[1], roots[2], roots[3]])
}

/// Residual |p(z)| of the perturbed-eigenvalue quartic at z.
pub fn general_j_quartic_residual<T: Real>(
    bonds: usize,
    j: usize,
    kappa: T,
    z: Complex<T>,
) -> Result<T> {
    let coeffs = general_j_coeffs(bonds, j, kappa)?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for c in coeffs.iter().rev() {
        acc = acc * z + *c;
    }
    Ok(acc.norm())
}

/// Quartic coefficients in ascending order, shared by the solver and the
/// residual evaluator.
fn general_j_coeffs<T: Real>(bonds: usize, j: usize, kappa: T) -> Result<[Complex<T>; 5]> {
    general_j_domain(bonds, j)?;
    if !(kappa >= T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::InvalidParameter(
            "kappa must lie in [0, pi/2) for the two-bond construction".into(),
        ));
    }
    let b = cast_usize::<T>(bonds);
    let theta = cast::<T>(2.0) * T::PI() * cast_usize::<T>((j - 1) * (j - 1)) / b;
    let inv_sqrt_b = b.sqrt().recip();
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    let e2ik = Complex::from_polar(T::one(), cast::<T>(2.0) * kappa);
    let k_fac = e2ik - one;
    Ok([
        -e2ik,
        -(k_fac * Complex::from_polar(inv_sqrt_b, -theta)),
        zero,
        -(k_fac * Complex::from_polar(inv_sqrt_b, theta)),
        one,
    ])
}

/// One perturbed eigenpair of the row-phased Fourier matrix.
#[derive(Debug, Clone)]
pub struct PerturbedRoot<T: Real> {
    /// Unit-modulus eigenvalue e^{i phi}.
    pub root: Complex<T>,
    /// Its phase in [0, 2 pi).
    pub phi: T,
    /// Coefficients of f over the spanning set {F u, i F v, u, v}.
    pub beta: [Complex<T>; 4],
    /// Unit-norm eigenvector, jth component rotated onto the positive real axis.
    pub f: CVec<T>,
    /// Squared norm of the raw combination cot(phi) z1 + i z2 at unit scale;
    /// certified against its closed form
    /// cosec^2(phi) (4 + (8/sqrt B)(cos^3 phi cos theta + sin^3 phi sin theta)).
    pub norm_sq: T,
    /// Eigen-residual of (root, f) against the perturbed matrix.
    pub residual: T,
}

/// All four perturbed eigenpairs for a stretched bond j, plus the combined
/// squared norms of the unperturbed eigenvector combinations.
#[derive(Debug, Clone)]
pub struct PerturbedEigenBasis<T: Real> {
    pub bonds: usize,
    pub j: usize,
    pub kappa: T,
    /// Sorted by eigenvalue phase in [0, 2 pi).
    pub roots: Vec<PerturbedRoot<T>>,
    /// [W1, W2, W3, W4]: sums and differences of the squared norms of the
    /// four unperturbed combinations; W1 = W2 = 8 always, while
    /// W3 = (16/sqrt B) cos theta and W4 = (16/sqrt B) sin theta.
    pub w: [T; 4],
}

impl<T: Real> PerturbedEigenBasis<T> {
    /// The four eigenvalues in phase order.
    pub fn root_values(&self) -> Vec<Complex<T>> {
        self.roots.iter().map(|r| r.root).collect()
    }

    /// Lifts the chosen eigenpair into the doubled matrix; eps1 picks the
    /// sign of the square-root eigenvalue relative to the principal branch.
    pub fn lift(&self, index: usize, eps1: Sign) -> Result<ScarVector<T>> {
        let rec = self.roots.get(index).ok_or_else(|| {
            Error::InvalidParameter(format!("root index {index} out of range 0..=3"))
        })?;
        let f_mat = fourier_matrix::<T>(self.bonds)?;
        let pj = phase_point::<T>(self.bonds, self.j, self.kappa)?;
        let sigma = pj.mul(&f_mat);
        let reduced = sigma.mul(&pj);
        if multiplicity_estimate(&reduced, rec.root, cast::<T>(SIMPLICITY_TOL))? != 1 {
            return Err(Error::Degenerate(
                "perturbed eigenvalue is not simple at this kappa".into(),
            ));
        }
        // carry the eigenvector over to the symmetric product by undoing the
        // stretch phase on the jth entry
        let u = phase_point::<T>(self.bonds, self.j, -self.kappa)?.mul_vec(&rec.f);
        let target = rec.root.sqrt() * eps1.scalar::<T>();
        pick_lift_branch(
            ScarFamily::FourierGeneralJ,
            &sigma,
            &pj,
            &u,
            rec.root,
            target,
            self.kappa,
            eps1,
            Sign::Plus,
            self.j,
        )
    }
}

/// Eigenpairs of the Fourier matrix with bond j stretched, 2 <= j <= B and j
/// not self-paired. The four eigenvectors outside the untouched eigenspaces
/// are assembled in closed form and certified against the matrix.
pub fn fourier_general_j<T: Real>(
    bonds: usize,
    j: usize,
    kappa: T,
) -> Result<PerturbedEigenBasis<T>> {
    general_j_domain(bonds, j)?;
    if !(kappa > T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::InvalidParameter(
            "kappa must lie strictly inside (0, pi/2)".into(),
        ));
    }
    let roots4 = general_j_quartic(bonds, j, kappa)?;
    let f_mat = fourier_matrix::<T>(bonds)?;
    let m = phase_point::<T>(bonds, j, cast::<T>(2.0) * kappa)?.mul(&f_mat);
    let b = cast_usize::<T>(bonds);
    let theta = cast::<T>(2.0) * T::PI() * cast_usize::<T>((j - 1) * (j - 1)) / b;

    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    // paired coordinate directions: entries j and B+2-j, symmetric and
    // antisymmetric
    let u = CVec::from_fn(bonds, |i| {
        if i == j - 1 || i == bonds + 1 - j {
            one
        } else {
            zero
        }
    });
    let v = CVec::from_fn(bonds, |i| {
        if i == j - 1 {
            one
        } else if i == bonds + 1 - j {
            -one
        } else {
            zero
        }
    });
    let fu = f_mat.mul_vec(&u);
    let fv = f_mat.mul_vec(&v);
    let ifv = fv.scale(Complex::i());
    let wp = fu.add(&u);
    let wm = fu.sub(&u);
    let wpi = ifv.sub(&v);
    let wmi = ifv.add(&v);
    let w = [
        wp.norm_sq() + wm.norm_sq(),
        wpi.norm_sq() + wmi.norm_sq(),
        wp.norm_sq() - wm.norm_sq(),
        wpi.norm_sq() - wmi.norm_sq(),
    ];
    let eight = cast::<T>(8.0);
    if (w[0] - eight).abs() > cast::<T>(1e-12) || (w[1] - eight).abs() > cast::<T>(1e-12) {
        return Err(Error::Degenerate(
            "combined squared norms departed from 8".into(),
        ));
    }

    let mut out = Vec::with_capacity(4);
    for root in roots4 {
        let phi = fold_to_two_pi(root.arg());
        let (sin_phi, cos_phi) = (phi.sin(), phi.cos());
        if sin_phi.abs() < cast::<T>(1e-9) {
            return Err(Error::Degenerate(format!(
                "root at phase {:.3e} has sin(phi) ~ 0, collapsing the cot(phi) parameterization",
                phi.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let cot = cos_phi / sin_phi;
        let back = Complex::from_polar(T::one(), -phi);
        let z1 = fu.scale(back).add(&u);
        let z2 = fv.scale(back).add(&v);
        let f_raw = z1.scale(Complex::new(cot, T::zero())).add(&z2.scale(Complex::i()));
        let norm_sq = f_raw.norm_sq();
        let closed = (cast::<T>(4.0)
            + eight / b.sqrt() * (cos_phi.powi(3) * theta.cos() + sin_phi.powi(3) * theta.sin()))
            / (sin_phi * sin_phi);
        if ((norm_sq - closed) / closed).abs() > cast::<T>(1e-9) {
            return Err(Error::Degenerate(
                "assembled norm does not match its closed form".into(),
            ));
        }
        // deterministic scale: unit norm, jth component real positive (or the
        // largest component if the jth one vanishes)
        let mut anchor = f_raw[j - 1];
        if anchor.norm() <= norm_sq.sqrt() * cast::<T>(1e-12) {
            let mut best = T::zero();
            for i in 0..bonds {
                if f_raw[i].norm() > best {
                    best = f_raw[i].norm();
                    anchor = f_raw[i];
                }
            }
        }
        let z_scale = anchor.conj() / anchor.norm() / norm_sq.sqrt();
        let f = f_raw.scale(z_scale);
        let beta = [
            z_scale * back * cot,
            z_scale * back,
            z_scale * cot,
            z_scale * Complex::i(),
        ];
        let residual = eigen_residual(&m, &f, root);
        if residual > cast::<T>(RESIDUAL_TOL) {
            return Err(Error::NotAnEigenpair(residual.to_f64().unwrap_or(f64::NAN)));
        }
        out.push(PerturbedRoot {
            root,
            phi,
            beta,
            f,
            norm_sq,
            residual,
        });
    }
    Ok(PerturbedEigenBasis {
        bonds,
        j,
        kappa,
        roots: out,
        w,
    })
}

/// Shared construction for the first-bond and permuted families. The reduced
/// matrix is D F D with D the diagonal carrying the stretch phase at j and
/// the permuter phases; at j = 1 the permuter is the identity.
fn assemble_halfscar<T: Real>(
    family: ScarFamily,
    bonds: usize,
    j: usize,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
) -> Result<(ScarVector<T>, HalfScarCore<T>)> {
    if bonds < 2 {
        return Err(Error::InvalidParameter(format!(
            "half-scar construction needs at least 2 bonds, got {bonds}"
        )));
    }
    if !(kappa > T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::InvalidParameter(
            "kappa must lie strictly inside (0, pi/2) for the simplicity certificate".into(),
        ));
    }
    let (d, n, lambda, phi) = halfscar_parameters(bonds, kappa, eps2)?;
    let x = CVec::from_fn(bonds, |i| {
        if i == j - 1 {
            Complex::new(eps2.scalar::<T>() * n, T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        }
    });
    let two_dn = cast::<T>(2.0) * d * n;
    if ((x.norm_sq() - two_dn) / two_dn).abs() > cast::<T>(1e-12) {
        return Err(Error::Degenerate("norm identity |x|^2 = 2dn failed".into()));
    }
    let diag = phase_point::<T>(bonds, j, kappa)?.mul(&fourier_permuter::<T>(bonds, j)?);
    let sigma = diag.mul(&fourier_matrix::<T>(bonds)?);
    let reduced = sigma.mul(&diag);
    if eigen_residual(&reduced, &x, lambda) / x.norm() > cast::<T>(1e-10) {
        return Err(Error::NotAnEigenpair(f64::NAN));
    }
    if multiplicity_estimate(&reduced, lambda, cast::<T>(SIMPLICITY_TOL))? != 1 {
        return Err(Error::Degenerate(
            "reduced eigenvalue is not simple at this kappa".into(),
        ));
    }
    let half = cast::<T>(0.5);
    let target = Complex::from_polar(
        T::one(),
        T::FRAC_PI_4() + half * (kappa + eps2.scalar::<T>() * phi),
    ) * eps1.scalar::<T>();
    let x_hat = x.normalized()?;
    let scar = pick_lift_branch(
        family, &sigma, &diag, &x_hat, lambda, target, kappa, eps1, eps2, j,
    )?;
    let core = HalfScarCore { x, lambda, n, d, phi };
    Ok((scar, core))
}

/// Solves the reduced quadratic z^2 - (e^{2 i kappa} - 1)/sqrt(B) z - e^{2 i kappa} = 0,
/// selects the branch named by eps2 and recovers the branch angle phi from the
/// chosen root. Returns (d, n, lambda, phi).
fn halfscar_parameters<T: Real>(
    bonds: usize,
    kappa: T,
    eps2: Sign,
) -> Result<(T, T, Complex<T>, T)> {
    let b = cast_usize::<T>(bonds);
    let (sin_k, cos_k) = (kappa.sin(), kappa.cos());
    let d = (b - sin_k * sin_k).sqrt();
    let n = d + eps2.scalar::<T>() * cos_k;
    let one = Complex::new(T::one(), T::zero());
    let e2ik = Complex::from_polar(T::one(), cast::<T>(2.0) * kappa);
    let inv_sqrt_b = b.sqrt().recip();
    let quad = poly_roots(&[-e2ik, -(e2ik - one) * inv_sqrt_b, one])?;
    // the two roots are e^{i kappa}(+/- d + i sin kappa)/sqrt(B); the real
    // part after unwinding the kappa phase tells them apart
    let back = Complex::from_polar(T::one(), -kappa);
    let sign = eps2.scalar::<T>();
    let lambda = quad
        .roots
        .iter()
        .copied()
        .find(|z| (*z * back).re * sign > T::zero())
        .ok_or_else(|| Error::Degenerate("quadratic branch selection failed".into()))?;
    let eps_phi = fold_to_pi(lambda.arg() - T::FRAC_PI_2() - kappa);
    let phi = sign * eps_phi;
    // branch validation with the denominator cleared; the raw tan form blows
    // up as kappa approaches 0
    let check = phi.sin() * sin_k + d * phi.cos();
    if check.abs() > cast::<T>(1e-9) {
        return Err(Error::Degenerate(format!(
            "branch angle validation failed at {:.1e}",
            check.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok((d, n, lambda, phi))
}

/// Lifts (u, nu) through the doubled matrix [[0, sigma], [pi, 0]] and keeps
/// the branch whose square-root eigenvalue matches the target phase.
#[allow(clippy::too_many_arguments)]
fn pick_lift_branch<T: Real>(
    family: ScarFamily,
    sigma: &CMat<T>,
    pi: &CMat<T>,
    u: &CVec<T>,
    nu: Complex<T>,
    target: Complex<T>,
    kappa: T,
    eps1: Sign,
    eps2: Sign,
    j: usize,
) -> Result<ScarVector<T>> {
    let (plus, minus) = lift_pair(sigma, pi, u, nu)?;
    let root = nu.sqrt();
    let (raw, eigenvalue) = if (root - target).norm() <= (-root - target).norm() {
        (plus, root)
    } else {
        (minus, -root)
    };
    if (eigenvalue - target).norm() > cast::<T>(1e-10) {
        return Err(Error::Degenerate(
            "no lift branch matches the target square-root phase".into(),
        ));
    }
    let scar = ScarVector {
        family,
        vec: raw.normalized()?,
        kappa,
        eps1,
        eps2,
        j,
        eigenvalue,
    };
    scar.certify(&CMat::block_antidiagonal(sigma, pi))?;
    Ok(scar)
}

/// Domain of the two-bond construction: at least 5 bonds, 2 <= j <= B, and j
/// must not coincide with its partner B+2-j.
fn general_j_domain(bonds: usize, j: usize) -> Result<()> {
    if bonds < 5 {
        return Err(Error::InvalidParameter(format!(
            "two-bond construction needs at least 5 bonds, got {bonds}"
        )));
    }
    if j < 2 || j > bonds {
        return Err(Error::InvalidParameter(format!(
            "bond index {j} out of range 2..={bonds}"
        )));
    }
    if bonds % 2 == 0 && j == bonds / 2 + 1 {
        return Err(Error::InvalidParameter(format!(
            "bond index {j} is self-paired when there are {bonds} bonds"
        )));
    }
    Ok(())
}

/// || M v - lam v ||.
pub fn eigen_residual<T: Real>(m: &CMat<T>, v: &CVec<T>, lam: Complex<T>) -> T {
    let image = m.mul_vec(v);
    let mut acc = T::zero();
    for i in 0..v.dim() {
        acc += (image[i] - lam * v[i]).norm_sqr();
    }
    acc.sqrt()
}

/// Folds an angle into (-pi, pi].
fn fold_to_pi<T: Real>(mut a: T) -> T {
    let two_pi = cast::<T>(2.0) * T::PI();
    while a > T::PI() {
        a = a - two_pi;
    }
    while a <= -T::PI() {
        a = a + two_pi;
    }
    a
}

/// Folds an angle into [0, 2 pi).
fn fold_to_two_pi<T: Real>(a: T) -> T {
    let two_pi = cast::<T>(2.0) * T::PI();
    let mut x = if a < T::zero() { a + two_pi } else { a };
    if x >= two_pi {
        x = x - two_pi;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::eig_dense;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn moduli(v: &CVec<f64>) -> Vec<f64> {
        v.as_slice().iter().map(|z| z.norm()).collect()
    }

    #[test]
    fn first_bond_core_matches_dense_eigensolver() {
        let bonds = 4;
        let kappa = 0.7;
        let reduced = phase_point::<f64>(bonds, 1, kappa)
            .unwrap()
            .mul(&fourier_matrix::<f64>(bonds).unwrap())
            .mul(&phase_point::<f64>(bonds, 1, kappa).unwrap());
        let dense = eig_dense(&reduced).unwrap();
        for eps2 in [Sign::Plus, Sign::Minus] {
            let (_, core) = fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, eps2).unwrap();
            let best = dense
                .values
                .iter()
                .map(|z| (z - core.lambda).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "lambda missed the dense spectrum by {best}");
            assert!(eigen_residual(&reduced, &core.x, core.lambda) / core.x.norm() < 1e-10);
            assert!((core.lambda.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn first_bond_small_kappa_limit_direction() {
        // as kappa -> 0+ the plus branch approaches (1 + sqrt(B), 1, ..., 1)
        let bonds = 4;
        let (_, core) = fourier_halfscar::<f64>(bonds, 1e-4, Sign::Plus, Sign::Plus).unwrap();
        let limit = CVec::from_fn(bonds, |i| {
            if i == 0 {
                c(1.0 + 2.0, 0.0)
            } else {
                c(1.0, 0.0)
            }
        });
        assert!(core.x.phase_aligned_distance(&limit) < 1e-6);
    }

    #[test]
    fn first_bond_identities() {
        for (bonds, kappa) in [(3usize, 0.4), (8, 0.7), (17, 1.2)] {
            for eps2 in [Sign::Plus, Sign::Minus] {
                let (scar, core) =
                    fourier_halfscar::<f64>(bonds, kappa, Sign::Minus, eps2).unwrap();
                let b = bonds as f64;
                let s2 = eps2.scalar::<f64>();
                // n^2 = B - 1 + 2 eps2 n cos(kappa)
                let lhs = core.n * core.n;
                let rhs = b - 1.0 + 2.0 * s2 * core.n * kappa.cos();
                assert!((lhs - rhs).abs() < 1e-12 * lhs.max(1.0));
                // |x|^2 = 2 d n with the uniform entries at one
                assert!((core.x.norm_sq() - 2.0 * core.d * core.n).abs() < 1e-12 * core.n);
                // lambda agrees with the polar form e^{i kappa}(eps2 d + i sin kappa)/sqrt(B)
                let polar = Complex::from_polar(1.0, kappa)
                    * c(s2 * core.d, kappa.sin())
                    / b.sqrt();
                assert!((core.lambda - polar).norm() < 1e-12);
                // the branch angle also satisfies the raw tan form at moderate kappa
                assert!((core.phi.tan() + core.d / kappa.sin()).abs() < 1e-9);
                // the lifted eigenvalue squares back to lambda and matches the
                // closed phase
                assert!((scar.eigenvalue * scar.eigenvalue - core.lambda).norm() < 1e-12);
                let mu = Complex::from_polar(1.0, FRAC_PI_4 + 0.5 * (kappa + s2 * core.phi))
                    * Sign::Minus.scalar::<f64>();
                assert!((scar.eigenvalue - mu).norm() < 1e-12);
            }
        }
    }

    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn first_bond_scar_component_structure() {
        let bonds = 8;
        let (scar, core) = fourier_halfscar::<f64>(bonds, 0.9, Sign::Plus, Sign::Minus).unwrap();
        let m = moduli(&scar.vec);
        assert!((scar.vec.norm() - 1.0).abs() < 1e-12);
        // halves match entrywise in modulus, enhanced entries at 1 and B+1
        assert!((m[0] - m[bonds]).abs() < 1e-12);
        for i in 1..bonds {
            assert!((m[i] - m[1]).abs() < 1e-12);
            assert!((m[bonds + i] - m[1]).abs() < 1e-12);
        }
        // modulus ratio between enhanced and uniform entries is n
        assert!((m[0] / m[1] - core.n).abs() < 1e-12 * core.n);
    }

    #[test]
    fn first_bond_second_half_is_phase_rotated_first_half() {
        let bonds = 6;
        let kappa = 0.8;
        let (scar, _) = fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, Sign::Plus).unwrap();
        let p = phase_point::<f64>(bonds, 1, kappa).unwrap();
        let top = CVec::from_fn(bonds, |i| scar.vec[i]);
        let expected_bottom = p.mul_vec(&top);
        for i in 0..bonds {
            let got = scar.vec[bonds + i] * scar.eigenvalue;
            assert!((got - expected_bottom[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn first_bond_simplicity_on_a_parameter_grid() {
        for bonds in [2usize, 4, 9, 17, 32] {
            for kappa in [0.1, 0.5, 1.0, 1.5] {
                for eps2 in [Sign::Plus, Sign::Minus] {
                    // the constructor certifies simplicity internally
                    let r = fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, eps2);
                    assert!(r.is_ok(), "B={bonds} kappa={kappa} eps2={eps2}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn first_bond_rejects_bad_parameters() {
        assert!(fourier_halfscar::<f64>(1, 0.5, Sign::Plus, Sign::Plus).is_err());
        assert!(fourier_halfscar::<f64>(4, 0.0, Sign::Plus, Sign::Plus).is_err());
        assert!(fourier_halfscar::<f64>(4, std::f64::consts::FRAC_PI_2, Sign::Plus, Sign::Plus)
            .is_err());
        assert!(fourier_halfscar::<f64>(4, -0.3, Sign::Plus, Sign::Plus).is_err());
    }

    #[test]
    fn permuted_at_j_one_reduces_to_first_bond() {
        let (scar1, _) = fourier_halfscar::<f64>(5, 0.6, Sign::Minus, Sign::Plus).unwrap();
        let scar_j = permuted_halfscar::<f64>(5, 1, 0.6, Sign::Minus, Sign::Plus).unwrap();
        assert_eq!(scar_j.family, ScarFamily::FourierPermuted);
        for i in 0..10 {
            assert!((scar1.vec[i] - scar_j.vec[i]).norm() < 1e-14);
        }
        assert!((scar1.eigenvalue - scar_j.eigenvalue).norm() < 1e-14);
    }

    #[test]
    fn permuted_moduli_are_a_permutation_with_enhanced_bond_j() {
        let bonds = 5;
        let kappa = 0.5;
        let j = 3;
        let (scar1, core) = fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, Sign::Plus).unwrap();
        let scar_j = permuted_halfscar::<f64>(bonds, j, kappa, Sign::Plus, Sign::Plus).unwrap();
        let mut m1 = moduli(&scar1.vec);
        let mut mj = moduli(&scar_j.vec);
        // enhanced amplitude sits on bond j in both halves
        let uniform = mj[0];
        assert!(mj[j - 1] / uniform > core.n - 1e-9);
        assert!(mj[bonds + j - 1] / uniform > core.n - 1e-9);
        m1.sort_by(|a, b| a.partial_cmp(b).unwrap());
        mj.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in m1.iter().zip(mj.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn permuted_is_an_eigenvector_of_its_doubled_matrix() {
        let bonds = 7;
        let j = 4;
        let kappa = 1.1;
        let scar = permuted_halfscar::<f64>(bonds, j, kappa, Sign::Minus, Sign::Minus).unwrap();
        let diag = phase_point::<f64>(bonds, j, kappa)
            .unwrap()
            .mul(&fourier_permuter::<f64>(bonds, j).unwrap());
        let sigma = diag.mul(&fourier_matrix::<f64>(bonds).unwrap());
        let doubled = CMat::block_antidiagonal(&sigma, &diag);
        assert!(eigen_residual(&doubled, &scar.vec, scar.eigenvalue) < 1e-10);
    }

    #[test]
    fn general_j_quartic_at_zero_kappa_gives_fourth_roots_of_unity() {
        let roots = general_j_quartic::<f64>(16, 2, 0.0).unwrap();
        let want = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for (got, expect) in roots.iter().zip(want.iter()) {
            assert!((got - expect).norm() < 1e-12, "{got} vs {expect}");
        }
    }

    #[test]
    fn general_j_basis_matches_dense_oracle() {
        let (bonds, j, kappa) = (16usize, 2usize, 0.3);
        let basis = fourier_general_j::<f64>(bonds, j, kappa).unwrap();
        let m = perturbed_fourier::<f64>(bonds, j, kappa).unwrap();
        let dense = eig_dense(&m).unwrap();
        let fourth = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
        let mut moved: Vec<C> = Vec::new();
        for z in &dense.values {
            let near_fixed = fourth.iter().any(|w| (z - w).norm() < 1e-6);
            if !near_fixed {
                moved.push(*z);
            }
        }
        assert_eq!(moved.len(), 4, "exactly four eigenvalues move");
        for rec in &basis.roots {
            let best = moved
                .iter()
                .map(|z| (z - rec.root).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-8, "root {} missed dense by {best}", rec.root);
            assert!(rec.residual < 1e-9);
            assert!((rec.f.norm() - 1.0).abs() < 1e-12);
            // jth component rotated onto the positive real axis
            assert!(rec.f[j - 1].im.abs() < 1e-12);
            assert!(rec.f[j - 1].re > 0.0);
        }
        // untouched eigenvalues stay at fourth roots of unity
        for z in &dense.values {
            let to_moved = moved.iter().map(|w| (z - w).norm()).fold(f64::INFINITY, f64::min);
            if to_moved > 1e-8 {
                let to_fixed = fourth.iter().map(|w| (z - w).norm()).fold(f64::INFINITY, f64::min);
                assert!(to_fixed < 1e-9);
            }
        }
    }

    #[test]
    fn general_j_w_values_and_orthogonality() {
        let (bonds, j, kappa) = (25usize, 3usize, 0.8);
        let basis = fourier_general_j::<f64>(bonds, j, kappa).unwrap();
        let b = bonds as f64;
        let theta = 2.0 * std::f64::consts::PI * ((j - 1) * (j - 1)) as f64 / b;
        assert!((basis.w[0] - 8.0).abs() < 1e-12);
        assert!((basis.w[1] - 8.0).abs() < 1e-12);
        assert!((basis.w[2] - 16.0 / b.sqrt() * theta.cos()).abs() < 1e-12);
        assert!((basis.w[3] - 16.0 / b.sqrt() * theta.sin()).abs() < 1e-12);
        // the two shifted combinations are orthogonal for every root
        let f_mat = fourier_matrix::<f64>(bonds).unwrap();
        let u = CVec::from_fn(bonds, |i| {
            if i == j - 1 || i == bonds + 1 - j {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let v = CVec::from_fn(bonds, |i| {
            if i == j - 1 {
                c(1.0, 0.0)
            } else if i == bonds + 1 - j {
                c(-1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        for rec in &basis.roots {
            let back = Complex::from_polar(1.0, -rec.phi);
            let z1 = f_mat.mul_vec(&u).scale(back).add(&u);
            let z2 = f_mat.mul_vec(&v).scale(back).add(&v);
            assert!(z1.dot(&z2).norm() < 1e-12);
        }
    }

    #[test]
    fn general_j_component_moduli_closed_forms() {
        let (bonds, j, kappa) = (25usize, 3usize, 0.8);
        let basis = fourier_general_j::<f64>(bonds, j, kappa).unwrap();
        let b = bonds as f64;
        let theta = 2.0 * std::f64::consts::PI * ((j - 1) * (j - 1)) as f64 / b;
        for rec in &basis.roots {
            let (s, co) = (rec.phi.sin(), rec.phi.cos());
            let cosec2 = 1.0 / (s * s);
            let mut sum = 0.0;
            for n in 1..=bonds {
                // moduli of the raw combination at unit scale
                let got = rec.f[n - 1].norm_sqr() * rec.norm_sq;
                let angle = rec.phi + 2.0 * std::f64::consts::PI * ((n - 1) * (j - 1)) as f64 / b;
                let expect = if n == j {
                    cosec2
                        * (4.0 / b * (rec.phi + theta).cos().powi(2)
                            + 4.0 / b.sqrt() * (2.0 * rec.phi).cos() * (rec.phi + theta).cos()
                            + 1.0)
                } else if n == bonds + 2 - j {
                    cosec2
                        * (4.0 / b * (rec.phi - theta).cos().powi(2)
                            + 4.0 / b.sqrt() * (rec.phi - theta).cos()
                            + 1.0)
                } else {
                    4.0 / b * cosec2 * angle.cos().powi(2)
                };
                assert!(
                    (got - expect).abs() < 1e-9 * expect.max(1.0),
                    "component {n}: {got} vs {expect}"
                );
                sum += expect;
            }
            let closed_norm = cosec2
                * (4.0 + 8.0 / b.sqrt() * (co.powi(3) * theta.cos() + s.powi(3) * theta.sin()));
            assert!((sum - closed_norm).abs() < 1e-9 * closed_norm);
            assert!((rec.norm_sq - closed_norm).abs() < 1e-9 * closed_norm);
        }
    }

    #[test]
    fn general_j_betas_recombine_to_f() {
        let (bonds, j, kappa) = (16usize, 3usize, 0.45);
        let basis = fourier_general_j::<f64>(bonds, j, kappa).unwrap();
        let f_mat = fourier_matrix::<f64>(bonds).unwrap();
        let u = CVec::from_fn(bonds, |i| {
            if i == j - 1 || i == bonds + 1 - j {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let v = CVec::from_fn(bonds, |i| {
            if i == j - 1 {
                c(1.0, 0.0)
            } else if i == bonds + 1 - j {
                c(-1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let fu = f_mat.mul_vec(&u);
        let ifv = f_mat.mul_vec(&v).scale(Complex::i());
        for rec in &basis.roots {
            let rebuilt = fu
                .scale(rec.beta[0])
                .add(&ifv.scale(rec.beta[1]))
                .add(&u.scale(rec.beta[2]))
                .add(&v.scale(rec.beta[3]));
            assert!(rebuilt.sub(&rec.f).norm() < 1e-12);
        }
    }

    #[test]
    fn general_j_lift_is_certified_eigenvector() {
        let basis = fourier_general_j::<f64>(16, 2, 0.3).unwrap();
        for (index, eps1) in [(0usize, Sign::Plus), (2, Sign::Minus)] {
            let scar = basis.lift(index, eps1).unwrap();
            assert_eq!(scar.family, ScarFamily::FourierGeneralJ);
            assert!((scar.vec.norm() - 1.0).abs() < 1e-12);
            let sq = scar.eigenvalue * scar.eigenvalue;
            assert!((sq - basis.roots[index].root).norm() < 1e-12);
            let pj = phase_point::<f64>(16, 2, 0.3).unwrap();
            let sigma = pj.mul(&fourier_matrix::<f64>(16).unwrap());
            let doubled = CMat::block_antidiagonal(&sigma, &pj);
            assert!(eigen_residual(&doubled, &scar.vec, scar.eigenvalue) < 1e-9);
        }
    }

    #[test]
    fn general_j_rejects_bad_domains() {
        assert!(fourier_general_j::<f64>(4, 2, 0.3).is_err());
        assert!(fourier_general_j::<f64>(16, 1, 0.3).is_err());
        assert!(fourier_general_j::<f64>(16, 9, 0.3).is_err(), "self-paired index");
        assert!(fourier_general_j::<f64>(16, 17, 0.3).is_err());
        assert!(fourier_general_j::<f64>(16, 2, 0.0).is_err(), "cot(phi) collapses");
        assert!(fourier_general_j::<f64>(16, 2, 1.6).is_err());
        assert!(general_j_quartic::<f64>(16, 2, 0.0).is_ok(), "roots alone are fine");
    }

    #[test]
    fn equitransmitting_scar_matches_closed_form() {
        let bonds = 6;
        let kappa = 1.0;
        for eps2 in [Sign::Plus, Sign::Minus] {
            for eps1 in [Sign::Plus, Sign::Minus] {
                let scar = equitransmitting_halfscar::<f64>(bonds, kappa, eps1, eps2).unwrap();
                let s2 = eps2.scalar::<f64>();
                let mu_half = Complex::from_polar(
                    1.0,
                    std::f64::consts::FRAC_PI_4 * (1.0 - s2) + 0.5 * kappa,
                ) * eps1.scalar::<f64>();
                assert!((scar.eigenvalue - mu_half).norm() < 1e-12);
                let sq = scar.eigenvalue * scar.eigenvalue;
                assert!((sq - Complex::from_polar(1.0, kappa) * s2).norm() < 1e-12);
                // moduli: 1/4 on the enhanced entries, 1/(4(B-1)) elsewhere
                let m = moduli(&scar.vec);
                assert!((m[0] * m[0] - 0.25).abs() < 1e-12);
                assert!((m[bonds] * m[bonds] - 0.25).abs() < 1e-12);
                for i in 1..bonds {
                    let want = 0.25 / (bonds as f64 - 1.0);
                    assert!((m[i] * m[i] - want).abs() < 1e-12);
                    assert!((m[bonds + i] * m[bonds + i] - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn equitransmitting_reduced_eigen_residual_is_tiny() {
        let bonds = 6;
        let kappa = 1.0;
        let e = paley_equitransmitting::<f64>(bonds).unwrap();
        let p = phase_point::<f64>(bonds, 1, kappa).unwrap();
        let reduced = p.mul(&e).mul(&p);
        for eps2 in [Sign::Plus, Sign::Minus] {
            let enhanced = eps2.scalar::<f64>() * (bonds as f64 - 1.0).sqrt();
            let y = CVec::from_fn(bonds, |i| {
                if i == 0 {
                    c(enhanced, 0.0)
                } else {
                    c(1.0, 0.0)
                }
            })
            .normalized()
            .unwrap();
            let mu = Complex::from_polar(1.0, kappa) * eps2.scalar::<f64>();
            assert!(eigen_residual(&reduced, &y, mu) < 1e-12);
        }
    }

    #[test]
    fn equitransmitting_rejects_spectrum_collisions_and_bad_kappa() {
        // the admissible centres here are real symmetric, so their spectrum
        // is {+1, -1} and kappa = pi collides for either branch
        let pi = std::f64::consts::PI;
        assert!(equitransmitting_halfscar::<f64>(6, pi, Sign::Plus, Sign::Plus).is_err());
        assert!(equitransmitting_halfscar::<f64>(6, pi, Sign::Plus, Sign::Minus).is_err());
        assert!(equitransmitting_halfscar::<f64>(6, 0.0, Sign::Plus, Sign::Plus).is_err());
        assert!(equitransmitting_halfscar::<f64>(6, 3.2, Sign::Plus, Sign::Plus).is_err());
        // kappa = 2 is fine: e^{2i} stays clear of +/-1
        assert!(equitransmitting_halfscar::<f64>(6, 2.0, Sign::Plus, Sign::Plus).is_ok());
        // non-admissible bond count
        assert!(equitransmitting_halfscar::<f64>(8, 1.0, Sign::Plus, Sign::Plus).is_err());
    }

    #[test]
    fn equitransmitting_with_rejects_wrong_structure() {
        let f = fourier_matrix::<f64>(6).unwrap();
        assert!(equitransmitting_halfscar_with(&f, 1.0, Sign::Plus, Sign::Plus).is_err());
    }

    #[test]
    fn family_labels_are_stable() {
        assert_eq!(ScarFamily::FourierFirstBond.to_string(), "fourier-first-bond");
        assert_eq!(ScarFamily::FourierGeneralJ.to_string(), "fourier-general-j");
        assert_eq!(ScarFamily::FourierPermuted.to_string(), "fourier-permuted");
        assert_eq!(ScarFamily::EquiTransmitting.to_string(), "equi-transmitting");
    }
}
