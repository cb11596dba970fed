//! Star-graph construction: central scattering matrices (Fourier,
//! equi-transmitting, Kirchhoff, explicit), the 2B-dimensional bond
//! scattering matrix, momentum phase factors, the quantum evolution
//! operator, diagonal phase and permutation gadgets, and the two-block
//! eigenvector lift.
//!
//! Directed-bond ordering is fixed everywhere: bonds 0..B point inward,
//! bonds B..2B outward, and bond b+B is the reversal of bond b.

use num_complex::Complex;

use crate::numkernel::{CMat, CVec};
use crate::{cast, cast_usize, Error, Real, Result};

/// Directed-bond ordering marker. Inward bonds occupy indices 0..B,
/// outward bonds B..2B, and index b+B reverses index b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BondIndexing;

impl BondIndexing {
    /// Index of the reversed bond.
    #[inline]
    pub fn reversal(b: usize, bonds: usize) -> usize {
        (b + bonds) % (2 * bonds)
    }

    /// Undirected bond an index refers to; lengths are stored per
    /// undirected bond.
    #[inline]
    pub fn undirected(b: usize, bonds: usize) -> usize {
        b % bonds
    }
}

/// Scattering condition at the central vertex.
#[derive(Debug, Clone)]
pub enum CentralScattering<T: Real> {
    /// Discrete Fourier matrix, entries B^{-1/2} e^{2 pi i (j-1)(k-1)/B}.
    Fourier,
    /// Symmetric equi-transmitting matrix from the Paley construction;
    /// requires B-1 prime and congruent to 1 mod 4.
    EquiTransmittingPaley,
    /// Neumann vertex condition, entries 2/B - delta.
    Kirchhoff,
    /// Any explicitly supplied unitary.
    ExplicitUnitary(CMat<T>),
}

impl<T: Real> CentralScattering<T> {
    /// Concrete B-by-B matrix for this variant. Explicit matrices are
    /// checked for shape and unitarity (1e-10).
    pub fn matrix(&self, bonds: usize) -> Result<CMat<T>> {
        match self {
            CentralScattering::Fourier => fourier_matrix(bonds),
            CentralScattering::EquiTransmittingPaley => paley_equitransmitting(bonds),
            CentralScattering::Kirchhoff => kirchhoff_matrix(bonds),
            CentralScattering::ExplicitUnitary(m) => {
                if m.rows() != bonds || m.cols() != bonds {
                    return Err(Error::Shape(format!(
                        "central matrix is {}x{}, graph has {} bonds",
                        m.rows(),
                        m.cols(),
                        bonds
                    )));
                }
                m.require_unitary(cast::<T>(1e-10))?;
                Ok(m.clone())
            }
        }
    }
}

/// Discrete Fourier matrix with entry (j,k) = B^{-1/2} e^{2 pi i (j-1)(k-1)/B}
/// (1-based row/column labels, positive exponent).
pub fn fourier_matrix<T: Real>(bonds: usize) -> Result<CMat<T>> {
    if bonds == 0 {
        return Err(Error::InvalidParameter("bond count must be positive".into()));
    }
    let scale = cast_usize::<T>(bonds).sqrt().recip();
    let step = cast::<T>(2.0) * T::PI() / cast_usize::<T>(bonds);
    Ok(CMat::from_fn(bonds, bonds, |j, k| {
        // reduce j*k mod B before multiplying to keep the angle small
        let phase = step * cast_usize::<T>((j * k) % bonds);
        Complex::from_polar(scale, phase)
    }))
}

/// Symmetric equi-transmitting matrix from quadratic residues: zero
/// diagonal, first row and column (B-1)^{-1/2}, core entry (m,n) equal to
/// chi(m-n) (B-1)^{-1/2} with chi the quadratic-residue character mod B-1.
/// Admissible only when B-1 is a prime congruent to 1 mod 4.
pub fn paley_equitransmitting<T: Real>(bonds: usize) -> Result<CMat<T>> {
    let p = match bonds.checked_sub(1) {
        Some(p) if p >= 2 => p,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "equi-transmitting size {bonds} inadmissible: need B-1 prime and 1 mod 4"
            )))
        }
    };
    let is_prime = |n: usize| -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    };
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::InvalidParameter(format!(
            "equi-transmitting size {bonds} inadmissible: B-1 = {p} must be a prime congruent to 1 mod 4"
        )));
    }
    // chi(x) = +1 for nonzero squares mod p, -1 for non-squares, 0 at 0
    let mut chi = vec![-1i32; p];
    chi[0] = 0;
    for x in 1..p {
        chi[(x * x) % p] = 1;
    }
    let scale = cast_usize::<T>(p).sqrt().recip();
    let zero = T::zero();
    Ok(CMat::from_fn(bonds, bonds, |m, n| {
        let v = if m == n {
            zero
        } else if m == 0 || n == 0 {
            scale
        } else {
            // core labels live in Z/p; subtraction wraps
            let d = (m + p - n) % p;
            match chi[d] {
                1 => scale,
                -1 => -scale,
                _ => zero,
            }
        };
        Complex::new(v, zero)
    }))
}

/// Neumann vertex scattering at a degree-d vertex: entries 2/d off the
/// diagonal and 2/d - 1 on it.
pub fn kirchhoff_matrix<T: Real>(degree: usize) -> Result<CMat<T>> {
    if degree == 0 {
        return Err(Error::InvalidParameter("vertex degree must be positive".into()));
    }
    let t = cast::<T>(2.0) / cast_usize::<T>(degree);
    Ok(CMat::from_fn(degree, degree, |j, k| {
        let v = if j == k { t - T::one() } else { t };
        Complex::new(v, T::zero())
    }))
}

/// First B primes as a deterministic source of pairwise incommensurate
/// lengths: L_b = sqrt(p_b) / sqrt(p_1), so L_1 = 1.
pub fn sqrt_prime_lengths<T: Real>(bonds: usize) -> Vec<T> {
    let mut primes: Vec<usize> = Vec::with_capacity(bonds);
    let mut n = 2;
    while primes.len() < bonds {
        if primes.iter().all(|p| n % p != 0) {
            primes.push(n);
        }
        n += 1;
    }
    let root2 = cast::<T>(2.0).sqrt();
    primes
        .iter()
        .map(|&p| cast_usize::<T>(p).sqrt() / root2)
        .collect()
}

/// A star graph: B bonds of given lengths joined at one central vertex,
/// with the chosen scattering condition there and reflection at the leaves.
#[derive(Debug, Clone)]
pub struct StarGraph<T: Real> {
    lengths: Vec<T>,
    central: CentralScattering<T>,
    sigma: CMat<T>,
    scatter: CMat<T>,
}

impl<T: Real> StarGraph<T> {
    /// Build a graph from per-bond lengths and a central condition. All
    /// lengths must be positive and finite; the derived 2B-dimensional bond
    /// scattering matrix must be unitary within 1e-10.
    pub fn new(lengths: Vec<T>, central: CentralScattering<T>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Empty);
        }
        for (i, l) in lengths.iter().enumerate() {
            if !l.is_finite() || *l <= T::zero() {
                return Err(Error::InvalidParameter(format!(
                    "bond length {i} must be positive and finite, got {l}"
                )));
            }
        }
        let bonds = lengths.len();
        let sigma = central.matrix(bonds)?;
        let scatter = CMat::block_antidiagonal(&sigma, &CMat::identity(bonds));
        scatter.require_unitary(cast::<T>(1e-10))?;
        Ok(Self {
            lengths,
            central,
            sigma,
            scatter,
        })
    }

    /// Graph with lengths sqrt(p_b)/sqrt(p_1).
    pub fn with_sqrt_prime_lengths(bonds: usize, central: CentralScattering<T>) -> Result<Self> {
        Self::new(sqrt_prime_lengths(bonds), central)
    }

    #[inline]
    pub fn bonds(&self) -> usize {
        self.lengths.len()
    }

    #[inline]
    pub fn lengths(&self) -> &[T] {
        &self.lengths
    }

    #[inline]
    pub fn central(&self) -> &CentralScattering<T> {
        &self.central
    }

    /// The B-by-B central scattering matrix.
    #[inline]
    pub fn central_matrix(&self) -> &CMat<T> {
        &self.sigma
    }

    /// Sum of undirected bond lengths.
    pub fn total_length(&self) -> T {
        self.lengths.iter().copied().sum()
    }

    pub fn max_length(&self) -> T {
        self.lengths
            .iter()
            .copied()
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// The 2B-dimensional bond scattering matrix [[0, sigma], [I, 0]]:
    /// inward amplitudes scatter through the center, outward ones reflect
    /// back at the leaves.
    #[inline]
    pub fn bond_scattering_matrix(&self) -> &CMat<T> {
        &self.scatter
    }

    /// Diagonal momentum phases diag(e^{i k L_b}) over directed bonds,
    /// with L_{b+B} = L_b.
    pub fn phase_matrix(&self, k: T) -> CMat<T> {
        let bonds = self.bonds();
        CMat::from_fn(2 * bonds, 2 * bonds, |r, c| {
            if r == c {
                Complex::from_polar(T::one(), k * self.lengths[BondIndexing::undirected(r, bonds)])
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    /// Quantum evolution operator U(k) = D(k) S, applied as a row scaling
    /// of the cached scattering matrix.
    pub fn evolution_operator(&self, k: T) -> CMat<T> {
        let bonds = self.bonds();
        CMat::from_fn(2 * bonds, 2 * bonds, |r, c| {
            let phase = Complex::from_polar(
                T::one(),
                k * self.lengths[BondIndexing::undirected(r, bonds)],
            );
            phase * self.scatter[(r, c)]
        })
    }
}

/// Diagonal matrix with e^{i kappa} at 1-based position j and 1 elsewhere.
pub fn phase_point<T: Real>(bonds: usize, j: usize, kappa: T) -> Result<CMat<T>> {
    if j == 0 || j > bonds {
        return Err(Error::InvalidParameter(format!(
            "bond index {j} out of range 1..={bonds}"
        )));
    }
    Ok(CMat::from_fn(bonds, bonds, |r, c| {
        if r != c {
            Complex::new(T::zero(), T::zero())
        } else if r == j - 1 {
            Complex::from_polar(T::one(), kappa)
        } else {
            Complex::new(T::one(), T::zero())
        }
    }))
}

/// Diagonal matrix R_j with entry m (1-based) equal to
/// exp(-2 pi i (j-1)(m-1)/B + pi i (j-1)^2 / B). Conjugating the Fourier
/// matrix by R_j shifts its index pattern cyclically to center on bond j.
pub fn fourier_permuter<T: Real>(bonds: usize, j: usize) -> Result<CMat<T>> {
    if j == 0 || j > bonds {
        return Err(Error::InvalidParameter(format!(
            "bond index {j} out of range 1..={bonds}"
        )));
    }
    let b = cast_usize::<T>(bonds);
    let jj = cast_usize::<T>(j - 1);
    Ok(CMat::from_fn(bonds, bonds, |r, c| {
        if r != c {
            return Complex::new(T::zero(), T::zero());
        }
        let m = cast_usize::<T>(r);
        let angle = (-cast::<T>(2.0) * T::PI() * jj * m + T::PI() * jj * jj) / b;
        Complex::from_polar(T::one(), angle)
    }))
}

/// One member of the affine family of complex Hadamard matrices in
/// dimension 3: diag(1, e^{i x1}, e^{i x2}) times the Fourier matrix.
/// Every entry has modulus 3^{-1/2}.
pub fn hadamard_family_member<T: Real>(x1: T, x2: T) -> CMat<T> {
    let f3 = fourier_matrix::<T>(3).expect("dimension 3 is valid");
    let phases = [T::zero(), x1, x2];
    CMat::from_fn(3, 3, |r, c| Complex::from_polar(T::one(), phases[r]) * f3[(r, c)])
}

/// Lift an eigenpair of the product: given Sigma Pi u = nu u with nu != 0,
/// the stacked vectors (l u; Pi u) with l = +/- nu^{1/2} (principal branch,
/// argument in (-pi/2, pi/2]) are eigenvectors of [[0, Sigma], [Pi, 0]]
/// with eigenvalues +/- nu^{1/2}. Returns (plus, minus), unnormalized.
pub fn lift_pair<T: Real>(
    sigma: &CMat<T>,
    pi: &CMat<T>,
    u: &CVec<T>,
    nu: Complex<T>,
) -> Result<(CVec<T>, CVec<T>)> {
    let b = u.dim();
    if sigma.rows() != b || sigma.cols() != b || pi.rows() != b || pi.cols() != b {
        return Err(Error::Shape(format!(
            "factor dims {}x{} and {}x{} must match vector dim {b}",
            sigma.rows(),
            sigma.cols(),
            pi.rows(),
            pi.cols()
        )));
    }
    if nu.norm() == T::zero() {
        return Err(Error::ZeroEigenvalue(0.0));
    }
    let pu = pi.mul_vec(u);
    let spu = sigma.mul_vec(&pu);
    let mut residual = T::zero();
    for i in 0..b {
        residual += (spu[i] - nu * u[i]).norm_sqr();
    }
    let residual = residual.sqrt() / u.norm();
    if residual > cast::<T>(1e-9) {
        return Err(Error::NotAnEigenpair(
            residual.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let root = nu.sqrt();
    let make = |lam: Complex<T>| {
        CVec::from_fn(2 * b, |i| if i < b { lam * u[i] } else { pu[i - b] })
    };
    Ok((make(root), make(-root)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{eig_dense, null_space, random_unitary};

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn max_entry_diff(a: &CMat<f64>, b: &CMat<f64>) -> f64 {
        a.sub(b).max_abs()
    }

    #[test]
    fn fourier_one_is_scalar_one() {
        let f = fourier_matrix::<f64>(1).unwrap();
        assert!((f[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn fourier_six_matches_sixth_root_table() {
        // row r of the 6x6 matrix is (1, w^r, w^{2r}, ...) / sqrt(6) with
        // w = e^{i pi / 3}; exponents reduce mod 6
        let f = fourier_matrix::<f64>(6).unwrap();
        let w = Complex::from_polar(1.0, std::f64::consts::PI / 3.0);
        let s = 1.0 / 6.0f64.sqrt();
        for r in 0..6 {
            for k in 0..6 {
                let expect = w.powu(((r * k) % 6) as u32) * s;
                assert!((f[(r, k)] - expect).norm() < 1e-14, "entry ({r},{k})");
            }
        }
    }

    #[test]
    fn fourier_fourth_power_is_identity() {
        let f = fourier_matrix::<f64>(8).unwrap();
        assert!(f.unitarity_error() < 1e-12);
        let f4 = f.mul(&f).mul(&f).mul(&f);
        assert!(max_entry_diff(&f4, &CMat::identity(8)) < 1e-12);
    }

    #[test]
    fn fourier_unitary_up_to_sixty_four() {
        for b in 1..=64 {
            let f = fourier_matrix::<f64>(b).unwrap();
            assert!(f.unitarity_error() < 1e-12, "B = {b}");
            let f4 = f.mul(&f).mul(&f).mul(&f);
            assert!(max_entry_diff(&f4, &CMat::identity(b)) < 1e-10, "B = {b}");
        }
        assert!(fourier_matrix::<f64>(0).is_err());
    }

    #[test]
    fn paley_six_matches_frozen_integer_matrix() {
        // sqrt(5) times the 6x6 equi-transmitting matrix is integral
        let frozen: [[i32; 6]; 6] = [
            [0, 1, 1, 1, 1, 1],
            [1, 0, 1, -1, -1, 1],
            [1, 1, 0, 1, -1, -1],
            [1, -1, 1, 0, 1, -1],
            [1, -1, -1, 1, 0, 1],
            [1, 1, -1, -1, 1, 0],
        ];
        let e = paley_equitransmitting::<f64>(6).unwrap();
        let s = 5.0f64.sqrt();
        for r in 0..6 {
            for k in 0..6 {
                let scaled = e[(r, k)] * s;
                assert!((scaled.re - frozen[r][k] as f64).abs() < 1e-12, "({r},{k})");
                assert!(scaled.im.abs() < 1e-15);
            }
        }
        assert!(e.unitarity_error() < 1e-12);
    }

    #[test]
    fn paley_admissible_sizes_up_to_forty() {
        let admissible: Vec<usize> = (1..=40)
            .filter(|&b| paley_equitransmitting::<f64>(b).is_ok())
            .collect();
        assert_eq!(admissible, vec![6, 14, 18, 30, 38]);
        assert!(paley_equitransmitting::<f64>(7).is_err());
    }

    #[test]
    fn paley_structure_and_spectrum() {
        for b in [6usize, 14, 18] {
            let e = paley_equitransmitting::<f64>(b).unwrap();
            assert!(e.unitarity_error() < 1e-12);
            let off = 1.0 / ((b - 1) as f64).sqrt();
            for r in 0..b {
                for k in 0..b {
                    assert!(e[(r, k)].im.abs() < 1e-15);
                    assert!((e[(r, k)] - e[(k, r)]).norm() < 1e-15, "symmetry ({r},{k})");
                    if r == k {
                        assert!(e[(r, k)].norm() < 1e-15);
                    } else {
                        assert!((e[(r, k)].norm() - off).abs() < 1e-13);
                    }
                }
            }
        }
        // symmetric unitary: spectrum within {+1, -1}
        let e6 = paley_equitransmitting::<f64>(6).unwrap();
        let eig = eig_dense(&e6).unwrap();
        for v in &eig.values {
            assert!((v.re.abs() - 1.0).abs() < 1e-10 && v.im.abs() < 1e-10, "{v}");
        }
    }

    #[test]
    fn kirchhoff_small_cases() {
        let k1 = kirchhoff_matrix::<f64>(1).unwrap();
        assert!((k1[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
        let k2 = kirchhoff_matrix::<f64>(2).unwrap();
        let flip = CMat::from_fn(2, 2, |r, ck| c(if r != ck { 1.0 } else { 0.0 }, 0.0));
        assert!(max_entry_diff(&k2, &flip) < 1e-15);
        // degree 4: rank-one shift of -I, eigenvalues {1, -1, -1, -1}
        let k4 = kirchhoff_matrix::<f64>(4).unwrap();
        assert!(k4.unitarity_error() < 1e-12);
        let mut vals: Vec<f64> = eig_dense(&k4).unwrap().values.iter().map(|v| v.re).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [-1.0, -1.0, -1.0, 1.0];
        for (v, e) in vals.iter().zip(expect.iter()) {
            assert!((v - e).abs() < 1e-10);
        }
    }

    #[test]
    fn bond_scattering_blocks() {
        let g1 = StarGraph::new(vec![1.0], CentralScattering::<f64>::Fourier).unwrap();
        let s1 = g1.bond_scattering_matrix();
        let flip = CMat::from_fn(2, 2, |r, ck| c(if r != ck { 1.0 } else { 0.0 }, 0.0));
        assert!(max_entry_diff(s1, &flip) < 1e-14);

        let g6 = StarGraph::new(vec![1.0; 6], CentralScattering::<f64>::EquiTransmittingPaley)
            .unwrap();
        let s6 = g6.bond_scattering_matrix();
        let e6 = paley_equitransmitting::<f64>(6).unwrap();
        for r in 0..6 {
            for k in 0..6 {
                assert!((s6[(r, 6 + k)] - e6[(r, k)]).norm() < 1e-15);
                let eye = c(if r == k { 1.0 } else { 0.0 }, 0.0);
                assert!((s6[(6 + r, k)] - eye).norm() < 1e-15);
                assert!(s6[(r, k)].norm() < 1e-15);
                assert!(s6[(6 + r, 6 + k)].norm() < 1e-15);
            }
        }
        assert!(s6.unitarity_error() < 1e-10);

        let u = random_unitary::<f64>(5, 21);
        let g = StarGraph::new(vec![0.3; 5], CentralScattering::ExplicitUnitary(u)).unwrap();
        assert!(g.bond_scattering_matrix().unitarity_error() < 1e-10);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(StarGraph::new(vec![], CentralScattering::<f64>::Fourier).is_err());
        assert!(StarGraph::new(vec![1.0, -2.0], CentralScattering::<f64>::Fourier).is_err());
        assert!(StarGraph::new(vec![1.0, f64::NAN], CentralScattering::<f64>::Fourier).is_err());
        // explicit non-unitary rejected
        let bad = CMat::from_fn(2, 2, |_, _| c(0.7, 0.0));
        assert!(StarGraph::new(vec![1.0, 1.0], CentralScattering::ExplicitUnitary(bad)).is_err());
        // explicit with wrong shape rejected
        let u3 = random_unitary::<f64>(3, 4);
        assert!(StarGraph::new(vec![1.0, 1.0], CentralScattering::ExplicitUnitary(u3)).is_err());
    }

    #[test]
    fn phase_matrix_values_and_determinant() {
        let g = StarGraph::new(vec![1.0, 2.0], CentralScattering::<f64>::Fourier).unwrap();
        let d0 = g.phase_matrix(0.0);
        assert!(max_entry_diff(&d0, &CMat::identity(4)) < 1e-15);
        let dpi = g.phase_matrix(std::f64::consts::PI);
        let expect = CMat::diagonal(&[c(-1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        assert!(max_entry_diff(&dpi, &expect) < 1e-12);

        // det D(k) = e^{2 i k sum(L)}: product of diagonal entries
        let k = 0.7343;
        let d = g.phase_matrix(k);
        let mut det = c(1.0, 0.0);
        for i in 0..4 {
            det *= d[(i, i)];
        }
        let expect = Complex::from_polar(1.0, 2.0 * k * g.total_length());
        assert!((det - expect).norm() < 1e-12);
    }

    #[test]
    fn evolution_operator_cases() {
        let g = StarGraph::new(vec![1.0], CentralScattering::<f64>::Fourier).unwrap();
        let u0 = g.evolution_operator(0.0);
        assert!(max_entry_diff(&u0, g.bond_scattering_matrix()) < 1e-15);
        let upi = g.evolution_operator(std::f64::consts::PI);
        let expect = CMat::from_fn(2, 2, |r, ck| c(if r != ck { -1.0 } else { 0.0 }, 0.0));
        assert!(max_entry_diff(&upi, &expect) < 1e-12);
        // eigenvalue 1 present at k = pi (bond length 1: first resonance)
        let eig = eig_dense(&upi).unwrap();
        assert!(eig.values.iter().any(|v| (v - c(1.0, 0.0)).norm() < 1e-10));

        let g3 = StarGraph::with_sqrt_prime_lengths(3, CentralScattering::<f64>::Kirchhoff)
            .unwrap();
        for k in [0.1, 1.0, 17.3] {
            let u = g3.evolution_operator(k);
            assert!(u.unitarity_error() < 1e-10);
            for v in &eig_dense(&u).unwrap().values {
                assert!((v.norm() - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn sqrt_prime_lengths_start_at_one_and_increase() {
        let l = sqrt_prime_lengths::<f64>(6);
        assert_eq!(l.len(), 6);
        assert!((l[0] - 1.0).abs() < 1e-15);
        assert!((l[1] - (3.0f64 / 2.0).sqrt()).abs() < 1e-15);
        for w in l.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn phase_point_cases() {
        let p = phase_point::<f64>(3, 1, std::f64::consts::PI).unwrap();
        let expect = CMat::diagonal(&[c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(max_entry_diff(&p, &expect) < 1e-12);
        let p0 = phase_point::<f64>(4, 2, 0.0).unwrap();
        assert!(max_entry_diff(&p0, &CMat::identity(4)) < 1e-15);
        // squaring doubles the angle
        let a = phase_point::<f64>(5, 3, 0.77).unwrap();
        let sq = a.mul(&a);
        let doubled = phase_point::<f64>(5, 3, 1.54).unwrap();
        assert!(max_entry_diff(&sq, &doubled) < 1e-14);
        assert!(phase_point::<f64>(3, 0, 1.0).is_err());
        assert!(phase_point::<f64>(3, 4, 1.0).is_err());
    }

    #[test]
    fn fourier_permuter_shifts_the_index_pattern() {
        let r1 = fourier_permuter::<f64>(4, 1).unwrap();
        assert!(max_entry_diff(&r1, &CMat::identity(4)) < 1e-14);

        // R_j F R_j has (m,n) entry B^{-1/2} e^{2 pi i (n-j)(m-j)/B}
        let b = 5;
        let j = 3;
        let r = fourier_permuter::<f64>(b, j).unwrap();
        let f = fourier_matrix::<f64>(b).unwrap();
        let conj = r.mul(&f).mul(&r);
        let s = 1.0 / (b as f64).sqrt();
        for m in 1..=b {
            for n in 1..=b {
                let shift = 2.0 * std::f64::consts::PI * ((n as f64 - j as f64) * (m as f64 - j as f64)) / b as f64;
                let expect = Complex::from_polar(s, shift);
                assert!((conj[(m - 1, n - 1)] - expect).norm() < 1e-12, "({m},{n})");
            }
        }
        assert!(conj.unitarity_error() < 1e-12);
    }

    #[test]
    fn hadamard_family_cases() {
        let f3 = fourier_matrix::<f64>(3).unwrap();
        assert!(max_entry_diff(&hadamard_family_member(0.0, 0.0), &f3) < 1e-14);

        let pi = std::f64::consts::PI;
        let m = hadamard_family_member(pi, pi);
        for r in 0..3 {
            for k in 0..3 {
                let sign = if r == 0 { 1.0 } else { -1.0 };
                assert!((m[(r, k)] - f3[(r, k)] * sign).norm() < 1e-13);
            }
        }

        let any = hadamard_family_member(1.234, -0.567);
        assert!(any.unitarity_error() < 1e-12);
        let third = 1.0 / 3.0f64.sqrt();
        for r in 0..3 {
            for k in 0..3 {
                assert!((any[(r, k)].norm() - third).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn lift_pair_identity_case() {
        let eye = CMat::<f64>::identity(2);
        let u = CVec::basis(2, 0);
        let (p, m) = lift_pair(&eye, &eye, &u, c(1.0, 0.0)).unwrap();
        let t = CMat::block_antidiagonal(&eye, &eye);
        // T p = +p, T m = -m
        assert!(t.mul_vec(&p).sub(&p).norm() < 1e-14);
        assert!(t.mul_vec(&m).add(&m).norm() < 1e-14);
    }

    #[test]
    fn lift_pair_covers_product_eigenpairs_and_spans() {
        let b = 8;
        let sigma = random_unitary::<f64>(b, 31);
        let pi = random_unitary::<f64>(b, 32);
        let prod = sigma.mul(&pi);
        let eig = eig_dense(&prod).unwrap();
        assert!(eig.max_residual() < 1e-10);
        let t = CMat::block_antidiagonal(&sigma, &pi);
        let mut lifted: Vec<CVec<f64>> = Vec::new();
        for (val, vec) in eig.values.iter().zip(eig.vectors.iter()) {
            let (p, m) = lift_pair(&sigma, &pi, vec, *val).unwrap();
            let lam = val.sqrt();
            // principal branch: argument strictly inside (-pi/2, pi/2]
            assert!(lam.arg() > -std::f64::consts::FRAC_PI_2 - 1e-15);
            assert!(lam.arg() <= std::f64::consts::FRAC_PI_2 + 1e-15);
            let rp = t.mul_vec(&p).sub(&p.scale(lam)).norm() / p.norm();
            let rm = t.mul_vec(&m).sub(&m.scale(-lam)).norm() / m.norm();
            assert!(rp < 1e-10 && rm < 1e-10);
            lifted.push(p.normalized().unwrap());
            lifted.push(m.normalized().unwrap());
        }
        // sigma, pi invertible: the 2B lifted vectors span the whole space
        let m = CMat::from_fn(2 * b, 2 * b, |r, c| lifted[c][r]);
        assert!(null_space(&m, 1e-8).unwrap().is_empty());
    }

    #[test]
    fn lift_pair_rejects_bad_input() {
        let eye = CMat::<f64>::identity(2);
        let u = CVec::basis(2, 0);
        assert!(matches!(
            lift_pair(&eye, &eye, &u, c(0.0, 0.0)),
            Err(Error::ZeroEigenvalue(_))
        ));
        // u is not an eigenvector of sigma*pi for this nu
        assert!(matches!(
            lift_pair(&eye, &eye, &u, c(-1.0, 0.0)),
            Err(Error::NotAnEigenpair(_))
        ));
        let u3 = random_unitary::<f64>(3, 9);
        assert!(lift_pair(&u3, &eye, &u, c(1.0, 0.0)).is_err());
    }
}
