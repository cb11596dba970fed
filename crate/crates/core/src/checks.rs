//! Named, seeded invariant suites over every module, reusable by the command
//! line verify subcommand and by integration tests. Each check exercises a
//! property the library promises and reports a pass/fail outcome together
//! with the measurement that decided it.
//!
//! All checks run at f64: the tolerances are double-precision contract
//! values.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::entropy::{
    asymptotic_reference, entropy_relations_check, halfscar_entropy_closed_form,
    halfscar_renyi_pair_closed_form, log_cos_integral, log_cos_integral_quadrature, renyi,
    renyi_inf, shannon, uncertainty_bounds, ScarEntropyAsymptote,
};
use crate::graphcore::{
    fourier_matrix, kirchhoff_matrix, lift_pair, paley_equitransmitting, phase_point, StarGraph,
};
use crate::landscape::{self, exact_minimum_value, find_minima, landscape_point};
use crate::numkernel::{
    adaptive_quadrature, eig_dense, null_space, poly_roots, random_unitary, CMat, CVec,
};
use crate::scars::{
    equitransmitting_halfscar, fourier_general_j, fourier_halfscar, permuted_halfscar,
};
use crate::spectral::secular_roots;
use crate::{Error, Result, Sign};

/// One named check and how it went.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    /// The measurement behind the verdict.
    pub detail: String,
}

/// Results of running one or more suites under a single seed.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub seed: u64,
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed).collect()
    }
}

/// Suite names accepted by run_suite, in execution order.
pub const SUITES: [&str; 6] = [
    "numkernel",
    "graphcore",
    "spectral",
    "scars",
    "entropy",
    "landscape",
];

/// Runs every suite under one seed.
pub fn run_all(seed: u64) -> CheckReport {
    let mut outcomes = Vec::new();
    for suite in SUITES {
        outcomes.extend(run_suite(suite, seed).expect("built-in suite name"));
    }
    CheckReport { seed, outcomes }
}

/// Runs one suite by name; errors on an unknown name.
pub fn run_suite(suite: &str, seed: u64) -> Result<Vec<CheckOutcome>> {
    let lane = SUITES
        .iter()
        .position(|s| *s == suite)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown check suite '{suite}'")))?;
    let suite_seed = expand_seed(seed, lane as u64);
    Ok(match suite {
        "numkernel" => numkernel_suite(suite_seed),
        "graphcore" => graphcore_suite(suite_seed),
        "spectral" => spectral_suite(suite_seed),
        "scars" => scars_suite(suite_seed),
        "entropy" => entropy_suite(suite_seed),
        "landscape" => landscape_suite(suite_seed),
        _ => unreachable!(),
    })
}

/// Validates a caller-supplied central matrix the way the verify surface
/// reports it: named, with the measured unitarity error.
pub fn check_explicit_unitary(m: &CMat<f64>) -> CheckOutcome {
    let err = m.unitarity_error();
    CheckOutcome {
        suite: "graphcore",
        name: "explicit-unitary".into(),
        passed: m.is_square() && err < 1e-10,
        detail: format!("unitarity error {err:.3e}"),
    }
}

/// Counter-based seed expansion (splitmix64 step), so one user seed yields
/// independent, reproducible streams per suite and per check.
pub fn expand_seed(seed: u64, lane: u64) -> u64 {
    let mut z = seed.wrapping_add(lane.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn outcome(suite: &'static str, name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        suite,
        name: name.into(),
        passed,
        detail,
    }
}

/// Worst-case margin outcome: passes when `worst` stays at or above zero
/// (already tolerance-shifted by the caller).
fn margin_outcome(suite: &'static str, name: &str, worst_margin: f64) -> CheckOutcome {
    outcome(
        suite,
        name,
        worst_margin >= 0.0,
        format!("worst margin {worst_margin:.3e}"),
    )
}

fn error_outcome(suite: &'static str, name: &str, err: &Error) -> CheckOutcome {
    outcome(suite, name, false, format!("failed to construct: {err}"))
}

// ---------------------------------------------------------------- numkernel

fn numkernel_suite(seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "numkernel";
    let mut out = Vec::new();

    let mut worst = 0.0f64;
    for (i, n) in [3usize, 8, 16].into_iter().enumerate() {
        worst = worst.max(random_unitary::<f64>(n, expand_seed(seed, i as u64)).unitarity_error());
    }
    out.push(outcome(
        SUITE,
        "random-unitary-unitarity",
        worst < 1e-10,
        format!("max error {worst:.3e}"),
    ));

    let u = random_unitary::<f64>(12, expand_seed(seed, 10));
    match eig_dense(&u) {
        Ok(eig) => {
            let mut res = 0.0f64;
            let mut circle = 0.0f64;
            for (lam, v) in eig.values.iter().zip(eig.vectors.iter()) {
                circle = circle.max((lam.norm() - 1.0).abs());
                let image = u.mul_vec(v);
                let mut acc = 0.0;
                for i in 0..12 {
                    acc += (image[i] - lam * v[i]).norm_sqr();
                }
                res = res.max(acc.sqrt());
            }
            out.push(outcome(
                SUITE,
                "eig-dense-unitary-spectrum",
                res < 1e-9 && circle < 1e-9,
                format!("max residual {res:.3e}, max |lambda|-1 {circle:.3e}"),
            ));
        }
        Err(e) => out.push(error_outcome(SUITE, "eig-dense-unitary-spectrum", &e)),
    }

    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 20));
    let mut worst_res = 0.0f64;
    let mut ok = true;
    for _ in 0..5 {
        let degree = 3 + (rng.gen::<u64>() % 3) as usize;
        let mut coeffs = vec![Complex::new(0.0, 0.0); degree + 1];
        for c in coeffs.iter_mut() {
            *c = Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
        coeffs[degree] = Complex::new(1.0, 0.0);
        match poly_roots(&coeffs) {
            Ok(sol) => worst_res = worst_res.max(sol.max_residual()),
            Err(_) => ok = false,
        }
    }
    out.push(outcome(
        SUITE,
        "poly-roots-residuals",
        ok && worst_res < 1e-8,
        format!("max |p(root)| {worst_res:.3e}"),
    ));

    let sin_int = adaptive_quadrature(&|t: f64| t.sin(), 0.0, std::f64::consts::PI, 1e-12);
    let sq_int = adaptive_quadrature(&|t: f64| t * t, 0.0, 1.0, 1e-12);
    let passed = matches!(sin_int, Ok(v) if (v - 2.0).abs() < 1e-11)
        && matches!(sq_int, Ok(v) if (v - 1.0 / 3.0).abs() < 1e-11);
    out.push(outcome(
        SUITE,
        "adaptive-quadrature-known-values",
        passed,
        format!("sin {sin_int:?}, square {sq_int:?}"),
    ));

    // rank-one matrix in dimension 6 has a 5-dimensional null space
    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 30));
    let v = CVec::from_fn(6, |_| Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
    let rank_one = CMat::from_fn(6, 6, |r, c| v[r] * v[c].conj());
    match null_space(&rank_one, 1e-10) {
        Ok(basis) => {
            let mut worst = 0.0f64;
            for b in &basis {
                worst = worst.max(rank_one.mul_vec(b).norm());
            }
            out.push(outcome(
                SUITE,
                "null-space-rank-one",
                basis.len() == 5 && worst < 1e-9,
                format!("nullity {}, max image norm {worst:.3e}", basis.len()),
            ));
        }
        Err(e) => out.push(error_outcome(SUITE, "null-space-rank-one", &e)),
    }

    out
}

// ---------------------------------------------------------------- graphcore

fn graphcore_suite(seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "graphcore";
    let mut out = Vec::new();

    let mut worst_unit = 0.0f64;
    let mut worst_fourth = 0.0f64;
    for bonds in [2usize, 3, 4, 6, 16, 64] {
        let f = fourier_matrix::<f64>(bonds).expect("valid dimension");
        worst_unit = worst_unit.max(f.unitarity_error());
        let f4 = f.mul(&f).mul(&f).mul(&f);
        worst_fourth = worst_fourth.max(f4.sub(&CMat::identity(bonds)).max_abs());
    }
    out.push(outcome(
        SUITE,
        "fourier-unitary-order-four",
        worst_unit < 1e-10 && worst_fourth < 1e-10,
        format!("unitarity {worst_unit:.3e}, |F^4 - I| {worst_fourth:.3e}"),
    ));

    let mut worst = 0.0f64;
    let mut structure_ok = true;
    for bonds in [6usize, 14, 18, 30, 38] {
        let e = paley_equitransmitting::<f64>(bonds).expect("admissible count");
        worst = worst.max(e.unitarity_error());
        let flat = 1.0 / ((bonds - 1) as f64).sqrt();
        for r in 0..bonds {
            for c in 0..bonds {
                let z = e[(r, c)];
                structure_ok &= z.im == 0.0;
                structure_ok &= (z - e[(c, r)]).norm() < 1e-15;
                let want = if r == c { 0.0 } else { flat };
                structure_ok &= (z.norm() - want).abs() < 1e-12;
            }
        }
        let invol = e.mul(&e).sub(&CMat::identity(bonds)).max_abs();
        worst = worst.max(invol);
    }
    out.push(outcome(
        SUITE,
        "paley-structure",
        worst < 1e-10 && structure_ok,
        format!("worst unitarity/involution error {worst:.3e}"),
    ));

    let mut spectrum_ok = true;
    let mut detail = String::new();
    for bonds in [3usize, 5, 8] {
        let k = kirchhoff_matrix::<f64>(bonds).expect("valid dimension");
        match eig_dense(&k) {
            Ok(eig) => {
                let plus = eig.values.iter().filter(|z| (*z - 1.0).norm() < 1e-9).count();
                let minus = eig.values.iter().filter(|z| (*z + 1.0).norm() < 1e-9).count();
                if plus != 1 || minus != bonds - 1 {
                    spectrum_ok = false;
                    detail = format!("B={bonds}: {plus} at +1, {minus} at -1");
                }
            }
            Err(e) => {
                spectrum_ok = false;
                detail = format!("B={bonds}: {e}");
            }
        }
    }
    out.push(outcome(
        SUITE,
        "kirchhoff-spectrum",
        spectrum_ok,
        if detail.is_empty() {
            "one eigenvalue at +1, rest at -1".into()
        } else {
            detail
        },
    ));

    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 1));
    let graph = StarGraph::<f64>::with_sqrt_prime_lengths(4, crate::graphcore::CentralScattering::Fourier)
        .expect("valid graph");
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let k = 50.0 * rng.gen::<f64>();
        worst = worst.max(graph.evolution_operator(k).unitarity_error());
    }
    out.push(outcome(
        SUITE,
        "evolution-unitarity",
        worst < 1e-10,
        format!("max error over random k {worst:.3e}"),
    ));

    // lift a random eigenpair of Sigma Pi into the doubled matrix
    let sigma = random_unitary::<f64>(5, expand_seed(seed, 2));
    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 3));
    let pi = CMat::diagonal(
        &(0..5)
            .map(|_| Complex::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU))
            .collect::<Vec<_>>(),
    );
    let lift_check = (|| -> Result<f64> {
        let eig = eig_dense(&sigma.mul(&pi))?;
        let (lam, v) = (eig.values[0], &eig.vectors[0]);
        let (plus, minus) = lift_pair(&sigma, &pi, v, lam)?;
        let doubled = CMat::block_antidiagonal(&sigma, &pi);
        let root = lam.sqrt();
        let mut worst = 0.0f64;
        for (vec, nu) in [(&plus, root), (&minus, -root)] {
            let image = doubled.mul_vec(vec);
            let mut acc = 0.0;
            for i in 0..10 {
                acc += (image[i] - nu * vec[i]).norm_sqr();
            }
            worst = worst.max(acc.sqrt() / vec.norm());
        }
        Ok(worst)
    })();
    match lift_check {
        Ok(worst) => out.push(outcome(
            SUITE,
            "lift-pair-roundtrip",
            worst < 1e-9,
            format!("max doubled residual {worst:.3e}"),
        )),
        Err(e) => out.push(error_outcome(SUITE, "lift-pair-roundtrip", &e)),
    }

    out
}

// ----------------------------------------------------------------- spectral

fn spectral_suite(_seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "spectral";
    let mut out = Vec::new();

    let single = StarGraph::<f64>::new(
        vec![1.0],
        crate::graphcore::CentralScattering::Fourier,
    )
    .and_then(|g| secular_roots(&g, 0.0, 30.0));
    match single {
        Ok(roots) => {
            let pi = std::f64::consts::PI;
            let expect = (30.0 / pi) as usize;
            let mut worst = 0.0f64;
            for (n, r) in roots.iter().enumerate() {
                worst = worst.max((r.k - (n + 1) as f64 * pi).abs());
            }
            out.push(outcome(
                SUITE,
                "single-bond-root-ladder",
                roots.len() == expect && worst < 1e-9,
                format!("{} roots, max offset {worst:.3e}", roots.len()),
            ));
        }
        Err(e) => out.push(error_outcome(SUITE, "single-bond-root-ladder", &e)),
    }

    let four = StarGraph::<f64>::with_sqrt_prime_lengths(
        4,
        crate::graphcore::CentralScattering::Fourier,
    )
    .and_then(|g| secular_roots(&g, 0.0, 60.0).map(|r| (g, r)));
    match four {
        Ok((graph, roots)) => {
            let weyl = 60.0 * graph.total_length() / std::f64::consts::PI;
            let count = roots.len() as f64;
            out.push(outcome(
                SUITE,
                "weyl-count",
                (count - weyl).abs() <= 2.0,
                format!("{count} roots vs Weyl estimate {weyl:.2}"),
            ));
            let worst_res = roots.iter().map(|r| r.residual).fold(0.0f64, f64::max);
            let min_mult = roots.iter().map(|r| r.multiplicity).min().unwrap_or(0);
            out.push(outcome(
                SUITE,
                "root-eigenvector-residuals",
                worst_res < 1e-7 && min_mult >= 1,
                format!("max residual {worst_res:.3e}, min multiplicity {min_mult}"),
            ));
        }
        Err(e) => {
            out.push(error_outcome(SUITE, "weyl-count", &e));
            out.push(error_outcome(SUITE, "root-eigenvector-residuals", &e));
        }
    }

    out
}

// -------------------------------------------------------------------- scars

fn scars_suite(_seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "scars";
    let mut out = Vec::new();

    let mut worst_ratio = 0.0f64;
    let mut failures = Vec::new();
    for bonds in [4usize, 8, 16, 32] {
        for kappa in [0.3, 0.7, 1.2] {
            for eps2 in [Sign::Plus, Sign::Minus] {
                match fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, eps2) {
                    Ok((scar, core)) => {
                        let ratio =
                            scar.vec[0].norm_sqr() / scar.vec[1].norm_sqr();
                        let err = (ratio - core.n * core.n).abs() / (core.n * core.n);
                        worst_ratio = worst_ratio.max(err);
                    }
                    Err(e) => failures.push(format!("B={bonds} k={kappa} e2={eps2}: {e}")),
                }
            }
        }
    }
    out.push(outcome(
        SUITE,
        "first-bond-certificates-and-ratio",
        failures.is_empty() && worst_ratio < 1e-9,
        if failures.is_empty() {
            format!("max relative ratio error {worst_ratio:.3e}")
        } else {
            failures.join("; ")
        },
    ));

    let mut ok = true;
    let mut detail = String::new();
    for (bonds, j) in [(16usize, 2usize), (25, 3)] {
        match fourier_general_j::<f64>(bonds, j, 0.8) {
            Ok(basis) => {
                let worst = basis.roots.iter().map(|r| r.residual).fold(0.0f64, f64::max);
                if worst >= 1e-9 {
                    ok = false;
                    detail = format!("B={bonds} j={j}: residual {worst:.3e}");
                }
                // the untouched spectrum stays on the fourth roots of unity
                let m = crate::scars::perturbed_fourier::<f64>(bonds, j, 0.8)
                    .expect("valid domain");
                if let Ok(eig) = eig_dense(&m) {
                    let fourth = [
                        Complex::new(1.0, 0.0),
                        Complex::new(-1.0, 0.0),
                        Complex::new(0.0, 1.0),
                        Complex::new(0.0, -1.0),
                    ];
                    let mut stray = 0usize;
                    for z in &eig.values {
                        let to_fixed = fourth
                            .iter()
                            .map(|w| (z - w).norm())
                            .fold(f64::INFINITY, f64::min);
                        let to_moved = basis
                            .roots
                            .iter()
                            .map(|r| (z - r.root).norm())
                            .fold(f64::INFINITY, f64::min);
                        if to_fixed > 1e-9 && to_moved > 1e-8 {
                            stray += 1;
                        }
                    }
                    if stray > 0 {
                        ok = false;
                        detail = format!("B={bonds} j={j}: {stray} stray eigenvalues");
                    }
                }
            }
            Err(e) => {
                ok = false;
                detail = format!("B={bonds} j={j}: {e}");
            }
        }
    }
    out.push(outcome(
        SUITE,
        "general-j-certificates",
        ok,
        if detail.is_empty() {
            "residuals under 1e-9, untouched spectrum on fourth roots".into()
        } else {
            detail
        },
    ));

    let mut worst = 0.0f64;
    let mut ok = true;
    for (bonds, j) in [(5usize, 2usize), (8, 8)] {
        let first = fourier_halfscar::<f64>(bonds, 0.6, Sign::Plus, Sign::Plus);
        let moved = permuted_halfscar::<f64>(bonds, j, 0.6, Sign::Plus, Sign::Plus);
        match (first, moved) {
            (Ok((s1, _)), Ok(sj)) => {
                let gap = (shannon(&s1.vec).unwrap() - shannon(&sj.vec).unwrap()).abs();
                worst = worst.max(gap);
            }
            _ => ok = false,
        }
    }
    out.push(outcome(
        SUITE,
        "permuted-entropy-invariance",
        ok && worst < 1e-12,
        format!("max entropy gap {worst:.3e}"),
    ));

    let mut worst = 0.0f64;
    let mut ok = true;
    for bonds in [6usize, 14] {
        for kappa in [0.5, 1.0, 2.0] {
            match equitransmitting_halfscar::<f64>(bonds, kappa, Sign::Plus, Sign::Plus) {
                Ok(scar) => {
                    let mu_half = Complex::from_polar(1.0, 0.5 * kappa);
                    worst = worst.max((scar.eigenvalue - mu_half).norm());
                    worst = worst.max((scar.vec[0].norm_sqr() - 0.25).abs());
                    let flat = 0.25 / (bonds as f64 - 1.0);
                    worst = worst.max((scar.vec[1].norm_sqr() - flat).abs());
                }
                Err(_) => ok = false,
            }
        }
    }
    out.push(outcome(
        SUITE,
        "equi-transmitting-closed-forms",
        ok && worst < 1e-12,
        format!("max deviation {worst:.3e}"),
    ));

    // the second half of any lift is the phase matrix times the first half
    // divided by the eigenvalue
    let lift_structure = fourier_halfscar::<f64>(8, 0.9, Sign::Minus, Sign::Plus).map(
        |(scar, _)| {
            let p = phase_point::<f64>(8, 1, 0.9).expect("valid index");
            let top = CVec::from_fn(8, |i| scar.vec[i]);
            let image = p.mul_vec(&top);
            let mut worst = 0.0f64;
            for i in 0..8 {
                worst = worst
                    .max((scar.vec[8 + i] - image[i] / scar.eigenvalue).norm());
            }
            worst
        },
    );
    match lift_structure {
        Ok(worst) => out.push(outcome(
            SUITE,
            "lift-block-structure",
            worst < 1e-10,
            format!("max block deviation {worst:.3e}"),
        )),
        Err(e) => out.push(error_outcome(SUITE, "lift-block-structure", &e)),
    }

    out
}

// ------------------------------------------------------------------ entropy

/// Dressed-matrix uncertainty outcomes: for each listed central matrix, draws
/// `per_case` random diagonal phase dressings D Sigma D, diagonalizes, and
/// measures every eigenvector against the Shannon bound and the Renyi-pair
/// bound at sigma in {0.1, 0.5, 0.9}. One outcome per matrix, margins
/// tolerance-shifted by 1e-8.
pub fn dressed_uncertainty_outcomes(seed: u64, per_case: usize) -> Vec<CheckOutcome> {
    const SUITE: &str = "entropy";
    let cases: [(&str, CMat<f64>); 4] = [
        ("fourier-6", fourier_matrix::<f64>(6).expect("valid")),
        ("fourier-16", fourier_matrix::<f64>(16).expect("valid")),
        ("paley-6", paley_equitransmitting::<f64>(6).expect("admissible")),
        ("paley-14", paley_equitransmitting::<f64>(14).expect("admissible")),
    ];
    let mut out = Vec::new();
    for (lane, (label, sigma_mat)) in cases.into_iter().enumerate() {
        let bonds = sigma_mat.rows();
        let (s_bound, pair_bound) = uncertainty_bounds(&sigma_mat, 0.5).expect("unitary");
        let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 100 + lane as u64));
        let mut worst = f64::INFINITY;
        let mut checked = 0usize;
        for _ in 0..per_case {
            let d = CMat::diagonal(
                &(0..bonds)
                    .map(|_| Complex::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU))
                    .collect::<Vec<_>>(),
            );
            let dressed = d.mul(&sigma_mat).mul(&d);
            let eig = eig_dense(&dressed).expect("unitary diagonalizes");
            for x in &eig.vectors {
                worst = worst.min(shannon(x).expect("nonzero") - (s_bound - 1e-8));
                for s in [0.1f64, 0.5, 0.9] {
                    let pair = renyi(x, s / (1.0 - s)).expect("valid order")
                        + renyi(x, -s / (1.0 + s)).expect("valid order");
                    worst = worst.min(pair - (pair_bound - 1e-8));
                }
                checked += 1;
            }
        }
        out.push(outcome(
            SUITE,
            &format!("dressed-bounds-{label}"),
            worst >= 0.0,
            format!("{checked} eigenvectors, worst margin {worst:.3e}"),
        ));
    }
    out
}

fn entropy_suite(seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "entropy";
    let mut out = dressed_uncertainty_outcomes(seed, 25);

    let mut worst = 0.0f64;
    let mut ok = true;
    for bonds in [3usize, 8, 16] {
        for kappa in [0.2, 0.7, 1.3] {
            for eps2 in [Sign::Plus, Sign::Minus] {
                match fourier_halfscar::<f64>(bonds, kappa, Sign::Plus, eps2) {
                    Ok((_, core)) => {
                        let s = shannon(&core.x).expect("nonzero");
                        let closed =
                            halfscar_entropy_closed_form(bonds, kappa, eps2).expect("domain");
                        worst = worst.max((s - closed).abs());
                        if bonds >= 4 {
                            let pair = renyi_inf(&core.x).expect("nonzero")
                                + renyi(&core.x, -0.5).expect("valid order");
                            let closed = halfscar_renyi_pair_closed_form(bonds, kappa, eps2)
                                .expect("dominant");
                            worst = worst.max((pair - closed).abs());
                        }
                    }
                    Err(_) => ok = false,
                }
            }
        }
    }
    out.push(outcome(
        SUITE,
        "halfscar-closed-forms",
        ok && worst < 1e-12,
        format!("max gap {worst:.3e}"),
    ));

    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 200));
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let x = CVec::from_fn(6, |_| {
            Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        let lam = Complex::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU);
        let report = entropy_relations_check(&x, 0.8, lam, &[-0.5, 1.0, 5.0])
            .expect("valid inputs");
        worst = worst.max(report.max_gap());
    }
    out.push(outcome(
        SUITE,
        "lift-entropy-relations",
        worst < 1e-12,
        format!("max gap {worst:.3e}"),
    ));

    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 201));
    let mut worst = 0.0f64;
    let mut ok = true;
    for _ in 0..20 {
        let a = 0.5 + 2.5 * rng.gen::<f64>();
        let b = a * (1.8 * rng.gen::<f64>() - 0.9);
        let alpha = 4.0 * rng.gen::<f64>() - 2.0;
        let beta = 4.0 * rng.gen::<f64>() - 2.0;
        match (
            log_cos_integral(alpha, beta, a, b),
            log_cos_integral_quadrature(alpha, beta, a, b, 1e-12),
        ) {
            (Ok(closed), Ok(quad)) => worst = worst.max((closed - quad).abs()),
            _ => ok = false,
        }
    }
    out.push(outcome(
        SUITE,
        "log-integral-quadrature-oracle",
        ok && worst < 1e-9,
        format!("max |closed - quadrature| {worst:.3e}"),
    ));

    let mut prev = f64::INFINITY;
    let mut monotone = true;
    for bonds in [100usize, 1000, 10000] {
        let v = halfscar_entropy_closed_form::<f64>(bonds, 0.6, Sign::Plus).expect("domain");
        let reference =
            asymptotic_reference::<f64>(ScarEntropyAsymptote::FourierFirstBondShannon, bonds)
                .expect("domain")
                - std::f64::consts::LN_2;
        let gap = (v - reference).abs();
        monotone &= gap < prev;
        prev = gap;
    }
    out.push(outcome(
        SUITE,
        "first-bond-asymptote-approach",
        monotone,
        format!("final gap {prev:.3e}"),
    ));

    out
}

// ---------------------------------------------------------------- landscape

fn landscape_suite(seed: u64) -> Vec<CheckOutcome> {
    const SUITE: &str = "landscape";
    let mut out = Vec::new();

    match landscape::scan::<f64>(30) {
        Ok(grid) => {
            let floor = 3f64.ln() - 1e-9;
            let worst = grid
                .points
                .iter()
                .map(|p| p.min_doubled_entropy - floor)
                .fold(f64::INFINITY, f64::min);
            out.push(margin_outcome(SUITE, "node-lower-bound", worst));

            // resolution 30 puts the three true minima exactly on nodes
            let exact = exact_minimum_value::<f64>();
            let minima = find_minima(&grid);
            let deep = minima
                .iter()
                .filter(|(_, _, v)| (v - exact).abs() < 1e-9)
                .count();
            out.push(outcome(
                SUITE,
                "deep-minima-on-nodes",
                deep >= 3,
                format!("{deep} minima at the exact value"),
            ));
        }
        Err(e) => {
            out.push(error_outcome(SUITE, "node-lower-bound", &e));
            out.push(error_outcome(SUITE, "deep-minima-on-nodes", &e));
        }
    }

    let mut rng = ChaCha12Rng::seed_from_u64(expand_seed(seed, 300));
    let tau = std::f64::consts::TAU;
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let x1 = rng.gen::<f64>() * tau;
        let x2 = rng.gen::<f64>() * tau;
        let v = landscape_point::<f64>(x1, x2, 1e-2)
            .expect("finite")
            .min_doubled_entropy;
        let sw = landscape_point::<f64>(x2, x1, 1e-2)
            .expect("finite")
            .min_doubled_entropy;
        let cy = landscape_point::<f64>(tau / 3.0 - x2, 2.0 * tau / 3.0 + x1 - x2, 1e-2)
            .expect("finite")
            .min_doubled_entropy;
        worst = worst.max((v - sw).abs()).max((v - cy).abs());
    }
    out.push(outcome(
        SUITE,
        "symmetry-maps",
        worst < 1e-12,
        format!("max value drift {worst:.3e}"),
    ));

    let origin = landscape_point::<f64>(0.0, 0.0, 1e-2)
        .expect("finite")
        .min_doubled_entropy;
    let gap = (origin - exact_minimum_value::<f64>()).abs();
    out.push(outcome(
        SUITE,
        "origin-exact-minimum",
        gap < 1e-12,
        format!("gap {gap:.3e}"),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_under_default_seed() {
        let report = run_all(0);
        for o in &report.outcomes {
            assert!(o.passed, "{}/{} failed: {}", o.suite, o.name, o.detail);
        }
        assert!(report.all_passed());
        assert!(report.failures().is_empty());
        // every suite contributed at least one outcome
        for suite in SUITES {
            assert!(report.outcomes.iter().any(|o| o.suite == suite));
        }
    }

    #[test]
    fn suites_are_deterministic_per_seed() {
        let a = run_suite("entropy", 42).unwrap();
        let b = run_suite("entropy", 42).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.passed, y.passed);
            assert_eq!(x.detail, y.detail);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", 0).is_err());
    }

    #[test]
    fn corrupted_explicit_unitary_is_named() {
        let mut m = fourier_matrix::<f64>(4).unwrap();
        m[(0, 0)] = Complex::new(2.0, 0.0);
        let o = check_explicit_unitary(&m);
        assert!(!o.passed);
        assert_eq!(o.name, "explicit-unitary");
        let good = check_explicit_unitary(&fourier_matrix::<f64>(4).unwrap());
        assert!(good.passed);
    }

    #[test]
    fn dressed_outcomes_scale_with_samples() {
        let small = dressed_uncertainty_outcomes(7, 2);
        assert_eq!(small.len(), 4);
        for o in &small {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn seed_expansion_separates_lanes() {
        let a = expand_seed(1, 0);
        let b = expand_seed(1, 1);
        let c = expand_seed(2, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, expand_seed(1, 0));
    }
}
