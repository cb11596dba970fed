//! Numerical laboratory for quantum star graphs: scattering matrices, secular
//! spectra, analytically constructed half-scarred eigenvectors, and entropy
//! measures with entropic uncertainty bounds.
//!
//! The crate is generic over the real scalar type through [`Real`]; concrete
//! f64 aliases live at the crate root ([`C64`], [`Vec64`], [`Mat64`], ...).

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

pub mod numkernel;
pub mod graphcore;
pub mod spectral;
pub mod scars;
pub mod entropy;
pub mod landscape;
pub mod checks;

/// Real scalar the whole crate is generic over. Implemented for f32 and f64.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for converting an f64 literal into the working scalar.
#[inline]
pub fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

/// Shorthand for converting a usize count into the working scalar.
#[inline]
pub fn cast_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("count representable in scalar type")
}

/// Complex scalar over the working real type.
pub type Cpx<T> = Complex<T>;

// Concrete double-precision aliases.
pub type C64 = Complex<f64>;
pub type Vec64 = numkernel::CVec<f64>;
pub type Mat64 = numkernel::CMat<f64>;
pub type Eigen64 = numkernel::EigenDecomposition<f64>;
pub type StarGraph64 = graphcore::StarGraph<f64>;
pub type CentralScattering64 = graphcore::CentralScattering<f64>;
pub type ScarVector64 = scars::ScarVector<f64>;
pub type HalfScarCore64 = scars::HalfScarCore<f64>;
pub type PerturbedEigenBasis64 = scars::PerturbedEigenBasis<f64>;
pub type SecularRoot64 = spectral::SecularRoot<f64>;
pub type ConvergenceTrace64 = spectral::ConvergenceTrace<f64>;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {dim} exceeds supported maximum {max}")]
    DimTooLarge { dim: usize, max: usize },
    #[error("non-finite entry at flat index {index}")]
    NonFinite { index: usize },
    #[error("empty vector or matrix not allowed")]
    Empty,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("eigenvalue iteration failed to converge: {0}")]
    EigConvergence(String),
    #[error("quadrature failed to reach tolerance: {0}")]
    QuadratureConvergence(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not unitary: max deviation {0}")]
    NotUnitary(f64),
    #[error("input pair fails its eigen relation: residual {0}")]
    NotAnEigenpair(f64),
    #[error("eigenvalue too close to zero for a square-root lift: modulus {0}")]
    ZeroEigenvalue(f64),
    #[error("scan step too large: {0}")]
    StepTooLarge(String),
    #[error("construction degenerate: {0}")]
    Degenerate(String),
}

pub type Result<V> = std::result::Result<V, Error>;

/// Sign selector for the two branches of each scar family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn scalar<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    pub fn from_i32(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidParameter(format!(
                "sign must be +1 or -1, got {other}"
            ))),
        }
    }

    #[inline]
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+1" } else { "-1" })
    }
}
