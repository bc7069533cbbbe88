//! Multiple-precision evaluation of `f_b(t)`, numerical extraction of its
//! asymptotic coefficients, and Dedekind eta checks.
//!
//! Values are MPFR floats (`rug::Float`, `rug::Complex`) and carry their own
//! precision; every function here returns values at the requested precision
//! `P` or higher. Error estimates are heuristic and are meant to be checked by
//! rerunning at `2P`.

mod eta;
mod eval;
mod extract;

use rug::float::Round;
use rug::{Float, Rational};
use thiserror::Error;

pub use eta::{eta_eval, g_smallness_check, g_via_modular, modular_check, theta_sum_direct, MODULAR_PANEL};
pub use eval::{eval_f, eval_f_detailed, PartialThetaSum};
pub use extract::{extract_coeffs, richardson_at_zero, ExtractOptions, Extraction};

/// Lowest working precision accepted anywhere in this module.
pub const MIN_PRECISION: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("precision {0} bits is below the minimum of {MIN_PRECISION}")]
    PrecisionTooLow(u32),
    #[error("t = {0} is outside (0, 1)")]
    TOutOfRange(String),
    #[error("b = {0} is not finite")]
    InvalidB(f64),
    #[error("tau = {0} is not in the upper half plane")]
    NotUpperHalfPlane(String),
    #[error("-i tau = {0} lies on the branch cut of the square root")]
    BranchCut(String),
    #[error("tau = {tau} needs about {terms} product factors; too close to the real axis")]
    TooCloseToCusp { tau: String, terms: f64 },
    #[error("extraction grid invalid: {0}")]
    InvalidGrid(String),
    #[error("a_{n}: extrapolation error estimate {estimate:e} exceeds tolerance {tolerance:e}; raise precision or shrink t0")]
    ExtractionDiverged { n: usize, estimate: f64, tolerance: f64 },
    #[error("theta = {theta} too small: g(iθ/2π) underflows the exponent range; need theta >= {min_theta:e}")]
    ThetaTooSmall { theta: String, min_theta: f64 },
    #[error("theta must be positive, got {0}")]
    ThetaNotPositive(String),
}

pub(crate) fn check_precision(prec: u32) -> Result<(), NumericError> {
    if prec < MIN_PRECISION {
        return Err(NumericError::PrecisionTooLow(prec));
    }
    Ok(())
}

/// Exact rational to a float at `prec` bits.
pub fn float_from_rational(r: &Rational, prec: u32) -> Float {
    Float::with_val(prec, r)
}

/// Decimal string with `digits` significant digits, rounded half-to-even.
pub fn to_decimal(x: &Float, digits: usize) -> String {
    x.to_string_radix_round(10, Some(digits), Round::Nearest)
}
