use rug::float::Constant;
use rug::{Complex, Float};

use super::{check_precision, NumericError};

/// Sample points `(Re τ, Im τ)` for the modular transformation check.
pub const MODULAR_PANEL: [(f64, f64); 5] = [
    (0.0, 1.0),
    (0.0, 0.25),
    (1.0 / 3.0, 0.5),
    (-0.2, 0.75),
    (0.45, 1.5),
];

// beyond this many product factors τ is treated as too close to the cusp
const MAX_PRODUCT_TERMS: f64 = 1e7;

fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// `η(τ) = e^(2πiτ/24) prod_{n>=1} (1 - e^(2πinτ))`, truncated once
/// `|e^(2πinτ)| < 2^(-P-8)`.
pub fn eta_eval(tau: &Complex, prec: u32) -> Result<Complex, NumericError> {
    check_precision(prec)?;
    let im = tau.imag();
    if !(*im > 0) {
        return Err(NumericError::NotUpperHalfPlane(tau.to_string()));
    }
    // |q|^n = exp(-2π n Im τ) < 2^(-P-8)
    let per_term = Float::with_val(prec, im * pi(prec)) * 2u32;
    let needed = Float::with_val(64, f64::from(prec + 8) * std::f64::consts::LN_2) / &per_term;
    let terms = needed.to_f64().ceil();
    if !(terms <= MAX_PRODUCT_TERMS) {
        return Err(NumericError::TooCloseToCusp { tau: tau.to_string(), terms });
    }

    let two_pi_i = Complex::with_val(prec, (0, Float::with_val(prec, pi(prec) * 2u32)));
    let exponent = Complex::with_val(prec, &two_pi_i * tau);
    let q = Complex::with_val(prec, exponent.exp_ref());
    let mut prefactor = exponent;
    prefactor /= 24u32;
    let mut acc = prefactor.exp();

    let mut qn = q.clone();
    for _ in 0..terms as u64 {
        let factor = Complex::with_val(prec, 1 - &qn);
        acc *= &factor;
        qn *= &q;
    }
    Ok(acc)
}

fn sqrt_minus_i_tau(tau: &Complex, prec: u32) -> Result<Complex, NumericError> {
    let minus_i = Complex::with_val(prec, (0, -1));
    let z = Complex::with_val(prec, &minus_i * tau);
    if *z.imag() == 0 && *z.real() <= 0 {
        return Err(NumericError::BranchCut(z.to_string()));
    }
    Ok(z.sqrt())
}

/// `|η(-1/τ) - sqrt(-iτ) η(τ)|`, principal square root.
pub fn modular_check(tau: &Complex, prec: u32) -> Result<Float, NumericError> {
    check_precision(prec)?;
    if !(*tau.imag() > 0) {
        return Err(NumericError::NotUpperHalfPlane(tau.to_string()));
    }
    let root = sqrt_minus_i_tau(tau, prec)?;
    let inv = Complex::with_val(prec, -Complex::with_val(prec, tau.recip_ref()));
    let lhs = eta_eval(&inv, prec)?;
    let rhs = Complex::with_val(prec, &root * &eta_eval(tau, prec)?);
    let diff = Complex::with_val(prec, &lhs - &rhs);
    Ok(Float::with_val(prec, diff.abs_ref()))
}

/// Smallest θ for which `g(iθ/2π) ≈ 2 sqrt(π/θ) e^(-π²/(4θ))` stays above
/// the float exponent range.
fn min_theta() -> f64 {
    let lowest_exponent = f64::from(rug::float::exp_min()) * std::f64::consts::LN_2;
    // margin of 64 binary orders for the sqrt prefactor and rounding
    let usable = -lowest_exponent - 64.0 * std::f64::consts::LN_2;
    std::f64::consts::PI.powi(2) / (4.0 * usable)
}

/// `g(iθ/2π) = η(τ)²/η(2τ)` at `τ = iθ/2π`, evaluated after `τ ↦ -1/τ` so the
/// product converges quickly for small θ:
/// `g(iy) = sqrt(2) η(i/y)² / (sqrt(y) η(i/(2y)))`.
pub fn g_via_modular(theta: &Float, prec: u32) -> Result<Float, NumericError> {
    check_precision(prec)?;
    if !(*theta > 0) {
        return Err(NumericError::ThetaNotPositive(theta.to_string()));
    }
    let floor = min_theta();
    if theta.to_f64() < floor {
        return Err(NumericError::ThetaTooSmall { theta: theta.to_string(), min_theta: floor });
    }
    let y = Float::with_val(prec, theta / Float::with_val(prec, pi(prec) * 2u32));
    let inv_y = Float::with_val(prec, y.recip_ref());
    let half_inv_y = Float::with_val(prec, &inv_y / 2u32);
    let eta_a = eta_eval(&Complex::with_val(prec, (0, inv_y)), prec)?;
    let eta_b = eta_eval(&Complex::with_val(prec, (0, half_inv_y)), prec)?;
    let num = Complex::with_val(prec, eta_a.square_ref());
    let ratio = Complex::with_val(prec, &num / &eta_b);
    // η at purely imaginary argument is real and positive
    let mut g = ratio.into_real_imag().0;
    g *= Float::with_val(prec, 2u32).sqrt();
    g /= y.sqrt();
    Ok(g)
}

/// `|g(iθ/2π)|`, the correction term separating `f_2` from `q^(-1)`.
pub fn g_smallness_check(theta: &Float, prec: u32) -> Result<Float, NumericError> {
    Ok(g_via_modular(theta, prec)?.abs())
}

/// `1 + 2 sum_{n>=1} (-1)^n e^(-θ n²)` by direct summation.
pub fn theta_sum_direct(theta: &Float, prec: u32) -> Result<Float, NumericError> {
    check_precision(prec)?;
    if !(*theta > 0) {
        return Err(NumericError::ThetaNotPositive(theta.to_string()));
    }
    let q = Float::with_val(prec, -theta).exp();
    let q2 = Float::with_val(prec, q.square_ref());
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 9));
    let mut ratio = q.clone();
    let mut power = Float::with_val(prec, 1);
    let mut sum = Float::new(prec);
    let mut n = 0u64;
    loop {
        power *= &ratio;
        ratio *= &q2;
        n += 1;
        if power < eps {
            break;
        }
        if n % 2 == 0 {
            sum += &power;
        } else {
            sum -= &power;
        }
    }
    sum *= 2u32;
    sum += 1u32;
    Ok(sum)
}
