use rug::ops::Pow;
use rug::{Assign, Float};

use super::{check_precision, NumericError};

/// Extra working bits; results are rounded once to the requested precision.
const GUARD_BITS: u32 = 32;

/// Result of summing `2 sum (-1)^n q^(n^2 + bn)` up to the first negligible term.
#[derive(Clone, Debug)]
pub struct PartialThetaSum {
    pub value: Float,
    /// Number of terms added, `n = 0..terms`.
    pub terms: u64,
    /// The first omitted term, signed. The exact value lies between
    /// `value` and `value + next_term` once the terms are decreasing.
    pub next_term: Float,
}

/// `f_b(t)` at `prec` bits. Non-integer `b` is accepted.
pub fn eval_f(b: f64, t: &Float, prec: u32) -> Result<Float, NumericError> {
    Ok(eval_f_detailed(b, t, prec)?.value)
}

pub fn eval_f_detailed(b: f64, t: &Float, prec: u32) -> Result<PartialThetaSum, NumericError> {
    check_precision(prec)?;
    if !b.is_finite() {
        return Err(NumericError::InvalidB(b));
    }
    if !(*t > 0 && *t < 1) {
        return Err(NumericError::TOutOfRange(t.to_string()));
    }
    let out_prec = prec;
    let prec = prec + GUARD_BITS;
    let one_minus = Float::with_val(prec, 1 - t);
    let one_plus = Float::with_val(prec, 1 + t);
    let q = Float::with_val(prec, &one_minus / &one_plus);
    let q2 = Float::with_val(prec, q.square_ref());
    // ratio between consecutive powers: q^(2n + 1 + b)
    let mut ratio = Float::with_val(prec, (&q).pow(1.0 + b));
    let mut power = Float::with_val(prec, 1);
    // stop once the next term 2 q^(...) is below 2^(-P-8)
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 9));

    let mut sum = Float::new(prec);
    let mut n: u64 = 0;
    loop {
        if n % 2 == 0 {
            sum += &power;
        } else {
            sum -= &power;
        }
        power *= &ratio;
        ratio *= &q2;
        n += 1;
        // terms decrease once 2n + 1 + b > 0
        let decreasing = 2.0 * n as f64 + 1.0 + b > 0.0;
        if decreasing && power < eps {
            break;
        }
    }
    sum *= 2;
    let mut next_term = Float::new(prec);
    next_term.assign(&power * 2u32);
    if n % 2 == 1 {
        next_term = -next_term;
    }
    Ok(PartialThetaSum {
        value: Float::with_val(out_prec, sum),
        terms: n,
        next_term: Float::with_val(out_prec, next_term),
    })
}
