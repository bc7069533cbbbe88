//! Partial theta functions and the `η(τ)²/η(2τ)` eta quotient as exact
//! q-series, plus coefficient-by-coefficient identity checks.

use rug::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::powerseries::{to_ratio_string, SeriesError, TruncatedSeries, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("b must be at least {min}, got {b}")]
    InvalidB { b: u32, min: u32 },
    #[error("order {order} is too small for b = {b}; need at least {b}")]
    OrderTooSmall { b: u32, order: usize },
    #[error("series engine: {0}")]
    Series(#[from] SeriesError),
}

/// `f_b = 2 sum_{n>=0} (-1)^n q^(n^2 + b n)` truncated at `q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTheta {
    b: u32,
    series: TruncatedSeries,
}

impl PartialTheta {
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.series
    }
}

/// Exponents `n^2 + b n <= order` for `n = 0, 1, ...`.
pub fn partial_theta_exponents(b: u32, order: usize) -> impl Iterator<Item = (u64, usize)> {
    let b = u64::from(b);
    (0u64..)
        .map(move |n| (n, n * n + b * n))
        .take_while(move |&(_, e)| e <= order as u64)
        .map(|(n, e)| (n, e as usize))
}

pub fn partial_theta_q(b: u32, order: usize) -> Result<PartialTheta, QSeriesError> {
    if b < 1 {
        return Err(QSeriesError::InvalidB { b, min: 1 });
    }
    let mut series = TruncatedSeries::zero(Variable::Q, order);
    for (n, e) in partial_theta_exponents(b, order) {
        series.set_coeff(e, Rational::from(if n % 2 == 0 { 2 } else { -2 }));
    }
    Ok(PartialTheta { b, series })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityStatus {
    Ok,
    Mismatch,
}

/// Outcome of comparing two sides of a formal identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub status: IdentityStatus,
    pub first_mismatch_exponent: Option<usize>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.status == IdentityStatus::Ok
    }
}

/// Compares two series coefficientwise up to the smaller order.
pub fn compare_series(
    identity: impl Into<String>,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) -> Result<IdentityReport, QSeriesError> {
    if lhs.variable() != rhs.variable() {
        return Err(SeriesError::VariableMismatch { left: lhs.variable(), right: rhs.variable() }.into());
    }
    let order = lhs.order().min(rhs.order());
    let mismatch = (0..=order).find(|&i| lhs.coeff(i) != rhs.coeff(i));
    Ok(IdentityReport {
        identity: identity.into(),
        order,
        status: if mismatch.is_some() { IdentityStatus::Mismatch } else { IdentityStatus::Ok },
        first_mismatch_exponent: mismatch,
        lhs_coeff: mismatch.map(|i| to_ratio_string(lhs.coeff(i))),
        rhs_coeff: mismatch.map(|i| to_ratio_string(rhs.coeff(i))),
    })
}

/// Right-hand side `-q^(-b) (f_{b-1} - 2)` of the shift identity, built from
/// `f_{b-1}` to order `order`. The result has order `order - b`.
pub fn recursion_rhs(b: u32, order: usize) -> Result<TruncatedSeries, QSeriesError> {
    if b < 2 {
        return Err(QSeriesError::InvalidB { b, min: 2 });
    }
    if order < b as usize {
        return Err(QSeriesError::OrderTooSmall { b, order });
    }
    let lower = partial_theta_q(b - 1, order)?.into_series();
    let two = TruncatedSeries::constant(Variable::Q, Rational::from(2), order);
    // lowest surviving term is the n = 1 term, -2 q^b
    let shifted = lower.sub(&two)?.divide_by_power(b as usize)?;
    Ok(shifted.neg())
}

/// Checks `f_{b+1} = -q^(-b) (f_{b-1} - 2)` exactly through `q^(order - b)`.
pub fn recursion_check(b: u32, order: usize) -> Result<IdentityReport, QSeriesError> {
    let rhs = recursion_rhs(b, order)?;
    let lhs = partial_theta_q(b + 1, rhs.order())?.into_series();
    compare_series(format!("recursion b={b}"), &lhs, &rhs)
}

/// Product side `prod_{n>=1} (1 - q^n)^2 / (1 - q^(2n))` of `η(τ)²/η(2τ)`.
///
/// The `q^(1/24)` prefactors contribute `q^((2·1 - 2)/24) = q^0`, so the
/// quotient is an ordinary power series.
pub fn eta_quotient_series(order: usize) -> TruncatedSeries {
    // (weight of η(τ)^2) - (weight of η(2τ)), in units of q^(1/24)
    const PREFACTOR_EXPONENT: i64 = 2 * 1 - 2;
    assert_eq!(PREFACTOR_EXPONENT, 0);

    let mut acc = TruncatedSeries::one(Variable::Q, order);
    for n in 1..=order {
        let one_minus = one_minus_q_power(n, order);
        acc = acc.mul(&one_minus).expect("same variable");
        acc = acc.mul(&one_minus).expect("same variable");
        if 2 * n <= order {
            let inv = one_minus_q_power(2 * n, order).invert_unit().expect("unit");
            acc = acc.mul(&inv).expect("same variable");
        }
    }
    acc
}

fn one_minus_q_power(n: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(Variable::Q, order);
    if n <= order {
        s.set_coeff(n, Rational::from(-1));
    }
    s
}

/// Sum side `1 + 2 sum_{n>=1} (-1)^n q^(n^2)`.
pub fn theta_sum_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(Variable::Q, order);
    for n in (1usize..).take_while(|n| n * n <= order) {
        s.set_coeff(n * n, Rational::from(if n % 2 == 0 { 2 } else { -2 }));
    }
    s
}

/// Sum side against product side of the eta-quotient identity.
pub fn eta_identity_check(order: usize) -> IdentityReport {
    compare_series("eta quotient", &theta_sum_series(order), &eta_quotient_series(order))
        .expect("both sides are q-series")
}
