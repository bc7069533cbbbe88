//! Exact asymptotic coefficients of `f_b(t) = 2 sum_{n>=0} (-1)^n q^(n^2+bn)`,
//! `q = (1-t)/(1+t)`, as `t -> 0+`.
//!
//! With `θ = log((1+t)/(1-t))` the summand is `g(n) = exp(-θ(n^2 + bn))`, and
//! Boole summation gives
//!
//! ```text
//! 2 sum_{n>=0} (-1)^n g(n) ~ sum_k E_k(0) g^(k)(0)/k!
//! ```
//!
//! where `E_k(0)` are the Euler polynomial constants. Each Taylor coefficient
//! `g^(k)(0)/k!` is a polynomial in `θ` whose lowest power is `θ^ceil(k/2)`,
//! so regrouping by powers of `θ` leaves finite sums. Substituting `θ(t)`
//! yields the `a_n`.

mod theta_poly;

use std::fmt;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::powerseries::{serde_ratio_vec, theta_of_t, to_ratio_string, TruncatedSeries, Variable};

pub use theta_poly::{ThetaPoly, ThetaPolySeries};

/// Shortest run of same-sign trailing coefficients accepted as evidence of
/// stabilization. The run must also be at least as long as the prefix it
/// follows.
pub const MIN_STABLE_RUN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticsError {
    #[error("b must be a positive integer, got {0}")]
    InvalidB(u32),
    #[error("[θ^{j}] c_{k} is nonzero although k > 2j")]
    ParityViolation { k: usize, j: usize },
    #[error("c_{k} has θ-degree outside [ceil(k/2), k]")]
    DegreeViolation { k: usize },
}

/// `E_0(0), ..., E_K(0)` from `2/(e^u + 1) = sum_k E_k(0) u^k / k!`.
pub fn euler_at_zero_table(max_k: usize) -> Vec<Rational> {
    let u = TruncatedSeries::identity(Variable::X, max_k);
    let mut denom = u.exp().expect("u has zero constant term");
    let c0 = Rational::from(denom.coeff(0) + 1u32);
    denom.set_coeff(0, c0);
    let gf = denom.invert_unit().expect("constant term is 2").scale(&Rational::from(2));
    let mut factorial = Integer::from(1);
    gf.into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                factorial *= k as u64;
            }
            c * &factorial
        })
        .collect()
}

pub fn euler_at_zero(k: usize) -> Rational {
    euler_at_zero_table(k).pop().expect("table has k + 1 entries")
}

/// Taylor coefficients `c_k = g^(k)(0)/k!` of `g(x) = exp(-θ(x^2 + bx))`, `k <= max_k`.
pub fn gauss_coeffs(b: u32, max_k: usize) -> ThetaPolySeries {
    let mut exponent = vec![ThetaPoly::zero(); max_k + 1];
    if max_k >= 1 {
        exponent[1] = ThetaPoly::from_coeffs(vec![Rational::new(), Rational::from(-i64::from(b))]);
    }
    if max_k >= 2 {
        exponent[2] = ThetaPoly::from_coeffs(vec![Rational::new(), Rational::from(-1)]);
    }
    ThetaPolySeries::from_entries(exponent).exp().expect("exponent vanishes at x = 0")
}

/// `sum_j d_j θ^j` with `d_j = sum_{k=j}^{2j} E_k(0) [θ^j] c_k`, through `θ^max_j`.
///
/// Coefficients `c_k` are generated two orders past `2 max_j` and every
/// generated `c_k` is checked to have θ-degree in `[ceil(k/2), k]`.
pub fn boole_theta_series(b: u32, max_j: usize) -> Result<TruncatedSeries, AsymptoticsError> {
    if b < 1 {
        return Err(AsymptoticsError::InvalidB(b));
    }
    let max_k = 2 * max_j + 2;
    let c = gauss_coeffs(b, max_k);
    let euler = euler_at_zero_table(max_k);

    for (k, ck) in c.entries().iter().enumerate() {
        let (lo, hi) = (ck.valuation(), ck.degree());
        let ok = match (lo, hi) {
            (Some(lo), Some(hi)) => lo >= k.div_ceil(2) && hi <= k,
            _ => false,
        };
        if !ok {
            return Err(AsymptoticsError::DegreeViolation { k });
        }
    }

    let mut d = Vec::with_capacity(max_j + 1);
    for j in 0..=max_j {
        let mut acc = Rational::new();
        for (k, ck) in c.entries().iter().enumerate() {
            let coeff = ck.coeff(j);
            if coeff == 0 {
                continue;
            }
            if k > 2 * j {
                return Err(AsymptoticsError::ParityViolation { k, j });
            }
            acc += coeff * &euler[k];
        }
        d.push(acc);
    }
    Ok(TruncatedSeries::from_coeffs(Variable::Theta, d))
}

/// Where the tail of a coefficient list settles into one sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignReport {
    pub sign_cutoff: usize,
    pub stable_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SignUndetermined {
    #[error("no coefficients")]
    Empty,
    #[error("last coefficient a_{0} is zero")]
    ZeroTail(usize),
    #[error("same-sign tail a_{cutoff}..a_{order} is too short to call (need {needed} terms)")]
    TailTooShort { cutoff: usize, order: usize, needed: usize },
}

impl SignReport {
    /// Scans from the top for the least `M` such that `a_M..a_N` are all
    /// strictly positive or all strictly negative.
    pub fn from_coeffs(a: &[Rational]) -> Result<Self, SignUndetermined> {
        let last = a.last().ok_or(SignUndetermined::Empty)?;
        let order = a.len() - 1;
        let stable_sign: i8 = match last.cmp0() {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => return Err(SignUndetermined::ZeroTail(order)),
        };
        let same = |r: &Rational| match stable_sign {
            1 => *r > 0,
            _ => *r < 0,
        };
        let cutoff = a.iter().rposition(|r| !same(r)).map_or(0, |i| i + 1);
        let run = order + 1 - cutoff;
        let needed = MIN_STABLE_RUN.max(cutoff);
        if run < needed {
            return Err(SignUndetermined::TailTooShort { cutoff, order, needed });
        }
        Ok(Self { sign_cutoff: cutoff, stable_sign })
    }
}

/// Eventual sign of `a_n` for integer `b >= 1`: `+1` when `b ≡ 1, 2 (mod 4)`, `-1` otherwise.
pub fn predicted_sign(b: u32) -> i8 {
    match b % 4 {
        1 | 2 => 1,
        _ => -1,
    }
}

/// Exact `a_0..a_N` for one `b`, with its sign report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    pub b: u32,
    pub order: usize,
    pub a: Vec<Rational>,
    pub sign: Result<SignReport, SignUndetermined>,
}

impl ExpansionResult {
    /// Indices whose coefficient is not an integer.
    pub fn non_integral(&self) -> Vec<usize> {
        self.a
            .iter()
            .enumerate()
            .filter(|(_, r)| *r.denom() != 1)
            .map(|(n, _)| n)
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.non_integral().is_empty()
    }

    pub fn table(&self) -> CoefficientTable {
        let (sign_cutoff, stable_sign) = match &self.sign {
            Ok(r) => (Some(r.sign_cutoff), Some(r.stable_sign)),
            Err(_) => (None, None),
        };
        CoefficientTable { b: self.b, order: self.order, a: self.a.clone(), sign_cutoff, stable_sign }
    }

    /// `b,n,a_n` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["b", "n", "a_n"]).expect("in-memory write");
        for (n, r) in self.a.iter().enumerate() {
            w.write_record([self.b.to_string(), n.to_string(), to_ratio_string(r)])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}

impl fmt::Display for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Serialized form of an [`ExpansionResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub b: u32,
    pub order: usize,
    #[serde(with = "serde_ratio_vec")]
    pub a: Vec<Rational>,
    pub sign_cutoff: Option<usize>,
    pub stable_sign: Option<i8>,
}

/// `a_0..a_order` of the asymptotic expansion of `f_b(t)`.
pub fn asymptotic_coeffs(b: u32, order: usize) -> Result<ExpansionResult, AsymptoticsError> {
    let in_theta = boole_theta_series(b, order)?;
    let in_t = in_theta.compose(&theta_of_t(order)).expect("θ(t) has zero constant term");
    let a = in_t.into_coeffs();
    let sign = SignReport::from_coeffs(&a);
    Ok(ExpansionResult { b, order, a, sign })
}

pub fn sign_report(b: u32, order: usize) -> Result<Result<SignReport, SignUndetermined>, AsymptoticsError> {
    Ok(asymptotic_coeffs(b, order)?.sign)
}
