//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] is known modulo `v^(N+1)` where `v` is its variable
//! and `N` its order. Binary operations truncate to the smaller of the two
//! orders and refuse to mix variables; substitution of one variable for
//! another goes through [`TruncatedSeries::compose`] or an explicit
//! [`TruncatedSeries::retag`].

mod ratio;

use std::fmt;

use rug::{Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use ratio::{parse_ratio, serde_ratio, serde_ratio_vec, to_ratio_string, ParseRatioError};

/// Symbolic tag of a series variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "theta", alias = "θ")]
    Theta,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::T => "t",
            Variable::Q => "q",
            Variable::X => "x",
            Variable::Theta => "θ",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Variable, right: Variable },
    #[error("constant term is zero; series is not a unit")]
    NotAUnit,
    #[error("constant term must be zero (series needs positive valuation)")]
    NonzeroConstantTerm,
    #[error("cannot divide by {var}^{power}: coefficient of {var}^{exponent} is nonzero")]
    NotDivisible { var: Variable, power: usize, exponent: usize },
    #[error("requested order {requested} exceeds known order {known}")]
    OrderTooLarge { requested: usize, known: usize },
}

/// `c_0 + c_1 v + ... + c_N v^N + O(v^(N+1))` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    variable: Variable,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_N`. The order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty; a series always knows at least `c_0`.
    pub fn from_coeffs(variable: Variable, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { variable, coeffs }
    }

    pub fn from_ints(variable: Variable, coeffs: &[i64]) -> Self {
        Self::from_coeffs(variable, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero(variable: Variable, order: usize) -> Self {
        Self::from_coeffs(variable, vec![Rational::new(); order + 1])
    }

    pub fn constant(variable: Variable, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(variable, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(variable: Variable, order: usize) -> Self {
        Self::constant(variable, Rational::from(1), order)
    }

    /// `c · v^exponent`, which is zero if `exponent > order`.
    pub fn monomial(variable: Variable, exponent: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(variable, order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// The series `v` itself.
    pub fn identity(variable: Variable, order: usize) -> Self {
        Self::monomial(variable, 1, Rational::from(1), order)
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `v^i`. Panics if `i > order`.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: Rational) {
        self.coeffs[i] = c;
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0] != 0
    }

    pub fn has_positive_valuation(&self) -> bool {
        self.coeffs[0] == 0
    }

    /// Same coefficients under a different variable tag.
    pub fn retag(mut self, variable: Variable) -> Self {
        self.variable = variable;
        self
    }

    /// Drops information above `order`. Never extends.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderTooLarge { requested: order, known: self.order() });
        }
        Ok(Self::from_coeffs(self.variable, self.coeffs[..=order].to_vec()))
    }

    fn check_same_var(&self, other: &Self) -> Result<(), SeriesError> {
        if self.variable != other.variable {
            return Err(SeriesError::VariableMismatch { left: self.variable, right: other.variable });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| Rational::from(&self.coeffs[i] + &other.coeffs[i]))
            .collect();
        Ok(Self::from_coeffs(self.variable, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| Rational::from(&self.coeffs[i] - &other.coeffs[i]))
            .collect();
        Ok(Self::from_coeffs(self.variable, coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.variable, self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.variable, self.coeffs.iter().map(|c| Rational::from(c * k)).collect())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_var(other)?;
        let n = self.order().min(other.order());
        Ok(Self::from_coeffs(self.variable, cauchy(&self.coeffs, &other.coeffs, n)))
    }

    /// Multiplicative inverse of a unit series.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        if !self.is_unit() {
            return Err(SeriesError::NotAUnit);
        }
        let n = self.order();
        let inv0 = Rational::from(self.coeffs[0].recip_ref());
        let mut r: Vec<Rational> = Vec::with_capacity(n + 1);
        r.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::new();
            for j in 1..=k {
                if self.coeffs[j] != 0 {
                    acc += Rational::from(&self.coeffs[j] * &r[k - j]);
                }
            }
            acc *= &inv0;
            r.push(-acc);
        }
        Ok(Self::from_coeffs(self.variable, r))
    }

    /// `self(inner)`: substitutes `inner` for this series' variable by Horner
    /// evaluation. The result carries `inner`'s variable and the smaller of
    /// the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.has_positive_valuation() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n)?;
        let mut acc = Self::zero(inner.variable, n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `exp(self)` for a series with zero constant term, via
    /// `k e_k = sum_{j=1..k} j a_j e_{k-j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.has_positive_valuation() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::from(1));
        for k in 1..=n {
            let mut acc = Rational::new();
            for j in 1..=k {
                if self.coeffs[j] != 0 {
                    acc += Rational::from(&self.coeffs[j] * &e[k - j]) * j as u64;
                }
            }
            acc /= k as u64;
            e.push(acc);
        }
        Ok(Self::from_coeffs(self.variable, e))
    }

    /// Exact division by `v^power`: requires every coefficient below `v^power`
    /// to vanish. The result has order `order - power`.
    pub fn divide_by_power(&self, power: usize) -> Result<Self, SeriesError> {
        if power > self.order() {
            return Err(SeriesError::OrderTooLarge { requested: power, known: self.order() });
        }
        if let Some(exponent) = self.coeffs[..power].iter().position(|c| *c != 0) {
            return Err(SeriesError::NotDivisible { var: self.variable, power, exponent });
        }
        Ok(Self::from_coeffs(self.variable, self.coeffs[power..].to_vec()))
    }
}

fn cauchy(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); n + 1];
    for (i, ai) in a[..=n].iter().enumerate() {
        if *ai == 0 {
            continue;
        }
        for (j, bj) in b[..=n - i].iter().enumerate() {
            if *bj != 0 {
                out[i + j] += Rational::from(ai * bj);
            }
        }
    }
    out
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.variable)?,
                _ => write!(f, "({c}){}^{i}", self.variable)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.variable, self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    variable: Variable,
    order: usize,
    #[serde(with = "serde_ratio_vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr { variable: self.variable, order: self.order(), coeffs: self.coeffs.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        Ok(Self::from_coeffs(repr.variable, repr.coeffs))
    }
}

/// `(1 - t)^(-b) = sum_j C(b-1+j, j) t^j` to order `order`.
pub fn binomial_series(b: u32, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|j| {
            let top = Integer::from(b) - 1u32 + j as u64;
            Rational::from(top.binomial(j as u32))
        })
        .collect();
    TruncatedSeries::from_coeffs(Variable::T, coeffs)
}

/// The nome `q = (1 - t)/(1 + t)` as a t-series: `1 - 2t + 2t^2 - ...`.
pub fn mobius_q(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::from(1)];
    coeffs.extend((1..=order).map(|k| Rational::from(if k % 2 == 1 { -2 } else { 2 })));
    TruncatedSeries::from_coeffs(Variable::T, coeffs)
}

/// `θ(t) = log((1 + t)/(1 - t)) = 2(t + t^3/3 + t^5/5 + ...)`.
pub fn theta_of_t(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| if k % 2 == 1 { Rational::from((2, k as u64)) } else { Rational::new() })
        .collect();
    TruncatedSeries::from_coeffs(Variable::T, coeffs)
}

/// The mixed sum `sum_{n<=m} alpha_n C(b-1+m-n, b-1)` for every `m` up to
/// `alpha`'s order.
pub fn convolve_with_binomial(alpha: &TruncatedSeries, b: u32) -> TruncatedSeries {
    let beta = binomial_series(b, alpha.order()).retag(alpha.variable());
    alpha.mul(&beta).expect("binomial series retagged to match")
}
