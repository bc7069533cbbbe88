//! Power series in `x` whose coefficients are polynomials in `θ`.

use rug::Rational;

/// Dense polynomial in `θ`; `coeffs[j]` multiplies `θ^j`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ThetaPoly {
    coeffs: Vec<Rational>,
}

impl ThetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `θ` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != 0)
    }

    /// `[θ^j]`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| Rational::from(c * k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b != 0 {
                    out[i + j] += Rational::from(a * b);
                }
            }
        }
        Self::from_coeffs(out)
    }
}

/// `c_0 + c_1 x + ... + c_K x^K` with `c_k` a polynomial in `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPolySeries {
    entries: Vec<ThetaPoly>,
}

impl ThetaPolySeries {
    pub fn from_entries(entries: Vec<ThetaPoly>) -> Self {
        assert!(!entries.is_empty(), "series needs at least c_0");
        Self { entries }
    }

    pub fn x_order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, k: usize) -> &ThetaPoly {
        &self.entries[k]
    }

    pub fn entries(&self) -> &[ThetaPoly] {
        &self.entries
    }

    /// `exp(self)` for a series with `c_0 = 0`, by `k e_k = sum_j j a_j e_{k-j}`.
    pub fn exp(&self) -> Option<Self> {
        if !self.entries[0].is_zero() {
            return None;
        }
        let n = self.x_order();
        let mut e = Vec::with_capacity(n + 1);
        e.push(ThetaPoly::constant(Rational::from(1)));
        for k in 1..=n {
            let mut acc = ThetaPoly::zero();
            for j in 1..=k {
                if self.entries[j].is_zero() {
                    continue;
                }
                let term = self.entries[j].mul(&e[k - j]).scale(&Rational::from(j as u64));
                acc = acc.add(&term);
            }
            e.push(acc.scale(&Rational::from((1, k as u64))));
        }
        Some(Self::from_entries(e))
    }
}
