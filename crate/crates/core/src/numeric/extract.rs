use rug::{Float, Rational};

use super::{check_precision, eval_f, float_from_rational, NumericError};

/// Grid and precision settings for [`extract_coeffs`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExtractOptions {
    /// Largest grid point.
    pub t0: Rational,
    /// Geometric ratio between consecutive grid points, in `(0, 1)`.
    pub ratio: Rational,
    /// Number of grid points.
    pub depth: usize,
    pub precision: u32,
    /// Largest acceptable error estimate for any extracted coefficient.
    pub tolerance: f64,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            t0: Rational::from((1, 16)),
            ratio: Rational::from((1, 2)),
            depth: 24,
            precision: 512,
            tolerance: 1e-12,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub coeffs: Vec<Float>,
    pub error_estimates: Vec<Float>,
    pub precision: u32,
}

/// Neville extrapolation of the samples `(xs[j], ys[j])` to `x = 0`.
///
/// Returns the value from all points and an error estimate: the larger
/// deviation from the two interpolants that each drop one end point.
pub fn richardson_at_zero(xs: &[Float], ys: &[Float], prec: u32) -> (Float, Float) {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "need at least two samples");
    let m = xs.len();
    // table[i] holds P_{i..i+level}(0)
    let mut table: Vec<Float> = ys.to_vec();
    let mut prev_level: Vec<Float> = Vec::new();
    for level in 1..m {
        prev_level = table.clone();
        for i in 0..m - level {
            let xi = &xs[i];
            let xj = &xs[i + level];
            let num = Float::with_val(prec, xi * &table[i + 1]) - Float::with_val(prec, xj * &table[i]);
            let den = Float::with_val(prec, xi - xj);
            table[i] = Float::with_val(prec, num / den);
        }
    }
    let best = table[0].clone();
    let left = Float::with_val(prec, &best - &prev_level[0]).abs();
    let right = Float::with_val(prec, &best - &prev_level[1]).abs();
    let est = if left > right { left } else { right };
    (best, est)
}

/// Estimates `a_0..a_m` of `f_b(t) ~ sum a_n t^n` by iterated subtraction:
/// `a_n` is the extrapolated limit at `t = 0` of
/// `(f(t) - sum_{k<n} a_k t^k) / t^n` on the grid `t0 · ratio^j`.
pub fn extract_coeffs(b: f64, m: usize, opts: &ExtractOptions) -> Result<Extraction, NumericError> {
    let prec = opts.precision;
    check_precision(prec)?;
    if !(opts.t0 > 0 && opts.t0 < 1) {
        return Err(NumericError::InvalidGrid(format!("t0 = {} must lie in (0, 1)", opts.t0)));
    }
    if !(opts.ratio > 0 && opts.ratio < 1) {
        return Err(NumericError::InvalidGrid(format!("ratio = {} must lie in (0, 1)", opts.ratio)));
    }
    if opts.depth < 2 {
        return Err(NumericError::InvalidGrid(format!("depth {} is below 2", opts.depth)));
    }

    let mut t = opts.t0.clone();
    let mut grid = Vec::with_capacity(opts.depth);
    for _ in 0..opts.depth {
        grid.push(float_from_rational(&t, prec));
        t *= &opts.ratio;
    }
    let values = grid
        .iter()
        .map(|t| eval_f(b, t, prec))
        .collect::<Result<Vec<_>, _>>()?;

    let mut coeffs: Vec<Float> = Vec::with_capacity(m + 1);
    let mut estimates = Vec::with_capacity(m + 1);
    // residual[j] = (f(t_j) - sum_{k<n} a_k t_j^k) / t_j^n
    let mut residual = values;
    for n in 0..=m {
        let (a_n, est) = richardson_at_zero(&grid, &residual, prec);
        let est_f64 = est.to_f64();
        if !(est_f64 <= opts.tolerance) {
            return Err(NumericError::ExtractionDiverged { n, estimate: est_f64, tolerance: opts.tolerance });
        }
        for (r, tj) in residual.iter_mut().zip(&grid) {
            *r -= &a_n;
            *r /= tj;
        }
        coeffs.push(a_n);
        estimates.push(est);
    }
    Ok(Extraction { coeffs, error_estimates: estimates, precision: prec })
}
