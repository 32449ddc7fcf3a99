//! Small numerical helpers: composite Simpson on (possibly uneven) samples and log-log fits.

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// Composite Simpson over sample points `t` (strictly increasing). Panels of two intervals use
/// the non-uniform Simpson weights; a leftover last interval integrates the quadratic through
/// the last three points exactly.
pub fn simpson<S: Scalar>(t: &[S], f: &[S]) -> Result<S> {
    if t.len() != f.len() {
        return Err(GzkError::SizeMismatch { expected: t.len(), got: f.len() });
    }
    if t.len() < 3 {
        return Err(GzkError::TooFewSnapshots { needed: 3, found: t.len() });
    }
    let two = S::lit(2.0);
    let six = S::lit(6.0);
    let n = t.len() - 1; // intervals
    let mut acc = S::zero();
    let mut i = 0;
    while i + 2 <= n {
        let h0 = t[i + 1] - t[i];
        let h1 = t[i + 2] - t[i + 1];
        let hs = h0 + h1;
        acc = acc
            + hs / six
                * ((two - h1 / h0) * f[i] + hs * hs / (h0 * h1) * f[i + 1] + (two - h0 / h1) * f[i + 2]);
        i += 2;
    }
    if i < n {
        acc = acc + quad_last(&t[n - 2..], &f[n - 2..]);
    }
    Ok(acc)
}

// ∫_{t1}^{t2} of the interpolating quadratic through three points (2-point Gauss is exact here).
fn quad_last<S: Scalar>(t: &[S], f: &[S]) -> S {
    let (a, b) = (t[1], t[2]);
    let half = (b - a) / S::lit(2.0);
    let mid = (a + b) / S::lit(2.0);
    let g = S::one() / S::lit(3.0).sqrt();
    let lag = |x: S| {
        let l0 = (x - t[1]) * (x - t[2]) / ((t[0] - t[1]) * (t[0] - t[2]));
        let l1 = (x - t[0]) * (x - t[2]) / ((t[1] - t[0]) * (t[1] - t[2]));
        let l2 = (x - t[0]) * (x - t[1]) / ((t[2] - t[0]) * (t[2] - t[1]));
        l0 * f[0] + l1 * f[1] + l2 * f[2]
    };
    half * (lag(mid - half * g) + lag(mid + half * g))
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// standard error of the slope (0 for two points)
    pub slope_stderr: f64,
}

/// Ordinary least squares y = intercept + slope·x.
pub fn fit_line(x: &[f64], y: &[f64]) -> Option<LineFit> {
    let n = x.len();
    if n < 2 || n != y.len() {
        return None;
    }
    let nf = n as f64;
    let mx = x.iter().sum::<f64>() / nf;
    let my = y.iter().sum::<f64>() / nf;
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let slope_stderr = if n > 2 {
        let rss: f64 = x.iter().zip(y).map(|(a, b)| (b - intercept - slope * a).powi(2)).sum();
        (rss / (nf - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Some(LineFit { slope, intercept, slope_stderr })
}

/// Power-law fit value ~ c·x^β done in log-log; non-positive samples are skipped.
pub fn fit_power_law(x: &[f64], y: &[f64]) -> Option<LineFit> {
    let (lx, ly): (Vec<f64>, Vec<f64>) = x
        .iter()
        .zip(y)
        .filter(|(a, b)| **a > 0.0 && **b > 0.0)
        .map(|(a, b)| (a.ln(), b.ln()))
        .unzip();
    fit_line(&lx, &ly)
}
