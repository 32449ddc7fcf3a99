use serde::Serialize;

use crate::error::{GzkError, Result};
use crate::numerics::fit_power_law;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GronwallReport {
    pub k1: f64,
    pub eps: f64,
    pub a0: f64,
    pub m: usize,
    pub d: f64,
    /// minimal K₂ with a_j ≤ K₂(1+j)^d(1+a₀) for j ≤ M
    pub k2: f64,
    /// same quantity with the range cut to M/10
    pub k2_tenth: f64,
    /// K₂(M) equals K₂(M/10) to 1e−9 relative
    pub stabilized: bool,
    /// log-log slope of a_j over j ∈ [M/10, M]
    pub empirical_exponent: f64,
    /// (M', K₂(M')) at decades of M'
    pub k2_history: Vec<(usize, f64)>,
}

/// Iterates the extremal recursion a_{j+1} = a_j + K₁(1 + a_j^{1−ε}) and measures the
/// smallest K₂ in a_j ≤ K₂(1+j)^d(1+a₀).
pub fn gronwall_check(k1: f64, eps: f64, a0: f64, m: usize, d: f64) -> Result<GronwallReport> {
    if !(k1 > 0.0) || !(eps > 0.0 && eps < 1.0) || !(a0 >= 0.0) || m < 10 {
        return Err(GzkError::InvalidParameter("need K1 > 0, 0 < eps < 1, a0 >= 0, M >= 10".into()));
    }
    let mut a = a0;
    let mut k2 = 0.0f64;
    let mut k2_tenth = 0.0;
    let mut hist = Vec::new();
    let mut next_decade = 10usize;
    let lo = m / 10;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut next_sample = lo.max(1) as f64;
    for j in 0..=m {
        if !a.is_finite() {
            return Err(GzkError::Overflow(j));
        }
        k2 = k2.max(a / ((1.0 + j as f64).powf(d) * (1.0 + a0)));
        if j == lo {
            k2_tenth = k2;
        }
        if j == next_decade || j == m {
            hist.push((j, k2));
            next_decade *= 10;
        }
        if j >= lo && j as f64 >= next_sample {
            xs.push(j as f64);
            ys.push(a);
            next_sample *= 1.05;
        }
        a += k1 * (1.0 + a.powf(1.0 - eps));
    }
    let fit = fit_power_law(&xs, &ys).ok_or_else(|| GzkError::InvalidParameter("degenerate fit".into()))?;
    Ok(GronwallReport {
        k1,
        eps,
        a0,
        m,
        d,
        k2,
        k2_tenth,
        stabilized: (k2 - k2_tenth).abs() <= 1e-9 * k2,
        empirical_exponent: fit.slope,
        k2_history: hist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_case_holds() {
        let r = gronwall_check(1.0, 0.5, 0.0, 10_000, 2.1).unwrap();
        assert!(r.stabilized && r.k2.is_finite());
        assert!(r.empirical_exponent < 2.0 && r.empirical_exponent > 1.8);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gronwall_check(1.0, 1.5, 0.0, 100, 2.0).is_err());
    }
}
