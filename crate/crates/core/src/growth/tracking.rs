use serde::Serialize;

use crate::dynamics::Trajectory;
use crate::error::Result;
use crate::imethod::alpha_growth;
use crate::numerics::{fit_power_law, LineFit};
use crate::scalar::Scalar;
use crate::spectral::sobolev_norm;

/// fit band = this many standard errors of the fitted slope
pub const FIT_BAND_SIGMAS: f64 = 3.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormSeries {
    pub s: f64,
    pub times: Vec<f64>,
    pub norms: Vec<f64>,
    /// ‖u(t)‖_{H^s} ≈ c(1+t)^β; None when fewer than two positive samples
    pub fit: Option<LineFit>,
    pub fit_band: f64,
    /// α(k,s) + 0.01; only defined for s > 1
    pub alpha_reference: Option<f64>,
    /// β ≤ α(k,s) + 0.01 + band (vacuous when there is no fit or no reference)
    pub within_reference: bool,
    pub max_relative_change: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub k: u32,
    pub nonlinear: bool,
    pub series: Vec<NormSeries>,
}

/// ‖u(t)‖_{H^s} along the stored samples, with a log-log fit against 1+t.
pub fn track_norm_growth<S: Scalar>(traj: &Trajectory<S>, s_list: &[f64]) -> Result<GrowthReport> {
    let times: Vec<f64> = traj.times.iter().map(|t| t.as_f64()).collect();
    let shifted: Vec<f64> = times.iter().map(|t| 1.0 + t).collect();
    let mut series = Vec::with_capacity(s_list.len());
    for &s in s_list {
        let norms = traj
            .snapshots
            .iter()
            .map(|u| sobolev_norm(u, S::lit(s), false).map(|v| v.as_f64()))
            .collect::<Result<Vec<_>>>()?;
        let fit = fit_power_law(&shifted, &norms);
        let fit_band = fit.map_or(0.0, |f| FIT_BAND_SIGMAS * f.slope_stderr);
        let alpha_reference = (s > 1.0).then(|| alpha_growth(traj.eq.k, s) + 0.01);
        let within_reference = match (fit, alpha_reference) {
            (Some(f), Some(a)) => f.slope <= a + fit_band,
            _ => true,
        };
        let n0 = norms.first().copied().unwrap_or(0.0);
        let max_relative_change = if n0 > 0.0 {
            norms.iter().map(|n| (n - n0).abs() / n0).fold(0.0, f64::max)
        } else {
            0.0
        };
        series.push(NormSeries { s, times: times.clone(), norms, fit, fit_band, alpha_reference, within_reference, max_relative_change });
    }
    Ok(GrowthReport { k: traj.eq.k, nonlinear: traj.eq.nonlinear, series })
}

impl GrowthReport {
    /// CSV with columns t, hs_<s>...
    pub fn write_csv(&self, w: &mut impl std::io::Write) -> std::io::Result<()> {
        let mut head = vec!["t".to_string()];
        head.extend(self.series.iter().map(|s| format!("hs_{}", s.s)));
        writeln!(w, "{}", head.join(","))?;
        let n = self.series.first().map_or(0, |s| s.times.len());
        for i in 0..n {
            let mut row = vec![format!("{:.16e}", self.series[0].times[i])];
            row.extend(self.series.iter().map(|s| format!("{:.16e}", s.norms[i])));
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}
