use rayon::prelude::*;
use serde::Serialize;

use super::energy::increment_direct;
use super::multiplier::IMultiplierSpec;
use crate::dynamics::{simulate_with, DiagnosticsSpec, EquationSpec, StepperConfig};
use crate::error::{GzkError, Result};
use crate::numerics::fit_power_law;
use crate::scalar::Scalar;
use crate::spectral::SpectralField;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayPoint {
    pub n: f64,
    pub increment: f64,
    /// above the noise floor and N inside the grid's band
    pub resolved: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayReport {
    pub s: f64,
    pub horizon: f64,
    pub noise_floor: f64,
    pub points: Vec<DecayPoint>,
    /// fitted log-log slope over resolved points (None when inconclusive)
    pub slope: Option<f64>,
    /// two-sigma band of the slope
    pub slope_band: Option<f64>,
    /// increments non-increasing over the resolved range (5% slack)
    pub monotone: bool,
    pub inconclusive: bool,
}

/// One run from fixed data to `horizon`, then |E(I_N u)(T) − E(I_N u)(0)| for each N.
/// The noise floor is ten times the drift of the unmodified energy (plus round-off).
pub fn decay_sweep<S: Scalar>(
    u0: &SpectralField<S>,
    eq: &EquationSpec,
    s: S,
    n_list: &[S],
    cfg: &StepperConfig<S>,
    horizon: S,
) -> Result<DecayReport> {
    if n_list.len() < 4 {
        return Err(GzkError::InvalidParameter("decay sweep needs at least 4 values of N".into()));
    }
    let traj = simulate_with(u0, eq, cfg, horizon, None, &DiagnosticsSpec::default())?;
    let d0 = &traj.diagnostics[0];
    let d1 = traj.diagnostics.last().expect("non-empty");
    let drift = (d1.energy - d0.energy).mag().as_f64();
    let floor = 10.0 * drift + 1e-13 * d0.energy.mag().as_f64();
    let rmax = u0.grid().max_radius().as_f64();
    let points = n_list
        .par_iter()
        .map(|n| {
            let sp = IMultiplierSpec::new(*n, s)?;
            let inc = increment_direct(&traj, &sp, eq, S::zero(), horizon)?.mag().as_f64();
            Ok(DecayPoint { n: n.as_f64(), increment: inc, resolved: inc > floor && n.as_f64() < rmax })
        })
        .collect::<Result<Vec<_>>>()?;
    let (x, y): (Vec<f64>, Vec<f64>) = points.iter().filter(|p| p.resolved).map(|p| (p.n, p.increment)).unzip();
    let fit = if x.len() >= 3 { fit_power_law(&x, &y) } else { None };
    let monotone = y.windows(2).all(|w| w[1] <= w[0] * 1.05);
    Ok(DecayReport {
        s: s.as_f64(),
        horizon: horizon.as_f64(),
        noise_floor: floor,
        inconclusive: fit.is_none(),
        slope: fit.map(|f| f.slope),
        slope_band: fit.map(|f| 2.0 * f.slope_stderr),
        monotone,
        points,
    })
}
