use std::io::Write;

use super::equation::EquationSpec;
use super::forcing::Forcing;
use super::stepper::{check_guard, Stepper, StepperConfig};
use crate::error::{GzkError, Result};
use crate::imethod::{modified_energy, IMultiplierSpec};
use crate::invariants::{energy, mass};
use crate::scalar::Scalar;
use crate::spectral::{sobolev_norm, to_spectral, RealField, SpectralField};

/// Which extra diagnostics to record at every sample.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiagnosticsSpec<S> {
    /// orders s of ‖u‖_{H^s}
    pub sobolev_orders: Vec<S>,
    /// multipliers whose modified energy E(I_N u) is recorded
    pub multipliers: Vec<IMultiplierSpec<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagnosticRecord<S> {
    pub t: S,
    pub mass: S,
    pub energy: S,
    pub sobolev: Vec<S>,
    pub modified_energy: Vec<S>,
}

/// Sampled solution with diagnostics.
#[derive(Clone, Debug)]
pub struct Trajectory<S: Scalar> {
    pub eq: EquationSpec,
    /// effective time step (T divided into an integer number of steps)
    pub dt: S,
    pub times: Vec<S>,
    pub snapshots: Vec<SpectralField<S>>,
    pub diagnostics: Vec<DiagnosticRecord<S>>,
    pub diag_spec: DiagnosticsSpec<S>,
}

impl<S: Scalar> Trajectory<S> {
    pub fn len(&self) -> usize {
        self.times.len()
    }
    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Index of a sampled time (relative tolerance 1e−9).
    pub fn time_index(&self, t: S) -> Result<usize> {
        let tol = S::lit(1e-9) * S::one().max(t.mag());
        self.times
            .iter()
            .position(|s| (*s - t).mag() <= tol)
            .ok_or(GzkError::UnsampledTime(t.as_f64()))
    }

    /// Inclusive index range between two sampled times.
    pub fn window(&self, t0: S, t1: S) -> Result<(usize, usize)> {
        let (a, b) = (self.time_index(t0)?, self.time_index(t1)?);
        Ok((a.min(b), a.max(b)))
    }

    pub fn final_state(&self) -> &SpectralField<S> {
        self.snapshots.last().expect("trajectory has at least the initial sample")
    }

    /// One CSV row per sample, 17 significant digits.
    pub fn write_csv(&self, w: &mut impl Write) -> std::io::Result<()> {
        let mut head = vec!["t".to_string(), "mass".into(), "energy".into()];
        head.extend(self.diag_spec.sobolev_orders.iter().map(|s| format!("hs_{s}")));
        head.extend(self.diag_spec.multipliers.iter().map(|m| format!("modified_energy_N{}", m.n)));
        writeln!(w, "{}", head.join(","))?;
        for d in &self.diagnostics {
            let mut row = vec![fmt17(d.t), fmt17(d.mass), fmt17(d.energy)];
            row.extend(d.sobolev.iter().map(|v| fmt17(*v)));
            row.extend(d.modified_energy.iter().map(|v| fmt17(*v)));
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Full-precision decimal.
pub fn fmt17<S: Scalar>(v: S) -> String {
    format!("{:.16e}", v.as_f64())
}

fn record<S: Scalar>(u: &SpectralField<S>, t: S, eq: &EquationSpec, d: &DiagnosticsSpec<S>) -> Result<DiagnosticRecord<S>> {
    let rec = DiagnosticRecord {
        t,
        mass: mass(u),
        energy: energy(u, eq)?,
        sobolev: d.sobolev_orders.iter().map(|s| sobolev_norm(u, *s, false)).collect::<Result<_>>()?,
        modified_energy: d.multipliers.iter().map(|m| modified_energy(u, m, eq)).collect::<Result<_>>()?,
    };
    let huge = S::max_value().sqrt();
    let bad = |v: S| !v.is_finite() || v.mag() > huge;
    if bad(rec.mass) || bad(rec.energy) || rec.sobolev.iter().any(|v| bad(*v)) {
        return Err(GzkError::BlowUp { t: t.as_f64() });
    }
    Ok(rec)
}

/// Evolve real initial data to `t_final`, recording mass and energy.
pub fn simulate<S: Scalar>(
    u0: &RealField<S>,
    eq: &EquationSpec,
    cfg: &StepperConfig<S>,
    t_final: S,
    forcing: Option<&dyn Forcing<S>>,
) -> Result<Trajectory<S>> {
    simulate_with(&to_spectral(u0), eq, cfg, t_final, forcing, &DiagnosticsSpec::default())
}

/// Evolve spectral data (projected to the band first). dt is shrunk so that an integer
/// number of steps lands exactly on `t_final`; samples are taken every `sample_every` steps
/// plus the final time.
pub fn simulate_with<S: Scalar>(
    u0: &SpectralField<S>,
    eq: &EquationSpec,
    cfg: &StepperConfig<S>,
    t_final: S,
    forcing: Option<&dyn Forcing<S>>,
    diag: &DiagnosticsSpec<S>,
) -> Result<Trajectory<S>> {
    if !(t_final > S::zero()) {
        return Err(GzkError::InvalidParameter(format!("T must be positive (got {t_final})")));
    }
    if !(cfg.dt > S::zero()) || cfg.sample_every == 0 {
        return Err(GzkError::InvalidParameter("dt > 0 and sample_every >= 1 required".into()));
    }
    u0.grid().require_pad(eq.degree())?;
    let nsteps = (t_final / cfg.dt - S::lit(1e-9)).ceil().to_usize().unwrap_or(1).max(1);
    let dt = t_final / S::of(nsteps);
    let cfg = StepperConfig { dt, ..*cfg };
    let stepper = Stepper::new(u0.grid(), eq, dt)?;

    let mut u = u0.clone().project_band();
    check_guard(&u, eq, &cfg, S::zero())?;
    let mut traj = Trajectory {
        eq: *eq,
        dt,
        times: vec![S::zero()],
        diagnostics: vec![record(&u, S::zero(), eq, diag)?],
        snapshots: vec![u.clone()],
        diag_spec: diag.clone(),
    };
    for n in 0..nsteps {
        let t = S::of(n) * dt;
        u = stepper.step(&u, t, forcing)?;
        let done = n + 1 == nsteps;
        if (n + 1) % cfg.sample_every == 0 || done {
            let tn = if done { t_final } else { S::of(n + 1) * dt };
            traj.diagnostics.push(record(&u, tn, eq, diag)?);
            traj.times.push(tn);
            traj.snapshots.push(u.clone());
            if !done {
                check_guard(&u, eq, &cfg, tn)?;
            }
        }
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Sign;
    use crate::spectral::make_grid;

    #[test]
    fn zero_data_zero_diagnostics() {
        let g = make_grid::<f64>(10.0, 1.0, 16, 8, 1.5).unwrap();
        let eq = EquationSpec::new(1, Sign::Plus).unwrap();
        let diag = DiagnosticsSpec { sobolev_orders: vec![1.0, 2.0], multipliers: vec![] };
        let tr = simulate_with(&SpectralField::zeros(&g), &eq, &StepperConfig::new(0.1).sample_every(3), 1.0, None, &diag)
            .unwrap();
        assert_eq!(tr.times.len(), 5); // 0, 0.3, 0.6, 0.9, 1.0
        assert_eq!(*tr.times.last().unwrap(), 1.0);
        for d in &tr.diagnostics {
            assert_eq!((d.mass, d.energy), (0.0, 0.0));
            assert!(d.sobolev.iter().all(|v| *v == 0.0));
        }
        let mut csv = Vec::new();
        tr.write_csv(&mut csv).unwrap();
        let s = String::from_utf8(csv).unwrap();
        assert!(s.starts_with("t,mass,energy,hs_1,hs_2\n"));
        assert_eq!(s.lines().count(), 6);
    }

    #[test]
    fn unsampled_time_is_error() {
        let g = make_grid::<f64>(10.0, 1.0, 8, 8, 1.5).unwrap();
        let eq = EquationSpec::new(1, Sign::Plus).unwrap();
        let tr = simulate(&RealField::zeros(&g), &eq, &StepperConfig::new(0.5), 1.0, None).unwrap();
        assert!(tr.time_index(0.5).is_ok());
        assert!(matches!(tr.time_index(0.25), Err(GzkError::UnsampledTime(_))));
    }
}
