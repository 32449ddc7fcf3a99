use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::equation::{nonlinear_term, EquationSpec};
use super::forcing::Forcing;
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{from_spectral, phase, GridSpec, SpectralField};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// integrating-factor (Lawson) RK4 around the exact free group
    #[default]
    Ifrk4,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepperConfig<S> {
    pub dt: S,
    pub scheme: Scheme,
    pub sample_every: usize,
    /// safety factor of the advective step guard
    pub c_safe: S,
}

impl<S: Scalar> StepperConfig<S> {
    pub fn new(dt: S) -> Self {
        Self { dt, scheme: Scheme::Ifrk4, sample_every: 1, c_safe: S::lit(0.5) }
    }
    pub fn sample_every(mut self, n: usize) -> Self {
        self.sample_every = n;
        self
    }
}

/// dt limit c_safe/((k+1)·max|u|·max|ξ|); infinite for the free flow or zero data.
pub fn stability_limit<S: Scalar>(u: &SpectralField<S>, eq: &EquationSpec, c_safe: S) -> S {
    if !eq.nonlinear {
        return S::infinity();
    }
    let umax = from_spectral(u).max_abs();
    let denom = S::of(eq.degree()) * umax * u.grid().max_abs_xi();
    if denom > S::zero() {
        c_safe / denom
    } else {
        S::infinity()
    }
}

pub(crate) fn check_guard<S: Scalar>(u: &SpectralField<S>, eq: &EquationSpec, cfg: &StepperConfig<S>, t: S) -> Result<()> {
    let lim = stability_limit(u, eq, cfg.c_safe);
    if cfg.dt.mag() > lim {
        return Err(GzkError::StabilityGuard { dt: cfg.dt.as_f64(), limit: lim.as_f64(), t: t.as_f64() });
    }
    Ok(())
}

/// Precomputed IFRK4 stepper for one grid, equation and dt (dt may be negative).
pub struct Stepper<S: Scalar> {
    grid: GridSpec<S>,
    eq: EquationSpec,
    dt: S,
    half: Vec<Complex<S>>,
    full: Vec<Complex<S>>,
}

impl<S: Scalar> Stepper<S> {
    pub fn new(grid: &GridSpec<S>, eq: &EquationSpec, dt: S) -> Result<Self> {
        if !dt.is_finite() || dt == S::zero() {
            return Err(GzkError::InvalidParameter(format!("dt must be finite and nonzero (got {dt})")));
        }
        if eq.nonlinear {
            grid.require_pad(eq.degree())?;
        }
        let ny = grid.ny();
        let mut half = vec![Complex::zero(); grid.len()];
        let mut full = vec![Complex::zero(); grid.len()];
        let h = dt / S::lit(2.0);
        for i in 0..grid.nx() {
            for j in 0..ny {
                let w = phase(grid.xi(i), grid.q(j));
                half[i * ny + j] = Complex::from_polar(S::one(), h * w);
                full[i * ny + j] = Complex::from_polar(S::one(), dt * w);
            }
        }
        Ok(Self { grid: grid.clone(), eq: *eq, dt, half, full })
    }

    pub fn dt(&self) -> S {
        self.dt
    }

    fn rhs(&self, u: &[Complex<S>], t: S, forcing: Option<&dyn Forcing<S>>) -> Vec<Complex<S>> {
        let f = SpectralField::from_parts(self.grid.clone(), u.to_vec());
        let mut out = nonlinear_term(&f, &self.eq).expect("padding checked at construction").into_coeffs();
        if let Some(fc) = forcing {
            let src = fc.at(t).project_band();
            for (o, s) in out.iter_mut().zip(src.coeffs()) {
                *o = *o + *s;
            }
        }
        out
    }

    /// One Lawson-RK4 step from time t. Input Nyquist content is discarded.
    pub fn step(&self, u: &SpectralField<S>, t: S, forcing: Option<&dyn Forcing<S>>) -> Result<SpectralField<S>> {
        self.grid.check_same(u.grid())?;
        let u0 = u.clone().project_band().into_coeffs();
        let dt = self.dt;
        let h = dt / S::lit(2.0);
        let (e, e2) = (&self.half, &self.full);
        let n = u0.len();

        let k1 = self.rhs(&u0, t, forcing);
        let a: Vec<_> = (0..n).map(|i| e[i] * (u0[i] + k1[i].scale(h))).collect();
        let k2 = self.rhs(&a, t + h, forcing);
        let b: Vec<_> = (0..n).map(|i| e[i] * u0[i] + k2[i].scale(h)).collect();
        let k3 = self.rhs(&b, t + h, forcing);
        let c: Vec<_> = (0..n).map(|i| e2[i] * u0[i] + (e[i] * k3[i]).scale(dt)).collect();
        let k4 = self.rhs(&c, t + dt, forcing);
        let sixth = dt / S::lit(6.0);
        let two = S::lit(2.0);
        let out: Vec<_> = (0..n)
            .map(|i| e2[i] * u0[i] + (e2[i] * k1[i] + (e[i] * (k2[i] + k3[i])).scale(two) + k4[i]).scale(sixth))
            .collect();
        if out.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(GzkError::BlowUp { t: (t + dt).as_f64() });
        }
        Ok(SpectralField::from_parts(self.grid.clone(), out).project_band())
    }
}

/// Single guarded step from t = 0 without forcing.
pub fn step<S: Scalar>(u: &SpectralField<S>, spec: &EquationSpec, cfg: &StepperConfig<S>) -> Result<SpectralField<S>> {
    check_guard(u, spec, cfg, S::zero())?;
    Stepper::new(u.grid(), spec, cfg.dt)?.step(u, S::zero(), None)
}
