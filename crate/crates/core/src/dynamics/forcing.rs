use num_complex::Complex;

use super::equation::EquationSpec;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::spectral::{dealiased_power_spectral, phase, SpectralField};

/// Additive source term F̂(t) in û_t = iφû + sign·iξ·(u^{k+1})^ + F̂.
pub trait Forcing<S: Scalar>: Sync {
    fn at(&self, t: S) -> SpectralField<S>;
}

impl<S: Scalar, F: Fn(S) -> SpectralField<S> + Sync> Forcing<S> for F {
    fn at(&self, t: S) -> SpectralField<S> {
        self(t)
    }
}

/// A prescribed space-time field u*(t) with known time derivative.
pub trait Target<S: Scalar>: Sync {
    fn value(&self, t: S) -> SpectralField<S>;
    fn time_derivative(&self, t: S) -> SpectralField<S>;
}

/// u*(t) = g(t)·profile
pub struct SeparableTarget<S: Scalar> {
    pub profile: SpectralField<S>,
    pub g: Box<dyn Fn(S) -> S + Send + Sync>,
    pub dg: Box<dyn Fn(S) -> S + Send + Sync>,
}

impl<S: Scalar> Target<S> for SeparableTarget<S> {
    fn value(&self, t: S) -> SpectralField<S> {
        self.profile.clone().scale((self.g)(t))
    }
    fn time_derivative(&self, t: S) -> SpectralField<S> {
        self.profile.clone().scale((self.dg)(t))
    }
}

/// Forcing that makes `target` an exact solution: F = ∂ₜu* + ∂ₓΔu* ∓ ∂ₓ(u*^{k+1}).
pub struct ManufacturedForcing<S: Scalar, T: Target<S>> {
    target: T,
    eq: EquationSpec,
    _s: std::marker::PhantomData<S>,
}

pub fn manufactured_forcing<S: Scalar, T: Target<S>>(
    target: T,
    eq: EquationSpec,
) -> Result<ManufacturedForcing<S, T>> {
    target.value(S::zero()).grid().require_pad(eq.degree())?;
    Ok(ManufacturedForcing { target, eq, _s: std::marker::PhantomData })
}

impl<S: Scalar, T: Target<S>> ManufacturedForcing<S, T> {
    pub fn target(&self) -> &T {
        &self.target
    }
}

impl<S: Scalar, T: Target<S>> Forcing<S> for ManufacturedForcing<S, T> {
    fn at(&self, t: S) -> SpectralField<S> {
        let u = self.target.value(t).project_band();
        let du = self.target.time_derivative(t).project_band();
        let lin = u.clone().map_modes(|xi, q, c| c * Complex::new(S::zero(), -phase(xi, q)));
        let mut f = du.add(&lin);
        if self.eq.nonlinear {
            let p = dealiased_power_spectral(&u, self.eq.degree()).expect("padding checked at construction");
            let sg = self.eq.sign.value::<S>();
            let nl = p.map_modes(|xi, _, c| c * Complex::new(S::zero(), -sg * xi));
            f = f.add(&nl);
        }
        f
    }
}
