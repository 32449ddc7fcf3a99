use num_complex::Complex;
use rustfft::FftDirection;

use super::field::{RealField, SpectralField};
use super::grid::GridSpec;
use super::transform::{embed, extract, fft2, from_spectral_complex, to_spectral};
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// Real samples of a band-limited field on the padded mx×my grid.
pub(crate) fn padded_samples<S: Scalar>(f: &SpectralField<S>, mx: usize, my: usize) -> Vec<S> {
    let mut data = embed(f, mx, my);
    fft2(&mut data, mx, my, FftDirection::Inverse);
    let w = S::one() / f.grid().area();
    data.into_iter().map(|c| c.re * w).collect()
}

/// Forward transform of padded samples, truncated back to the grid band.
pub(crate) fn from_padded_samples<S: Scalar>(g: &GridSpec<S>, v: &[S], mx: usize, my: usize) -> SpectralField<S> {
    let mut data: Vec<Complex<S>> = v.iter().map(|x| Complex::new(*x, S::zero())).collect();
    fft2(&mut data, mx, my, FftDirection::Forward);
    let w = g.lx() / S::of(mx) * g.ly() / S::of(my);
    for c in &mut data {
        *c = c.scale(w);
    }
    SpectralField::from_parts(g.clone(), extract(g, &data, mx, my))
}

/// Padded physical-space workspace for chaining pointwise operations.
pub(crate) struct Padded<'g, S> {
    pub grid: &'g GridSpec<S>,
    pub mx: usize,
    pub my: usize,
}

impl<'g, S: Scalar> Padded<'g, S> {
    pub fn new(grid: &'g GridSpec<S>, degree: usize) -> Result<Self> {
        grid.require_pad(degree)?;
        let (mx, my) = grid.padded_dims();
        Ok(Self { grid, mx, my })
    }
    pub fn to_phys(&self, f: &SpectralField<S>) -> Vec<S> {
        padded_samples(f, self.mx, self.my)
    }
    pub fn to_spec(&self, v: &[S]) -> SpectralField<S> {
        from_padded_samples(self.grid, v, self.mx, self.my)
    }
}

/// Dealiased product of band-limited factors (Nyquist content of the inputs is ignored,
/// the output band excludes Nyquist).
pub fn dealiased_product<S: Scalar>(factors: &[&SpectralField<S>]) -> Result<SpectralField<S>> {
    let first = factors
        .first()
        .ok_or_else(|| GzkError::InvalidParameter("empty product".into()))?;
    let g = first.grid();
    for f in factors {
        g.check_same(f.grid())?;
    }
    let pad = Padded::new(g, factors.len())?;
    let mut acc = pad.to_phys(first);
    for f in &factors[1..] {
        for (a, b) in acc.iter_mut().zip(pad.to_phys(f)) {
            *a = *a * b;
        }
    }
    Ok(pad.to_spec(&acc))
}

/// Spectral u^p (p ≥ 1) computed on the padded grid.
pub fn dealiased_power_spectral<S: Scalar>(u: &SpectralField<S>, p: usize) -> Result<SpectralField<S>> {
    if p == 0 {
        return Err(GzkError::InvalidParameter("power must be >= 1".into()));
    }
    let pad = Padded::new(u.grid(), p)?;
    let v: Vec<S> = pad.to_phys(u).into_iter().map(|x| x.powi(p as i32)).collect();
    Ok(pad.to_spec(&v))
}

/// u^p for a real field; p = 1 returns the input untouched.
pub fn dealiased_power<S: Scalar>(u: &RealField<S>, p: usize) -> Result<RealField<S>> {
    if p == 1 {
        return Ok(u.clone());
    }
    let w = dealiased_power_spectral(&to_spectral(u), p)?;
    let v = from_spectral_complex(&w).into_iter().map(|c| c.re).collect();
    RealField::new(u.grid().clone(), v)
}
