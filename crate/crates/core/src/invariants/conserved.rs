use crate::dynamics::EquationSpec;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::spectral::{dealiased_power_spectral, grad_sq, to_spectral, RealField, SpectralField};

/// ∫u² (Parseval).
pub fn mass<S: Scalar>(u: &SpectralField<S>) -> S {
    u.l2_sq()
}

pub fn mass_of<S: Scalar>(u: &RealField<S>) -> S {
    mass(&to_spectral(u))
}

/// ∫u^{p} for integer p ≥ 2, computed as ⟨u, P(u^{p−1})⟩. For band-limited u this is exact once
/// the grid is padded for a degree-(p−1) product, since the pairing only sees the band of u^{p−1}.
pub fn power_integral<S: Scalar>(u: &SpectralField<S>, p: usize) -> Result<S> {
    if p < 2 {
        return Ok(if p == 1 { u.mean() * u.grid().area() } else { u.grid().area() });
    }
    let w = dealiased_power_spectral(u, p - 1)?;
    Ok(u.clone().project_band().inner(&w))
}

/// ½∫|∇u|²
pub fn quadratic_energy<S: Scalar>(u: &SpectralField<S>) -> S {
    grad_sq(u) / S::lit(2.0)
}

/// E±[u] = ½∫|∇u|² ± (1/(k+2))∫u^{k+2}; needs padding for degree k+1.
pub fn energy<S: Scalar>(u: &SpectralField<S>, eq: &EquationSpec) -> Result<S> {
    let k2 = eq.k as usize + 2;
    let pot = power_integral(u, k2)?;
    Ok(quadratic_energy(u) + eq.sign.value::<S>() * pot / S::of(k2))
}

pub fn energy_of<S: Scalar>(u: &RealField<S>, eq: &EquationSpec) -> Result<S> {
    energy(&to_spectral(u), eq)
}
