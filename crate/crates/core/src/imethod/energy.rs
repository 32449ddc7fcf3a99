use super::multiplier::{apply_in, IMultiplierSpec};
use crate::dynamics::{EquationSpec, Trajectory};
use crate::error::{GzkError, Result};
use crate::invariants::energy;
use crate::numerics::simpson;
use crate::scalar::Scalar;
use crate::spectral::{d_x, dealiased_power_spectral, laplacian, SpectralField};

/// E±[I_N u]
pub fn modified_energy<S: Scalar>(u: &SpectralField<S>, ispec: &IMultiplierSpec<S>, eq: &EquationSpec) -> Result<S> {
    energy(&apply_in(u, ispec), eq)
}

/// E±[I_N u](t1) − E±[I_N u](t0) from stored snapshots.
pub fn increment_direct<S: Scalar>(
    traj: &Trajectory<S>,
    ispec: &IMultiplierSpec<S>,
    eq: &EquationSpec,
    t0: S,
    t1: S,
) -> Result<S> {
    let (a, b) = (traj.time_index(t0)?, traj.time_index(t1)?);
    Ok(modified_energy(&traj.snapshots[b], ispec, eq)? - modified_energy(&traj.snapshots[a], ispec, eq)?)
}

/// Integrand of the increment identity at one time:
/// ∓∫ΔI u ∂ₓ(I(u^{k+1}) − (Iu)^{k+1}) + ∫I(u^{k+1}) ∂ₓ(I(u^{k+1}) − (Iu)^{k+1}).
pub fn commutator_integrand<S: Scalar>(u: &SpectralField<S>, ispec: &IMultiplierSpec<S>, eq: &EquationSpec) -> Result<S> {
    let p = eq.degree();
    let w = apply_in(u, ispec);
    let inl = apply_in(&dealiased_power_spectral(u, p)?, ispec);
    let c = inl.clone().sub(&dealiased_power_spectral(&w, p)?);
    let dc = d_x(&c);
    let sg = eq.sign.value::<S>();
    Ok(-sg * laplacian(&w).inner(&dc) + inl.inner(&dc))
}

/// Composite-Simpson time integral of `commutator_integrand` over the snapshots in [t0, t1].
/// Valid for the nonlinear flow (the identity uses the equation to eliminate u_t).
pub fn increment_commutator<S: Scalar>(
    traj: &Trajectory<S>,
    ispec: &IMultiplierSpec<S>,
    eq: &EquationSpec,
    t0: S,
    t1: S,
) -> Result<S> {
    if !eq.nonlinear {
        return Err(GzkError::InvalidParameter("the commutator identity assumes the nonlinear flow".into()));
    }
    let (a, b) = (traj.time_index(t0)?, traj.time_index(t1)?);
    if a == b {
        return Ok(S::zero());
    }
    let (lo, hi) = (a.min(b), a.max(b));
    if hi - lo + 1 < 3 {
        return Err(GzkError::TooFewSnapshots { needed: 3, found: hi - lo + 1 });
    }
    let vals = traj.snapshots[lo..=hi]
        .iter()
        .map(|u| commutator_integrand(u, ispec, eq))
        .collect::<Result<Vec<_>>>()?;
    let v = simpson(&traj.times[lo..=hi], &vals)?;
    Ok(if b < a { -v } else { v })
}
