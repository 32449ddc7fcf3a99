use serde::Serialize;

use super::conserved::power_integral;
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{
    dealiased_power_spectral, from_spectral, grad_sq, laplacian, make_grid, to_spectral, GridSpec, RealField,
    SpectralField,
};

/// Positive radial solution of ΔQ − Q + Q^{k+1} = 0 sampled on a periodic box.
#[derive(Clone, Debug)]
pub struct GroundState<S: Scalar> {
    pub field: RealField<S>,
    pub k: u32,
    /// max |ΔQ − Q + Q^{k+1}|
    pub residual_pde: S,
    pub l2_norm: S,
    pub grad_l2_norm: S,
    /// ‖Q‖_{L^{k+2}}
    pub lkp2_norm: S,
    pub iterations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroundStateSummary {
    pub k: u32,
    pub tol: f64,
    pub iterations: usize,
    pub residual_pde: f64,
    pub l2_norm: f64,
    pub grad_l2_norm: f64,
    pub lkp2_norm: f64,
    pub pohozaev: (f64, f64),
}

impl<S: Scalar> GroundState<S> {
    pub fn summary(&self, tol: f64) -> Result<GroundStateSummary> {
        let (r1, r2) = pohozaev_residuals(&self.field, self.k)?;
        Ok(GroundStateSummary {
            k: self.k,
            tol,
            iterations: self.iterations,
            residual_pde: self.residual_pde.as_f64(),
            l2_norm: self.l2_norm.as_f64(),
            grad_l2_norm: self.grad_l2_norm.as_f64(),
            lkp2_norm: self.lkp2_norm.as_f64(),
            pohozaev: (r1.as_f64(), r2.as_f64()),
        })
    }
}

/// Square box of side 16π (λ = 8) with n×n modes, padded for k ≤ 2 products.
/// n = 256 resolves Q to ~1e−10; n = 128 leaves ~1e−5 in the Pohozaev identities.
pub fn ground_state_grid<S: Scalar>(n: usize) -> Result<GridSpec<S>> {
    make_grid(S::lit(16.0) * S::PI(), S::lit(8.0), n, n, S::lit(2.0))
}

fn pde_residual<S: Scalar>(q: &SpectralField<S>, k: u32) -> Result<S> {
    let p = dealiased_power_spectral(q, k as usize + 1)?;
    let r = laplacian(q).sub(q).add(&p);
    Ok(from_spectral(&r).max_abs())
}

/// Petviashvili iteration Q ← M^γ (1−Δ)^{−1}(Q^{k+1}), M = ⟨(1−Δ)Q,Q⟩/⟨Q^{k+1},Q⟩, γ = (k+1)/k.
/// Stops when the sup-norm gap between iterates is ≤ tol and the PDE residual ≤ 10·tol.
pub fn ground_state<S: Scalar>(k: u32, grid: &GridSpec<S>, tol: S) -> Result<GroundState<S>> {
    if k == 0 || !(tol > S::zero()) {
        return Err(GzkError::InvalidParameter("k >= 1 and tol > 0 required".into()));
    }
    grid.require_pad(k as usize + 1)?;
    let kf = S::of(k as usize);
    let gamma = (kf + S::one()) / kf;
    let mut q = to_spectral(&RealField::from_fn_centered(grid, |x, y| {
        S::lit(2.0) * (-(x * x + y * y) / S::lit(4.0)).exp()
    })?)
    .project_band();
    let symbol = |xi: S, qq: S| S::one() + xi * xi + qq * qq;
    const MAX_IT: usize = 2000;
    let mut last = S::infinity();
    for it in 1..=MAX_IT {
        let p = dealiased_power_spectral(&q, k as usize + 1)?;
        let lq = q.clone().map_modes(|xi, qq, c| c.scale(symbol(xi, qq)));
        let m = lq.inner(&q) / p.inner(&q);
        let next = p.map_modes(|xi, qq, c| c.scale(S::one() / symbol(xi, qq))).scale(m.powf(gamma));
        let gap = from_spectral(&next.clone().sub(&q)).max_abs();
        q = next;
        last = gap;
        if !gap.is_finite() {
            break;
        }
        if gap <= tol {
            let res = pde_residual(&q, k)?;
            if res <= S::lit(10.0) * tol {
                let field = from_spectral(&q);
                let l2 = q.l2_norm();
                let lkp2 = power_integral(&q, k as usize + 2)?.powf(S::one() / (kf + S::lit(2.0)));
                return Ok(GroundState {
                    field,
                    k,
                    residual_pde: res,
                    l2_norm: l2,
                    grad_l2_norm: grad_sq(&q).sqrt(),
                    lkp2_norm: lkp2,
                    iterations: it,
                });
            }
        }
    }
    Err(GzkError::NotConverged { iterations: MAX_IT, residual: last.as_f64() })
}

/// Residuals of the two integral identities of (1−Δ)Q = Q^{k+1} on the plane, relative to ‖Q‖²:
/// pairing with Q gives ‖∇Q‖² + ‖Q‖² − ∫Q^{k+2} = 0; pairing with (x,y)·∇Q gives
/// ‖Q‖² − (2/(k+2))∫Q^{k+2} = 0.
pub fn pohozaev_residuals<S: Scalar>(q: &RealField<S>, k: u32) -> Result<(S, S)> {
    let f = to_spectral(q).project_band();
    let l2 = f.l2_sq();
    if l2 == S::zero() {
        return Ok((S::zero(), S::zero()));
    }
    let kp2 = S::of(k as usize + 2);
    let pot = power_integral(&f, k as usize + 2)?;
    let r1 = (grad_sq(&f) + l2 - pot) / l2;
    let r2 = (l2 - S::lit(2.0) / kp2 * pot) / l2;
    Ok((r1, r2))
}
