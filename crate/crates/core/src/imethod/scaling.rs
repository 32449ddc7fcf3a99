use serde::{Deserialize, Serialize};

use super::multiplier::{apply_in, IMultiplierSpec};
use crate::dynamics::{integer_lambda, rescale_initial};
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{grad_sq, sobolev_norm, to_spectral, RealField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equation {
    #[serde(rename = "ZK")]
    Zk,
    #[serde(rename = "mZK")]
    Mzk,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalingReport {
    pub lambda: f64,
    pub k: u32,
    /// ‖u_{0,λ}‖ / (λ^{1−2/k}‖u₀‖) — exactly 1
    pub l2_ratio: f64,
    /// ‖I_N u_{0,λ}‖ / (λ^{1−2/k}‖u₀‖)
    pub l2_constant: f64,
    /// ‖∇I_N u_{0,λ}‖ / (N^{1−s} λ^{1−2/k−s} ‖u₀‖_{H^s})
    pub gradient_constant: f64,
}

/// Measured constants of the rescaling estimates for integer λ.
pub fn scaling_checks<S: Scalar>(u0: &RealField<S>, lambda: S, k: u32, ispec: &IMultiplierSpec<S>) -> Result<ScalingReport> {
    let lambda = integer_lambda(lambda)?;
    let ul = to_spectral(&rescale_initial(u0, lambda, k)?);
    let u = to_spectral(u0);
    let kf = S::of(k as usize);
    let e = S::one() - S::lit(2.0) / kf;
    let base = lambda.powf(e) * u.l2_norm();
    let iu = apply_in(&ul, ispec);
    let hs = sobolev_norm(&u, ispec.s, false)?;
    let gscale = ispec.n.powf(S::one() - ispec.s) * lambda.powf(e - ispec.s) * hs;
    let ratio = |a: S, b: S| if b > S::zero() { (a / b).as_f64() } else { 1.0 };
    Ok(ScalingReport {
        lambda: lambda.as_f64(),
        k,
        l2_ratio: ratio(ul.l2_norm(), base),
        l2_constant: ratio(iu.l2_norm(), base),
        gradient_constant: if gscale > S::zero() { (grad_sq(&iu).sqrt() / gscale).as_f64() } else { 0.0 },
    })
}

/// C·N^{(1−s)/(1+s)} for ZK, C·N^{(1−s)/s} for mZK.
pub fn lambda_choice<S: Scalar>(equation: Equation, n: S, s: S, c: S) -> Result<S> {
    if !(s >= S::zero() && s < S::one()) {
        return Err(GzkError::InvalidParameter(format!("s must lie in [0,1) (got {s})")));
    }
    if !(n >= S::one()) || !(c >= S::one()) {
        return Err(GzkError::InvalidParameter("N >= 1 and C >= 1 required".into()));
    }
    let e = match equation {
        Equation::Zk => (S::one() - s) / (S::one() + s),
        Equation::Mzk => {
            if s == S::zero() {
                return Err(GzkError::InvalidParameter("mZK choice needs s > 0".into()));
            }
            (S::one() - s) / s
        }
    };
    Ok(c * n.powf(e))
}
