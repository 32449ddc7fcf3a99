use serde::Serialize;

use super::leibniz::{growth_terms, leibniz_expansion, weighted_products};
use super::projectors::{pr_products, PrSelector};
use crate::dynamics::{EquationSpec, Trajectory};
use crate::error::{GzkError, Result};
use crate::numerics::simpson;
use crate::scalar::Scalar;
use crate::spectral::{d_x, riesz, sobolev_norm_sq, SpectralField};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthIdentityReport {
    pub k: u32,
    pub s: u32,
    pub t: f64,
    /// ‖u(t)‖²_{Ḣ^s} − ‖u(t₀)‖²_{Ḣ^s}
    pub lhs: f64,
    /// time integral of the expanded right-hand side
    pub rhs: f64,
    pub residual: f64,
}

/// d/dt ‖u‖²_{Ḣ^s} at one snapshot, from the expanded nonlinear terms.
///
/// k ≥ 2: sign·Σ C⟨ΠD^{α_i}u, I^s u⟩ over `growth_terms`.
/// k = 1: with w = I^s u,
/// 2·sign·(⟨Pr_{hi-first}(w·∂ₓu), w⟩ + ⟨∂ₓPr₂(wu), w⟩ + ⟨∂ₓPr₃(wu), w⟩ + Σ_{lower} C⟨∂ₓ(D^{α₁}u D^{α₂}u), w⟩),
/// the lower sum running over Leibniz terms where neither factor carries all s derivatives.
pub fn growth_rate<S: Scalar>(u: &SpectralField<S>, s: u32, eq: &EquationSpec) -> Result<S> {
    if !eq.nonlinear {
        return Ok(S::zero());
    }
    let sg = eq.sign.value::<S>();
    let w = riesz(u, S::of(s as usize));
    if eq.k >= 2 {
        let terms = growth_terms(eq.k, s)?;
        let refs: Vec<_> = terms.iter().map(|t| (t.alphas.as_slice(), t.coeff)).collect();
        let factors = vec![u; eq.k as usize + 1];
        let f = weighted_products(&factors, &refs)?;
        return Ok(sg * f.inner(&w));
    }
    let ex = leibniz_expansion(1, s)?;
    let lower: Vec<_> = ex
        .terms
        .iter()
        .filter(|t| t.alphas.iter().all(|a| a.0 + a.1 < s))
        .map(|t| (t.alphas.as_slice(), t.coeff))
        .collect();
    let low = d_x(&weighted_products(&[u, u], &lower)?);
    let hf = pr_products(&w, &d_x(u), &[PrSelector::PrHiFirst])?.pop().unwrap();
    let mut p23 = pr_products(&w, u, &[PrSelector::Pr2, PrSelector::Pr3])?;
    let p3 = p23.pop().unwrap();
    let p2 = p23.pop().unwrap();
    let body = hf.add(&d_x(&p2.add(&p3))).add(&low);
    Ok(S::lit(2.0) * sg * body.inner(&w))
}

/// |LHS − RHS| for the Ḣ^s growth identity between the first sample and `t`.
pub fn growth_identity_residual<S: Scalar>(
    traj: &Trajectory<S>,
    s: u32,
    eq: &EquationSpec,
    t: S,
) -> Result<GrowthIdentityReport> {
    if s < 2 || !s.is_multiple_of(2) {
        return Err(GzkError::InvalidParameter(format!("s must be an even integer >= 2 (got {s})")));
    }
    let b = traj.time_index(t)?;
    let sf = S::of(s as usize);
    let lhs = sobolev_norm_sq(&traj.snapshots[b], sf, true)? - sobolev_norm_sq(&traj.snapshots[0], sf, true)?;
    let rhs = if b == 0 {
        S::zero()
    } else {
        if b + 1 < 3 {
            return Err(GzkError::TooFewSnapshots { needed: 3, found: b + 1 });
        }
        let vals = traj.snapshots[..=b].iter().map(|u| growth_rate(u, s, eq)).collect::<Result<Vec<_>>>()?;
        simpson(&traj.times[..=b], &vals)?
    };
    let (lhs, rhs) = (lhs.as_f64(), rhs.as_f64());
    Ok(GrowthIdentityReport { k: eq.k, s, t: t.as_f64(), lhs, rhs, residual: (lhs - rhs).abs() })
}
