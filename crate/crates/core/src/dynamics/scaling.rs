use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{GridSpec, RealField};

/// Check that λ is a positive integer.
pub(crate) fn integer_lambda<S: Scalar>(lambda: S) -> Result<S> {
    if !(lambda >= S::one()) || lambda.fract() != S::zero() {
        return Err(GzkError::InvalidParameter(format!("rescaling needs a positive integer λ (got {lambda})")));
    }
    Ok(lambda)
}

/// u_{0,λ}(x,y) = λ^{−2/k} u₀(x/λ, y/λ) on the box λLx × 2π(λλ₀).
///
/// With the mode count unchanged, grid mode j of the new box has frequency ξ_j/λ, so the map
/// ĝ_j = λ^{2−2/k} û_j is an exact relabeling; in sample space it is the same array times λ^{−2/k}.
pub fn rescale_initial<S: Scalar>(u0: &RealField<S>, lambda: S, k: u32) -> Result<RealField<S>> {
    let lambda = integer_lambda(lambda)?;
    if k == 0 {
        return Err(GzkError::InvalidParameter("k must be >= 1".into()));
    }
    let g = u0.grid();
    let g2 = GridSpec::new(g.lx() * lambda, g.lambda() * lambda, g.nx(), g.ny(), g.pad_factor())?;
    let c = lambda.powf(-S::lit(2.0) / S::of(k as usize));
    RealField::new(g2, u0.samples().iter().map(|v| *v * c).collect())
}
