use serde::{Deserialize, Serialize};

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::SpectralField;

/// I_N multiplier: 1 for r ≤ N, (r/N)^{s−1} for r ≥ 2N (r the Euclidean radius), and a
/// smoothstep blend in log-radius in between.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IMultiplierSpec<S> {
    pub n: S,
    pub s: S,
    /// odd smoothstep degree ≥ 3 (5 = quintic)
    pub blend_degree: u32,
}

impl<S: Scalar> IMultiplierSpec<S> {
    pub fn new(n: S, s: S) -> Result<Self> {
        Self::with_blend(n, s, 5)
    }
    pub fn with_blend(n: S, s: S, blend_degree: u32) -> Result<Self> {
        if !(n > S::zero()) || !n.is_finite() {
            return Err(GzkError::InvalidParameter(format!("N must be positive (got {n})")));
        }
        if !s.is_finite() {
            return Err(GzkError::InvalidParameter("s must be finite".into()));
        }
        if blend_degree < 3 || blend_degree.is_multiple_of(2) {
            return Err(GzkError::InvalidParameter(format!("blend degree must be odd and >= 3 (got {blend_degree})")));
        }
        Ok(Self { n, s, blend_degree })
    }
}

fn binom(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Smoothstep of odd degree 2n+1 on [0,1]: the polynomial with σ(0)=0, σ(1)=1 and n vanishing
/// derivatives at both ends. Clamped outside.
pub fn smoothstep<S: Scalar>(degree: u32, x: S) -> S {
    if x <= S::zero() {
        return S::zero();
    }
    if x >= S::one() {
        return S::one();
    }
    let n = ((degree - 1) / 2) as u64;
    let mut acc = S::zero();
    let mut pw = S::one();
    for j in 0..=n {
        let c = binom(n + j, j) * binom(2 * n + 1, n - j);
        acc = acc + S::lit(c) * pw;
        pw = pw * (-x);
    }
    x.powi(n as i32 + 1) * acc
}

pub fn i_multiplier_value<S: Scalar>(xi: S, q: S, spec: &IMultiplierSpec<S>) -> S {
    let r = (xi * xi + q * q).sqrt();
    let n = spec.n;
    if r <= n {
        return S::one();
    }
    let sm1 = spec.s - S::one();
    if r >= n + n {
        return (r / n).powf(sm1);
    }
    let rho = (r / n).ln();
    let w = smoothstep(spec.blend_degree, rho / S::LN_2());
    (sm1 * w * rho).exp()
}

/// I_N f
pub fn apply_in<S: Scalar>(f: &SpectralField<S>, spec: &IMultiplierSpec<S>) -> SpectralField<S> {
    f.clone().map_modes(|xi, q, c| c.scale(i_multiplier_value(xi, q, spec)))
}
