use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{dealiased_power_spectral, SpectralField};

/// Sign in front of ∂ₓ(u^{k+1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<S: Scalar>(self) -> S {
        match self {
            Sign::Plus => S::one(),
            Sign::Minus => -S::one(),
        }
    }
    pub fn from_int(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// ∂ₜu + ∂ₓΔu = sign·∂ₓ(u^{k+1}). `nonlinear = false` switches the right-hand side off
/// (free flow) while keeping k for the energy functional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSpec {
    pub k: u32,
    pub sign: Sign,
    #[serde(default = "yes")]
    pub nonlinear: bool,
}

fn yes() -> bool {
    true
}

impl EquationSpec {
    pub fn new(k: u32, sign: Sign) -> Result<Self> {
        if k == 0 {
            return Err(GzkError::InvalidParameter("k must be >= 1".into()));
        }
        Ok(Self { k, sign, nonlinear: true })
    }

    pub fn free(k: u32, sign: Sign) -> Result<Self> {
        Ok(Self { nonlinear: false, ..Self::new(k, sign)? })
    }

    /// degree of the nonlinearity, k+1
    pub fn degree(&self) -> usize {
        self.k as usize + 1
    }
}

/// sign·∂ₓ P(u^{k+1}) in spectral form (zero when the nonlinearity is off).
pub fn nonlinear_term<S: Scalar>(u: &SpectralField<S>, spec: &EquationSpec) -> Result<SpectralField<S>> {
    if !spec.nonlinear {
        return Ok(SpectralField::zeros(u.grid()));
    }
    u.grid().require_pad(spec.degree())?;
    let p = dealiased_power_spectral(u, spec.degree())?;
    let sg = spec.sign.value::<S>();
    Ok(p.map_modes(|xi, _, c| c * Complex::new(S::zero(), sg * xi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{from_spectral, make_grid, to_spectral, RealField};
    use std::f64::consts::PI;

    #[test]
    fn y_only_data_gives_zero() {
        let g = make_grid::<f64>(4.0 * PI, 1.0, 16, 8, 2.0).unwrap();
        let u = to_spectral(&RealField::from_fn(&g, |_, y| y.cos()).unwrap());
        for k in 1..=2 {
            let n = nonlinear_term(&u, &EquationSpec::new(k, Sign::Plus).unwrap()).unwrap();
            assert!(n.max_abs() < 1e-12);
        }
    }

    #[test]
    fn k1_single_x_mode_matches_trig() {
        // ∂ₓ(cos²(x/L)) = −(1/L) sin(2x/L)
        let l = 3.0;
        let g = make_grid::<f64>(2.0 * PI * l, 1.0, 16, 4, 1.5).unwrap();
        let u = to_spectral(&RealField::from_fn(&g, |x, _| (x / l).cos()).unwrap());
        for sign in [Sign::Plus, Sign::Minus] {
            let n = nonlinear_term(&u, &EquationSpec::new(1, sign).unwrap()).unwrap();
            let s = sign.value::<f64>();
            let v = from_spectral(&n);
            for i in 0..16 {
                for j in 0..4 {
                    let want = -s / l * (2.0 * g.x(i) / l).sin();
                    assert!((v.at(i, j) - want).abs() < 1e-13);
                }
            }
            let mut nz: Vec<(i64, i64)> = Vec::new();
            for i in 0..16 {
                for j in 0..4 {
                    if n.at(i, j).norm() > 1e-12 {
                        nz.push((g.kx(i), g.ky(j)));
                    }
                }
            }
            nz.sort();
            assert_eq!(nz, vec![(-2, 0), (2, 0)]);
        }
    }
}
