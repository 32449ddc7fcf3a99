use super::field::SpectralField;
use super::symbols::japanese;
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// ‖J^s f‖_{L²} (inhomogeneous) or ‖I^s f‖_{L²} (homogeneous, zero mode weighted 0).
pub fn sobolev_norm<S: Scalar>(f: &SpectralField<S>, s: S, homogeneous: bool) -> Result<S> {
    Ok(sobolev_norm_sq(f, s, homogeneous)?.sqrt())
}

pub fn sobolev_norm_sq<S: Scalar>(f: &SpectralField<S>, s: S, homogeneous: bool) -> Result<S> {
    let g = f.grid();
    if homogeneous && s < S::zero() {
        let scale = f.max_abs();
        if f.coeffs()[0].norm() > S::lit(1e-12) * scale {
            return Err(GzkError::NotMeanZero);
        }
    }
    let ny = g.ny();
    let mut acc = S::zero();
    for i in 0..g.nx() {
        let xi = g.xi(i);
        for j in 0..ny {
            let q = g.q(j);
            let w = if homogeneous {
                let r2 = xi * xi + q * q;
                if r2 == S::zero() {
                    S::zero()
                } else {
                    r2.powf(s)
                }
            } else {
                japanese(xi, q).powf(s + s)
            };
            acc = acc + w * f.coeffs()[i * ny + j].norm_sqr();
        }
    }
    Ok(acc / g.area())
}

/// ‖∇f‖²_{L²}
pub fn grad_sq<S: Scalar>(f: &SpectralField<S>) -> S {
    let g = f.grid();
    let ny = g.ny();
    let mut acc = S::zero();
    for i in 0..g.nx() {
        let xi = g.xi(i);
        for j in 0..ny {
            let q = g.q(j);
            acc = acc + (xi * xi + q * q) * f.coeffs()[i * ny + j].norm_sqr();
        }
    }
    acc / g.area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{grid::make_grid, transform::to_spectral, RealField};
    use std::f64::consts::PI;

    #[test]
    fn cos_y_h2() {
        let g = make_grid::<f64>(2.0 * PI, 1.0, 8, 8, 1.0).unwrap();
        let f = to_spectral(&RealField::from_fn(&g, |_, y| y.cos()).unwrap());
        let n = sobolev_norm(&f, 2.0, false).unwrap();
        assert!((n * n - 4.0 * 2.0 * PI * PI).abs() < 1e-10);
        let l2 = sobolev_norm(&f, 0.0, false).unwrap();
        assert!((l2 * l2 - 2.0 * PI * PI).abs() < 1e-11);
    }

    #[test]
    fn homogeneous_negative_needs_mean_zero() {
        let g = make_grid::<f64>(2.0 * PI, 1.0, 8, 8, 1.0).unwrap();
        let f = to_spectral(&RealField::from_fn(&g, |_, y| 1.0 + y.cos()).unwrap());
        assert!(matches!(sobolev_norm(&f, -1.0, true), Err(GzkError::NotMeanZero)));
        assert!(sobolev_norm(&f, 1.0, true).is_ok());
    }
}
