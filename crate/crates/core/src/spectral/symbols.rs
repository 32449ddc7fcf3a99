use num_complex::Complex;

use super::field::SpectralField;
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// φ(ξ,q) = ξ(ξ²+q²), the dispersion symbol.
#[inline]
pub fn phase<S: Scalar>(xi: S, q: S) -> S {
    xi * (xi * xi + q * q)
}

/// φ(ξ,q) − φ(ξ₁,q₁) − φ(ξ−ξ₁, q−q₁)
pub fn resonance_zk<S: Scalar>(xi1: S, q1: S, xi: S, q: S) -> S {
    phase(xi, q) - phase(xi1, q1) - phase(xi - xi1, q - q1)
}

/// φ(ξ,q) − φ(ξ₁,q₁) − φ(ξ₂,q₂) − φ(ξ−ξ₁−ξ₂, q−q₁−q₂)
pub fn resonance_mzk<S: Scalar>(xi1: S, q1: S, xi2: S, q2: S, xi: S, q: S) -> S {
    phase(xi, q) - phase(xi1, q1) - phase(xi2, q2) - phase(xi - xi1 - xi2, q - q1 - q2)
}

/// 3ξ²+q²
#[inline]
pub fn dilated_norm_sq<S: Scalar>(xi: S, q: S) -> S {
    S::lit(3.0) * xi * xi + q * q
}

/// ξ²+q²
#[inline]
pub fn euclid_norm_sq<S: Scalar>(xi: S, q: S) -> S {
    xi * xi + q * q
}

/// ⟨(ξ,q)⟩ = (1+ξ²+q²)^{1/2}
#[inline]
pub fn japanese<S: Scalar>(xi: S, q: S) -> S {
    (S::one() + xi * xi + q * q).sqrt()
}

/// Coefficient-wise multiplication by a Fourier symbol σ(ξ,q).
pub fn apply_symbol<S: Scalar>(
    f: &SpectralField<S>,
    symbol: impl Fn(S, S) -> Complex<S>,
) -> Result<SpectralField<S>> {
    let g = f.grid();
    let ny = g.ny();
    let mut out = f.coeffs().to_vec();
    for i in 0..g.nx() {
        let xi = g.xi(i);
        for j in 0..ny {
            let s = symbol(xi, g.q(j));
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(GzkError::NonFinite(format!("symbol at (ξ,q)=({xi},{})", g.q(j))));
            }
            out[i * ny + j] = out[i * ny + j] * s;
        }
    }
    Ok(SpectralField::from_parts(g.clone(), out))
}

// Symbols below are finite everywhere, so these never fail.
fn apply_real<S: Scalar>(f: &SpectralField<S>, sym: impl Fn(S, S) -> S) -> SpectralField<S> {
    f.clone().map_modes(|xi, q, c| c.scale(sym(xi, q)))
}

/// e^{itφ(ξ,q)} — the free group e^{−t∂ₓΔ}.
pub fn free_propagator<S: Scalar>(f: &SpectralField<S>, t: S) -> SpectralField<S> {
    f.clone().map_modes(|xi, q, c| c * Complex::from_polar(S::one(), t * phase(xi, q)))
}

/// ∂ₓ ↔ iξ
pub fn d_x<S: Scalar>(f: &SpectralField<S>) -> SpectralField<S> {
    f.clone().map_modes(|xi, _, c| Complex::new(-c.im * xi, c.re * xi))
}

/// ∂_y ↔ iq
pub fn d_y<S: Scalar>(f: &SpectralField<S>) -> SpectralField<S> {
    f.clone().map_modes(|_, q, c| Complex::new(-c.im * q, c.re * q))
}

/// D^α = ∂ₓ^a ∂_y^b ↔ (iξ)^a (iq)^b
pub fn derivative<S: Scalar>(f: &SpectralField<S>, a: u32, b: u32) -> SpectralField<S> {
    f.clone().map_modes(|xi, q, c| c * ipow(xi, a) * ipow(q, b))
}

/// (i x)^n
pub fn ipow<S: Scalar>(x: S, n: u32) -> Complex<S> {
    let m = x.powi(n as i32);
    match n % 4 {
        0 => Complex::new(m, S::zero()),
        1 => Complex::new(S::zero(), m),
        2 => Complex::new(-m, S::zero()),
        _ => Complex::new(S::zero(), -m),
    }
}

/// Δ ↔ −(ξ²+q²)
pub fn laplacian<S: Scalar>(f: &SpectralField<S>) -> SpectralField<S> {
    apply_real(f, |xi, q| -euclid_norm_sq(xi, q))
}

/// J^s ↔ ⟨(ξ,q)⟩^s
pub fn bessel<S: Scalar>(f: &SpectralField<S>, s: S) -> SpectralField<S> {
    apply_real(f, |xi, q| japanese(xi, q).powf(s))
}

/// I^s ↔ |(ξ,q)|^s, with value 0 at the zero mode for every s.
pub fn riesz<S: Scalar>(f: &SpectralField<S>, s: S) -> SpectralField<S> {
    apply_real(f, |xi, q| riesz_symbol(xi, q, s))
}

pub fn riesz_symbol<S: Scalar>(xi: S, q: S, s: S) -> S {
    let r2 = euclid_norm_sq(xi, q);
    if r2 == S::zero() {
        S::zero()
    } else {
        r2.powf(s / S::lit(2.0))
    }
}

/// I_x^s ↔ |ξ|^s (0 at ξ=0)
pub fn riesz_x<S: Scalar>(f: &SpectralField<S>, s: S) -> SpectralField<S> {
    apply_real(f, |xi, _| if xi == S::zero() { S::zero() } else { xi.mag().powf(s) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::grid::make_grid;

    #[test]
    fn phase_values() {
        assert_eq!(phase(0.0, 3.7), 0.0);
        assert_eq!(phase(1.0, 2.0), 5.0);
        assert_eq!(phase(-1.0, 0.0), -1.0);
    }

    #[test]
    fn resonance_values() {
        assert_eq!(resonance_zk(1.5, -0.5, 1.5, -0.5), 0.0);
        // φ(2,0) − φ(1,0) − φ(1,0) = 8 − 1 − 1
        assert_eq!(resonance_zk(1.0, 0.0, 2.0, 0.0), 6.0);
        assert_eq!(resonance_mzk(0.3, 0.2, 0.0, 0.0, 1.1, -0.7), resonance_zk(0.3, 0.2, 1.1, -0.7));
        // equal thirds: φ is cubic-homogeneous, so φ(ξ,q)(1 − 3/27)
        let (xi, q): (f64, f64) = (1.2, 0.9);
        let v = resonance_mzk(xi / 3.0, q / 3.0, xi / 3.0, q / 3.0, xi, q);
        assert!((v - 24.0 / 27.0 * phase(xi, q)).abs() < 1e-14);
    }

    #[test]
    fn dilated_values() {
        assert_eq!(dilated_norm_sq(0.0, 0.0), 0.0);
        assert_eq!(dilated_norm_sq(1.0, 1.0), 4.0);
        assert_eq!(dilated_norm_sq(2.0, 0.0), 12.0);
    }

    #[test]
    fn ipow_cycle() {
        assert_eq!(ipow(2.0, 3), Complex::new(0.0, -8.0));
        assert_eq!(ipow(2.0, 0), Complex::new(1.0, 0.0));
    }

    #[test]
    fn riesz_two_is_minus_laplacian() {
        let g = make_grid::<f64>(5.0, 2.0, 8, 8, 1.0).unwrap();
        let f = SpectralField::real_mode(&g, 2, 3, Complex::new(0.7, -0.1));
        let a = riesz(&f, 2.0);
        let b = laplacian(&f).scale(-1.0);
        assert!(a.max_abs_diff(&b) < 1e-14);
        let xi = g.xi(2);
        let q = g.q(3);
        let c = a.mode(2, 3).unwrap();
        assert!((c - Complex::new(0.7, -0.1).scale(xi * xi + q * q)).norm() < 1e-14);
    }

    #[test]
    fn rejects_nonfinite_symbol() {
        let g = make_grid::<f64>(5.0, 1.0, 4, 4, 1.0).unwrap();
        let f = SpectralField::zeros(&g);
        assert!(apply_symbol(&f, |xi, _| Complex::new(1.0 / xi, 0.0)).is_err());
    }
}
