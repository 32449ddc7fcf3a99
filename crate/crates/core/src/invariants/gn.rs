use num_complex::Complex;

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{fft2, grad_sq, SpectralField};

/// Sharp ℝ² Gagliardo–Nirenberg constant 2^{(k−2)/2}(k+2)/(k^{k/2}‖Q_k‖^k).
pub fn weinstein_constant<S: Scalar>(k: u32, q_l2: S) -> Result<S> {
    if !(q_l2 > S::zero()) || k == 0 {
        return Err(GzkError::InvalidParameter(format!("need k >= 1 and ‖Q‖ > 0 (got k={k}, {q_l2})")));
    }
    let kf = S::of(k as usize);
    let two = S::lit(2.0);
    Ok(two.powf((kf - two) / two) * (kf + two) / (kf.powf(kf / two) * q_l2.powf(kf)))
}

/// ∫|f|^p by quadrature of the band-limited interpolant on a grid refined by (p+1)/2.
/// Exact (up to round-off) for even p; spectrally accurate otherwise.
pub fn abs_power_integral<S: Scalar>(f: &SpectralField<S>, p: S) -> S {
    let g = f.grid();
    let r = (p + S::one()) / S::lit(2.0);
    let dim = |n: usize| {
        let m = (r * S::of(n)).ceil().to_usize().unwrap_or(n).max(n);
        m + (m & 1)
    };
    let (mx, my) = (dim(g.nx()), dim(g.ny()));
    let mut data = vec![Complex::new(S::zero(), S::zero()); mx * my];
    let ny = g.ny();
    for i in 0..g.nx() {
        if i == g.nx() / 2 {
            continue;
        }
        let pi = g.kx(i).rem_euclid(mx as i64) as usize;
        for j in 0..ny {
            if j == ny / 2 {
                continue;
            }
            data[pi * my + g.ky(j).rem_euclid(my as i64) as usize] = f.coeffs()[i * ny + j];
        }
    }
    fft2(&mut data, mx, my, rustfft::FftDirection::Inverse);
    let inv = S::one() / g.area();
    let s: S = data.iter().map(|c| (c.re * inv).mag().powf(p)).sum();
    s * (g.lx() / S::of(mx)) * (g.ly() / S::of(my))
}

/// RHS − LHS of ‖f‖_{k+2}^{k+2} ≤ C_r ‖f‖²(‖∇f‖² + C_T λ^{−2}‖f‖²)^{k/2}.
/// Without `c_t` this is the plane form C_r‖f‖²‖∇f‖^k.
pub fn gn_defect<S: Scalar>(f: &SpectralField<S>, k: u32, c_r: S, c_t: Option<S>) -> S {
    let kf = S::of(k as usize);
    let two = S::lit(2.0);
    let l2 = f.l2_sq();
    let mut gr = grad_sq(f);
    if let Some(ct) = c_t {
        let lam = f.grid().lambda();
        gr = gr + ct / (lam * lam) * l2;
    }
    let rhs = c_r * l2 * gr.powf(kf / two);
    rhs - abs_power_integral(f, kf + two)
}
