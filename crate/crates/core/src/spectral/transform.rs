use num_complex::Complex;
use num_traits::Zero;
use rustfft::FftDirection;

use super::field::{RealField, SpectralField};
use super::grid::GridSpec;
use crate::error::{GzkError, Result};
use crate::scalar::{plan, Scalar};

/// Unnormalized 2D FFT in place on a row-major nx×ny array.
pub(crate) fn fft2<S: Scalar>(data: &mut [Complex<S>], nx: usize, ny: usize, dir: FftDirection) {
    debug_assert_eq!(data.len(), nx * ny);
    let py = plan::<S>(ny, dir);
    let px = plan::<S>(nx, dir);
    py.process(data);
    let mut t = vec![Complex::zero(); nx * ny];
    transpose(data, &mut t, nx, ny);
    px.process(&mut t);
    transpose(&t, data, ny, nx);
}

// dst[c*rows + r] = src[r*cols + c]
fn transpose<T: Copy>(src: &[T], dst: &mut [T], rows: usize, cols: usize) {
    const B: usize = 16;
    for rb in (0..rows).step_by(B) {
        for cb in (0..cols).step_by(B) {
            for r in rb..(rb + B).min(rows) {
                for c in cb..(cb + B).min(cols) {
                    dst[c * rows + r] = src[r * cols + c];
                }
            }
        }
    }
}

/// û = dx·dy·FFT(u).
pub fn to_spectral<S: Scalar>(u: &RealField<S>) -> SpectralField<S> {
    let g = u.grid();
    let mut data: Vec<Complex<S>> = u.samples().iter().map(|v| Complex::new(*v, S::zero())).collect();
    fft2(&mut data, g.nx(), g.ny(), FftDirection::Forward);
    let w = g.dx() * g.dy();
    for c in &mut data {
        *c = c.scale(w);
    }
    SpectralField::from_parts(g.clone(), data)
}

/// Complex samples of the inverse transform u = IFFT(û)/(Lx·2πλ).
pub fn from_spectral_complex<S: Scalar>(f: &SpectralField<S>) -> Vec<Complex<S>> {
    let g = f.grid();
    let mut data = f.coeffs().to_vec();
    fft2(&mut data, g.nx(), g.ny(), FftDirection::Inverse);
    let w = S::one() / g.area();
    for c in &mut data {
        *c = c.scale(w);
    }
    data
}

/// Inverse transform keeping the real part (the imaginary residue is round-off for
/// Hermitian input).
pub fn from_spectral<S: Scalar>(f: &SpectralField<S>) -> RealField<S> {
    let v = from_spectral_complex(f).into_iter().map(|c| c.re).collect();
    RealField::new(f.grid().clone(), v).expect("inverse transform of finite coefficients is finite")
}

/// Largest grid the brute-force transform accepts.
pub const DFT_ORACLE_MAX: usize = 32;

/// Direct evaluation of û(ξ,q) = dx·dy·Σ u(x,y) e^{−i(xξ+yq)}. O((NxNy)²).
pub fn dft_oracle<S: Scalar>(u: &RealField<S>) -> Result<SpectralField<S>> {
    let g = u.grid();
    let (nx, ny) = (g.nx(), g.ny());
    if nx > DFT_ORACLE_MAX || ny > DFT_ORACLE_MAX {
        return Err(GzkError::Oversize { nx, ny, limit: format!("{DFT_ORACLE_MAX}x{DFT_ORACLE_MAX}") });
    }
    // exact index arithmetic mod N keeps the twiddles free of large-argument round-off
    let tw = |n: usize| -> Vec<Complex<S>> {
        (0..n).map(|r| Complex::from_polar(S::one(), -S::TAU() * S::of(r) / S::of(n))).collect()
    };
    let (wx, wy) = (tw(nx), tw(ny));
    let mut out = vec![Complex::zero(); nx * ny];
    for a in 0..nx {
        for b in 0..ny {
            let mut acc = Complex::zero();
            for i in 0..nx {
                for j in 0..ny {
                    let w = wx[(a * i) % nx] * wy[(b * j) % ny];
                    acc = acc + w.scale(u.at(i, j));
                }
            }
            out[a * ny + b] = acc.scale(g.dx() * g.dy());
        }
    }
    Ok(SpectralField::from_parts(g.clone(), out))
}

/// Zero-pad band coefficients (Nyquist dropped) into an mx×my array, keeping signed positions.
pub(crate) fn embed<S: Scalar>(f: &SpectralField<S>, mx: usize, my: usize) -> Vec<Complex<S>> {
    let g = f.grid();
    let (nx, ny) = (g.nx(), g.ny());
    let mut out = vec![Complex::zero(); mx * my];
    for i in 0..nx {
        if i == nx / 2 {
            continue;
        }
        let pi = g.kx(i).rem_euclid(mx as i64) as usize;
        for j in 0..ny {
            if j == ny / 2 {
                continue;
            }
            let pj = g.ky(j).rem_euclid(my as i64) as usize;
            out[pi * my + pj] = f.coeffs()[i * ny + j];
        }
    }
    out
}

/// Inverse of `embed`: read the band of an mx×my array back onto the grid (Nyquist zero).
pub(crate) fn extract<S: Scalar>(g: &GridSpec<S>, data: &[Complex<S>], mx: usize, my: usize) -> Vec<Complex<S>> {
    let (nx, ny) = (g.nx(), g.ny());
    let mut out = vec![Complex::zero(); nx * ny];
    for i in 0..nx {
        if i == nx / 2 {
            continue;
        }
        let pi = g.kx(i).rem_euclid(mx as i64) as usize;
        for j in 0..ny {
            if j == ny / 2 {
                continue;
            }
            let pj = g.ky(j).rem_euclid(my as i64) as usize;
            out[i * ny + j] = data[pi * my + pj];
        }
    }
    out
}
