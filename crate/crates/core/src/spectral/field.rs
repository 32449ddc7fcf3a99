use num_complex::Complex;
use num_traits::Zero;

use super::grid::GridSpec;
use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// Real samples u(x_i, y_j), row-major (`i*ny + j`).
#[derive(Clone, Debug, PartialEq)]
pub struct RealField<S> {
    grid: GridSpec<S>,
    samples: Vec<S>,
}

impl<S: Scalar> RealField<S> {
    pub fn new(grid: GridSpec<S>, samples: Vec<S>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(GzkError::SizeMismatch { expected: grid.len(), got: samples.len() });
        }
        if samples.iter().any(|v| !v.is_finite()) {
            return Err(GzkError::NonFinite("real field samples".into()));
        }
        Ok(Self { grid, samples })
    }

    pub fn zeros(grid: &GridSpec<S>) -> Self {
        Self { samples: vec![S::zero(); grid.len()], grid: grid.clone() }
    }

    /// Samples f(x_i, y_j) with x_i = i·dx, y_j = j·dy.
    pub fn from_fn(grid: &GridSpec<S>, f: impl Fn(S, S) -> S) -> Result<Self> {
        let mut v = Vec::with_capacity(grid.len());
        for i in 0..grid.nx() {
            for j in 0..grid.ny() {
                v.push(f(grid.x(i), grid.y(j)));
            }
        }
        Self::new(grid.clone(), v)
    }

    /// Like `from_fn` but with coordinates wrapped into the centered cell, for localized profiles.
    pub fn from_fn_centered(grid: &GridSpec<S>, f: impl Fn(S, S) -> S) -> Result<Self> {
        let mut v = Vec::with_capacity(grid.len());
        for i in 0..grid.nx() {
            for j in 0..grid.ny() {
                v.push(f(grid.x_centered(i), grid.y_centered(j)));
            }
        }
        Self::new(grid.clone(), v)
    }

    pub fn grid(&self) -> &GridSpec<S> {
        &self.grid
    }
    pub fn samples(&self) -> &[S] {
        &self.samples
    }
    pub fn into_samples(self) -> Vec<S> {
        self.samples
    }
    pub fn at(&self, i: usize, j: usize) -> S {
        self.samples[i * self.grid.ny() + j]
    }
    pub fn max_abs(&self) -> S {
        self.samples.iter().fold(S::zero(), |m, v| m.max(v.mag()))
    }
    /// Riemann sum Σ u² dx dy.
    pub fn l2_sq_quadrature(&self) -> S {
        self.samples.iter().map(|v| *v * *v).sum::<S>() * self.grid.dx() * self.grid.dy()
    }
}

/// Fourier coefficients û(ξ_j, q_m) in FFT order with the Riemann-sum normalization
/// û = dx·dy·Σ u e^{−i(xξ+yq)}.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField<S> {
    grid: GridSpec<S>,
    coeffs: Vec<Complex<S>>,
}

impl<S: Scalar> SpectralField<S> {
    pub fn new(grid: GridSpec<S>, coeffs: Vec<Complex<S>>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(GzkError::SizeMismatch { expected: grid.len(), got: coeffs.len() });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(GzkError::NonFinite("spectral coefficients".into()));
        }
        Ok(Self { grid, coeffs })
    }

    pub(crate) fn from_parts(grid: GridSpec<S>, coeffs: Vec<Complex<S>>) -> Self {
        debug_assert_eq!(coeffs.len(), grid.len());
        Self { grid, coeffs }
    }

    pub fn zeros(grid: &GridSpec<S>) -> Self {
        Self { coeffs: vec![Complex::zero(); grid.len()], grid: grid.clone() }
    }

    /// Real field c·e^{i(k·x)} + conj: puts `c` at signed mode (kx, ky) and its conjugate at the
    /// mirrored mode. Panics if the mode is off-grid.
    pub fn real_mode(grid: &GridSpec<S>, kx: i64, ky: i64, c: Complex<S>) -> Self {
        let mut f = Self::zeros(grid);
        f.add_real_mode(kx, ky, c);
        f
    }

    pub fn add_real_mode(&mut self, kx: i64, ky: i64, c: Complex<S>) {
        let g = &self.grid;
        let (i, j) = (g.ix(kx).expect("mode on grid"), g.iy(ky).expect("mode on grid"));
        let (i2, j2) = (g.ix(-kx).expect("mode on grid"), g.iy(-ky).expect("mode on grid"));
        let ny = g.ny();
        if (i, j) == (i2, j2) {
            self.coeffs[i * ny + j] = self.coeffs[i * ny + j] + Complex::new(c.re + c.re, S::zero());
        } else {
            self.coeffs[i * ny + j] = self.coeffs[i * ny + j] + c;
            self.coeffs[i2 * ny + j2] = self.coeffs[i2 * ny + j2] + c.conj();
        }
    }

    pub fn grid(&self) -> &GridSpec<S> {
        &self.grid
    }
    pub fn coeffs(&self) -> &[Complex<S>] {
        &self.coeffs
    }
    pub fn coeffs_mut(&mut self) -> &mut [Complex<S>] {
        &mut self.coeffs
    }
    pub fn into_coeffs(self) -> Vec<Complex<S>> {
        self.coeffs
    }
    pub fn at(&self, i: usize, j: usize) -> Complex<S> {
        self.coeffs[i * self.grid.ny() + j]
    }
    /// coefficient at signed mode numbers, None when off-grid
    pub fn mode(&self, kx: i64, ky: i64) -> Option<Complex<S>> {
        Some(self.at(self.grid.ix(kx)?, self.grid.iy(ky)?))
    }

    /// Max |û(−k) − conj û(k)| relative to max |û| (0 for the zero field).
    pub fn hermitian_defect(&self) -> S {
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let mut d = S::zero();
        for i in 0..nx {
            for j in 0..ny {
                let a = self.coeffs[i * ny + j];
                let b = self.coeffs[((nx - i) % nx) * ny + (ny - j) % ny];
                d = d.max((a - b.conj()).norm());
            }
        }
        let m = self.max_abs();
        if m > S::zero() {
            d / m
        } else {
            S::zero()
        }
    }

    pub fn max_abs(&self) -> S {
        self.coeffs.iter().fold(S::zero(), |m, c| m.max(c.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> S {
        self.coeffs.iter().zip(&other.coeffs).fold(S::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    /// Drop the Nyquist row and column. Products and dynamics work on this band so that
    /// Hermitian symmetry and integration by parts hold exactly.
    pub fn project_band(mut self) -> Self {
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        for j in 0..ny {
            self.coeffs[(nx / 2) * ny + j] = Complex::zero();
        }
        for i in 0..nx {
            self.coeffs[i * ny + ny / 2] = Complex::zero();
        }
        self
    }

    pub fn is_band_limited(&self) -> bool {
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        (0..ny).all(|j| self.coeffs[(nx / 2) * ny + j].is_zero())
            && (0..nx).all(|i| self.coeffs[i * ny + ny / 2].is_zero())
    }

    /// ∫u² through Parseval: Σ|û|²/(Lx·2πλ).
    pub fn l2_sq(&self) -> S {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<S>() / self.grid.area()
    }

    pub fn l2_norm(&self) -> S {
        self.l2_sq().sqrt()
    }

    /// Real L² pairing ∫f g of two real fields, via Parseval.
    pub fn inner(&self, other: &Self) -> S {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a.conj() * b).re).sum::<S>() / self.grid.area()
    }

    pub fn scale(mut self, s: S) -> Self {
        for c in &mut self.coeffs {
            *c = c.scale(s);
        }
        self
    }

    pub fn scale_complex(mut self, s: Complex<S>) -> Self {
        for c in &mut self.coeffs {
            *c = *c * s;
        }
        self
    }

    /// self + a·other
    pub fn axpy(mut self, a: S, other: &Self) -> Self {
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c = *c + o.scale(a);
        }
        self
    }

    pub fn add(self, other: &Self) -> Self {
        self.axpy(S::one(), other)
    }

    pub fn sub(self, other: &Self) -> Self {
        self.axpy(-S::one(), other)
    }

    /// Coefficient-wise map with access to (ξ, q).
    pub fn map_modes(mut self, f: impl Fn(S, S, Complex<S>) -> Complex<S>) -> Self {
        let ny = self.grid.ny();
        for i in 0..self.grid.nx() {
            let xi = self.grid.xi(i);
            for j in 0..ny {
                let c = &mut self.coeffs[i * ny + j];
                *c = f(xi, self.grid.q(j), *c);
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// spatial mean of the field (û(0,0)/area)
    pub fn mean(&self) -> S {
        self.coeffs[0].re / self.grid.area()
    }
}
