use num_complex::Complex;
use num_traits::Zero;
use rustfft::FftDirection;

use crate::error::{GzkError, Result};
use crate::scalar::{plan, Scalar};
use crate::spectral::{phase, GridSpec};

fn signed(i: usize, n: usize) -> i64 {
    if i < n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

fn index(k: i64, n: usize) -> Option<usize> {
    let h = (n / 2) as i64;
    (-h..h).contains(&k).then(|| if k >= 0 { k as usize } else { (k + n as i64) as usize })
}

/// (τ, ξ, q) lattice: τ ∈ (2π/Tt)ℤ, |kt| < Nt/2, on top of a spatial box.
/// Layout is t-slowest: `(it*nx + ix)*ny + iy`, each axis in FFT order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceTimeGrid<S> {
    nt: usize,
    tt: S,
    space: GridSpec<S>,
}

impl<S: Scalar> SpaceTimeGrid<S> {
    pub fn new(nt: usize, tt: S, lx: S, lambda: S, nx: usize, ny: usize) -> Result<Self> {
        let space = GridSpec::new(lx, lambda, nx, ny, S::one());
        let mut bad = Vec::new();
        if nt == 0 || !nt.is_multiple_of(2) {
            bad.push(format!("Nt must be even and positive (got {nt})"));
        }
        if !(tt > S::zero()) || !tt.is_finite() {
            bad.push(format!("Tt must be positive (got {tt})"));
        }
        if let Err(GzkError::InvalidGrid(m)) = &space {
            bad.push(m.clone());
        }
        if !bad.is_empty() {
            return Err(GzkError::InvalidGrid(bad.join("; ")));
        }
        Ok(Self { nt, tt, space: space? })
    }

    pub fn nt(&self) -> usize {
        self.nt
    }
    pub fn nx(&self) -> usize {
        self.space.nx()
    }
    pub fn ny(&self) -> usize {
        self.space.ny()
    }
    pub fn tt(&self) -> S {
        self.tt
    }
    pub fn lx(&self) -> S {
        self.space.lx()
    }
    pub fn lambda(&self) -> S {
        self.space.lambda()
    }
    pub fn space(&self) -> &GridSpec<S> {
        &self.space
    }
    pub fn len(&self) -> usize {
        self.nt * self.space.len()
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// Tt·Lx·2πλ
    pub fn volume(&self) -> S {
        self.tt * self.space.area()
    }
    pub fn kt(&self, it: usize) -> i64 {
        signed(it, self.nt)
    }
    pub fn tau(&self, it: usize) -> S {
        S::TAU() * S::of_i64(self.kt(it)) / self.tt
    }
    pub fn it(&self, k: i64) -> Option<usize> {
        index(k, self.nt)
    }
    /// flat index of the signed lattice point, if on the lattice
    pub fn flat(&self, kt: i64, kx: i64, ky: i64) -> Option<usize> {
        let (a, b, c) = (self.it(kt)?, self.space.ix(kx)?, self.space.iy(ky)?);
        Some((a * self.nx() + b) * self.ny() + c)
    }
    /// (it, ix, iy) of a flat index
    pub fn split(&self, p: usize) -> (usize, usize, usize) {
        let (nx, ny) = (self.nx(), self.ny());
        (p / (nx * ny), (p / ny) % nx, p % ny)
    }
    pub fn is_nyquist(&self, p: usize) -> bool {
        let (a, b, c) = self.split(p);
        a == self.nt / 2 || b == self.nx() / 2 || c == self.ny() / 2
    }
    /// same periods, more modes in every direction
    pub fn enlarged(&self, nt: usize, nx: usize, ny: usize) -> Result<Self> {
        Self::new(nt, self.tt, self.lx(), self.lambda(), nx, ny)
    }
}

/// Space-time Fourier coefficients f̂(τ,ξ,q) = ∫∫∫ e^{−i(tτ+xξ+yq)} f dt dx dy on the lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceTimeField<S> {
    grid: SpaceTimeGrid<S>,
    coeffs: Vec<Complex<S>>,
}

impl<S: Scalar> SpaceTimeField<S> {
    pub fn new(grid: SpaceTimeGrid<S>, coeffs: Vec<Complex<S>>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(GzkError::SizeMismatch { expected: grid.len(), got: coeffs.len() });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(GzkError::NonFinite("space-time coefficients".into()));
        }
        Ok(Self { grid, coeffs })
    }
    pub fn zeros(grid: &SpaceTimeGrid<S>) -> Self {
        Self { grid: grid.clone(), coeffs: vec![Complex::zero(); grid.len()] }
    }
    pub fn grid(&self) -> &SpaceTimeGrid<S> {
        &self.grid
    }
    pub fn coeffs(&self) -> &[Complex<S>] {
        &self.coeffs
    }
    pub fn coeffs_mut(&mut self) -> &mut [Complex<S>] {
        &mut self.coeffs
    }
    pub fn mode(&self, kt: i64, kx: i64, ky: i64) -> Option<Complex<S>> {
        self.grid.flat(kt, kx, ky).map(|p| self.coeffs[p])
    }
    /// adds c at (kt,kx,ky) and conj(c) at the mirrored point (real part only if self-mirrored)
    pub fn add_real_mode(&mut self, kt: i64, kx: i64, ky: i64, c: Complex<S>) {
        let p = self.grid.flat(kt, kx, ky).expect("mode on lattice");
        let m = self.grid.flat(-kt, -kx, -ky).expect("mode on lattice");
        if p == m {
            self.coeffs[p].re = self.coeffs[p].re + c.re + c.re;
        } else {
            self.coeffs[p] = self.coeffs[p] + c;
            self.coeffs[m] = self.coeffs[m] + c.conj();
        }
    }
    /// max |f̂(−k) − conj f̂(k)| relative to max |f̂|
    pub fn hermitian_defect(&self) -> S {
        let g = &self.grid;
        let mut worst = S::zero();
        for p in 0..g.len() {
            let (a, b, c) = g.split(p);
            if let Some(m) = g.flat(-g.kt(a), -g.space.kx(b), -g.space.ky(c)) {
                worst = worst.max((self.coeffs[m] - self.coeffs[p].conj()).norm());
            }
        }
        let scale = self.max_abs();
        if scale > S::zero() {
            worst / scale
        } else {
            worst
        }
    }
    pub fn max_abs(&self) -> S {
        self.coeffs.iter().map(|c| c.norm()).fold(S::zero(), S::max)
    }
    pub fn max_abs_diff(&self, other: &Self) -> S {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(S::zero(), S::max)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    pub fn scale(mut self, s: S) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c = c.scale(s));
        self
    }
    pub fn add(mut self, o: &Self) -> Self {
        self.coeffs.iter_mut().zip(&o.coeffs).for_each(|(a, b)| *a = *a + *b);
        self
    }
    /// multiply by σ(τ, ξ, q)
    pub fn map_modes(mut self, f: impl Fn(S, S, S, Complex<S>) -> Complex<S>) -> Self {
        let g = self.grid.clone();
        for (p, c) in self.coeffs.iter_mut().enumerate() {
            let (a, b, d) = g.split(p);
            *c = f(g.tau(a), g.space.xi(b), g.space.q(d), *c);
        }
        self
    }
    /// copy onto a lattice with at least as many modes per axis (same periods)
    pub fn embed(&self, target: &SpaceTimeGrid<S>) -> Result<Self> {
        let g = &self.grid;
        if target.nt < g.nt || target.nx() < g.nx() || target.ny() < g.ny() {
            return Err(GzkError::GridMismatch("embedding target is smaller".into()));
        }
        let mut out = Self::zeros(target);
        for (p, c) in self.coeffs.iter().enumerate() {
            if g.is_nyquist(p) || c.is_zero() {
                continue;
            }
            let (a, b, d) = g.split(p);
            let q = target.flat(g.kt(a), g.space.kx(b), g.space.ky(d)).expect("fits");
            out.coeffs[q] = *c;
        }
        Ok(out)
    }
}

/// Unnormalized 3D FFT in place.
pub(crate) fn fft3<S: Scalar>(data: &mut [Complex<S>], nt: usize, nx: usize, ny: usize, dir: FftDirection) {
    let slab = nx * ny;
    for s in data.chunks_mut(slab) {
        crate::spectral::fft2(s, nx, ny, dir);
    }
    let pt = plan::<S>(nt, dir);
    let mut col = vec![Complex::zero(); nt];
    for p in 0..slab {
        for (t, c) in col.iter_mut().enumerate() {
            *c = data[t * slab + p];
        }
        pt.process(&mut col);
        for (t, c) in col.iter().enumerate() {
            data[t * slab + p] = *c;
        }
    }
}

/// Samples f(t_a, x_b, y_c) at the lattice points (complex; real up to round-off for Hermitian data).
pub fn spacetime_samples<S: Scalar>(f: &SpaceTimeField<S>) -> Vec<Complex<S>> {
    let g = f.grid();
    let mut d = f.coeffs().to_vec();
    fft3(&mut d, g.nt, g.nx(), g.ny(), FftDirection::Inverse);
    let w = S::one() / g.volume();
    d.iter_mut().for_each(|c| *c = c.scale(w));
    d
}

/// Inverse of `spacetime_samples`.
pub fn spacetime_from_samples<S: Scalar>(g: &SpaceTimeGrid<S>, v: &[Complex<S>]) -> Result<SpaceTimeField<S>> {
    if v.len() != g.len() {
        return Err(GzkError::SizeMismatch { expected: g.len(), got: v.len() });
    }
    let mut d = v.to_vec();
    fft3(&mut d, g.nt, g.nx(), g.ny(), FftDirection::Forward);
    let w = g.volume() / S::of(g.len());
    d.iter_mut().for_each(|c| *c = c.scale(w));
    SpaceTimeField::new(g.clone(), d)
}

/// Bourgain-space parameters: weight ⟨(ξ,q)⟩^{s}⟨q⟩^{jy}⟨τ−φ(ξ,q)⟩^{b}.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct XsbSpec<S> {
    pub s: S,
    pub b: S,
    /// extra J_y order (0 for the plain X_{s,b} norm)
    #[serde(default)]
    pub jy: S,
}

impl<S: Scalar> XsbSpec<S> {
    pub fn new(s: S, b: S) -> Self {
        Self { s, b, jy: S::zero() }
    }
    pub fn with_jy(mut self, jy: S) -> Self {
        self.jy = jy;
        self
    }
}

#[inline]
fn bracket<S: Scalar>(x2: S) -> S {
    (S::one() + x2).sqrt()
}

/// ‖f‖²_{X} = (1/(Tt·Lx·2πλ))·Σ ⟨(ξ,q)⟩^{2s}⟨q⟩^{2jy}⟨τ−φ⟩^{2b}|f̂|², the lattice version of
/// (2π)^{−3}λ^{−1}∫∫Σ_q … dτ dξ.
pub fn xsb_norm<S: Scalar>(f: &SpaceTimeField<S>, spec: &XsbSpec<S>) -> S {
    let g = f.grid();
    let two = S::lit(2.0);
    let mut acc = S::zero();
    for (p, c) in f.coeffs().iter().enumerate() {
        let (a, b, d) = g.split(p);
        let (tau, xi, q) = (g.tau(a), g.space.xi(b), g.space.q(d));
        let m = tau - phase(xi, q);
        let w = bracket(xi * xi + q * q).powf(two * spec.s) * bracket(q * q).powf(two * spec.jy) * bracket(m * m).powf(two * spec.b);
        acc = acc + w * c.norm_sqr();
    }
    (acc / g.volume()).sqrt()
}

/// ‖f‖_{L^p_{txy}} for p ∈ {2,4,6}. |f|^p is a trigonometric polynomial, so it is integrated
/// exactly on a lattice refined by p/2 in every direction.
pub fn spacetime_lebesgue_norm<S: Scalar>(f: &SpaceTimeField<S>, p: u32) -> Result<S> {
    if ![2, 4, 6].contains(&p) {
        return Err(GzkError::InvalidParameter(format!("p must be 2, 4 or 6 (got {p})")));
    }
    let g = f.grid();
    let r = p as usize / 2;
    let fine = g.enlarged(r * g.nt, r * g.nx(), r * g.ny())?;
    let v = spacetime_samples(&f.embed(&fine)?);
    let cell = fine.volume() / S::of(fine.len());
    let sum: S = v.iter().map(|c| c.norm_sqr().powi(r as i32)).sum();
    Ok((sum * cell).powf(S::one() / S::of(p as usize)))
}
