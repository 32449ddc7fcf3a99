use num_complex::Complex;
use num_traits::Zero;
use rustfft::FftDirection;

use super::lattice::{SpaceTimeField, SpaceTimeGrid};
use crate::error::{GzkError, Result};
use crate::scalar::{plan, Scalar};
use crate::spectral::dilated_norm_sq;

/// direct convolution budget (total lattice points per factor)
pub const MP_BUDGET: usize = 64 * 64 * 64;
/// largest lattice the O(M²) oracle accepts
pub const MP_ORACLE_MAX: usize = 16 * 16 * 16;

/// Output lattice: same periods, twice the modes per axis, so the convolution is not truncated.
pub fn mp_output_grid<S: Scalar>(g: &SpaceTimeGrid<S>) -> Result<SpaceTimeGrid<S>> {
    g.enlarged(2 * g.nt(), 2 * g.nx(), 2 * g.ny())
}

fn prefactor<S: Scalar>(g: &SpaceTimeGrid<S>) -> S {
    // (1/λ)·dτ·dξ with dτ = 2π/Tt, dξ = 2π/Lx
    S::TAU() * S::TAU() / (g.lambda() * g.tt() * g.lx())
}

#[inline]
fn multiplier<S: Scalar>(xi1: S, q1: S, xi2: S, q2: S) -> S {
    (dilated_norm_sq(xi1, q1) - dilated_norm_sq(xi2, q2)).mag().sqrt()
}

fn check<S: Scalar>(u: &SpaceTimeField<S>, v: &SpaceTimeField<S>, limit: usize) -> Result<()> {
    if u.grid() != v.grid() {
        return Err(GzkError::GridMismatch("space-time lattices differ".into()));
    }
    let g = u.grid();
    if g.len() > limit {
        return Err(GzkError::Oversize { nx: g.nx(), ny: g.ny(), limit: format!("{limit} lattice points") });
    }
    Ok(())
}

/// Ŵ(τ,ξ,q) = (1/λ)∫∫Σ_{q₁} ||(ξ₁,q₁)|²−|(ξ₂,q₂)|²|^{1/2} û(τ₁,ξ₁,q₁)v̂(τ₂,ξ₂,q₂) with the
/// convolution constraint, as a lattice sum. The τ-convolution is done in the time domain
/// (padded, so exact); spatial pairs are summed directly.
pub fn mp_spacetime<S: Scalar>(u: &SpaceTimeField<S>, v: &SpaceTimeField<S>) -> Result<SpaceTimeField<S>> {
    check(u, v, MP_BUDGET)?;
    let g = u.grid();
    let out = mp_output_grid(g)?;
    let (nt, nx, ny) = (g.nt(), g.nx(), g.ny());
    let ntp = 2 * nt;
    let sp = g.space();
    let inv = plan::<S>(ntp, FftDirection::Inverse);
    let fwd = plan::<S>(ntp, FftDirection::Forward);
    // time-domain columns of the non-zero spatial modes
    let columns = |f: &SpaceTimeField<S>| {
        let mut cols = Vec::new();
        for ix in 0..nx {
            for iy in 0..ny {
                if ix == nx / 2 || iy == ny / 2 {
                    continue;
                }
                let mut col = vec![Complex::<S>::zero(); ntp];
                let mut any = false;
                for it in 0..nt {
                    if it == nt / 2 {
                        continue;
                    }
                    let c = f.coeffs()[(it * nx + ix) * ny + iy];
                    if !c.is_zero() {
                        any = true;
                    }
                    let k = g.kt(it);
                    col[if k >= 0 { k as usize } else { (k + ntp as i64) as usize }] = c;
                }
                if any {
                    inv.process(&mut col);
                    cols.push((sp.kx(ix), sp.ky(iy), sp.xi(ix), sp.q(iy), col));
                }
            }
        }
        cols
    };
    let (cu, cv) = (columns(u), columns(v));
    let osp = out.space();
    let mut acc = vec![Complex::<S>::zero(); osp.len() * ntp];
    for (kx1, ky1, xi1, q1, c1) in &cu {
        for (kx2, ky2, xi2, q2, c2) in &cv {
            let m = multiplier(*xi1, *q1, *xi2, *q2);
            if m == S::zero() {
                continue;
            }
            let o = osp.ix(kx1 + kx2).expect("fits") * osp.ny() + osp.iy(ky1 + ky2).expect("fits");
            let dst = &mut acc[o * ntp..(o + 1) * ntp];
            for ((d, a), b) in dst.iter_mut().zip(c1).zip(c2) {
                *d = *d + (*a * *b).scale(m);
            }
        }
    }
    let w = prefactor(g) / S::of(ntp);
    let mut coeffs = vec![Complex::zero(); out.len()];
    let slab = osp.len();
    for (o, col) in acc.chunks_mut(ntp).enumerate() {
        if col.iter().all(|c| c.is_zero()) {
            continue;
        }
        fwd.process(col);
        for (n, c) in col.iter().enumerate() {
            coeffs[n * slab + o] = c.scale(w);
        }
    }
    SpaceTimeField::new(out, coeffs)
}

/// Direct O(M²) double sum over lattice pairs; reference for `mp_spacetime`.
pub fn mp_spacetime_oracle<S: Scalar>(u: &SpaceTimeField<S>, v: &SpaceTimeField<S>) -> Result<SpaceTimeField<S>> {
    check(u, v, MP_ORACLE_MAX)?;
    let g = u.grid();
    let out = mp_output_grid(g)?;
    let sp = g.space();
    let pref = prefactor(g);
    let mut coeffs = vec![Complex::zero(); out.len()];
    for p1 in 0..g.len() {
        let a = u.coeffs()[p1];
        if a.is_zero() || g.is_nyquist(p1) {
            continue;
        }
        let (t1, x1, y1) = g.split(p1);
        for p2 in 0..g.len() {
            let b = v.coeffs()[p2];
            if b.is_zero() || g.is_nyquist(p2) {
                continue;
            }
            let (t2, x2, y2) = g.split(p2);
            let m = multiplier(sp.xi(x1), sp.q(y1), sp.xi(x2), sp.q(y2));
            let o = out
                .flat(g.kt(t1) + g.kt(t2), sp.kx(x1) + sp.kx(x2), sp.ky(y1) + sp.ky(y2))
                .expect("output lattice holds every sum");
            coeffs[o] = coeffs[o] + (a * b).scale(m * pref);
        }
    }
    SpaceTimeField::new(out, coeffs)
}

/// The exact space-time product uv (padded, no wrap-around) on the doubled lattice.
pub fn spacetime_product<S: Scalar>(u: &SpaceTimeField<S>, v: &SpaceTimeField<S>) -> Result<SpaceTimeField<S>> {
    check(u, v, MP_BUDGET)?;
    let out = mp_output_grid(u.grid())?;
    let a = super::lattice::spacetime_samples(&u.embed(&out)?);
    let b = super::lattice::spacetime_samples(&v.embed(&out)?);
    let prod: Vec<Complex<S>> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
    super::lattice::spacetime_from_samples(&out, &prod)
}
