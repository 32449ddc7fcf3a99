use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{dilated_norm_sq, GridSpec, SpectralField};

/// Frequency-pair restrictions of a product v₁v₂ with output k = k₁ + k₂ and
/// A = {|k₁| ≥ 100|k₂|}, B = {|k| ≥ 100|k₂|} (|·| the dilated norm).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrSelector {
    /// χ_A
    PrHiFirst,
    /// χ_B
    PrHiOut,
    /// 2χ(neither A nor B)
    Pr2,
    /// χ(exactly one of A, B)
    Pr3,
    /// χ_A + χ_B
    Pr1,
    /// no restriction (plain product), for cross-checks
    Full,
}

/// ratio in the "≫" conditions
pub const PR_RATIO: f64 = 100.0;

/// Largest grid accepted by `pr_product`.
pub const PR_MAX_MODES: (usize, usize) = (64, 32);

#[inline]
fn weight(sel: PrSelector, a: bool, b: bool) -> i32 {
    match sel {
        PrSelector::PrHiFirst => a as i32,
        PrSelector::PrHiOut => b as i32,
        PrSelector::Pr2 => 2 * (!a && !b) as i32,
        PrSelector::Pr3 => (a != b) as i32,
        PrSelector::Pr1 => a as i32 + b as i32,
        PrSelector::Full => 1,
    }
}

/// Direct double sum (1/area)·Σ_{k₁+k₂=k} χ·v̂₁(k₁)v̂₂(k₂) over band modes (Nyquist excluded),
/// without wrap-around.
pub fn pr_product<S: Scalar>(v1: &SpectralField<S>, v2: &SpectralField<S>, sel: PrSelector) -> Result<SpectralField<S>> {
    let g = v1.grid();
    if g.nx() > PR_MAX_MODES.0 || g.ny() > PR_MAX_MODES.1 {
        return Err(GzkError::Oversize { nx: g.nx(), ny: g.ny(), limit: format!("{}x{}", PR_MAX_MODES.0, PR_MAX_MODES.1) });
    }
    Ok(pr_products(v1, v2, &[sel])?.pop().expect("one selector"))
}

/// Several selectors in one pass, no size cap.
pub fn pr_products<S: Scalar>(v1: &SpectralField<S>, v2: &SpectralField<S>, sels: &[PrSelector]) -> Result<Vec<SpectralField<S>>> {
    let g = v1.grid();
    g.check_same(v2.grid())?;
    let (nx, ny) = (g.nx(), g.ny());
    let (hx, hy) = ((nx / 2) as i64 - 1, (ny / 2) as i64 - 1);
    let wx = (2 * hx + 1) as usize;
    let wy = (2 * hy + 1) as usize;
    // dense band arrays indexed by (kx + hx, ky + hy)
    let dense = |f: &SpectralField<S>| {
        let mut d = vec![Complex::zero(); wx * wy];
        for a in -hx..=hx {
            for b in -hy..=hy {
                d[(a + hx) as usize * wy + (b + hy) as usize] = f.mode(a, b).expect("band mode");
            }
        }
        d
    };
    let (d1, d2) = (dense(v1), dense(v2));
    let xi: Vec<S> = (-hx..=hx).map(|a| g.xi(g.ix(a).unwrap())).collect();
    let q: Vec<S> = (-hy..=hy).map(|b| g.q(g.iy(b).unwrap())).collect();
    let nrm: Vec<S> = (0..wx * wy).map(|p| dilated_norm_sq(xi[p / wy], q[p % wy])).collect();
    let r2 = S::lit(PR_RATIO * PR_RATIO);
    let inv_area = S::one() / g.area();
    let ns = sels.len();
    let mut out = vec![vec![Complex::<S>::zero(); nx * ny]; ns];
    let mut acc = vec![Complex::<S>::zero(); ns];
    for a in -hx..=hx {
        for b in -hy..=hy {
            let kp = (a + hx) as usize * wy + (b + hy) as usize;
            let nk = nrm[kp];
            acc.iter_mut().for_each(|z| *z = Complex::zero());
            for c in (a - hx).max(-hx)..=(a + hx).min(hx) {
                let row1 = (c + hx) as usize * wy;
                let row2 = (a - c + hx) as usize * wy;
                for d in (b - hy).max(-hy)..=(b + hy).min(hy) {
                    let p1 = row1 + (d + hy) as usize;
                    let p2 = row2 + (b - d + hy) as usize;
                    let z = d1[p1] * d2[p2];
                    let lim = r2 * nrm[p2];
                    let (ia, ib) = (nrm[p1] >= lim, nk >= lim);
                    for (s, sel) in sels.iter().enumerate() {
                        let w = weight(*sel, ia, ib);
                        if w != 0 {
                            acc[s] = acc[s] + z.scale(S::of_i64(w as i64));
                        }
                    }
                }
            }
            let (i, j) = (g.ix(a).unwrap(), g.iy(b).unwrap());
            for s in 0..ns {
                out[s][i * ny + j] = acc[s].scale(inv_area);
            }
        }
    }
    out.into_iter().map(|c| SpectralField::new(g.clone(), c)).collect::<Result<Vec<_>>>()
}

/// Exhaustive check of χ_A + χ_B = 2χ_{A∪B} − χ_{A△B} over all pairs (k₁, k₂) of grid modes.
/// Returns the largest absolute deviation.
pub fn indicator_identity_check<S: Scalar>(g: &GridSpec<S>) -> i64 {
    let modes: Vec<(S, S)> = (0..g.nx()).flat_map(|i| (0..g.ny()).map(move |j| (i, j))).map(|(i, j)| (g.xi(i), g.q(j))).collect();
    let norms: Vec<S> = modes.iter().map(|(x, y)| dilated_norm_sq(*x, *y)).collect();
    let r2 = S::lit(PR_RATIO * PR_RATIO);
    let mut worst = 0i64;
    for (p1, m1) in modes.iter().enumerate() {
        for (p2, m2) in modes.iter().enumerate() {
            let lim = r2 * norms[p2];
            let a = norms[p1] >= lim;
            let b = dilated_norm_sq(m1.0 + m2.0, m1.1 + m2.1) >= lim;
            let lhs = a as i64 + b as i64;
            let rhs = 2 * (a || b) as i64 - (a != b) as i64;
            worst = worst.max((lhs - rhs).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{dealiased_product, make_grid};

    fn field(g: &GridSpec<f64>, seed: u64) -> SpectralField<f64> {
        let mut f = SpectralField::zeros(g);
        let mut x = seed;
        for a in -(g.nx() as i64 / 2 - 1)..g.nx() as i64 / 2 {
            for b in 0..g.ny() as i64 / 2 {
                if b == 0 && a < 0 {
                    continue;
                }
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let re = ((x >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let im = if a == 0 && b == 0 { 0.0 } else { ((x >> 11) as f64 / (1u64 << 53) as f64) - 0.5 };
                f.add_real_mode(a, b, Complex::new(re, im).scale(if a == 0 && b == 0 { 0.5 } else { 1.0 }));
            }
        }
        f
    }

    #[test]
    fn full_selector_is_the_product() {
        let g = make_grid::<f64>(7.0, 1.0, 16, 8, 1.5).unwrap();
        let (u, v) = (field(&g, 1), field(&g, 2));
        let a = pr_product(&u, &v, PrSelector::Full).unwrap();
        let b = dealiased_product(&[&u, &v]).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-12 * b.max_abs());
    }

    #[test]
    fn indicator_small_grid() {
        let g = make_grid::<f64>(7.0, 1.0, 8, 8, 1.0).unwrap();
        assert_eq!(indicator_identity_check(&g), 0);
    }

    #[test]
    fn oversize_refused() {
        let g = make_grid::<f64>(7.0, 1.0, 128, 8, 1.0).unwrap();
        let z = SpectralField::zeros(&g);
        assert!(pr_product(&z, &z, PrSelector::Pr2).is_err());
    }
}
