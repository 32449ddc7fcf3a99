#![allow(dead_code)]

use gzk_core::dynamics::{simulate_with, DiagnosticsSpec, EquationSpec, Sign, StepperConfig, Trajectory};
use gzk_core::spectral::{make_grid, to_spectral, GridSpec, RealField, SpectralField};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 128×32 box with equal Nyquist wavenumbers (16) in both directions.
pub fn identity_grid(pad: f64) -> GridSpec<f64> {
    make_grid(8.0 * std::f64::consts::PI, 1.0, 128, 32, pad).unwrap()
}

/// quarter of the Nyquist wavenumber of `identity_grid`
pub const QUARTER_NYQUIST: f64 = 4.0;

pub fn bump(g: &GridSpec<f64>, amp: f64) -> SpectralField<f64> {
    let u = RealField::from_fn_centered(g, |x, y| {
        amp * (-x * x / 0.72).exp() * (1.0 + 0.5 * y.cos() + 0.3 * (3.0 * y + 0.4).sin())
    })
    .unwrap();
    to_spectral(&u).project_band()
}

/// δ = 0.1 sampled at every step (400 intervals)
pub fn identity_run(k: u32, sign: Sign, pad: f64) -> (EquationSpec, Trajectory<f64>) {
    let g = identity_grid(pad);
    let eq = EquationSpec::new(k, sign).unwrap();
    let u0 = bump(&g, 0.8);
    let cfg = StepperConfig::new(2.5e-4);
    let traj = simulate_with(&u0, &eq, &cfg, 0.1, None, &DiagnosticsSpec::default()).unwrap();
    (eq, traj)
}

pub fn random_field(g: &GridSpec<f64>, seed: u64, decay: f64) -> SpectralField<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = SpectralField::zeros(g);
    let (hx, hy) = (g.nx() as i64 / 2 - 1, g.ny() as i64 / 2 - 1);
    for a in -hx..=hx {
        for b in 0..=hy {
            if b == 0 && a < 0 {
                continue;
            }
            let w = (-decay * ((a * a + b * b) as f64).sqrt()).exp();
            let c = Complex::new(rng.random_range(-1.0..1.0), if a == 0 && b == 0 { 0.0 } else { rng.random_range(-1.0..1.0) });
            f.add_real_mode(a, b, c.scale(w * if a == 0 && b == 0 { 0.5 } else { 1.0 }));
        }
    }
    f
}

/// brute-force (1/area)·Σ_{k₁+k₂=k} v̂₁v̂₂ over band modes, written independently of the library
pub fn brute_product(u: &SpectralField<f64>, v: &SpectralField<f64>) -> Vec<Complex<f64>> {
    let g = u.grid();
    let (hx, hy) = (g.nx() as i64 / 2 - 1, g.ny() as i64 / 2 - 1);
    let mut out = vec![Complex::new(0.0, 0.0); g.len()];
    for a in -hx..=hx {
        for b in -hy..=hy {
            let mut acc = Complex::new(0.0, 0.0);
            for c in -hx..=hx {
                for d in -hy..=hy {
                    if let (Some(x), Some(y)) = (u.mode(c, d), v.mode(a - c, b - d)) {
                        if (a - c).abs() <= hx && (b - d).abs() <= hy {
                            acc += x * y;
                        }
                    }
                }
            }
            out[g.ix(a).unwrap() * g.ny() + g.iy(b).unwrap()] = acc / g.area();
        }
    }
    out
}
