use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::lattice::{SpaceTimeField, SpaceTimeGrid, XsbSpec};
use crate::scalar::Scalar;
use crate::spectral::{dilated_norm_sq, phase};

/// extra modulation decay so that the sampled X_{s,b} norm stays finite as the lattice grows
pub const MODULATION_EXCESS: f64 = 0.5;

/// Spatial amplitude profile of sampled fields.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Profile {
    /// flat on inner ≤ |(ξ,q)| ≤ outer (dilated norm), zero elsewhere
    FlatOnShells { inner: f64, outer: f64 },
    /// exp(−|(ξ,q)|²/(2·width²))
    GaussianDecay { width: f64 },
}

impl Profile {
    pub fn flat() -> Self {
        Profile::FlatOnShells { inner: 0.0, outer: f64::INFINITY }
    }
    pub(crate) fn amplitude(&self, dn2: f64) -> f64 {
        match *self {
            Profile::FlatOnShells { inner, outer } => {
                let r = dn2.sqrt();
                if r >= inner && r <= outer {
                    1.0
                } else {
                    0.0
                }
            }
            Profile::GaussianDecay { width } => (-dn2 / (2.0 * width * width)).exp(),
        }
    }
}

/// Sign structure of sampled coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phases {
    /// independent complex normal coefficients (incoherent)
    #[default]
    Random,
    /// |normal| moduli with zero phase: f̂ ≥ 0 and even, the worst case for positive multipliers
    NonNegative,
}

/// `random_xsb_field_with` using random phases.
pub fn random_xsb_field<S: Scalar>(grid: &SpaceTimeGrid<S>, spec: &XsbSpec<S>, profile: Profile, seed: u64) -> SpaceTimeField<S> {
    random_xsb_field_with(grid, spec, profile, Phases::Random, seed)
}

/// Hermitian random coefficients ~ profile·⟨(ξ,q)⟩^{−s}⟨q⟩^{−jy}⟨τ−φ⟩^{−b−1/2}·(complex normal),
/// i.e. concentrated near the characteristic surface τ = φ(ξ,q). Nyquist planes stay empty.
/// Bit-exact for a given seed.
pub fn random_xsb_field_with<S: Scalar>(
    grid: &SpaceTimeGrid<S>,
    spec: &XsbSpec<S>,
    profile: Profile,
    phases: Phases,
    seed: u64,
) -> SpaceTimeField<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = SpaceTimeField::zeros(grid);
    let sp = grid.space();
    let (s, jy, b) = (spec.s.as_f64(), spec.jy.as_f64(), spec.b.as_f64());
    for p in 0..grid.len() {
        if grid.is_nyquist(p) {
            continue;
        }
        let (a, bx, c) = grid.split(p);
        let (kt, kx, ky) = (grid.kt(a), sp.kx(bx), sp.ky(c));
        let m = grid.flat(-kt, -kx, -ky).expect("mirror of a non-Nyquist point");
        if m < p {
            continue;
        }
        let (tau, xi, q) = (grid.tau(a).as_f64(), sp.xi(bx).as_f64(), sp.q(c).as_f64());
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        let amp = profile.amplitude(dilated_norm_sq(xi, q))
            * (1.0 + xi * xi + q * q).powf(-s / 2.0)
            * (1.0 + q * q).powf(-jy / 2.0)
            * (1.0 + (tau - phase(xi, q)).powi(2)).powf(-(b + MODULATION_EXCESS) / 2.0);
        if amp == 0.0 {
            continue;
        }
        let z = if phases == Phases::NonNegative {
            Complex::new(re.abs() * amp / if m == p { 2.0 } else { 1.0 }, 0.0)
        } else if m == p { Complex::new(re * amp / 2.0, 0.0) } else { Complex::new(re * amp, im * amp) };
        f.add_real_mode(kt, kx, ky, Complex::new(S::lit(z.re), S::lit(z.im)));
    }
    f
}
