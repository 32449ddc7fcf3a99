use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lattice::{spacetime_lebesgue_norm, xsb_norm, SpaceTimeField, SpaceTimeGrid, XsbSpec};
use super::mp::{mp_spacetime, spacetime_product};
use super::sampler::{random_xsb_field_with, Phases, Profile};
use crate::error::{GzkError, Result};
use crate::spectral::{free_propagator, make_grid, Padded, SpectralField};

/// right-hand sides below this are discarded
pub const DEGENERATE_RHS: f64 = 1e-14;
pub const MIN_TRIALS: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EstimateTag {
    /// ‖MP(u,v)‖_{L²} ≲ ‖J_y^{1/2+ε}u‖_{X_{0,b₁}}‖v‖_{X_{0,b₂}}
    #[serde(rename = "MP_31")]
    Mp31,
    /// ‖u‖_{L⁴} ≲ ‖u‖_{X_{ε,b}}
    #[serde(rename = "L4_32")]
    L4_32,
    /// ‖I_x^{α/4}P^α(uv)‖_{L²} ≲ ‖u‖_{X_{ε,b}}‖v‖_{X_{ε,b}}
    #[serde(rename = "BILIN_33")]
    Bilin33,
    /// ‖I_x^{1/6}e^{−t∂ₓΔ}u₀‖_{L⁶} ≲ ‖J_y^{1/3}u₀‖_{L²}
    #[serde(rename = "AIRY_L6_37")]
    AiryL6_37,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateCase {
    pub tag: EstimateTag,
    pub eps: f64,
    pub b: f64,
    pub b1: f64,
    pub b2: f64,
    /// exponent of the P^α projector
    pub alpha: f64,
}

impl EstimateCase {
    pub fn new(tag: EstimateTag) -> Self {
        Self { tag, eps: 0.05, b: 0.55, b1: 0.51, b2: 0.51, alpha: 1.0 }
    }
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        if !(self.eps > 0.0) {
            bad.push(format!("eps must be > 0 (got {})", self.eps));
        }
        for (n, v) in [("b", self.b), ("b1", self.b1), ("b2", self.b2)] {
            if !(v > 0.5) {
                bad.push(format!("{n} must be > 1/2 (got {v})"));
            }
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            bad.push(format!("alpha must lie in [0,1] (got {})", self.alpha));
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(GzkError::InvalidParameter(bad.join("; ")))
        }
    }
}

/// Lattice family: Ny = ny_per_lambda·λ keeps the q-range fixed while the q-spacing 1/λ shrinks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateLattice {
    pub nt: usize,
    pub tt: f64,
    pub nx: usize,
    pub lx: f64,
    pub ny_per_lambda: usize,
    pub profile: Profile,
    #[serde(default)]
    pub phases: Phases,
}

impl EstimateLattice {
    /// 32 × 32 × 4λ with |ξ|, |q| < 2 and |τ| < 16. Coefficients are non-negative: for the
    /// positive MP multiplier that is the worst case, so sampled maxima track the supremum
    /// rather than the incoherent average (which decays like λ^{−1/2} as modes are added).
    pub fn standard() -> Self {
        Self { nt: 32, tt: std::f64::consts::TAU, nx: 32, lx: 16.0 * std::f64::consts::PI, ny_per_lambda: 4, profile: Profile::flat(), phases: Phases::NonNegative }
    }
    /// λ = 1 lattice with |q| < 16, |ξ| < 2 and a τ-range (|τ| < 512) that contains the
    /// characteristic surface; used for the shell-separation probe
    pub fn shell_probe() -> Self {
        Self {
            nt: 32,
            tt: std::f64::consts::TAU / 32.0,
            nx: 32,
            lx: 16.0 * std::f64::consts::PI,
            ny_per_lambda: 32,
            profile: Profile::flat(),
            phases: Phases::Random,
        }
    }
    pub fn grid(&self, lambda: f64) -> Result<SpaceTimeGrid<f64>> {
        if !(lambda >= 1.0) || lambda.fract() != 0.0 {
            return Err(GzkError::InvalidParameter(format!("λ must be a positive integer (got {lambda})")));
        }
        SpaceTimeGrid::new(self.nt, self.tt, self.lx, lambda, self.nx, self.ny_per_lambda * lambda as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaRatio {
    pub lambda: f64,
    pub trials: usize,
    pub discarded: usize,
    /// sampled maximum of LHS/RHS
    pub max_ratio: f64,
    pub mean_ratio: f64,
    /// running maximum after each accepted trial
    pub running_max: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioReport {
    pub case: EstimateCase,
    pub lattice: EstimateLattice,
    pub seed: u64,
    pub per_lambda: Vec<LambdaRatio>,
    /// largest / smallest per-λ sampled maximum
    pub cross_lambda_spread: f64,
}

/// splitmix64 step, used to derive independent per-trial seeds
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn l2(f: &SpaceTimeField<f64>) -> f64 {
    xsb_norm(f, &XsbSpec::new(0.0, 0.0))
}

/// LHS and RHS of the MP estimate for given fields.
pub fn mp_sides(case: &EstimateCase, u: &SpaceTimeField<f64>, v: &SpaceTimeField<f64>) -> Result<(f64, f64)> {
    let lhs = l2(&mp_spacetime(u, v)?);
    let ru = xsb_norm(u, &XsbSpec::new(0.0, case.b1).with_jy(0.5 + case.eps));
    let rv = xsb_norm(v, &XsbSpec::new(0.0, case.b2));
    Ok((lhs, ru * rv))
}

fn bilin_sides(case: &EstimateCase, u: &SpaceTimeField<f64>, v: &SpaceTimeField<f64>) -> Result<(f64, f64)> {
    let a = case.alpha;
    let w = spacetime_product(u, v)?.map_modes(|_, xi, q, c| {
        let keep = (3.0 * xi * xi - q * q).abs() >= xi.abs().powf(a) && xi.abs() >= 1.0;
        if keep {
            c.scale(xi.abs().powf(a / 4.0))
        } else {
            Complex::new(0.0, 0.0)
        }
    });
    let spec = XsbSpec::new(case.eps, case.b);
    Ok((l2(&w), xsb_norm(u, &spec) * xsb_norm(v, &spec)))
}

/// ‖I_x^{1/6}e^{−t∂ₓΔ}u₀‖_{L⁶} over one period [0,Tt) (rectangle rule in t, 4Nt nodes; exact in
/// space by padding) and ‖J_y^{1/3}u₀‖_{L²}.
pub fn airy_sides(u0: &SpectralField<f64>, tt: f64, nt: usize) -> Result<(f64, f64)> {
    let g = u0.grid().with_pad(3.0)?;
    let u0 = SpectralField::new(g.clone(), u0.coeffs().to_vec())?;
    let w0 = u0.clone().map_modes(|xi, _, c| c.scale(xi.abs().powf(1.0 / 6.0)));
    let pad = Padded::new(&g, 5)?;
    let cell = g.area() / (pad.mx * pad.my) as f64;
    let nq = 4 * nt;
    let dt = tt / nq as f64;
    let mut acc = 0.0;
    for n in 0..nq {
        let v = pad.to_phys(&free_propagator(&w0, n as f64 * dt));
        acc += v.iter().map(|x| x.powi(6)).sum::<f64>() * cell * dt;
    }
    let rhs = (u0.clone().map_modes(|_, q, c| c.scale((1.0 + q * q).powf(1.0 / 6.0))).l2_sq()).sqrt();
    Ok((acc.powf(1.0 / 6.0), rhs))
}

fn random_spatial(g: &crate::spectral::GridSpec<f64>, profile: Profile, phases: Phases, seed: u64) -> SpectralField<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = SpectralField::zeros(g);
    let (hx, hy) = (g.nx() as i64 / 2 - 1, g.ny() as i64 / 2 - 1);
    for a in -hx..=hx {
        for b in 0..=hy {
            if b == 0 && a < 0 {
                continue;
            }
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let (xi, q) = (g.xi(g.ix(a).unwrap()), g.q(g.iy(b).unwrap()));
            let amp = profile.amplitude(3.0 * xi * xi + q * q);
            let half = if a == 0 && b == 0 { 0.5 } else { 1.0 };
            let c = match phases {
                Phases::NonNegative => Complex::new(re.abs() * amp * half, 0.0),
                Phases::Random if a == 0 && b == 0 => Complex::new(re * amp * half, 0.0),
                Phases::Random => Complex::new(re * amp, im * amp),
            };
            f.add_real_mode(a, b, c);
        }
    }
    f
}

/// One trial: (LHS, RHS).
pub fn trial_sides(case: &EstimateCase, g: &SpaceTimeGrid<f64>, profile: Profile, phases: Phases, seed: u64) -> Result<(f64, f64)> {
    let s1 = derive_seed(seed, 1, 0);
    let s2 = derive_seed(seed, 2, 0);
    match case.tag {
        EstimateTag::Mp31 => {
            let u = random_xsb_field_with(g, &XsbSpec::new(0.0, case.b1).with_jy(0.5 + case.eps), profile, phases, s1);
            let v = random_xsb_field_with(g, &XsbSpec::new(0.0, case.b2), profile, phases, s2);
            mp_sides(case, &u, &v)
        }
        EstimateTag::L4_32 => {
            let spec = XsbSpec::new(case.eps, case.b);
            let u = random_xsb_field_with(g, &spec, profile, phases, s1);
            Ok((spacetime_lebesgue_norm(&u, 4)?, xsb_norm(&u, &spec)))
        }
        EstimateTag::Bilin33 => {
            let spec = XsbSpec::new(case.eps, case.b);
            let u = random_xsb_field_with(g, &spec, profile, phases, s1);
            let v = random_xsb_field_with(g, &spec, profile, phases, s2);
            bilin_sides(case, &u, &v)
        }
        EstimateTag::AiryL6_37 => {
            let sg = make_grid(g.lx(), g.lambda(), g.nx(), g.ny(), 1.0)?;
            airy_sides(&random_spatial(&sg, profile, phases, s1), g.tt(), g.nt())
        }
    }
}

/// Sampled maxima of LHS/RHS per λ. Trials run in parallel; the reduction is in trial order.
pub fn estimate_ratio(case: &EstimateCase, lattice: &EstimateLattice, lambdas: &[f64], trials: usize, seed: u64) -> Result<RatioReport> {
    case.validate()?;
    if trials < MIN_TRIALS {
        return Err(GzkError::InvalidParameter(format!("at least {MIN_TRIALS} trials per λ (got {trials})")));
    }
    let mut per_lambda = Vec::with_capacity(lambdas.len());
    for (li, &lam) in lambdas.iter().enumerate() {
        let g = lattice.grid(lam)?;
        let sides = (0..trials)
            .into_par_iter()
            .map(|t| trial_sides(case, &g, lattice.profile, lattice.phases, derive_seed(seed, li as u64 + 1, t as u64)))
            .collect::<Result<Vec<_>>>()?;
        let mut running = Vec::new();
        let (mut best, mut sum, mut discarded) = (0.0f64, 0.0, 0);
        for (l, r) in sides {
            if !(r >= DEGENERATE_RHS) || !l.is_finite() {
                discarded += 1;
                continue;
            }
            let q = l / r;
            best = best.max(q);
            sum += q;
            running.push(best);
        }
        let accepted = running.len();
        per_lambda.push(LambdaRatio {
            lambda: lam,
            trials,
            discarded,
            max_ratio: best,
            mean_ratio: if accepted > 0 { sum / accepted as f64 } else { 0.0 },
            running_max: running,
        });
    }
    let maxima: Vec<f64> = per_lambda.iter().map(|p| p.max_ratio).filter(|m| *m > 0.0).collect();
    let spread = if maxima.is_empty() {
        f64::NAN
    } else {
        maxima.iter().cloned().fold(0.0, f64::max) / maxima.iter().cloned().fold(f64::INFINITY, f64::min)
    };
    Ok(RatioReport { case: *case, lattice: *lattice, seed, per_lambda, cross_lambda_spread: spread })
}
