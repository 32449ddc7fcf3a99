use serde::Serialize;

use super::lattice::XsbSpec;
use super::ratio::{derive_seed, mp_sides, EstimateCase, EstimateLattice};
use super::sampler::{random_xsb_field_with, Profile};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShellProbeReport {
    pub lambda: f64,
    pub trials: usize,
    /// dilated-norm ranges
    pub low_shell: (f64, f64),
    pub high_shell: (f64, f64),
    /// mean MP ratio with u on the low shell and v on the high shell
    pub separated_ratio: f64,
    /// mean MP ratio with both factors on the high shell
    pub same_ratio: f64,
    pub gap: f64,
}

/// Compares the MP ratio for widely separated dilated shells with the ratio when both factors
/// share one shell, where the multiplier ||(ξ₁,q₁)|²−|(ξ₂,q₂)|²|^{1/2} is small.
pub fn shell_separation_probe(
    case: &EstimateCase,
    lattice: &EstimateLattice,
    lambda: f64,
    low_shell: (f64, f64),
    high_shell: (f64, f64),
    trials: usize,
    seed: u64,
) -> Result<ShellProbeReport> {
    let g = lattice.grid(lambda)?;
    let su = XsbSpec::new(0.0, case.b1).with_jy(0.5 + case.eps);
    let sv = XsbSpec::new(0.0, case.b2);
    let lo = Profile::FlatOnShells { inner: low_shell.0, outer: low_shell.1 };
    let hi = Profile::FlatOnShells { inner: high_shell.0, outer: high_shell.1 };
    let (mut sep, mut same) = (0.0, 0.0);
    for t in 0..trials as u64 {
        let (a, b) = (derive_seed(seed, t, 1), derive_seed(seed, t, 2));
        let v = random_xsb_field_with(&g, &sv, hi, lattice.phases, b);
        let (l, r) = mp_sides(case, &random_xsb_field_with(&g, &su, lo, lattice.phases, a), &v)?;
        sep += l / r;
        let (l, r) = mp_sides(case, &random_xsb_field_with(&g, &su, hi, lattice.phases, a), &v)?;
        same += l / r;
    }
    let n = trials as f64;
    let (sep, same) = (sep / n, same / n);
    Ok(ShellProbeReport { lambda, trials, low_shell, high_shell, separated_ratio: sep, same_ratio: same, gap: sep / same })
}
