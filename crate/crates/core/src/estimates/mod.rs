//! Discrete Bourgain-space norms and Monte-Carlo sampling of Strichartz-type ratios.

mod lattice;
mod mp;
mod ratio;
mod sampler;
mod shells;

pub use lattice::{
    spacetime_from_samples, spacetime_lebesgue_norm, spacetime_samples, xsb_norm, SpaceTimeField, SpaceTimeGrid, XsbSpec,
};
pub use mp::{mp_output_grid, mp_spacetime, mp_spacetime_oracle, spacetime_product, MP_BUDGET, MP_ORACLE_MAX};
pub use ratio::{
    airy_sides, derive_seed, estimate_ratio, mp_sides, trial_sides, EstimateCase, EstimateLattice, EstimateTag, LambdaRatio,
    RatioReport, DEGENERATE_RHS, MIN_TRIALS,
};
pub use sampler::{random_xsb_field, random_xsb_field_with, Phases, Profile, MODULATION_EXCESS};
pub use shells::{shell_separation_probe, ShellProbeReport};
