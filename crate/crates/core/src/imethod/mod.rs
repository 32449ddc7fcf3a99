//! I-operator, modified energy, increment identity, scaling and closed-form calculators.

mod energy;
mod gronwall;
mod multiplier;
mod scaling;
mod sweep;
pub mod thresholds;

pub use energy::{commutator_integrand, increment_commutator, increment_direct, modified_energy};
pub use gronwall::{gronwall_check, GronwallReport};
pub use multiplier::{apply_in, i_multiplier_value, smoothstep, IMultiplierSpec};
pub use scaling::{lambda_choice, scaling_checks, Equation, ScalingReport};
pub use sweep::{decay_sweep, DecayPoint, DecayReport};
pub use thresholds::{alpha_growth, theta_interpolation, thresholds, Domain, ThresholdReport};
