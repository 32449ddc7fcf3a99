//! Mass, energy, Gagliardo–Nirenberg machinery and the ground state.

mod conserved;
mod gn;
mod ground_state;

pub use conserved::{energy, energy_of, mass, mass_of, power_integral, quadratic_energy};
pub use gn::{abs_power_integral, gn_defect, weinstein_constant};
pub use ground_state::{ground_state, ground_state_grid, pohozaev_residuals, GroundState, GroundStateSummary};
