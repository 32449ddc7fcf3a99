//! Time integration: exact free group plus dealiased nonlinearity in a Lawson RK4 step.

mod equation;
mod forcing;
mod scaling;
mod simulate;
mod stepper;

pub use equation::{nonlinear_term, EquationSpec, Sign};
pub use forcing::{manufactured_forcing, Forcing, ManufacturedForcing, SeparableTarget, Target};
pub use scaling::rescale_initial;
pub(crate) use scaling::integer_lambda;
pub use simulate::{fmt17, simulate, simulate_with, DiagnosticRecord, DiagnosticsSpec, Trajectory};
pub use stepper::{stability_limit, step, Scheme, Stepper, StepperConfig};
