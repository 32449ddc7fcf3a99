use thiserror::Error;

#[derive(Debug, Error)]
pub enum GzkError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("size mismatch: expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("grid {nx}x{ny} exceeds the cost guard of {limit}")]
    Oversize { nx: usize, ny: usize, limit: String },
    #[error("pad_factor {actual} too small for a degree-{degree} product: need at least {required}")]
    InsufficientPadding { degree: usize, required: f64, actual: f64 },
    #[error("homogeneous norm of negative order needs a mean-zero field")]
    NotMeanZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("step size {dt} violates the stability guard (limit {limit}) at t = {t}")]
    StabilityGuard { dt: f64, limit: f64, t: f64 },
    #[error("solution became non-finite at t = {t}")]
    BlowUp { t: f64 },
    #[error("time {0} is not a sampled time of the trajectory")]
    UnsampledTime(f64),
    #[error("need at least {needed} snapshots in the window, found {found}")]
    TooFewSnapshots { needed: usize, found: usize },
    #[error("{what} requires s above the threshold {threshold}")]
    BelowThreshold { what: String, threshold: String },
    #[error("iteration did not converge after {iterations} iterations (last residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("overflow at iteration {0}")]
    Overflow(usize),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GzkError>;
