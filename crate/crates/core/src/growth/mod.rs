//! Leibniz expansions, frequency-restricted products and Ḣ^s growth identities.

mod identity;
mod leibniz;
mod projectors;
mod tracking;

pub use identity::{growth_identity_residual, growth_rate, GrowthIdentityReport};
pub use leibniz::{growth_terms, leibniz_expansion, LeibnizExpansion, LeibnizTerm, MultiIndex};
pub use projectors::{indicator_identity_check, pr_product, pr_products, PrSelector, PR_MAX_MODES, PR_RATIO};
pub use tracking::{track_norm_growth, GrowthReport, NormSeries, FIT_BAND_SIGMAS};
