//! Discretization of the cylinder, transforms, symbols and dealiased products.

mod field;
mod grid;
mod norms;
mod products;
pub mod snapshot;
mod symbols;
mod transform;

pub use field::{RealField, SpectralField};
pub use grid::{make_grid, GridSpec};
pub use norms::{grad_sq, sobolev_norm, sobolev_norm_sq};
pub use products::{dealiased_power, dealiased_power_spectral, dealiased_product};
pub(crate) use products::Padded;
pub use symbols::{
    apply_symbol, bessel, d_x, d_y, derivative, dilated_norm_sq, euclid_norm_sq, free_propagator, ipow, japanese,
    laplacian, phase, resonance_mzk, resonance_zk, riesz, riesz_symbol, riesz_x,
};
pub use transform::{dft_oracle, from_spectral, from_spectral_complex, to_spectral, DFT_ORACLE_MAX};
pub(crate) use transform::fft2;
