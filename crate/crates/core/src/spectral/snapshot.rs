//! `GZKF` binary snapshots: magic, version u32, Nx u32, Ny u32, Lx f64, lambda f64,
//! flag u8 (0 real, 1 spectral), then little-endian f64 data (spectral: re,im pairs).

use std::io::{Read, Write};

use num_complex::Complex;

use super::field::{RealField, SpectralField};
use super::grid::GridSpec;
use crate::error::{GzkError, Result};

pub const MAGIC: &[u8; 4] = b"GZKF";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub enum Snapshot {
    Real(RealField<f64>),
    Spectral(SpectralField<f64>),
}

fn header(w: &mut impl Write, g: &GridSpec<f64>, flag: u8) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(g.nx() as u32).to_le_bytes())?;
    w.write_all(&(g.ny() as u32).to_le_bytes())?;
    w.write_all(&g.lx().to_le_bytes())?;
    w.write_all(&g.lambda().to_le_bytes())?;
    w.write_all(&[flag])?;
    Ok(())
}

pub fn write_real(w: &mut impl Write, u: &RealField<f64>) -> Result<()> {
    header(w, u.grid(), 0)?;
    for v in u.samples() {
        w.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

pub fn write_spectral(w: &mut impl Write, f: &SpectralField<f64>) -> Result<()> {
    header(w, f.grid(), 1)?;
    for c in f.coeffs() {
        w.write_all(&c.re.to_le_bytes())?;
        w.write_all(&c.im.to_le_bytes())?;
    }
    Ok(())
}

fn u32_of(r: &mut impl Read) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn f64_of(r: &mut impl Read) -> Result<f64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(f64::from_le_bytes(b))
}

/// Reads a snapshot. The pad factor is not stored; the caller's `pad_factor` is applied.
pub fn read(r: &mut impl Read, pad_factor: f64) -> Result<Snapshot> {
    let mut m = [0u8; 4];
    r.read_exact(&mut m)?;
    if &m != MAGIC {
        return Err(GzkError::Format("bad magic".into()));
    }
    let v = u32_of(r)?;
    if v != VERSION {
        return Err(GzkError::Format(format!("unsupported version {v}")));
    }
    let nx = u32_of(r)? as usize;
    let ny = u32_of(r)? as usize;
    let lx = f64_of(r)?;
    let lambda = f64_of(r)?;
    let mut flag = [0u8; 1];
    r.read_exact(&mut flag)?;
    let g = GridSpec::new(lx, lambda, nx, ny, pad_factor)?;
    match flag[0] {
        0 => {
            let v = (0..nx * ny).map(|_| f64_of(r)).collect::<Result<Vec<_>>>()?;
            Ok(Snapshot::Real(RealField::new(g, v)?))
        }
        1 => {
            let v = (0..nx * ny)
                .map(|_| Ok(Complex::new(f64_of(r)?, f64_of(r)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Snapshot::Spectral(SpectralField::new(g, v)?))
        }
        f => Err(GzkError::Format(format!("unknown flag {f}"))),
    }
}
