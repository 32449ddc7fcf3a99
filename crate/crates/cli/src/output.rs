//! Output directory ownership, hashed file inventory and the run manifest.

use std::fs::{self, File, OpenOptions};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::{Config, Override};

/// environment variable naming the default output root
pub const OUT_ROOT_ENV: &str = "GZK_OUT_ROOT";

const LOCK: &str = ".gzk.lock";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FileEntry {
    pub path: String,
    pub bytes: usize,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Assertion {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub tool_version: String,
    pub seed: u64,
    pub grid: crate::config::GridCfg,
    pub equation: crate::config::EquationCfg,
    pub config: Config,
    pub overrides: Vec<Override>,
    pub started: String,
    pub finished: String,
    pub assertions_enabled: bool,
    pub assertions: Vec<Assertion>,
    pub files: Vec<FileEntry>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// `--out-dir`, else `$GZK_OUT_ROOT/<command>`, else `gzk-out/<command>`.
pub fn resolve_out_dir(flag: Option<&Path>, command: &str) -> PathBuf {
    match flag {
        Some(p) => p.to_path_buf(),
        None => std::env::var_os(OUT_ROOT_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("gzk-out")).join(command),
    }
}

/// Exclusive handle on an output directory; every file written through it is hashed.
pub struct OutputDir {
    root: PathBuf,
    files: Vec<FileEntry>,
    _lock: File,
}

impl OutputDir {
    pub fn open(root: &Path) -> Result<Self> {
        fs::create_dir_all(root).with_context(|| format!("creating {}", root.display()))?;
        let lock = match OpenOptions::new().write(true).create_new(true).open(root.join(LOCK)) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                bail!("{} is in use by another run (remove {LOCK} if that run died)", root.display())
            }
            Err(e) => return Err(e).with_context(|| format!("locking {}", root.display())),
        };
        Ok(Self { root: root.to_path_buf(), files: Vec::new(), _lock: lock })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        fs::write(self.root.join(name), bytes).with_context(|| format!("writing {name}"))?;
        self.files.retain(|f| f.path != name);
        self.files.push(FileEntry { path: name.into(), bytes: bytes.len(), sha256: sha256_hex(bytes) });
        Ok(())
    }

    pub fn write_json(&mut self, name: &str, v: &impl Serialize) -> Result<()> {
        let mut s = serde_json::to_string_pretty(v)?;
        s.push('\n');
        self.write(name, s.as_bytes())
    }

    pub fn files(&self) -> &[FileEntry] {
        &self.files
    }
}

impl Drop for OutputDir {
    fn drop(&mut self) {
        let _ = fs::remove_file(self.root.join(LOCK));
    }
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}
