//! Configuration, dispatch and persistence for the `gzk` command-line tool.

pub mod commands;
pub mod config;
pub mod output;
pub mod plot;

use std::path::Path;

use anyhow::Result;

use config::Loaded;
use output::{now, Assertion, OutputDir, RunManifest};

/// Outcome of one subcommand run.
#[derive(Debug)]
pub struct RunOutcome {
    pub manifest: RunManifest,
    pub failures: Vec<Assertion>,
}

/// Runs `command` into `out_dir`, writes the echoed config, the reports and the manifest.
/// Failing assertions are collected (and written to `failures.json`) only when enabled.
pub fn execute(command: &str, loaded: &Loaded, out_dir: &Path) -> Result<RunOutcome> {
    let cfg = &loaded.config;
    let started = now();
    let mut out = OutputDir::open(out_dir)?;
    out.write("config.toml", cfg.to_toml().as_bytes())?;
    let assertions = commands::run(command, cfg, &mut out)?;
    let failures: Vec<Assertion> = if cfg.assert { assertions.iter().filter(|a| !a.pass).cloned().collect() } else { Vec::new() };
    if !failures.is_empty() {
        out.write_json("failures.json", &failures)?;
    }
    let manifest = RunManifest {
        command: command.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        seed: cfg.seed,
        grid: cfg.grid.clone(),
        equation: cfg.equation.clone(),
        config: cfg.clone(),
        overrides: loaded.overrides.clone(),
        started,
        finished: now(),
        assertions_enabled: cfg.assert,
        assertions,
        files: out.files().to_vec(),
    };
    let mut m = serde_json::to_string_pretty(&manifest)?;
    m.push('\n');
    std::fs::write(out.root().join("manifest.json"), m)?;
    Ok(RunOutcome { manifest, failures })
}
