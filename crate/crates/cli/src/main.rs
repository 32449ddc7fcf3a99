use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gzk_cli::config::load;
use gzk_cli::output::resolve_out_dir;

/// Experiments for the generalized Zakharov–Kuznetsov equation.
#[derive(Parser, Debug)]
#[command(name = "gzk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// output directory (default: $GZK_OUT_ROOT/<command>, else gzk-out/<command>)
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// worker threads (0 = all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// make configured assertions decide the exit status
    #[arg(long, global = true, overrides_with = "no_assert")]
    assert: bool,
    #[arg(long, global = true, overrides_with = "assert")]
    no_assert: bool,
    /// override a config key, e.g. --set grid.nx=64 (repeatable; wins over the file)
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    Simulate,
    VerifyIdentities,
    ImethodSweep,
    SampleEstimates,
    GroundState,
    Thresholds,
    Gronwall,
    /// print the validated configuration with all defaults and exit
    ShowConfig,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Simulate => "simulate",
            Command::VerifyIdentities => "verify-identities",
            Command::ImethodSweep => "imethod-sweep",
            Command::SampleEstimates => "sample-estimates",
            Command::GroundState => "ground-state",
            Command::Thresholds => "thresholds",
            Command::Gronwall => "gronwall",
            Command::ShowConfig => "show-config",
        }
    }
}

const EXIT_ERROR: u8 = 1;
const EXIT_ASSERT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sets = Vec::new();
    if let Some(s) = cli.seed {
        sets.push(format!("seed={s}"));
    }
    if let Some(t) = cli.threads {
        sets.push(format!("threads={t}"));
    }
    if cli.assert {
        sets.push("assert=true".into());
    }
    if cli.no_assert {
        sets.push("assert=false".into());
    }
    sets.extend(cli.set.iter().cloned());
    let loaded = match load(cli.config.as_deref(), &sets) {
        Ok(l) => l,
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let name = cli.command.name();
    if let Command::ShowConfig = cli.command {
        print!("{}", loaded.config.to_toml());
        return ExitCode::SUCCESS;
    }
    if loaded.config.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(loaded.config.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    let dir = resolve_out_dir(cli.out_dir.as_deref(), name);
    match gzk_cli::execute(name, &loaded, &dir) {
        Ok(r) if r.failures.is_empty() => {
            println!("{name}: ok ({} files in {})", r.manifest.files.len(), dir.display());
            ExitCode::SUCCESS
        }
        Ok(r) => {
            eprintln!("{}", serde_json::to_string(&r.failures).unwrap_or_default());
            ExitCode::from(EXIT_ASSERT)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
