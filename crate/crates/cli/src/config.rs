//! TOML configuration: defaults, `--set` overrides, aggregated validation.

use std::fmt;
use std::path::Path;

use gzk_core::dynamics::Sign;
use gzk_core::estimates::EstimateTag;
use gzk_core::imethod::{thresholds::Domain, Equation};
use gzk_core::Rational;
use serde::{Deserialize, Serialize};
use toml::{Table, Value};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    /// 0 = one worker per core
    pub threads: usize,
    /// configured assertions decide the exit status
    pub assert: bool,
    /// emit gnuplot scripts next to the CSVs
    pub plot: bool,
    pub grid: GridCfg,
    pub equation: EquationCfg,
    pub initial: InitialCfg,
    pub simulate: SimulateCfg,
    pub identities: IdentitiesCfg,
    pub imethod: ImethodCfg,
    pub estimates: EstimatesCfg,
    pub ground_state: GroundStateCfg,
    pub thresholds: ThresholdsCfg,
    pub gronwall: GronwallCfg,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridCfg {
    pub lx: f64,
    pub lambda: f64,
    pub nx: usize,
    pub ny: usize,
    pub pad: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EquationCfg {
    pub k: u32,
    pub sign: Sign,
    pub nonlinear: bool,
}

/// u₀ = amplitude·exp(−x²/width²)·(1 + y_modulation·cos y), centered in the box
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InitialCfg {
    pub amplitude: f64,
    pub width: f64,
    pub y_modulation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulateCfg {
    pub dt: f64,
    pub t_final: f64,
    pub sample_every: usize,
    pub sobolev_orders: Vec<f64>,
    /// relative mass/energy drift allowed when the run is unforced
    pub drift_tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IdentitiesCfg {
    pub dt: f64,
    pub delta: f64,
    pub s: f64,
    pub n: f64,
    pub growth_orders: Vec<u32>,
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ImethodCfg {
    pub s: f64,
    pub n_list: Vec<f64>,
    pub horizon: f64,
    pub dt: f64,
    pub assert_slope: bool,
    pub slope_max: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    Standard,
    ShellProbe,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EstimatesCfg {
    pub tag: EstimateTag,
    pub lattice: LatticeKind,
    pub lambdas: Vec<f64>,
    pub trials: usize,
    pub spread_max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GroundStateCfg {
    pub k: u32,
    pub n: usize,
    pub tol: f64,
    pub write_field: bool,
}

/// s and eps are exact: "9/10", "0.9" or "1"
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ThresholdsCfg {
    pub equation: Equation,
    pub domain: Domain,
    pub k: u32,
    pub s: String,
    pub eps: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GronwallCfg {
    pub k1: f64,
    pub eps: f64,
    pub a0: f64,
    pub m: usize,
    pub d: f64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 42,
            threads: 0,
            assert: true,
            plot: true,
            grid: GridCfg::default(),
            equation: EquationCfg::default(),
            initial: InitialCfg::default(),
            simulate: SimulateCfg::default(),
            identities: IdentitiesCfg::default(),
            imethod: ImethodCfg::default(),
            estimates: EstimatesCfg::default(),
            ground_state: GroundStateCfg::default(),
            thresholds: ThresholdsCfg::default(),
            gronwall: GronwallCfg::default(),
        }
    }
}

impl Default for GridCfg {
    fn default() -> Self {
        Self { lx: 8.0 * std::f64::consts::PI, lambda: 1.0, nx: 128, ny: 32, pad: 2.0 }
    }
}

impl Default for EquationCfg {
    fn default() -> Self {
        Self { k: 1, sign: Sign::Plus, nonlinear: true }
    }
}

impl Default for InitialCfg {
    fn default() -> Self {
        Self { amplitude: 0.8, width: 0.85, y_modulation: 0.5 }
    }
}

impl Default for SimulateCfg {
    fn default() -> Self {
        Self { dt: 1e-3, t_final: 1.0, sample_every: 10, sobolev_orders: vec![1.0, 2.0], drift_tol: 1e-8 }
    }
}

impl Default for IdentitiesCfg {
    fn default() -> Self {
        Self { dt: 2.5e-4, delta: 0.1, s: 0.9, n: 4.0, growth_orders: vec![2], tol: 1e-6 }
    }
}

impl Default for ImethodCfg {
    fn default() -> Self {
        Self {
            s: 0.9,
            n_list: (0..6).map(|i| 1.5f64.powi(i)).collect(),
            horizon: 1.0,
            dt: 1e-3,
            assert_slope: false,
            slope_max: -0.2,
        }
    }
}

impl Default for EstimatesCfg {
    fn default() -> Self {
        Self { tag: EstimateTag::Mp31, lattice: LatticeKind::Standard, lambdas: vec![1.0, 2.0, 4.0, 8.0], trials: 200, spread_max: 3.0 }
    }
}

impl Default for GroundStateCfg {
    fn default() -> Self {
        Self { k: 2, n: 256, tol: 1e-10, write_field: false }
    }
}

impl Default for ThresholdsCfg {
    fn default() -> Self {
        Self { equation: Equation::Zk, domain: Domain::Cylinder, k: 1, s: "9/10".into(), eps: "0".into() }
    }
}

impl Default for GronwallCfg {
    fn default() -> Self {
        Self { k1: 1.0, eps: 0.5, a0: 0.0, m: 100_000, d: 2.1 }
    }
}

/// Every offense found while loading, reported together.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub offenses: Vec<String>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "invalid configuration ({} problem{}):", self.offenses.len(), if self.offenses.len() == 1 { "" } else { "s" })?;
        for o in &self.offenses {
            writeln!(f, "  - {o}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigError {}

/// A key given both in the file and on the command line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Override {
    pub key: String,
    pub file: Option<String>,
    pub flag: String,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub config: Config,
    pub overrides: Vec<Override>,
}

/// Exact rational from "p/q", a decimal, or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let bad = || format!("not an exact number: {s:?}");
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = t.strip_prefix('-').map_or((false, t), |b| (true, b));
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return Err(bad());
    }
    let den = 10i64.pow(frac.len() as u32);
    let num = format!("{int}{frac}").parse::<i64>().map_err(|_| bad())?;
    Ok(Rational::new(if neg { -num } else { num }, den))
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::String(_) => "string",
        Value::Integer(_) => "integer",
        Value::Float(_) => "float",
        Value::Boolean(_) => "boolean",
        Value::Datetime(_) => "datetime",
        Value::Array(_) => "array",
        Value::Table(_) => "table",
    }
}

/// unknown keys and type mismatches against the default tree
fn check_shape(user: &Table, defaults: &Table, prefix: &str, out: &mut Vec<String>) {
    for (k, v) in user {
        let path = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match defaults.get(k) {
            None => out.push(format!("unknown key `{path}`")),
            Some(Value::Table(d)) => match v {
                Value::Table(u) => check_shape(u, d, &path, out),
                _ => out.push(format!("`{path}` must be a table")),
            },
            Some(d) => {
                let ok = kind(d) == kind(v) || matches!((d, v), (Value::Float(_), Value::Integer(_)));
                if !ok {
                    out.push(format!("`{path}` must be {} (got {})", kind(d), kind(v)));
                }
            }
        }
    }
}

/// integers are accepted where floats are expected
fn coerce(user: &mut Table, defaults: &Table) {
    for (k, v) in user.iter_mut() {
        match (defaults.get(k), &mut *v) {
            (Some(Value::Table(d)), Value::Table(u)) => coerce(u, d),
            (Some(Value::Float(_)), Value::Integer(i)) => {
                let f = *i as f64;
                *v = Value::Float(f)
            }
            (Some(Value::Array(d)), Value::Array(a)) if matches!(d.first(), Some(Value::Float(_))) => {
                for x in a.iter_mut() {
                    if let Value::Integer(i) = x {
                        *x = Value::Float(*i as f64);
                    }
                }
            }
            _ => {}
        }
    }
}

fn lookup<'a>(t: &'a Table, path: &[&str]) -> Option<&'a Value> {
    let (last, head) = path.split_last()?;
    let mut cur = t;
    for p in head {
        cur = cur.get(*p)?.as_table()?;
    }
    cur.get(*last)
}

fn insert(t: &mut Table, path: &[&str], v: Value) -> Result<(), String> {
    let (last, head) = path.split_last().ok_or("empty key")?;
    let mut cur = t;
    for p in head {
        let e = cur.entry(p.to_string()).or_insert_with(|| Value::Table(Table::new()));
        cur = e.as_table_mut().ok_or_else(|| format!("`{p}` is not a table"))?;
    }
    cur.insert(last.to_string(), v);
    Ok(())
}

/// `key=value`; the value is read as TOML and falls back to a bare string.
fn parse_override(s: &str) -> Result<(String, Value), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("override {s:?} is not key=value"))?;
    let (k, v) = (k.trim(), v.trim());
    if k.is_empty() || k.split('.').any(str::is_empty) {
        return Err(format!("override {s:?} has an empty key"));
    }
    let val = toml::from_str::<Table>(&format!("v = {v}")).ok().and_then(|mut t| t.remove("v")).unwrap_or_else(|| Value::String(v.into()));
    Ok((k.to_string(), val))
}

impl Config {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        Ok(load_str(text, &[])?.config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    /// Range rules; all offenses are returned.
    pub fn validate(&self) -> Vec<String> {
        let mut e = Vec::new();
        let mut need = |ok: bool, msg: String| {
            if !ok {
                e.push(msg);
            }
        };
        let g = &self.grid;
        need(g.lx > 0.0 && g.lx.is_finite(), format!("grid.lx must be positive (got {})", g.lx));
        need(g.lambda >= 1.0 && g.lambda.is_finite(), format!("grid.lambda must be >= 1 (got {})", g.lambda));
        need(g.nx >= 4 && g.nx.is_multiple_of(2), format!("grid.nx must be even and >= 4 (got {})", g.nx));
        need(g.ny >= 4 && g.ny.is_multiple_of(2), format!("grid.ny must be even and >= 4 (got {})", g.ny));
        let need_pad = (self.equation.k as f64 + 2.0) / 2.0;
        need(g.pad >= need_pad, format!("grid.pad must be >= (k+2)/2 = {need_pad} (got {})", g.pad));
        need(self.equation.k >= 1, "equation.k must be >= 1".into());
        need(self.initial.width > 0.0, format!("initial.width must be positive (got {})", self.initial.width));
        need(self.initial.amplitude.is_finite(), "initial.amplitude must be finite".into());
        let s = &self.simulate;
        need(s.dt > 0.0, format!("simulate.dt must be positive (got {})", s.dt));
        need(s.t_final > 0.0, format!("simulate.t_final must be positive (got {})", s.t_final));
        need(s.sample_every >= 1, "simulate.sample_every must be >= 1".into());
        need(s.drift_tol > 0.0, "simulate.drift_tol must be positive".into());
        need(s.sobolev_orders.iter().all(|v| *v >= 0.0), "simulate.sobolev_orders must be >= 0".into());
        let i = &self.identities;
        need(i.dt > 0.0 && i.delta > 0.0, "identities.dt and identities.delta must be positive".into());
        need(i.s > 0.0 && i.s < 1.0, format!("identities.s: s<1 required for the I-method (got {})", i.s));
        need(i.n >= 1.0, format!("identities.n must be >= 1 (got {})", i.n));
        need(self.equation.k <= 2, format!("verify-identities covers k in {{1,2}} (equation.k = {})", self.equation.k));
        need(
            i.growth_orders.iter().all(|s| *s >= 2 && s % 2 == 0),
            format!("identities.growth_orders must be even and >= 2 (got {:?})", i.growth_orders),
        );
        need(i.tol > 0.0, "identities.tol must be positive".into());
        let m = &self.imethod;
        need(m.s > 0.0 && m.s < 1.0, format!("imethod.s: s<1 required for the I-method (got {})", m.s));
        need(m.n_list.len() >= 4, format!("imethod.n_list needs at least 4 values (got {})", m.n_list.len()));
        need(m.n_list.iter().all(|n| *n >= 1.0), "imethod.n_list values must be >= 1".into());
        need(m.horizon > 0.0 && m.dt > 0.0, "imethod.horizon and imethod.dt must be positive".into());
        let es = &self.estimates;
        need(!es.lambdas.is_empty(), "estimates.lambdas must not be empty".into());
        need(es.lambdas.iter().all(|l| *l >= 1.0 && l.fract() == 0.0), format!("estimates.lambdas must be positive integers (got {:?})", es.lambdas));
        need(es.trials >= gzk_core::estimates::MIN_TRIALS, format!("estimates.trials must be >= {}", gzk_core::estimates::MIN_TRIALS));
        need(es.spread_max >= 1.0, "estimates.spread_max must be >= 1".into());
        let gs = &self.ground_state;
        need(gs.k == 1 || gs.k == 2, format!("ground_state.k must be 1 or 2 (got {})", gs.k));
        need(gs.n >= 16 && gs.n.is_multiple_of(2), format!("ground_state.n must be even and >= 16 (got {})", gs.n));
        need(gs.tol > 0.0, "ground_state.tol must be positive".into());
        let t = &self.thresholds;
        need(t.k >= 1, "thresholds.k must be >= 1".into());
        if let Err(m) = parse_rational(&t.s) {
            need(false, format!("thresholds.s: {m}"));
        }
        match parse_rational(&t.eps) {
            Ok(v) => need(v >= Rational::from_integer(0) && v < Rational::new(1, 4), format!("thresholds.eps must lie in [0, 1/4) (got {})", t.eps)),
            Err(m) => need(false, format!("thresholds.eps: {m}")),
        }
        need(!(t.equation == Equation::Zk && t.domain == Domain::Plane), "thresholds: ZK is only treated on the cylinder".into());
        let gr = &self.gronwall;
        need(gr.k1 > 0.0, "gronwall.k1 must be positive".into());
        need(gr.eps > 0.0 && gr.eps < 1.0, format!("gronwall.eps must lie in (0,1) (got {})", gr.eps));
        need(gr.a0 >= 0.0, "gronwall.a0 must be >= 0".into());
        need(gr.m >= 10, "gronwall.m must be >= 10".into());
        need(gr.d > 0.0, "gronwall.d must be positive".into());
        e
    }
}

fn default_tree() -> Table {
    match Value::try_from(Config::default()).expect("defaults serialize") {
        Value::Table(t) => t,
        _ => unreachable!("a struct serializes to a table"),
    }
}

/// File text plus `key=value` overrides (flags win) → validated configuration.
pub fn load_str(text: &str, overrides: &[String]) -> Result<Loaded, ConfigError> {
    let mut offenses = Vec::new();
    let mut user: Table = match toml::from_str(text) {
        Ok(t) => t,
        Err(e) => return Err(ConfigError { offenses: vec![format!("syntax: {}", e.message())] }),
    };
    let file_tree = user.clone();
    let mut recorded = Vec::new();
    for o in overrides {
        match parse_override(o) {
            Ok((k, v)) => {
                let path: Vec<&str> = k.split('.').collect();
                let file = lookup(&file_tree, &path).map(|v| v.to_string());
                if let Err(m) = insert(&mut user, &path, v.clone()) {
                    offenses.push(format!("override `{k}`: {m}"));
                }
                recorded.retain(|r: &Override| r.key != k);
                recorded.push(Override { key: k, file, flag: v.to_string() });
            }
            Err(m) => offenses.push(m),
        }
    }
    let defaults = default_tree();
    check_shape(&user, &defaults, "", &mut offenses);
    if !offenses.is_empty() {
        return Err(ConfigError { offenses });
    }
    coerce(&mut user, &defaults);
    let config: Config = match Value::Table(user).try_into() {
        Ok(c) => c,
        Err(e) => return Err(ConfigError { offenses: vec![e.to_string().trim().to_string()] }),
    };
    let range = config.validate();
    if !range.is_empty() {
        return Err(ConfigError { offenses: range });
    }
    Ok(Loaded { config, overrides: recorded })
}

pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Loaded, ConfigError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| ConfigError { offenses: vec![format!("cannot read {}: {e}", p.display())] })?,
        None => String::new(),
    };
    load_str(&text, overrides)
}
