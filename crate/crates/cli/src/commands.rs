//! Subcommand pipelines. Each writes its reports through an [`OutputDir`] and returns the
//! configured assertions; result files never contain timestamps.

use std::fmt::Write as _;

use anyhow::{anyhow, Result};
use gzk_core::dynamics::{fmt17, simulate_with, DiagnosticsSpec, EquationSpec, StepperConfig, Trajectory};
use gzk_core::estimates::{estimate_ratio, EstimateCase, EstimateLattice};
use gzk_core::growth::{growth_identity_residual, track_norm_growth};
use gzk_core::imethod::thresholds::ThresholdReport;
use gzk_core::imethod::{decay_sweep, gronwall_check, increment_commutator, increment_direct, thresholds, IMultiplierSpec};
use gzk_core::invariants::{ground_state, ground_state_grid, pohozaev_residuals, weinstein_constant};
use gzk_core::spectral::{make_grid, to_spectral, RealField, SpectralField};
use gzk_core::Rational;
use serde_json::json;

use crate::config::{parse_rational, Config, LatticeKind};
use crate::output::{Assertion, OutputDir};
use crate::plot::{emit_plot_script, ReportKind};

pub const COMMANDS: [&str; 7] = ["simulate", "verify-identities", "imethod-sweep", "sample-estimates", "ground-state", "thresholds", "gronwall"];

pub fn run(name: &str, cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    match name {
        "simulate" => simulate(cfg, out),
        "verify-identities" => verify_identities(cfg, out),
        "imethod-sweep" => imethod_sweep(cfg, out),
        "sample-estimates" => sample_estimates(cfg, out),
        "ground-state" => ground(cfg, out),
        "thresholds" => closed_forms(cfg, out),
        "gronwall" => gronwall(cfg, out),
        other => Err(anyhow!("unknown subcommand {other:?}")),
    }
}

fn equation(cfg: &Config) -> Result<EquationSpec> {
    let e = &cfg.equation;
    let spec = if e.nonlinear { EquationSpec::new(e.k, e.sign)? } else { EquationSpec::free(e.k, e.sign)? };
    Ok(spec)
}

fn initial_data(cfg: &Config) -> Result<SpectralField<f64>> {
    let g = &cfg.grid;
    let grid = make_grid(g.lx, g.lambda, g.nx, g.ny, g.pad)?;
    let i = &cfg.initial;
    let u = RealField::from_fn_centered(&grid, |x, y| i.amplitude * (-(x * x) / (i.width * i.width)).exp() * (1.0 + i.y_modulation * y.cos()))?;
    Ok(to_spectral(&u).project_band())
}

fn plot(cfg: &Config, out: &mut OutputDir, kind: ReportKind, csv_name: &str, csv: &str, slope: Option<f64>) -> Result<()> {
    if cfg.plot {
        let script = emit_plot_script(kind, csv_name, csv, slope)?;
        out.write(&format!("{}.gp", csv_name.trim_end_matches(".csv")), script.as_bytes())?;
    }
    Ok(())
}

fn max_rel_drift(tr: &Trajectory<f64>, f: impl Fn(&gzk_core::dynamics::DiagnosticRecord<f64>) -> f64) -> f64 {
    let v0 = f(&tr.diagnostics[0]);
    tr.diagnostics.iter().map(|d| (f(d) - v0).abs() / v0.abs().max(f64::MIN_POSITIVE)).fold(0.0, f64::max)
}

fn simulate(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let s = &cfg.simulate;
    let eq = equation(cfg)?;
    let u0 = initial_data(cfg)?;
    let diag = DiagnosticsSpec { sobolev_orders: s.sobolev_orders.clone(), ..Default::default() };
    let tr = simulate_with(&u0, &eq, &StepperConfig::new(s.dt).sample_every(s.sample_every), s.t_final, None, &diag)?;
    let mut csv = Vec::new();
    tr.write_csv(&mut csv)?;
    out.write("trajectory.csv", &csv)?;
    plot(cfg, out, ReportKind::Trajectory, "trajectory.csv", std::str::from_utf8(&csv)?, None)?;

    let zero = u0.max_abs() == 0.0;
    let dm = if zero { 0.0 } else { max_rel_drift(&tr, |d| d.mass) };
    let de = if zero { 0.0 } else { max_rel_drift(&tr, |d| d.energy) };
    let mut summary = json!({ "steps_dt": tr.dt, "samples": tr.len(), "mass_drift": dm, "energy_drift": de });
    if !s.sobolev_orders.is_empty() {
        let rep = track_norm_growth(&tr, &s.sobolev_orders)?;
        let mut g = String::from("t");
        for ser in &rep.series {
            let _ = write!(g, ",hs_{}", ser.s);
            if ser.alpha_reference.is_some() {
                let _ = write!(g, ",ref_{}", ser.s);
            }
        }
        g.push('\n');
        for (i, t) in rep.series[0].times.iter().enumerate() {
            g.push_str(&fmt17(*t));
            for ser in &rep.series {
                let _ = write!(g, ",{}", fmt17(ser.norms[i]));
                if let Some(a) = ser.alpha_reference {
                    let _ = write!(g, ",{}", fmt17(ser.norms[0] * (1.0 + t).powf(a)));
                }
            }
            g.push('\n');
        }
        out.write("growth.csv", g.as_bytes())?;
        plot(cfg, out, ReportKind::Growth, "growth.csv", &g, None)?;
        summary["growth"] = serde_json::to_value(
            rep.series.iter().map(|s| json!({ "s": s.s, "fit": s.fit, "fit_band": s.fit_band, "alpha_reference": s.alpha_reference, "within_reference": s.within_reference })).collect::<Vec<_>>(),
        )?;
    }
    out.write_json("summary.json", &summary)?;
    Ok(vec![
        Assertion::new("mass_drift", dm <= s.drift_tol, format!("{dm:e} <= {:e}", s.drift_tol)),
        Assertion::new("energy_drift", de <= s.drift_tol, format!("{de:e} <= {:e}", s.drift_tol)),
    ])
}

fn verify_identities(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let c = &cfg.identities;
    let eq = equation(cfg)?;
    let u0 = initial_data(cfg)?;
    let tr = simulate_with(&u0, &eq, &StepperConfig::new(c.dt), c.delta, None, &DiagnosticsSpec::default())?;
    let sp = IMultiplierSpec::new(c.n, c.s)?;
    let direct = increment_direct(&tr, &sp, &eq, 0.0, c.delta)?;
    let comm = increment_commutator(&tr, &sp, &eq, 0.0, c.delta)?;
    let dev = (direct - comm).abs();
    let mut asserts = vec![Assertion::new(
        "increment_identity",
        dev <= c.tol * (1.0 + direct.abs()),
        format!("|{direct:e} - {comm:e}| = {dev:e} <= {:e}·(1+|direct|)", c.tol),
    )];
    let mut growth = Vec::new();
    for &s in &c.growth_orders {
        let r = growth_identity_residual(&tr, s, &eq, c.delta)?;
        asserts.push(Assertion::new(
            format!("growth_identity_s{s}"),
            r.residual <= c.tol * (1.0 + r.lhs.abs()),
            format!("residual {:e}, lhs {:e}", r.residual, r.lhs),
        ));
        growth.push(r);
    }
    out.write_json(
        "identities.json",
        &json!({
            "snapshots": tr.len(),
            "increment": { "n": c.n, "s": c.s, "direct": direct, "commutator": comm, "difference": dev },
            "growth": growth,
        }),
    )?;
    Ok(asserts)
}

fn imethod_sweep(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let m = &cfg.imethod;
    let eq = equation(cfg)?;
    let u0 = initial_data(cfg)?;
    let rep = decay_sweep(&u0, &eq, m.s, &m.n_list, &StepperConfig::new(m.dt).sample_every(10), m.horizon)?;
    let mut csv = String::from("n,increment,resolved\n");
    for p in &rep.points {
        let _ = writeln!(csv, "{},{},{}", fmt17(p.n), fmt17(p.increment), u8::from(p.resolved));
    }
    out.write("decay.csv", csv.as_bytes())?;
    out.write_json("decay.json", &rep)?;
    plot(cfg, out, ReportKind::DecaySweep, "decay.csv", &csv, rep.slope)?;
    let mut a = Vec::new();
    if m.assert_slope {
        let pass = rep.slope.is_some_and(|s| s <= m.slope_max);
        a.push(Assertion::new("decay_slope", pass, format!("slope {:?} <= {}", rep.slope, m.slope_max)));
    }
    Ok(a)
}

fn sample_estimates(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let e = &cfg.estimates;
    let lattice = match e.lattice {
        LatticeKind::Standard => EstimateLattice::standard(),
        LatticeKind::ShellProbe => EstimateLattice::shell_probe(),
    };
    let rep = estimate_ratio(&EstimateCase::new(e.tag), &lattice, &e.lambdas, e.trials, cfg.seed)?;
    let mut csv = String::from("lambda,trials,discarded,max_ratio,mean_ratio\n");
    for l in &rep.per_lambda {
        let _ = writeln!(csv, "{},{},{},{},{}", fmt17(l.lambda), l.trials, l.discarded, fmt17(l.max_ratio), fmt17(l.mean_ratio));
    }
    out.write("ratios.csv", csv.as_bytes())?;
    out.write_json("ratios.json", &rep)?;
    Ok(vec![Assertion::new(
        "cross_lambda_spread",
        rep.cross_lambda_spread <= e.spread_max,
        format!("{} <= {}", rep.cross_lambda_spread, e.spread_max),
    )])
}

fn ground(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let c = &cfg.ground_state;
    let grid = ground_state_grid::<f64>(c.n)?;
    let q = ground_state(c.k, &grid, c.tol)?;
    let summary = q.summary(c.tol)?;
    let (r1, r2) = pohozaev_residuals(&q.field, c.k)?;
    let w = weinstein_constant(c.k, q.l2_norm)?;
    out.write_json("ground_state.json", &json!({ "summary": summary, "weinstein_constant": w, "grid_n": c.n }))?;
    if c.write_field {
        let mut csv = String::from("i,j,q\n");
        for i in 0..grid.nx() {
            for j in 0..grid.ny() {
                let _ = writeln!(csv, "{i},{j},{}", fmt17(q.field.at(i, j)));
            }
        }
        out.write("field.csv", csv.as_bytes())?;
    }
    Ok(vec![
        Assertion::new("pde_residual", q.residual_pde <= 10.0 * c.tol, format!("{:e} <= {:e}", q.residual_pde, 10.0 * c.tol)),
        Assertion::new("pohozaev", r1.abs() <= 1e-6 && r2.abs() <= 1e-6, format!("({r1:e}, {r2:e}) within 1e-6")),
    ])
}

fn exact(v: &Rational) -> serde_json::Value {
    json!({ "exact": v.to_string(), "value": *v.numer() as f64 / *v.denom() as f64 })
}

fn report_json(r: &ThresholdReport<Rational>) -> serde_json::Value {
    let opt = |v: &Option<Rational>| v.as_ref().map(exact).unwrap_or(serde_json::Value::Null);
    json!({
        "equation": r.equation,
        "domain": r.domain,
        "k": r.k,
        "s": exact(&r.s),
        "epsilon_tilde": exact(&r.epsilon_tilde),
        "gwp_threshold": exact(&r.gwp_threshold),
        "gwp_threshold_eps": exact(&r.gwp_threshold_eps),
        "lambda_exponent": exact(&r.lambda_exponent),
        "decay_exponents": [exact(&r.decay_exponents.0), exact(&r.decay_exponents.1)],
        "n_of_t_exponent": opt(&r.n_of_t_exponent),
        "growth_exponent": opt(&r.growth_exponent),
        "alpha_growth": opt(&r.alpha_growth),
        "theta_interpolation": opt(&r.theta_interpolation),
    })
}

fn closed_forms(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let t = &cfg.thresholds;
    let s = parse_rational(&t.s).map_err(|e| anyhow!(e))?;
    let eps = parse_rational(&t.eps).map_err(|e| anyhow!(e))?;
    let r = thresholds(t.equation, t.domain, t.k, s, eps)?;
    out.write_json("thresholds.json", &report_json(&r))?;
    Ok(Vec::new())
}

fn gronwall(cfg: &Config, out: &mut OutputDir) -> Result<Vec<Assertion>> {
    let g = &cfg.gronwall;
    let r = gronwall_check(g.k1, g.eps, g.a0, g.m, g.d)?;
    out.write_json("gronwall.json", &r)?;
    let target = 1.0 / g.eps;
    Ok(vec![
        Assertion::new("k2_stabilized", r.stabilized, format!("K2(M) = {}, K2(M/10) = {}", r.k2, r.k2_tenth)),
        Assertion::new(
            "empirical_exponent",
            (r.empirical_exponent - target).abs() <= 0.05 * target,
            format!("{} within 5% of {target}", r.empirical_exponent),
        ),
    ])
}
