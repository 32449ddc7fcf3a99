//! One PASS/FAIL line per acceptance criterion. Criterion 13 is a report: it prints WARN
//! instead of failing the build. Runs without the libtest harness so the report is never captured.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use common::*;
use gzk_core::dynamics::*;
use gzk_core::estimates::*;
use gzk_core::growth::*;
use gzk_core::imethod::thresholds::*;
use gzk_core::imethod::*;
use gzk_core::invariants::*;
use gzk_core::spectral::*;
use gzk_core::Rational;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = (bool, String);

struct Outcome {
    id: u32,
    pass: bool,
    gating: bool,
    secs: f64,
    budget: f64,
    detail: String,
}

fn run(id: u32, name: &str, gating: bool, budget: f64, f: impl FnOnce() -> Check) -> Outcome {
    let t0 = Instant::now();
    let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(e) => {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            (false, format!("panicked: {}", msg.unwrap_or_default()))
        }
    };
    let secs = t0.elapsed().as_secs_f64();
    let in_time = secs <= budget;
    let pass = ok && in_time;
    let tag = match (pass, gating) {
        (true, _) => "PASS",
        (false, true) => "FAIL",
        (false, false) => "WARN",
    };
    let late = if in_time { String::new() } else { format!(" [over budget {budget}s]") };
    println!("[{tag}] {id:>2} {name} ({secs:.1}s){late}: {detail}");
    Outcome { id, pass, gating, secs, budget, detail }
}

fn sci(v: &[f64]) -> String {
    format!("[{}]", v.iter().map(|x| format!("{x:.2e}")).collect::<Vec<_>>().join(", "))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

// 1 ---------------------------------------------------------------------------------------

fn transform_oracle() -> Check {
    let mut worst = 0.0f64;
    for (n, lx) in [(8usize, 5.0), (16, 9.0)] {
        let g = make_grid::<f64>(lx, 1.0, n, n, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let u = RealField::new(g.clone(), (0..g.len()).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap();
        let fast = to_spectral(&u);
        let slow = dft_oracle(&u).unwrap();
        worst = worst.max(fast.max_abs_diff(&slow) / slow.max_abs());
    }
    (worst <= 1e-12, format!("max relative deviation {worst:.2e} (tol 1e-12)"))
}

// 2 ---------------------------------------------------------------------------------------

fn integrator_order() -> Check {
    let g = identity_grid(1.5);
    let lt = g.lx() / (2.0 * std::f64::consts::PI);
    let profile = to_spectral(&RealField::from_fn(&g, |x, y| (x / lt).cos() * y.cos()).unwrap()).project_band();
    let eq = EquationSpec::new(1, Sign::Plus).unwrap();
    let t_end = 1.0;
    let dts = [0.016, 0.008, 0.004, 0.002];
    let errs: Vec<f64> = dts
        .par_iter()
        .map(|&dt| {
            let target = SeparableTarget { profile: profile.clone(), g: Box::new(|t: f64| (-t).exp()), dg: Box::new(|t: f64| -(-t).exp()) };
            let forcing = manufactured_forcing(target, eq).unwrap();
            let tr = simulate_with(&profile, &eq, &StepperConfig::new(dt).sample_every(10_000), t_end, Some(&forcing), &DiagnosticsSpec::default())
                .unwrap();
            let exact = profile.clone().scale((-t_end).exp());
            tr.final_state().max_abs_diff(&exact) / exact.max_abs()
        })
        .collect();
    let orders: Vec<f64> = errs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    let fit = gzk_core::numerics::fit_power_law(&dts, &errs).unwrap();
    let ok = (3.7..=4.3).contains(&fit.slope);
    (ok, format!("errors {}, pairwise orders {orders:.2?}, fitted order {:.3} (range [3.7, 4.3])", sci(&errs), fit.slope))
}

// 3 ---------------------------------------------------------------------------------------

fn conservation() -> Check {
    let cases: Vec<(u32, Sign)> = [1u32, 2, 3].iter().flat_map(|&k| [(k, Sign::Plus), (k, Sign::Minus)]).collect();
    let res: Vec<(u32, Sign, f64, f64)> = cases
        .par_iter()
        .map(|&(k, sign)| {
            let g = make_grid::<f64>(16.0 * std::f64::consts::PI, 1.0, 256, 64, (k as f64 + 2.0) / 2.0).unwrap();
            let u0 = to_spectral(
                &RealField::from_fn_centered(&g, |x, y| 0.5 * (-x * x / 4.0).exp() * (1.0 + 0.4 * y.cos() + 0.2 * (2.0 * y).sin()))
                    .unwrap(),
            );
            let eq = EquationSpec::new(k, sign).unwrap();
            let tr = simulate_with(&u0, &eq, &StepperConfig::new(5e-3).sample_every(40), 5.0, None, &DiagnosticsSpec::default()).unwrap();
            let d0 = &tr.diagnostics[0];
            let dm = tr.diagnostics.iter().map(|d| rel(d.mass, d0.mass)).fold(0.0, f64::max);
            let de = tr.diagnostics.iter().map(|d| rel(d.energy, d0.energy)).fold(0.0, f64::max);
            (k, sign, dm, de)
        })
        .collect();
    let worst = res.iter().map(|r| r.2.max(r.3)).fold(0.0, f64::max);
    let parts: Vec<String> = res.iter().map(|(k, s, m, e)| format!("k={k}{}: {m:.1e}/{e:.1e}", if *s == Sign::Plus { "+" } else { "-" })).collect();
    (worst <= 1e-8, format!("mass/energy drift {} (tol 1e-8)", parts.join(", ")))
}

// 4, 5 ------------------------------------------------------------------------------------

type IdentityRun = (u32, Sign, EquationSpec, Trajectory<f64>);

fn identity_runs() -> &'static Vec<IdentityRun> {
    static RUNS: OnceLock<Vec<IdentityRun>> = OnceLock::new();
    RUNS.get_or_init(|| {
        let cases = [(1u32, Sign::Plus), (1, Sign::Minus), (2, Sign::Plus), (2, Sign::Minus)];
        cases
            .par_iter()
            .map(|&(k, sign)| {
                let (eq, tr) = identity_run(k, sign, 2.0);
                (k, sign, eq, tr)
            })
            .collect()
    })
}

fn increment_identity() -> Check {
    let sp = IMultiplierSpec::new(QUARTER_NYQUIST, 0.9).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, sign, eq, tr) in identity_runs() {
        let d = increment_direct(tr, &sp, eq, 0.0, 0.1).unwrap();
        let c = increment_commutator(tr, &sp, eq, 0.0, 0.1).unwrap();
        let dev = (d - c).abs() / (1.0 + d.abs());
        ok &= tr.len() >= 101 && dev <= 1e-6;
        parts.push(format!("k={k}{:?}: {dev:.1e}", sign));
    }
    (ok, format!("|direct−commutator|/(1+|direct|) {} (tol 1e-6, {} snapshots)", parts.join(", "), identity_runs()[0].3.len()))
}

fn growth_identities() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, s) in [(1u32, 2u32), (2, 2), (2, 4)] {
        let (_, _, eq, tr) = identity_runs().iter().find(|r| r.0 == k && r.1 == Sign::Plus).unwrap();
        let r = growth_identity_residual(tr, s, eq, 0.1).unwrap();
        let dev = r.residual / (1.0 + r.lhs.abs());
        ok &= dev <= 1e-6;
        parts.push(format!("(k,s)=({k},{s}): {dev:.1e}"));
    }
    let g = make_grid::<f64>(10.0, 1.3, 32, 16, 2.5).unwrap();
    let mut lw = 0.0f64;
    for k in 1..=3u32 {
        for s in [2u32, 4] {
            let u = random_field(&g, 11 + k as u64, 0.6);
            let got = leibniz_expansion(k, s).unwrap().apply(&vec![&u; k as usize + 1]).unwrap();
            let pw = dealiased_power_spectral(&u, k as usize + 1).unwrap();
            let want = apply_symbol(&pw, |xi, q| Complex::new((xi * xi + q * q).powi(s as i32 / 2), 0.0)).unwrap();
            lw = lw.max(got.max_abs_diff(&want) / want.max_abs());
        }
    }
    ok &= lw <= 1e-10;
    (ok, format!("residual/(1+|lhs|) {} (tol 1e-6); Leibniz oracle {lw:.1e} (tol 1e-10)", parts.join(", ")))
}

// 6 ---------------------------------------------------------------------------------------

fn indicator_projectors() -> Check {
    let g = make_grid::<f64>(5.0, 1.0, 64, 64, 1.0).unwrap();
    let bad = indicator_identity_check(&g);
    let g = make_grid::<f64>(7.0, 1.25, 16, 8, 1.0).unwrap();
    let mut worst = 0.0f64;
    for seed in 0..20u64 {
        let v = random_field(&g, 100 + seed, 0.2);
        let w = riesz(&v, 2.0);
        let parts = pr_products(&w, &v, &[PrSelector::Pr1, PrSelector::Pr2, PrSelector::Pr3]).unwrap();
        let sum = parts[0].clone().add(&parts[1]).add(&parts[2]);
        // Pr₁+Pr₂+Pr₃ counts every pair twice; compare with twice the brute-force product
        let brute = SpectralField::new(g.clone(), brute_product(&w, &v)).unwrap().scale(2.0);
        worst = worst.max(sum.max_abs_diff(&brute) / brute.max_abs());
    }
    (bad == 0 && worst <= 1e-10, format!("indicator deviations on 64×64 pairs: {bad}; decomposition vs brute force {worst:.1e} (tol 1e-10)"))
}

// 7 ---------------------------------------------------------------------------------------

fn scaling() -> Check {
    let g = make_grid::<f64>(8.0 * std::f64::consts::PI, 1.0, 64, 32, 1.0).unwrap();
    let u0 = from_spectral(&random_field(&g, 5, 0.25));
    let mut l2_dev = 0.0f64;
    let mut gmax = 0.0f64;
    for lam in [2.0, 4.0, 8.0] {
        for k in [1u32, 2] {
            for n in [1.0, 2.0, 4.0, 8.0] {
                for s in [0.5, 0.9] {
                    let r = scaling_checks(&u0, lam, k, &IMultiplierSpec::new(n, s).unwrap()).unwrap();
                    l2_dev = l2_dev.max((r.l2_ratio - 1.0).abs());
                    gmax = gmax.max(r.gradient_constant);
                }
            }
        }
    }
    (l2_dev <= 1e-12 && gmax <= 4.0, format!("|L² ratio − 1| {l2_dev:.1e} (tol 1e-12); max gradient constant {gmax:.3} (≤ 4)"))
}

// 8 ---------------------------------------------------------------------------------------

fn localized_field(g: &GridSpec<f64>, rng: &mut ChaCha8Rng) -> SpectralField<f64> {
    let bumps: Vec<[f64; 7]> = (0..rng.random_range(1..=3))
        .map(|_| {
            [
                rng.random_range(-3.0..3.0),
                rng.random_range(-4.0..4.0),
                rng.random_range(-4.0..4.0),
                rng.random_range(0.8..3.0),
                rng.random_range(0.0..0.9),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ]
        })
        .collect();
    let u = RealField::from_fn_centered(g, |x, y| {
        bumps
            .iter()
            .map(|b| {
                let (dx, dy) = (x - b[1], y - b[2]);
                b[0] * (-(dx * dx + dy * dy) / (b[3] * b[3])).exp() * (1.0 + b[4] * (b[5] * dx + b[6] * dy).cos())
            })
            .sum()
    })
    .unwrap();
    to_spectral(&u).project_band()
}

fn ground_state_gn() -> Check {
    let tol = 1e-10;
    let g = ground_state_grid::<f64>(256).unwrap();
    let g3 = g.with_pad(2.5).unwrap();
    let qs: Vec<GroundState<f64>> = [(1u32, &g), (2, &g), (3, &g3)].par_iter().map(|(k, g)| ground_state(*k, g, tol).unwrap()).collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for q in &qs[..2] {
        let (r1, r2) = pohozaev_residuals(&q.field, q.k).unwrap();
        ok &= q.residual_pde <= 1e-5 && r1.abs() <= 1e-6 && r2.abs() <= 1e-6;
        parts.push(format!("k={}: pde {:.1e}, pohozaev ({:.1e}, {:.1e}), ‖Q‖={:.6}", q.k, q.residual_pde, r1, r2, q.l2_norm));
    }
    // regression pin; ‖Q₂‖² = 11.7009 is the classical Townes mass
    let pin = (qs[1].l2_norm - 3.42065732).abs();
    ok &= pin <= 1e-6;
    let q2 = to_spectral(&qs[1].field);
    let c2 = weinstein_constant(2, qs[1].l2_norm).unwrap();
    let d = gn_defect(&q2, 2, c2, None);
    let wr = d.abs() / (d + abs_power_integral(&q2, 4.0));
    ok &= wr <= 1e-4;
    let fg = make_grid::<f64>(16.0 * std::f64::consts::PI, 8.0, 128, 128, 1.0).unwrap();
    let min_defect = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + i);
            let f = localized_field(&fg, &mut rng);
            let k = 1 + (i % 3) as u32;
            let c = weinstein_constant(k, qs[k as usize - 1].l2_norm).unwrap();
            let d = gn_defect(&f, k, c, None);
            d / (d + abs_power_integral(&f, k as f64 + 2.0)).abs().max(1.0)
        })
        .reduce(|| f64::INFINITY, f64::min);
    ok &= min_defect >= -1e-10;
    (
        ok,
        format!(
            "{}; |‖Q₂‖ − pin| {pin:.1e}; Weinstein |defect|/RHS at Q₂ {wr:.1e} (tol 1e-4); min GN defect over 10³ fields {min_defect:.2e} (≥ −1e-10)",
            parts.join("; ")
        ),
    )
}

// 9 ---------------------------------------------------------------------------------------

fn resonance() -> Check {
    let ph = |xi: f64, q: f64| xi * (xi * xi + q * q);
    let nd = |xi: f64, q: f64| 3.0 * xi * xi + q * q;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let mut r = || rng.random_range(-20.0..20.0);
        let (x1, q1, x2, q2, x3, q3) = (r(), r(), r(), r(), r(), r());
        // ZK: (ξ₀,q₀) = (ξ₁,q₁)+(ξ₂,q₂)
        let (x0, q0) = (x1 + x2, q1 + q2);
        let lib = resonance_zk(x1, q1, x0, q0);
        let fac = -6.0 * x0 * x1 * x2 + x1 * (nd(x0, q0) - nd(x1, q1)) + x2 * (nd(x0, q0) - nd(x2, q2));
        let scale = ph(x0, q0).abs() + ph(x1, q1).abs() + ph(x2, q2).abs();
        worst = worst.max((lib - fac).abs() / scale);
        // mZK: (ξ₀,q₀) = sum of three
        let (x0, q0) = (x1 + x2 + x3, q1 + q2 + q3);
        let lib = resonance_mzk(x1, q1, x2, q2, x0, q0);
        let fac = -6.0 * (x1 + x2) * (x1 + x3) * (x2 + x3)
            + [(x1, q1), (x2, q2), (x3, q3)].iter().map(|&(x, q)| x * (nd(x0, q0) - nd(x, q))).sum::<f64>();
        let scale = ph(x0, q0).abs() + ph(x1, q1).abs() + ph(x2, q2).abs() + ph(x3, q3).abs();
        worst = worst.max((lib - fac).abs() / scale);
    }
    (worst <= 1e-9, format!("max relative deviation over 10⁴ tuples {worst:.1e} (tol 1e-9)"))
}

// 10 --------------------------------------------------------------------------------------

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn check(fails: &mut Vec<String>, what: &str, got: Rational, want: Rational) {
    if got != want {
        fails.push(format!("{what}: {got} ≠ {want}"));
    }
}

fn closed_forms() -> Check {
    use Domain::*;
    use Equation::*;
    let z = q(0, 1);
    let mut fails: Vec<String> = Vec::new();
    check(&mut fails, "ZK threshold", gwp_threshold(Zk, Cylinder, z).unwrap(), q(11, 13));
    check(&mut fails, "mZK cylinder threshold", gwp_threshold(Mzk, Cylinder, z).unwrap(), q(36, 49));
    check(&mut fails, "mZK plane threshold", gwp_threshold(Mzk, Plane, z).unwrap(), q(2, 3));
    // ε̃-thresholds: the threshold is the root of the decay-versus-scaling balance
    type Balance = (Equation, Domain, Rational, fn(Rational) -> Rational);
    let balances: [Balance; 3] = [
        (Zk, Cylinder, q(1, 4), |s| q(3, 1) * (q(1, 1) - s) / (q(1, 1) + s)),
        (Mzk, Cylinder, q(13, 12), |s| q(3, 1) * (q(1, 1) - s) / s),
        (Mzk, Plane, q(3, 2), |s| q(3, 1) * (q(1, 1) - s) / s),
    ];
    for (e, d, decay, cost) in balances {
        for eps in [q(0, 1), q(1, 100), q(1, 20), q(1, 7)] {
            let thr = gwp_threshold(e, d, eps).unwrap();
            check(&mut fails, &format!("{e:?}/{d:?} balance at threshold ε̃={eps}"), decay - eps - cost(thr), z);
            for ds in [q(1, 1000), q(1, 50)] {
                let above = decay - eps - cost(thr + ds) > z;
                let below = decay - eps - cost(thr - ds) < z;
                if !(above && below) {
                    fails.push(format!("{e:?}/{d:?} threshold sign change at ε̃={eps}"));
                }
            }
        }
    }
    for s in [q(9, 10), q(19, 20), q(24, 25)] {
        let one = q(1, 1);
        check(&mut fails, "ZK N(T)", n_of_t_exponent(Zk, Cylinder, s).unwrap(), q(4, 1) * (one + s) / (q(13, 1) * s - q(11, 1)));
        check(&mut fails, "mZK cyl N(T)", n_of_t_exponent(Mzk, Cylinder, s).unwrap(), q(12, 1) * s / (q(49, 1) * s - q(36, 1)));
        check(&mut fails, "mZK plane N(T)", n_of_t_exponent(Mzk, Plane, s).unwrap(), q(2, 1) * s / (q(3, 1) * (q(3, 1) * s - q(2, 1))));
        check(&mut fails, "ZK growth", growth_exponent(Zk, Cylinder, s).unwrap(), q(4, 1) * (one - s * s) / (q(13, 1) * s - q(11, 1)));
        check(&mut fails, "mZK cyl growth", growth_exponent(Mzk, Cylinder, s).unwrap(), q(12, 1) * s * (one - s) / (q(49, 1) * s - q(36, 1)));
        check(&mut fails, "mZK plane growth", growth_exponent(Mzk, Plane, s).unwrap(), q(2, 1) * s * (one - s) / (q(3, 1) * (q(3, 1) * s - q(2, 1))));
        // growth = (1 − s)·N(T) exponent
        check(&mut fails, "ZK growth/N", growth_exponent(Zk, Cylinder, s).unwrap(), (one - s) * n_of_t_exponent(Zk, Cylinder, s).unwrap());
    }
    check(&mut fails, "ZK at s=12/13", growth_exponent(Zk, Cylinder, q(12, 13)).unwrap(), q(4, 1) * q(25, 169));
    for s in [q(3, 2), q(2, 1), q(3, 1), q(7, 2)] {
        let one = q(1, 1);
        check(&mut fails, "α k=1", alpha_growth(1, s), q(4, 1) * (s - one));
        for k in [2u32, 3, 4] {
            check(&mut fails, "α k≥2", alpha_growth(k, s), s - one);
        }
        check(&mut fails, "θ k=1", theta_interpolation(1, s).unwrap(), one / (q(4, 1) * (s - one)));
        check(&mut fails, "θ k=2", theta_interpolation(2, s).unwrap(), one / (s - one));
    }
    check(&mut fails, "α(1,2)", alpha_growth(1, q(2, 1)), q(4, 1));
    check(&mut fails, "θ(2,2)", theta_interpolation(2, q(2, 1)).unwrap(), q(1, 1));
    let rep = thresholds(Zk, Cylinder, 1, q(9, 10), z).unwrap();
    check(&mut fails, "report threshold", rep.gwp_threshold, q(11, 13));
    check(&mut fails, "report growth", rep.growth_exponent.unwrap(), q(4, 1) * q(19, 100) / q(7, 10));
    let ok = fails.is_empty() && thresholds(Zk, Cylinder, 1, q(11, 13), z).is_err();
    (ok, if fails.is_empty() { "all exact rational values reproduced".into() } else { fails.join("; ") })
}

// 11 --------------------------------------------------------------------------------------

fn gronwall() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (eps, d) in [(0.5, 2.1), (0.25, 4.1)] {
        let r = gronwall_check(1.0, eps, 0.0, 100_000, d).unwrap();
        let target = 1.0 / eps;
        let within = (r.empirical_exponent - target).abs() <= 0.05 * target;
        let neg = gronwall_check(1.0, eps, 0.0, 100_000, target - 0.5).unwrap();
        // the negative control keeps growing, asymptotically like M^{1/2}
        let h = &neg.k2_history;
        let grows = !neg.stabilized && h[h.len() - 1].1 >= 2.0 * h[h.len() - 2].1;
        ok &= r.stabilized && r.k2.is_finite() && within && grows;
        parts.push(format!(
            "ε={eps}, d={d}: K₂={:.4}, stabilized={}, exponent {:.4} vs {target}; control K₂ history {}",
            r.k2,
            r.stabilized,
            r.empirical_exponent,
            sci(&neg.k2_history.iter().map(|h| h.1).collect::<Vec<_>>())
        ));
    }
    (ok, parts.join("; "))
}

// 12 --------------------------------------------------------------------------------------

fn estimate_sampler() -> Check {
    let case = EstimateCase::new(EstimateTag::Mp31);
    let rep = estimate_ratio(&case, &EstimateLattice::standard(), &[1.0, 2.0, 4.0, 8.0], 200, 31).unwrap();
    let maxima: Vec<f64> = rep.per_lambda.iter().map(|l| l.max_ratio).collect();
    let g = SpaceTimeGrid::new(8, 2.0, 9.0, 1.0, 8, 8).unwrap();
    let mut oracle = 0.0f64;
    for seed in 0..4u64 {
        let u = random_xsb_field(&g, &XsbSpec::new(0.0, 0.51), Profile::flat(), 2 * seed);
        let v = random_xsb_field(&g, &XsbSpec::new(0.0, 0.51), Profile::flat(), 2 * seed + 1);
        let fast = mp_spacetime(&u, &v).unwrap();
        let slow = mp_spacetime_oracle(&u, &v).unwrap();
        oracle = oracle.max(fast.max_abs_diff(&slow) / slow.max_abs());
    }
    let probe = shell_separation_probe(&case, &EstimateLattice::shell_probe(), 1.0, (0.0, 0.5), (8.0, 16.0), 20, 77).unwrap();
    let ok = rep.cross_lambda_spread <= 3.0 && oracle <= 1e-10 && probe.gap >= 5.0;
    (
        ok,
        format!(
            "max ratios over λ=1,2,4,8 {maxima:.2?}, spread {:.3} (≤ 3); fast vs O(M²) oracle {oracle:.1e} (tol 1e-10); shell gap {:.2} (≥ 5)",
            rep.cross_lambda_spread, probe.gap
        ),
    )
}

// 13 --------------------------------------------------------------------------------------

fn soft_reports() -> Check {
    let g = identity_grid(2.0);
    let u0 = bump(&g, 0.8);
    let eq = EquationSpec::new(1, Sign::Plus).unwrap();
    let ns: Vec<f64> = (0..6).map(|i| 1.0 * 1.5f64.powi(i)).collect();
    let sweep = decay_sweep(&u0, &eq, 0.9, &ns, &StepperConfig::new(1e-3).sample_every(10), 1.0);
    let (sweep_ok, sweep_msg) = match sweep {
        Ok(r) => match r.slope {
            Some(sl) => (sl <= -0.2, format!("decay slope {sl:.3} (≤ −0.2) over {} resolved N", r.points.iter().filter(|p| p.resolved).count())),
            None => (false, "decay sweep inconclusive".into()),
        },
        Err(e) => (false, format!("decay sweep error: {e}")),
    };
    let tr = simulate_with(&u0, &eq, &StepperConfig::new(2e-3).sample_every(250), 50.0, None, &DiagnosticsSpec::default());
    let (grow_ok, grow_msg) = match tr.and_then(|t| track_norm_growth(&t, &[2.0])) {
        Ok(rep) => {
            let s = &rep.series[0];
            let slope = s.fit.map(|f| f.slope).unwrap_or(f64::NAN);
            (s.within_reference, format!("H² growth exponent {slope:.3} ± {:.3} vs α(1,2) = 4", s.fit_band))
        }
        Err(e) => (false, format!("growth run error: {e}")),
    };
    (sweep_ok && grow_ok, format!("{sweep_msg}; {grow_msg}"))
}

fn main() {
    let outcomes = vec![
        run(1, "transform oracle", true, 1.0, transform_oracle),
        run(2, "integrator order", true, 30.0, integrator_order),
        run(3, "conservation", true, 300.0, conservation),
        run(4, "increment identity", true, 120.0, increment_identity),
        run(5, "growth identities", true, 180.0, growth_identities),
        run(6, "indicator and projector identities", true, 30.0, indicator_projectors),
        run(7, "scaling", true, 60.0, scaling),
        run(8, "ground state and GN", true, 120.0, ground_state_gn),
        run(9, "resonance factorizations", true, 5.0, resonance),
        run(10, "closed-form calculator", true, 1.0, closed_forms),
        run(11, "Grönwall recursion", true, 10.0, gronwall),
        run(12, "estimate sampler", true, 600.0, estimate_sampler),
        run(13, "soft reports", false, 600.0, soft_reports),
    ];
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| o.gating && !o.pass)
        .map(|o| format!("{} ({:.1}s of {}s): {}", o.id, o.secs, o.budget, o.detail))
        .collect();
    println!("acceptance: {}/{} gating criteria passed", outcomes.iter().filter(|o| o.gating && o.pass).count(), outcomes.iter().filter(|o| o.gating).count());
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
