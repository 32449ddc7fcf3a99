mod common;

use common::{brute_product, random_field};
use gzk_core::dynamics::{simulate_with, DiagnosticsSpec, EquationSpec, Sign, StepperConfig};
use gzk_core::growth::*;
use gzk_core::spectral::{apply_symbol, dealiased_power_spectral, make_grid, riesz, SpectralField};
use num_complex::Complex;
use proptest::prelude::*;

#[test]
fn leibniz_matches_spectral_symbol() {
    let g = make_grid::<f64>(10.0, 1.3, 32, 16, 2.5).unwrap();
    for k in 1..=3u32 {
        for s in [2u32, 4] {
            let u = random_field(&g, 7 + k as u64, 0.6);
            let ex = leibniz_expansion(k, s).unwrap();
            let factors = vec![&u; k as usize + 1];
            let got = ex.apply(&factors).unwrap();
            let pw = dealiased_power_spectral(&u, k as usize + 1).unwrap();
            let want = apply_symbol(&pw, |xi, q| Complex::new((xi * xi + q * q).powi(s as i32 / 2), 0.0)).unwrap();
            let err = got.max_abs_diff(&want) / want.max_abs();
            assert!(err <= 1e-10, "k={k} s={s} err={err:e}");
        }
    }
}

#[test]
fn leibniz_distinct_factors() {
    // the expansion is a genuine product rule, not only valid on the diagonal
    let g = make_grid::<f64>(9.0, 1.0, 32, 16, 1.5).unwrap();
    let (u, v) = (random_field(&g, 1, 0.5), random_field(&g, 2, 0.5));
    let got = leibniz_expansion(1, 4).unwrap().apply(&[&u, &v]).unwrap();
    let p = gzk_core::spectral::dealiased_product(&[&u, &v]).unwrap();
    let want = apply_symbol(&p, |xi, q| Complex::new((xi * xi + q * q).powi(2), 0.0)).unwrap();
    assert!(got.max_abs_diff(&want) <= 1e-10 * want.max_abs());
}

#[test]
fn projector_decomposition_and_oracle() {
    let g = make_grid::<f64>(7.0, 1.25, 16, 8, 1.0).unwrap();
    for seed in 0..5u64 {
        let v = random_field(&g, seed, 0.2);
        let w = riesz(&v, 2.0);
        let parts = pr_products(&w, &v, &[PrSelector::Pr1, PrSelector::Pr2, PrSelector::Pr3]).unwrap();
        let sum = parts[0].clone().add(&parts[1]).add(&parts[2]);
        let full = pr_product(&w, &v, PrSelector::Full).unwrap();
        let twice = full.clone().scale(2.0);
        assert!(sum.max_abs_diff(&twice) <= 1e-10 * twice.max_abs());
        let brute = brute_product(&w, &v);
        let err = full.coeffs().iter().zip(&brute).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err <= 1e-10 * full.max_abs(), "oracle err {err:e}");
        // Pr₁ = χ_A + χ_B
        let a = pr_product(&w, &v, PrSelector::PrHiFirst).unwrap();
        let b = pr_product(&w, &v, PrSelector::PrHiOut).unwrap();
        assert!(a.add(&b).max_abs_diff(&parts[0]) <= 1e-12 * full.max_abs());
    }
}

#[test]
fn hi_first_with_constant_second_factor() {
    let g = make_grid::<f64>(7.0, 1.0, 16, 8, 1.0).unwrap();
    let v1 = random_field(&g, 3, 0.1);
    let v2 = SpectralField::real_mode(&g, 0, 0, Complex::new(g.area(), 0.0));
    let p = pr_product(&v1, &v2, PrSelector::PrHiFirst).unwrap();
    let want = v1.clone().project_band().scale(2.0);
    assert!(p.max_abs_diff(&want) <= 1e-12 * want.max_abs());
}

#[test]
fn indicator_identity_exhaustive() {
    let g = make_grid::<f64>(5.0, 1.0, 8, 8, 1.0).unwrap();
    assert_eq!(indicator_identity_check(&g), 0);
    // integer ξ: k₁ = (100, 0), k₂ = (1, 0) sits exactly on the 100× boundary
    let g = make_grid::<f64>(2.0 * std::f64::consts::PI, 1.0, 256, 2, 1.0).unwrap();
    assert_eq!(indicator_identity_check(&g), 0);
}

#[test]
fn growth_residual_trivial_cases() {
    let g = common::identity_grid(2.0);
    let u0 = common::bump(&g, 0.5);
    let cfg = StepperConfig::new(5e-3);
    // free flow: both sides vanish
    let eq = EquationSpec::free(2, Sign::Plus).unwrap();
    let tr = simulate_with(&u0, &eq, &cfg, 0.05, None, &DiagnosticsSpec::default()).unwrap();
    let r = growth_identity_residual(&tr, 2, &eq, 0.05).unwrap();
    assert_eq!(r.rhs, 0.0);
    assert!(r.lhs.abs() <= 1e-12 * gzk_core::spectral::sobolev_norm_sq(&u0, 2.0, true).unwrap());
    // t = t₀
    let eq = EquationSpec::new(2, Sign::Minus).unwrap();
    let tr = simulate_with(&u0, &eq, &cfg, 0.05, None, &DiagnosticsSpec::default()).unwrap();
    let r = growth_identity_residual(&tr, 2, &eq, 0.0).unwrap();
    assert_eq!((r.lhs, r.rhs, r.residual), (0.0, 0.0, 0.0));
    assert!(growth_identity_residual(&tr, 3, &eq, 0.05).is_err());
    assert!(growth_identity_residual(&tr, 2, &eq, 0.0123).is_err());
}

#[test]
fn free_flow_norms_constant() {
    let g = common::identity_grid(1.5);
    let u0 = common::bump(&g, 1.0);
    let eq = EquationSpec::free(1, Sign::Plus).unwrap();
    let tr = simulate_with(&u0, &eq, &StepperConfig::new(0.05).sample_every(4), 2.0, None, &DiagnosticsSpec::default()).unwrap();
    let rep = track_norm_growth(&tr, &[0.5, 1.0, 2.0]).unwrap();
    for s in &rep.series {
        assert!(s.max_relative_change <= 1e-12 * 2.0, "s={} change={:e}", s.s, s.max_relative_change);
        assert!(s.fit.unwrap().slope.abs() <= 0.01);
        assert!(s.within_reference);
    }
    let z = SpectralField::zeros(&g);
    let tr = simulate_with(&z, &eq, &StepperConfig::new(0.1), 1.0, None, &DiagnosticsSpec::default()).unwrap();
    let rep = track_norm_growth(&tr, &[2.0]).unwrap();
    assert!(rep.series[0].norms.iter().all(|n| *n == 0.0));
    assert!(rep.series[0].fit.is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansion_degrees(k in 1u32..4, h in 1u32..4) {
        let e = leibniz_expansion(k, 2 * h).unwrap();
        for t in &e.terms {
            prop_assert_eq!(t.alphas.len(), k as usize + 1);
            prop_assert_eq!(t.alphas.iter().map(|a| a.0 + a.1).sum::<u32>(), 2 * h);
        }
    }

    #[test]
    fn pr_split_is_exact(seed in 0u64..1000) {
        let g = make_grid::<f64>(6.0, 2.0, 8, 8, 1.0).unwrap();
        let (v1, v2) = (random_field(&g, seed, 0.0), random_field(&g, seed + 1, 0.0));
        let p = pr_products(&v1, &v2, &[PrSelector::Pr1, PrSelector::Pr2, PrSelector::Pr3, PrSelector::Full]).unwrap();
        let lhs = p[0].clone().add(&p[1]).add(&p[2]);
        let rhs = p[3].clone().scale(2.0);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + rhs.max_abs()));
    }
}
