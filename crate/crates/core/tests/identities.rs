mod common;

use common::*;
use gzk_core::dynamics::Sign;
use gzk_core::growth::growth_identity_residual;
use gzk_core::imethod::{increment_commutator, increment_direct, IMultiplierSpec};

#[test]
fn increment_identity_k1_k2() {
    for k in [1u32, 2] {
        for sign in [Sign::Plus, Sign::Minus] {
            let (eq, traj) = identity_run(k, sign, 2.0);
            assert!(traj.len() >= 101);
            let sp = IMultiplierSpec::new(QUARTER_NYQUIST, 0.9).unwrap();
            let d = increment_direct(&traj, &sp, &eq, 0.0, 0.1).unwrap();
            let c = increment_commutator(&traj, &sp, &eq, 0.0, 0.1).unwrap();
            eprintln!("k={k} {sign:?} direct={d:e} commutator={c:e} diff={:e}", (d - c).abs());
            assert!((d - c).abs() <= 1e-6 * (1.0 + d.abs()));
        }
    }
}

#[test]
fn growth_identities() {
    for (k, s) in [(1u32, 2u32), (2, 2), (2, 4)] {
        let (eq, traj) = identity_run(k, Sign::Plus, 2.0);
        let r = growth_identity_residual(&traj, s, &eq, 0.1).unwrap();
        eprintln!("{r:?}");
        assert!(r.residual <= 1e-6 * (1.0 + r.lhs.abs()));
    }
}
