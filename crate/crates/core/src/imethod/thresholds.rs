//! Closed-form thresholds and exponents, generic over an exact number type.

use serde::{Deserialize, Serialize};

use super::scaling::Equation;
use crate::error::{GzkError, Result};
use crate::scalar::Exact;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Cylinder,
    Plane,
}

/// All closed-form quantities for one (equation, domain, k, s, ε̃).
///
/// GWP fields follow the equation; `alpha_growth`/`theta_interpolation` follow k on the cylinder
/// and are present only for s > 1. N(T) and growth exponents are present for threshold < s < 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdReport<T> {
    pub equation: Equation,
    pub domain: Domain,
    pub k: u32,
    pub s: T,
    pub epsilon_tilde: T,
    /// ε̃ → 0 limit: 11/13, 36/49 or 2/3
    pub gwp_threshold: T,
    /// threshold from the ε̃-dependent condition
    pub gwp_threshold_eps: T,
    pub lambda_exponent: T,
    /// modified-energy increment decay exponents (per local step), as (first, second) rate
    pub decay_exponents: (T, T),
    pub n_of_t_exponent: Option<T>,
    pub growth_exponent: Option<T>,
    pub alpha_growth: Option<T>,
    pub theta_interpolation: Option<T>,
}

fn c<T: Exact>(n: i64) -> T {
    T::from_i64(n).expect("small integer")
}

fn r<T: Exact>(n: i64, d: i64) -> T {
    c::<T>(n) / c::<T>(d)
}

fn check_domain(equation: Equation, domain: Domain) -> Result<()> {
    if equation == Equation::Zk && domain == Domain::Plane {
        return Err(GzkError::InvalidParameter("ZK thresholds are stated on the cylinder only".into()));
    }
    Ok(())
}

/// GWP threshold with the ε̃ correction: (11+4ε̃)/(13−4ε̃), 3/(49/12−ε̃), 3/(9/2−ε̃).
pub fn gwp_threshold<T: Exact>(equation: Equation, domain: Domain, eps: T) -> Result<T> {
    check_domain(equation, domain)?;
    Ok(match (equation, domain) {
        (Equation::Zk, _) => (c::<T>(11) + c::<T>(4) * eps.clone()) / (c::<T>(13) - c::<T>(4) * eps),
        (Equation::Mzk, Domain::Cylinder) => c::<T>(3) / (r::<T>(49, 12) - eps),
        (Equation::Mzk, Domain::Plane) => c::<T>(3) / (r::<T>(9, 2) - eps),
    })
}

/// Exponent e in λ ~ N^e.
pub fn lambda_exponent<T: Exact>(equation: Equation, s: T) -> T {
    match equation {
        Equation::Zk => (T::one() - s.clone()) / (T::one() + s),
        Equation::Mzk => (T::one() - s.clone()) / s,
    }
}

/// Exponent e in N(T) ~ (1+T)^{e+}.
pub fn n_of_t_exponent<T: Exact>(equation: Equation, domain: Domain, s: T) -> Result<T> {
    check_domain(equation, domain)?;
    Ok(match (equation, domain) {
        (Equation::Zk, _) => c::<T>(4) * (T::one() + s.clone()) / (c::<T>(13) * s - c::<T>(11)),
        (Equation::Mzk, Domain::Cylinder) => c::<T>(12) * s.clone() / (c::<T>(49) * s - c::<T>(36)),
        (Equation::Mzk, Domain::Plane) => c::<T>(2) * s.clone() / (c::<T>(3) * (c::<T>(3) * s - c::<T>(2))),
    })
}

/// Polynomial growth exponent of the H^s norm below H¹.
pub fn growth_exponent<T: Exact>(equation: Equation, domain: Domain, s: T) -> Result<T> {
    check_domain(equation, domain)?;
    let one = T::one();
    Ok(match (equation, domain) {
        (Equation::Zk, _) => c::<T>(4) * (one - s.clone() * s.clone()) / (c::<T>(13) * s - c::<T>(11)),
        (Equation::Mzk, Domain::Cylinder) => {
            c::<T>(12) * s.clone() * (one - s.clone()) / (c::<T>(49) * s - c::<T>(36))
        }
        (Equation::Mzk, Domain::Plane) => {
            c::<T>(2) * s.clone() * (one - s.clone()) / (c::<T>(3) * (c::<T>(3) * s - c::<T>(2)))
        }
    })
}

/// Increment decay rates N^{−1/4+}, N^{−1+} (ZK) and N^{−13/12+}, N^{−2+} (mZK).
pub fn decay_exponents<T: Exact>(equation: Equation) -> (T, T) {
    match equation {
        Equation::Zk => (-r::<T>(1, 4), -T::one()),
        Equation::Mzk => (-r::<T>(13, 12), -c::<T>(2)),
    }
}

/// α(k,s) = 4(s−1) for k = 1, s−1 for k ≥ 2.
pub fn alpha_growth<T: Exact>(k: u32, s: T) -> T {
    if k == 1 {
        c::<T>(4) * (s - T::one())
    } else {
        s - T::one()
    }
}

/// θ = 1/(4(s−1)) for k = 1, 1/(s−1) for k ≥ 2; needs s > 1.
pub fn theta_interpolation<T: Exact>(k: u32, s: T) -> Result<T> {
    if s <= T::one() {
        return Err(GzkError::InvalidParameter("θ needs s > 1".into()));
    }
    Ok(T::one() / alpha_growth(k, s))
}

pub fn thresholds<T: Exact>(equation: Equation, domain: Domain, k: u32, s: T, eps: T) -> Result<ThresholdReport<T>> {
    if k == 0 {
        return Err(GzkError::InvalidParameter("k must be >= 1".into()));
    }
    let zero = T::zero();
    let quarter = r::<T>(1, 4);
    if eps < zero || eps >= quarter {
        return Err(GzkError::InvalidParameter(format!("ε̃ must lie in [0, 1/4) (got {eps})")));
    }
    let thr0 = gwp_threshold(equation, domain, zero)?;
    let thr = gwp_threshold(equation, domain, eps.clone())?;
    let below_one = s < T::one();
    if below_one && s <= thr {
        return Err(GzkError::BelowThreshold { what: "growth exponent".into(), threshold: format!("{thr}") });
    }
    let (n_t, growth) = if below_one {
        (Some(n_of_t_exponent(equation, domain, s.clone())?), Some(growth_exponent(equation, domain, s.clone())?))
    } else {
        (None, None)
    };
    let above_one = s > T::one();
    Ok(ThresholdReport {
        equation,
        domain,
        k,
        epsilon_tilde: eps,
        gwp_threshold: thr0,
        gwp_threshold_eps: thr,
        lambda_exponent: lambda_exponent(equation, s.clone()),
        decay_exponents: decay_exponents(equation),
        n_of_t_exponent: n_t,
        growth_exponent: growth,
        alpha_growth: (above_one && domain == Domain::Cylinder).then(|| alpha_growth(k, s.clone())),
        theta_interpolation: if above_one && domain == Domain::Cylinder { Some(theta_interpolation(k, s.clone())?) } else { None },
        s,
    })
}
