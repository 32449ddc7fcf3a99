//! Scalar abstraction: everything numeric is generic over `S: Scalar` (f32 / f64).
//! Closed-form exponent arithmetic uses `Exact` instead, so it can run on rationals.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed};
use rustfft::{Fft, FftDirection, FftNum, FftPlanner};

pub trait Scalar:
    Float + FloatConst + FftNum + FromPrimitive + Default + Sum + Debug + Display + Send + Sync + 'static
{
    /// unit roundoff of the type, as f64
    const UNIT_ROUNDOFF: f64;

    #[doc(hidden)]
    fn planner() -> &'static Mutex<FftPlanner<Self>>;

    /// Literal conversion. Panics only for values not representable at all (never for finite f64).
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("literal out of range")
    }

    #[inline]
    fn of(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("integer out of range")
    }

    #[inline]
    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("integer out of range")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }

    /// `Float::abs` spelled out; `Signed::abs` is also in scope through `FftNum`.
    #[inline]
    fn mag(self) -> Self {
        Float::abs(self)
    }
}

macro_rules! impl_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            const UNIT_ROUNDOFF: f64 = $eps;
            fn planner() -> &'static Mutex<FftPlanner<Self>> {
                static P: OnceLock<Mutex<FftPlanner<$t>>> = OnceLock::new();
                P.get_or_init(|| Mutex::new(FftPlanner::new()))
            }
        }
    };
}

impl_scalar!(f32, f32::EPSILON as f64);
impl_scalar!(f64, f64::EPSILON);

pub(crate) fn plan<S: Scalar>(n: usize, dir: FftDirection) -> Arc<dyn Fft<S>> {
    let mut p = S::planner().lock().unwrap_or_else(|e| e.into_inner());
    p.plan_fft(n, dir)
}

/// Number type for closed-form exponent arithmetic. `Ratio<i64>` gives exact answers,
/// `f64` is accepted for quick evaluation.
pub trait Exact: Clone + PartialOrd + Num + Signed + FromPrimitive + Debug + Display {}

impl<T> Exact for T where T: Clone + PartialOrd + Num + Signed + FromPrimitive + Debug + Display {}
