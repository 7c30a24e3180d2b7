//! Scalar field abstraction.
//!
//! The oracle's linear algebra, polynomial arithmetic and arrangement types are
//! generic over [`Scalar`]. Exact verdicts require an exact field such as
//! [`crate::Rational`]; the floating point impls exist for quick exploratory
//! rank estimates and are flagged as inexact.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};

pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// Zero test used by elimination. Exact types use `is_zero`.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// True when `self` is a strictly better elimination pivot than `current`.
    fn better_pivot(&self, _current: &Self) -> bool {
        false
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_int(v: i64) -> Self {
                v as $t
            }

            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }

            fn better_pivot(&self, current: &Self) -> bool {
                self.abs() > current.abs()
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

/// Parses `"p"`, `"p/q"` or a JSON-style integer into a scalar.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
