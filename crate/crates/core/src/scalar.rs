//! The exact integer scalar every computation is generic over.

use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Signed exact integer arithmetic: `i64`, `i128`, and `num_bigint::BigInt`
/// all qualify. Every formula in this crate is evaluated exactly in `T`;
/// rational thresholds are carried as `num_rational::Ratio<T>` and compared
/// without rounding.
pub trait Scalar: Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

/// Lift a small constant into the scalar type.
pub(crate) fn c<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small constant must fit in the scalar type")
}
