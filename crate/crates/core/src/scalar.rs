//! Scalar fields the algebra is generic over.
//!
//! Everything in this crate is written against [`Scalar`]. The exact
//! rationals ([`num_rational::BigRational`], `Ratio<i64>`, `Ratio<i128>`) make
//! every identity a bit-exact equality; `f64`/`f32` are accepted for quick
//! exploratory work and compare with a relative tolerance.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// A field of characteristic zero that can host group-ring coefficients.
pub trait Scalar:
    Num + Clone + Debug + PartialOrd + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// `true` for exact arithmetic, where [`Scalar::same`] is `==`.
    fn is_exact() -> bool;

    /// Equality used by the identity checks.
    fn same(&self, other: &Self) -> bool;

    /// `num / den`; panics when `den == 0`.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// `1 / n` for a group order or centralizer order.
    fn recip(n: usize) -> Self {
        Self::ratio(1, n as i64)
    }

    fn is_negative_value(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
    fn is_exact() -> bool {
        true
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! small_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn from_i64(n: i64) -> Self {
                Ratio::from_integer(<$int>::try_from(n).expect("integer out of range"))
            }
            fn is_exact() -> bool {
                true
            }
            fn same(&self, other: &Self) -> bool {
                self == other
            }
        }
    )*};
}

small_ratio!(i64, i128);

macro_rules! float {
    ($($float:ty => $tol:expr),*) => {$(
        impl Scalar for $float {
            fn from_i64(n: i64) -> Self {
                n as $float
            }
            fn is_exact() -> bool {
                false
            }
            fn same(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }
        }
    )*};
}

float!(f64 => 1e-9, f32 => 1e-4);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_reduce() {
        let q = <BigRational as Scalar>::ratio(6, -4);
        assert_eq!(q, BigRational::new((-3).into(), 2.into()));
        assert_eq!(<Ratio<i64> as Scalar>::recip(12), Ratio::new(1, 12));
    }

    #[test]
    fn floats_compare_with_tolerance() {
        let third = <f64 as Scalar>::ratio(1, 3);
        assert!((third * 3.0).same(&1.0));
        assert!(!third.same(&0.3334));
        assert!(!<f64 as Scalar>::is_exact());
    }
}
