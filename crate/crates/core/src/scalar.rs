//! Scalar types the linear algebra and Lie machinery are generic over.
//!
//! Everything downstream only needs field operations plus a notion of
//! "zero" for pivoting. Exact types (`BigRational`) compare with `is_zero`;
//! floating types use an absolute threshold and pick the largest pivot.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// A field of characteristic zero, possibly approximated.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Whether arithmetic is exact. Exact scalars never use tolerances.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Zero test used by elimination.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Pivot preference: larger is better. Only consulted for inexact types.
    fn pivot_weight(&self) -> f64;

    fn to_f64(&self) -> f64;

    /// Exact integer value, if this scalar is one.
    fn as_integer(&self) -> Option<BigInt>;

    /// Smallest positive scalar `d` such that `d * v` is integral for every `v`.
    /// Inexact types return one.
    fn common_denominator(values: &[Self]) -> Self {
        let _ = values;
        Self::one()
    }

    /// Optional specialised reduced-row-echelon routine. Returning `None`
    /// falls back to plain Gauss-Jordan elimination over the field.
    fn rref_override(rows: usize, cols: usize, data: &[Self]) -> Option<(Vec<Self>, Vec<usize>)> {
        let _ = (rows, cols, data);
        None
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn pivot_weight(&self) -> f64 {
        // Prefer small entries to limit growth; unused by the exact path.
        if self.is_zero() {
            0.0
        } else {
            1.0 / (1.0 + ToPrimitive::to_f64(&self.abs()).unwrap_or(f64::MAX))
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn as_integer(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(self.numer().clone())
        } else {
            None
        }
    }

    fn common_denominator(values: &[Self]) -> Self {
        let mut l = BigInt::one();
        for v in values {
            l = l.lcm(v.denom());
        }
        BigRational::from_integer(l)
    }

    fn rref_override(rows: usize, cols: usize, data: &[Self]) -> Option<(Vec<Self>, Vec<usize>)> {
        Some(crate::linalg::bareiss::rational_rref(rows, cols, data))
    }
}

macro_rules! impl_float_scalar {
    ($f:ty, $tol:expr) => {
        impl Scalar for $f {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $f
            }

            fn is_negligible(&self) -> bool {
                self.abs() < $tol
            }

            fn pivot_weight(&self) -> f64 {
                self.abs() as f64
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn as_integer(&self) -> Option<BigInt> {
                let r = self.round();
                if (self - r).abs() < $tol {
                    Some(BigInt::from(r as i64))
                } else {
                    None
                }
            }
        }
    };
}

impl_float_scalar!(f64, 1e-9);
impl_float_scalar!(f32, 1e-4);

/// Serde helpers writing rationals as `"p/q"` strings.
pub mod ser {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn rationals<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_constructors_reduce() {
        let r = BigRational::from_ratio(6, -4);
        assert_eq!(r, BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn common_denominator_is_lcm() {
        let vals = vec![
            BigRational::from_ratio(1, 4),
            BigRational::from_ratio(5, 6),
            BigRational::from_i64(3),
        ];
        assert_eq!(BigRational::common_denominator(&vals), BigRational::from_i64(12));
        assert_eq!(f64::common_denominator(&[0.5, 0.25]), 1.0);
    }

    #[test]
    fn integer_detection() {
        assert_eq!(BigRational::from_i64(-7).as_integer(), Some(BigInt::from(-7)));
        assert_eq!(BigRational::from_ratio(1, 2).as_integer(), None);
        assert_eq!(3.0000000001f64.as_integer(), Some(BigInt::from(3)));
        assert!(1e-12f64.is_negligible());
    }
}
