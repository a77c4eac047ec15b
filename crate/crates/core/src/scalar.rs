//! Exact scalar types for weight coefficients.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact rational number usable as a weight coefficient.
///
/// Every question asked of a weight (integrality, equality, sign of a prefix
/// sum) must be decided exactly, so only rational types implement this.
pub trait Coefficient:
    Clone + Ord + Hash + Debug + Display + Signed + Send + Sync + 'static
{
    fn from_integer(n: i64) -> Self;

    /// `numer / denom`, or `None` when `denom == 0`.
    fn from_fraction(numer: i64, denom: i64) -> Option<Self>;

    fn is_integral(&self) -> bool;

    /// The value as an `i64`, if it is an integer in range.
    fn as_i64(&self) -> Option<i64>;

    fn floor(&self) -> Self;

    fn ceil(&self) -> Self;

    /// `self − ⌊self⌋`, always in `[0, 1)`.
    fn fract_part(&self) -> Self {
        self.clone() - self.floor()
    }

    /// Parses `n` or `p/q`.
    fn parse_coefficient(s: &str) -> Option<Self>;
}

impl<T> Coefficient for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_integer(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("i64 fits in coefficient integer type"))
    }

    fn from_fraction(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Ratio::new(T::from_i64(numer)?, T::from_i64(denom)?))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn as_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn ceil(&self) -> Self {
        Ratio::ceil(self)
    }

    fn parse_coefficient(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<T>().ok().map(Ratio::from_integer),
            Some((p, q)) => {
                let p = p.trim().parse::<T>().ok()?;
                let q = q.trim().parse::<T>().ok()?;
                if q.is_zero() {
                    None
                } else {
                    Some(Ratio::new(p, q))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn parse_and_classify() {
        let half = Rational64::parse_coefficient("1/2").unwrap();
        assert!(!half.is_integral());
        assert_eq!(half.fract_part(), half);
        let neg = BigRational::parse_coefficient("-3/2").unwrap();
        assert_eq!(neg.floor(), BigRational::from_integer((-2).into()));
        assert_eq!(neg.fract_part(), BigRational::parse_coefficient("1/2").unwrap());
        assert_eq!(Rational64::parse_coefficient("4/2").unwrap().as_i64(), Some(2));
        assert!(Rational64::parse_coefficient("1/0").is_none());
        assert!(Rational64::parse_coefficient("x").is_none());
    }
}
