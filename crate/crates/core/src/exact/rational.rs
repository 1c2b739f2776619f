use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::asymptotics::Real;

/// An exact ratio of big integers, kept in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Self {
        Self(BigRational::new(numerator, denominator))
    }

    pub fn from_unsigned(numerator: &BigUint, denominator: &BigUint) -> Self {
        Self::new(
            BigInt::from_biguint(Sign::Plus, numerator.clone()),
            BigInt::from_biguint(Sign::Plus, denominator.clone()),
        )
    }

    pub fn from_integer(value: BigInt) -> Self {
        Self(BigRational::from_integer(value))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn to_real<R: Real>(&self) -> R {
        R::from_ratio(self.numerator(), self.denominator())
    }

    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_string(self.numerator(), self.denominator(), digits)
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

/// Formats `num / den` with `digits` fractional digits, truncating.
pub fn decimal_string(num: &BigInt, den: &BigInt, digits: usize) -> String {
    assert!(!den.is_zero(), "zero denominator");
    let negative = num.is_negative() != den.is_negative() && !num.is_zero();
    let (whole, rem) = num.abs().div_rem(&den.abs());
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let scaled = rem * BigInt::from(10u32).pow(digits as u32) / den.abs();
        let frac = scaled.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', digits - frac.len()));
        out.push_str(&frac);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = ExactRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numerator(), &BigInt::from(-3));
        assert_eq!(r.denominator(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn decimals() {
        let r = ExactRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(r.to_decimal(5), "0.33333");
        let r = ExactRational::new(BigInt::from(-7), BigInt::from(4));
        assert_eq!(r.to_decimal(3), "-1.750");
        assert_eq!(
            decimal_string(&BigInt::from(-1), &BigInt::from(40), 3),
            "-0.025"
        );
        assert_eq!(decimal_string(&BigInt::from(5), &BigInt::from(1), 0), "5");
    }

    #[test]
    fn to_float() {
        let r = ExactRational::new(BigInt::from(1), BigInt::from(8));
        assert_eq!(r.to_real::<f64>(), 0.125);
    }
}
