//! The floating-point abstraction shared by the asymptotic formulas, with
//! `f64` and [`DoubleDouble`](super::DoubleDouble) backends.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

pub const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510";
pub const LN2_DIGITS: &str = "0.69314718055994530941723212145817656807550013436025";
pub const EULER_GAMMA_DIGITS: &str = "0.57721566490153286060651209008240243104215933593992";

pub trait Real:
    Copy
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// Short name of the backend, as used on the command line.
    const NAME: &'static str;

    fn from_f64(x: f64) -> Self;

    /// Nearest representable value to `num / den`.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self;

    fn to_f64(self) -> f64;

    /// Unit roundoff.
    fn epsilon() -> Self;

    /// Default tolerance for quantities that vanish identically
    /// (imaginary residues, sum rules, cross-formula agreement).
    fn tolerance() -> Self;

    fn pi() -> Self;
    fn ln2() -> Self;
    /// Euler's constant.
    fn euler_gamma() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    /// `exp(self) - 1` without cancellation near zero.
    fn exp_m1(self) -> Self;
    /// Natural logarithm.
    fn ln(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn atan2(self, x: Self) -> Self;
    fn is_finite(self) -> bool;

    /// Decimal rendering with the backend's full precision.
    fn to_decimal(self) -> String;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn from_int(x: i64) -> Self {
        Self::from_ratio(&BigInt::from(x), &BigInt::from(1))
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_ratio(r.numer(), r.denom())
    }

    /// Parses `[-]digits[.digits][e[-]digits]` exactly, then rounds once.
    fn from_decimal_str(s: &str) -> Option<Self> {
        parse_decimal(s).map(|r| Self::from_rational(&r))
    }

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

/// Exact value of a decimal literal.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let mut num = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    if negative {
        num = -num;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        BigRational::from_integer(num * ten.pow(scale as u32))
    } else {
        BigRational::new(num, ten.pow(scale.unsigned_abs()))
    })
}

/// Splits `num / den` into `(hi, lo, shift)` with
/// `num / den ≈ (hi + lo) * 2^-shift`, carrying about 110 significant bits.
pub(crate) fn ratio_parts(num: &BigInt, den: &BigInt) -> (f64, f64, i64) {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return (0.0, 0.0, 0);
    }
    let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
    let (n, d) = (num.magnitude(), den.magnitude());
    let shift = 110 - (n.bits() as i64 - d.bits() as i64);
    let q = if shift >= 0 {
        (n << shift as usize) / d
    } else {
        n / (d << (-shift) as usize)
    };
    let hi = q.to_f64().expect("finite quotient");
    // q >= 2^109, so hi is integral and converts exactly
    let hi_int = BigInt::from_f64(hi).expect("finite quotient");
    let lo = (BigInt::from(q) - hi_int)
        .to_f64()
        .expect("finite remainder");
    if negative {
        (-hi, -lo, shift)
    } else {
        (hi, lo, shift)
    }
}

/// `x * 2^e` without intermediate overflow of the scale factor.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    const STEP: i64 = 1000;
    while e > STEP {
        x *= 2f64.powi(STEP as i32);
        e -= STEP;
    }
    while e < -STEP {
        x *= 2f64.powi(-STEP as i32);
        e += STEP;
    }
    x * 2f64.powi(e as i32)
}

impl Real for f64 {
    const NAME: &'static str = "double";

    fn from_f64(x: f64) -> Self {
        x
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        let (hi, lo, shift) = ratio_parts(num, den);
        ldexp(hi + lo, -shift)
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn epsilon() -> Self {
        f64::EPSILON / 2.0
    }

    fn tolerance() -> Self {
        1e-8
    }

    fn pi() -> Self {
        std::f64::consts::PI
    }

    fn ln2() -> Self {
        std::f64::consts::LN_2
    }

    fn euler_gamma() -> Self {
        0.577_215_664_901_532_9
    }

    fn abs(self) -> Self {
        f64::abs(self)
    }

    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }

    fn exp(self) -> Self {
        f64::exp(self)
    }

    fn exp_m1(self) -> Self {
        f64::exp_m1(self)
    }

    fn ln(self) -> Self {
        f64::ln(self)
    }

    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }

    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }

    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }

    fn to_decimal(self) -> String {
        format!("{self:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        let r = parse_decimal("-12.5e-1").unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(-5), BigInt::from(4)));
        assert_eq!(
            parse_decimal("3").unwrap(),
            BigRational::from_integer(3.into())
        );
        assert_eq!(
            parse_decimal(".25").unwrap(),
            BigRational::new(1.into(), 4.into())
        );
        assert!(parse_decimal("1.2.3").is_none());
        assert!(parse_decimal("abc").is_none());
        assert!(parse_decimal("").is_none());
    }

    #[test]
    fn f64_from_huge_ratio() {
        let big = BigInt::from(10).pow(400);
        let x = f64::from_ratio(&(big.clone() * 3), &(big * 2));
        assert_eq!(x, 1.5);
        let tiny = f64::from_ratio(&BigInt::from(1), &BigInt::from(3));
        assert_eq!(tiny, 1.0 / 3.0);
        assert_eq!(f64::from_ratio(&BigInt::from(-7), &BigInt::from(2)), -3.5);
    }

    #[test]
    fn powi_matches_repeated_product() {
        assert_eq!(2f64.powi(10), 1024.0);
        assert_eq!(<f64 as Real>::powi(2.0, -2), 0.25);
        assert_eq!(<f64 as Real>::powi(3.0, 0), 1.0);
    }
}
