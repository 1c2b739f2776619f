//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! values with `|lo| <= ulp(hi) / 2`, giving about 32 significant decimal
//! digits. The basic operations follow the error-free transformations of
//! Dekker and Knuth; `exp`, `ln`, `sin_cos` and `atan2` use argument
//! reduction plus Taylor series or one Newton step from the `f64` result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::real::{
    ldexp, parse_decimal, ratio_parts, Real, EULER_GAMMA_DIGITS, LN2_DIGITS, PI_DIGITS,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const EPS: f64 = 4.93038065763132e-32; // 2^-104

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn from_digits(digits: &str) -> Self {
        let r = parse_decimal(digits).expect("valid literal");
        <Self as Real>::from_rational(&r)
    }

    /// Multiplication by a power of two (exact).
    fn scale(self, factor: f64) -> Self {
        Self {
            hi: self.hi * factor,
            lo: self.lo * factor,
        }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Self { hi, lo }
    }

    fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (s, e) = two_sum(self.hi, -p1);
        let e = e + self.lo - p2;
        let q2 = (s + e) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    fn sqr(self) -> Self {
        let (p1, p2) = two_prod(self.hi, self.hi);
        let p2 = p2 + 2.0 * self.hi * self.lo + self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    fn ldexp(self, e: i64) -> Self {
        Self {
            hi: ldexp(self.hi, e),
            lo: ldexp(self.lo, e),
        }
    }

    fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    /// `exp(r) - 1` for `|r| <= ln(2)/2`: Taylor series on `r / 512`, then
    /// nine doublings `s -> 2s + s^2`.
    fn exp_m1_reduced(r: Self) -> Self {
        let x = r.scale(1.0 / 512.0);
        let mut sum = x;
        let mut term = x;
        for k in 2..40 {
            term = (term * x).div_f64(k as f64);
            sum += term;
            if term.hi.abs() <= EPS * 1e-3 * sum.hi.abs() {
                break;
            }
        }
        for _ in 0..9 {
            sum = sum.scale(2.0) + sum.sqr();
        }
        sum
    }

    fn sin_taylor(t: Self) -> Self {
        let t2 = t.sqr();
        let mut sum = t;
        let mut term = t;
        for k in 1..40 {
            let k = k as f64;
            term = -(term * t2).div_f64((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
            if term.hi.abs() <= EPS * 1e-3 * sum.hi.abs() {
                break;
            }
        }
        sum
    }

    fn cos_taylor(t: Self) -> Self {
        let t2 = t.sqr();
        let mut sum = Self::ONE;
        let mut term = Self::ONE;
        for k in 1..40 {
            let k = k as f64;
            term = -(term * t2).div_f64((2.0 * k - 1.0) * (2.0 * k));
            sum += term;
            if term.hi.abs() <= EPS * 1e-3 * sum.hi.abs() {
                break;
            }
        }
        sum
    }

    /// Exact rational value of `hi + lo`; `None` for non-finite values.
    pub fn to_rational(self) -> Option<BigRational> {
        let hi = BigRational::from_float(self.hi)?;
        let lo = BigRational::from_float(self.lo)?;
        Some(hi + lo)
    }

    /// Scientific notation with `sig` significant digits, rounded to nearest.
    pub fn to_sci_string(self, sig: usize) -> String {
        let Some(r) = self.to_rational() else {
            return format!("{}", self.hi);
        };
        if r.is_zero() {
            return "0".to_string();
        }
        let negative = r.is_negative();
        let r = r.abs();
        let ten = BigRational::from_integer(BigInt::from(10));
        let mut exp10 = self.hi.abs().log10().floor() as i32;
        let pow10 = |e: i32| {
            if e >= 0 {
                ten.pow(e)
            } else {
                BigRational::from_integer(BigInt::from(1)) / ten.pow(-e)
            }
        };
        // settle 10^e <= r < 10^(e+1) exactly
        while r < pow10(exp10) {
            exp10 -= 1;
        }
        while r >= pow10(exp10 + 1) {
            exp10 += 1;
        }
        let scaled = r * pow10(sig as i32 - 1 - exp10);
        let mut digits = scaled.round().to_integer().to_string();
        if digits.len() > sig {
            digits.truncate(sig);
            exp10 += 1;
        }
        let sign = if negative { "-" } else { "" };
        let (lead, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{exp10}")
        } else {
            format!("{sign}{lead}.{rest}e{exp10}")
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;

    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from(q3)
    }
}

macro_rules! assign_ops {
    ($($trait:ident $method:ident $op:tt),*) => {$(
        impl $trait for DoubleDouble {
            fn $method(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }
    )*};
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string(32))
    }
}

fn cached(cell: &'static OnceLock<DoubleDouble>, digits: &str) -> DoubleDouble {
    *cell.get_or_init(|| DoubleDouble::from_digits(digits))
}

static PI: OnceLock<DoubleDouble> = OnceLock::new();
static LN2: OnceLock<DoubleDouble> = OnceLock::new();
static EULER_GAMMA: OnceLock<DoubleDouble> = OnceLock::new();

impl Real for DoubleDouble {
    const NAME: &'static str = "extended";

    fn from_f64(x: f64) -> Self {
        Self::from(x)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        let (hi, lo, shift) = ratio_parts(num, den);
        Self::new(hi, lo).ldexp(-shift)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn epsilon() -> Self {
        Self::from(EPS)
    }

    fn tolerance() -> Self {
        Self::ONE.div_f64(1e10)
    }

    fn pi() -> Self {
        cached(&PI, PI_DIGITS)
    }

    fn ln2() -> Self {
        cached(&LN2, LN2_DIGITS)
    }

    fn euler_gamma() -> Self {
        cached(&EULER_GAMMA, EULER_GAMMA_DIGITS)
    }

    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        if self.hi < 0.0 {
            return Self::from(f64::NAN);
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let (p1, p2) = two_prod(ax, ax);
        let residual = self - Self::new(p1, p2);
        Self::from(ax) + Self::from(residual.hi * x * 0.5)
    }

    fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Self::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Self::ZERO;
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - Self::ln2().mul_f64(k);
        (Self::exp_m1_reduced(r) + Self::ONE).ldexp(k as i64)
    }

    fn exp_m1(self) -> Self {
        if self.hi.abs() <= 0.5 * std::f64::consts::LN_2 {
            Self::exp_m1_reduced(self)
        } else {
            self.exp() - Self::ONE
        }
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from(f64::NAN);
        }
        // one Newton step on exp(y) = x from the f64 logarithm
        let y = Self::from(self.hi.ln());
        y + self * (-y).exp() - Self::ONE
    }

    fn sin_cos(self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::ZERO, Self::ONE);
        }
        let two_pi = Self::pi().scale(2.0);
        let half_pi = Self::pi().scale(0.5);
        let turns = (self.hi / two_pi.hi).round();
        let r = self - two_pi.mul_f64(turns);
        let quadrant = (r.hi / half_pi.hi).round();
        let t = r - half_pi.mul_f64(quadrant);
        let (s, c) = (Self::sin_taylor(t), Self::cos_taylor(t));
        match (quadrant as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn atan2(self, x: Self) -> Self {
        let y = self;
        if x.is_zero() && y.is_zero() {
            return Self::ZERO;
        }
        let r = (x.sqr() + y.sqr()).sqrt();
        let (xx, yy) = (x / r, y / r);
        let mut z = Self::from(y.hi.atan2(x.hi));
        let (s, c) = z.sin_cos();
        if xx.hi.abs() > yy.hi.abs() {
            z += (yy - s) / c;
        } else {
            z -= (xx - c) / s;
        }
        z
    }

    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    fn to_decimal(self) -> String {
        self.to_sci_string(32)
    }
}
