//! Minimal complex arithmetic over a [`Real`] backend.

use std::ops::{Add, Div, Mul, Sub};

use super::real::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Complex<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Complex<R> {
    pub fn new(re: R, im: R) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(R::zero(), R::zero())
    }

    pub fn one() -> Self {
        Self::new(R::one(), R::zero())
    }

    /// `exp(2πi · p/q)`, with `p` reduced modulo `q` before the angle is formed.
    pub fn root_of_unity(p: i64, q: usize) -> Self {
        let p = p.rem_euclid(q as i64);
        let angle = R::pi() * R::from_int(2 * p) / R::from_int(q as i64);
        let (s, c) = angle.sin_cos();
        Self::new(c, s)
    }

    /// Principal branch.
    pub fn ln(self) -> Self {
        let modulus = (self.re * self.re + self.im * self.im).sqrt();
        Self::new(modulus.ln(), self.im.atan2(self.re))
    }

    pub fn scale(self, k: R) -> Self {
        Self::new(self.re * k, self.im * k)
    }
}

impl<R: Real> Add for Complex<R> {
    type Output = Self;

    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl<R: Real> Sub for Complex<R> {
    type Output = Self;

    fn sub(self, b: Self) -> Self {
        Self::new(self.re - b.re, self.im - b.im)
    }
}

impl<R: Real> Mul for Complex<R> {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl<R: Real> Div for Complex<R> {
    type Output = Self;

    fn div(self, b: Self) -> Self {
        let d = b.re * b.re + b.im * b.im;
        Self::new(
            (self.re * b.re + self.im * b.im) / d,
            (self.im * b.re - self.re * b.im) / d,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_and_log() {
        let w = Complex::<f64>::root_of_unity(1, 4);
        assert!(w.re.abs() < 1e-15 && (w.im - 1.0).abs() < 1e-15);
        assert_eq!(
            Complex::<f64>::root_of_unity(-3, 4),
            Complex::root_of_unity(1, 4)
        );
        let z = Complex::new(-1.0, 0.0).ln();
        assert!((z.im - std::f64::consts::PI).abs() < 1e-15);
        let q = Complex::new(1.0, 2.0) / Complex::new(3.0, -1.0);
        let back = q * Complex::new(3.0, -1.0);
        assert!((back.re - 1.0).abs() < 1e-15 && (back.im - 2.0).abs() < 1e-15);
    }
}
