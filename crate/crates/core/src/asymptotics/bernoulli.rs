//! Exact Bernoulli numbers (convention `B_1 = -1/2`) and Bernoulli
//! polynomials `B_n(x) = Σ_k C(n,k) B_k x^{n-k}`.

use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::real::Real;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BernoulliCache {
    numbers: Vec<BigRational>,
    /// Row `n` of Pascal's triangle for `n = 0..=N + 1`.
    binomials: Vec<Vec<BigInt>>,
}

fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(rows + 1);
    for n in 0..=rows {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &out[n - 1][k - 1] + &out[n - 1][k];
        }
        out.push(row);
    }
    out
}

/// A process-wide cache covering at least `B_0..=B_max`, grown on demand.
pub fn shared_bernoulli(max: usize) -> Arc<BernoulliCache> {
    static SHARED: Mutex<Option<Arc<BernoulliCache>>> = Mutex::new(None);
    let mut slot = SHARED.lock().expect("poisoned");
    match slot.as_ref() {
        Some(cache) if cache.max() >= max => Arc::clone(cache),
        _ => {
            let cache = Arc::new(BernoulliCache::new(max));
            *slot = Some(Arc::clone(&cache));
            cache
        }
    }
}

impl BernoulliCache {
    /// `B_0..=B_max` from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`.
    pub fn new(max: usize) -> Self {
        let binomials = pascal(max + 1);
        let mut numbers: Vec<BigRational> = Vec::with_capacity(max + 1);
        numbers.push(BigRational::one());
        for n in 1..=max {
            if n >= 3 && n % 2 == 1 {
                numbers.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (k, b) in numbers.iter().enumerate() {
                if !b.is_zero() {
                    acc += BigRational::from_integer(binomials[n + 1][k].clone()) * b;
                }
            }
            numbers.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        Self { numbers, binomials }
    }

    pub fn max(&self) -> usize {
        self.numbers.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max() {
            return Err(Error::TableTooSmall {
                requested: n,
                available: self.max(),
            });
        }
        Ok(())
    }

    pub fn number(&self, n: usize) -> Result<&BigRational> {
        self.check(n)?;
        Ok(&self.numbers[n])
    }

    /// `B_n(x)` in exact arithmetic.
    pub fn poly_rational(&self, n: usize, x: &BigRational) -> Result<BigRational> {
        self.check(n)?;
        // Horner in x over the coefficients C(n,k) B_k of x^{n-k}
        let mut acc = BigRational::zero();
        for k in 0..=n {
            acc = acc * x
                + BigRational::from_integer(self.binomials[n][k].clone()) * &self.numbers[k];
        }
        Ok(acc)
    }

    pub fn poly<R: Real>(&self, n: usize, x: &BigRational) -> Result<R> {
        Ok(R::from_rational(&self.poly_rational(n, x)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn known_numbers() {
        let c = BernoulliCache::new(30);
        assert_eq!(c.number(0).unwrap(), &q(1, 1));
        assert_eq!(c.number(1).unwrap(), &q(-1, 2));
        assert_eq!(c.number(2).unwrap(), &q(1, 6));
        assert_eq!(c.number(4).unwrap(), &q(-1, 30));
        assert_eq!(c.number(12).unwrap(), &q(-691, 2730));
        assert_eq!(c.number(30).unwrap(), &q(8615841276005, 14322));
        for k in 1..15 {
            assert!(c.number(2 * k + 1).unwrap().is_zero());
        }
        assert!(c.number(31).is_err());
    }

    #[test]
    fn polynomial_values() {
        let c = BernoulliCache::new(20);
        assert_eq!(c.poly_rational(1, &q(1, 1)).unwrap(), q(1, 2));
        assert_eq!(c.poly_rational(4, &q(0, 1)).unwrap(), q(-1, 30));
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(
            c.poly_rational(2, &q(1, 3)).unwrap(),
            q(1, 9) - q(1, 3) + q(1, 6)
        );
        // B_n(1/2) = (2^{1-n} - 1) B_n
        for n in 0..=20usize {
            let want = (q(2, 1) / BigRational::from_integer(BigInt::from(2).pow(n as u32))
                - q(1, 1))
                * c.number(n).unwrap();
            assert_eq!(c.poly_rational(n, &q(1, 2)).unwrap(), want);
        }
        for n in 0..=20 {
            let at_one = c.poly_rational(n, &q(1, 1)).unwrap();
            if n == 1 {
                assert_eq!(at_one, q(1, 2));
            } else {
                assert_eq!(&at_one, c.number(n).unwrap());
            }
        }
    }

    #[test]
    fn reflection_and_difference() {
        let c = BernoulliCache::new(16);
        let x = q(2, 7);
        for n in 1..=16usize {
            // B_n(1 - x) = (-1)^n B_n(x)
            let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(
                c.poly_rational(n, &(q(1, 1) - &x)).unwrap(),
                sign * c.poly_rational(n, &x).unwrap()
            );
            // B_n(x + 1) - B_n(x) = n x^{n-1}
            let diff =
                c.poly_rational(n, &(&x + q(1, 1))).unwrap() - c.poly_rational(n, &x).unwrap();
            let want = q(n as i64, 1) * num_traits::pow(x.clone(), n - 1);
            assert_eq!(diff, want);
        }
    }
}
