//! The Lambert series `Σ_k τ_{m,h}(k) e^{-kα} = Σ_{d ≡ h (mod m)} 1/(e^{dα} - 1)`:
//! direct summation and the small-`α` asymptotic expansion
//! `(1/m) α^{-1} log α^{-1} + (γ/m + γ_{m,h}) α^{-1}
//!  - Σ_{n>=0} B_{n+1} B_{n+1}(h/m) (αm)^n / ((n+1)! (n+1))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::{shared_bernoulli, BernoulliCache};
use super::gamma::gamma_mh_gauss;
use super::real::Real;
use crate::check_index;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TERMS: usize = 200;

/// Relative size below which a tail term can no longer change the sum at
/// working precision, in units of the backend epsilon.
const RESOLUTION_FACTOR: f64 = 1e4;

#[derive(Clone, Debug)]
pub struct SeriesEvaluation<R> {
    pub value: R,
    /// `(1/m) α^{-1} log α^{-1} + (γ/m + γ_{m,h}) α^{-1}`.
    pub main_part: R,
    /// Tail terms included, counting the identically-zero ones skipped on the way.
    pub terms_used: usize,
    /// Magnitude of the last nonzero tail term included.
    pub last_term_magnitude: R,
    pub warning: Option<String>,
}

fn check_alpha<R: Real>(alpha: R) -> Result<()> {
    if !alpha.is_finite() || alpha <= R::zero() {
        return Err(Error::InvalidArgument(format!(
            "alpha must be positive and finite, got {}",
            alpha.to_decimal()
        )));
    }
    Ok(())
}

/// Direct summation over `d ≡ h (mod m)`, stopped once the remaining tail
/// (bounded by a geometric series with ratio `e^{-mα}`) is below `1e-30`
/// relative.
pub fn lambert_tau_exact<R: Real>(alpha: R, m: usize, h: usize) -> Result<R> {
    check_alpha(alpha)?;
    check_index(m, h)?;
    let step = alpha * R::from_int(m as i64);
    let tail_factor = R::one() / step.exp_m1();
    let threshold = R::from_f64(1e-30);
    let mut sum = R::zero();
    let mut d = h as i64;
    loop {
        let term = R::one() / (alpha * R::from_int(d)).exp_m1();
        sum += term;
        if term * tail_factor < threshold * sum || term == R::zero() {
            return Ok(sum);
        }
        d += m as i64;
    }
}

/// Exact coefficient `B_{n+1} B_{n+1}(h/m) / ((n+1)! (n+1))` of `(αm)^n`.
pub fn tail_coefficient(
    cache: &BernoulliCache,
    n: usize,
    m: usize,
    h: usize,
) -> Result<BigRational> {
    let x = BigRational::new(BigInt::from(h), BigInt::from(m));
    let b = cache.number(n + 1)?;
    if b.is_zero() {
        return Ok(BigRational::zero());
    }
    let poly = cache.poly_rational(n + 1, &x)?;
    let mut denom = BigInt::one();
    for k in 2..=(n + 1) {
        denom *= k;
    }
    denom *= n + 1;
    Ok(b * poly / BigRational::from_integer(denom))
}

pub fn lambert_tau_asymptotic<R: Real>(
    alpha: R,
    m: usize,
    h: usize,
    max_terms: usize,
) -> Result<SeriesEvaluation<R>> {
    check_alpha(alpha)?;
    check_index(m, h)?;
    let mr = R::from_int(m as i64);
    let inv = R::one() / alpha;
    let gamma_mh: R = gamma_mh_gauss(m, h)?;
    let main_part = inv * inv.ln() / mr + (R::euler_gamma() / mr + gamma_mh) * inv;

    let cache = shared_bernoulli(max_terms + 1);
    let x = alpha * mr;
    let floor = R::from_f64(RESOLUTION_FACTOR) * R::epsilon();
    let mut tail = R::zero();
    let mut power = R::one();
    let mut previous: Option<R> = None;
    let mut terms_used = 0;
    for n in 0..max_terms {
        let coeff = tail_coefficient(&cache, n, m, h)?;
        if n > 0 {
            power *= x;
        }
        if coeff.is_zero() {
            terms_used = n + 1;
            continue;
        }
        let term = R::from_rational(&coeff) * power;
        let magnitude = term.abs();
        if previous.is_some_and(|p| magnitude > p) {
            break;
        }
        if previous.is_some() && magnitude < floor * (main_part - tail).abs() {
            break;
        }
        tail += term;
        previous = Some(magnitude);
        terms_used = n + 1;
    }

    let last_term_magnitude = previous.unwrap_or_else(R::zero);
    let warning = if terms_used <= 1 && max_terms > 1 {
        let text = format!(
            "series truncated at its first term for alpha = {}; the expansion is not yet asymptotic",
            alpha.to_decimal()
        );
        log::warn!("{text}");
        Some(text)
    } else {
        None
    };
    Ok(SeriesEvaluation {
        value: main_part - tail,
        main_part,
        terms_used,
        last_term_magnitude,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::DoubleDouble;
    use crate::exact::DivisorSumTables;

    type Dd = DoubleDouble;

    #[test]
    fn constant_tail_term_is_one_quarter() {
        let cache = BernoulliCache::new(4);
        assert_eq!(
            tail_coefficient(&cache, 0, 1, 1).unwrap(),
            -BigRational::new(1.into(), 4.into())
        );
    }

    #[test]
    fn large_alpha_is_first_term() {
        let v: Dd = lambert_tau_exact(Dd::from_int(50), 1, 1).unwrap();
        let want = Dd::one() / Dd::from_int(50).exp_m1();
        assert!(((v - want) / want).abs().to_f64() < 1e-20);
        assert!((v.to_f64() / (-50f64).exp() - 1.0).abs() < 1e-20);
        assert!(lambert_tau_exact::<f64>(0.0, 1, 1).is_err());
        assert!(lambert_tau_asymptotic::<f64>(-1.0, 1, 1, 10).is_err());
    }

    #[test]
    fn divisor_order_matches_lambert_order() {
        let alpha = Dd::from_f64(0.1);
        let cutoff = 900;
        let tables = DivisorSumTables::build(cutoff, 1, 1).unwrap();
        let mut direct = Dd::zero();
        for k in (1..=cutoff).rev() {
            direct += Dd::from_int(tables.tau(k) as i64) * (-alpha * Dd::from_int(k as i64)).exp();
        }
        let lambert: Dd = lambert_tau_exact(alpha, 1, 1).unwrap();
        assert!(((direct - lambert) / lambert).abs().to_f64() < 1e-12);
    }

    #[test]
    fn residue_classes_partition_divisors() {
        let alpha = Dd::from_f64(0.05);
        let whole: Dd = lambert_tau_exact(alpha, 1, 1).unwrap();
        for m in 2..=6 {
            let mut sum = Dd::zero();
            for h in 1..=m {
                sum += lambert_tau_exact(alpha, m, h).unwrap();
            }
            assert!(((sum - whole) / whole).abs().to_f64() < 1e-28);
        }
    }

    #[test]
    fn asymptotic_matches_exact() {
        for (m, h) in [(1, 1), (3, 2), (4, 1), (6, 6)] {
            let alpha = Dd::from_f64(0.01);
            let exact: Dd = lambert_tau_exact(alpha, m, h).unwrap();
            let series = lambert_tau_asymptotic(alpha, m, h, DEFAULT_MAX_TERMS).unwrap();
            let err = (exact - series.value).abs();
            assert!(
                err <= series.last_term_magnitude,
                "m={m} h={h}: {err} > {}",
                series.last_term_magnitude
            );
            assert!(series.warning.is_none());
        }
    }

    #[test]
    fn warns_when_alpha_is_large() {
        let series = lambert_tau_asymptotic::<f64>(40.0, 1, 1, 50).unwrap();
        assert!(series.warning.is_some());
        assert_eq!(series.terms_used, 1);
    }
}
