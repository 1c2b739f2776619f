//! The constants `γ_{m,h}` in `ζ_{m,h}(s) = (1/m)/(s-1) + γ/m + γ_{m,h} + O(s-1)`,
//! where `ζ_{m,h}(s) = Σ_{d ≡ h (mod m)} d^{-s}`, by three independent routes.

use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;

use super::bernoulli::BernoulliCache;
use super::complex::Complex;
use super::real::Real;
use crate::check_index;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaMethod {
    RootsOfUnity,
    GaussReal,
    Digamma,
}

impl GammaMethod {
    pub const ALL: [GammaMethod; 3] = [Self::RootsOfUnity, Self::GaussReal, Self::Digamma];

    pub fn name(self) -> &'static str {
        match self {
            Self::RootsOfUnity => "roots-of-unity",
            Self::GaussReal => "gauss-real",
            Self::Digamma => "digamma",
        }
    }

    pub fn evaluate<R: Real>(self, m: usize, h: usize) -> Result<R> {
        match self {
            Self::RootsOfUnity => gamma_mh_roots(m, h),
            Self::GaussReal => gamma_mh_gauss(m, h),
            Self::Digamma => gamma_mh_digamma(m, h),
        }
    }
}

impl fmt::Display for GammaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `γ_{m,1}, ..., γ_{m,m}` computed by one method.
#[derive(Clone, Debug)]
pub struct GammaConstants<R> {
    pub m: usize,
    pub values: Vec<R>,
    pub method: GammaMethod,
}

impl<R: Real> GammaConstants<R> {
    pub fn compute(m: usize, method: GammaMethod) -> Result<Self> {
        let values = (1..=m)
            .map(|h| method.evaluate(m, h))
            .collect::<Result<Vec<R>>>()?;
        Ok(Self { m, values, method })
    }

    /// `γ_{m,h}` for `h` taken modulo `m` (any integer).
    pub fn get(&self, h: i64) -> R {
        self.values[crate::canonical_residue(h, self.m) - 1]
    }

    /// `Σ_h γ_{m,h}`, zero in exact arithmetic.
    pub fn sum(&self) -> R {
        self.values.iter().fold(R::zero(), |acc, &v| acc + v)
    }
}

fn ensure_real<R: Real>(z: Complex<R>, what: &str) -> Result<R> {
    let scale = R::one().max(z.re.abs());
    if !z.im.is_finite() || z.im.abs() > R::tolerance() * scale {
        return Err(Error::Consistency(format!(
            "{what}: imaginary residue {} exceeds tolerance",
            z.im.to_decimal()
        )));
    }
    Ok(z.re)
}

/// `log(1 - ω^ℓ)` with `ω = exp(2πi/m)`.
pub(crate) fn log_one_minus_root<R: Real>(l: i64, m: usize) -> Complex<R> {
    (Complex::one() - Complex::root_of_unity(l, m)).ln()
}

/// `(1/m) Σ_{ℓ=1}^{m-1} ω^{-hℓ} log(1/(1-ω^ℓ))` in complex arithmetic.
pub fn gamma_mh_roots<R: Real>(m: usize, h: usize) -> Result<R> {
    check_index(m, h)?;
    let mut acc = Complex::<R>::zero();
    for l in 1..m as i64 {
        let w = Complex::root_of_unity(-(h as i64) * l, m);
        acc = acc - w * log_one_minus_root(l, m);
    }
    let z = acc.scale(R::one() / R::from_int(m as i64));
    ensure_real(z, &format!("gamma_{m},{h} via roots of unity"))
}

/// `Σ_{0<k<q/2} cos(2πpk/q) · log sin(πk/q)`.
fn log_sine_sum<R: Real>(p: usize, q: usize) -> R {
    let pi = R::pi();
    let qr = R::from_int(q as i64);
    let mut acc = R::zero();
    let mut k = 1;
    while 2 * k < q {
        let angle = pi * R::from_int(2 * ((p * k) % q) as i64) / qr;
        let sine = (pi * R::from_int(k as i64) / qr).sin();
        acc += angle.cos() * sine.ln();
        k += 1;
    }
    acc
}

/// `cot(πp/q)` for `0 < p < q`; exactly zero at `p/q = 1/2`.
fn cot_pi<R: Real>(p: usize, q: usize) -> R {
    if 2 * p == q {
        return R::zero();
    }
    let (s, c) = (R::pi() * R::from_int(p as i64) / R::from_int(q as i64)).sin_cos();
    c / s
}

/// The real closed form
/// `(1/m)[(π/2)cot(hπ/m) + log 2 - 2 Σ_{0<k<m/2} cos(2hkπ/m) log sin(kπ/m)]`,
/// and `-log(m)/m` for `h = m`.
pub fn gamma_mh_gauss<R: Real>(m: usize, h: usize) -> Result<R> {
    check_index(m, h)?;
    let mr = R::from_int(m as i64);
    if h == m {
        return Ok(-mr.ln() / mr);
    }
    let two = R::from_int(2);
    let bracket = R::pi() / two * cot_pi(h, m) + R::ln2() - two * log_sine_sum(h, m);
    Ok(bracket / mr)
}

/// `-(γ + log m + ψ(h/m))/m`, with `ψ` from [`digamma`].
pub fn gamma_mh_digamma<R: Real>(m: usize, h: usize) -> Result<R> {
    check_index(m, h)?;
    let mr = R::from_int(m as i64);
    let x = R::from_int(h as i64) / mr;
    Ok(-(R::euler_gamma() + mr.ln() + digamma(x)?) / mr)
}

/// `ψ(p/q)` from the closed form
/// `-γ - (π/2)cot(pπ/q) - log(2q) + 2 Σ_{0<k<q/2} cos(2pkπ/q) log sin(kπ/q)`.
pub fn digamma_rational<R: Real>(p: usize, q: usize) -> Result<R> {
    if p == 0 || p > q {
        return Err(Error::InvalidArgument(format!(
            "digamma_rational needs 1 <= p <= q, got p = {p}, q = {q}"
        )));
    }
    if p == q {
        return Ok(-R::euler_gamma());
    }
    let two = R::from_int(2);
    Ok(
        -R::euler_gamma() - R::pi() / two * cot_pi(p, q) - R::from_int(2 * q as i64).ln()
            + two * log_sine_sum(p, q),
    )
}

const DIGAMMA_SHIFT: f64 = 40.0;
const DIGAMMA_TERMS: usize = 20;

fn digamma_bernoulli() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(|| BernoulliCache::new(2 * DIGAMMA_TERMS))
}

/// `ψ(x)` for real `x > 0`: shift with `ψ(x) = ψ(x+1) - 1/x` until
/// `x >= 40`, then `ψ(y) ~ log y - 1/(2y) - Σ_k B_{2k} / (2k y^{2k})`.
pub fn digamma<R: Real>(x: R) -> Result<R> {
    if !x.is_finite() || x <= R::zero() {
        return Err(Error::InvalidArgument(format!(
            "digamma needs a finite positive argument, got {}",
            x.to_decimal()
        )));
    }
    let mut y = x;
    let mut shift = R::zero();
    while y.to_f64() < DIGAMMA_SHIFT {
        shift += R::one() / y;
        y += R::one();
    }
    let inv2 = R::one() / (y * y);
    let mut series = R::zero();
    let mut power = inv2;
    let bern = digamma_bernoulli();
    for k in 1..=DIGAMMA_TERMS {
        let b = bern.number(2 * k)?;
        let coeff: R = R::from_rational(&(b / BigRational::from_integer((2 * k).into())));
        let term = coeff * power;
        series += term;
        if term.abs() <= R::epsilon() * series.abs() {
            break;
        }
        power *= inv2;
    }
    Ok(y.ln() - R::one() / (R::from_int(2) * y) - series - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::DoubleDouble;

    type Dd = DoubleDouble;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().to_f64() < tol
    }

    #[test]
    fn small_moduli() {
        assert_eq!(gamma_mh_roots::<Dd>(1, 1).unwrap(), Dd::zero());
        assert_eq!(gamma_mh_gauss::<Dd>(1, 1).unwrap(), Dd::zero());
        let half_ln2 = Dd::ln2() / Dd::from_int(2);
        assert!(close(gamma_mh_roots(2, 1).unwrap(), half_ln2, 1e-30));
        assert!(close(gamma_mh_roots(2, 2).unwrap(), -half_ln2, 1e-30));
        assert!(close(gamma_mh_gauss(2, 1).unwrap(), half_ln2, 1e-30));
        assert!(close(gamma_mh_digamma(2, 1).unwrap(), half_ln2, 1e-28));
        assert!(close(gamma_mh_digamma(1, 1).unwrap(), Dd::zero(), 1e-28));
        let quarter_ln4 = -Dd::from_int(4).ln() / Dd::from_int(4);
        assert!(close(gamma_mh_gauss(4, 4).unwrap(), quarter_ln4, 1e-30));
        assert!(close(gamma_mh_roots(4, 4).unwrap(), quarter_ln4, 1e-30));
    }

    #[test]
    fn three_routes_agree() {
        for m in 1..=24 {
            for h in 1..=m {
                let r: Dd = gamma_mh_roots(m, h).unwrap();
                let g: Dd = gamma_mh_gauss(m, h).unwrap();
                let d: Dd = gamma_mh_digamma(m, h).unwrap();
                assert!(close(r, g, 1e-25), "m={m} h={h}: {r} vs {g}");
                assert!(close(r, d, 1e-25), "m={m} h={h}: {r} vs {d}");
            }
            let all = GammaConstants::<Dd>::compute(m, GammaMethod::RootsOfUnity).unwrap();
            assert!(all.sum().abs().to_f64() < 1e-25);
            assert_eq!(all.get(0), all.values[m - 1]);
        }
    }

    #[test]
    fn double_backend_agrees() {
        for m in 1..=12 {
            for h in 1..=m {
                let r: f64 = gamma_mh_roots(m, h).unwrap();
                let g: f64 = gamma_mh_gauss(m, h).unwrap();
                let d: f64 = gamma_mh_digamma(m, h).unwrap();
                assert!((r - g).abs() < 1e-12 && (r - d).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn digamma_values() {
        let psi = |s: &str| Dd::from_decimal_str(s).unwrap();
        let third: Dd = digamma_rational(1, 3).unwrap();
        assert!(close(
            third,
            psi("-3.132033780020806322996419074287268854155"),
            1e-29
        ));
        let five_sixths: Dd = digamma_rational(5, 6).unwrap();
        assert!(close(
            five_sixths,
            psi("-0.8907294126722612406427268019193105257383"),
            1e-29
        ));
        let general: Dd = digamma(Dd::from_int(1) / Dd::from_int(3)).unwrap();
        assert!(close(general, third, 1e-29));
        assert_eq!(digamma_rational::<Dd>(1, 1).unwrap(), -Dd::euler_gamma());
        let half: Dd = digamma_rational(1, 2).unwrap();
        let want = -Dd::euler_gamma() - Dd::from_int(2) * Dd::ln2();
        assert!(close(half, want, 1e-30));
        assert!(digamma_rational::<f64>(0, 3).is_err());
        assert!(digamma_rational::<f64>(4, 3).is_err());
        assert!(digamma::<f64>(-1.0).is_err());
    }

    #[test]
    fn digamma_recurrence_and_large_argument() {
        for x in [0.05, 0.7, 3.25, 41.0, 1000.0] {
            let a = digamma(x + 1.0).unwrap();
            let b = digamma(x).unwrap() + 1.0 / x;
            assert!((a - b).abs() < 1e-13 * a.abs().max(1.0), "x = {x}");
        }
    }
}
