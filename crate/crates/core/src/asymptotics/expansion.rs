//! Coefficients of `E(X_{m,i}) = n/m + b_{m,i} √n log n + c_{m,i} √n + O(log n)`
//! and the auxiliary estimates behind them.

use num_bigint::BigInt;

use super::complex::Complex;
use super::gamma::{log_one_minus_root, GammaConstants};
use super::real::Real;
use crate::check_index;
use crate::error::{Error, Result};
use crate::exact::PartitionCountTable;

/// `C = π √(2/3)`.
pub fn growth_constant<R: Real>() -> R {
    R::pi() * (R::from_int(2) / R::from_int(3)).sqrt()
}

fn centre_offset(m: usize, i: usize) -> i64 {
    m as i64 + 1 - 2 * i as i64
}

/// `b_{m,i} = (m + 1 - 2i) / (2Cm)`; exactly zero when `2i = m + 1`.
pub fn b_coeff<R: Real>(m: usize, i: usize) -> Result<R> {
    check_index(m, i)?;
    let offset = centre_offset(m, i);
    if offset == 0 {
        return Ok(R::zero());
    }
    Ok(R::from_int(offset) / (R::from_int(2 * m as i64) * growth_constant::<R>()))
}

/// `(γ + log(2/C)) (m + 1 - 2i) / (Cm)`, shared by both routes to `c_{m,i}`.
fn c_leading<R: Real>(m: usize, i: usize) -> R {
    let offset = centre_offset(m, i);
    if offset == 0 {
        return R::zero();
    }
    let c = growth_constant::<R>();
    (R::euler_gamma() + (R::from_int(2) / c).ln()) * R::from_int(offset)
        / (c * R::from_int(m as i64))
}

/// `c_{m,i}` from the roots-of-unity sum
/// `(2/(Cm)) Σ_{ℓ=1}^{m-1} ω^{-ℓ(i-1)} log(1 - ω^ℓ) / (1 - ω^ℓ)` plus the
/// leading term. The empty sum gives `c_{1,1} = 0`.
pub fn c_coeff<R: Real>(m: usize, i: usize) -> Result<R> {
    check_index(m, i)?;
    let mut acc = Complex::<R>::zero();
    for l in 1..m as i64 {
        let one_minus = Complex::one() - Complex::root_of_unity(l, m);
        let w = Complex::root_of_unity(-l * (i as i64 - 1), m);
        acc = acc + w * log_one_minus_root(l, m) / one_minus;
    }
    let scale = R::from_int(2) / (growth_constant::<R>() * R::from_int(m as i64));
    let sum = acc.scale(scale);
    let scale_ref = R::one().max(sum.re.abs());
    if !sum.im.is_finite() || sum.im.abs() > R::tolerance() * scale_ref {
        return Err(Error::Consistency(format!(
            "c_{m},{i}: imaginary residue {} exceeds tolerance",
            sum.im.to_decimal()
        )));
    }
    Ok(c_leading::<R>(m, i) + sum.re)
}

/// `c_{m,i}` assembled from the `S` and `S_j` estimates:
/// `(γ + log(2/C))(m+1-2i)/(Cm) - (2/C) Σ_{j=1}^{m-1} (j/m) γ_{m,i+j}`.
pub fn c_coeff_from_gammas<R: Real>(m: usize, i: usize, gammas: &GammaConstants<R>) -> Result<R> {
    check_index(m, i)?;
    if gammas.m != m {
        return Err(Error::InvalidArgument(format!(
            "gamma table is for modulus {}, not {m}",
            gammas.m
        )));
    }
    let mut acc = R::zero();
    for j in 1..m {
        acc += R::from_int(j as i64) * gammas.get((i + j) as i64);
    }
    let c = growth_constant::<R>();
    Ok(c_leading::<R>(m, i) - R::from_int(2) * acc / (c * R::from_int(m as i64)))
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremConstants<R> {
    pub m: usize,
    pub i: usize,
    pub b: R,
    pub c: R,
    pub growth: R,
}

impl<R: Real> TheoremConstants<R> {
    pub fn compute(m: usize, i: usize) -> Result<Self> {
        Ok(Self {
            m,
            i,
            b: b_coeff(m, i)?,
            c: c_coeff(m, i)?,
            growth: growth_constant(),
        })
    }

    /// `n/m + b √n log n + c √n`.
    pub fn predict(&self, n: u64) -> R {
        let nr = R::from_int(n as i64);
        let root = nr.sqrt();
        nr / R::from_int(self.m as i64) + self.b * root * nr.ln() + self.c * root
    }
}

fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic formulas need n >= 2, got {n}"
        )));
    }
    Ok(())
}

pub fn predict_expected_subsum<R: Real>(n: u64, m: usize, i: usize) -> Result<R> {
    check_n(n)?;
    Ok(TheoremConstants::<R>::compute(m, i)?.predict(n))
}

/// Leading behaviour of `S/p(n)` where `S = Σ_k τ(k) p(n-k)`:
/// `(1/C) √n log n + (2/C)(γ + log(2/C)) √n`.
pub fn predict_s_ratio<R: Real>(n: u64) -> Result<R> {
    check_n(n)?;
    let c = growth_constant::<R>();
    let nr = R::from_int(n as i64);
    let root = nr.sqrt();
    let two = R::from_int(2);
    Ok(root * nr.ln() / c + two / c * (R::euler_gamma() + (two / c).ln()) * root)
}

/// Leading behaviour of `S_j/p(n)` where `S_j = Σ_k τ_{m,j}(k) p(n-k)`:
/// `(1/(mC)) (√n log n + (2 log(2/C) + 2γ + 2m γ_{m,j}) √n)`.
pub fn predict_s_j_ratio<R: Real>(n: u64, gammas: &GammaConstants<R>, j: i64) -> Result<R> {
    check_n(n)?;
    let c = growth_constant::<R>();
    let m = R::from_int(gammas.m as i64);
    let nr = R::from_int(n as i64);
    let root = nr.sqrt();
    let two = R::from_int(2);
    let inner = two * (two / c).ln() + two * R::euler_gamma() + two * m * gammas.get(j);
    Ok((root * nr.ln() + inner * root) / (m * c))
}

/// `exp(C √n) / (4 n √3)`.
pub fn hardy_ramanujan_leading<R: Real>(n: u64) -> Result<R> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "hardy_ramanujan_leading needs n >= 1".into(),
        ));
    }
    let nr = R::from_int(n as i64);
    Ok((growth_constant::<R>() * nr.sqrt()).exp() / (R::from_int(4) * nr * R::from_int(3).sqrt()))
}

/// Worst case of
/// `|p(n-k)/p(n) · e^{Ck/(2√n)} - 1| / (k/n + k²/n^{3/2})` over
/// `1 <= k <= n^{2/3}`.
#[derive(Clone, Copy, Debug)]
pub struct RatioEnvelope<R> {
    pub n: usize,
    pub k_max: usize,
    pub worst: R,
    pub worst_k: usize,
}

/// Largest `k` with `k³ <= n²`.
pub fn two_thirds_power_floor(n: usize) -> usize {
    let target = (n as u128) * (n as u128);
    let mut k = (n as f64).powf(2.0 / 3.0) as u128;
    while k * k * k > target {
        k -= 1;
    }
    while (k + 1) * (k + 1) * (k + 1) <= target {
        k += 1;
    }
    k as usize
}

pub fn ratio_envelope<R: Real>(table: &PartitionCountTable, n: usize) -> Result<RatioEnvelope<R>> {
    table.ensure_covers(n)?;
    if n == 0 {
        return Err(Error::InvalidArgument("ratio envelope needs n >= 1".into()));
    }
    let k_max = two_thirds_power_floor(n);
    let pn = BigInt::from(table.get(n).clone());
    let nr = R::from_int(n as i64);
    let root = nr.sqrt();
    let c = growth_constant::<R>();
    let mut worst = R::zero();
    let mut worst_k = 0;
    for k in 1..=k_max {
        let kr = R::from_int(k as i64);
        let ratio = R::from_ratio(&BigInt::from(table.get(n - k).clone()), &pn);
        let deviation = (ratio * (c * kr / (R::from_int(2) * root)).exp() - R::one()).abs();
        let envelope = kr / nr + kr * kr / (nr * root);
        let scaled = deviation / envelope;
        if scaled > worst {
            worst = scaled;
            worst_k = k;
        }
    }
    Ok(RatioEnvelope {
        n,
        k_max,
        worst,
        worst_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::{DoubleDouble, GammaMethod};

    type Dd = DoubleDouble;

    #[test]
    fn headline_constants() {
        let b: Dd = b_coeff(2, 1).unwrap();
        let want = Dd::from_int(6).sqrt() / (Dd::from_int(8) * Dd::pi());
        assert!((b - want).abs().to_f64() < 1e-30);
        assert!((b.to_f64() - 0.09746).abs() < 1e-5);
        assert_eq!(b_coeff::<Dd>(3, 2).unwrap(), Dd::zero());
        let c: Dd = c_coeff(3, 2).unwrap();
        let want = -Dd::from_int(2).sqrt() / Dd::from_int(9);
        assert!((c - want).abs().to_f64() < 1e-28, "{c}");
        assert_eq!(c_coeff::<Dd>(1, 1).unwrap(), Dd::zero());
    }

    #[test]
    fn sums_over_residues_vanish() {
        for m in 1..=24 {
            let (mut bs, mut cs) = (Dd::zero(), Dd::zero());
            for i in 1..=m {
                bs += b_coeff::<Dd>(m, i).unwrap();
                cs += c_coeff::<Dd>(m, i).unwrap();
            }
            assert!(
                bs.abs().to_f64() < 1e-28 && cs.abs().to_f64() < 1e-28,
                "m = {m}"
            );
        }
        for m in (1..=23).step_by(2) {
            assert_eq!(b_coeff::<f64>(m, m.div_ceil(2)).unwrap(), 0.0);
        }
    }

    #[test]
    fn both_routes_to_c_agree() {
        for m in 1..=12 {
            let gammas = GammaConstants::<Dd>::compute(m, GammaMethod::GaussReal).unwrap();
            for i in 1..=m {
                let direct: Dd = c_coeff(m, i).unwrap();
                let assembled = c_coeff_from_gammas(m, i, &gammas).unwrap();
                assert!((direct - assembled).abs().to_f64() < 1e-27, "m={m} i={i}");
            }
        }
    }

    #[test]
    fn predictions() {
        assert_eq!(predict_expected_subsum::<f64>(1000, 1, 1).unwrap(), 1000.0);
        let p: f64 = predict_expected_subsum(10_000, 3, 2).unwrap();
        let want = 10_000.0 / 3.0 - 2f64.sqrt() / 9.0 * 100.0;
        assert!((p - want).abs() < 1e-9);
        assert!(predict_expected_subsum::<f64>(1, 2, 1).is_err());
    }

    #[test]
    fn hardy_ramanujan_at_100() {
        let table = PartitionCountTable::build(1600);
        let mut last = f64::INFINITY;
        for n in [100u64, 400, 1600] {
            let approx: Dd = hardy_ramanujan_leading(n).unwrap();
            let exact = Dd::from_ratio(
                &BigInt::from(table.get(n as usize).clone()),
                &BigInt::from(1),
            );
            let rel = (approx / exact - Dd::one()).abs().to_f64();
            if n == 100 {
                assert!(rel < 0.05, "relative error {rel}");
            }
            assert!(rel < last);
            last = rel;
        }
    }

    #[test]
    fn two_thirds_floor() {
        assert_eq!(two_thirds_power_floor(10_000), 464);
        assert_eq!(two_thirds_power_floor(8), 4);
        assert_eq!(two_thirds_power_floor(1), 1);
        assert_eq!(two_thirds_power_floor(27), 9);
    }
}
