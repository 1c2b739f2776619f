//! The distribution, total and mean of `X_{m,i}` over all partitions of `n`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::rational::ExactRational;
use super::tables::{DivisorSumTables, PartitionCountTable};
use crate::error::{Error, Result};
use crate::{canonical_residue, check_index};

/// `sum_{k=1..n} floor_sum[k] * p(n - k)`: the sum of `X_{m,i}(λ)` over all
/// partitions `λ` of `n`, for the `(m, i)` the divisor tables were built for.
pub fn total_subsum(
    n: usize,
    p_table: &PartitionCountTable,
    divisors: &DivisorSumTables,
) -> Result<BigUint> {
    p_table.ensure_covers(n)?;
    divisors.ensure_covers(n)?;
    let mut total = BigUint::zero();
    for k in 1..=n {
        total += p_table.get(n - k) * divisors.floor_sum(k);
    }
    Ok(total)
}

/// Mean of `X_{m,i}` over the partitions of `n`, from prebuilt tables.
pub fn expected_subsum_with(
    n: usize,
    p_table: &PartitionCountTable,
    divisors: &DivisorSumTables,
) -> Result<ExactRational> {
    let total = total_subsum(n, p_table, divisors)?;
    Ok(ExactRational::from_unsigned(&total, p_table.get(n)))
}

/// Mean of `X_{m,i}` over the partitions of `n`, exactly.
pub fn expected_subsum(n: usize, m: usize, i: usize) -> Result<ExactRational> {
    let divisors = DivisorSumTables::build(n.max(1), m, i)?;
    let p_table = PartitionCountTable::build(n);
    expected_subsum_with(n, &p_table, &divisors)
}

/// Checks `n p(n) = sum_{k=1..n} sigma(k) p(n-k)` for every `1 <= n <= n_max`.
pub fn euler_identity_check(n_max: usize) -> bool {
    let p_table = PartitionCountTable::build(n_max);
    let sigma = DivisorSumTables::build(n_max.max(1), 1, 1).expect("m = i = 1 is valid");
    (1..=n_max).all(|n| {
        let rhs = total_subsum(n, &p_table, &sigma).expect("tables cover n_max");
        p_table.get(n) * n == rhs
    })
}

/// `F_{m,i}(n, k)` for one `n`: how many partitions of `n` have
/// `X_{m,i} = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsumDistribution {
    n: usize,
    m: usize,
    i: usize,
    counts: Vec<BigUint>,
}

impl SubsumDistribution {
    pub fn compute(n: usize, m: usize, i: usize) -> Result<Self> {
        let mut all = Self::all_up_to(n, m, i)?;
        Ok(all.pop().expect("one row per weight"))
    }

    /// Distributions for every weight `0..=n_max` from a single pass of the
    /// generating-function DP.
    ///
    /// A part `s = a m + b` (`1 <= b <= m`) of the conjugate partition is a
    /// column of height `s`; it crosses `a` rows of index `≡ i (mod m)` when
    /// `b < i` and `a + 1` otherwise. The DP is an unbounded knapsack over
    /// the column heights with a second dimension for the statistic.
    pub fn all_up_to(n_max: usize, m: usize, i: usize) -> Result<Vec<Self>> {
        check_index(m, i)?;
        // X_{m,i} <= n/2 for i >= 2, since parts a_{i+tm} are dominated by
        // the disjoint parts a_{i-1+tm}
        let cap = if i == 1 { n_max } else { n_max / 2 };
        let mut dp = vec![vec![BigUint::zero(); cap + 1]; n_max + 1];
        dp[0][0] = BigUint::from(1u32);
        for s in 1..=n_max {
            let a = (s - 1) / m;
            let b = s - a * m;
            let gain = if b < i { a } else { a + 1 };
            if gain > cap {
                continue;
            }
            for w in s..=n_max {
                let (lower, upper) = dp.split_at_mut(w);
                let src = &lower[w - s];
                let dst = &mut upper[0];
                for k in gain..=cap {
                    let add = &src[k - gain];
                    if !add.is_zero() {
                        dst[k] += add;
                    }
                }
            }
        }
        Ok(dp
            .into_iter()
            .enumerate()
            .map(|(n, mut counts)| {
                let len = counts
                    .iter()
                    .rposition(|c| !c.is_zero())
                    .map_or(1, |pos| pos + 1);
                counts.truncate(len);
                Self { n, m, i, counts }
            })
            .collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> usize {
        self.i
    }

    /// Counts indexed by the statistic value; trailing zeros are trimmed.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// `sum_k F(n, k)`, which is `p(n)`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `sum_k k F(n, k)`, the sum of the statistic over all partitions.
    pub fn first_moment(&self) -> BigUint {
        self.counts.iter().enumerate().map(|(k, c)| c * k).sum()
    }
}

/// The divisor-count convolutions `S = sum tau(k) p(n-k)` and
/// `S_h = sum tau_{m,h}(k) p(n-k)` for `h = 1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSums {
    pub n: usize,
    pub m: usize,
    pub s: BigUint,
    by_residue: Vec<BigUint>,
    p_n: BigUint,
}

impl SSums {
    pub fn compute(n: usize, m: usize, p_table: &PartitionCountTable) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidIndex { m, i: 0 });
        }
        let divisors = DivisorSumTables::build(n.max(1), m, 1)?;
        Self::with_tables(n, p_table, &divisors)
    }

    pub fn with_tables(
        n: usize,
        p_table: &PartitionCountTable,
        divisors: &DivisorSumTables,
    ) -> Result<Self> {
        p_table.ensure_covers(n)?;
        divisors.ensure_covers(n)?;
        let m = divisors.modulus();
        let mut s = BigUint::zero();
        let mut by_residue = vec![BigUint::zero(); m];
        for k in 1..=n {
            let p = p_table.get(n - k);
            s += p * divisors.tau(k);
            for (h, acc) in by_residue.iter_mut().enumerate() {
                let count = divisors.tau_mod(h + 1, k);
                if count > 0 {
                    *acc += p * count;
                }
            }
        }
        Ok(Self {
            n,
            m,
            s,
            by_residue,
            p_n: p_table.get(n).clone(),
        })
    }

    /// `S_j` with `j` taken modulo `m` into `1..=m`.
    pub fn s_j(&self, j: i64) -> &BigUint {
        &self.by_residue[canonical_residue(j, self.m) - 1]
    }

    pub fn by_residue(&self) -> &[BigUint] {
        &self.by_residue
    }

    /// Reassembles the total subsum from the floor decomposition
    /// `floor((d+m-i)/m) = (d+m-i)/m - sum_{j=1}^{m-1} j chi_{i+j}(d)/m`:
    /// `m T = n p(n) + (m - i) S - sum_{j=1}^{m-1} j S_{i+j}`.
    pub fn recombine(&self, i: usize) -> Result<BigUint> {
        check_index(self.m, i)?;
        let signed = |v: &BigUint| BigInt::from_biguint(Sign::Plus, v.clone());
        let mut acc = signed(&self.p_n) * self.n + signed(&self.s) * (self.m - i);
        for j in 1..self.m {
            acc -= signed(self.s_j((i + j) as i64)) * j;
        }
        let (quotient, remainder) = acc.div_rem(&BigInt::from(self.m));
        if !remainder.is_zero() || quotient.sign() == Sign::Minus {
            return Err(Error::Consistency(format!(
                "recombined subsum for n={}, m={}, i={i} is not a nonnegative integer",
                self.n, self.m
            )));
        }
        Ok(quotient.to_biguint().expect("checked nonnegative"))
    }
}
