//! Arbitrary-precision count tables: `p(n)`, `p(n, j)` and the divisor sums.

use std::io::{BufRead, Write};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{canonical_residue, check_index};

/// `p(0), ..., p(max_n)` built by Euler's pentagonal-number recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCountTable {
    values: Vec<BigUint>,
}

const CACHE_HEADER: &str = "p-table max_n=";

impl PartitionCountTable {
    pub fn build(max_n: usize) -> Self {
        let mut values: Vec<BigUint> = Vec::with_capacity(max_n + 1);
        values.push(BigUint::one());
        for n in 1..=max_n {
            // signs run + + - - + + ... over the generalized pentagonal
            // numbers k(3k-1)/2, k(3k+1)/2
            let mut plus = BigUint::zero();
            let mut minus = BigUint::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
                *acc += &values[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    *acc += &values[n - g2];
                }
            }
            values.push(plus - minus);
        }
        Self { values }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// `p(n)`; panics if `n` is past the end of the table.
    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn ensure_covers(&self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::TableTooSmall {
                requested: n,
                available: self.max_n(),
            });
        }
        Ok(())
    }

    /// A copy restricted to `0..=max_n`.
    pub fn truncated(&self, max_n: usize) -> Result<Self> {
        self.ensure_covers(max_n)?;
        Ok(Self {
            values: self.values[..=max_n].to_vec(),
        })
    }

    /// Writes the header line `p-table max_n=<N>` followed by one decimal
    /// value per line.
    pub fn write_cache<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{CACHE_HEADER}{}", self.max_n())?;
        for v in &self.values {
            writeln!(out, "{v}")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_cache<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines.next().transpose()?.ok_or_else(|| Error::Cache {
            line: 1,
            message: "empty file".into(),
        })?;
        let max_n: usize = header
            .strip_prefix(CACHE_HEADER)
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| Error::Cache {
                line: 1,
                message: format!("expected `{CACHE_HEADER}<N>`, found `{header}`"),
            })?;
        let mut values = Vec::with_capacity(max_n + 1);
        for (idx, line) in lines.enumerate() {
            let line = line?;
            let value =
                BigUint::parse_bytes(line.trim().as_bytes(), 10).ok_or_else(|| Error::Cache {
                    line: idx + 2,
                    message: format!("not a decimal integer: `{line}`"),
                })?;
            values.push(value);
        }
        if values.len() != max_n + 1 {
            return Err(Error::Cache {
                line: values.len() + 2,
                message: format!("expected {} values, found {}", max_n + 1, values.len()),
            });
        }
        if values[0] != BigUint::one() {
            return Err(Error::Cache {
                line: 2,
                message: "p(0) must be 1".into(),
            });
        }
        Ok(Self { values })
    }
}

/// `p(n, j)`: the number of partitions of `n` into at most `j` parts.
#[derive(Clone, Debug)]
pub struct RestrictedCountTable {
    max_n: usize,
    max_j: usize,
    // row n holds j = 0..=max_j
    values: Vec<Vec<BigUint>>,
}

impl RestrictedCountTable {
    pub fn build(max_n: usize, max_j: usize) -> Self {
        let mut values = vec![vec![BigUint::zero(); max_j + 1]; max_n + 1];
        values[0].iter_mut().for_each(|v| *v = BigUint::one());
        for j in 1..=max_j {
            for n in 1..=max_n {
                let mut v = values[n][j - 1].clone();
                if n >= j {
                    v += &values[n - j][j];
                }
                values[n][j] = v;
            }
        }
        Self {
            max_n,
            max_j,
            values,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_j(&self) -> usize {
        self.max_j
    }

    /// `p(n, j)`; a bound `j >= n` is vacuous, so it is clamped to `n`.
    pub fn get(&self, n: usize, j: usize) -> Result<&BigUint> {
        if n > self.max_n {
            return Err(Error::TableTooSmall {
                requested: n,
                available: self.max_n,
            });
        }
        let j = j.min(n);
        if j > self.max_j {
            return Err(Error::TableTooSmall {
                requested: j,
                available: self.max_j,
            });
        }
        Ok(&self.values[n][j])
    }
}

/// Divisor-count tables up to `max_k` for one modulus `m` and index `i`.
///
/// Residues are canonical in `1..=m`, `m` standing for residue 0.
#[derive(Clone, Debug)]
pub struct DivisorSumTables {
    max_k: usize,
    m: usize,
    i: usize,
    tau: Vec<u32>,
    // tau_mod[h - 1][k]
    tau_mod: Vec<Vec<u32>>,
    floor_sum: Vec<u64>,
}

impl DivisorSumTables {
    pub fn build(max_k: usize, m: usize, i: usize) -> Result<Self> {
        check_index(m, i)?;
        let mut tau = vec![0u32; max_k + 1];
        let mut tau_mod = vec![vec![0u32; max_k + 1]; m];
        let mut floor_sum = vec![0u64; max_k + 1];
        for d in 1..=max_k {
            let h = canonical_residue(d as i64, m);
            let weight = ((d + m - i) / m) as u64;
            let by_residue = &mut tau_mod[h - 1];
            for k in (d..=max_k).step_by(d) {
                tau[k] += 1;
                by_residue[k] += 1;
                floor_sum[k] += weight;
            }
        }
        Ok(Self {
            max_k,
            m,
            i,
            tau,
            tau_mod,
            floor_sum,
        })
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> usize {
        self.i
    }

    /// Number of divisors of `k`.
    pub fn tau(&self, k: usize) -> u32 {
        self.tau[k]
    }

    /// Number of divisors `d` of `k` with `d ≡ h (mod m)`, `h` in `1..=m`.
    pub fn tau_mod(&self, h: usize, k: usize) -> u32 {
        assert!(
            (1..=self.m).contains(&h),
            "residue {h} outside 1..={}",
            self.m
        );
        self.tau_mod[h - 1][k]
    }

    /// `sum_{d | k} floor((d + m - i) / m)`.
    pub fn floor_sum(&self, k: usize) -> u64 {
        self.floor_sum[k]
    }

    pub fn ensure_covers(&self, k: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::TableTooSmall {
                requested: k,
                available: self.max_k,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(k: usize) -> Vec<usize> {
        (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
    }

    #[test]
    fn small_partition_counts() {
        let t = PartitionCountTable::build(20);
        assert_eq!(PartitionCountTable::build(0).values(), &[BigUint::one()]);
        let expect = [1u32, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(t.get(n), &BigUint::from(e), "p({n})");
        }
        assert_eq!(t.get(20), &BigUint::from(627u32));
    }

    #[test]
    fn large_partition_counts() {
        let t = PartitionCountTable::build(200);
        assert_eq!(t.get(100), &BigUint::from(190_569_292u64));
        assert_eq!(t.get(200), &BigUint::from(3_972_999_029_388u64));
    }

    #[test]
    fn cache_roundtrip() {
        let t = PartitionCountTable::build(50);
        let mut buf = Vec::new();
        t.write_cache(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("p-table max_n=50\n1\n1\n2\n3\n5\n"));
        assert_eq!(PartitionCountTable::read_cache(&buf[..]).unwrap(), t);
    }

    #[test]
    fn cache_rejects_corruption() {
        let bad_header = b"p-tab max_n=2\n1\n1\n2\n";
        assert!(matches!(
            PartitionCountTable::read_cache(&bad_header[..]),
            Err(Error::Cache { line: 1, .. })
        ));
        let bad_value = b"p-table max_n=2\n1\nx\n2\n";
        assert!(matches!(
            PartitionCountTable::read_cache(&bad_value[..]),
            Err(Error::Cache { line: 3, .. })
        ));
        let short = b"p-table max_n=3\n1\n1\n2\n";
        assert!(PartitionCountTable::read_cache(&short[..]).is_err());
    }

    #[test]
    fn restricted_counts() {
        let r = RestrictedCountTable::build(12, 12);
        let p = PartitionCountTable::build(12);
        for j in 0..=12 {
            assert_eq!(r.get(0, j).unwrap(), &BigUint::one());
        }
        for n in 1..=12 {
            assert_eq!(r.get(n, 0).unwrap(), &BigUint::zero());
            assert_eq!(r.get(n, n).unwrap(), p.get(n));
            assert_eq!(r.get(n, n + 5).unwrap(), p.get(n));
            for j in 1..=12 {
                assert!(r.get(n, j).unwrap() >= r.get(n, j - 1).unwrap());
            }
        }
        assert_eq!(r.get(5, 2).unwrap(), &BigUint::from(3u32));
        assert!(r.get(13, 1).is_err());
    }

    #[test]
    fn restricted_table_with_narrow_bound() {
        let r = RestrictedCountTable::build(10, 3);
        assert_eq!(r.get(10, 3).unwrap(), &BigUint::from(14u32));
        assert_eq!(r.get(2, 7).unwrap(), &BigUint::from(2u32));
        assert!(r.get(10, 4).is_err());
    }

    #[test]
    fn divisor_examples() {
        let t = DivisorSumTables::build(12, 2, 1).unwrap();
        assert_eq!(t.tau(6), 4);
        assert_eq!(t.tau_mod(1, 6), 2);
        assert_eq!(t.tau_mod(2, 6), 2);
        let sigma = DivisorSumTables::build(12, 1, 1).unwrap();
        assert_eq!(sigma.floor_sum(6), 12);
        assert!(DivisorSumTables::build(12, 3, 4).is_err());
        assert!(DivisorSumTables::build(12, 3, 0).is_err());
    }

    #[test]
    fn divisor_tables_match_listing() {
        for m in 1..=7 {
            for i in 1..=m {
                let t = DivisorSumTables::build(300, m, i).unwrap();
                for k in 1..=300 {
                    let ds = divisors(k);
                    assert_eq!(t.tau(k) as usize, ds.len());
                    let mut total = 0;
                    for h in 1..=m {
                        let count = ds
                            .iter()
                            .filter(|&&d| canonical_residue(d as i64, m) == h)
                            .count();
                        assert_eq!(t.tau_mod(h, k) as usize, count);
                        total += t.tau_mod(h, k);
                    }
                    assert_eq!(total, t.tau(k));
                    let fs: usize = ds.iter().map(|d| (d + m - i) / m).sum();
                    assert_eq!(t.floor_sum(k) as usize, fs);
                }
            }
        }
    }

    #[test]
    fn tau_two_iff_prime() {
        let t = DivisorSumTables::build(2000, 1, 1).unwrap();
        for k in 1..=2000usize {
            let prime = k >= 2 && (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0);
            assert_eq!(t.tau(k) == 2, prime, "k={k}");
            assert_eq!(t.floor_sum(k) as usize, divisors(k).iter().sum::<usize>());
        }
    }
}
