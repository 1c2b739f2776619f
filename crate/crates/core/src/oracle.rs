//! Brute-force ground truth: enumerate every partition of `n` and evaluate
//! the statistics straight from their definitions.

use num_bigint::BigUint;

use crate::check_index;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Partitions of `n` in reverse-lexicographic order, from `(n)` down to
/// `(1, ..., 1)`. For `n = 0` the single empty partition is yielded.
#[derive(Clone, Debug)]
pub struct PartitionStream {
    n: usize,
    current: Option<Vec<usize>>,
}

pub fn enumerate(n: usize) -> PartitionStream {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    PartitionStream {
        n,
        current: Some(first),
    }
}

impl PartitionStream {
    pub fn n(&self) -> usize {
        self.n
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let size = *last;
        freed += 1;
        while freed > 0 {
            let part = size.min(freed);
            parts.push(part);
            freed -= part;
        }
        true
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_sorted(parts.clone());
        let mut next = parts;
        if Self::advance(&mut next) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// `X_{m,i}(λ)`: the sum of the parts whose 1-based index is `≡ i (mod m)`.
pub fn x_statistic(partition: &Partition, m: usize, i: usize) -> Result<usize> {
    check_index(m, i)?;
    Ok(partition.parts().iter().skip(i - 1).step_by(m).sum())
}

/// Sum of the parts of even index, `a_2 + a_4 + ...`.
pub fn even_index_sum(partition: &Partition) -> usize {
    partition.parts().iter().skip(1).step_by(2).sum()
}

pub const DEFAULT_ORACLE_LIMIT: usize = 40;

/// Brute-force evaluator with a guard on `n`; enumeration cost grows like
/// `p(n)`.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Self {
        Self { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::OracleLimit {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub fn count(&self, n: usize) -> Result<BigUint> {
        self.guard(n)?;
        Ok(BigUint::from(enumerate(n).count()))
    }

    /// Histogram of `X_{m,i}` over the partitions of `n`, trailing zeros
    /// trimmed (at least one entry).
    pub fn brute_distribution(&self, n: usize, m: usize, i: usize) -> Result<Vec<BigUint>> {
        self.guard(n)?;
        check_index(m, i)?;
        let mut hist = vec![0u64; n + 1];
        for lambda in enumerate(n) {
            hist[x_statistic(&lambda, m, i)?] += 1;
        }
        let len = hist.iter().rposition(|&c| c > 0).map_or(1, |pos| pos + 1);
        Ok(hist[..len].iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn brute_total(&self, n: usize, m: usize, i: usize) -> Result<BigUint> {
        self.guard(n)?;
        check_index(m, i)?;
        let mut total = 0u64;
        for lambda in enumerate(n) {
            total += x_statistic(&lambda, m, i)? as u64;
        }
        Ok(BigUint::from(total))
    }

    /// Number of partitions of `n` whose even-index parts sum to `j`.
    pub fn brute_f(&self, n: usize, j: usize) -> Result<BigUint> {
        self.guard(n)?;
        let count = enumerate(n).filter(|l| even_index_sum(l) == j).count();
        Ok(BigUint::from(count))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[&[usize]]) -> Vec<Vec<usize>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn empty_partition_of_zero() {
        let all: Vec<_> = enumerate(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got: Vec<Vec<usize>> = enumerate(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            parts(&[&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]])
        );
    }

    #[test]
    fn stream_is_strictly_decreasing_and_valid() {
        for n in 0..=18 {
            let all: Vec<Partition> = enumerate(n).collect();
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
            for p in &all {
                assert_eq!(p.weight(), n);
                assert!(Partition::new(p.parts().to_vec()).is_ok());
            }
        }
        assert_eq!(enumerate(10).count(), 42);
    }

    #[test]
    fn statistic_definition() {
        let l = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(x_statistic(&l, 2, 2).unwrap(), 2);
        assert_eq!(x_statistic(&l, 3, 1).unwrap(), 3);
        assert_eq!(x_statistic(&l, 3, 2).unwrap(), 2);
        assert_eq!(x_statistic(&l, 3, 3).unwrap(), 1);
        assert_eq!(x_statistic(&l, 7, 7).unwrap(), 0);
        let square = Partition::new(vec![5, 5, 5, 5]).unwrap();
        assert_eq!(x_statistic(&square, 2, 1).unwrap(), 10);
        assert!(x_statistic(&l, 2, 3).is_err());
    }

    #[test]
    fn brute_values() {
        let o = Oracle::default();
        assert_eq!(o.brute_f(20, 6).unwrap(), BigUint::from(65u32));
        assert_eq!(o.brute_f(20, 7).unwrap(), BigUint::from(109u32));
        assert_eq!(o.brute_total(12, 1, 1).unwrap(), BigUint::from(12u32 * 77));
        let hist = o.brute_distribution(20, 2, 2).unwrap();
        for (j, count) in hist.iter().enumerate() {
            assert_eq!(*count, o.brute_f(20, j).unwrap());
        }
    }

    #[test]
    fn limit_guard() {
        let o = Oracle::default();
        assert!(matches!(
            o.count(41),
            Err(Error::OracleLimit { n: 41, limit: 40 })
        ));
        assert!(Oracle::with_limit(45).count(41).is_ok());
    }
}
