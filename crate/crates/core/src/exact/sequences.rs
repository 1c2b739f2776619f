//! The even-index count `f(n, j)`, the two-coloured partition numbers and the
//! comparison between them.

use num_bigint::BigUint;
use num_traits::Zero;

use super::tables::{PartitionCountTable, RestrictedCountTable};
use crate::error::Result;

/// `sum_{t=0..j} p(t) p(j-t)`: ordered pairs of partitions of total size `j`
/// (OEIS A000712, offset 0).
pub fn a000712(j: usize, p_table: &PartitionCountTable) -> Result<BigUint> {
    p_table.ensure_covers(j)?;
    Ok((0..=j).map(|t| p_table.get(t) * p_table.get(j - t)).sum())
}

/// `f(n, j)` for `j = 0..=n`: the number of partitions of `n` whose parts of
/// even index sum to `j`, via `f(n, j) = sum_{t<=j} p(t) p(j-t, n-2j)`.
/// Entries with `2j > n` are zero.
///
/// The tables must cover `0..=n/2` (the restricted table in both arguments).
pub fn f_table(
    n: usize,
    p_table: &PartitionCountTable,
    restricted: &RestrictedCountTable,
) -> Result<Vec<BigUint>> {
    let half = n / 2;
    p_table.ensure_covers(half)?;
    let mut row = vec![BigUint::zero(); n + 1];
    for (j, entry) in row.iter_mut().enumerate().take(half + 1) {
        let bound = n - 2 * j;
        let mut acc = BigUint::zero();
        for t in 0..=j {
            acc += p_table.get(t) * restricted.get(j - t, bound)?;
        }
        *entry = acc;
    }
    Ok(row)
}

/// Builds the tables needed for one row and returns `f(n, 0..=n)`.
pub fn f_row(n: usize) -> Vec<BigUint> {
    let half = n / 2;
    let p_table = PartitionCountTable::build(half);
    let restricted = RestrictedCountTable::build(half, half);
    f_table(n, &p_table, &restricted).expect("tables sized for n")
}

/// Comparison of `f(n, ·)` with A000712 over `j = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Outcome {
    pub n: usize,
    /// Smallest `j <= n` with `f(n, j) != a000712(j)`.
    pub first_mismatch: Option<usize>,
    /// Equality held for every `j <= n/3`.
    pub agrees_up_to_bound: bool,
    /// `f(n, j) < a000712(j)` for every `n/3 < j <= n`.
    pub strictly_below_past_bound: bool,
}

impl Theorem1Outcome {
    /// The mismatch index the agreement bound predicts, when it lies in
    /// `0..=n`.
    pub fn predicted_mismatch(&self) -> Option<usize> {
        Some(self.n / 3 + 1).filter(|&j| j <= self.n)
    }

    pub fn holds(&self) -> bool {
        self.agrees_up_to_bound
            && self.strictly_below_past_bound
            && self.first_mismatch == self.predicted_mismatch()
    }
}

/// Shares the tables across many `n`.
#[derive(Clone, Debug)]
pub struct Theorem1Checker {
    p_table: PartitionCountTable,
    restricted: RestrictedCountTable,
    colored: Vec<BigUint>,
}

impl Theorem1Checker {
    pub fn new(n_max: usize) -> Self {
        let p_table = PartitionCountTable::build(n_max);
        let half = n_max / 2;
        let restricted = RestrictedCountTable::build(half, half);
        let colored = (0..=n_max)
            .map(|j| a000712(j, &p_table).expect("table covers n_max"))
            .collect();
        Self {
            p_table,
            restricted,
            colored,
        }
    }

    pub fn n_max(&self) -> usize {
        self.p_table.max_n()
    }

    pub fn a000712(&self, j: usize) -> &BigUint {
        &self.colored[j]
    }

    pub fn f_table(&self, n: usize) -> Result<Vec<BigUint>> {
        f_table(n, &self.p_table, &self.restricted)
    }

    pub fn check(&self, n: usize) -> Result<Theorem1Outcome> {
        self.p_table.ensure_covers(n)?;
        let f = self.f_table(n)?;
        let bound = n / 3;
        let mut first_mismatch = None;
        let mut agrees_up_to_bound = true;
        let mut strictly_below_past_bound = true;
        for (j, fj) in f.iter().enumerate() {
            let colored = &self.colored[j];
            if fj != colored && first_mismatch.is_none() {
                first_mismatch = Some(j);
            }
            if j <= bound {
                agrees_up_to_bound &= fj == colored;
            } else {
                strictly_below_past_bound &= fj < colored;
            }
        }
        Ok(Theorem1Outcome {
            n,
            first_mismatch,
            agrees_up_to_bound,
            strictly_below_past_bound,
        })
    }
}

/// Smallest `j` with `f(n, j) != a000712(j)`, scanning `j = 0..=n`.
pub fn theorem1_check(n: usize) -> Theorem1Outcome {
    Theorem1Checker::new(n)
        .check(n)
        .expect("checker sized for n")
}
