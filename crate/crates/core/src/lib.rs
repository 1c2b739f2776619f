//! Exact and asymptotic computation of regularly spaced subsums of integer
//! partitions.
//!
//! For a partition `a_1 >= a_2 >= ... >= a_k` of `n`, the statistic
//! `X_{m,i}` sums the parts whose 1-based index is congruent to `i` modulo
//! `m`. This crate provides:
//!
//! - [`exact`]: arbitrary-precision tables (partition counts, restricted
//!   counts, divisor sums), the exact distribution and mean of `X_{m,i}`,
//!   the even-index count `f(n, j)` and the two-coloured partition sequence.
//! - [`oracle`]: brute-force enumeration used as ground truth.
//! - [`bijection`]: the correspondence between partitions with even-index sum
//!   `j` and pairs of partitions of total size `j`.
//! - [`asymptotics`]: the constants `gamma_{m,h}`, `b_{m,i}`, `c_{m,i}`,
//!   Bernoulli numbers, and the Lambert-series expansion of the residue-class
//!   divisor function.

pub mod asymptotics;
pub mod bijection;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod partition;

pub use error::{Error, Result};
pub use partition::Partition;

/// Maps any integer to its residue modulo `m` in `1..=m`, with `m` standing
/// for residue 0.
pub fn canonical_residue(x: i64, m: usize) -> usize {
    debug_assert!(m >= 1);
    let r = x.rem_euclid(m as i64) as usize;
    if r == 0 {
        m
    } else {
        r
    }
}

/// Checks `m >= 1` and `1 <= i <= m`.
pub fn check_index(m: usize, i: usize) -> Result<()> {
    if m == 0 || i == 0 || i > m {
        return Err(Error::InvalidIndex { m, i });
    }
    Ok(())
}
