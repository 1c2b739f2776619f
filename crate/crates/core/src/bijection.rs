//! Bijection between partitions `λ` of `n` whose even-index parts sum to `j`
//! and pairs `(α, β)` with `|α| + |β| = j` where `β` has at most `n - 2j`
//! parts.
//!
//! Forward: part `t` of `α` has multiplicity `a_{2t} - a_{2t+1}` and part `t`
//! of `β` has multiplicity `a_{2t+1} - a_{2t+2}`.
//!
//! Inverse: with `b` the number of parts of `β` and `δ = n - 2j - b`,
//! `a_t = #{parts of α >= ceil(t/2)} + #{parts of β >= floor(t/2)}` for
//! `t >= 2`, and `a_1 = a_2 + δ`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::oracle::even_index_sum;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionImage {
    pub alpha: Partition,
    pub beta: Partition,
    /// Weight of the preimage.
    pub n: usize,
    /// `|α| + |β|`, the even-index sum of the preimage.
    pub j: usize,
}

impl BijectionImage {
    /// `n - 2j - b`, the excess of `a_1` over `a_2`.
    pub fn delta(&self) -> usize {
        self.n - 2 * self.j - self.beta.len()
    }
}

pub fn forward(lambda: &Partition) -> BijectionImage {
    let mut alpha: BTreeMap<usize, usize> = BTreeMap::new();
    let mut beta: BTreeMap<usize, usize> = BTreeMap::new();
    let a = |t: usize| lambda.part(t);
    let mut t = 1;
    while a(2 * t) > 0 || a(2 * t + 1) > 0 {
        let ma = a(2 * t) - a(2 * t + 1);
        let mb = a(2 * t + 1) - a(2 * t + 2);
        if ma > 0 {
            alpha.insert(t, ma);
        }
        if mb > 0 {
            beta.insert(t, mb);
        }
        t += 1;
    }
    let alpha = Partition::from_multiplicities(&alpha).expect("parts start at 1");
    let beta = Partition::from_multiplicities(&beta).expect("parts start at 1");
    let j = alpha.weight() + beta.weight();
    debug_assert_eq!(j, even_index_sum(lambda));
    debug_assert!(beta.len() + 2 * j <= lambda.weight());
    BijectionImage {
        alpha,
        beta,
        n: lambda.weight(),
        j,
    }
}

/// Number of parts `>= k` for every `k`, from a multiplicity map.
/// `at_least[k]` for `k = 0..=largest + 1`; `k = 0` counts every part.
fn parts_at_least(mult: &BTreeMap<usize, usize>, largest: usize) -> Vec<usize> {
    let mut at_least = vec![0; largest + 2];
    for k in (1..=largest).rev() {
        at_least[k] = at_least[k + 1] + mult.get(&k).copied().unwrap_or(0);
    }
    at_least[0] = at_least[1];
    at_least
}

pub fn inverse(alpha: &Partition, beta: &Partition, n: usize) -> Result<Partition> {
    let j = alpha.weight() + beta.weight();
    if 2 * j > n {
        return Err(Error::NotInCodomain(format!(
            "|α| + |β| = {j} exceeds n/2 for n = {n}"
        )));
    }
    let b = beta.len();
    if b > n - 2 * j {
        return Err(Error::NotInCodomain(format!(
            "β has {b} parts, more than n - 2j = {}",
            n - 2 * j
        )));
    }
    let delta = n - 2 * j - b;

    let largest = alpha.part(1).max(beta.part(1));
    let alpha_at_least = parts_at_least(&alpha.multiplicities(), largest);
    let beta_at_least = parts_at_least(&beta.multiplicities(), largest);
    let count = |table: &[usize], k: usize| table.get(k).copied().unwrap_or(0);

    let mut parts = vec![0; 2 * largest + 2];
    for (idx, slot) in parts.iter_mut().enumerate().skip(1) {
        let t = idx + 1;
        *slot = count(&alpha_at_least, t.div_ceil(2)) + count(&beta_at_least, t / 2);
    }
    parts[0] = parts.get(1).copied().unwrap_or(0) + delta;
    debug_assert_eq!(parts[0], n - 2 * j + alpha.len());

    while parts.last() == Some(&0) {
        parts.pop();
    }
    let lambda = Partition::new(parts)?;
    if lambda.weight() != n || even_index_sum(&lambda) != j {
        return Err(Error::Consistency(format!(
            "inverse produced {lambda} of weight {} and even-index sum {}, expected {n} and {j}",
            lambda.weight(),
            even_index_sum(&lambda)
        )));
    }
    Ok(lambda)
}
