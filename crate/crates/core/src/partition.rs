use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a map `part -> multiplicity`; zero
    /// multiplicities are ignored.
    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Result<Self> {
        if mult.iter().any(|(&part, &count)| part == 0 && count > 0) {
            return Err(Error::InvalidPartition(
                "part 0 with nonzero multiplicity".into(),
            ));
        }
        let parts = mult
            .iter()
            .rev()
            .flat_map(|(&part, &count)| std::iter::repeat_n(part, count))
            .collect();
        Ok(Self::from_sorted(parts))
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-based part `a_t`, or 0 past the last part.
    pub fn part(&self, t: usize) -> usize {
        assert!(t >= 1, "parts are indexed from 1");
        self.parts.get(t - 1).copied().unwrap_or(0)
    }

    /// Transposed Ferrers diagram.
    pub fn conjugate(&self) -> Self {
        let largest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
