//! Exact arbitrary-precision computations. No floating point is used here.

mod rational;
mod sequences;
mod subsum;
mod tables;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;

pub use rational::{decimal_string, ExactRational};
pub use sequences::{a000712, f_row, f_table, theorem1_check, Theorem1Checker, Theorem1Outcome};
pub use subsum::{
    euler_identity_check, expected_subsum, expected_subsum_with, total_subsum, SSums,
    SubsumDistribution,
};
pub use tables::{DivisorSumTables, PartitionCountTable, RestrictedCountTable};

use crate::error::Result;

/// A partition-count table shared across `(n, m, i)` queries, with divisor
/// tables built on first use and cached per `(m, i)`.
#[derive(Debug)]
pub struct Engine {
    p_table: Arc<PartitionCountTable>,
    divisors: Mutex<HashMap<(usize, usize), Arc<DivisorSumTables>>>,
}

impl Engine {
    pub fn new(max_n: usize) -> Self {
        Self::with_table(PartitionCountTable::build(max_n))
    }

    pub fn with_table(p_table: PartitionCountTable) -> Self {
        Self {
            p_table: Arc::new(p_table),
            divisors: Mutex::new(HashMap::new()),
        }
    }

    pub fn max_n(&self) -> usize {
        self.p_table.max_n()
    }

    pub fn p_table(&self) -> &PartitionCountTable {
        &self.p_table
    }

    pub fn divisor_tables(&self, m: usize, i: usize) -> Result<Arc<DivisorSumTables>> {
        let key = (m, i);
        if let Some(t) = self.divisors.lock().expect("poisoned").get(&key) {
            return Ok(Arc::clone(t));
        }
        let built = Arc::new(DivisorSumTables::build(self.max_n().max(1), m, i)?);
        self.divisors
            .lock()
            .expect("poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&built));
        Ok(built)
    }

    pub fn total_subsum(&self, n: usize, m: usize, i: usize) -> Result<BigUint> {
        total_subsum(n, &self.p_table, &*self.divisor_tables(m, i)?)
    }

    pub fn expected_subsum(&self, n: usize, m: usize, i: usize) -> Result<ExactRational> {
        expected_subsum_with(n, &self.p_table, &*self.divisor_tables(m, i)?)
    }

    pub fn s_sums(&self, n: usize, m: usize) -> Result<SSums> {
        SSums::with_tables(n, &self.p_table, &*self.divisor_tables(m, 1)?)
    }
}
