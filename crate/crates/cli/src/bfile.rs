//! Reader for OEIS b-files: lines of `index value`, `#` comments and blank
//! lines ignored.

use std::io::BufRead;

use num_bigint::BigInt;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Index of the first entry.
    pub fn offset(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn parse<R: BufRead>(input: R) -> CliResult<Self> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let bad = |why: &str| CliError::Usage(format!("b-file line {lineno}: {why}: {line:?}"));
            let mut fields = content.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(bad("expected `index value`"));
            };
            let index: i64 = index.parse().map_err(|_| bad("index is not an integer"))?;
            let value: BigInt = value.parse().map_err(|_| bad("value is not an integer"))?;
            if let Some((prev, _)) = entries.last() {
                if index != prev + 1 {
                    return Err(bad("indices are not consecutive"));
                }
            }
            entries.push((index, value));
        }
        Ok(Self { entries })
    }
}
