//! On-disk cache of partition-count tables, keyed by the largest index.

use std::fs;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use subsums_core::exact::PartitionCountTable;

use crate::error::CliResult;

fn file_name(max_n: usize) -> String {
    format!("p-table-{max_n}.txt")
}

fn cached_sizes(dir: &Path) -> Vec<usize> {
    let Ok(entries) = fs::read_dir(dir) else {
        return Vec::new();
    };
    let mut sizes: Vec<usize> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            let name = e.file_name().into_string().ok()?;
            name.strip_prefix("p-table-")?
                .strip_suffix(".txt")?
                .parse()
                .ok()
        })
        .collect();
    sizes.sort_unstable();
    sizes
}

pub fn path_for(dir: &Path, max_n: usize) -> PathBuf {
    dir.join(file_name(max_n))
}

/// A table covering `0..=n`, read from the smallest sufficient cache file
/// when one exists and is readable, built (and written back) otherwise.
pub fn partition_table(cache_dir: Option<&Path>, n: usize) -> CliResult<PartitionCountTable> {
    let Some(dir) = cache_dir else {
        return Ok(PartitionCountTable::build(n));
    };
    for size in cached_sizes(dir).into_iter().filter(|&s| s >= n) {
        let path = path_for(dir, size);
        let loaded = fs::File::open(&path)
            .map_err(subsums_core::Error::from)
            .and_then(|f| PartitionCountTable::read_cache(BufReader::new(f)));
        match loaded {
            Ok(table) if table.max_n() >= n => return Ok(table.truncated(n)?),
            Ok(_) => log::warn!("{} is shorter than its name says; ignoring", path.display()),
            Err(e) => log::warn!("ignoring unreadable cache {}: {e}", path.display()),
        }
    }
    let table = PartitionCountTable::build(n);
    fs::create_dir_all(dir)?;
    let file = fs::File::create(path_for(dir, n))?;
    table.write_cache(BufWriter::new(file))?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_is_transparent() {
        let dir = tempfile::tempdir().unwrap();
        let built = partition_table(Some(dir.path()), 300).unwrap();
        assert!(path_for(dir.path(), 300).exists());
        let smaller = partition_table(Some(dir.path()), 120).unwrap();
        assert_eq!(smaller, PartitionCountTable::build(120));
        assert_eq!(built, PartitionCountTable::build(300));
        assert!(!path_for(dir.path(), 120).exists());
    }

    #[test]
    fn corrupt_cache_is_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(
            path_for(dir.path(), 50),
            "p-table max_n=50\n1\nnot a number\n",
        )
        .unwrap();
        let table = partition_table(Some(dir.path()), 40).unwrap();
        assert_eq!(table, PartitionCountTable::build(40));
    }
}
