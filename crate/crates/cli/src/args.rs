use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subsums_core::asymptotics::Precision;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "subsums",
    version,
    about = "Exact and asymptotic statistics of regularly spaced partition subsums"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = PrecisionArg::Extended)]
    pub precision: PrecisionArg,
    /// Directory for cached partition-count tables.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for independent n values (convergence).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    Double,
    Extended,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Extended => Precision::Extended,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    A000712,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f(n, j) next to Σ p(t) p(j - t) for j = 0..=n.
    FTable {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        max_n: usize,
    },
    /// Checks the agreement range of f(n, ·) for every n from 3 to n-max.
    Theorem1 {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 2000)]
        max_n: usize,
    },
    /// Histogram of X_{m,i} over the partitions of n.
    Distribution {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        max_n: usize,
    },
    /// Exact mean of X_{m,i} against the asymptotic prediction.
    Expectation {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
        /// One or more n, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100_000)]
        max_n: usize,
    },
    /// Residuals along a geometric ladder of n with a trend verdict.
    Convergence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        ratio: usize,
        #[arg(long, default_value_t = 100_000)]
        max_n: usize,
    },
    /// γ_{m,h} by three methods, with b_{m,i} and c_{m,i}.
    Constants {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 24)]
        max_m: usize,
    },
    /// Σ τ_{m,h}(k) e^{-kα}: direct sum against the asymptotic series.
    Lambert {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = subsums_core::asymptotics::DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
    /// Maps a partition to its (α, β) pair, or a pair back with --alpha/--beta/--n.
    Bijection {
        /// Parts separated by commas, e.g. 3,2,1.
        #[arg(long, conflicts_with_all = ["alpha", "beta", "n"])]
        partition: Option<String>,
        #[arg(long, requires = "n")]
        alpha: Option<String>,
        #[arg(long, requires = "n")]
        beta: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compares generated terms with a local OEIS b-file.
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, value_enum, default_value_t = Generator::A000712)]
        generator: Generator,
        #[arg(long)]
        count: usize,
    },
}
