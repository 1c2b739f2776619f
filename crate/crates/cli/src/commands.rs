//! One function per subcommand, each producing a [`ReportRecord`].

use std::path::Path;

use num_bigint::{BigInt, BigUint};
use subsums_core::asymptotics::{
    b_coeff, c_coeff, c_coeff_from_gammas, lambert_tau_asymptotic, lambert_tau_exact, DoubleDouble,
    GammaConstants, GammaMethod, Precision, Real, TheoremConstants,
};
use subsums_core::bijection::{forward, inverse};
use subsums_core::exact::{a000712, Engine, ExactRational, SubsumDistribution, Theorem1Checker};
use subsums_core::{check_index, Partition};

use crate::args::{Cli, Command, Generator};
use crate::bfile::BFile;
use crate::cache;
use crate::error::{CliError, CliResult};
use crate::report::{Cell, ReportKind, ReportRecord, Row, Status};

/// Fractional digits for exact decimals in reports.
const DIGITS: usize = 20;

#[derive(Debug)]
pub struct Outcome {
    pub report: ReportRecord,
}

macro_rules! with_real {
    ($precision:expr, $f:ident ( $($arg:expr),* $(,)? )) => {
        match $precision {
            Precision::Double => $f::<f64>($($arg),*),
            Precision::Extended => $f::<DoubleDouble>($($arg),*),
        }
    };
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let precision: Precision = cli.global.precision.into();
    let cache_dir = cli.global.cache_dir.as_deref();
    let threads = cli.global.threads as usize;
    let mut report = match &cli.command {
        Command::FTable { n, max_n } => f_table(*n, *max_n)?,
        Command::Theorem1 { n_max, max_n } => theorem1(*n_max, *max_n)?,
        Command::Distribution { m, i, n, max_n } => distribution(*m, *i, *n, *max_n)?,
        Command::Expectation { m, i, n, max_n } => {
            with_real!(precision, expectation(*m, *i, n, *max_n, cache_dir))?
        }
        Command::Convergence {
            m,
            i,
            n_max,
            n_min,
            ratio,
            max_n,
        } => {
            let ladder = Ladder {
                n_min: *n_min,
                n_max: *n_max,
                ratio: *ratio,
                limit: *max_n,
            };
            with_real!(precision, convergence(*m, *i, &ladder, threads, cache_dir))?
        }
        Command::Constants { m, max_m } => with_real!(precision, constants(*m, *max_m))?,
        Command::Lambert {
            m,
            h,
            alpha,
            max_terms,
        } => with_real!(precision, lambert(*m, *h, alpha, *max_terms))?,
        Command::Bijection {
            partition,
            alpha,
            beta,
            n,
        } => bijection(partition.as_deref(), alpha.as_deref(), beta.as_deref(), *n)?,
        Command::OeisCheck {
            bfile,
            generator,
            count,
        } => oeis_check(bfile, *generator, *count)?,
    };
    if matches!(
        cli.command,
        Command::Expectation { .. }
            | Command::Convergence { .. }
            | Command::Constants { .. }
            | Command::Lambert { .. }
    ) {
        report.param("precision", precision);
    }
    Ok(Outcome { report })
}

fn limit(name: &str, value: usize, max: usize) -> CliResult<()> {
    if value > max {
        return Err(CliError::Usage(format!(
            "{name} = {value} exceeds the limit {max}; raise it with the matching --max flag"
        )));
    }
    Ok(())
}

fn real_cell<R: Real>(x: R) -> Cell {
    Cell::Real(x.to_decimal())
}

pub fn f_table(n: usize, max_n: usize) -> CliResult<ReportRecord> {
    limit("n", n, max_n)?;
    let checker = Theorem1Checker::new(n);
    let row = checker.f_table(n)?;
    let mut report = ReportRecord::new(ReportKind::FTable);
    report.param("n", n);
    let mut first_mismatch = None;
    for (j, f) in row.iter().enumerate() {
        let colored = checker.a000712(j);
        let matches = f == colored;
        if !matches && first_mismatch.is_none() {
            first_mismatch = Some(j);
        }
        report.rows.push(
            Row::new()
                .with("j", Cell::exact(j))
                .with("f", Cell::exact(f))
                .with("a000712", Cell::exact(colored))
                .with("match", Cell::Flag(matches)),
        );
    }
    report.param(
        "first_mismatch",
        first_mismatch.map_or_else(|| "none".to_string(), |j| j.to_string()),
    );
    Ok(report)
}

pub fn theorem1(n_max: usize, max_n: usize) -> CliResult<ReportRecord> {
    if n_max < 3 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 3, got {n_max}"
        )));
    }
    limit("n-max", n_max, max_n)?;
    let checker = Theorem1Checker::new(n_max);
    let mut report = ReportRecord::new(ReportKind::Theorem1);
    report.param("n_max", n_max);
    let mut failures = 0;
    for n in 3..=n_max {
        let out = checker.check(n)?;
        let show = |v: Option<usize>| v.map_or(Cell::Empty, Cell::exact);
        failures += usize::from(!out.holds());
        report.rows.push(
            Row::new()
                .with("n", Cell::exact(n))
                .with("bound", Cell::exact(n / 3))
                .with("first_mismatch", show(out.first_mismatch))
                .with("predicted", show(out.predicted_mismatch()))
                .with("agrees_up_to_bound", Cell::Flag(out.agrees_up_to_bound))
                .with(
                    "strictly_below_after",
                    Cell::Flag(out.strictly_below_past_bound),
                )
                .with("holds", Cell::Flag(out.holds())),
        );
    }
    report.param("failures", failures);
    report.status = if failures == 0 {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(report)
}

pub fn distribution(m: usize, i: usize, n: usize, max_n: usize) -> CliResult<ReportRecord> {
    check_index(m, i)?;
    limit("n", n, max_n)?;
    let dist = SubsumDistribution::compute(n, m, i)?;
    let mut report = ReportRecord::new(ReportKind::Distribution);
    report.param("m", m).param("i", i).param("n", n);
    let total = dist.total();
    let mean = ExactRational::from_unsigned(&dist.first_moment(), &total);
    report.param("partitions", &total).param("mean", &mean);
    for (k, count) in dist.counts().iter().enumerate() {
        report.rows.push(
            Row::new()
                .with("k", Cell::exact(k))
                .with("count", Cell::exact(count)),
        );
    }
    Ok(report)
}

fn engine_for(n_max: usize, cache_dir: Option<&Path>) -> CliResult<Engine> {
    Ok(Engine::with_table(cache::partition_table(
        cache_dir, n_max,
    )?))
}

struct Residual<R> {
    exact: ExactRational,
    predicted: Option<R>,
    residual: Option<R>,
}

fn residual<R: Real>(
    engine: &Engine,
    consts: &TheoremConstants<R>,
    n: usize,
) -> CliResult<Residual<R>> {
    let exact = engine.expected_subsum(n, consts.m, consts.i)?;
    if n < 2 {
        return Ok(Residual {
            exact,
            predicted: None,
            residual: None,
        });
    }
    let predicted = consts.predict(n as u64);
    let residual = exact.to_real::<R>() - predicted;
    Ok(Residual {
        exact,
        predicted: Some(predicted),
        residual: Some(residual),
    })
}

fn residual_row<R: Real>(n: usize, m: usize, res: &Residual<R>) -> Row {
    let nr = R::from_int(n as i64);
    let scaled = |d: R| res.residual.map_or(Cell::Empty, |r| real_cell(r / d));
    let n_over_m = ExactRational::new(BigInt::from(n), BigInt::from(m));
    Row::new()
        .with("n", Cell::exact(n))
        .with("expected", Cell::exact(&res.exact))
        .with(
            "expected_decimal",
            Cell::exact(res.exact.to_decimal(DIGITS)),
        )
        .with("n_over_m", Cell::exact(n_over_m.to_decimal(DIGITS)))
        .with("predicted", res.predicted.map_or(Cell::Empty, real_cell))
        .with("residual", res.residual.map_or(Cell::Empty, real_cell))
        .with(
            "residual_over_log_n",
            if n < 2 { Cell::Empty } else { scaled(nr.ln()) },
        )
        .with("residual_over_sqrt_n", scaled(nr.sqrt()))
}

pub fn expectation<R: Real>(
    m: usize,
    i: usize,
    ns: &[usize],
    max_n: usize,
    cache_dir: Option<&Path>,
) -> CliResult<ReportRecord> {
    check_index(m, i)?;
    let largest = ns.iter().copied().max().unwrap_or(0);
    limit("n", largest, max_n)?;
    if let Some(&bad) = ns.iter().find(|&&n| n == 0) {
        return Err(CliError::Usage(format!("n must be at least 1, got {bad}")));
    }
    let engine = engine_for(largest, cache_dir)?;
    let consts = TheoremConstants::<R>::compute(m, i)?;
    let mut report = ReportRecord::new(ReportKind::Expectation);
    report
        .param("m", m)
        .param("i", i)
        .param("b", consts.b.to_decimal())
        .param("c", consts.c.to_decimal());
    for &n in ns {
        let res = residual(&engine, &consts, n)?;
        report.rows.push(residual_row(n, m, &res));
    }
    Ok(report)
}

pub struct Ladder {
    pub n_min: usize,
    pub n_max: usize,
    pub ratio: usize,
    pub limit: usize,
}

impl Ladder {
    fn points(&self) -> CliResult<Vec<usize>> {
        if self.n_min < 2 || self.ratio < 2 || self.n_min > self.n_max {
            return Err(CliError::Usage(
                "the ladder needs 2 <= n-min <= n-max and ratio >= 2".into(),
            ));
        }
        limit("n-max", self.n_max, self.limit)?;
        let mut points = vec![self.n_min];
        while let Some(next) = points.last().and_then(|n| n.checked_mul(self.ratio)) {
            if next > self.n_max {
                break;
            }
            points.push(next);
        }
        Ok(points)
    }
}

pub fn convergence<R: Real>(
    m: usize,
    i: usize,
    ladder: &Ladder,
    threads: usize,
    cache_dir: Option<&Path>,
) -> CliResult<ReportRecord> {
    check_index(m, i)?;
    let points = ladder.points()?;
    let engine = engine_for(*points.last().expect("nonempty ladder"), cache_dir)?;
    let consts = TheoremConstants::<R>::compute(m, i)?;

    let chunk = points.len().div_ceil(threads.max(1));
    let results: Vec<CliResult<Residual<R>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|ns| {
                let (engine, consts) = (&engine, &consts);
                scope.spawn(move || {
                    ns.iter()
                        .map(|&n| residual(engine, consts, n))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut report = ReportRecord::new(ReportKind::Convergence);
    report
        .param("m", m)
        .param("i", i)
        .param("ladder", format!("{:?}", points))
        .param("b", consts.b.to_decimal())
        .param("c", consts.c.to_decimal());
    let mut scaled = Vec::new();
    for (&n, res) in points.iter().zip(results) {
        let res = res?;
        if let Some(r) = res.residual {
            scaled.push(r.abs() / R::from_int(n as i64).sqrt());
        }
        report.rows.push(residual_row(n, m, &res));
    }
    let decreasing = scaled.windows(2).all(|w| w[1] < w[0]);
    let verdict = if scaled.len() < 2 {
        report.note("ladder has fewer than two points; no trend to judge");
        "insufficient"
    } else if decreasing {
        report.status = Status::Pass;
        "converging"
    } else {
        report.status = Status::Fail;
        "not-monotone"
    };
    report.param("verdict", verdict);
    Ok(report)
}

pub fn constants<R: Real>(m: usize, max_m: usize) -> CliResult<ReportRecord> {
    if m == 0 {
        return Err(CliError::Usage("m must be at least 1".into()));
    }
    limit("m", m, max_m)?;
    let tables = GammaMethod::ALL
        .iter()
        .map(|&method| GammaConstants::<R>::compute(m, method))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = ReportRecord::new(ReportKind::Constants);
    report.param("m", m);
    let mut worst = R::zero();
    for h in 1..=m {
        let values: Vec<R> = tables.iter().map(|t| t.values[h - 1]).collect();
        for a in &values {
            for b in &values {
                worst = worst.max((*a - *b).abs());
            }
        }
        let b: R = b_coeff(m, h)?;
        let c: R = c_coeff(m, h)?;
        let c_alt = c_coeff_from_gammas(m, h, &tables[1])?;
        worst = worst.max((c - c_alt).abs());
        report.rows.push(
            Row::new()
                .with("index", Cell::exact(h))
                .with("gamma_roots", real_cell(values[0]))
                .with("gamma_gauss", real_cell(values[1]))
                .with("gamma_digamma", real_cell(values[2]))
                .with("b", real_cell(b))
                .with("c", real_cell(c))
                .with("c_from_gammas", real_cell(c_alt)),
        );
    }
    report.param("max_deviation", worst.to_decimal());
    report.param("tolerance", R::tolerance().to_decimal());
    report.status = if worst <= R::tolerance() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(report)
}

pub fn lambert<R: Real>(
    m: usize,
    h: usize,
    alpha: &str,
    max_terms: usize,
) -> CliResult<ReportRecord> {
    check_index(m, h)?;
    let a = R::from_decimal_str(alpha)
        .ok_or_else(|| CliError::Usage(format!("alpha {alpha:?} is not a decimal number")))?;
    let exact: R = lambert_tau_exact(a, m, h)?;
    let series = lambert_tau_asymptotic(a, m, h, max_terms)?;
    let diff = (exact - series.value).abs();
    let bound = R::from_int(2) * series.last_term_magnitude;
    let mut report = ReportRecord::new(ReportKind::Lambert);
    report
        .param("m", m)
        .param("h", h)
        .param("alpha", alpha)
        .param("max_terms", max_terms);
    report.rows.push(
        Row::new()
            .with("exact", real_cell(exact))
            .with("asymptotic", real_cell(series.value))
            .with("difference", real_cell(diff))
            .with("terms_used", Cell::exact(series.terms_used))
            .with("last_term_magnitude", real_cell(series.last_term_magnitude))
            .with("within_bound", Cell::Flag(diff <= bound)),
    );
    if let Some(w) = series.warning {
        report.note(w);
    }
    report.status = if diff <= bound {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(report)
}

/// Parses `3,2,1` (also `3 2 1`, `(3,2,1)`, or empty for the empty partition).
pub fn parse_partition(text: &str) -> CliResult<Partition> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad part {s:?} in {text:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

pub fn bijection(
    partition: Option<&str>,
    alpha: Option<&str>,
    beta: Option<&str>,
    n: Option<usize>,
) -> CliResult<ReportRecord> {
    let mut report = ReportRecord::new(ReportKind::Bijection);
    let (lambda, image) = match (partition, n) {
        (Some(text), _) => {
            let lambda = parse_partition(text)?;
            report.param("direction", "forward");
            let image = forward(&lambda);
            (lambda, image)
        }
        (None, Some(n)) => {
            let a = parse_partition(alpha.unwrap_or(""))?;
            let b = parse_partition(beta.unwrap_or(""))?;
            report.param("direction", "inverse");
            let lambda = inverse(&a, &b, n)?;
            let image = forward(&lambda);
            if image.alpha != a || image.beta != b {
                report.status = Status::Fail;
            }
            (lambda, image)
        }
        (None, None) => {
            return Err(CliError::Usage(
                "give --partition, or --n with --alpha/--beta".into(),
            ))
        }
    };
    let roundtrip = inverse(&image.alpha, &image.beta, image.n)? == lambda;
    if !roundtrip {
        report.status = Status::Fail;
    } else if report.status != Status::Fail {
        report.status = Status::Pass;
    }
    report.rows.push(
        Row::new()
            .with("lambda", Cell::text(&lambda))
            .with("alpha", Cell::text(&image.alpha))
            .with("beta", Cell::text(&image.beta))
            .with("n", Cell::exact(image.n))
            .with("j", Cell::exact(image.j))
            .with("delta", Cell::exact(image.delta()))
            .with("roundtrip", Cell::Flag(roundtrip)),
    );
    Ok(report)
}

pub fn oeis_check(path: &Path, generator: Generator, count: usize) -> CliResult<ReportRecord> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
    let bfile = BFile::parse(std::io::BufReader::new(file))?;
    let mut report = ReportRecord::new(ReportKind::OeisCheck);
    report.param("bfile", path.display()).param("count", count);
    let Generator::A000712 = generator;
    report.param("generator", "a000712");
    let available = bfile.entries.len();
    if count > available {
        report.note(format!(
            "requested {count} terms but the b-file has {available}; comparing those"
        ));
    }
    let entries = &bfile.entries[..count.min(available)];
    if let Some(&(first, _)) = entries.first() {
        if first < 0 {
            return Err(CliError::Usage(format!(
                "a000712 has offset 0; b-file starts at {first}"
            )));
        }
        report.param("offset", first);
    }
    let max_index = entries.last().map_or(0, |&(i, _)| i as usize);
    let table = subsums_core::exact::PartitionCountTable::build(max_index);
    let mut first_disagreement = None;
    for (index, value) in entries {
        let generated: BigUint = a000712(*index as usize, &table)?;
        let matches = BigInt::from(generated.clone()) == *value;
        if !matches && first_disagreement.is_none() {
            first_disagreement = Some(*index);
        }
        report.rows.push(
            Row::new()
                .with("n", Cell::exact(index))
                .with("bfile", Cell::exact(value))
                .with("generated", Cell::exact(&generated))
                .with("match", Cell::Flag(matches)),
        );
    }
    report.param("compared", entries.len());
    match first_disagreement {
        Some(i) => {
            report.param("first_disagreement", i);
            report.status = Status::Fail;
        }
        None => report.status = Status::Pass,
    }
    Ok(report)
}
