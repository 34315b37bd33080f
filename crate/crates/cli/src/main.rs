//! `tricorr` — conversions between threshold graphs, Betti sequences, and
//! anti-lecture hall compositions; exhaustive tables; exact and Monte Carlo
//! expected values; oracle self-checks; coedge-ideal emission.
//!
//! Exit codes: 0 success, 1 malformed input or budget, 2 semantic validation
//! failure (not a threshold graph / not a Betti sequence / ratio violation),
//! 3 internal consistency failure.

use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tricorr::arith::parse_rational;
use tricorr::correspondence::{
    alhc_of, betti_of, enumerate_alhc, graph_from_alhc, graph_from_betti, oracle_check, Alhc,
    BettiSequence,
};
use tricorr::graph::{format_monomial, recognize, Adjacency, MonomialStyle};
use tricorr::random::{expectation, monte_carlo, ExactMethod, Statistic, ENUMERATION_LIMIT};
use tricorr::table::{correspondence_table, table_csv};
use tricorr::{BigInt, Error, ThresholdGraph};

/// Environment variable consulted for the thread cap when --threads is absent.
const THREADS_ENV: &str = "TRICORR_THREADS";

#[derive(Parser)]
#[command(name = "tricorr", version, about = "Threshold graphs, Betti sequences, and anti-lecture hall compositions")]
struct Cli {
    /// Cap the worker threads used by parallel library calls
    /// (default: all cores, or the TRICORR_THREADS environment variable).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Repr {
    Graph,
    Betti,
    Alhc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Graph,
    Betti,
    Alhc,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealFormat {
    Plain,
    Cas,
}

#[derive(Subcommand)]
enum Command {
    /// Convert one representation into another (or into the full triple).
    Convert {
        /// Input representation.
        #[arg(long, value_enum)]
        from: Repr,
        /// Output representation.
        #[arg(long, value_enum)]
        to: Target,
        /// n, for --from graph.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated sigma, for --from graph; empty string for the empty set.
        #[arg(long, default_value = "")]
        sigma: String,
        /// Comma-separated sequence entries, for --from betti / --from alhc.
        #[arg(long)]
        values: Option<String>,
        /// Composition bound, for --from alhc (the correspondence needs 1).
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Emit the full correspondence table for all 2^n graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Exact or Monte Carlo expected values under the random model.
    Expect {
        #[arg(long)]
        n: usize,
        /// Probability: num/den or integer for exact methods, decimal for mc.
        #[arg(long)]
        p: String,
        /// betti | alhc | projdim.
        #[arg(long)]
        stat: String,
        /// closed | recurrence | enumerate | mc.
        #[arg(long)]
        method: String,
        /// Sample count for --method mc.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Seed for --method mc; identical seeds reproduce reports bit for bit.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check betti_of against the subset oracle, and both round trips,
    /// over every graph with n up to --max-n.
    OracleCheck {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Print the coedge-ideal generators of T(n, sigma).
    Ideal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long, value_enum, default_value_t = IdealFormat::Plain)]
        format: IdealFormat,
    },
    /// Recover (n, sigma) from an explicit edge list.
    Recognize {
        /// Edges as "u-v" pairs, comma-separated; empty for an edgeless graph.
        #[arg(long, default_value = "")]
        edges: String,
        /// Largest vertex label (the graph has m+1 vertices).
        #[arg(long)]
        m: usize,
    },
    /// List every anti-lecture hall composition of length n with bound t.
    AlhcEnumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
}

/// A diagnosed failure: message for stderr plus the contractual exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotThreshold
            | Error::NotBettiSequence
            | Error::RatioViolation
            | Error::BoundNotOne(_)
            | Error::NotSimpleGraph => 2,
            Error::OracleMismatch { .. } => 3,
            _ => 1,
        };
        Failure { code, message: err.to_string() }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            exit(code);
        }
    };
    if let Err(failure) = configure_threads(cli.threads).and_then(|()| run(cli.command)) {
        eprintln!("error: {}", failure.message);
        exit(failure.code);
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let cap = match flag {
        Some(n) => Some(n),
        None => match std::env::var(THREADS_ENV) {
            Ok(raw) => Some(
                raw.parse::<usize>()
                    .map_err(|_| Failure::malformed(format!("malformed {THREADS_ENV} `{raw}`")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(threads) = cap {
        if threads == 0 {
            return Err(Failure::malformed("thread cap must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::malformed(format!("cannot configure thread pool: {e}")))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Convert { from, to, n, sigma, values, t } => {
            run_convert(from, to, n, &sigma, values.as_deref(), t)
        }
        Command::Enumerate { n, format } => run_enumerate(n, format),
        Command::Expect { n, p, stat, method, samples, seed } => {
            run_expect(n, &p, &stat, &method, samples, seed)
        }
        Command::OracleCheck { max_n } => run_oracle_check(max_n),
        Command::Ideal { n, sigma, format } => run_ideal(n, &sigma, format),
        Command::Recognize { edges, m } => run_recognize(&edges, m),
        Command::AlhcEnumerate { n, t } => run_alhc_enumerate(n, t),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Failure::malformed(format!("malformed {what} entry `{tok}`")))
        })
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value)
        .map_err(|e| Failure { code: 3, message: format!("serialization failed: {e}") })?;
    println!("{line}");
    Ok(())
}

fn betti_u64s(beta: &BettiSequence) -> Result<Vec<u64>, Failure> {
    beta.to_u64s()
        .ok_or_else(|| Failure::malformed("betti entries exceed the CLI's integer range"))
}

#[derive(Serialize)]
struct Triple {
    n: usize,
    sigma: Vec<usize>,
    betti: Vec<u64>,
    alhc: Vec<u64>,
}

fn triple_of(t: &ThresholdGraph) -> Result<Triple, Failure> {
    Ok(Triple {
        n: t.n(),
        sigma: t.sigma().iter().copied().collect(),
        betti: betti_u64s(&betti_of(t))?,
        alhc: alhc_of(t).entries().to_vec(),
    })
}

fn run_convert(
    from: Repr,
    to: Target,
    n: Option<usize>,
    sigma: &str,
    values: Option<&str>,
    t: u64,
) -> Result<(), Failure> {
    let values_for = |repr: &str| {
        values.ok_or_else(|| Failure::malformed(format!("--from {repr} requires --values")))
    };
    let graph = match from {
        Repr::Graph => {
            let n = n.ok_or_else(|| Failure::malformed("--from graph requires --n"))?;
            ThresholdGraph::new(n, parse_list::<usize>(sigma, "sigma")?)?
        }
        Repr::Betti => {
            let entries = parse_list::<BigInt>(values_for("betti")?, "betti")?;
            graph_from_betti(&BettiSequence::new(entries)?)?
        }
        Repr::Alhc => {
            let entries = parse_list::<i64>(values_for("alhc")?, "alhc")?;
            if entries.iter().any(|&x| x < 0) {
                return Err(Error::RatioViolation.into());
            }
            let entries: Vec<u64> = entries.into_iter().map(|x| x as u64).collect();
            graph_from_alhc(&Alhc::new(entries, t)?)?
        }
    };
    match to {
        Target::Graph => print_json(&graph),
        Target::Betti => print_json(&betti_u64s(&betti_of(&graph))?),
        Target::Alhc => print_json(&alhc_of(&graph).entries().to_vec()),
        Target::All => print_json(&triple_of(&graph)?),
    }
}

#[derive(Serialize)]
struct TableRow {
    sigma: Vec<usize>,
    betti: Vec<u64>,
    alhc: Vec<u64>,
}

#[derive(Serialize)]
struct Table {
    n: usize,
    rows: Vec<TableRow>,
}

fn run_enumerate(n: usize, format: TableFormat) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::NTooSmall.into());
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationBudget(n).into());
    }
    let rows = correspondence_table(n);
    match format {
        TableFormat::Csv => {
            print!("{}", table_csv(&rows));
            Ok(())
        }
        TableFormat::Json => {
            let rows = rows
                .into_iter()
                .map(|row| {
                    let betti = betti_u64s(&BettiSequence::new(row.betti)?)?;
                    Ok(TableRow { sigma: row.sigma, betti, alhc: row.alhc })
                })
                .collect::<Result<Vec<TableRow>, Failure>>()?;
            print_json(&Table { n, rows })
        }
    }
}

fn run_expect(
    n: usize,
    p: &str,
    stat: &str,
    method: &str,
    samples: u64,
    seed: u64,
) -> Result<(), Failure> {
    let stat: Statistic = stat.parse().map_err(Failure::from)?;
    if method == "mc" {
        if !p.contains('.') || p.contains('/') {
            return Err(Failure::malformed(
                "method mc takes a decimal p (e.g. 0.3); exact methods take num/den",
            ));
        }
        let p: f64 = p
            .parse()
            .map_err(|_| Failure::malformed(format!("malformed probability `{p}`")))?;
        if samples == 0 {
            return Err(Failure::malformed("--samples must be at least 1"));
        }
        print_json(&monte_carlo(n, p, stat, samples, seed)?)
    } else {
        let method: ExactMethod = method.parse().map_err(Failure::from)?;
        if p.contains('.') {
            return Err(Failure::malformed(
                "exact methods take a rational p (num/den or integer); mc takes a decimal",
            ));
        }
        let p = parse_rational(p)?;
        print_json(&expectation(n, &p, stat, method)?)
    }
}

fn run_oracle_check(max_n: usize) -> Result<(), Failure> {
    if max_n > 12 {
        return Err(Failure::malformed(format!(
            "--max-n is capped at 12 (2^13 - 2 graphs); got {max_n}"
        )));
    }
    let checked = oracle_check(max_n)?;
    println!("{checked} graphs checked, 0 mismatches");
    Ok(())
}

fn run_ideal(n: usize, sigma: &str, format: IdealFormat) -> Result<(), Failure> {
    let t = ThresholdGraph::new(n, parse_list::<usize>(sigma, "sigma")?)?;
    let style = match format {
        IdealFormat::Plain => MonomialStyle::Plain,
        IdealFormat::Cas => MonomialStyle::Cas,
    };
    let gens = t.coedge_generators();
    if !gens.is_empty() {
        let rendered: Vec<String> =
            gens.into_iter().map(|e| format_monomial(e, style)).collect();
        println!("{}", rendered.join(", "));
    }
    Ok(())
}

fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let malformed = || Failure::malformed(format!("malformed edge `{tok}` (want u-v)"));
            let (u, v) = tok.split_once('-').ok_or_else(malformed)?;
            Ok((u.parse().map_err(|_| malformed())?, v.parse().map_err(|_| malformed())?))
        })
        .collect()
}

fn run_recognize(edges: &str, m: usize) -> Result<(), Failure> {
    let adjacency = Adjacency::from_edges(m, &parse_edges(edges)?)?;
    print_json(&recognize(&adjacency)?)
}

#[derive(Serialize)]
struct AlhcListing {
    n: usize,
    t: u64,
    count: u64,
    compositions: Vec<Vec<u64>>,
}

fn run_alhc_enumerate(n: usize, t: u64) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::NTooSmall.into());
    }
    // Budget: at most 2^16 compositions, the same ceiling as graph enumeration.
    let within_budget = n <= 1 << ENUMERATION_LIMIT
        && t
            .checked_add(1)
            .and_then(|base| base.checked_pow(n as u32))
            .is_some_and(|total| total <= 1 << ENUMERATION_LIMIT);
    if !within_budget {
        return Err(Error::EnumerationBudget(n).into());
    }
    let compositions: Vec<Vec<u64>> =
        enumerate_alhc(n, t).map(|lam| lam.entries().to_vec()).collect();
    print_json(&AlhcListing { n, t, count: compositions.len() as u64, compositions })
}
