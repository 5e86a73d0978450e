//! Command-line front end: `count`, `check`, `enumerate`, `sample`,
//! `plotdata` and `oeis`.
//!
//! Exit codes: 0 for success (or "chiral"), 1 for "not chiral" or an empty
//! sampling stratum, 2 for usage errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Number, Value};

use crate::chirality::{self, tower_case, CountReport};
use crate::partition::{partition_counts, Partition};
use crate::perm;
use crate::tower::{deviation_of_tower, tower_of};

#[derive(Debug, Parser)]
#[command(name = "chiral", version, about = "Chiral partitions of n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form counts for n, as JSON
    Count(CountArgs),
    /// Decide whether a partition such as [5,4,2,2,1,1] is chiral
    Check(CheckArgs),
    /// List chiral partitions of n in canonical order
    Enumerate(EnumerateArgs),
    /// Draw uniformly random chiral partitions of n
    Sample(SampleArgs),
    /// CSV of a(n) against b(n+2) for n = 1..=n_max
    Plotdata(PlotdataArgs),
    /// CSV of b(n) and p(n) - b(n) for n = 1..=n_max
    Oeis(OeisArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub n: u64,
    /// Add b_v(n) for every v
    #[arg(long)]
    pub by_valuation: bool,
    /// Add the number of self-conjugate chiral partitions
    #[arg(long)]
    pub self_conjugate: bool,
    /// Add a(n), the number of odd-dimensional irreducibles
    #[arg(long)]
    pub odd: bool,
    /// Add the number of chiral hooks
    #[arg(long)]
    pub hooks: bool,
    /// Add c(n), the number of chiral permutation representations (n >= 3)
    #[arg(long)]
    pub perm: bool,
    /// Add p(n)
    #[arg(long)]
    pub partition_function: bool,
    /// Print the single requested integer instead of JSON
    #[arg(long)]
    pub plain: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Partition literal, e.g. [3,1]
    pub partition: String,
    /// Test the permutation representation C[X_λ] instead
    #[arg(long)]
    pub perm: bool,
    /// Show the evidence behind the verdict
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub n: u64,
    /// Only partitions whose dimension has this 2-adic valuation
    #[arg(long)]
    pub valuation: Option<u32>,
    /// Only self-conjugate chiral partitions
    #[arg(long, conflicts_with = "valuation")]
    pub self_conjugate: bool,
    /// Stop after this many lines
    #[arg(long)]
    pub limit: Option<u64>,
    /// Print Frobenius coordinates
    #[arg(long)]
    pub frobenius: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    pub n: u64,
    #[arg(long)]
    pub valuation: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[arg(long)]
    pub frobenius: bool,
}

#[derive(Debug, Args)]
pub struct PlotdataArgs {
    pub n_max: u64,
    /// Add base-2 logarithm columns
    #[arg(long)]
    pub log2: bool,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    pub n_max: u64,
}

enum Failure {
    Usage(String),
    Empty(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command, writing to
/// `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Count(a) => count(a, out),
        Command::Check(a) => check(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Sample(a) => sample(a, out),
        Command::Plotdata(a) => plotdata(a, out),
        Command::Oeis(a) => oeis(a, out),
    };
    let result = result.and_then(|code| out.flush().map(|_| code).map_err(Failure::from));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Empty(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn number(x: &BigUint) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal digits"))
}

fn count(args: &CountArgs, out: &mut dyn Write) -> Outcome {
    let n = args.n;
    if n < 1 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if args.perm && n < 3 {
        return Err(Failure::Usage("--perm requires n >= 3".into()));
    }
    let selected = [
        args.by_valuation,
        args.self_conjugate,
        args.odd,
        args.hooks,
        args.perm,
        args.partition_function,
    ]
    .iter()
    .filter(|&&f| f)
    .count();
    if args.plain && selected > 1 {
        return Err(Failure::Usage("--plain takes at most one counter flag".into()));
    }

    let report = CountReport::new(n, args.partition_function);
    let perm_count = if args.perm {
        Some(perm::count_perm_chiral(n).expect("n >= 3 checked"))
    } else {
        None
    };

    if args.plain {
        if args.by_valuation {
            for (v, c) in &report.b_by_valuation {
                writeln!(out, "{v},{c}")?;
            }
            return Ok(0);
        }
        let value = if args.self_conjugate {
            &report.self_conjugate
        } else if args.odd {
            &report.a
        } else if args.hooks {
            &report.hooks
        } else if let Some(c) = &perm_count {
            c
        } else if let Some(p) = &report.p {
            p
        } else {
            &report.b
        };
        writeln!(out, "{value}")?;
        return Ok(0);
    }

    let mut record = Map::new();
    record.insert("n".into(), Value::from(n));
    record.insert("b".into(), number(&report.b));
    if args.by_valuation {
        let by_v = report
            .b_by_valuation
            .iter()
            .map(|(v, c)| (v.to_string(), number(c)))
            .collect();
        record.insert("b_by_valuation".into(), Value::Object(by_v));
    }
    if args.self_conjugate {
        record.insert("self_conjugate".into(), number(&report.self_conjugate));
    }
    if args.odd {
        record.insert("a".into(), number(&report.a));
    }
    if args.hooks {
        record.insert("hooks".into(), number(&report.hooks));
    }
    if let Some(c) = &perm_count {
        record.insert("c".into(), number(c));
    }
    if let Some(p) = &report.p {
        record.insert("p".into(), number(p));
    }
    writeln!(out, "{}", Value::Object(record))?;
    Ok(0)
}

fn check(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let lambda: Partition = args
        .partition
        .parse()
        .map_err(|e: crate::Error| Failure::Usage(e.to_string()))?;
    let verdict = if args.perm {
        if args.explain {
            let odd: Vec<usize> = lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect();
            writeln!(out, "partition: {lambda}")?;
            writeln!(out, "n: {}", lambda.size())?;
            writeln!(out, "odd parts: {odd:?}")?;
            writeln!(out, "neat: {}", perm::is_neat(&lambda))?;
        }
        perm::perm_is_chiral(&lambda)
    } else {
        if args.explain {
            let tower = tower_of(&lambda);
            writeln!(out, "partition: {lambda}")?;
            writeln!(out, "n: {}", lambda.size())?;
            writeln!(out, "tower:")?;
            write!(out, "{}", tower.render())?;
            writeln!(out, "weights: {:?}", tower.row_weights())?;
            writeln!(out, "v2(f): {}", deviation_of_tower(&tower, lambda.size()))?;
            match tower_case(&lambda) {
                Some(case) => writeln!(out, "case: {case}")?,
                None => writeln!(out, "case: none")?,
            }
        }
        chirality::is_chiral(&lambda)
    };
    if verdict {
        writeln!(out, "chiral")?;
        Ok(0)
    } else {
        writeln!(out, "not chiral")?;
        Ok(1)
    }
}

fn write_partition(out: &mut dyn Write, lambda: &Partition, frobenius: bool) -> io::Result<()> {
    match lambda.frobenius() {
        Ok(coords) if frobenius => writeln!(out, "{coords}"),
        _ => writeln!(out, "{lambda}"),
    }
}

fn enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    if args.n < 1 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let stream: Box<dyn Iterator<Item = Partition>> = if args.self_conjugate {
        Box::new(chirality::enumerate_self_conjugate_chiral(args.n))
    } else {
        Box::new(chirality::enumerate_chiral(args.n, args.valuation))
    };
    let limit = args.limit.unwrap_or(u64::MAX);
    for lambda in stream.take(limit.try_into().unwrap_or(usize::MAX)) {
        write_partition(out, &lambda, args.frobenius)?;
    }
    Ok(0)
}

fn sample(args: &SampleArgs, out: &mut dyn Write) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.count {
        let lambda = chirality::sample_chiral(args.n, args.valuation, &mut rng)
            .map_err(|e| Failure::Empty(e.to_string()))?;
        write_partition(out, &lambda, args.frobenius)?;
    }
    Ok(0)
}

fn log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("fits in f64").log2() + shift as f64
}

fn plotdata(args: &PlotdataArgs, out: &mut dyn Write) -> Outcome {
    if args.n_max < 1 {
        return Err(Failure::Usage("n_max must be at least 1".into()));
    }
    if args.log2 {
        writeln!(out, "n,a_n,b_n_plus_2,log2_a_n,log2_b_n_plus_2")?;
    } else {
        writeln!(out, "n,a_n,b_n_plus_2")?;
    }
    for n in 1..=args.n_max {
        let a = chirality::count_odd(n);
        let b = chirality::count_chiral(n + 2);
        if args.log2 {
            writeln!(out, "{n},{a},{b},{:.6},{:.6}", log2(&a), log2(&b))?;
        } else {
            writeln!(out, "{n},{a},{b}")?;
        }
    }
    Ok(0)
}

fn oeis(args: &OeisArgs, out: &mut dyn Write) -> Outcome {
    if args.n_max < 1 {
        return Err(Failure::Usage("n_max must be at least 1".into()));
    }
    let p = partition_counts(args.n_max as usize);
    writeln!(out, "n,b_n,p_minus_b")?;
    for n in 1..=args.n_max {
        let b = chirality::count_chiral(n);
        let rest = &p[n as usize] - &b;
        writeln!(out, "{n},{b},{rest}")?;
    }
    Ok(0)
}
