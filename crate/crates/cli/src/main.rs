//! `isoformal` command-line driver.
//!
//! Exit codes: 0 success, 2 parse error, 3 invariant violation,
//! 4 capacity exceeded, 5 internal inconsistency.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use isoformal::error::Error;
use isoformal::{
    classify, classify_with_verification, e6, Family, InputDoc, PoincareReport, SimpleType,
    WeylRegistry, WeylSource, DEFAULT_BUDGET,
};

use cache::{CacheEvent, DiskCache};

#[derive(Parser)]
#[command(
    name = "isoformal",
    version,
    about = "Isotropy formality of circle actions"
)]
struct Cli {
    /// Store enumerated Weyl groups here and reuse them across runs.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for the parallel parts.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check every closed-form verdict by exhaustive Weyl group search.
    #[arg(long, global = true)]
    verify: bool,
    /// Largest Weyl group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide isotropy formality for the pair described in FILE.
    Classify { file: PathBuf },
    /// Print p(G), p(G/S) and total Betti numbers for the pair in FILE.
    Poincare { file: PathBuf },
    /// Enumerate a Weyl group and print its order and class census.
    Weyl { family: String, rank: usize },
    /// Recompute the E6 subspace counts and the eigenspace containment.
    E6Verify,
}

enum Failure {
    Parse(String),
    Core(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Core(Error::Input(_)) => 3,
            Failure::Core(Error::Capacity { .. }) => 4,
            Failure::Core(Error::Internal(_)) | Failure::Check(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Parse(m) => format!("parse error: {m}"),
            Failure::Core(Error::Input(m)) => format!("invariant violation: {m}"),
            Failure::Core(e @ Error::Capacity { .. }) => e.to_string(),
            Failure::Core(Error::Internal(m)) => format!("internal inconsistency: {m}"),
            Failure::Check(m) => format!("verification failed: {m}"),
        }
    }
}

fn read_doc(path: &PathBuf) -> Result<InputDoc, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    InputDoc::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_type(family: &str, rank: usize) -> Result<SimpleType, Failure> {
    let f: Family = family
        .parse()
        .map_err(|e: Error| Failure::Parse(e.to_string()))?;
    Ok(SimpleType::new(f, rank)?)
}

fn emit(json: bool, text: String, machine: String) {
    if json {
        println!("{machine}");
    } else {
        println!("{text}");
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let disk = cli
        .cache_dir
        .as_ref()
        .map(|d| DiskCache::new(d, cli.budget));
    let memory = WeylRegistry::with_budget(cli.budget);
    let source: &dyn WeylSource = match &disk {
        Some(d) => d,
        None => &memory,
    };

    let result = match &cli.command {
        Command::Classify { file } => {
            let (spec, c) = read_doc(file)?.into_pair()?;
            let report = if cli.verify {
                classify_with_verification(&spec, &c, source)?
            } else {
                classify(&spec, &c)?
            };
            emit(cli.json, report.to_string(), report.to_json());
            Ok(())
        }
        Command::Poincare { file } => {
            let (spec, c) = read_doc(file)?.into_pair()?;
            let report = PoincareReport::new(&spec, &c)?;
            emit(cli.json, report.to_string(), report.to_json());
            Ok(())
        }
        Command::Weyl { family, rank } => {
            let w = source.weyl(parse_type(family, *rank)?)?;
            let s = w.summary();
            emit(cli.json, s.to_string(), s.to_json());
            if s.order_matches {
                Ok(())
            } else {
                Err(Failure::Check("order disagrees with the exponents".into()))
            }
        }
        Command::E6Verify => {
            let start = Instant::now();
            let w = source.weyl(SimpleType::new(Family::E, 6)?)?;
            let report = e6::verify_minus_one_union(&w)?;
            let elapsed = start.elapsed().as_secs_f64();
            if cli.json {
                println!("{}", report.to_json());
                eprintln!("elapsed: {elapsed:.3} s");
            } else {
                println!("{report}\nelapsed: {elapsed:.3} s");
            }
            let failures = report.failures();
            if failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(failures.join("; ")))
            }
        }
    };

    if let Some(d) = &disk {
        for (t, ev) in d.events() {
            let what = match ev {
                CacheEvent::Hit => "loaded from cache",
                CacheEvent::Miss => "enumerated and cached",
                CacheEvent::Regenerated => "cache file invalid, regenerated",
            };
            eprintln!("W({t}): {what} ({})", d.path_for(t).display());
        }
    }
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
        {
            eprintln!("internal inconsistency: thread pool: {e}");
            return ExitCode::from(5);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}
