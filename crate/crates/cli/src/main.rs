// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `edomset`: export the web and gasket graphs, compute edge domination
//! numbers and MEDS counts by exhaustive search, recursion or closed form,
//! reproduce the count table and cross-check the recursion seeds.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 capacity error.

mod cache;
mod render;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edomset::recursion::{sfw, sg};
use edomset::{Count, Error, Family, Generation, Oracle};

/// Environment variable holding the oracle worker count.
const THREADS_ENV: &str = "EDOM_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "edomset",
    version,
    about = "Edge domination on the scale-free web and the Sierpinski gasket"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write generation n of a family as an edge list, DOT, JSON or CSV.
    Generate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: OutputFormat,
        #[command(flatten)]
        io: Io,
    },
    /// Print the edge domination number.
    Gamma {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
        #[command(flatten)]
        io: Io,
    },
    /// Print the number of minimum edge dominating sets.
    Count {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
        #[command(flatten)]
        io: Io,
    },
    /// Report the anchor class minima found by exhaustive search, as JSON.
    Classes {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        io: Io,
    },
    /// Emit MEDS counts of both families for generations 3..=n.
    Table {
        /// Largest generation in the table.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[command(flatten)]
        io: Io,
    },
    /// Compare exhaustive-search values against the recursion seeds.
    Verify {
        /// Generation to check (at most 3).
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(clap::Args, Debug)]
struct Target {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Generation index; generation 1 is the triangle.
    #[arg(long)]
    n: u32,
}

#[derive(clap::Args, Debug)]
struct Io {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON cache of computed values, read before and updated after computing.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Web,
    Gasket,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Web => Family::Web,
            FamilyArg::Gasket => Family::Gasket,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Edgelist,
    Dot,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bruteforce,
    Recursion,
    Closedform,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Recursion => "recursion",
            Method::Closedform => "closedform",
        }
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Capacity(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Capacity(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Capacity(_) => Failure::Capacity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("edomset: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn configure_threads() -> Outcome<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot configure {threads} worker threads: {e}")))
}

fn generation(n: u32) -> Outcome<Generation> {
    Ok(Generation::new(n)?)
}

fn run(command: Command) -> Outcome<()> {
    match command {
        Command::Generate { target, format, io } => {
            let family = Family::from(target.family);
            let g = family.build(generation(target.n)?)?;
            emit(&io, &render::graph(family, target.n, &g, format))
        }
        Command::Gamma { target, method, io } => {
            let family = Family::from(target.family);
            let n = generation(target.n)?;
            let value = cached(&io, family, n, "gamma", method, || gamma(family, n, method))?;
            emit(&io, &format!("{value}\n"))
        }
        Command::Count { target, method, io } => {
            let family = Family::from(target.family);
            let n = generation(target.n)?;
            let value = cached(&io, family, n, "meds_count", method, || {
                count(family, n, method)
            })?;
            emit(&io, &format!("{value}\n"))
        }
        Command::Classes { target, io } => {
            let family = Family::from(target.family);
            let g = family.build(generation(target.n)?)?;
            let report = Oracle::default().class_minima(&g)?;
            emit(&io, &render::classes(family, target.n, &report))
        }
        Command::Table { n, format, io } => {
            if n < 3 {
                return Err(Failure::Usage(format!("table needs n >= 3, got {n}")));
            }
            let rows = table_rows(n)?;
            let text = match format {
                OutputFormat::Csv => render::table_csv(&rows),
                OutputFormat::Json => render::table_json(&rows),
                other => {
                    return Err(Failure::Usage(format!(
                        "table supports csv and json, not {other:?}"
                    )))
                }
            };
            emit(&io, &text)
        }
        Command::Verify { n, io } => {
            let report = verify::run(generation(n)?)?;
            emit(&io, &report.text)?;
            if report.failures > 0 {
                return Err(Failure::Verification(format!(
                    "{} check(s) failed",
                    report.failures
                )));
            }
            Ok(())
        }
    }
}

fn gamma(family: Family, n: Generation, method: Method) -> Outcome<String> {
    let value = match (method, family) {
        (Method::Bruteforce, _) => Oracle::default()
            .min_eds(&family.build(n)?)?
            .gamma
            .to_string(),
        (Method::Recursion, Family::Web) => sfw::gamma::<Count>(n)?.to_string(),
        (Method::Recursion, Family::Gasket) => sg::gamma::<Count>(n)?.to_string(),
        (Method::Closedform, Family::Web) => sfw::gamma_closed_form::<Count>(n)?.to_string(),
        (Method::Closedform, Family::Gasket) => sg::gamma_closed_form::<Count>(n)?.to_string(),
    };
    Ok(value)
}

fn count(family: Family, n: Generation, method: Method) -> Outcome<String> {
    let value = match (method, family) {
        (Method::Bruteforce, _) => Oracle::default().min_eds(&family.build(n)?)?.count,
        (Method::Recursion, Family::Web) => sfw::meds_count::<Count>(n)?,
        (Method::Recursion, Family::Gasket) => sg::meds_count::<Count>(n)?,
        (Method::Closedform, _) => {
            return Err(Failure::Usage(
                "MEDS counts have no closed form; use recursion or bruteforce".into(),
            ))
        }
    };
    Ok(value.to_string())
}

/// One row of the count table.
pub struct Row {
    pub n: u32,
    pub edges: Count,
    pub web: Count,
    pub gasket: Count,
}

fn table_rows(max_n: u32) -> Outcome<Vec<Row>> {
    let mut web = sfw::SfwCounts::<Count>::base();
    let mut gasket = sg::SgCounts::<Count>::base()?;
    let mut edges = Count::from(27u64);
    let mut rows = Vec::new();
    for n in 3..=max_n {
        if n > 3 {
            web = web.step()?;
            gasket = gasket.step()?;
            edges = edges * Count::from(3u64);
        }
        rows.push(Row {
            n,
            edges: edges.clone(),
            web: web.x.clone(),
            gasket: gasket.x.clone(),
        });
    }
    Ok(rows)
}

fn cached(
    io: &Io,
    family: Family,
    n: Generation,
    quantity: &str,
    method: Method,
    compute: impl FnOnce() -> Outcome<String>,
) -> Outcome<String> {
    let Some(path) = &io.cache else {
        return compute();
    };
    let key = cache::key(family, n, quantity, method.name());
    let mut store = cache::Cache::load(path)?;
    if let Some(v) = store.get(&key) {
        return Ok(v.to_owned());
    }
    let value = compute()?;
    store.insert(key, value.clone());
    store.save(path)?;
    Ok(value)
}

fn emit(io: &Io, text: &str) -> Outcome<()> {
    match &io.out {
        Some(path) => write_to(path, text),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()?;
            Ok(())
        }
    }
}

fn write_to(path: &Path, text: &str) -> Outcome<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(())
}
