//! `splinedim`: JSON in, JSON report on stdout, one summary line per input
//! on stderr.
//!
//! Exit codes: 0 success, 1 other errors, 2 invalid input, 3 the matrix and
//! contraction methods disagree.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use splinedim::Error;

use commands::Done;
use input::LoadOptions;
use report::{RunReport, EXIT_ERROR, EXIT_INVALID};

#[derive(Parser)]
#[command(name = "splinedim", version, about = "Dimensions of degree-2 C1 splines on planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Graph or triangulation JSON; repeat for several files.
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Slopes by edge position, inline (`1,2,3/2,_`, with `a:b` for a
    /// constant term) or a file holding that text or a JSON array.
    #[arg(long)]
    labels: Option<String>,
    /// Drop constant terms from the labels.
    #[arg(long)]
    homogenize: bool,
    /// Rotate a triangulation first: `x0,y0` or `auto`.
    #[arg(long)]
    rotate: Option<String>,
    /// Use random distinct slopes from this seed when no labels are given.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads across input files.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Add wall-clock time to each report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Matrix,
    Contraction,
    Both,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Check the graph or triangulation invariants.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Dual graph of a triangulation with its labels.
    Dualize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        check_translatable: bool,
    },
    /// Spline dimension.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Matrix)]
        method: Method,
        #[arg(long)]
        dump_matrix: bool,
        /// Also report the dimension on the triangulation (dual dimension + 6).
        #[arg(long)]
        classical: bool,
    },
    /// Rank of M^ext.
    Rank {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Whether some maximal minor of M^ext is a nonzero polynomial.
    GenericCheck {
        #[command(flatten)]
        common: Common,
        /// Always compute the witness determinant exactly.
        #[arg(long)]
        symbolic: bool,
    },
    /// Greedy maximal edge-injective function, optionally all total ones.
    EdgeInjective {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        coloring: bool,
    },
    /// Contraction trace.
    Contract {
        #[command(flatten)]
        common: Common,
    },
    /// Polynomials of the special-position locus.
    SpecialLocus {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Dualize { .. } => "dualize",
            Command::Dim { .. } => "dim",
            Command::Rank { .. } => "rank",
            Command::GenericCheck { .. } => "generic-check",
            Command::EdgeInjective { .. } => "edge-injective",
            Command::Contract { .. } => "contract",
            Command::SpecialLocus { .. } => "special-locus",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Validate { common }
            | Command::Dualize { common, .. }
            | Command::Dim { common, .. }
            | Command::Rank { common, .. }
            | Command::GenericCheck { common, .. }
            | Command::EdgeInjective { common, .. }
            | Command::Contract { common }
            | Command::SpecialLocus { common } => common,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidGraph(_)
        | Error::InvalidTriangulation(_)
        | Error::Parse(_)
        | Error::Degenerate(_)
        | Error::HorizontalEdge(..)
        | Error::Disconnected => EXIT_INVALID,
        _ => EXIT_ERROR,
    }
}

fn execute(cmd: &Command, path: &PathBuf) -> Result<(String, Done), Error> {
    let c = cmd.common();
    if let Command::Validate { .. } = cmd {
        let (digest, raw) = input::read(path)?;
        return Ok((digest, commands::validate(&raw)));
    }
    let opts = LoadOptions {
        labels: c.labels.as_deref(),
        homogenize: c.homogenize,
        rotate: c.rotate.as_deref(),
        seed: c.seed,
    };
    let p = input::load(path, &opts)?;
    let mut done = match cmd {
        Command::Validate { .. } => unreachable!(),
        Command::Dualize { check_translatable, .. } => commands::dualize(&p, c.homogenize, *check_translatable)?,
        Command::Dim {
            method,
            dump_matrix,
            classical,
            ..
        } => commands::dim(&p, *method, *dump_matrix, *classical)?,
        Command::Rank { dump_matrix, .. } => commands::rank(&p, *dump_matrix)?,
        Command::GenericCheck { symbolic, .. } => commands::generic(&p, *symbolic)?,
        Command::EdgeInjective { all, coloring, .. } => commands::edge_injective(&p, *all, *coloring)?,
        Command::Contract { .. } => commands::contract(&p)?,
        Command::SpecialLocus { .. } => commands::special_locus(&p)?,
    };
    let mut warnings = p.warnings;
    warnings.append(&mut done.warnings);
    done.warnings = warnings;
    Ok((p.digest, done))
}

fn run_one(cmd: &Command, path: &PathBuf) -> RunReport {
    let start = Instant::now();
    let outcome = execute(cmd, path);
    let timing_ms = cmd.common().timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let input = path.display().to_string();
    match outcome {
        Ok((digest, done)) => RunReport {
            command: cmd.name().into(),
            input,
            input_digest: digest,
            results: done.results,
            warnings: done.warnings,
            error: None,
            timing_ms,
            exit_code: done.code,
            summary: done.summary,
        },
        Err(e) => RunReport {
            command: cmd.name().into(),
            input,
            input_digest: std::fs::read(path).map(|b| report::digest(&b)).unwrap_or_default(),
            results: Value::Null,
            warnings: Vec::new(),
            error: Some(e.to_string()),
            timing_ms,
            exit_code: exit_code(&e),
            summary: format!("error: {e}"),
        },
    }
}

fn run(cmd: &Command) -> Vec<RunReport> {
    let c = cmd.common();
    let jobs = c.jobs.max(1).min(c.inputs.len().max(1));
    if jobs == 1 {
        return c.inputs.iter().map(|p| run_one(cmd, p)).collect();
    }
    let chunk = c.inputs.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = c
            .inputs
            .chunks(chunk)
            .map(|paths| s.spawn(move || paths.iter().map(|p| run_one(cmd, p)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    let reports = run(&cli.command);
    for r in &reports {
        eprintln!("{} {}: {}", r.command, r.input, r.summary);
        for w in &r.warnings {
            eprintln!("  warning: {w}");
        }
    }
    let out = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    };
    println!("{}", out.expect("report serializes"));
    let code = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);
    ExitCode::from(code as u8)
}
