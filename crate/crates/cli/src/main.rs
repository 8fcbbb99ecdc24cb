use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli::check::SuiteReport;
use cli::suites::{run_suite, select, suite_names, SuiteOptions};
use cli::{format_complex, parse_range, threads_from_env, with_config};
use jones::{colored_jones, colored_jones_at_level, KnotSpec};
use knotstate::{evaluate_grid, knot_state, write_csv, write_pgm};
use num_complex::Complex64;
use qtorus::{relation_from_id, verify_recurrence};
use serde::Serialize;
use sha2::{Digest, Sha256};
use theta::QuantParams;
use tqft::{lens_compare, mmr_check, strategy};

#[derive(Parser, Debug)]
#[command(name = "knotq", version, about = "Colored Jones sequences, knot states on the torus and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn knot_name(s: &str) -> Result<String, String> {
    s.parse::<KnotSpec>().map(|_| s.to_string()).map_err(|e| e.to_string())
}

fn range_arg(s: &str) -> Result<String, String> {
    parse_range(s).map(|_| s.to_string()).map_err(|e| e.to_string())
}

fn tau_arg(s: &str) -> Result<String, String> {
    parse_tau(s).map(|_| s.to_string())
}

fn parse_tau(s: &str) -> Result<Complex64, String> {
    let z: Complex64 = s.parse().map_err(|_| format!("cannot parse `{s}` as a complex number"))?;
    if z.im > 0.0 {
        Ok(z)
    } else {
        Err(format!("tau = {s} must have positive imaginary part"))
    }
}

fn suite_arg(s: &str) -> Result<String, String> {
    match select(s) {
        Some(_) => Ok(s.to_string()),
        None => Err(format!("expected one of {}, all", suite_names().join(", "))),
    }
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Colored Jones polynomial, exactly or at a root of unity.
    Jones {
        /// unknot, fig8, trefoil or torus:a,b
        #[arg(long, value_parser = knot_name)]
        knot: String,
        /// A color `l` or an inclusive range `a..b`.
        #[arg(long, value_parser = range_arg)]
        color: String,
        /// Evaluate at t = -exp(i pi / 2k).
        #[arg(long)]
        at_level: Option<u32>,
    },
    /// Exact check of a q-difference relation; prints a JSON report.
    RecurCheck {
        #[arg(long)]
        relation: String,
        /// Inclusive range `a..b`; defaults to the relation's own range.
        #[arg(long, value_parser = range_arg)]
        range: Option<String>,
    },
    /// Lens space invariant against its large-k expansion.
    Lens {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        order: u8,
        #[arg(long, default_value = "negative-cf")]
        strategy: String,
    },
    /// Melvin-Morton-Rozansky comparison at level k.
    Mmr {
        #[arg(long, value_parser = knot_name)]
        knot: String,
        #[arg(long, default_value_t = 400)]
        k: u32,
        #[arg(long, default_value_t = 0.15)]
        delta: f64,
    },
    /// Evaluates a knot state on an N x N grid and writes CSV and/or PGM.
    Grid {
        #[arg(long, value_parser = knot_name)]
        knot: String,
        #[arg(long, default_value_t = 200)]
        k: u32,
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value = "i", value_parser = tau_arg)]
        tau: String,
        #[arg(long)]
        pgm: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Runs verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all", value_parser = suite_arg)]
        suite: String,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        k: Option<u32>,
        /// Include wall-clock checks.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug)]
enum Failure {
    /// Ran to completion with failing checks; the report is already printed.
    Checks,
    Error(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.to_string())
    }
}

fn print_json(v: &serde_json::Value) {
    let text = serde_json::to_string_pretty(v).expect("json serializes");
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cmd: &Command) -> Result<(), Failure> {
    match cmd {
        Command::Jones { knot, color, at_level } => {
            let knot: KnotSpec = knot.parse()?;
            let (lo, hi) = parse_range(color)?;
            if lo < 1 {
                return Err(Failure::Error(format!("colors start at 1, got {lo}")));
            }
            let value = |l: i64| -> Result<String, Failure> {
                Ok(match at_level {
                    Some(k) => format_complex(colored_jones_at_level(knot, l, *k)),
                    None => colored_jones(knot, l)?.to_string(),
                })
            };
            if lo == hi {
                println!("{}", value(lo)?);
            } else {
                let mut out = std::io::stdout().lock();
                writeln!(out, "color,value")?;
                for l in lo..=hi {
                    writeln!(out, "{l},{}", value(l)?)?;
                }
            }
            Ok(())
        }
        Command::RecurCheck { relation, range } => {
            let rel = relation_from_id(relation)?;
            let (lo, hi) = match range {
                Some(r) => parse_range(r)?,
                None => rel.default_range(),
            };
            let report = verify_recurrence(rel.as_ref(), lo, hi);
            print_json(&with_config(cmd, &report));
            if report.all_zero {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Lens { p, q, k, order, strategy: name } => {
            let report = lens_compare(*p, *q, *k, *order, strategy(name)?)?;
            print_json(&with_config(cmd, &report));
            Ok(())
        }
        Command::Mmr { knot, k, delta } => {
            let report = mmr_check(knot.parse()?, *k, *delta)?;
            print_json(&with_config(cmd, &report));
            Ok(())
        }
        Command::Grid { knot, k, n, tau, pgm, csv } => {
            let knot: KnotSpec = knot.parse()?;
            let params = QuantParams::new(*k, parse_tau(tau)?)?;
            let grid = evaluate_grid(&knot_state(knot, *k)?, &params, *n)?;
            #[derive(Serialize)]
            struct Written {
                path: String,
                sha256: String,
            }
            let mut files = Vec::new();
            let mut emit =
                |path: &PathBuf, write: &dyn Fn(&mut Vec<u8>) -> std::io::Result<()>| -> Result<(), Failure> {
                    let mut buf = Vec::new();
                    write(&mut buf)?;
                    let mut f = BufWriter::new(File::create(path)?);
                    f.write_all(&buf)?;
                    f.flush()?;
                    let digest: String = Sha256::digest(&buf).iter().map(|b| format!("{b:02x}")).collect();
                    files.push(Written { path: path.display().to_string(), sha256: digest });
                    Ok(())
                };
            if let Some(path) = csv {
                emit(path, &|b| write_csv(&grid, b))?;
            }
            if let Some(path) = pgm {
                emit(path, &|b| write_pgm(&grid, b))?;
            }
            #[derive(Serialize)]
            struct GridSummary {
                cells: usize,
                max_norm: f64,
                quadrature_norm_sq: f64,
                files: Vec<Written>,
            }
            let summary = GridSummary {
                cells: grid.norms.len(),
                max_norm: grid.max_norm(),
                quadrature_norm_sq: grid.quadrature_norm_sq(),
                files,
            };
            print_json(&with_config(cmd, &summary));
            Ok(())
        }
        Command::Verify { suite, fast, k, timings } => {
            let opts = SuiteOptions { fast: *fast, k: *k, timings: *timings };
            let suites = select(suite).expect("validated by the parser");
            let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_suite(s, &opts)).collect();
            #[derive(Serialize)]
            struct Verify {
                pass: bool,
                suites: Vec<SuiteReport>,
            }
            let pass = reports.iter().all(|r| r.pass);
            print_json(&with_config(cmd, &Verify { pass, suites: reports }));
            if pass {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
