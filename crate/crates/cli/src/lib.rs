//! Command-line front end: argument handling, report assembly and the
//! `verify` suites.

pub mod check;
pub mod suites;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{Map, Value};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "KNOTQ_THREADS";

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CliError {
    #[error("bad range `{0}`, expected `a..b` with a <= b")]
    BadRange(String),
    #[error("bad thread count `{0}` in {THREADS_ENV}")]
    BadThreads(String),
}

/// Parses `a..b` (inclusive), or a single integer as `a..a`.
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::BadRange(s.to_string());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let a = s.trim().parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// `re+imi` in scientific notation with 15 significant digits.
pub fn format_complex(z: Complex64) -> String {
    format!("{:.14e}{:+.14e}i", z.re, z.im)
}

/// The report object with the parsed configuration added under `config`.
pub fn with_config(config: &impl Serialize, report: &impl Serialize) -> Value {
    let mut out = Map::new();
    out.insert("config".into(), serde_json::to_value(config).expect("config serializes"));
    match serde_json::to_value(report).expect("report serializes") {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("report".into(), other);
        }
    }
    Value::Object(out)
}

/// Reads the thread count from the environment; `None` leaves rayon's default.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::BadThreads(v)),
        },
        Err(_) => Ok(None),
    }
}
