//! Command-line front end: eigenvalue tables, eigenfunction samples, flux
//! and crossing-probability curves, truncation studies and verification
//! checks, written as CSV or JSON with a run manifest.
//!
//! Exit codes: 0 success, 2 invalid input, 3 failed oracle check,
//! 4 numerical-integrity failure.

pub mod args;
pub mod commands;
pub mod output;

use steklov_applications::AppError;
use steklov_dtn::DtnError;
use steklov_oracle::OracleError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("numerical integrity failure: {0}")]
    Integrity(String),
    #[error("{failed} of {total} oracle checks failed")]
    OracleFailed { failed: usize, total: usize },
    #[error("output error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::OracleFailed { .. } => 3,
            CliError::Integrity(_) => 4,
        }
    }
}

impl From<DtnError> for CliError {
    fn from(e: DtnError) -> Self {
        if e.is_invalid_input() {
            CliError::Invalid(e.to_string())
        } else {
            CliError::Integrity(e.to_string())
        }
    }
}

impl From<AppError> for CliError {
    fn from(e: AppError) -> Self {
        if e.is_invalid_input() {
            CliError::Invalid(e.to_string())
        } else {
            CliError::Integrity(e.to_string())
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        if e.is_invalid_input() {
            CliError::Invalid(e.to_string())
        } else {
            CliError::Integrity(e.to_string())
        }
    }
}

/// Parse-free entry point: run `cli`, write its output and return the exit code.
pub fn execute(cli: &args::Cli) -> i32 {
    let opts = cli.output.resolved(&cli.command);
    let result = commands::run(&cli.command).and_then(|report| {
        let (name, params) = command_parameters(&cli.command, &opts);
        let manifest = output::Manifest::new(&report, &name, params);
        output::emit(&report, &manifest, &opts)?;
        match report.summary.as_ref().and_then(|s| s.get("all_pass")).and_then(|v| v.as_bool()) {
            Some(false) => {
                let failed = report
                    .table
                    .rows
                    .iter()
                    .filter(|r| r.last() == Some(&output::Cell::Bool(false)))
                    .count();
                Err(CliError::OracleFailed {
                    failed,
                    total: report.table.rows.len(),
                })
            }
            _ => Ok(()),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("steklov: {e}");
            e.exit_code()
        }
    }
}

/// Subcommand name and its full parameter set, defaults included.
fn command_parameters(command: &args::Command, opts: &args::OutputArgs) -> (String, serde_json::Value) {
    let v = serde_json::to_value(command).unwrap_or_default();
    let (name, mut params) = match v {
        serde_json::Value::Object(map) if map.len() == 1 => {
            let (k, v) = map.into_iter().next().expect("one entry");
            (k, v)
        }
        other => ("unknown".to_string(), other),
    };
    if let serde_json::Value::Object(obj) = &mut params {
        obj.insert("output".into(), serde_json::to_value(opts).unwrap_or_default());
    }
    (name, params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let spec = steklov_dtn::ProblemSpec::exterior(steklov_dtn::Shape::Prolate, 2.0, 1.0);
        let bad_geometry = steklov_dtn::solve_spectrum(&spec, 10).unwrap_err();
        assert_eq!(CliError::from(bad_geometry).exit_code(), 2);
        assert_eq!(CliError::from(DtnError::Hermiticity { m: 0, defect: 1.0 }).exit_code(), 4);
        assert_eq!(CliError::OracleFailed { failed: 1, total: 2 }.exit_code(), 3);
        assert_eq!(CliError::Io("disk full".into()).exit_code(), 2);
    }
}
