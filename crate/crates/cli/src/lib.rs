//! Library side of the `lmc` command: single checks, corollary sweeps and
//! identity verification, kept separate from argument parsing so the logic
//! is testable without spawning processes.

pub mod atlas;
pub mod check;
pub mod ranges;
pub mod verify;

use std::path::PathBuf;

use lmc_core::criteria::CriterionReport;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lmc_core::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exit status for a report: 0 when the criterion holds, 2 when it is silent.
pub fn exit_code(report: &CriterionReport) -> i32 {
    if report.holds() {
        0
    } else {
        2
    }
}

/// Thread count for parallel work: the requested count (or all cores),
/// capped by `LMC_THREADS` when that is set to a positive integer.
pub fn thread_budget(requested: Option<usize>) -> usize {
    let cap = std::env::var("LMC_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    let wanted = requested
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    cap.map_or(wanted, |c| wanted.min(c))
}

pub(crate) fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}
