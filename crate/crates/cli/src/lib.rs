//! Command implementations behind the `cubicode` binary.
//!
//! Every command produces a [`CodeSummary`] and an [`ExitStatus`]; the binary
//! only parses arguments, renders the summary and exits.

mod commands;
mod summary;

pub use commands::{
    dual_distance, genmat, griesmer, info, minimal, run, verify, weights, Command, Format,
    MethodArg, Outcome, RunConfig,
};
pub use summary::{CodeSummary, DistributionEntry, GriesmerSummary};

/// Stable process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Mismatch = 1,
    Usage = 2,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Code(#[from] cubicode::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}
