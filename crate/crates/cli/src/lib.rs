//! Library side of the `kpeterson` command: computations, suites and reports.

pub mod compute;
pub mod error;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
pub use report::{Case, Status, SuiteReport};
pub use suites::{run_suite, SuiteOptions, SUITES};
