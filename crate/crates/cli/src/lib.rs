//! Command-line front end for `shapecalc`: shape documents in, run reports
//! out.
//!
//! Exit codes: 0 when every instance passes, 1 when any verification fails,
//! 2 for malformed input, invalid shapes and unmet preconditions.

pub mod error;
pub mod report;
pub mod run;
pub mod shape;

pub use error::{CliError, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
pub use report::{Aggregate, Entry, RunReport};
pub use run::{execute, render, Cli, Command, Format};
pub use shape::{parse_shape, Labels, ShapeDocument};
