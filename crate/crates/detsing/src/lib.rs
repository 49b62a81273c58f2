//! Command-line front end: tables, presentations, verification suites and
//! their exact JSON encodings, built on `detsing-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod matfile;
pub mod verify;

pub use cli::run;
pub use error::{CliError, Result};
