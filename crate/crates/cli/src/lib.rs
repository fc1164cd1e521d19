//! Command-line front end for `nilhecke-core`: JSON and text formats for
//! the algebra objects, and the registry of verification suites behind
//! `nilhecke nh verify`.

pub mod app;
pub mod display;
pub mod error;
pub mod format;
pub mod suites;
pub mod text;

pub use app::run;
pub use error::{CliError, CliResult};
