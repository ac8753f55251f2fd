//! Front end for `demazure-mult-core`: the weight micro-grammar, table output
//! as JSON, CSV or aligned text, and the commands behind the `demazure-mult`
//! binary.

pub mod commands;
mod error;
pub mod format;
pub mod weight_spec;

pub use error::CliError;
