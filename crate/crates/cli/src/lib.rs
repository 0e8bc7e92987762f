//! Command-line front end: the module document format, predicates,
//! classification and the verification drivers.

pub mod commands;
pub mod document;

pub use commands::{run, Cli, Output};
pub use document::{DocError, ModuleDocument};
