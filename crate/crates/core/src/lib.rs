//! Exact finite-group and module computations over prime fields, aimed at
//! the eigenvector property of linear actions.

pub mod algebra;
pub mod constructions;
pub mod eigen;
pub mod error;
pub mod forms;
pub mod gmodules;
pub mod groups;
pub mod verify;

pub use error::{Error, Result};
