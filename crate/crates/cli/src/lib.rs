//! Command-line front end for the matfield workbench.

pub mod commands;
pub mod specfile;

pub use commands::{Format, Output, Status, WitnessKind};
