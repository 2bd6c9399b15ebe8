//! File formats and the command line for `tropsatz-core`.

pub mod cli;
pub mod formats;
