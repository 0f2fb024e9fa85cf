//! The `vat` command line: argument parsing, configuration, the result
//! cache, and the `verify` suites.

pub mod cache;
mod commands;
pub mod config;
pub mod render;
pub mod suites;

pub use commands::{run, Cli};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}
