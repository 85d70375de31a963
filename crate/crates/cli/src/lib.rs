//! Command line front end for `rcm-core`.
//!
//! The binary exposes five subcommands (`order`, `table`, `enumerate`,
//! `canonical`, `verify`). Their logic lives here so it can be tested
//! without spawning processes.

pub mod args;
pub mod commands;
pub mod error;
pub mod parallel;
pub mod report;
pub mod verify;

pub use error::CliError;
