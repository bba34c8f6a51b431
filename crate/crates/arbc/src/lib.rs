//! Files, parallel experiment drivers and the command-line front end for
//! `arbc-core`.
//!
//! - [`format`]: hex vectors, matrix files, key envelopes and ciphertext files.
//! - [`runner`]: thread-pool drivers for the seeded trials.
//! - [`report`]: text tables and tab-separated records.
//! - [`cli`]: the `arbc` subcommands.

pub mod cli;
pub mod format;
pub mod report;
pub mod runner;

pub use arbc_core as core;
