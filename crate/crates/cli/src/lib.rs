//! Command-line front end for `wythoff-core`: sequence streaming, array and
//! table rendering, OEIS b-file export and the verification suites.
//!
//! Every subcommand is an ordinary function here so it can be tested without
//! spawning the binary.

pub mod bfile;
pub mod commands;
mod error;
pub mod render;
pub mod sequence;
pub mod verify;

pub use error::CliError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
