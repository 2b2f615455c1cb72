//! Parsers, subcommands and report formatting for the `wronski` binary.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{dispatch, load_algebra, Cli, CliError, Command, GlobalOpts};
pub use parse::{parse_diffpoly_expr, parse_lie_expr, ParseError};
pub use report::{Format, Report, Verdict};
