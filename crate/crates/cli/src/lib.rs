//! Library side of the `sl2casson` command-line tool: configuration, the
//! report builders behind each subcommand, property suites and output
//! formatting.

pub mod commands;
pub mod config;
pub mod output;
pub mod random;
pub mod suites;

pub use commands::{brieskorn_report, seifert_report, torsion_report, GradingArg};
pub use config::{Backend, Format, RunConfig, DEFAULT_EPS, EPS_ENV};
pub use output::{canonical, round_sig, to_json_string, to_table};
pub use suites::{brieskorn_catalog, run_suite, seifert_catalog, Check, SuiteReport, SUITES};
