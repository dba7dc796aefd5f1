//! File formats, reports and subcommands for the `gpoctl` command-line
//! model checker. The checking itself lives in [`gpoctl_core`].

pub mod commands;
pub mod model_file;
pub mod report;

pub use commands::CliError;
pub use model_file::{load_model, parse_model, LoadError};
pub use report::{Format, Report};
