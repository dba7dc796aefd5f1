use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gpoctl::commands::{self, CliError};
use gpoctl::{load_model, Format, Report};

/// Model checker for possibilistic CTL over fuzzy Kripke structures.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree of every formula in every state.
    Eval(Query),
    /// List the states whose degree lies in an interval.
    Check(Query),
    /// Report normality, crispness and dead ends of a model.
    Validate(Common),
    /// Compare the checker with brute-force path enumeration.
    OracleDiff(Query),
}

#[derive(Args)]
struct Common {
    /// Model file (JSON).
    #[arg(long)]
    model: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct Query {
    #[command(flatten)]
    common: Common,
    /// State formula; may be repeated.
    #[arg(long = "formula", short = 'f')]
    formulas: Vec<String>,
    /// Threshold interval such as `[0.5,1]` or `(0,1]`.
    #[arg(long = "in")]
    interval: Option<String>,
    /// Include iteration and composition counts.
    #[arg(long)]
    stats: bool,
    #[arg(long)]
    oracle_max_prefix: Option<usize>,
    #[arg(long)]
    oracle_max_cycle: Option<usize>,
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    Ok(match cli.command {
        Command::Eval(q) => {
            let m = load_model(&q.common.model)?;
            let r = commands::cmd_eval(&m, &q.formulas, q.stats)?;
            (r.render(q.common.format), 0)
        }
        Command::Check(q) => {
            let m = load_model(&q.common.model)?;
            let r = commands::cmd_check(&m, &q.formulas, q.interval.as_deref())?;
            (r.render(q.common.format), r.exit_code())
        }
        Command::Validate(c) => {
            let m = load_model(&c.model)?;
            (commands::cmd_validate(&m).render(c.format), 0)
        }
        Command::OracleDiff(q) => {
            let m = load_model(&q.common.model)?;
            let bounds = commands::oracle_bounds(&m, q.oracle_max_prefix, q.oracle_max_cycle);
            let r = commands::cmd_oracle_diff(&m, &q.formulas, &bounds)?;
            (r.render(q.common.format), r.exit_code())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
