//! The subcommands, independent of argument parsing and output.

use gpoctl_core::checker::states_in;
use gpoctl_core::{
    eval_state, oracle_eval_state, parse_formula, CheckError, EnumerationBounds, FuzzyVector, Gpks, Interval,
    IntervalError, ParseError, StateFormula,
};

use crate::model_file::LoadError;
use crate::report::{degrees, BoundsDoc, CheckReport, DiffReport, DiffRow, EvalReport, EvalRow, StatsDoc, ValidateReport};

/// Largest model `oracle-diff` accepts.
pub const ORACLE_STATE_LIMIT: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("formula {text:?}: {source}")]
    Formula {
        text: String,
        #[source]
        source: ParseError,
    },
    #[error("interval {text:?}: {source}")]
    Interval {
        text: String,
        #[source]
        source: IntervalError,
    },
    #[error("no formula given; pass --formula")]
    NoFormulas,
    #[error("check needs an interval; pass --in")]
    MissingInterval,
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(
        "model has {states} states but the brute-force oracle is limited to {limit}; \
         its cost grows exponentially, so diff a reduced model instead"
    )]
    OracleGuard { states: usize, limit: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 2,
            CliError::OracleGuard { .. } => 4,
            _ => 1,
        }
    }
}

pub fn parse_formulas(texts: &[String]) -> Result<Vec<StateFormula>, CliError> {
    if texts.is_empty() {
        return Err(CliError::NoFormulas);
    }
    texts
        .iter()
        .map(|t| {
            parse_formula(t).map_err(|source| CliError::Formula {
                text: t.clone(),
                source,
            })
        })
        .collect()
}

pub fn parse_interval(text: &str) -> Result<Interval, CliError> {
    text.parse().map_err(|source| CliError::Interval {
        text: text.to_string(),
        source,
    })
}

pub fn cmd_eval(m: &Gpks, formulas: &[String], show_stats: bool) -> Result<EvalReport, CliError> {
    let parsed = parse_formulas(formulas)?;
    let mut rows = Vec::with_capacity(parsed.len());
    for f in &parsed {
        let r = eval_state(m, f)?;
        rows.push(EvalRow {
            formula: f.to_string(),
            values: degrees(&r.vector),
            stats: show_stats.then(|| StatsDoc::from(&r.stats)),
        });
    }
    Ok(EvalReport {
        states: m.states().to_vec(),
        rows,
    })
}

pub fn cmd_check(m: &Gpks, formulas: &[String], interval: Option<&str>) -> Result<CheckReport, CliError> {
    let interval = parse_interval(interval.ok_or(CliError::MissingInterval)?)?;
    let parsed = parse_formulas(formulas)?;
    let mut report = CheckReport::new(m, interval.to_string());
    for f in &parsed {
        let v = eval_state(m, f)?.vector;
        report.push(m, f.to_string(), &v, &states_in(&v, &interval));
    }
    Ok(report)
}

pub fn cmd_validate(m: &Gpks) -> ValidateReport {
    ValidateReport::new(m, &m.validate())
}

/// Default oracle bounds for `m`, with either enumeration length replaced
/// when given.
pub fn oracle_bounds(m: &Gpks, max_prefix: Option<usize>, max_cycle: Option<usize>) -> EnumerationBounds {
    let d = EnumerationBounds::for_model(m);
    EnumerationBounds::new(
        max_prefix.unwrap_or(d.max_prefix),
        max_cycle.unwrap_or(d.max_cycle),
        d.max_until_depth,
    )
}

pub fn cmd_oracle_diff(m: &Gpks, formulas: &[String], bounds: &EnumerationBounds) -> Result<DiffReport, CliError> {
    cmd_oracle_diff_with(m, formulas, bounds, |m, f| Ok(eval_state(m, f)?.vector))
}

/// `oracle-diff` against an arbitrary evaluator in place of the checker.
pub fn cmd_oracle_diff_with(
    m: &Gpks,
    formulas: &[String],
    bounds: &EnumerationBounds,
    checker: impl Fn(&Gpks, &StateFormula) -> Result<FuzzyVector, CheckError>,
) -> Result<DiffReport, CliError> {
    if m.num_states() > ORACLE_STATE_LIMIT {
        return Err(CliError::OracleGuard {
            states: m.num_states(),
            limit: ORACLE_STATE_LIMIT,
        });
    }
    let parsed = parse_formulas(formulas)?;
    let mut rows = Vec::with_capacity(parsed.len());
    for f in &parsed {
        let c = checker(m, f)?;
        let o = oracle_eval_state(m, f, bounds)?;
        rows.push(DiffRow {
            formula: f.to_string(),
            pass: c == o,
            checker: degrees(&c),
            oracle: degrees(&o),
        });
    }
    Ok(DiffReport {
        states: m.states().to_vec(),
        bounds: BoundsDoc {
            max_prefix: bounds.max_prefix,
            max_cycle: bounds.max_cycle,
            max_until_depth: bounds.max_until_depth,
        },
        rows,
    })
}
