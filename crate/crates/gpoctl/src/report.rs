//! Command reports, rendered as aligned text tables or JSON.
//!
//! Every degree is written in its exact textual form (shortest terminating
//! decimal, else `n/d`), so the JSON form parses back to the same rationals.

use gpoctl_core::{Diagnostics, EvalStats, FuzzyVector, Gpks, PossValue, ValueError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

pub trait Report: Serialize {
    fn table(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
                s.push('\n');
                s
            }
        }
    }
}

pub fn degrees(v: &FuzzyVector) -> Vec<String> {
    v.iter().map(PossValue::to_string).collect()
}

pub fn parse_degrees(texts: &[String]) -> Result<Vec<PossValue>, ValueError> {
    texts.iter().map(|t| t.parse()).collect()
}

fn names(m: &Gpks, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| m.states()[i].clone()).collect()
}

/// Left-aligned columns separated by two spaces.
fn grid(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub always_iterations: Vec<usize>,
    pub until_iterations: Vec<usize>,
    pub compositions: usize,
    pub memo_hits: usize,
}

impl From<&EvalStats> for StatsDoc {
    fn from(s: &EvalStats) -> Self {
        StatsDoc {
            always_iterations: s.always_iterations.clone(),
            until_iterations: s.until_iterations.clone(),
            compositions: s.compositions,
            memo_hits: s.memo_hits,
        }
    }
}

impl std::fmt::Display for StatsDoc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "always iterations {:?}, until iterations {:?}, compositions {}, memo hits {}",
            self.always_iterations, self.until_iterations, self.compositions, self.memo_hits
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRow {
    pub formula: String,
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub states: Vec<String>,
    pub rows: Vec<EvalRow>,
}

impl Report for EvalReport {
    fn table(&self) -> String {
        let mut header = vec!["formula".to_string()];
        header.extend(self.states.iter().cloned());
        let rows = self
            .rows
            .iter()
            .map(|r| std::iter::once(r.formula.clone()).chain(r.values.iter().cloned()).collect())
            .collect();
        let mut out = grid(header, rows);
        for r in &self.rows {
            if let Some(s) = &r.stats {
                out.push_str(&format!("stats for {}: {s}\n", r.formula));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    All,
    Some,
    None,
}

impl Verdict {
    pub fn of(hits: usize, total: usize) -> Self {
        match hits {
            0 => Verdict::None,
            h if h == total => Verdict::All,
            _ => Verdict::Some,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub formula: String,
    pub values: Vec<String>,
    pub satisfying: Vec<String>,
    pub verdict: Verdict,
    /// Every state with positive initial possibility satisfies the query.
    pub initial_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub states: Vec<String>,
    pub interval: String,
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn new(m: &Gpks, interval: String) -> Self {
        CheckReport {
            states: m.states().to_vec(),
            interval,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, m: &Gpks, formula: String, v: &FuzzyVector, hits: &[usize]) {
        let initial_ok = (0..m.num_states())
            .filter(|&s| !m.initial()[s].is_zero())
            .all(|s| hits.contains(&s));
        self.rows.push(CheckRow {
            formula,
            values: degrees(v),
            satisfying: names(m, hits),
            verdict: Verdict::of(hits.len(), m.num_states()),
            initial_ok,
        });
    }

    /// 0 when every initial state satisfies every query, else 3.
    pub fn exit_code(&self) -> u8 {
        if self.rows.iter().all(|r| r.initial_ok) {
            0
        } else {
            3
        }
    }
}

impl Report for CheckReport {
    fn table(&self) -> String {
        let header = ["formula", "satisfying", "verdict", "initial"].map(String::from).to_vec();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    format!("{} in {}", r.formula, self.interval),
                    format!("{{{}}}", r.satisfying.join(", ")),
                    format!("{:?}", r.verdict).to_lowercase(),
                    if r.initial_ok { "ok" } else { "violated" }.to_string(),
                ]
            })
            .collect();
        grid(header, rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub states: Vec<String>,
    pub transitions_normal: bool,
    pub non_normal_rows: Vec<String>,
    pub initial_normal: bool,
    pub labels_crisp: bool,
    pub deadlocks: Vec<String>,
    pub possibilistic_kripke_structure: bool,
    pub reach_sup: Vec<String>,
}

impl ValidateReport {
    pub fn new(m: &Gpks, d: &Diagnostics) -> Self {
        ValidateReport {
            states: m.states().to_vec(),
            transitions_normal: d.transitions_normal,
            non_normal_rows: names(m, &d.non_normal_rows),
            initial_normal: d.initial_normal,
            labels_crisp: d.labels_crisp,
            deadlocks: names(m, &d.deadlocks),
            possibilistic_kripke_structure: d.is_pks(),
            reach_sup: degrees(m.reach_sup()),
        }
    }
}

impl Report for ValidateReport {
    fn table(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
        let list = |xs: &[String]| if xs.is_empty() { "-".to_string() } else { xs.join(", ") };
        let rows = vec![
            vec!["states".into(), self.states.len().to_string()],
            vec!["transitions normal".into(), yes(self.transitions_normal)],
            vec!["rows without a 1".into(), list(&self.non_normal_rows)],
            vec!["initial normal".into(), yes(self.initial_normal)],
            vec!["labels crisp".into(), yes(self.labels_crisp)],
            vec!["no successors".into(), list(&self.deadlocks)],
            vec!["PKS".into(), yes(self.possibilistic_kripke_structure)],
            vec!["reach sup".into(), format!("({})", self.reach_sup.join(", "))],
        ];
        grid(vec!["property".into(), "value".into()], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub max_prefix: usize,
    pub max_cycle: usize,
    pub max_until_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRow {
    pub formula: String,
    pub checker: Vec<String>,
    pub oracle: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub states: Vec<String>,
    pub bounds: BoundsDoc,
    pub rows: Vec<DiffRow>,
}

impl DiffReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// 0 when checker and oracle agree on every formula, else 5.
    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            5
        }
    }
}

impl Report for DiffReport {
    fn table(&self) -> String {
        let header = ["formula", "checker", "oracle", "result"].map(String::from).to_vec();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.formula.clone(),
                    format!("({})", r.checker.join(", ")),
                    format!("({})", r.oracle.join(", ")),
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        grid(header, rows)
    }
}
