//! JSON model files.
//!
//! ```json
//! {
//!   "states": ["s0", "s1"],
//!   "init": {"s0": "1"},
//!   "transitions": [{"from": "s0", "to": "s1", "p": "0.8"}],
//!   "ap": ["a"],
//!   "labels": {"s1": {"a": "0.5"}}
//! }
//! ```
//!
//! Degrees are decimal strings (or `n/d`) read as exact rationals. Anything
//! left out is 0.

use std::collections::BTreeMap;
use std::path::Path;

use gpoctl_core::{Gpks, ModelError, PossValue, ValueError};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{context}: {source}")]
    Value {
        context: String,
        #[source]
        source: ValueError,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub states: Vec<String>,
    #[serde(default)]
    pub init: BTreeMap<String, String>,
    #[serde(default)]
    pub transitions: Vec<TransitionDoc>,
    #[serde(default)]
    pub ap: Vec<String>,
    #[serde(default)]
    pub labels: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionDoc {
    pub from: String,
    pub to: String,
    pub p: String,
}

fn degree(text: &str, context: impl FnOnce() -> String) -> Result<PossValue, LoadError> {
    text.trim().parse().map_err(|source| LoadError::Value {
        context: context(),
        source,
    })
}

impl ModelDoc {
    pub fn to_model(&self) -> Result<Gpks, LoadError> {
        let mut b = Gpks::builder().states(self.states.iter().cloned());
        for a in &self.ap {
            b = b.proposition(a.clone());
        }
        for (s, p) in &self.init {
            b = b.initial(s.clone(), degree(p, || format!("init of {s}"))?);
        }
        for t in &self.transitions {
            let p = degree(&t.p, || format!("transition {} -> {}", t.from, t.to))?;
            b = b.transition(t.from.clone(), t.to.clone(), p);
        }
        for (s, props) in &self.labels {
            for (a, p) in props {
                b = b.label(s.clone(), a.clone(), degree(p, || format!("label {a} of {s}"))?);
            }
        }
        Ok(b.build()?)
    }

    /// The sparse document for `m`: zero entries are left out.
    pub fn from_model(m: &Gpks) -> Self {
        let names = m.states();
        let mut doc = ModelDoc {
            states: names.to_vec(),
            ap: m.propositions().to_vec(),
            ..ModelDoc::default()
        };
        for (i, s) in names.iter().enumerate() {
            let v = m.initial()[i];
            if !v.is_zero() {
                doc.init.insert(s.clone(), v.to_string());
            }
            for (j, t) in names.iter().enumerate() {
                let p = m.transitions().get(i, j);
                if !p.is_zero() {
                    doc.transitions.push(TransitionDoc {
                        from: s.clone(),
                        to: t.clone(),
                        p: p.to_string(),
                    });
                }
            }
            for a in m.propositions() {
                let v = m.label(a).expect("declared proposition")[i];
                if !v.is_zero() {
                    doc.labels.entry(s.clone()).or_default().insert(a.clone(), v.to_string());
                }
            }
        }
        doc
    }
}

pub fn parse_model(text: &str) -> Result<Gpks, LoadError> {
    let doc: ModelDoc = serde_json::from_str(text).map_err(|e| LoadError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_model()
}

pub fn load_model(path: &Path) -> Result<Gpks, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_model(&text)
}

pub fn model_to_json(m: &Gpks) -> String {
    serde_json::to_string_pretty(&ModelDoc::from_model(m)).expect("plain data serializes")
}
