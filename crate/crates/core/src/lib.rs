//! Model checking for generalized possibilistic CTL.
//!
//! Systems are finite Kripke structures whose transitions, initial
//! distribution and labels are possibility degrees in `[0, 1]`
//! ([`model::Gpks`]). A state formula evaluates to one exact degree per
//! state ([`checker::eval_state`]); thresholding that vector against an
//! interval gives the qualitative answer ([`checker::check_threshold`]).
//! [`oracle`] recomputes everything by brute-force lasso enumeration.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod checker;
pub mod logic;
pub mod model;
pub mod oracle;
pub mod value;

pub use algebra::{AlgebraError, FuzzyMatrix, FuzzyVector};
pub use checker::{check_threshold, eval_state, CheckError, EvalResult, EvalStats};
pub use logic::{expand_derived, formula_size, parse_formula, Interval, IntervalError, ParseError, PathFormula, StateFormula};
pub use model::{Diagnostics, FinitePath, Gpks, Lasso, ModelError};
pub use oracle::{oracle_eval_state, EnumerationBounds};
pub use value::{PossValue, ValueError};
