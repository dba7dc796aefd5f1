//! Formula syntax: AST, parser, derived-operator expansion and size.

mod ast;
mod expand;
mod parser;

pub use ast::{Interval, IntervalError, PathFormula, StateFormula};
pub use expand::{expand_derived, formula_size};
pub use parser::{parse_formula, ParseError};
