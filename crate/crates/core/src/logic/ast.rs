use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::value::PossValue;

/// A state formula. `Or`, `Implies`, `Iff` and `Ne` are sugar removed by
/// [`expand_derived`](super::expand_derived).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateFormula {
    True,
    Atom(String),
    And(Box<StateFormula>, Box<StateFormula>),
    Not(Box<StateFormula>),
    Po(Box<PathFormula>),
    Or(Box<StateFormula>, Box<StateFormula>),
    Implies(Box<StateFormula>, Box<StateFormula>),
    Iff(Box<StateFormula>, Box<StateFormula>),
    Ne(Box<PathFormula>),
}

/// A path formula; only ever appears directly under `Po` or `Ne`.
/// `Eventually` is sugar for `Until(True, _)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathFormula {
    Next(Box<StateFormula>),
    Until(Box<StateFormula>, Box<StateFormula>),
    BoundedUntil(Box<StateFormula>, Box<StateFormula>, u32),
    Always(Box<StateFormula>),
    Eventually(Box<StateFormula>),
    BoundedAlways(Box<StateFormula>, u32),
}

impl StateFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        StateFormula::Atom(name.into())
    }

    pub fn and(self, other: Self) -> Self {
        StateFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        StateFormula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Self) -> Self {
        StateFormula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Self) -> Self {
        StateFormula::Iff(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        StateFormula::Not(Box::new(self))
    }

    pub fn po(path: PathFormula) -> Self {
        StateFormula::Po(Box::new(path))
    }

    pub fn ne(path: PathFormula) -> Self {
        StateFormula::Ne(Box::new(path))
    }

    /// True when no sugar remains anywhere in the tree.
    pub fn is_core(&self) -> bool {
        match self {
            StateFormula::True | StateFormula::Atom(_) => true,
            StateFormula::And(a, b) => a.is_core() && b.is_core(),
            StateFormula::Not(a) => a.is_core(),
            StateFormula::Po(p) => p.is_core(),
            StateFormula::Or(..)
            | StateFormula::Implies(..)
            | StateFormula::Iff(..)
            | StateFormula::Ne(_) => false,
        }
    }

    /// Nesting depth of `Po`/`Ne` operators.
    pub fn temporal_depth(&self) -> usize {
        match self {
            StateFormula::True | StateFormula::Atom(_) => 0,
            StateFormula::Not(a) => a.temporal_depth(),
            StateFormula::And(a, b)
            | StateFormula::Or(a, b)
            | StateFormula::Implies(a, b)
            | StateFormula::Iff(a, b) => a.temporal_depth().max(b.temporal_depth()),
            StateFormula::Po(p) | StateFormula::Ne(p) => 1 + p.operand_depth(),
        }
    }
}

impl PathFormula {
    pub fn next(f: StateFormula) -> Self {
        PathFormula::Next(Box::new(f))
    }

    pub fn until(f: StateFormula, g: StateFormula) -> Self {
        PathFormula::Until(Box::new(f), Box::new(g))
    }

    pub fn bounded_until(f: StateFormula, g: StateFormula, n: u32) -> Self {
        PathFormula::BoundedUntil(Box::new(f), Box::new(g), n)
    }

    pub fn always(f: StateFormula) -> Self {
        PathFormula::Always(Box::new(f))
    }

    pub fn eventually(f: StateFormula) -> Self {
        PathFormula::Eventually(Box::new(f))
    }

    pub fn bounded_always(f: StateFormula, n: u32) -> Self {
        PathFormula::BoundedAlways(Box::new(f), n)
    }

    /// `BoundedAlways` counts as core: it has no rewriting into the other
    /// operators and is evaluated directly.
    pub fn is_core(&self) -> bool {
        match self {
            PathFormula::Next(a) | PathFormula::Always(a) | PathFormula::BoundedAlways(a, _) => a.is_core(),
            PathFormula::Until(a, b) | PathFormula::BoundedUntil(a, b, _) => a.is_core() && b.is_core(),
            PathFormula::Eventually(_) => false,
        }
    }

    fn operand_depth(&self) -> usize {
        match self {
            PathFormula::Next(a)
            | PathFormula::Always(a)
            | PathFormula::Eventually(a)
            | PathFormula::BoundedAlways(a, _) => a.temporal_depth(),
            PathFormula::Until(a, b) | PathFormula::BoundedUntil(a, b, _) => {
                a.temporal_depth().max(b.temporal_depth())
            }
        }
    }
}

// Printing parenthesizes every binary connective so the output re-parses
// to the identical tree regardless of precedence.
impl fmt::Display for StateFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateFormula::True => f.write_str("true"),
            StateFormula::Atom(a) => f.write_str(a),
            StateFormula::Not(a) => write!(f, "!{a}"),
            StateFormula::And(a, b) => write!(f, "({a} & {b})"),
            StateFormula::Or(a, b) => write!(f, "({a} | {b})"),
            StateFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
            StateFormula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            StateFormula::Po(p) => write!(f, "Po[{p}]"),
            StateFormula::Ne(p) => write!(f, "Ne[{p}]"),
        }
    }
}

impl fmt::Display for PathFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathFormula::Next(a) => write!(f, "X {a}"),
            PathFormula::Until(a, b) => write!(f, "{a} U {b}"),
            PathFormula::BoundedUntil(a, b, n) => write!(f, "{a} U<={n} {b}"),
            PathFormula::Always(a) => write!(f, "G {a}"),
            PathFormula::Eventually(a) => write!(f, "F {a}"),
            PathFormula::BoundedAlways(a, n) => write!(f, "G<={n} {a}"),
        }
    }
}

/// A subinterval of `[0, 1]` with rational bounds and open or closed ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lower: PossValue,
    upper: PossValue,
    lower_closed: bool,
    upper_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("empty interval")]
    Empty,
    #[error("malformed interval {0:?}: expected [u,v], (u,v], [u,v) or (u,v)")]
    Malformed(String),
    #[error("bad interval bound: {0}")]
    Bound(#[from] crate::value::ValueError),
}

impl Interval {
    pub fn new(
        lower: PossValue,
        upper: PossValue,
        lower_closed: bool,
        upper_closed: bool,
    ) -> Result<Self, IntervalError> {
        if lower > upper || (lower == upper && !(lower_closed && upper_closed)) {
            return Err(IntervalError::Empty);
        }
        Ok(Interval {
            lower,
            upper,
            lower_closed,
            upper_closed,
        })
    }

    pub fn closed(lower: PossValue, upper: PossValue) -> Result<Self, IntervalError> {
        Self::new(lower, upper, true, true)
    }

    /// `[0, 1]`
    pub fn unit() -> Self {
        Interval {
            lower: PossValue::ZERO,
            upper: PossValue::ONE,
            lower_closed: true,
            upper_closed: true,
        }
    }

    /// `(0, 1]`
    pub fn positive() -> Self {
        Interval {
            lower: PossValue::ZERO,
            upper: PossValue::ONE,
            lower_closed: false,
            upper_closed: true,
        }
    }

    /// `[1, 1]`
    pub fn certain() -> Self {
        Interval {
            lower: PossValue::ONE,
            upper: PossValue::ONE,
            lower_closed: true,
            upper_closed: true,
        }
    }

    pub fn lower(&self) -> PossValue {
        self.lower
    }

    pub fn upper(&self) -> PossValue {
        self.upper
    }

    pub fn lower_closed(&self) -> bool {
        self.lower_closed
    }

    pub fn upper_closed(&self) -> bool {
        self.upper_closed
    }

    pub fn contains(&self, v: PossValue) -> bool {
        let above = if self.lower_closed { v >= self.lower } else { v > self.lower };
        let below = if self.upper_closed { v <= self.upper } else { v < self.upper };
        above && below
    }

    /// The image of the interval under `x ↦ 1 - x`, so that
    /// `1 - x ∈ J` iff `x ∈ J.reflect()`.
    pub fn reflect(&self) -> Self {
        Interval {
            lower: self.upper.complement(),
            upper: self.lower.complement(),
            lower_closed: self.upper_closed,
            upper_closed: self.lower_closed,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lower_closed { '[' } else { '(' };
        let close = if self.upper_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lower, self.upper)
    }
}

impl core::str::FromStr for Interval {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let malformed = || IntervalError::Malformed(t.into());
        let lower_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(malformed()),
        };
        let upper_closed = match t.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(malformed()),
        };
        if t.len() < 2 {
            return Err(malformed());
        }
        let (lo, hi) = t[1..t.len() - 1].split_once(',').ok_or_else(malformed)?;
        Interval::new(lo.parse()?, hi.parse()?, lower_closed, upper_closed)
    }
}
