//! Generalized possibilistic Kripke structures and path measures.
//!
//! A [`Gpks`] carries a fuzzy transition matrix, an initial distribution and
//! a fuzzy labeling. None of them has to be normal; a structure whose rows
//! and initial distribution reach 1 and whose labels are crisp is the
//! ordinary possibilistic case, which [`Gpks::validate`] reports.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraError, FuzzyMatrix, FuzzyVector};
use crate::value::PossValue;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("model has no states")]
    NoStates,
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("duplicate proposition {0:?}")]
    DuplicateProposition(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown proposition {0:?}")]
    UnknownProposition(String),
    #[error("duplicate transition {from:?} -> {to:?}")]
    DuplicateTransition { from: String, to: String },
    #[error("{what} has dimension {found}, expected {expected}")]
    Dimension {
        what: &'static str,
        found: usize,
        expected: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite generalized possibilistic Kripke structure `(S, P, I, AP, L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gpks {
    states: Vec<String>,
    transitions: FuzzyMatrix,
    initial: FuzzyVector,
    propositions: Vec<String>,
    // labels[a][s] = L(s, a)
    labels: Vec<FuzzyVector>,
    reach_sup: FuzzyVector,
}

impl Gpks {
    /// Assembles and validates a structure. `labels[a]` is the fuzzy set of
    /// states carrying proposition `propositions[a]`.
    pub fn new(
        states: Vec<String>,
        transitions: FuzzyMatrix,
        initial: FuzzyVector,
        propositions: Vec<String>,
        labels: Vec<FuzzyVector>,
    ) -> Result<Self, ModelError> {
        let n = states.len();
        if n == 0 {
            return Err(ModelError::NoStates);
        }
        if let Some(dup) = first_duplicate(&states) {
            return Err(ModelError::DuplicateState(dup.clone()));
        }
        if let Some(dup) = first_duplicate(&propositions) {
            return Err(ModelError::DuplicateProposition(dup.clone()));
        }
        let dim_check = |what, found| {
            if found == n {
                Ok(())
            } else {
                Err(ModelError::Dimension { what, found, expected: n })
            }
        };
        dim_check("transition matrix", transitions.dim())?;
        dim_check("initial distribution", initial.dim())?;
        if labels.len() != propositions.len() {
            return Err(ModelError::Dimension {
                what: "label table",
                found: labels.len(),
                expected: propositions.len(),
            });
        }
        for l in &labels {
            dim_check("label vector", l.dim())?;
        }
        let reach_sup = compute_reach_sup(&transitions);
        Ok(Gpks {
            states,
            transitions,
            initial,
            propositions,
            labels,
            reach_sup,
        })
    }

    pub fn builder() -> GpksBuilder {
        GpksBuilder::default()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn transitions(&self) -> &FuzzyMatrix {
        &self.transitions
    }

    pub fn initial(&self) -> &FuzzyVector {
        &self.initial
    }

    pub fn propositions(&self) -> &[String] {
        &self.propositions
    }

    /// `(L(s, a))_s`, or `None` for a name not in `AP`.
    pub fn label(&self, prop: &str) -> Option<&FuzzyVector> {
        self.propositions
            .iter()
            .position(|p| p == prop)
            .map(|i| &self.labels[i])
    }

    /// `r_P(s)`: the best min-of-edges over all infinite continuations from `s`.
    pub fn reach_sup(&self) -> &FuzzyVector {
        &self.reach_sup
    }

    /// The model with its initial distribution replaced by the point
    /// distribution at `s`.
    pub fn started_at(&self, s: usize) -> Gpks {
        let mut m = self.clone();
        m.initial = FuzzyVector::new((0..self.num_states()).map(|t| PossValue::from(t == s)).collect())
            .expect("nonempty");
        m
    }

    pub fn validate(&self) -> Diagnostics {
        let n = self.num_states();
        let row_max = |s: usize| {
            self.transitions.row(s).iter().copied().fold(PossValue::ZERO, PossValue::max)
        };
        let non_normal_rows: Vec<usize> = (0..n).filter(|&s| !row_max(s).is_one()).collect();
        let deadlocks: Vec<usize> = (0..n).filter(|&s| row_max(s).is_zero()).collect();
        Diagnostics {
            transitions_normal: non_normal_rows.is_empty(),
            non_normal_rows,
            initial_normal: self.initial.max_entry().is_one(),
            labels_crisp: self.labels.iter().all(|l| l.iter().all(PossValue::is_crisp)),
            deadlocks,
        }
    }

    /// `Po(π) = I(s₀) ∧ ⋀ P(sᵢ, sᵢ₊₁)` for the infinite path `prefix · cycle^ω`.
    ///
    /// # Panics
    ///
    /// If the lasso mentions a state index outside the model.
    pub fn lasso_possibility(&self, lasso: &Lasso) -> PossValue {
        self.check_indices(lasso.states());
        self.initial[lasso.first()].min(lasso_edge_min(&self.transitions, lasso))
    }

    /// `Po(Cyl(s₀…sₙ)) = I(s₀) ∧ ⋀_{i<n} P(sᵢ, sᵢ₊₁) ∧ r_P(sₙ)`.
    ///
    /// # Panics
    ///
    /// If the path mentions a state index outside the model.
    pub fn cylinder_possibility(&self, path: &FinitePath) -> PossValue {
        let states = path.states();
        self.check_indices(states.iter().copied());
        let edges = states
            .windows(2)
            .map(|w| self.transitions.get(w[0], w[1]))
            .fold(PossValue::ONE, PossValue::min);
        self.initial[states[0]]
            .min(edges)
            .min(self.reach_sup[*states.last().expect("nonempty path")])
    }

    /// `Po(E)` for a set of lasso-shaped paths; 0 for the empty set.
    pub fn pathset_possibility<'a>(&self, lassos: impl IntoIterator<Item = &'a Lasso>) -> PossValue {
        lassos
            .into_iter()
            .map(|l| self.lasso_possibility(l))
            .fold(PossValue::ZERO, PossValue::max)
    }

    fn check_indices(&self, states: impl IntoIterator<Item = usize>) {
        let n = self.num_states();
        for s in states {
            assert!(s < n, "state index {s} out of range for a {n}-state model");
        }
    }
}

fn first_duplicate(names: &[String]) -> Option<&String> {
    names
        .iter()
        .enumerate()
        .find(|(i, a)| names[..*i].contains(a))
        .map(|(_, a)| a)
}

/// `r_P = P⁺ ∘ D` where `D` is the diagonal of `P⁺`.
pub fn compute_reach_sup(p: &FuzzyMatrix) -> FuzzyVector {
    let plus = p.transitive_closure();
    plus.apply_unchecked(&plus.diagonal())
}

/// Min of the transition degrees along every edge of the lasso, including
/// the wrap-around from the last cycle state back to the first.
pub(crate) fn lasso_edge_min(p: &FuzzyMatrix, lasso: &Lasso) -> PossValue {
    let seq: Vec<usize> = lasso.states().collect();
    let along = seq
        .windows(2)
        .map(|w| p.get(w[0], w[1]))
        .fold(PossValue::ONE, PossValue::min);
    let wrap = p.get(*lasso.cycle.last().expect("nonempty cycle"), lasso.cycle[0]);
    along.min(wrap)
}

/// Classification report; none of these properties is required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    /// Every row of `P` attains 1.
    pub transitions_normal: bool,
    pub non_normal_rows: Vec<usize>,
    /// `I` attains 1.
    pub initial_normal: bool,
    /// All labels are 0 or 1.
    pub labels_crisp: bool,
    /// States with no successor of positive possibility.
    pub deadlocks: Vec<usize>,
}

impl Diagnostics {
    /// Normal transitions, normal initial distribution and crisp labels.
    pub fn is_pks(&self) -> bool {
        self.transitions_normal && self.initial_normal && self.labels_crisp
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("lasso cycle must be nonempty")]
    EmptyCycle,
    #[error("finite path must be nonempty")]
    EmptyPath,
}

/// The infinite path `prefix · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lasso {
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

impl Lasso {
    pub fn new(prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self, PathError> {
        if cycle.is_empty() {
            return Err(PathError::EmptyCycle);
        }
        Ok(Lasso { prefix, cycle })
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn first(&self) -> usize {
        self.prefix.first().copied().unwrap_or(self.cycle[0])
    }

    /// `prefix` followed by one copy of `cycle`.
    pub fn states(&self) -> impl Iterator<Item = usize> + '_ {
        self.prefix.iter().chain(&self.cycle).copied()
    }

    /// State at position `i` of the unrolled infinite path.
    pub fn at(&self, i: usize) -> usize {
        let p = self.prefix.len();
        if i < p {
            self.prefix[i]
        } else {
            self.cycle[(i - p) % self.cycle.len()]
        }
    }
}

/// A nonempty finite path fragment `s₀ s₁ … sₙ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePath {
    states: Vec<usize>,
}

impl FinitePath {
    pub fn new(states: Vec<usize>) -> Result<Self, PathError> {
        if states.is_empty() {
            return Err(PathError::EmptyPath);
        }
        Ok(FinitePath { states })
    }

    pub fn states(&self) -> &[usize] {
        &self.states
    }
}

/// Incremental construction by name. Missing transitions, initial degrees
/// and labels are 0.
#[derive(Debug, Default, Clone)]
pub struct GpksBuilder {
    states: Vec<String>,
    propositions: Vec<String>,
    initial: Vec<(String, PossValue)>,
    transitions: Vec<(String, String, PossValue)>,
    labels: Vec<(String, String, PossValue)>,
}

impl GpksBuilder {
    pub fn state(mut self, name: impl Into<String>) -> Self {
        self.states.push(name.into());
        self
    }

    pub fn states<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.states.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn proposition(mut self, name: impl Into<String>) -> Self {
        self.propositions.push(name.into());
        self
    }

    pub fn initial(mut self, state: impl Into<String>, p: PossValue) -> Self {
        self.initial.push((state.into(), p));
        self
    }

    pub fn transition(mut self, from: impl Into<String>, to: impl Into<String>, p: PossValue) -> Self {
        self.transitions.push((from.into(), to.into(), p));
        self
    }

    pub fn label(mut self, state: impl Into<String>, prop: impl Into<String>, p: PossValue) -> Self {
        self.labels.push((state.into(), prop.into(), p));
        self
    }

    pub fn build(self) -> Result<Gpks, ModelError> {
        let n = self.states.len();
        if n == 0 {
            return Err(ModelError::NoStates);
        }
        if let Some(dup) = first_duplicate(&self.states) {
            return Err(ModelError::DuplicateState(dup.clone()));
        }
        let idx = |name: &str| {
            self.states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| ModelError::UnknownState(name.into()))
        };

        let mut init = alloc::vec![PossValue::ZERO; n];
        for (s, p) in &self.initial {
            init[idx(s)?] = *p;
        }

        let mut matrix = FuzzyMatrix::zeros(n);
        let mut seen = alloc::vec![false; n * n];
        for (from, to, p) in &self.transitions {
            let (i, j) = (idx(from)?, idx(to)?);
            if core::mem::replace(&mut seen[i * n + j], true) {
                return Err(ModelError::DuplicateTransition {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
            matrix.set(i, j, *p);
        }

        let mut labels = alloc::vec![alloc::vec![PossValue::ZERO; n]; self.propositions.len()];
        for (s, a, p) in &self.labels {
            let si = idx(s)?;
            let ai = self
                .propositions
                .iter()
                .position(|x| x == a)
                .ok_or_else(|| ModelError::UnknownProposition(a.clone()))?;
            labels[ai][si] = *p;
        }

        Gpks::new(
            self.states,
            matrix,
            FuzzyVector::new(init)?,
            self.propositions,
            labels
                .into_iter()
                .map(FuzzyVector::new)
                .collect::<Result<_, _>>()?,
        )
    }
}
