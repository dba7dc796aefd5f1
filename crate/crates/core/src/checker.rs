//! Per-state evaluation of formulas over a [`Gpks`].
//!
//! Path operators reduce to max-min algebra on vectors:
//!
//! * `Po[X ψ]      = P ∘ D_ψ ∘ r_P`
//! * `Po[φ U<=n ψ] = ⋁_{i≤n} (D_φ ∘ P)^i ∘ D_ψ ∘ r_P`
//! * `Po[φ U ψ]    = (D_φ ∘ P)* ∘ D_ψ ∘ r_P`
//! * `Po[G φ]      = gfp Z. φ ∧ P ∘ D_Z ∘ r_P`
//!
//! Until is evaluated by vector iteration; the closure form is kept in
//! [`eval_until_closure`] and both must agree.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{FuzzyMatrix, FuzzyVector};
use crate::logic::{expand_derived, Interval, PathFormula, StateFormula};
use crate::model::Gpks;
use crate::value::PossValue;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("unknown atomic proposition {0:?}")]
    UnknownAtom(String),
}

/// Work counters for one evaluation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalStats {
    /// Applications of the always-operator per `G` subformula, in
    /// evaluation order. The last application is the one that confirms
    /// the fixpoint.
    pub always_iterations: Vec<usize>,
    /// Join steps per unbounded until subformula.
    pub until_iterations: Vec<usize>,
    /// Max-min matrix-vector products.
    pub compositions: usize,
    pub memo_hits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalResult {
    pub formula: StateFormula,
    /// `‖Φ‖(s)` for every state `s`.
    pub vector: FuzzyVector,
    pub stats: EvalStats,
}

/// Result of an iterated evaluation together with the number of steps taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixpoint {
    pub value: FuzzyVector,
    pub iterations: usize,
}

fn assert_dim(m: &Gpks, v: &FuzzyVector) {
    assert_eq!(
        v.dim(),
        m.num_states(),
        "argument vector has dimension {} but the model has {} states",
        v.dim(),
        m.num_states()
    );
}

/// `D_ψ ∘ r_P`: the argument capped by the best infinite continuation.
fn capped(m: &Gpks, psi: &FuzzyVector) -> FuzzyVector {
    psi.zip_with(m.reach_sup(), PossValue::min)
}

/// `Po[X ψ] = P ∘ D_ψ ∘ r_P`.
pub fn eval_next(m: &Gpks, psi: &FuzzyVector) -> FuzzyVector {
    assert_dim(m, psi);
    m.transitions().apply_unchecked(&capped(m, psi))
}

/// Iterates `x ↦ x₀ ∨ D_φ ∘ P ∘ x` from `x₀ = D_ψ ∘ r_P`, for at most
/// `limit` steps or until it stabilizes.
pub fn until_fixpoint(m: &Gpks, phi: &FuzzyVector, psi: &FuzzyVector, limit: Option<u32>) -> Fixpoint {
    assert_dim(m, phi);
    assert_dim(m, psi);
    let base = capped(m, psi);
    let mut x = base.clone();
    let mut iterations = 0;
    while limit.is_none_or(|n| iterations < n as usize) {
        let step = m.transitions().apply_unchecked(&x).zip_with(phi, PossValue::min);
        let next = base.zip_with(&step, PossValue::max);
        iterations += 1;
        if next == x {
            break;
        }
        x = next;
    }
    Fixpoint { value: x, iterations }
}

/// `Po[φ U ψ]`.
pub fn eval_until(m: &Gpks, phi: &FuzzyVector, psi: &FuzzyVector) -> FuzzyVector {
    until_fixpoint(m, phi, psi, None).value
}

/// `Po[φ U<=n ψ]`.
pub fn eval_bounded_until(m: &Gpks, phi: &FuzzyVector, psi: &FuzzyVector, n: u32) -> FuzzyVector {
    until_fixpoint(m, phi, psi, Some(n)).value
}

/// `(D_φ ∘ P)* ∘ D_ψ ∘ r_P` through the matrix closure.
pub fn eval_until_closure(m: &Gpks, phi: &FuzzyVector, psi: &FuzzyVector) -> FuzzyVector {
    assert_dim(m, phi);
    assert_dim(m, psi);
    let guarded = FuzzyMatrix::diag(phi).compose_unchecked(m.transitions());
    guarded.reflexive_transitive_closure().apply_unchecked(&capped(m, psi))
}

/// `Po[F φ] = P* ∘ D_φ ∘ r_P`.
pub fn eval_eventually(m: &Gpks, phi: &FuzzyVector) -> FuzzyVector {
    assert_dim(m, phi);
    m.transitions()
        .reflexive_transitive_closure()
        .apply_unchecked(&capped(m, phi))
}

/// Iterates `f(Z) = φ ∧ P ∘ D_Z ∘ r_P` downward from the all-ones vector,
/// for at most `limit` applications or until `f(Z) = Z`.
pub fn always_fixpoint(m: &Gpks, phi: &FuzzyVector, limit: Option<u32>) -> Fixpoint {
    assert_dim(m, phi);
    let mut z = FuzzyVector::ones(m.num_states());
    let mut iterations = 0;
    while limit.is_none_or(|n| iterations < n as usize) {
        let next = eval_next(m, &z).zip_with(phi, PossValue::min);
        iterations += 1;
        if next == z {
            break;
        }
        z = next;
    }
    Fixpoint { value: z, iterations }
}

/// `Po[G φ]`: the greatest fixpoint of `Z ↦ φ ∧ P ∘ D_Z ∘ r_P`.
pub fn eval_always(m: &Gpks, phi: &FuzzyVector) -> FuzzyVector {
    always_fixpoint(m, phi, None).value
}

/// `Po[G<=n φ]`: `n + 1` applications of the always-operator to the
/// all-ones vector, i.e. `φ` must hold on positions `0..=n`.
pub fn eval_bounded_always(m: &Gpks, phi: &FuzzyVector, n: u32) -> FuzzyVector {
    always_fixpoint(m, phi, Some(n.saturating_add(1))).value
}

/// Evaluates a formula (sugar allowed) on every state.
pub fn eval_state(m: &Gpks, f: &StateFormula) -> Result<EvalResult, CheckError> {
    let mut ev = Evaluator::new(m);
    let vector = ev.eval(&expand_derived(f))?;
    Ok(EvalResult {
        formula: f.clone(),
        vector,
        stats: ev.stats,
    })
}

/// States whose degree for `f` lies in `interval`, in index order.
pub fn check_threshold(m: &Gpks, f: &StateFormula, interval: &Interval) -> Result<Vec<usize>, CheckError> {
    Ok(states_in(&eval_state(m, f)?.vector, interval))
}

pub fn states_in(v: &FuzzyVector, interval: &Interval) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| interval.contains(**x))
        .map(|(i, _)| i)
        .collect()
}

/// Bottom-up evaluator memoizing subformula vectors by structure.
pub struct Evaluator<'m> {
    model: &'m Gpks,
    memo: BTreeMap<StateFormula, FuzzyVector>,
    stats: EvalStats,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m Gpks) -> Self {
        Evaluator {
            model,
            memo: BTreeMap::new(),
            stats: EvalStats::default(),
        }
    }

    pub fn stats(&self) -> &EvalStats {
        &self.stats
    }

    /// Evaluates a core formula; sugar must be expanded first.
    pub fn eval(&mut self, f: &StateFormula) -> Result<FuzzyVector, CheckError> {
        if let Some(v) = self.memo.get(f) {
            self.stats.memo_hits += 1;
            return Ok(v.clone());
        }
        let m = self.model;
        let v = match f {
            StateFormula::True => FuzzyVector::ones(m.num_states()),
            StateFormula::Atom(a) => m
                .label(a)
                .cloned()
                .ok_or_else(|| CheckError::UnknownAtom(a.clone()))?,
            StateFormula::And(a, b) => {
                let a = self.eval(a)?;
                let b = self.eval(b)?;
                a.zip_with(&b, PossValue::min)
            }
            StateFormula::Not(a) => self.eval(a)?.complement(),
            StateFormula::Po(p) => self.eval_path(p)?,
            StateFormula::Or(..) | StateFormula::Implies(..) | StateFormula::Iff(..) | StateFormula::Ne(_) => {
                return self.eval(&expand_derived(f));
            }
        };
        self.memo.insert(f.clone(), v.clone());
        Ok(v)
    }

    fn eval_path(&mut self, p: &PathFormula) -> Result<FuzzyVector, CheckError> {
        let m = self.model;
        Ok(match p {
            PathFormula::Next(a) => {
                let a = self.eval(a)?;
                self.stats.compositions += 1;
                eval_next(m, &a)
            }
            PathFormula::Until(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                let fp = until_fixpoint(m, &a, &b, None);
                self.stats.until_iterations.push(fp.iterations);
                self.stats.compositions += fp.iterations;
                fp.value
            }
            PathFormula::BoundedUntil(a, b, n) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                let fp = until_fixpoint(m, &a, &b, Some(*n));
                self.stats.compositions += fp.iterations;
                fp.value
            }
            PathFormula::Eventually(a) => {
                let a = self.eval(a)?;
                let fp = until_fixpoint(m, &FuzzyVector::ones(m.num_states()), &a, None);
                self.stats.until_iterations.push(fp.iterations);
                self.stats.compositions += fp.iterations;
                fp.value
            }
            PathFormula::Always(a) => {
                let a = self.eval(a)?;
                let fp = always_fixpoint(m, &a, None);
                self.stats.always_iterations.push(fp.iterations);
                self.stats.compositions += fp.iterations;
                fp.value
            }
            PathFormula::BoundedAlways(a, n) => {
                let a = self.eval(a)?;
                let fp = always_fixpoint(m, &a, Some(n.saturating_add(1)));
                self.stats.compositions += fp.iterations;
                fp.value
            }
        })
    }
}
