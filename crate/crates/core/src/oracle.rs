//! Reference semantics by exhaustive lasso enumeration.
//!
//! Every supremum over infinite paths is taken as a maximum over lassos
//! `prefix · cycle^ω` within [`EnumerationBounds`]. Cutting a path at its
//! first repeated state gives a lasso whose edges and visited states are a
//! subset of the original, so lassos with at most `|S|` distinct positions
//! already attain every supremum; the defaults are generous on top of that.
//!
//! Nothing here shares code with the matrix evaluation in
//! [`checker`](crate::checker).

use alloc::vec::Vec;

use crate::algebra::{FuzzyMatrix, FuzzyVector};
use crate::checker::CheckError;
use crate::logic::{expand_derived, PathFormula, StateFormula};
use crate::model::{Gpks, Lasso};
use crate::value::PossValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_prefix: usize,
    pub max_cycle: usize,
    /// Minimum number of unrolled positions scanned for until witnesses.
    /// Scans always cover at least one full `prefix · cycle` unrolling.
    pub max_until_depth: usize,
}

impl EnumerationBounds {
    pub fn for_model(m: &Gpks) -> Self {
        let n = m.num_states();
        EnumerationBounds {
            max_prefix: n,
            max_cycle: n,
            max_until_depth: n + 1,
        }
    }

    /// Keeps `max_cycle` and `max_until_depth` at least 1.
    pub fn new(max_prefix: usize, max_cycle: usize, max_until_depth: usize) -> Self {
        EnumerationBounds {
            max_prefix,
            max_cycle: max_cycle.max(1),
            max_until_depth: max_until_depth.max(1),
        }
    }
}

/// The evaluated argument vectors of a path formula.
#[derive(Debug, Clone, Copy)]
pub enum PathArgs<'a> {
    Next(&'a FuzzyVector),
    Until(&'a FuzzyVector, &'a FuzzyVector),
    BoundedUntil(&'a FuzzyVector, &'a FuzzyVector, u32),
    Always(&'a FuzzyVector),
    BoundedAlways(&'a FuzzyVector, u32),
}

/// Calls `visit` on every lasso starting at `start` within the bounds
/// whose edge minimum exceeds `floor()`. Branches whose running edge
/// minimum has dropped to the floor are cut: no lasso below them can do
/// better.
fn for_each_lasso(
    p: &FuzzyMatrix,
    start: usize,
    bounds: &EnumerationBounds,
    floor: &mut dyn FnMut() -> PossValue,
    visit: &mut dyn FnMut(&[usize], usize, PossValue),
) {
    fn walk(
        p: &FuzzyMatrix,
        seq: &mut Vec<usize>,
        edge_min: PossValue,
        bounds: &EnumerationBounds,
        floor: &mut dyn FnMut() -> PossValue,
        visit: &mut dyn FnMut(&[usize], usize, PossValue),
    ) {
        if edge_min <= floor() {
            return;
        }
        let len = seq.len();
        // Every split of `seq` into prefix + cycle within bounds.
        let lo = len.saturating_sub(bounds.max_cycle);
        let hi = bounds.max_prefix.min(len - 1);
        for split in lo..=hi {
            let wrap = p.get(seq[len - 1], seq[split]);
            let value = edge_min.min(wrap);
            if value > PossValue::ZERO {
                visit(seq, split, value);
            }
        }
        if len < bounds.max_prefix + bounds.max_cycle {
            let last = seq[len - 1];
            for next in 0..p.dim() {
                let e = p.get(last, next);
                if e.is_zero() {
                    continue;
                }
                seq.push(next);
                walk(p, seq, edge_min.min(e), bounds, floor, visit);
                seq.pop();
            }
        }
    }
    let mut seq = alloc::vec![start];
    walk(p, &mut seq, PossValue::ONE, bounds, floor, visit);
}

/// `r_P(s)` as the best edge minimum over enumerated lassos from `s`.
pub fn oracle_reach_sup(m: &Gpks, bounds: &EnumerationBounds) -> FuzzyVector {
    let values = (0..m.num_states())
        .map(|s| {
            let best = core::cell::Cell::new(PossValue::ZERO);
            for_each_lasso(
                m.transitions(),
                s,
                bounds,
                &mut || best.get(),
                &mut |_, _, v| best.set(best.get().max(v)),
            );
            best.get()
        })
        .collect();
    FuzzyVector::new(values).expect("nonempty model")
}

/// `‖φ‖(π)` on the infinite path `seq[..split] · seq[split..]^ω`.
fn path_value(p: &FuzzyMatrix, seq: &[usize], split: usize, args: PathArgs<'_>, bounds: &EnumerationBounds) -> PossValue {
    let cycle = seq.len() - split;
    let at = |i: usize| {
        if i < seq.len() {
            seq[i]
        } else {
            seq[split + (i - split) % cycle]
        }
    };
    let edge = |i: usize| p.get(at(i), at(i + 1));
    // One full unrolling, plus one more step so the wrap edge is visited.
    let horizon = seq.len().max(bounds.max_until_depth);

    let until = |phi: &FuzzyVector, psi: &FuzzyVector, limit: usize| {
        // prefix_min = ⋀_{k<j} φ(π[k]) ∧ ⋀_{k<j} P(π[k], π[k+1])
        let mut best = PossValue::ZERO;
        let mut prefix_min = PossValue::ONE;
        for j in 0..=limit {
            best = best.max(prefix_min.min(psi[at(j)]));
            prefix_min = prefix_min.min(phi[at(j)]).min(edge(j));
            if prefix_min <= best {
                break;
            }
        }
        best
    };

    match args {
        PathArgs::Next(phi) => edge(0).min(phi[at(1)]),
        PathArgs::Until(phi, psi) => until(phi, psi, horizon),
        PathArgs::BoundedUntil(phi, psi, n) => until(phi, psi, (n as usize).min(horizon)),
        PathArgs::Always(phi) => (0..seq.len())
            .map(|i| phi[at(i)].min(edge(i)))
            .fold(PossValue::ONE, PossValue::min),
        PathArgs::BoundedAlways(phi, n) => {
            let on_positions = (0..=(n as usize).min(horizon))
                .map(|i| phi[at(i)])
                .fold(PossValue::ONE, PossValue::min);
            let edges = (0..seq.len()).map(edge).fold(PossValue::ONE, PossValue::min);
            on_positions.min(edges)
        }
    }
}

/// `‖φ‖(π)` evaluated directly on a lasso.
///
/// # Panics
///
/// If the lasso mentions a state outside the model.
pub fn oracle_path_value(m: &Gpks, lasso: &Lasso, args: PathArgs<'_>, bounds: &EnumerationBounds) -> PossValue {
    let seq: Vec<usize> = lasso.states().collect();
    assert!(seq.iter().all(|&s| s < m.num_states()), "lasso state out of range");
    path_value(m.transitions(), &seq, lasso.prefix().len(), args, bounds)
}

/// `Po(s ⊨ φ)`: best `Po^{M_s}(π) ∧ ‖φ‖(π)` over enumerated lassos from `s`.
pub fn oracle_path_possibility(m: &Gpks, args: PathArgs<'_>, bounds: &EnumerationBounds) -> FuzzyVector {
    let p = m.transitions();
    let values = (0..m.num_states())
        .map(|s| {
            let best = core::cell::Cell::new(PossValue::ZERO);
            for_each_lasso(p, s, bounds, &mut || best.get(), &mut |seq, split, edges| {
                if edges > best.get() {
                    let v = edges.min(path_value(p, seq, split, args, bounds));
                    best.set(best.get().max(v));
                }
            });
            best.get()
        })
        .collect();
    FuzzyVector::new(values).expect("nonempty model")
}

/// Evaluates a formula by brute force. Sugar is expanded syntactically
/// first; every `Po` is computed by lasso enumeration.
pub fn oracle_eval_state(m: &Gpks, f: &StateFormula, bounds: &EnumerationBounds) -> Result<FuzzyVector, CheckError> {
    eval_core(m, &expand_derived(f), bounds)
}

fn eval_core(m: &Gpks, f: &StateFormula, bounds: &EnumerationBounds) -> Result<FuzzyVector, CheckError> {
    let n = m.num_states();
    let pointwise = |v: Vec<PossValue>| FuzzyVector::new(v).expect("nonempty model");
    Ok(match f {
        StateFormula::True => FuzzyVector::ones(n),
        StateFormula::Atom(a) => m.label(a).cloned().ok_or_else(|| CheckError::UnknownAtom(a.clone()))?,
        StateFormula::And(a, b) => {
            let (a, b) = (eval_core(m, a, bounds)?, eval_core(m, b, bounds)?);
            pointwise((0..n).map(|s| a[s].min(b[s])).collect())
        }
        StateFormula::Not(a) => {
            let a = eval_core(m, a, bounds)?;
            pointwise((0..n).map(|s| a[s].complement()).collect())
        }
        StateFormula::Po(p) => match &**p {
            PathFormula::Next(a) => {
                let a = eval_core(m, a, bounds)?;
                oracle_path_possibility(m, PathArgs::Next(&a), bounds)
            }
            PathFormula::Until(a, b) => {
                let (a, b) = (eval_core(m, a, bounds)?, eval_core(m, b, bounds)?);
                oracle_path_possibility(m, PathArgs::Until(&a, &b), bounds)
            }
            PathFormula::BoundedUntil(a, b, k) => {
                let (a, b) = (eval_core(m, a, bounds)?, eval_core(m, b, bounds)?);
                oracle_path_possibility(m, PathArgs::BoundedUntil(&a, &b, *k), bounds)
            }
            PathFormula::Always(a) => {
                let a = eval_core(m, a, bounds)?;
                oracle_path_possibility(m, PathArgs::Always(&a), bounds)
            }
            PathFormula::BoundedAlways(a, k) => {
                let a = eval_core(m, a, bounds)?;
                oracle_path_possibility(m, PathArgs::BoundedAlways(&a, *k), bounds)
            }
            PathFormula::Eventually(_) => unreachable!("expanded away"),
        },
        StateFormula::Or(..) | StateFormula::Implies(..) | StateFormula::Iff(..) | StateFormula::Ne(_) => {
            unreachable!("expanded away")
        }
    })
}
