use alloc::boxed::Box;

use super::ast::{PathFormula, StateFormula};

type S = StateFormula;
type P = PathFormula;

/// Rewrites every derived connective into `true`, atoms, `∧`, `¬` and `Po`
/// over `X`, `U`, `U<=n`, `G` and `G<=n`.
///
/// Necessity forms:
///
/// | form            | rewrite                                        |
/// |-----------------|------------------------------------------------|
/// | `Ne[X φ]`       | `¬Po[X ¬φ]`                                    |
/// | `Ne[φ U ψ]`     | `¬Po[¬ψ U (¬φ ∧ ¬ψ)] ∧ ¬Po[G ¬φ]`              |
/// | `Ne[φ U<=n ψ]`  | `¬Po[¬ψ U<=n (¬φ ∧ ¬ψ)] ∧ ¬Po[G<=n ¬φ]`        |
/// | `Ne[G φ]`       | `¬Po[true U ¬φ]`                               |
/// | `Ne[F φ]`       | `¬Po[G ¬φ]`                                    |
/// | `Ne[G<=n φ]`    | `¬Po[true U<=n ¬φ]`                            |
pub fn expand_derived(f: &StateFormula) -> StateFormula {
    match f {
        S::True => S::True,
        S::Atom(a) => S::Atom(a.clone()),
        S::And(a, b) => expand_derived(a).and(expand_derived(b)),
        S::Not(a) => expand_derived(a).not(),
        S::Or(a, b) => or(expand_derived(a), expand_derived(b)),
        S::Implies(a, b) => implies(expand_derived(a), expand_derived(b)),
        S::Iff(a, b) => {
            let (a, b) = (expand_derived(a), expand_derived(b));
            implies(a.clone(), b.clone()).and(implies(b, a))
        }
        S::Po(p) => S::po(expand_path(p)),
        S::Ne(p) => expand_necessity(p),
    }
}

fn or(a: S, b: S) -> S {
    a.not().and(b.not()).not()
}

fn implies(a: S, b: S) -> S {
    or(a.not(), b)
}

fn expand_path(p: &P) -> P {
    match p {
        P::Next(a) => P::next(expand_derived(a)),
        P::Until(a, b) => P::until(expand_derived(a), expand_derived(b)),
        P::BoundedUntil(a, b, n) => P::bounded_until(expand_derived(a), expand_derived(b), *n),
        P::Always(a) => P::always(expand_derived(a)),
        P::Eventually(a) => P::until(S::True, expand_derived(a)),
        P::BoundedAlways(a, n) => P::bounded_always(expand_derived(a), *n),
    }
}

fn expand_necessity(p: &P) -> S {
    let not_po = |path: P| S::Not(Box::new(S::po(path)));
    match p {
        P::Next(a) => not_po(P::next(expand_derived(a).not())),
        P::Until(a, b) => {
            let (a, b) = (expand_derived(a), expand_derived(b));
            let escape = P::until(b.clone().not(), a.clone().not().and(b.not()));
            not_po(escape).and(not_po(P::always(a.not())))
        }
        P::BoundedUntil(a, b, n) => {
            let (a, b) = (expand_derived(a), expand_derived(b));
            let escape = P::bounded_until(b.clone().not(), a.clone().not().and(b.not()), *n);
            not_po(escape).and(not_po(P::bounded_always(a.not(), *n)))
        }
        P::Always(a) => not_po(P::until(S::True, expand_derived(a).not())),
        P::Eventually(a) => not_po(P::always(expand_derived(a).not())),
        P::BoundedAlways(a, n) => not_po(P::bounded_until(S::True, expand_derived(a).not(), *n)),
    }
}

/// Number of subformulae: 1 for atoms and `true`, +1 per `¬`, `∧` and
/// temporal operator. Sugared input is measured after expansion.
pub fn formula_size(f: &StateFormula) -> usize {
    if f.is_core() {
        core_size(f)
    } else {
        core_size(&expand_derived(f))
    }
}

fn core_size(f: &S) -> usize {
    match f {
        S::True | S::Atom(_) => 1,
        S::And(a, b) => core_size(a) + core_size(b) + 1,
        S::Not(a) => core_size(a) + 1,
        S::Po(p) => match &**p {
            P::Next(a) | P::Always(a) | P::BoundedAlways(a, _) => core_size(a) + 1,
            P::Until(a, b) | P::BoundedUntil(a, b, _) => core_size(a) + core_size(b) + 1,
            P::Eventually(a) => core_size(a) + 2,
        },
        S::Or(..) | S::Implies(..) | S::Iff(..) | S::Ne(_) => unreachable!("sugar in core formula"),
    }
}
