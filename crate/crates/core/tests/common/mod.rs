//! Model and formula generators shared by the integration tests.
#![allow(dead_code)]

use gpoctl_core::value::pv;
use gpoctl_core::{Gpks, PathFormula, PossValue, StateFormula};
use rand::seq::SliceRandom;
use rand::Rng;

pub const GRID3: [&str; 3] = ["0", "0.5", "1"];
pub const GRID5: [&str; 5] = ["0", "0.25", "0.5", "0.75", "1"];
pub const PROPS: [&str; 2] = ["a", "b"];

pub fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("s{i}")).collect()
}

/// The four-state fuzzy example model.
pub fn m1() -> Gpks {
    let mut b = Gpks::builder()
        .states(state_names(4))
        .proposition("a")
        .proposition("b")
        .proposition("c")
        .initial("s0", PossValue::ONE);
    for (from, to, p) in [
        ("s0", "s1", "0.8"),
        ("s0", "s3", "0.9"),
        ("s1", "s2", "0.2"),
        ("s1", "s3", "0.5"),
        ("s2", "s2", "0.9"),
        ("s3", "s1", "0.7"),
        ("s3", "s2", "0.6"),
        ("s3", "s3", "0.4"),
    ] {
        b = b.transition(from, to, pv(p));
    }
    for (prop, vals) in [
        ("a", ["0.8", "0.6", "0", "0.4"]),
        ("b", ["0.8", "1", "0", "0.5"]),
        ("c", ["0", "0", "0.7", "1"]),
    ] {
        for (s, v) in vals.iter().enumerate() {
            b = b.label(format!("s{s}"), prop, pv(v));
        }
    }
    b.build().unwrap()
}

/// Builds a model from a row-major transition table, initial vector and
/// per-proposition label vectors.
pub fn model_from(p: &[PossValue], init: &[PossValue], labels: &[(&str, Vec<PossValue>)]) -> Gpks {
    let n = init.len();
    assert_eq!(p.len(), n * n);
    let names = state_names(n);
    let mut b = Gpks::builder().states(names.clone());
    for (prop, _) in labels {
        b = b.proposition(*prop);
    }
    for i in 0..n {
        b = b.initial(names[i].clone(), init[i]);
        for j in 0..n {
            b = b.transition(names[i].clone(), names[j].clone(), p[i * n + j]);
        }
        for (prop, vals) in labels {
            b = b.label(names[i].clone(), *prop, vals[i]);
        }
    }
    b.build().unwrap()
}

fn pick(rng: &mut impl Rng, grid: &[&str]) -> PossValue {
    // Zero-heavy so that models have sparse, interesting transition graphs.
    if rng.gen_bool(0.35) {
        PossValue::ZERO
    } else {
        pv(grid.choose(rng).unwrap())
    }
}

pub fn random_model(rng: &mut impl Rng, n: usize, grid: &[&str]) -> Gpks {
    let p: Vec<PossValue> = (0..n * n).map(|_| pick(rng, grid)).collect();
    let init: Vec<PossValue> = (0..n).map(|_| pv(grid.choose(rng).unwrap())).collect();
    let labels: Vec<(&str, Vec<PossValue>)> = PROPS
        .iter()
        .map(|&a| (a, (0..n).map(|_| pv(grid.choose(rng).unwrap())).collect()))
        .collect();
    model_from(&p, &init, &labels)
}

/// Normal transitions (every row attains 1), normal initial distribution
/// and crisp labels, with fuzzy off-peak transitions from `grid`.
pub fn random_normal_pks(rng: &mut impl Rng, n: usize, grid: &[&str]) -> Gpks {
    let mut p: Vec<PossValue> = (0..n * n).map(|_| pick(rng, grid)).collect();
    for i in 0..n {
        let j = rng.gen_range(0..n);
        p[i * n + j] = PossValue::ONE;
    }
    let mut init = vec![PossValue::ZERO; n];
    init[rng.gen_range(0..n)] = PossValue::ONE;
    let labels: Vec<(&str, Vec<PossValue>)> = PROPS
        .iter()
        .map(|&a| (a, (0..n).map(|_| PossValue::from(rng.gen_bool(0.5))).collect()))
        .collect();
    model_from(&p, &init, &labels)
}

/// A random core formula of temporal nesting depth at most `depth`.
pub fn random_formula(rng: &mut impl Rng, depth: usize) -> StateFormula {
    random_state(rng, depth, 3)
}

fn random_state(rng: &mut impl Rng, depth: usize, size: usize) -> StateFormula {
    let choice = if size == 0 { rng.gen_range(0..3) } else { rng.gen_range(0..8) };
    match choice {
        0 => StateFormula::True,
        1 | 2 => StateFormula::atom(*PROPS.choose(rng).unwrap()),
        3 => random_state(rng, depth, size - 1).not(),
        4 => random_state(rng, depth, size - 1).and(random_state(rng, depth, size - 1)),
        _ if depth == 0 => StateFormula::atom(*PROPS.choose(rng).unwrap()),
        _ => StateFormula::po(random_path(rng, depth - 1, size - 1)),
    }
}

fn random_path(rng: &mut impl Rng, depth: usize, size: usize) -> PathFormula {
    let arg = |rng: &mut _| random_state(rng, depth, size);
    match rng.gen_range(0..5) {
        0 => PathFormula::next(arg(rng)),
        1 => PathFormula::until(arg(rng), arg(rng)),
        2 => {
            let n = rng.gen_range(0..4);
            PathFormula::bounded_until(arg(rng), arg(rng), n)
        }
        3 => PathFormula::always(arg(rng)),
        _ => {
            let n = rng.gen_range(0..4);
            PathFormula::bounded_always(arg(rng), n)
        }
    }
}

/// Every core formula over `a`, `b` with one temporal operator applied
/// to arguments drawn from a small base set, plus selected depth-2 nests.
pub fn depth_two_formulas() -> Vec<StateFormula> {
    use StateFormula as S;
    let base = [
        S::True,
        S::atom("a"),
        S::atom("b"),
        S::atom("a").not(),
        S::atom("a").and(S::atom("b")),
    ];
    let mut out: Vec<StateFormula> = base.to_vec();
    let mut depth1 = Vec::new();
    for x in &base {
        depth1.push(S::po(PathFormula::next(x.clone())));
        depth1.push(S::po(PathFormula::always(x.clone())));
        depth1.push(S::po(PathFormula::bounded_always(x.clone(), 1)));
        for y in &base {
            depth1.push(S::po(PathFormula::until(x.clone(), y.clone())));
            depth1.push(S::po(PathFormula::bounded_until(x.clone(), y.clone(), 1)));
        }
    }
    out.extend(depth1.iter().cloned());
    let inner = [
        S::po(PathFormula::next(S::atom("a"))),
        S::po(PathFormula::until(S::atom("a"), S::atom("b"))),
        S::po(PathFormula::always(S::atom("b"))).not(),
    ];
    for x in &inner {
        out.push(S::po(PathFormula::next(x.clone())));
        out.push(S::po(PathFormula::always(x.clone())));
        out.push(S::po(PathFormula::until(S::atom("a"), x.clone())));
        out.push(S::po(PathFormula::until(x.clone(), S::atom("b"))));
        out.push(S::po(PathFormula::bounded_until(x.clone(), S::atom("b"), 2)));
        out.push(S::po(PathFormula::bounded_always(x.clone(), 2)));
    }
    out
}

/// Calls `f` with every model on `n` states whose transition, initial and
/// label degrees range over `grid`.
pub fn for_each_model(n: usize, grid: &[&str], mut f: impl FnMut(Gpks)) {
    let values: Vec<PossValue> = grid.iter().map(|s| pv(s)).collect();
    let slots = n * n + n + PROPS.len() * n;
    let total = values.len().pow(slots as u32);
    for code in 0..total {
        let mut c = code;
        let mut digits = Vec::with_capacity(slots);
        for _ in 0..slots {
            digits.push(values[c % values.len()]);
            c /= values.len();
        }
        let (p, rest) = digits.split_at(n * n);
        let (init, labs) = rest.split_at(n);
        let labels: Vec<(&str, Vec<PossValue>)> = PROPS
            .iter()
            .enumerate()
            .map(|(k, &a)| (a, labs[k * n..(k + 1) * n].to_vec()))
            .collect();
        f(model_from(p, init, &labels));
    }
}
