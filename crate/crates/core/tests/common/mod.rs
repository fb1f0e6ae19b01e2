#![allow(dead_code)]

use std::sync::Arc;

use meadow::finite_meadows::standard_battery;
use meadow::logic::{ConditionalEquation, Equation};
use meadow::structures::FiniteStructure;
use meadow::terms::Term;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn battery() -> Vec<Arc<FiniteStructure>> {
    standard_battery()
        .unwrap()
        .into_iter()
        .map(|d| d.realized)
        .collect()
}

pub fn random_term(rng: &mut ChaCha8Rng, depth: usize, vars: &[&str]) -> Term {
    let leaf = depth == 0 || rng.gen_bool(0.2);
    if leaf {
        return match rng.gen_range(0..4) {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::var(vars[rng.gen_range(0..vars.len())]),
        };
    }
    match rng.gen_range(0..4) {
        0 => Term::neg(random_term(rng, depth - 1, vars)),
        1 => Term::inv(random_term(rng, depth - 1, vars)),
        2 => Term::add(
            random_term(rng, depth - 1, vars),
            random_term(rng, depth - 1, vars),
        ),
        _ => Term::mul(
            random_term(rng, depth - 1, vars),
            random_term(rng, depth - 1, vars),
        ),
    }
}

pub fn random_equation(rng: &mut ChaCha8Rng, depth: usize, vars: &[&str]) -> Equation {
    let d = rng.gen_range(0..=depth);
    let e = rng.gen_range(0..=depth);
    Equation::new(random_term(rng, d, vars), random_term(rng, e, vars))
}

/// At most three premises over at most three of `x`, `y`, `z`.
pub fn random_conditional(rng: &mut ChaCha8Rng, depth: usize) -> ConditionalEquation {
    let all = ["x", "y", "z"];
    let vars = &all[..rng.gen_range(1..=3)];
    let premises = (0..rng.gen_range(0..=3))
        .map(|_| random_equation(rng, depth, vars))
        .collect();
    ConditionalEquation::new(premises, random_equation(rng, depth, vars))
}
