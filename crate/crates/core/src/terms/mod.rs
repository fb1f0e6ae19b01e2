//! The term language over the meadow signature `0, 1, +, -, *, ^-1`.
//!
//! Subtraction, division, numerals and the local unit `1_x = x*x^-1` are
//! helpers that build ordinary [`Term`] trees; there are no dedicated nodes
//! for them.

mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parse::parse_term;
pub(crate) use parse::{Parser, Token};

/// A term over the meadow signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Neg(Box<Term>),
    Inv(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

/// Returns true when `name` matches `[a-z][a-z0-9_]*`.
pub fn is_valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Term {
    /// Builds a variable. Panics if `name` is not a valid identifier.
    pub fn var(name: &str) -> Term {
        assert!(is_valid_var_name(name), "invalid variable name `{name}`");
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn inv(t: Term) -> Term {
        Term::Inv(Box::new(t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    /// `l - r`, i.e. `l + (-r)`.
    #[allow(clippy::should_implement_trait)]
    pub fn sub(l: Term, r: Term) -> Term {
        Term::add(l, Term::neg(r))
    }

    /// `l / r`, i.e. `l * r^-1`.
    #[allow(clippy::should_implement_trait)]
    pub fn div(l: Term, r: Term) -> Term {
        Term::mul(l, Term::inv(r))
    }

    /// The local unit `1_x = x * x^-1`.
    pub fn unit_of(x: Term) -> Term {
        Term::mul(x.clone(), Term::inv(x))
    }

    /// `x` multiplied by itself `k` times; `pow(x, 0)` is `1`.
    pub fn pow(x: Term, k: u32) -> Term {
        if k == 0 {
            return Term::One;
        }
        let mut acc = x.clone();
        for _ in 1..k {
            acc = Term::mul(acc, x.clone());
        }
        acc
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) => 1,
            Term::Neg(t) | Term::Inv(t) => 1 + t.size(),
            Term::Add(l, r) | Term::Mul(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) => 0,
            Term::Neg(t) | Term::Inv(t) => 1 + t.depth(),
            Term::Add(l, r) | Term::Mul(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn mentions_inverse(&self) -> bool {
        match self {
            Term::Zero | Term::One | Term::Var(_) => false,
            Term::Inv(_) => true,
            Term::Neg(t) => t.mentions_inverse(),
            Term::Add(l, r) | Term::Mul(l, r) => l.mentions_inverse() || r.mentions_inverse(),
        }
    }

    /// Variables occurring in the term.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Neg(t) | Term::Inv(t) => t.collect_vars(out),
            Term::Add(l, r) | Term::Mul(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Replaces every bound variable simultaneously.
    pub fn substitute(&self, binding: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Var(v) => binding.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Neg(t) => Term::neg(t.substitute(binding)),
            Term::Inv(t) => Term::inv(t.substitute(binding)),
            Term::Add(l, r) => Term::add(l.substitute(binding), r.substitute(binding)),
            Term::Mul(l, r) => Term::mul(l.substitute(binding), r.substitute(binding)),
        }
    }
}

/// The numeral `k`: `0` for `k = 0`, otherwise `numeral(k - 1) + 1`.
pub fn numeral(k: u64) -> Term {
    let mut t = Term::Zero;
    for _ in 0..k {
        t = Term::add(t, Term::One);
    }
    t
}

/// The term a decimal literal stands for: `0`, `1`, or the left-nested sum
/// `1 + 1 + ... + 1` with `k` ones.
pub fn literal(k: u64) -> Term {
    match k {
        0 => Term::Zero,
        _ => {
            let mut t = Term::One;
            for _ in 1..k {
                t = Term::add(t, Term::One);
            }
            t
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_term(f, self)
    }
}
