use super::{check_statement, Equation, Statement};
use crate::error::Result;
use crate::structures::{Assignment, FiniteStructure, Verdict};
use crate::terms::Term;

/// `Z(x) = 1 - x*x^-1`.
pub fn z_term(x: Term) -> Term {
    Term::sub(Term::One, Term::unit_of(x))
}

/// `Z(1 + x1*x1 + ... + xn*xn) = 0` over fresh variables `x1..xn`.
pub fn ln_equation(n: usize) -> Equation {
    assert!(n >= 1, "L_n needs n >= 1");
    let sum = (1..=n).fold(Term::One, |acc, i| {
        let x = Term::var(&format!("x{i}"));
        Term::add(acc, Term::mul(x.clone(), x))
    });
    Equation::new(z_term(sum), Term::Zero)
}

const DERIVED: [(&str, &[&str]); 6] = [
    ("zero-unit", &["x*x^-1 = 0 -> x = 0", "x = 0 -> x*x^-1 = 0"]),
    ("implicit-inverse", &["x*y = 1 -> x^-1 = y"]),
    (
        "sip-derivable",
        &["(x*y)^-1 = x^-1*y^-1", "(-x)^-1 = -(x^-1)"],
    ),
    ("square", &["x*x = x -> x = x^-1"]),
    ("cube", &["x*x*x = x -> x = x^-1"]),
    ("fourth", &["x*x*x*x = x -> x = x^-1*x^-1"]),
];

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub checks: Vec<(Statement, Verdict<Assignment>)>,
}

impl SuiteEntry {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.holds())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub structure: String,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(SuiteEntry::holds)
    }
}

/// Derived meadow properties, each checked exhaustively.
pub fn derived_identity_suite(s: &FiniteStructure) -> Result<SuiteReport> {
    let mut entries = Vec::new();
    for (name, sources) in DERIVED {
        let mut checks = Vec::new();
        for src in sources {
            let st = Statement::parse(src).expect("built-in statement parses");
            let v = check_statement(s, &st)?;
            checks.push((st, v));
        }
        entries.push(SuiteEntry { name, checks });
    }
    Ok(SuiteReport {
        structure: s.name().to_string(),
        entries,
    })
}
