//! Equations, conditional equations and their semantics over finite
//! structures.
//!
//! Statements use the term grammar plus `=`, `!=`, `&` and `->`:
//!
//! ```text
//! x*(x*x^-1) = x
//! x*y = 1 -> inv(x) = y
//! x != 0 -> x*x^-1 = 1
//! ```

mod axioms;
mod battery;
mod suite;

use std::collections::BTreeSet;
use std::fmt;

pub use axioms::{Axiom, AxiomSet};
pub use battery::{battery_check, BatteryReport, BatteryRow};
pub use suite::{derived_identity_suite, ln_equation, z_term, SuiteEntry, SuiteReport};

use crate::engine::{Role, Search};
use crate::error::{Error, Result};
use crate::structures::{Assignment, FiniteStructure, Verdict};
use crate::terms::{Parser, Term, Token};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let lhs = p.expr()?;
        p.expect(Token::Eq, "`=`")?;
        let rhs = p.expr()?;
        p.expect_eof()?;
        Ok(Equation { lhs, rhs })
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.lhs.collect_vars(&mut out);
        self.rhs.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// An equation or a disequation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub equation: Equation,
    pub positive: bool,
}

impl Literal {
    pub fn eq(equation: Equation) -> Self {
        Literal {
            equation,
            positive: true,
        }
    }

    pub fn neq(equation: Equation) -> Self {
        Literal {
            equation,
            positive: false,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.positive { "=" } else { "!=" };
        write!(f, "{} {op} {}", self.equation.lhs, self.equation.rhs)
    }
}

/// `p1 & ... & pn -> c`. Premises may be empty.
///
/// Only conditionals whose literals are all positive can be encoded as a
/// single equation; disequations (as in the guarded inverse law) are still
/// checked semantically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConditionalEquation {
    pub premises: Vec<Literal>,
    pub conclusion: Literal,
}

impl ConditionalEquation {
    /// A conditional with equational premises and conclusion.
    pub fn new(premises: Vec<Equation>, conclusion: Equation) -> Self {
        ConditionalEquation {
            premises: premises.into_iter().map(Literal::eq).collect(),
            conclusion: Literal::eq(conclusion),
        }
    }

    pub fn parse(src: &str) -> Result<Self> {
        match Statement::parse(src)? {
            Statement::Conditional(ce) => Ok(ce),
            Statement::Equation(e) => Ok(ConditionalEquation::new(Vec::new(), e)),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for lit in self
            .premises
            .iter()
            .chain(std::iter::once(&self.conclusion))
        {
            lit.equation.lhs.collect_vars(&mut out);
            lit.equation.rhs.collect_vars(&mut out);
        }
        out
    }

    pub fn is_equational(&self) -> bool {
        self.conclusion.positive && self.premises.iter().all(|p| p.positive)
    }
}

impl fmt::Display for ConditionalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            f.write_str(if i == 0 { "" } else { " & " })?;
            write!(f, "{p}")?;
        }
        if !self.premises.is_empty() {
            f.write_str(" -> ")?;
        }
        write!(f, "{}", self.conclusion)
    }
}

/// Anything that can be checked against a model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Statement {
    Equation(Equation),
    Conditional(ConditionalEquation),
}

fn literal(p: &mut Parser) -> Result<Literal> {
    let lhs = p.expr()?;
    let positive = match p.peek() {
        Token::Eq => true,
        Token::Neq => false,
        _ => return Err(p.error("`=` or `!=`")),
    };
    p.bump();
    let rhs = p.expr()?;
    Ok(Literal {
        equation: Equation { lhs, rhs },
        positive,
    })
}

impl Statement {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let mut lits = Vec::new();
        if *p.peek() != Token::Arrow {
            lits.push(literal(&mut p)?);
            while *p.peek() == Token::Amp {
                p.bump();
                lits.push(literal(&mut p)?);
            }
        }
        let st = if *p.peek() == Token::Arrow {
            p.bump();
            let conclusion = literal(&mut p)?;
            Statement::Conditional(ConditionalEquation {
                premises: lits,
                conclusion,
            })
        } else if lits.len() == 1 {
            let lit = lits.pop().expect("one literal");
            if lit.positive {
                Statement::Equation(lit.equation)
            } else {
                Statement::Conditional(ConditionalEquation {
                    premises: Vec::new(),
                    conclusion: lit,
                })
            }
        } else {
            return Err(p.error("`->`"));
        };
        p.expect_eof()?;
        Ok(st)
    }

    pub fn as_conditional(&self) -> ConditionalEquation {
        match self {
            Statement::Equation(e) => ConditionalEquation::new(Vec::new(), e.clone()),
            Statement::Conditional(ce) => ce.clone(),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        match self {
            Statement::Equation(e) => e.vars(),
            Statement::Conditional(ce) => ce.vars(),
        }
    }
}

impl From<Equation> for Statement {
    fn from(e: Equation) -> Self {
        Statement::Equation(e)
    }
}

impl From<ConditionalEquation> for Statement {
    fn from(ce: ConditionalEquation) -> Self {
        Statement::Conditional(ce)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Equation(e) => e.fmt(f),
            Statement::Conditional(ce) => ce.fmt(f),
        }
    }
}

/// `l = r` becomes `l - r = 0`, uniformly.
pub fn normalize_to_zero(e: &Equation) -> Equation {
    Equation::new(Term::sub(e.lhs.clone(), e.rhs.clone()), Term::Zero)
}

/// `C(x, y) = (1 - x*x^-1) * y`: equals `y` where `x = 0` and `0` where `x`
/// is invertible.
pub fn c_guard(x: Term, y: Term) -> Term {
    Term::mul(Term::sub(Term::One, Term::unit_of(x)), y)
}

/// `U(x, y) = (x*y)*(x*y)^-1 - x*x^-1 - y*y^-1`: zero in a meadow exactly
/// when both arguments are.
pub fn u_merge(x: Term, y: Term) -> Term {
    let xy = Term::mul(x.clone(), y.clone());
    Term::sub(
        Term::sub(Term::unit_of(xy), Term::unit_of(x)),
        Term::unit_of(y),
    )
}

/// Encodes `t1 = 0 & ... & tn = 0 -> t = 0` (after normalizing every
/// literal to zero form) as `C(U(...U(t1, t2)..., tn), t) = 0`. The `U`
/// fold nests to the left; `n = 0` yields the normalized conclusion and
/// `n = 1` yields `C(t1, t) = 0`.
pub fn encode_conditional(ce: &ConditionalEquation) -> Result<Equation> {
    if let Some(bad) = ce
        .premises
        .iter()
        .chain(std::iter::once(&ce.conclusion))
        .find(|l| !l.positive)
    {
        return Err(Error::UnsupportedPremise(bad.to_string()));
    }
    let conclusion = normalize_to_zero(&ce.conclusion.equation).lhs;
    let mut premises = ce
        .premises
        .iter()
        .map(|p| normalize_to_zero(&p.equation).lhs);
    let Some(first) = premises.next() else {
        return Ok(Equation::new(conclusion, Term::Zero));
    };
    let merged = premises.fold(first, u_merge);
    Ok(Equation::new(c_guard(merged, conclusion), Term::Zero))
}

/// Exhaustively decides a conditional: every assignment satisfying all
/// premises must satisfy the conclusion. The witness is the
/// lexicographically least violating assignment.
pub fn check_conditional(
    s: &FiniteStructure,
    ce: &ConditionalEquation,
) -> Result<Verdict<Assignment>> {
    let mut search = Search::new(ce.vars().into_iter().collect());
    for p in &ce.premises {
        search.constrain(&p.equation.lhs, &p.equation.rhs, p.positive, Role::Guard)?;
    }
    let c = &ce.conclusion;
    search.constrain(&c.equation.lhs, &c.equation.rhs, c.positive, Role::Goal)?;
    Ok(match search.first_counterexample(s)? {
        None => Verdict::Holds,
        Some(values) => Verdict::Fails(Assignment::from_search(search.vars(), &values)),
    })
}

/// Checks either kind of statement over a finite structure.
pub fn check_statement(s: &FiniteStructure, st: &Statement) -> Result<Verdict<Assignment>> {
    match st {
        Statement::Equation(e) => crate::structures::check_equation(s, e),
        Statement::Conditional(ce) => check_conditional(s, ce),
    }
}

/// The guarded inverse law `x != 0 -> x*x^-1 = 1`.
pub fn gil() -> ConditionalEquation {
    ConditionalEquation::parse("x != 0 -> x*x^-1 = 1").expect("well-formed")
}

/// The separation axiom `0 != 1`.
pub fn sep() -> ConditionalEquation {
    ConditionalEquation::parse("0 != 1").expect("well-formed")
}

/// Inverse existence `x != 0 -> exists y. x*y = 1`; returns the least
/// violating `x`.
pub fn iel_witness(s: &FiniteStructure) -> Option<u32> {
    s.elements()
        .filter(|&x| x != s.zero())
        .find(|&x| !s.elements().any(|y| s.mul(x, y) == s.one()))
}
