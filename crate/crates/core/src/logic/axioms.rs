use std::fmt;
use std::str::FromStr;

use super::Equation;
use crate::error::Error;

/// A named equational axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub name: &'static str,
    pub equation: Equation,
}

/// Named sets of equational axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomSet {
    /// Commutative ring with unit.
    CR,
    /// Strong inverse properties.
    SIP,
    /// `(x^-1)^-1 = x`.
    Ref,
    /// `x*(x*x^-1) = x`.
    Ril,
    /// Meadows: `CR + Ref + Ril`.
    Md,
    /// `0^-1 = 0`.
    Zil,
}

const CR: [(&str, &str); 8] = [
    ("CR1", "(x + y) + z = x + (y + z)"),
    ("CR2", "x + y = y + x"),
    ("CR3", "x + 0 = x"),
    ("CR4", "x + (-x) = 0"),
    ("CR5", "(x*y)*z = x*(y*z)"),
    ("CR6", "x*y = y*x"),
    ("CR7", "x*1 = x"),
    ("CR8", "x*(y + z) = x*y + x*z"),
];
const SIP: [(&str, &str); 3] = [
    ("SIP1", "(-x)^-1 = -(x^-1)"),
    ("SIP2", "(x*y)^-1 = x^-1*y^-1"),
    ("SIP3", "(x^-1)^-1 = x"),
];
const REF: (&str, &str) = ("Ref", "(x^-1)^-1 = x");
const RIL: (&str, &str) = ("Ril", "x*(x*x^-1) = x");
const ZIL: (&str, &str) = ("Zil", "0^-1 = 0");

impl AxiomSet {
    pub const ALL: [AxiomSet; 6] = [
        AxiomSet::CR,
        AxiomSet::SIP,
        AxiomSet::Ref,
        AxiomSet::Ril,
        AxiomSet::Md,
        AxiomSet::Zil,
    ];

    pub fn axioms(self) -> Vec<Axiom> {
        let src: Vec<(&'static str, &'static str)> = match self {
            AxiomSet::CR => CR.to_vec(),
            AxiomSet::SIP => SIP.to_vec(),
            AxiomSet::Ref => vec![REF],
            AxiomSet::Ril => vec![RIL],
            AxiomSet::Md => CR.iter().copied().chain([REF, RIL]).collect(),
            AxiomSet::Zil => vec![ZIL],
        };
        src.into_iter()
            .map(|(name, eq)| Axiom {
                name,
                equation: Equation::parse(eq).expect("built-in axiom parses"),
            })
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            AxiomSet::CR => "CR",
            AxiomSet::SIP => "SIP",
            AxiomSet::Ref => "Ref",
            AxiomSet::Ril => "Ril",
            AxiomSet::Md => "Md",
            AxiomSet::Zil => "Zil",
        }
    }
}

impl fmt::Display for AxiomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        AxiomSet::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("unknown axiom set `{s}`"),
            })
    }
}
