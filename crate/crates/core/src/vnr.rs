//! Finite commutative von Neumann regular rings and their unique expansion
//! to meadows.

use crate::error::{Error, Result};
use crate::logic::AxiomSet;
use crate::structures::{check_axiom_set, Elem, FiniteStructure};

/// A finite commutative ring without an inverse table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRing(FiniteStructure);

/// Order in which candidate pseudoinverses are scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudoinverseOrder {
    Ascending,
    Descending,
}

/// The least `y` in carrier order with `x*x*y = x` and `y*y*x = y`.
/// Fails with `NotRegular` when there is none.
pub fn double_pseudoinverse_scan(s: &FiniteStructure, x: Elem) -> Result<Elem> {
    let xx = s.mul(x, x);
    s.elements()
        .find(|&y| s.mul(xx, y) == x && s.mul(s.mul(y, y), x) == y)
        .ok_or(Error::NotRegular { witness: x })
}

impl RawRing {
    /// Checks the commutative ring axioms and drops any inverse table.
    pub fn new(s: FiniteStructure) -> Result<Self> {
        let s = s.with_inverse(None)?;
        let report = check_axiom_set(&s, AxiomSet::CR)?;
        if let Some((axiom, _)) = report.failures().next() {
            return Err(Error::NotACommutativeRing {
                axiom: axiom.to_string(),
            });
        }
        Ok(RawRing(s))
    }

    pub fn structure(&self) -> &FiniteStructure {
        &self.0
    }

    pub fn into_structure(self) -> FiniteStructure {
        self.0
    }

    fn is_pseudoinverse(&self, x: Elem, y: Elem) -> bool {
        let r = &self.0;
        r.mul(r.mul(x, y), x) == x
    }

    /// All `y` with `x*y*x = x`, ascending.
    pub fn pseudoinverses(&self, x: Elem) -> Vec<Elem> {
        self.0
            .elements()
            .filter(|&y| self.is_pseudoinverse(x, y))
            .collect()
    }

    fn pseudoinverse(&self, x: Elem, order: PseudoinverseOrder) -> Option<Elem> {
        match order {
            PseudoinverseOrder::Ascending => {
                self.0.elements().find(|&y| self.is_pseudoinverse(x, y))
            }
            PseudoinverseOrder::Descending => self
                .0
                .elements()
                .rev()
                .find(|&y| self.is_pseudoinverse(x, y)),
        }
    }

    /// The least element without a pseudoinverse, if any.
    pub fn non_regular_witness(&self) -> Option<Elem> {
        self.0.elements().find(|&x| {
            self.pseudoinverse(x, PseudoinverseOrder::Ascending)
                .is_none()
        })
    }

    pub fn is_regular(&self) -> bool {
        self.non_regular_witness().is_none()
    }

    /// The inverse table `x -> i(x)*x*i(x)` for the pseudoinverse selector
    /// given by `order`.
    pub fn expansion_with(&self, order: PseudoinverseOrder) -> Result<Vec<Elem>> {
        let r = &self.0;
        r.elements()
            .map(|x| {
                let i = self
                    .pseudoinverse(x, order)
                    .ok_or(Error::NotRegular { witness: x })?;
                Ok(r.mul(r.mul(i, x), i))
            })
            .collect()
    }

    /// Expands the ring to a meadow. Both selection orders are computed and
    /// must agree; the result is checked against `Ref` and `Ril`.
    pub fn expand_to_meadow(&self) -> Result<FiniteStructure> {
        let up = self.expansion_with(PseudoinverseOrder::Ascending)?;
        let down = self.expansion_with(PseudoinverseOrder::Descending)?;
        if let Some(x) = (0..up.len()).find(|&x| up[x] != down[x]) {
            return Err(Error::UniquenessViolated { element: x as Elem });
        }
        let m = self.0.with_inverse(Some(up))?;
        for set in [AxiomSet::Ref, AxiomSet::Ril] {
            let report = check_axiom_set(&m, set)?;
            let failure = report
                .failures()
                .next()
                .map(|(axiom, a)| format!("expansion fails {axiom} at {a}"));
            if let Some(msg) = failure {
                return Err(Error::NotAMeadow(msg));
            }
        }
        Ok(m)
    }

    /// The unique `y` with `x*x*y = x` and `y*y*x = y`, or `None`.
    pub fn unique_double_pseudoinverse(&self, x: Elem) -> Result<Option<Elem>> {
        let r = &self.0;
        let xx = r.mul(x, x);
        let mut found = r
            .elements()
            .filter(|&y| r.mul(xx, y) == x && r.mul(r.mul(y, y), x) == y);
        match (found.next(), found.next()) {
            (None, _) => Ok(None),
            (Some(y), None) => Ok(Some(y)),
            (Some(_), Some(_)) => Err(Error::UniquenessViolated { element: x }),
        }
    }

    /// Whether `{z*x*z : x*z*x = x}` is the singleton `{inv(x)}` for every
    /// `x`, with `inv` the expansion.
    pub fn explicit_inverse_check(&self) -> Result<bool> {
        let inv = self.expand_to_meadow()?;
        let r = &self.0;
        Ok(r.elements().all(|x| {
            let expected = inv.inv(x).expect("expansion has an inverse");
            self.pseudoinverses(x)
                .into_iter()
                .all(|z| r.mul(r.mul(z, x), z) == expected)
        }))
    }
}
