//! Interchangeable ways of computing the meadow inverse of a finite
//! commutative ring, selectable by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_meadows::power_cycle_inverse;
use crate::structures::{Elem, FiniteStructure};
use crate::vnr::{double_pseudoinverse_scan, PseudoinverseOrder, RawRing};

/// Computes an inverse table for a finite commutative ring.
pub trait InverseStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn inverse_table(&self, ring: &FiniteStructure) -> Result<Vec<Elem>>;
}

/// Scans for the `y` with `x*x*y = x` and `y*y*x = y`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DoublePseudoinverseScan;

impl InverseStrategy for DoublePseudoinverseScan {
    fn name(&self) -> &'static str {
        "scan"
    }

    fn description(&self) -> &'static str {
        "least y with x*x*y = x and y*y*x = y"
    }

    fn inverse_table(&self, ring: &FiniteStructure) -> Result<Vec<Elem>> {
        ring.elements()
            .map(|x| double_pseudoinverse_scan(ring, x))
            .collect()
    }
}

/// Reads the inverse off the cycle of powers of `x`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowerCycle;

impl InverseStrategy for PowerCycle {
    fn name(&self) -> &'static str {
        "power-cycle"
    }

    fn description(&self) -> &'static str {
        "x^(K-1-l) for the first repeat x^K = x^l with K > l + 1"
    }

    fn inverse_table(&self, ring: &FiniteStructure) -> Result<Vec<Elem>> {
        let table: Vec<Elem> = ring
            .elements()
            .map(|x| power_cycle_inverse(ring, x))
            .collect();
        // The power cycle yields something for every x; reject non-regular rings.
        if let Some(x) = ring.elements().find(|&x| {
            let y = table[x as usize];
            ring.mul(ring.mul(x, x), y) != x
        }) {
            return Err(Error::NotRegular { witness: x });
        }
        Ok(table)
    }
}

/// `i(x)*x*i(x)` for the least pseudoinverse `i(x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PseudoinverseSandwich;

impl InverseStrategy for PseudoinverseSandwich {
    fn name(&self) -> &'static str {
        "sandwich"
    }

    fn description(&self) -> &'static str {
        "z*x*z for the least z with x*z*x = x"
    }

    fn inverse_table(&self, ring: &FiniteStructure) -> Result<Vec<Elem>> {
        RawRing::new(ring.clone())?.expansion_with(PseudoinverseOrder::Ascending)
    }
}

/// Inverse strategies by name.
#[derive(Clone)]
pub struct InverseRegistry {
    strategies: BTreeMap<&'static str, Arc<dyn InverseStrategy>>,
}

impl InverseRegistry {
    pub fn empty() -> Self {
        InverseRegistry {
            strategies: BTreeMap::new(),
        }
    }

    /// `scan`, `power-cycle` and `sandwich`.
    pub fn builtin() -> Self {
        let mut r = InverseRegistry::empty();
        r.register(Arc::new(DoublePseudoinverseScan));
        r.register(Arc::new(PowerCycle));
        r.register(Arc::new(PseudoinverseSandwich));
        r
    }

    pub fn register(&mut self, s: Arc<dyn InverseStrategy>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn InverseStrategy>> {
        self.strategies
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn InverseStrategy>> {
        self.strategies.values()
    }
}

impl Default for InverseRegistry {
    fn default() -> Self {
        InverseRegistry::builtin()
    }
}
