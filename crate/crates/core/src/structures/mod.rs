//! Finite structures over the meadow signature, given by operation tables.
//!
//! The carrier of a structure of size `n` is always `0..n`. Binary tables are
//! stored row-major: entry `r * n + c` holds `r op c`.

mod format;
mod hom;
mod ideal;
mod product;

use std::collections::BTreeMap;
use std::fmt;

pub use format::{parse_structure, write_structure};
pub use hom::{find_homomorphisms, find_homomorphisms_bounded, Homomorphism, DEFAULT_SEARCH_BOUND};
pub use ideal::{principal_ideal, PrincipalIdeal};
pub use product::{
    generating_set, is_minimal, product, product_with_bound, subalgebra_generated, Subalgebra,
    DEFAULT_CARRIER_BOUND,
};

use crate::engine::{Role, Search};
use crate::error::{Error, Result};
use crate::logic::{AxiomSet, Equation};
use crate::terms::{numeral, Term};

/// An element of a finite carrier.
pub type Elem = u32;

/// Largest number of entries a binary operation table may have.
pub const MAX_TABLE_ENTRIES: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteStructure {
    name: String,
    size: usize,
    zero: Elem,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Option<Vec<Elem>>,
}

/// The finite table data of a structure, before validation.
#[derive(Debug, Clone, Default)]
pub struct Tables {
    pub size: usize,
    pub zero: Elem,
    pub one: Elem,
    pub add: Vec<Elem>,
    pub mul: Vec<Elem>,
    pub neg: Vec<Elem>,
    pub inv: Option<Vec<Elem>>,
}

fn check_table(what: &str, table: &[Elem], len: usize, n: usize) -> Result<()> {
    if table.len() != len {
        return Err(Error::InvalidStructure(format!(
            "{what} table has {} entries, expected {len}",
            table.len()
        )));
    }
    if let Some(bad) = table.iter().find(|&&e| e as usize >= n) {
        return Err(Error::InvalidStructure(format!(
            "{what} table entry {bad} outside 0..{n}"
        )));
    }
    Ok(())
}

/// Fails with `SizeOverflow` when a carrier of `n` elements cannot be tabulated.
pub(crate) fn check_size(n: u128, bound: u128) -> Result<()> {
    let bound = bound.min((MAX_TABLE_ENTRIES as f64).sqrt() as u128);
    if n > bound {
        return Err(Error::SizeOverflow {
            requested: n,
            bound,
        });
    }
    Ok(())
}

impl FiniteStructure {
    pub fn new(name: impl Into<String>, t: Tables) -> Result<Self> {
        let n = t.size;
        if n == 0 {
            return Err(Error::InvalidStructure("carrier must be non-empty".into()));
        }
        check_size(n as u128, u128::MAX)?;
        for (what, e) in [("zero", t.zero), ("one", t.one)] {
            if e as usize >= n {
                return Err(Error::InvalidStructure(format!(
                    "{what} = {e} outside 0..{n}"
                )));
            }
        }
        check_table("add", &t.add, n * n, n)?;
        check_table("mul", &t.mul, n * n, n)?;
        check_table("neg", &t.neg, n, n)?;
        if let Some(inv) = &t.inv {
            check_table("inv", inv, n, n)?;
        }
        Ok(FiniteStructure {
            name: name.into(),
            size: n,
            zero: t.zero,
            one: t.one,
            add: t.add,
            mul: t.mul,
            neg: t.neg,
            inv: t.inv,
        })
    }

    /// Tabulates the given operations on `0..size`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        name: impl Into<String>,
        size: usize,
        zero: Elem,
        one: Elem,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        neg: impl Fn(Elem) -> Elem,
        inv: Option<&dyn Fn(Elem) -> Elem>,
    ) -> Result<Self> {
        check_size(size as u128, u128::MAX)?;
        let n = size as Elem;
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        let tables = Tables {
            size,
            zero,
            one,
            add: pairs().map(|(a, b)| add(a, b)).collect(),
            mul: pairs().map(|(a, b)| mul(a, b)).collect(),
            neg: (0..n).map(&neg).collect(),
            inv: inv.map(|f| (0..n).map(f).collect()),
        };
        FiniteStructure::new(name, tables)
    }

    /// The ring `Z/n` without an inverse table.
    pub fn integers_mod(n: usize) -> Result<Self> {
        check_size(n as u128, u128::MAX)?;
        let m = n as u64;
        let (zero, one) = (0, (1 % m) as Elem);
        FiniteStructure::from_fns(
            format!("Z/{n}"),
            n,
            zero,
            one,
            |a, b| ((a as u64 + b as u64) % m) as Elem,
            |a, b| ((a as u64 * b as u64) % m) as Elem,
            |a| ((m - a as u64) % m) as Elem,
            None,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// `a^-1`, if the structure carries an inverse table.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        self.inv.as_ref().map(|t| t[a as usize])
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn inv_table(&self) -> Option<&[Elem]> {
        self.inv.as_deref()
    }

    pub fn has_inverse(&self) -> bool {
        self.inv.is_some()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size as Elem
    }

    /// The same ring with `inv` replaced (or removed, for `None`).
    pub fn with_inverse(&self, inv: Option<Vec<Elem>>) -> Result<Self> {
        if let Some(t) = &inv {
            check_table("inv", t, self.size, self.size)?;
        }
        let mut out = self.clone();
        out.inv = inv;
        Ok(out)
    }

    pub fn tables(&self) -> Tables {
        Tables {
            size: self.size,
            zero: self.zero,
            one: self.one,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            inv: self.inv.clone(),
        }
    }

    /// Table equality, ignoring names.
    pub fn same_tables(&self, other: &FiniteStructure) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
            && self.neg == other.neg
            && self.inv == other.inv
    }

    fn inv_or_err(&self, a: Elem) -> Result<Elem> {
        self.inv(a)
            .ok_or_else(|| Error::MissingInverseTable(self.name.clone()))
    }

    /// `1_x = x * x^-1`.
    pub fn unit_of(&self, x: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv_or_err(x)?))
    }

    /// All `e` with `e * e = e`, ascending.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Least `k > 0` with `numeral(k) = 0`.
    pub fn characteristic(&self) -> Result<u64> {
        let mut acc = self.zero;
        for k in 1..=self.size as u64 {
            acc = self.add(acc, self.one);
            if acc == self.zero {
                return Ok(k);
            }
        }
        Err(Error::NoFiniteCharacteristic(self.name.clone()))
    }

    /// Value of `numeral(k)`, computed by repeated addition.
    pub fn numeral_value(&self, k: u64) -> Elem {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn is_trivial(&self) -> bool {
        self.zero == self.one
    }

    /// Whether every equation of `Md` holds. Structures without an inverse
    /// table are not meadows.
    pub fn is_meadow(&self) -> bool {
        self.has_inverse()
            && check_axiom_set(self, AxiomSet::Md)
                .map(|r| r.all_hold())
                .unwrap_or(false)
    }

    /// Whether `x != 0 -> x * x^-1 = 1` holds, given an inverse table.
    pub fn satisfies_gil(&self) -> bool {
        self.inv_table().is_some_and(|_| {
            self.elements()
                .all(|x| x == self.zero || self.unit_of(x) == Ok(self.one))
        })
    }

    /// A non-trivial meadow satisfying the guarded inverse law.
    pub fn is_zero_totalized_field(&self) -> bool {
        !self.is_trivial() && self.satisfies_gil() && self.is_meadow()
    }
}

impl fmt::Display for FiniteStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_structure(self))
    }
}

/// A valuation of variables in a finite carrier.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(pub BTreeMap<String, Elem>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, e: Elem) -> Self {
        self.0.insert(var.to_string(), e);
        self
    }

    pub fn get(&self, var: &str) -> Option<Elem> {
        self.0.get(var).copied()
    }

    pub(crate) fn from_search(vars: &[String], values: &[Elem]) -> Self {
        Assignment(vars.iter().cloned().zip(values.iter().copied()).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str("}")
    }
}

/// Outcome of a validity check: either it holds everywhere, or a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }
}

/// Evaluates `t` in `s` under `a` by structural recursion.
pub fn eval(t: &Term, s: &FiniteStructure, a: &Assignment) -> Result<Elem> {
    Ok(match t {
        Term::Zero => s.zero(),
        Term::One => s.one(),
        Term::Var(v) => {
            let e = a.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            if e as usize >= s.size() {
                return Err(Error::InvalidStructure(format!(
                    "{v}={e} outside the carrier"
                )));
            }
            e
        }
        Term::Neg(x) => s.neg(eval(x, s, a)?),
        Term::Inv(x) => s.inv_or_err(eval(x, s, a)?)?,
        Term::Add(l, r) => s.add(eval(l, s, a)?, eval(r, s, a)?),
        Term::Mul(l, r) => s.mul(eval(l, s, a)?, eval(r, s, a)?),
    })
}

/// Decides `s |= eq` by exhausting all assignments of its variables. On
/// failure the witness is the lexicographically least falsifying assignment
/// (variables ordered by name).
pub fn check_equation(s: &FiniteStructure, eq: &Equation) -> Result<Verdict<Assignment>> {
    let vars: Vec<String> = eq.vars().into_iter().collect();
    let mut search = Search::new(vars);
    search.constrain(&eq.lhs, &eq.rhs, true, Role::Goal)?;
    Ok(match search.first_counterexample(s)? {
        None => Verdict::Holds,
        Some(values) => Verdict::Fails(Assignment::from_search(search.vars(), &values)),
    })
}

/// Per-axiom results of checking a named axiom set.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub set: AxiomSet,
    pub results: Vec<(&'static str, Equation, Verdict<Assignment>)>,
    /// `0 != 1`.
    pub nontrivial: bool,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|(_, _, v)| v.holds())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &Assignment)> {
        self.results
            .iter()
            .filter_map(|(name, _, v)| v.witness().map(|w| (*name, w)))
    }

    pub fn verdict(&self, axiom: &str) -> Option<&Verdict<Assignment>> {
        self.results
            .iter()
            .find(|(n, _, _)| *n == axiom)
            .map(|(_, _, v)| v)
    }
}

pub fn check_axiom_set(s: &FiniteStructure, set: AxiomSet) -> Result<AxiomReport> {
    let mut results = Vec::new();
    for ax in set.axioms() {
        let verdict = check_equation(s, &ax.equation)?;
        results.push((ax.name, ax.equation, verdict));
    }
    Ok(AxiomReport {
        set,
        results,
        nontrivial: !s.is_trivial(),
    })
}

/// Checks that `numeral(k)` evaluates to the `k`-fold sum of one.
pub fn numeral_agrees(s: &FiniteStructure, k: u64) -> Result<bool> {
    Ok(eval(&numeral(k), s, &Assignment::new())? == s.numeral_value(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_meadows::{build_mdk, build_prime_field};
    use crate::terms::parse_term;

    fn closed(src: &str, s: &FiniteStructure) -> Elem {
        eval(&parse_term(src).unwrap(), s, &Assignment::new()).unwrap()
    }

    #[test]
    fn evaluation() {
        let md6 = build_mdk(6).unwrap();
        assert_eq!(closed("0^-1", &md6), 0);
        // Brute force: 2^-1 is the unique y with 2*2*y = 2 and y*y*2 = y mod 6.
        let y = (0..6u32)
            .find(|y| (4 * y) % 6 == 2 && (y * y * 2) % 6 == *y)
            .unwrap();
        assert_eq!(closed("2*2^-1", &md6), (2 * y) % 6);
        assert_eq!(closed("2*2^-1", &md6), 4);
        for s in [
            build_prime_field(5).unwrap(),
            md6.clone(),
            build_mdk(1).unwrap(),
        ] {
            for e in s.elements() {
                let a = Assignment::new().with("x", e);
                assert_eq!(eval(&parse_term("x+0").unwrap(), &s, &a).unwrap(), e);
            }
        }
    }

    #[test]
    fn evaluation_errors() {
        let md6 = build_mdk(6).unwrap();
        assert_eq!(
            eval(&parse_term("x").unwrap(), &md6, &Assignment::new()),
            Err(Error::UnboundVariable("x".into()))
        );
        let ring = FiniteStructure::integers_mod(4).unwrap();
        assert!(matches!(
            eval(&parse_term("1^-1").unwrap(), &ring, &Assignment::new()),
            Err(Error::MissingInverseTable(_))
        ));
        assert!(matches!(
            check_equation(&ring, &Equation::parse("x^-1 = x").unwrap()),
            Err(Error::MissingInverseTable(_))
        ));
    }

    #[test]
    fn equations() {
        let z2 = build_prime_field(2).unwrap();
        let md6 = build_mdk(6).unwrap();
        let v = check_equation(&z2, &Equation::parse("(1+1)*(1+1)^-1 = 1").unwrap()).unwrap();
        assert_eq!(v, Verdict::Fails(Assignment::new()));
        let v = check_equation(&md6, &Equation::parse("x*(x*x^-1) = x").unwrap()).unwrap();
        assert!(v.holds());
        let v = check_equation(&md6, &Equation::parse("x*x^-1 = 1").unwrap()).unwrap();
        assert_eq!(v, Verdict::Fails(Assignment::new().with("x", 0)));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let z5 = build_prime_field(5).unwrap();
        // x + y = y fails first at x=1, y=0.
        let v = check_equation(&z5, &Equation::parse("x + y = y").unwrap()).unwrap();
        assert_eq!(
            v,
            Verdict::Fails(Assignment::new().with("x", 1).with("y", 0))
        );
    }

    #[test]
    fn axiom_sets() {
        let r = check_axiom_set(&build_mdk(10).unwrap(), AxiomSet::Md).unwrap();
        assert_eq!(r.results.len(), 10);
        assert!(r.all_hold());
        assert!(r.nontrivial);

        // Z/4 with the identity as inverse: Ril needs 2*2*2 = 8 = 0 mod 4 to equal 2.
        assert_eq!((2 * 2 * 2) % 4, 0);
        let z4 = FiniteStructure::integers_mod(4)
            .unwrap()
            .with_inverse(Some(vec![0, 1, 2, 3]))
            .unwrap();
        let r = check_axiom_set(&z4, AxiomSet::Md).unwrap();
        assert_eq!(
            r.verdict("Ril"),
            Some(&Verdict::Fails(Assignment::new().with("x", 2)))
        );
        assert!(!z4.is_meadow());

        let trivial = build_mdk(1).unwrap();
        let r = check_axiom_set(&trivial, AxiomSet::Md).unwrap();
        assert!(r.all_hold());
        assert!(!r.nontrivial);
    }

    #[test]
    fn characteristics() {
        assert_eq!(build_mdk(6).unwrap().characteristic().unwrap(), 6);
        assert_eq!(build_prime_field(7).unwrap().characteristic().unwrap(), 7);
        assert_eq!(build_mdk(1).unwrap().characteristic().unwrap(), 1);
        let md6 = build_mdk(6).unwrap();
        for k in 0..20 {
            assert!(numeral_agrees(&md6, k).unwrap());
            let lit = eval(&crate::terms::literal(k), &md6, &Assignment::new()).unwrap();
            assert_eq!(lit, eval(&numeral(k), &md6, &Assignment::new()).unwrap());
        }
    }

    #[test]
    fn idempotents_and_units() {
        assert_eq!(build_prime_field(5).unwrap().idempotents(), vec![0, 1]);
        let brute: Vec<u32> = (0..6).filter(|e| (e * e) % 6 == *e).collect();
        assert_eq!(build_mdk(6).unwrap().idempotents(), brute);
        assert_eq!(brute, vec![0, 1, 3, 4]);
        assert_eq!(build_mdk(6).unwrap().unit_of(3).unwrap(), 3);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let mut t = FiniteStructure::integers_mod(3).unwrap().tables();
        t.add[4] = 7;
        assert!(matches!(
            FiniteStructure::new("bad", t),
            Err(Error::InvalidStructure(_))
        ));
        let t = Tables {
            size: 0,
            ..Default::default()
        };
        assert!(FiniteStructure::new("empty", t).is_err());
    }
}
