//! Constructors for the finite meadows: `Md_k`, zero-totalized prime and
//! Galois fields, products and subalgebras, plus decomposition into field
//! images and the classification of minimal meadows.
//!
//! `Md_k` for a non-squarefree `k` is built as `Md_{radical(k)}`: the numeral
//! equation `k = 0` collapses to the one for the radical in every meadow.

mod battery;
mod decompose;
mod galois;

use std::sync::Arc;

pub use battery::standard_battery;
pub use decompose::{decompose, Decomposition};
pub use galois::{build_galois_field, least_irreducible};

use crate::arith::{is_prime, is_squarefree, radical};
use crate::error::{Error, Result};
use crate::inverse::{DoublePseudoinverseScan, InverseStrategy};
use crate::logic::{check_conditional, AxiomSet};
use crate::structures::{
    check_axiom_set, check_size, is_minimal, product, subalgebra_generated, Elem, FiniteStructure,
    DEFAULT_CARRIER_BOUND,
};

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `Z_p` with `0^-1 = 0` and `x^-1 = x^(p-2)` otherwise.
pub fn build_prime_field(p: u64) -> Result<FiniteStructure> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_size(p as u128, DEFAULT_CARRIER_BOUND)?;
    let ring = FiniteStructure::integers_mod(p as usize)?;
    let inv = (0..p)
        .map(|x| {
            if x == 0 {
                0
            } else {
                mod_pow(x, p - 2, p) as Elem
            }
        })
        .collect();
    Ok(ring.with_inverse(Some(inv))?.with_name(format!("Z_{p}")))
}

/// `Md_k`, using the unique double pseudo-inverse scan for `^-1`.
pub fn build_mdk(k: u64) -> Result<FiniteStructure> {
    build_mdk_with(k, &DoublePseudoinverseScan)
}

/// `Md_k` as `Z/radical(k)` with the meadow inverse computed by `strategy`.
pub fn build_mdk_with(k: u64, strategy: &dyn InverseStrategy) -> Result<FiniteStructure> {
    if k == 0 {
        return Err(Error::InvalidStructure("Md_k needs k >= 1".into()));
    }
    let r = radical(k);
    check_size(r as u128, DEFAULT_CARRIER_BOUND)?;
    let ring = FiniteStructure::integers_mod(r as usize)?;
    let inv = strategy.inverse_table(&ring)?;
    Ok(ring.with_inverse(Some(inv))?.with_name(format!("Md_{k}")))
}

/// The meadow inverse of `n` in `Z/k` read off the power sequence
/// `n^0, n^1, ...`: for a repeat `n^K = n^l` with `K > l + 1`, the inverse
/// is `n^(K - 1 - l)`.
pub fn inverse_by_power_cycle(n: u64, k: u64) -> u64 {
    assert!(k >= 1 && n < k, "need 0 <= n < k");
    if n == 0 {
        return 0;
    }
    let mul = |a: u64, b: u64| a * b % k;
    power_cycle(1 % k, n, mul, k as usize)
}

/// [`inverse_by_power_cycle`] in the multiplicative monoid of `s`.
pub fn power_cycle_inverse(s: &FiniteStructure, x: Elem) -> Elem {
    if x == s.zero() {
        return s.zero();
    }
    power_cycle(
        s.one() as u64,
        x as u64,
        |a, b| s.mul(a as Elem, b as Elem) as u64,
        s.size(),
    ) as Elem
}

fn power_cycle(one: u64, n: u64, mul: impl Fn(u64, u64) -> u64, size: usize) -> u64 {
    // first[v] = least exponent e with n^e = v.
    let mut first = vec![usize::MAX; size];
    let mut powers = Vec::with_capacity(size + 1);
    let mut cur = one;
    let (start, cycle) = loop {
        let e = powers.len();
        match first[cur as usize] {
            usize::MAX => {
                first[cur as usize] = e;
                powers.push(cur);
                cur = mul(cur, n);
            }
            l => break (l, e - l),
        }
    };
    // K = start + c * cycle for the least c with K > start + 1.
    let big_k = if cycle >= 2 { start + cycle } else { start + 2 };
    let i = big_k - 1 - start;
    // n^i, with i possibly beyond the recorded prefix.
    let idx = if i < powers.len() {
        i
    } else {
        start + (i - start) % cycle
    };
    powers[idx]
}

/// How a meadow was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeadowKind {
    Mdk {
        k: u64,
        radical: u64,
    },
    PrimeField(u64),
    GaloisField {
        p: u64,
        m: u32,
        modulus: Vec<u64>,
    },
    Product(Vec<MeadowDescriptor>),
    Subalgebra {
        parent: Box<MeadowDescriptor>,
        seeds: Vec<Elem>,
    },
}

/// A constructed meadow together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeadowDescriptor {
    pub kind: MeadowKind,
    pub realized: Arc<FiniteStructure>,
}

impl MeadowDescriptor {
    pub fn mdk(k: u64) -> Result<Self> {
        Ok(MeadowDescriptor {
            kind: MeadowKind::Mdk {
                k,
                radical: radical(k),
            },
            realized: Arc::new(build_mdk(k)?),
        })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(MeadowDescriptor {
            kind: MeadowKind::PrimeField(p),
            realized: Arc::new(build_prime_field(p)?),
        })
    }

    pub fn galois_field(p: u64, m: u32) -> Result<Self> {
        let modulus = least_irreducible(p, m)?;
        Ok(MeadowDescriptor {
            kind: MeadowKind::GaloisField { p, m, modulus },
            realized: Arc::new(build_galois_field(p, m)?),
        })
    }

    pub fn product(factors: Vec<MeadowDescriptor>) -> Result<Self> {
        let structures: Vec<FiniteStructure> =
            factors.iter().map(|f| (*f.realized).clone()).collect();
        let realized = Arc::new(product(&structures)?);
        Ok(MeadowDescriptor {
            kind: MeadowKind::Product(factors),
            realized,
        })
    }

    pub fn subalgebra(parent: MeadowDescriptor, seeds: Vec<Elem>) -> Result<Self> {
        let sub = subalgebra_generated(&parent.realized, &seeds)?;
        Ok(MeadowDescriptor {
            kind: MeadowKind::Subalgebra {
                parent: Box::new(parent),
                seeds,
            },
            realized: sub.structure,
        })
    }

    /// Checks the descriptor invariants: the realized structure is a meadow
    /// and `Md_k` has `radical(k)` elements and characteristic `radical(k)`.
    pub fn validate(&self) -> Result<()> {
        let s = &self.realized;
        let report = check_axiom_set(s, AxiomSet::Md)?;
        if let Some((axiom, w)) = report.failures().next() {
            return Err(Error::NotAMeadow(format!(
                "{} fails {axiom} at {w}",
                s.name()
            )));
        }
        if let MeadowKind::Mdk { radical, .. } = self.kind {
            if s.size() as u64 != radical || s.characteristic()? != radical {
                return Err(Error::InvalidStructure(format!(
                    "{} should have {radical} elements and characteristic {radical}",
                    s.name()
                )));
            }
        }
        Ok(())
    }
}

/// One row of the minimal-meadow classification.
#[derive(Debug, Clone)]
pub struct MinimalRow {
    pub k: u64,
    pub structure: Arc<FiniteStructure>,
    pub characteristic: u64,
    pub minimal: bool,
    /// Non-trivial and satisfies the guarded inverse law.
    pub field: bool,
}

/// `Md_k` for every squarefree `k <= up_to`.
pub fn classify_minimal(up_to: u64) -> Result<Vec<MinimalRow>> {
    check_size(up_to as u128, DEFAULT_CARRIER_BOUND)?;
    let gil = crate::logic::gil();
    (1..=up_to)
        .filter(|&k| is_squarefree(k))
        .map(|k| {
            let s = Arc::new(build_mdk(k)?);
            let field = !s.is_trivial() && check_conditional(&s, &gil)?.holds();
            Ok(MinimalRow {
                k,
                characteristic: s.characteristic()?,
                minimal: is_minimal(&s),
                field,
                structure: s,
            })
        })
        .collect()
}

/// Tab-separated rendering of [`classify_minimal`].
pub fn format_classification(rows: &[MinimalRow]) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::from("k\tsize\tcharacteristic\tminimal\tfield\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.k,
            r.structure.size(),
            r.characteristic,
            yn(r.minimal),
            yn(r.field)
        ));
    }
    out
}
