use std::sync::Arc;

use super::{check_size, Elem, FiniteStructure, Homomorphism, Tables};
use crate::error::{Error, Result};

/// Default limit on the number of carrier elements a constructor may produce.
pub const DEFAULT_CARRIER_BOUND: u128 = 1_000_000;

/// Direct product with the default carrier bound.
pub fn product(factors: &[FiniteStructure]) -> Result<FiniteStructure> {
    product_with_bound(factors, DEFAULT_CARRIER_BOUND)
}

/// Direct product with componentwise operations. Element indices are
/// mixed-radix with the first factor varying fastest. The product carries an
/// inverse table iff every factor does.
pub fn product_with_bound(factors: &[FiniteStructure], bound: u128) -> Result<FiniteStructure> {
    if factors.is_empty() {
        return Err(Error::InvalidStructure("product of an empty list".into()));
    }
    let n = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.size() as u128))
        .unwrap_or(u128::MAX);
    check_size(n, bound)?;
    let n = n as usize;

    let encode = |coords: &[Elem]| -> Elem {
        let mut idx = 0usize;
        for (f, &c) in factors.iter().zip(coords).rev() {
            idx = idx * f.size() + c as usize;
        }
        idx as Elem
    };
    let decode: Vec<Vec<Elem>> = (0..n)
        .map(|mut idx| {
            factors
                .iter()
                .map(|f| {
                    let c = idx % f.size();
                    idx /= f.size();
                    c as Elem
                })
                .collect()
        })
        .collect();

    let unary = |op: &dyn Fn(&FiniteStructure, Elem) -> Elem| -> Vec<Elem> {
        decode
            .iter()
            .map(|xs| {
                let cs: Vec<Elem> = factors.iter().zip(xs).map(|(f, &x)| op(f, x)).collect();
                encode(&cs)
            })
            .collect()
    };
    let binary = |op: &dyn Fn(&FiniteStructure, Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut out = Vec::with_capacity(n * n);
        let mut cs = vec![0; factors.len()];
        for xs in &decode {
            for ys in &decode {
                for (i, f) in factors.iter().enumerate() {
                    cs[i] = op(f, xs[i], ys[i]);
                }
                out.push(encode(&cs));
            }
        }
        out
    };

    let zero: Vec<Elem> = factors.iter().map(|f| f.zero()).collect();
    let one: Vec<Elem> = factors.iter().map(|f| f.one()).collect();
    let inv = if factors.iter().all(|f| f.has_inverse()) {
        Some(unary(&|f, x| f.inv(x).expect("checked")))
    } else {
        None
    };
    let tables = Tables {
        size: n,
        zero: encode(&zero),
        one: encode(&one),
        add: binary(&|f, a, b| f.add(a, b)),
        mul: binary(&|f, a, b| f.mul(a, b)),
        neg: unary(&|f, x| f.neg(x)),
        inv,
    };
    let name = factors
        .iter()
        .map(|f| f.name().to_string())
        .collect::<Vec<_>>()
        .join(" x ");
    FiniteStructure::new(format!("({name})"), tables)
}

/// Least subset containing `0`, `1` and `seeds` closed under the ring
/// operations, and under `^-1` when `with_inverse` holds and the structure
/// has an inverse table. Returned in ascending order.
pub(crate) fn closure(s: &FiniteStructure, seeds: &[Elem], with_inverse: bool) -> Vec<Elem> {
    let mut member = vec![false; s.size()];
    let mut order: Vec<Elem> = Vec::new();
    let mut queue: Vec<Elem> = Vec::new();
    let admit = |e: Elem, member: &mut Vec<bool>, queue: &mut Vec<Elem>| {
        if !member[e as usize] {
            member[e as usize] = true;
            queue.push(e);
        }
    };
    for &e in [s.zero(), s.one()].iter().chain(seeds) {
        admit(e, &mut member, &mut queue);
    }
    while let Some(e) = queue.pop() {
        order.push(e);
        admit(s.neg(e), &mut member, &mut queue);
        if with_inverse {
            if let Some(i) = s.inv(e) {
                admit(i, &mut member, &mut queue);
            }
        }
        for &f in &order {
            admit(s.add(e, f), &mut member, &mut queue);
            admit(s.mul(e, f), &mut member, &mut queue);
        }
    }
    order.sort_unstable();
    order
}

/// Greedy generating set: repeatedly adds the least element outside the
/// current closure. Empty for minimal structures.
pub fn generating_set(s: &FiniteStructure, with_inverse: bool) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut covered = closure(s, &gens, with_inverse);
    while covered.len() < s.size() {
        let mut inside = vec![false; s.size()];
        for &e in &covered {
            inside[e as usize] = true;
        }
        let next = s
            .elements()
            .find(|&e| !inside[e as usize])
            .expect("closure is proper");
        gens.push(next);
        covered = closure(s, &gens, with_inverse);
    }
    gens
}

/// A generated subalgebra, re-indexed to `0..m`, and its inclusion map.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub structure: Arc<FiniteStructure>,
    pub inclusion: Homomorphism,
}

impl Subalgebra {
    /// The parent-carrier elements of the subalgebra, ascending.
    pub fn elements(&self) -> &[Elem] {
        self.inclusion.map()
    }
}

pub fn subalgebra_generated(s: &Arc<FiniteStructure>, seeds: &[Elem]) -> Result<Subalgebra> {
    if let Some(bad) = seeds.iter().find(|&&e| e as usize >= s.size()) {
        return Err(Error::InvalidStructure(format!(
            "seed {bad} outside the carrier"
        )));
    }
    let members = closure(s, seeds, true);
    let mut index = vec![Elem::MAX; s.size()];
    for (i, &e) in members.iter().enumerate() {
        index[e as usize] = i as Elem;
    }
    let m = members.len();
    let at = |e: Elem| index[e as usize];
    let binary = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Elem> {
        members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .map(|(a, b)| at(op(a, b)))
            .collect()
    };
    let tables = Tables {
        size: m,
        zero: at(s.zero()),
        one: at(s.one()),
        add: binary(&|a, b| s.add(a, b)),
        mul: binary(&|a, b| s.mul(a, b)),
        neg: members.iter().map(|&a| at(s.neg(a))).collect(),
        inv: s
            .inv_table()
            .map(|t| members.iter().map(|&a| at(t[a as usize])).collect()),
    };
    let name = if seeds.is_empty() {
        format!("<{}>", s.name())
    } else {
        let seeds: Vec<String> = seeds.iter().map(|e| e.to_string()).collect();
        format!("<{}; {}>", s.name(), seeds.join(","))
    };
    let structure = Arc::new(FiniteStructure::new(name, tables)?);
    let inclusion = Homomorphism::new(structure.clone(), s.clone(), members, s.has_inverse())?;
    Ok(Subalgebra {
        structure,
        inclusion,
    })
}

/// True iff the constants alone generate the whole carrier.
pub fn is_minimal(s: &FiniteStructure) -> bool {
    closure(s, &[], true).len() == s.size()
}
