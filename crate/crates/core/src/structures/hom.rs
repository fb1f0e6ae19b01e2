use std::sync::Arc;

use super::product::generating_set;
use super::{Elem, FiniteStructure};
use crate::error::{Error, Result};

/// Default cap on candidate extensions explored by [`find_homomorphisms`].
pub const DEFAULT_SEARCH_BOUND: u64 = 10_000_000;

/// A validated structure-preserving carrier map.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Arc<FiniteStructure>,
    target: Arc<FiniteStructure>,
    map: Vec<Elem>,
    preserves_inverse: bool,
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && self.source.same_tables(&other.source)
            && self.target.same_tables(&other.target)
    }
}

fn check_map(
    src: &FiniteStructure,
    tgt: &FiniteStructure,
    map: &[Elem],
    require_inv: bool,
) -> std::result::Result<(), String> {
    if map.len() != src.size() {
        return Err(format!(
            "map has {} entries for {} elements",
            map.len(),
            src.size()
        ));
    }
    if let Some(bad) = map.iter().find(|&&e| e as usize >= tgt.size()) {
        return Err(format!("image {bad} outside the target carrier"));
    }
    let h = |e: Elem| map[e as usize];
    if h(src.zero()) != tgt.zero() {
        return Err("0 is not preserved".into());
    }
    if h(src.one()) != tgt.one() {
        return Err("1 is not preserved".into());
    }
    for a in src.elements() {
        if h(src.neg(a)) != tgt.neg(h(a)) {
            return Err(format!("- fails at {a}"));
        }
        if require_inv {
            match (src.inv(a), tgt.inv(h(a))) {
                (Some(i), Some(j)) if h(i) == j => {}
                (Some(_), Some(_)) => return Err(format!("^-1 fails at {a}")),
                _ => return Err("inverse tables are missing".into()),
            }
        }
        for b in src.elements() {
            if h(src.add(a, b)) != tgt.add(h(a), h(b)) {
                return Err(format!("+ fails at ({a}, {b})"));
            }
            if h(src.mul(a, b)) != tgt.mul(h(a), h(b)) {
                return Err(format!("* fails at ({a}, {b})"));
            }
        }
    }
    Ok(())
}

impl Homomorphism {
    /// Validates `map` against every ring operation, and `^-1` when
    /// `require_inv` is set.
    pub fn new(
        source: Arc<FiniteStructure>,
        target: Arc<FiniteStructure>,
        map: Vec<Elem>,
        require_inv: bool,
    ) -> Result<Self> {
        check_map(&source, &target, &map, require_inv).map_err(Error::NotAHomomorphism)?;
        Ok(Homomorphism {
            source,
            target,
            map,
            preserves_inverse: require_inv,
        })
    }

    pub fn source(&self) -> &Arc<FiniteStructure> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteStructure> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e as usize]
    }

    /// Whether the map was validated against `^-1` as well.
    pub fn preserves_inverse(&self) -> bool {
        self.preserves_inverse
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map
            .iter()
            .all(|&e| !std::mem::replace(&mut seen[e as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &e in &self.map {
            seen[e as usize] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

const UNMAPPED: Elem = Elem::MAX;

struct Partial {
    map: Vec<Elem>,
    mapped: Vec<Elem>,
}

impl Partial {
    /// Assigns `e -> h` and propagates the consequences through the
    /// operations. Returns false on a conflict.
    fn assign(
        &mut self,
        src: &FiniteStructure,
        tgt: &FiniteStructure,
        e: Elem,
        h: Elem,
        with_inv: bool,
    ) -> bool {
        let mut queue = Vec::new();
        if !self.bind(e, h, &mut queue) {
            return false;
        }
        while let Some(a) = queue.pop() {
            let ha = self.map[a as usize];
            if !self.bind(src.neg(a), tgt.neg(ha), &mut queue) {
                return false;
            }
            if with_inv {
                let (Some(i), Some(j)) = (src.inv(a), tgt.inv(ha)) else {
                    return false;
                };
                if !self.bind(i, j, &mut queue) {
                    return false;
                }
            }
            for k in 0..self.mapped.len() {
                let b = self.mapped[k];
                let hb = self.map[b as usize];
                if !(self.bind(src.add(a, b), tgt.add(ha, hb), &mut queue)
                    && self.bind(src.add(b, a), tgt.add(hb, ha), &mut queue)
                    && self.bind(src.mul(a, b), tgt.mul(ha, hb), &mut queue)
                    && self.bind(src.mul(b, a), tgt.mul(hb, ha), &mut queue))
                {
                    return false;
                }
            }
        }
        true
    }

    fn bind(&mut self, e: Elem, h: Elem, queue: &mut Vec<Elem>) -> bool {
        match self.map[e as usize] {
            UNMAPPED => {
                self.map[e as usize] = h;
                self.mapped.push(e);
                queue.push(e);
                true
            }
            existing => existing == h,
        }
    }
}

/// All homomorphisms `src -> tgt`, found by choosing images for a
/// generating set of `src` and propagating closure.
pub fn find_homomorphisms(
    src: &Arc<FiniteStructure>,
    tgt: &Arc<FiniteStructure>,
    require_inv: bool,
) -> Result<Vec<Homomorphism>> {
    find_homomorphisms_bounded(src, tgt, require_inv, DEFAULT_SEARCH_BOUND)
}

pub fn find_homomorphisms_bounded(
    src: &Arc<FiniteStructure>,
    tgt: &Arc<FiniteStructure>,
    require_inv: bool,
    bound: u64,
) -> Result<Vec<Homomorphism>> {
    if require_inv {
        for s in [src, tgt] {
            if !s.has_inverse() {
                return Err(Error::MissingInverseTable(s.name().to_string()));
            }
        }
    }
    let gens = generating_set(src, require_inv);
    let mut start = Partial {
        map: vec![UNMAPPED; src.size()],
        mapped: Vec::new(),
    };
    let mut found = Vec::new();
    if start.assign(src, tgt, src.zero(), tgt.zero(), require_inv)
        && start.assign(src, tgt, src.one(), tgt.one(), require_inv)
    {
        let mut budget = bound;
        extend(src, tgt, &gens, start, require_inv, &mut budget, &mut found).map_err(
            |e| match e {
                Error::SearchBoundExceeded(_) => Error::SearchBoundExceeded(bound),
                other => other,
            },
        )?;
    }
    found.sort_by(|a: &Homomorphism, b: &Homomorphism| a.map.cmp(&b.map));
    Ok(found)
}

fn extend(
    src: &Arc<FiniteStructure>,
    tgt: &Arc<FiniteStructure>,
    gens: &[Elem],
    state: Partial,
    with_inv: bool,
    budget: &mut u64,
    found: &mut Vec<Homomorphism>,
) -> Result<()> {
    let Some((&g, rest)) = gens.split_first() else {
        debug_assert!(state.map.iter().all(|&e| e != UNMAPPED));
        found.push(Homomorphism::new(
            src.clone(),
            tgt.clone(),
            state.map,
            with_inv,
        )?);
        return Ok(());
    };
    if state.map[g as usize] != UNMAPPED {
        return extend(src, tgt, rest, state, with_inv, budget, found);
    }
    for h in tgt.elements() {
        if *budget == 0 {
            return Err(Error::SearchBoundExceeded(0));
        }
        *budget -= 1;
        let mut next = Partial {
            map: state.map.clone(),
            mapped: state.mapped.clone(),
        };
        if next.assign(src, tgt, g, h, with_inv) {
            extend(src, tgt, rest, next, with_inv, budget, found)?;
        }
    }
    Ok(())
}
