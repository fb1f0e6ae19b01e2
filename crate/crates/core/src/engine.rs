//! Exhaustive assignment search over a finite structure.
//!
//! Terms are hash-consed into a flat node list. Every node is tagged with
//! the deepest variable it depends on, so a node is recomputed only when
//! that variable changes. Literal constraints are checked as soon as their
//! operands are known, pruning whole subtrees of the assignment space.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::structures::{Elem, FiniteStructure};
use crate::terms::Term;

// Below this many assignments the search stays on the calling thread.
const PARALLEL_THRESHOLD: u128 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Zero,
    One,
    Var(usize),
    Neg(usize),
    Inv(usize),
    Add(usize, usize),
    Mul(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Role {
    /// Must hold for the assignment to be a candidate counterexample.
    Guard,
    /// A candidate counterexample is one where this fails.
    Goal,
}

#[derive(Debug, Clone, Copy)]
struct Constraint {
    lhs: usize,
    rhs: usize,
    equal: bool,
    role: Role,
}

/// A compiled set of constraints over the variables `vars` (in search order).
#[derive(Debug, Clone)]
pub(crate) struct Search {
    vars: Vec<String>,
    nodes: Vec<Node>,
    levels: Vec<usize>,
    by_level: Vec<Vec<usize>>,
    constraints: Vec<Constraint>,
    cons_by_level: Vec<Vec<usize>>,
    interned: HashMap<Node, usize>,
    uses_inverse: bool,
}

enum Step {
    Prune,
    Continue,
}

impl Search {
    pub(crate) fn new(vars: Vec<String>) -> Self {
        let depth = vars.len() + 1;
        Search {
            vars,
            nodes: Vec::new(),
            levels: Vec::new(),
            by_level: vec![Vec::new(); depth],
            constraints: Vec::new(),
            cons_by_level: vec![Vec::new(); depth],
            interned: HashMap::new(),
            uses_inverse: false,
        }
    }

    pub(crate) fn vars(&self) -> &[String] {
        &self.vars
    }

    fn push(&mut self, node: Node, level: usize) -> usize {
        if let Some(&id) = self.interned.get(&node) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(node);
        self.levels.push(level);
        self.by_level[level].push(id);
        self.interned.insert(node, id);
        id
    }

    fn intern(&mut self, t: &Term) -> Result<usize> {
        Ok(match t {
            Term::Zero => self.push(Node::Zero, 0),
            Term::One => self.push(Node::One, 0),
            Term::Var(v) => {
                let i = self
                    .vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
                self.push(Node::Var(i), i + 1)
            }
            Term::Neg(a) => {
                let a = self.intern(a)?;
                self.push(Node::Neg(a), self.levels[a])
            }
            Term::Inv(a) => {
                self.uses_inverse = true;
                let a = self.intern(a)?;
                self.push(Node::Inv(a), self.levels[a])
            }
            Term::Add(a, b) => {
                let (a, b) = (self.intern(a)?, self.intern(b)?);
                self.push(Node::Add(a, b), self.levels[a].max(self.levels[b]))
            }
            Term::Mul(a, b) => {
                let (a, b) = (self.intern(a)?, self.intern(b)?);
                self.push(Node::Mul(a, b), self.levels[a].max(self.levels[b]))
            }
        })
    }

    /// Adds the literal `lhs = rhs` (or `lhs != rhs` when `equal` is false).
    pub(crate) fn constrain(
        &mut self,
        lhs: &Term,
        rhs: &Term,
        equal: bool,
        role: Role,
    ) -> Result<()> {
        let (l, r) = (self.intern(lhs)?, self.intern(rhs)?);
        let level = self.levels[l].max(self.levels[r]);
        self.cons_by_level[level].push(self.constraints.len());
        self.constraints.push(Constraint {
            lhs: l,
            rhs: r,
            equal,
            role,
        });
        Ok(())
    }

    #[inline]
    fn eval_level(
        &self,
        s: &FiniteStructure,
        inv: &[Elem],
        level: usize,
        vals: &mut [Elem],
        assign: &[Elem],
    ) {
        let n = s.size();
        for &id in &self.by_level[level] {
            vals[id] = match self.nodes[id] {
                Node::Zero => s.zero(),
                Node::One => s.one(),
                Node::Var(i) => assign[i],
                Node::Neg(a) => s.neg_table()[vals[a] as usize],
                Node::Inv(a) => inv[vals[a] as usize],
                Node::Add(a, b) => s.add_table()[vals[a] as usize * n + vals[b] as usize],
                Node::Mul(a, b) => s.mul_table()[vals[a] as usize * n + vals[b] as usize],
            };
        }
    }

    #[inline]
    fn step(&self, level: usize, vals: &[Elem]) -> Step {
        for &c in &self.cons_by_level[level] {
            let c = &self.constraints[c];
            let holds = (vals[c.lhs] == vals[c.rhs]) == c.equal;
            match (c.role, holds) {
                (Role::Guard, false) | (Role::Goal, true) => return Step::Prune,
                _ => {}
            }
        }
        Step::Continue
    }

    fn descend(
        &self,
        s: &FiniteStructure,
        inv: &[Elem],
        level: usize,
        vals: &mut [Elem],
        assign: &mut [Elem],
    ) -> bool {
        self.eval_level(s, inv, level, vals, assign);
        if let Step::Prune = self.step(level, vals) {
            return false;
        }
        if level == self.vars.len() {
            return true;
        }
        for v in 0..s.size() as Elem {
            assign[level] = v;
            if self.descend(s, inv, level + 1, vals, assign) {
                return true;
            }
        }
        false
    }

    /// Lexicographically least counterexample (variables in search order),
    /// or `None` when no assignment violates the constraints.
    pub(crate) fn first_counterexample(&self, s: &FiniteStructure) -> Result<Option<Vec<Elem>>> {
        let empty = Vec::new();
        let inv: &[Elem] = match s.inv_table() {
            Some(t) => t,
            None if self.uses_inverse => {
                return Err(Error::MissingInverseTable(s.name().to_string()))
            }
            None => &empty,
        };
        let m = self.vars.len();
        let mut vals = vec![0; self.nodes.len()];
        let mut assign = vec![0; m];
        self.eval_level(s, inv, 0, &mut vals, &assign);
        if let Step::Prune = self.step(0, &vals) {
            return Ok(None);
        }
        if m == 0 {
            return Ok(Some(Vec::new()));
        }
        let space = (s.size() as u128).saturating_pow(m as u32);
        if space < PARALLEL_THRESHOLD {
            let found = self.descend_from_root(s, inv, &mut vals, &mut assign);
            return Ok(found.then_some(assign));
        }
        let hit = (0..s.size() as Elem).into_par_iter().find_map_first(|v| {
            let mut vals = vals.clone();
            let mut assign = vec![0; m];
            assign[0] = v;
            self.descend(s, inv, 1, &mut vals, &mut assign)
                .then_some(assign)
        });
        Ok(hit)
    }

    fn descend_from_root(
        &self,
        s: &FiniteStructure,
        inv: &[Elem],
        vals: &mut [Elem],
        assign: &mut [Elem],
    ) -> bool {
        for v in 0..s.size() as Elem {
            assign[0] = v;
            if self.descend(s, inv, 1, vals, assign) {
                return true;
            }
        }
        false
    }
}
