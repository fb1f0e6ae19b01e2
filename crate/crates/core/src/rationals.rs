//! The zero-totalized field of rational numbers, with exact arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::{ConditionalEquation, Equation, Literal, Statement};
use crate::structures::Verdict;
use crate::terms::Term;

/// A canonical rational `p/q` (`q >= 1`, `gcd(|p|, q) = 1`) whose inverse
/// is total: `0^-1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalZT(BigRational);

impl RationalZT {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        RationalZT(BigRational::new(numer.into(), denom))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        RationalZT(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        RationalZT(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalZT(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn q_add(&self, other: &Self) -> Self {
        RationalZT(&self.0 + &other.0)
    }

    pub fn q_neg(&self) -> Self {
        RationalZT(-&self.0)
    }

    pub fn q_mul(&self, other: &Self) -> Self {
        RationalZT(&self.0 * &other.0)
    }

    /// `0 -> 0`, `p/q -> q/p` with the sign kept on the numerator.
    pub fn q_inv(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            RationalZT(self.0.recip())
        }
    }
}

impl Add for RationalZT {
    type Output = RationalZT;
    fn add(self, rhs: Self) -> Self {
        self.q_add(&rhs)
    }
}

impl Mul for RationalZT {
    type Output = RationalZT;
    fn mul(self, rhs: Self) -> Self {
        self.q_mul(&rhs)
    }
}

impl Neg for RationalZT {
    type Output = RationalZT;
    fn neg(self) -> Self {
        self.q_neg()
    }
}

impl fmt::Display for RationalZT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for RationalZT {
    type Err = Error;

    /// Accepts `p/q` or an integer, either possibly negative.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Syntax {
            pos: 0,
            msg: format!("{msg}: `{s}`"),
        };
        let int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| bad("invalid rational"))
        };
        match s.split_once('/') {
            None => Ok(RationalZT::integer(int(s)?)),
            Some((p, q)) => {
                let q = int(q)?;
                if q.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(RationalZT::new(int(p)?, q))
            }
        }
    }
}

/// The value of a term together with whether `0^-1` was evaluated anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalTrace {
    pub value: RationalZT,
    pub unsafe_division_used: bool,
}

pub type RationalAssignment = BTreeMap<String, RationalZT>;

pub fn eval_rational(t: &Term, a: &RationalAssignment) -> Result<EvalTrace> {
    let mut unsafe_division_used = false;
    let value = eval_inner(t, a, &mut unsafe_division_used)?;
    Ok(EvalTrace {
        value,
        unsafe_division_used,
    })
}

fn eval_inner(t: &Term, a: &RationalAssignment, flag: &mut bool) -> Result<RationalZT> {
    Ok(match t {
        Term::Zero => RationalZT::zero(),
        Term::One => RationalZT::one(),
        Term::Var(v) => a
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable(v.clone()))?,
        Term::Neg(x) => eval_inner(x, a, flag)?.q_neg(),
        Term::Inv(x) => {
            let v = eval_inner(x, a, flag)?;
            *flag |= v.is_zero();
            v.q_inv()
        }
        Term::Add(l, r) => eval_inner(l, a, flag)?.q_add(&eval_inner(r, a, flag)?),
        Term::Mul(l, r) => eval_inner(l, a, flag)?.q_mul(&eval_inner(r, a, flag)?),
    })
}

/// Seeded source of test rationals. One draw in eight is `0`, one in eight
/// is `1` or `-1`; the rest have numerators in `[-10^6, 10^6]` and
/// denominators in `[1, 10^6]`.
#[derive(Debug, Clone)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

pub const SAMPLE_MAGNITUDE: i64 = 1_000_000;

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> RationalZT {
        match self.rng.gen_range(0..8) {
            0 => RationalZT::zero(),
            1 => RationalZT::integer(if self.rng.gen_bool(0.5) { 1 } else { -1 }),
            _ => {
                let p = self.rng.gen_range(-SAMPLE_MAGNITUDE..=SAMPLE_MAGNITUDE);
                let q = self.rng.gen_range(1..=SAMPLE_MAGNITUDE);
                RationalZT::new(p, q)
            }
        }
    }

    pub fn assignment<'a>(
        &mut self,
        vars: impl IntoIterator<Item = &'a String>,
    ) -> RationalAssignment {
        vars.into_iter()
            .map(|v| (v.clone(), self.sample()))
            .collect()
    }
}

fn literal_holds(l: &Literal, a: &RationalAssignment) -> Result<bool> {
    let lhs = eval_rational(&l.equation.lhs, a)?.value;
    let rhs = eval_rational(&l.equation.rhs, a)?.value;
    Ok((lhs == rhs) == l.positive)
}

fn conditional_holds(ce: &ConditionalEquation, a: &RationalAssignment) -> Result<bool> {
    for p in &ce.premises {
        if !literal_holds(p, a)? {
            return Ok(true);
        }
    }
    literal_holds(&ce.conclusion, a)
}

/// Evaluates both sides at `samples` seeded assignments and reports the
/// first counterexample found. `Holds` means none was found.
pub fn sample_check(
    eq: &Equation,
    samples: usize,
    seed: u64,
) -> Result<Verdict<RationalAssignment>> {
    sample_check_statement(&Statement::Equation(eq.clone()), samples, seed)
}

pub fn sample_check_statement(
    st: &Statement,
    samples: usize,
    seed: u64,
) -> Result<Verdict<RationalAssignment>> {
    let ce = st.as_conditional();
    let vars = ce.vars();
    let mut sampler = RationalSampler::new(seed);
    let draws = if vars.is_empty() { 1 } else { samples };
    for _ in 0..draws {
        let a = sampler.assignment(&vars);
        if !conditional_holds(&ce, &a)? {
            return Ok(Verdict::Fails(a));
        }
    }
    Ok(Verdict::Holds)
}

pub fn format_assignment(a: &RationalAssignment) -> String {
    let parts: Vec<String> = a.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}
