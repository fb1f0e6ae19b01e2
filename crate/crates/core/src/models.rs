//! Named models for statements: finite structures and the zero-totalized
//! rationals, behind one trait, resolved from textual specs such as
//! `mdk:6`, `gf:2,3` or `prod:zp:2,zp:3`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::radical;
use crate::error::{Error, Result};
use crate::finite_meadows::{build_galois_field, build_mdk_with, build_prime_field};
use crate::inverse::InverseRegistry;
use crate::logic::{check_statement, Statement};
use crate::rationals::{
    eval_rational, format_assignment, sample_check_statement, RationalAssignment, RationalZT,
};
use crate::structures::{
    check_size, eval, parse_structure, product_with_bound, Assignment, Elem, FiniteStructure,
    Verdict,
};
use crate::terms::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelClass {
    /// A zero-totalized field.
    Field,
    /// A meadow that is not a field.
    Meadow,
    Other,
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelClass::Field => "field",
            ModelClass::Meadow => "meadow",
            ModelClass::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Finite(Assignment),
    Rational(RationalAssignment),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Finite(a) => a.fmt(f),
            Witness::Rational(a) => f.write_str(&format_assignment(a)),
        }
    }
}

pub trait Model: Send + Sync {
    fn name(&self) -> &str;
    fn class(&self) -> ModelClass;
    fn check(&self, st: &Statement) -> Result<Verdict<Witness>>;
    /// Evaluates `t` with variables bound to textual values and renders the result.
    fn eval(&self, t: &Term, assign: &BTreeMap<String, String>) -> Result<String>;
    /// The underlying table, for finite models.
    fn structure(&self) -> Option<&Arc<FiniteStructure>>;
}

pub struct FiniteModel {
    structure: Arc<FiniteStructure>,
    class: OnceLock<ModelClass>,
}

impl FiniteModel {
    pub fn new(structure: Arc<FiniteStructure>) -> Self {
        FiniteModel {
            structure,
            class: OnceLock::new(),
        }
    }
}

impl Model for FiniteModel {
    fn name(&self) -> &str {
        self.structure.name()
    }

    fn class(&self) -> ModelClass {
        *self.class.get_or_init(|| {
            let s = &self.structure;
            if !s.is_meadow() {
                ModelClass::Other
            } else if s.is_zero_totalized_field() {
                ModelClass::Field
            } else {
                ModelClass::Meadow
            }
        })
    }

    fn check(&self, st: &Statement) -> Result<Verdict<Witness>> {
        Ok(check_statement(&self.structure, st)?.map(Witness::Finite))
    }

    fn eval(&self, t: &Term, assign: &BTreeMap<String, String>) -> Result<String> {
        let n = self.structure.size();
        let mut a = Assignment::new();
        for (k, v) in assign {
            let e: Elem = v
                .trim()
                .parse()
                .ok()
                .filter(|&e: &Elem| (e as usize) < n)
                .ok_or_else(|| Error::Syntax {
                    pos: 0,
                    msg: format!("`{v}` is not an element of 0..{n}"),
                })?;
            a = a.with(k, e);
        }
        Ok(eval(t, &self.structure, &a)?.to_string())
    }

    fn structure(&self) -> Option<&Arc<FiniteStructure>> {
        Some(&self.structure)
    }
}

/// The zero-totalized rationals, checked by seeded sampling.
pub struct RationalModel {
    pub samples: usize,
    pub seed: u64,
}

impl Model for RationalModel {
    fn name(&self) -> &str {
        "Q0"
    }

    fn class(&self) -> ModelClass {
        ModelClass::Field
    }

    fn check(&self, st: &Statement) -> Result<Verdict<Witness>> {
        Ok(sample_check_statement(st, self.samples, self.seed)?.map(Witness::Rational))
    }

    fn eval(&self, t: &Term, assign: &BTreeMap<String, String>) -> Result<String> {
        let a = assign
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.parse::<RationalZT>()?)))
            .collect::<Result<RationalAssignment>>()?;
        let trace = eval_rational(t, &a)?;
        Ok(if trace.unsafe_division_used {
            format!("{} (unsafe)", trace.value)
        } else {
            trace.value.to_string()
        })
    }

    fn structure(&self) -> Option<&Arc<FiniteStructure>> {
        None
    }
}

/// Settings shared by every factory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelOptions {
    pub seed: u64,
    pub samples: usize,
    /// Largest admissible carrier.
    pub bound: u128,
    /// Inverse strategy used for `mdk:`.
    pub inverse: String,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions {
            seed: 0,
            samples: 500,
            bound: 1_000_000,
            inverse: "scan".to_string(),
        }
    }
}

/// Builds models for one spec prefix.
pub trait ModelFactory: Send + Sync {
    fn prefix(&self) -> &'static str;
    /// One-line usage, e.g. `mdk:<k>`.
    fn summary(&self) -> &'static str;
    fn build(&self, arg: &str, registry: &ModelRegistry) -> Result<Box<dyn Model>>;
}

fn finite(s: FiniteStructure) -> Box<dyn Model> {
    Box::new(FiniteModel::new(Arc::new(s)))
}

fn parse_num<T: std::str::FromStr>(spec: &str, arg: &str) -> Result<T> {
    arg.trim()
        .parse()
        .map_err(|_| Error::UnknownModel(spec.to_string()))
}

struct MdkFactory;

impl ModelFactory for MdkFactory {
    fn prefix(&self) -> &'static str {
        "mdk"
    }

    fn summary(&self) -> &'static str {
        "mdk:<k>      initial meadow of characteristic radical(k)"
    }

    fn build(&self, arg: &str, reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        let k: u64 = parse_num(&format!("mdk:{arg}"), arg)?;
        if k > 0 {
            check_size(radical(k) as u128, reg.options.bound)?;
        }
        let strategy = reg.inverses.get(&reg.options.inverse)?;
        Ok(finite(build_mdk_with(k, strategy.as_ref())?))
    }
}

struct PrimeFactory;

impl ModelFactory for PrimeFactory {
    fn prefix(&self) -> &'static str {
        "zp"
    }

    fn summary(&self) -> &'static str {
        "zp:<p>       zero-totalized prime field"
    }

    fn build(&self, arg: &str, reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        let p: u64 = parse_num(&format!("zp:{arg}"), arg)?;
        check_size(p as u128, reg.options.bound)?;
        Ok(finite(build_prime_field(p)?))
    }
}

struct GaloisFactory;

impl ModelFactory for GaloisFactory {
    fn prefix(&self) -> &'static str {
        "gf"
    }

    fn summary(&self) -> &'static str {
        "gf:<p>,<m>   zero-totalized Galois field of p^m elements"
    }

    fn build(&self, arg: &str, reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        let spec = format!("gf:{arg}");
        let (p, m) = arg
            .split_once(',')
            .ok_or_else(|| Error::UnknownModel(spec.clone()))?;
        let (p, m): (u64, u32) = (parse_num(&spec, p)?, parse_num(&spec, m)?);
        let q = p.checked_pow(m).map_or(u128::MAX, u128::from);
        check_size(q, reg.options.bound)?;
        Ok(finite(build_galois_field(p, m)?))
    }
}

struct FileFactory;

impl ModelFactory for FileFactory {
    fn prefix(&self) -> &'static str {
        "file"
    }

    fn summary(&self) -> &'static str {
        "file:<path>  structure file"
    }

    fn build(&self, arg: &str, _reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        let src = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        Ok(finite(parse_structure(&src)?))
    }
}

struct ProductFactory;

/// Splits `a:1,b:2,3,c:4` into `a:1`, `b:2,3`, `c:4`: a piece without `:`
/// continues the previous spec.
fn split_specs(arg: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for piece in arg.split(',') {
        match out.last_mut() {
            Some(last) if !piece.contains(':') && piece.trim() != "q" => {
                last.push(',');
                last.push_str(piece);
            }
            _ => out.push(piece.to_string()),
        }
    }
    out
}

impl ModelFactory for ProductFactory {
    fn prefix(&self) -> &'static str {
        "prod"
    }

    fn summary(&self) -> &'static str {
        "prod:<spec>,<spec>,...  direct product of finite models"
    }

    fn build(&self, arg: &str, reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        let factors = split_specs(arg)
            .iter()
            .map(|s| reg.resolve_structure(s).map(|s| (*s).clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(finite(product_with_bound(&factors, reg.options.bound)?))
    }
}

struct RationalFactory;

impl ModelFactory for RationalFactory {
    fn prefix(&self) -> &'static str {
        "q"
    }

    fn summary(&self) -> &'static str {
        "q            zero-totalized rationals (sampled)"
    }

    fn build(&self, arg: &str, reg: &ModelRegistry) -> Result<Box<dyn Model>> {
        if !arg.is_empty() {
            return Err(Error::UnknownModel(format!("q:{arg}")));
        }
        Ok(Box::new(RationalModel {
            samples: reg.options.samples,
            seed: reg.options.seed,
        }))
    }
}

/// Model factories by prefix.
#[derive(Clone)]
pub struct ModelRegistry {
    factories: BTreeMap<&'static str, Arc<dyn ModelFactory>>,
    pub options: ModelOptions,
    pub inverses: InverseRegistry,
}

impl ModelRegistry {
    pub fn empty(options: ModelOptions) -> Self {
        ModelRegistry {
            factories: BTreeMap::new(),
            options,
            inverses: InverseRegistry::builtin(),
        }
    }

    /// `mdk`, `zp`, `gf`, `file`, `prod` and `q`.
    pub fn builtin(options: ModelOptions) -> Self {
        let mut r = ModelRegistry::empty(options);
        r.register(Arc::new(MdkFactory));
        r.register(Arc::new(PrimeFactory));
        r.register(Arc::new(GaloisFactory));
        r.register(Arc::new(FileFactory));
        r.register(Arc::new(ProductFactory));
        r.register(Arc::new(RationalFactory));
        r
    }

    pub fn register(&mut self, f: Arc<dyn ModelFactory>) {
        self.factories.insert(f.prefix(), f);
    }

    pub fn resolve(&self, spec: &str) -> Result<Box<dyn Model>> {
        let spec = spec.trim();
        let (prefix, arg) = spec.split_once(':').unwrap_or((spec, ""));
        let factory = self
            .factories
            .get(prefix)
            .ok_or_else(|| Error::UnknownModel(spec.to_string()))?;
        factory.build(arg, self)
    }

    /// Like [`resolve`](Self::resolve) but requires a finite model.
    pub fn resolve_structure(&self, spec: &str) -> Result<Arc<FiniteStructure>> {
        self.resolve(spec)?
            .structure()
            .cloned()
            .ok_or_else(|| Error::UnknownModel(format!("{spec} (not a finite model)")))
    }

    pub fn prefixes(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn factories(&self) -> impl Iterator<Item = &Arc<dyn ModelFactory>> {
        self.factories.values()
    }
}

impl Default for ModelRegistry {
    fn default() -> Self {
        ModelRegistry::builtin(ModelOptions::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_term;

    fn no_vars() -> BTreeMap<String, String> {
        BTreeMap::new()
    }

    #[test]
    fn resolves_specs() {
        let reg = ModelRegistry::default();
        assert_eq!(reg.resolve_structure("mdk:6").unwrap().size(), 6);
        assert_eq!(reg.resolve_structure("zp:5").unwrap().name(), "Z_5");
        assert_eq!(reg.resolve_structure("gf:2,3").unwrap().size(), 8);
        let p = reg.resolve_structure("prod:gf:2,2,zp:3").unwrap();
        assert_eq!(p.size(), 12);
        assert_eq!(p.name(), "(GF(2^2) x Z_3)");
        assert!(matches!(reg.resolve("nope:1"), Err(Error::UnknownModel(_))));
        assert!(matches!(reg.resolve("mdk:x"), Err(Error::UnknownModel(_))));
        assert!(matches!(
            reg.resolve_structure("q"),
            Err(Error::UnknownModel(_))
        ));
        assert!(matches!(reg.resolve("zp:4"), Err(Error::NotPrime(4))));
    }

    #[test]
    fn split() {
        assert_eq!(split_specs("zp:2,zp:3"), vec!["zp:2", "zp:3"]);
        assert_eq!(split_specs("gf:2,2,mdk:6"), vec!["gf:2,2", "mdk:6"]);
    }

    #[test]
    fn bound_applies() {
        let reg = ModelRegistry::builtin(ModelOptions {
            bound: 10,
            ..ModelOptions::default()
        });
        assert!(matches!(
            reg.resolve("mdk:30"),
            Err(Error::SizeOverflow { .. })
        ));
        assert!(matches!(
            reg.resolve("prod:zp:3,zp:5"),
            Err(Error::SizeOverflow { .. })
        ));
        assert!(reg.resolve("mdk:10").is_ok());
    }

    #[test]
    fn evaluation() {
        let reg = ModelRegistry::default();
        let t = parse_term("2*2^-1").unwrap();
        assert_eq!(
            reg.resolve("mdk:6").unwrap().eval(&t, &no_vars()).unwrap(),
            "4"
        );
        let q = reg.resolve("q").unwrap();
        assert_eq!(
            q.eval(&parse_term("0^-1").unwrap(), &no_vars()).unwrap(),
            "0 (unsafe)"
        );
        let mut a = no_vars();
        a.insert("x".into(), "-3/4".into());
        assert_eq!(q.eval(&parse_term("x/x").unwrap(), &a).unwrap(), "1");
    }

    #[test]
    fn classes() {
        let reg = ModelRegistry::default();
        assert_eq!(reg.resolve("zp:7").unwrap().class(), ModelClass::Field);
        assert_eq!(reg.resolve("mdk:6").unwrap().class(), ModelClass::Meadow);
        assert_eq!(reg.resolve("mdk:1").unwrap().class(), ModelClass::Meadow);
        assert_eq!(reg.resolve("q").unwrap().class(), ModelClass::Field);
    }

    #[test]
    fn strategies_selectable() {
        for name in ["scan", "power-cycle", "sandwich"] {
            let reg = ModelRegistry::builtin(ModelOptions {
                inverse: name.into(),
                ..ModelOptions::default()
            });
            let s = reg.resolve_structure("mdk:10").unwrap();
            assert_eq!(s.inv_table().unwrap(), &[0, 1, 8, 7, 4, 5, 6, 3, 2, 9]);
        }
        let reg = ModelRegistry::builtin(ModelOptions {
            inverse: "bogus".into(),
            ..ModelOptions::default()
        });
        assert!(matches!(
            reg.resolve("mdk:10"),
            Err(Error::UnknownStrategy(_))
        ));
    }
}
