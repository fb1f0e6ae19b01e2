//! Embedding a finite meadow into a product of zero-totalized fields.

use std::sync::Arc;

use super::{build_galois_field, build_prime_field};
use crate::arith::prime_factors;
use crate::error::{Error, Result};
use crate::logic::AxiomSet;
use crate::structures::{
    check_axiom_set, find_homomorphisms, product, Elem, FiniteStructure, Homomorphism,
};

/// A finite meadow as a subalgebra of a product of fields.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Epimorphisms onto fields, sorted by target size and then by map.
    pub components: Vec<Homomorphism>,
    /// The product of the component targets, in the same order.
    pub product: Arc<FiniteStructure>,
    /// `x -> (H_1(x), ..., H_n(x))`, injective.
    pub diagonal: Homomorphism,
}

/// Candidate fields of size at most `n` whose characteristic divides `c`,
/// smallest first.
fn candidate_fields(c: u64, n: usize) -> Result<Vec<Arc<FiniteStructure>>> {
    let mut orders = Vec::new();
    let mut primes = prime_factors(c);
    primes.dedup();
    for p in primes {
        let (mut q, mut m) = (p, 1u32);
        while q as usize <= n {
            orders.push((q, p, m));
            m += 1;
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
    }
    orders.sort();
    orders
        .into_iter()
        .map(|(_, p, m)| {
            let f = if m == 1 {
                build_prime_field(p)?
            } else {
                build_galois_field(p, m)?
            };
            Ok(Arc::new(f))
        })
        .collect()
}

/// For every non-zero `x`, finds an epimorphism onto a field that does not
/// kill `x`, and combines the distinct ones into an embedding.
pub fn decompose(s: &Arc<FiniteStructure>) -> Result<Decomposition> {
    if !s.has_inverse() || s.is_trivial() {
        return Err(Error::NotAMeadow(format!(
            "{} is not a non-trivial meadow",
            s.name()
        )));
    }
    let report = check_axiom_set(s, AxiomSet::Md)?;
    if let Some((axiom, w)) = report.failures().next() {
        return Err(Error::NotAMeadow(format!(
            "{} fails {axiom} at {w}",
            s.name()
        )));
    }
    let fields = candidate_fields(s.characteristic()?, s.size())?;
    let mut epis: Vec<Option<Vec<Homomorphism>>> = vec![None; fields.len()];
    let mut components: Vec<Homomorphism> = Vec::new();

    for x in s.elements().filter(|&x| x != s.zero()) {
        if components.iter().any(|h| h.apply(x) != h.target().zero()) {
            continue;
        }
        let mut found = None;
        for (i, f) in fields.iter().enumerate() {
            if epis[i].is_none() {
                let onto = find_homomorphisms(s, f, true)?
                    .into_iter()
                    .filter(|h| h.is_surjective())
                    .collect();
                epis[i] = Some(onto);
            }
            let cached = epis[i].as_ref().expect("filled above");
            if let Some(h) = cached.iter().find(|h| h.apply(x) != f.zero()) {
                found = Some(h.clone());
                break;
            }
        }
        components.push(found.ok_or(Error::DecompositionNotFound { element: x })?);
    }

    components.sort_by(|a, b| (a.target().size(), a.map()).cmp(&(b.target().size(), b.map())));
    components.dedup_by(|a, b| a.map() == b.map() && a.target().same_tables(b.target()));

    let targets: Vec<FiniteStructure> = components.iter().map(|h| (**h.target()).clone()).collect();
    let prod = Arc::new(product(&targets)?);
    let map: Vec<Elem> = s
        .elements()
        .map(|x| {
            let mut idx = 0usize;
            for h in components.iter().rev() {
                idx = idx * h.target().size() + h.apply(x) as usize;
            }
            idx as Elem
        })
        .collect();
    let diagonal = Homomorphism::new(s.clone(), prod.clone(), map, true)?;
    if !diagonal.is_injective() {
        return Err(Error::DecompositionNotFound { element: s.zero() });
    }
    Ok(Decomposition {
        components,
        product: prod,
        diagonal,
    })
}
