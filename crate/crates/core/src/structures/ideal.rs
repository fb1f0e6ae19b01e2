use std::sync::Arc;

use super::{Elem, FiniteStructure, Homomorphism, Tables};
use crate::error::{Error, Result};

/// The principal ideal `x*R` viewed as a meadow with unit `1_x`, together
/// with the projection `y -> 1_x * y` onto it.
#[derive(Debug, Clone)]
pub struct PrincipalIdeal {
    pub generator: Elem,
    /// Members of `x*R` in the parent carrier, ascending.
    pub elements: Vec<Elem>,
    /// `1_x`, the unit of the ideal, in the parent carrier.
    pub unit: Elem,
    /// The ideal re-indexed to `0..elements.len()`.
    pub ring: Arc<FiniteStructure>,
    /// `H(y) = 1_x * y`, onto `ring`.
    pub projection: Homomorphism,
}

fn multiples(s: &FiniteStructure, x: Elem) -> Vec<Elem> {
    let mut v: Vec<Elem> = s.elements().map(|r| s.mul(x, r)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn principal_ideal(s: &Arc<FiniteStructure>, x: Elem) -> Result<PrincipalIdeal> {
    if x as usize >= s.size() {
        return Err(Error::InvalidStructure(format!("{x} outside the carrier")));
    }
    let inv = |e: Elem| {
        s.inv(e)
            .ok_or_else(|| Error::MissingInverseTable(s.name().to_string()))
    };
    let unit = s.unit_of(x)?;
    if s.mul(x, unit) != x {
        return Err(Error::NotAMeadow(format!("Ril fails at x={x}")));
    }
    let elements = multiples(s, x);
    let contains = |e: Elem| elements.binary_search(&e).is_ok();
    for (what, e) in [("x", x), ("1_x", unit), ("x^-1", inv(x)?)] {
        if !contains(e) {
            return Err(Error::NotAMeadow(format!("{what} = {e} is not in {x}*R")));
        }
    }
    if multiples(s, unit) != elements {
        return Err(Error::NotAMeadow(format!(
            "1_x*R differs from x*R for x={x}"
        )));
    }

    let mut index = vec![Elem::MAX; s.size()];
    for (i, &e) in elements.iter().enumerate() {
        index[e as usize] = i as Elem;
    }
    let at = |e: Elem| -> Result<Elem> {
        match index[e as usize] {
            Elem::MAX => Err(Error::NotAMeadow(format!(
                "{x}*R is not closed (reached {e})"
            ))),
            i => Ok(i),
        }
    };
    let m = elements.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &elements {
        for &b in &elements {
            add.push(at(s.add(a, b))?);
            mul.push(at(s.mul(a, b))?);
        }
    }
    let tables = Tables {
        size: m,
        zero: at(s.zero())?,
        one: at(unit)?,
        add,
        mul,
        neg: elements
            .iter()
            .map(|&a| at(s.neg(a)))
            .collect::<Result<_>>()?,
        inv: Some(
            elements
                .iter()
                .map(|&a| at(inv(a)?))
                .collect::<Result<_>>()?,
        ),
    };
    let ring = Arc::new(FiniteStructure::new(format!("{}*{}", x, s.name()), tables)?);
    let map = s
        .elements()
        .map(|y| at(s.mul(unit, y)))
        .collect::<Result<Vec<_>>>()?;
    let projection = Homomorphism::new(s.clone(), ring.clone(), map, true)
        .map_err(|e| Error::NotAMeadow(format!("projection onto {x}*R: {e}")))?;
    if !projection.is_surjective() {
        return Err(Error::NotAMeadow(format!(
            "projection onto {x}*R is not onto"
        )));
    }
    Ok(PrincipalIdeal {
        generator: x,
        elements,
        unit,
        ring,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_meadows::{build_mdk, build_prime_field};
    use crate::structures::product;

    #[test]
    fn md6_ideals() {
        let md6 = Arc::new(build_mdk(6).unwrap());
        let i = principal_ideal(&md6, 2).unwrap();
        let brute: Vec<u32> = {
            let mut v: Vec<u32> = (0..6).map(|r| (2 * r) % 6).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(i.elements, brute);
        assert_eq!(i.elements, vec![0, 2, 4]);
        assert_eq!(i.unit, 4);
        // Z/3 in disguise.
        assert!(i.ring.is_zero_totalized_field());

        let whole = principal_ideal(&md6, 1).unwrap();
        assert_eq!(whole.elements.len(), 6);
        assert_eq!(whole.unit, 1);

        assert_eq!(principal_ideal(&md6, 0).unwrap().elements, vec![0]);
    }

    #[test]
    fn every_ideal_of_a_product_projects() {
        let z2 = build_prime_field(2).unwrap();
        let z3 = build_prime_field(3).unwrap();
        let s = Arc::new(product(&[z2, z3]).unwrap());
        for x in s.elements() {
            let i = principal_ideal(&s, x).unwrap();
            assert_eq!(
                i.ring.one(),
                i.elements.binary_search(&i.unit).unwrap() as u32
            );
        }
    }

    #[test]
    fn non_meadow_rejected() {
        let z4 = Arc::new(
            FiniteStructure::integers_mod(4)
                .unwrap()
                .with_inverse(Some(vec![0, 1, 2, 3]))
                .unwrap(),
        );
        assert!(matches!(principal_ideal(&z4, 2), Err(Error::NotAMeadow(_))));
    }
}
