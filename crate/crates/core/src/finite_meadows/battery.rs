use super::MeadowDescriptor;
use crate::error::Result;

/// A fixed list of finite meadows used to exercise laws: `Md_k`s, prime and
/// Galois fields, products and generated subalgebras of products.
pub fn standard_battery() -> Result<Vec<MeadowDescriptor>> {
    let z = MeadowDescriptor::prime_field;
    let md = MeadowDescriptor::mdk;
    let gf = MeadowDescriptor::galois_field;
    let prod = MeadowDescriptor::product;
    let sub = MeadowDescriptor::subalgebra;

    let mut out = vec![md(1)?];
    for p in [2, 3, 5, 7, 11, 13] {
        out.push(z(p)?);
    }
    for k in [6, 10, 15, 30, 42] {
        out.push(md(k)?);
    }
    for (p, m) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)] {
        out.push(gf(p, m)?);
    }
    out.push(prod(vec![z(2)?, z(2)?])?);
    out.push(prod(vec![z(2)?, z(3)?])?);
    out.push(prod(vec![z(3)?, z(3)?])?);
    out.push(prod(vec![z(2)?, z(2)?, z(2)?])?);
    out.push(prod(vec![gf(2, 2)?, z(3)?])?);
    out.push(prod(vec![z(2)?, md(6)?])?);
    out.push(prod(vec![z(5)?, z(5)?])?);
    out.push(sub(prod(vec![z(2)?, z(2)?])?, vec![])?);
    out.push(sub(prod(vec![z(2)?, z(2)?, z(2)?])?, vec![1])?);
    out.push(sub(prod(vec![z(3)?, z(3)?])?, vec![])?);
    Ok(out)
}
