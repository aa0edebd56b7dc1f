use crate::poly::{Mono, Poly, Ring};

use super::{GbConfig, GbError, GroebnerBasis, MonomialOrder};

pub fn contains(ring: &Ring, gens: &[Poly], p: &Poly, order: &MonomialOrder, cfg: &GbConfig) -> Result<bool, GbError> {
    let gb = GroebnerBasis::compute(ring, gens, order, cfg)?;
    gb.reduces_to_zero(p)
}

/// Equality of ideals by comparing reduced grevlex bases.
pub fn ideal_equal(ring: &Ring, a: &[Poly], b: &[Poly], cfg: &GbConfig) -> Result<bool, GbError> {
    let ga = GroebnerBasis::compute(ring, a, &MonomialOrder::Grevlex, cfg)?;
    let gb = GroebnerBasis::compute(ring, b, &MonomialOrder::Grevlex, cfg)?;
    Ok(ga.generators() == gb.generators())
}

/// Generators of the ideal intersected with the subring on the variables not in `drop`.
pub fn eliminate(ring: &Ring, gens: &[Poly], drop: &[usize], cfg: &GbConfig) -> Result<Vec<Poly>, GbError> {
    let gb = GroebnerBasis::compute(ring, gens, &MonomialOrder::block(drop.to_vec()), cfg)?;
    Ok(gb
        .generators()
        .into_iter()
        .filter(|g| drop.iter().all(|&i| !g.uses_var(i)))
        .collect())
}

/// Rabinowitsch trick: p vanishes on V(gens) iff 1 is in (gens, 1 - y p).
pub fn radical_member(ring: &Ring, gens: &[Poly], p: &Poly, cfg: &GbConfig) -> Result<bool, GbError> {
    let mut name = "rabinowitsch".to_string();
    while ring.index(&name).is_some() {
        name.push('_');
    }
    let ext = ring.extend(&[name.as_str()], &[])?;
    let mut g: Vec<Poly> = Vec::with_capacity(gens.len() + 1);
    for x in gens {
        g.push(x.map_to(&ext)?);
    }
    let y = ext.var(&name)?;
    g.push(&ext.one() - &(&y * &p.map_to(&ext)?));
    let gb = GroebnerBasis::compute(&ext, &g, &MonomialOrder::Grevlex, cfg)?;
    Ok(gb.is_unit())
}

/// Krull dimension of R/I from the leading monomials of a Gröbner basis of I:
/// the largest set of variables containing the support of no leading monomial.
pub fn dim_of_basis(gb: &GroebnerBasis) -> i64 {
    if gb.is_unit() {
        return -1;
    }
    let n = gb.ring().nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m: &Mono| m.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |s, (i, _)| s | (1 << i)))
        .collect();
    let mut best = 0usize;
    fn search(i: usize, n: usize, set: u64, size: usize, supports: &[u64], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = set | (1 << i);
        if supports.iter().all(|&s| s & !with != 0) {
            search(i + 1, n, with, size + 1, supports, best);
        }
        search(i + 1, n, set, size, supports, best);
    }
    assert!(n <= 64, "dimension search supports at most 64 variables");
    search(0, n, 0, 0, &supports, &mut best);
    best as i64
}

/// Krull dimension of R/(gens); -1 for the unit ideal.
pub fn dim(ring: &Ring, gens: &[Poly], cfg: &GbConfig) -> Result<i64, GbError> {
    let gb = GroebnerBasis::compute(ring, gens, &MonomialOrder::Grevlex, cfg)?;
    Ok(dim_of_basis(&gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ps(r: &Ring, v: &[&str]) -> Vec<Poly> {
        v.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    #[test]
    fn membership_and_equality() {
        let r = Ring::plain(&["x", "y"]);
        let cfg = GbConfig::default();
        let p = parse_poly(&r, "x^3").unwrap();
        assert!(contains(&r, &ps(&r, &["x^2 + y^2", "x*y"]), &p, &MonomialOrder::Grevlex, &cfg).unwrap());
        assert!(ideal_equal(&r, &ps(&r, &["x"]), &ps(&r, &["2*x"]), &cfg).unwrap());
        assert!(!ideal_equal(&r, &ps(&r, &["x"]), &ps(&r, &["x^2"]), &cfg).unwrap());
    }

    #[test]
    fn twisted_cubic() {
        let r = Ring::plain(&["x", "y", "z"]);
        let cfg = GbConfig::default();
        let e = eliminate(&r, &ps(&r, &["y - x^2", "z - x^3"]), &[0], &cfg).unwrap();
        let expect = ps(&r, &["y^3 - z^2"]);
        assert!(ideal_equal(&r, &e, &expect, &cfg).unwrap());
        assert!(eliminate(&r, &ps(&r, &["x - 1"]), &[0], &cfg).unwrap().is_empty());
        let tc = ps(&r, &["x*z - y^2", "y*z - x*x*x", "z^2 - x^2*y"]);
        assert_eq!(dim(&r, &tc, &cfg).unwrap(), 1);
    }

    #[test]
    fn radicals_and_dims() {
        let r = Ring::plain(&["x", "y"]);
        let cfg = GbConfig::default();
        assert!(radical_member(&r, &ps(&r, &["x^2"]), &r.var("x").unwrap(), &cfg).unwrap());
        assert!(!radical_member(&r, &ps(&r, &["x"]), &r.var("y").unwrap(), &cfg).unwrap());
        let r3 = Ring::plain(&["a", "b", "c"]);
        assert_eq!(dim(&r3, &[], &cfg).unwrap(), 3);
        assert_eq!(dim(&r, &ps(&r, &["x*y - 1"]), &cfg).unwrap(), 1);
        assert_eq!(dim(&r, &ps(&r, &["x", "y - 1", "y"]), &cfg).unwrap(), -1);
    }
}
