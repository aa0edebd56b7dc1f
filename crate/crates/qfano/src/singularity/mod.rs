//! Reid–Tai ages, Jacobian ranks, singular loci and the ordinary cA classifier.

mod simple;

pub use simple::{SimpleContractionData, SimpleContractionPredicates};

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{dim, GbConfig, GbError};
use crate::poly::univariate::binary_form_squarefree;
use crate::poly::{Poly, PolyError, Ring, Scalar};
use crate::vgit::CyclicQuotientType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SingularityError {
    #[error("r must be at least 1")]
    BadOrder,
    #[error("f has no x1*x2 term with invertible coefficient")]
    NoAxisProduct,
    #[error("f involves variables other than the four given ones")]
    ExtraVariables,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ReidTai {
    Terminal,
    CanonicalNotTerminal,
    NotCanonical,
    /// The action contains a quasi-reflection; the age criterion does not apply.
    Inapplicable(String),
}

/// Drops the kernel of a non-faithful cyclic action: 1/r(a) with g | r, g | a_i becomes 1/(r/g)(a/g).
pub fn faithful(t: &CyclicQuotientType) -> CyclicQuotientType {
    let mut g = t.r;
    for &a in &t.weights {
        g = gcd(g, a);
    }
    if g <= 1 {
        return t.clone();
    }
    CyclicQuotientType {
        r: t.r / g,
        weights: t.weights.iter().map(|a| a / g).collect(),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Age of the k-th power of the generator, times r.
pub fn age_times_r(t: &CyclicQuotientType, k: u64) -> u64 {
    t.weights.iter().map(|&a| (k * a) % t.r).sum()
}

pub fn reid_tai(t: &CyclicQuotientType) -> Result<ReidTai, SingularityError> {
    if t.r < 1 {
        return Err(SingularityError::BadOrder);
    }
    let f = faithful(t);
    if f.r == 1 {
        return Ok(ReidTai::Terminal);
    }
    for k in 1..f.r {
        let moved = f.weights.iter().filter(|&&a| (k * a) % f.r != 0).count();
        if moved == 1 {
            return Ok(ReidTai::Inapplicable(format!("g^{} is a quasi-reflection", k)));
        }
    }
    let min = (1..f.r).map(|k| age_times_r(&f, k)).min().unwrap();
    Ok(if min > f.r {
        ReidTai::Terminal
    } else if min == f.r {
        ReidTai::CanonicalNotTerminal
    } else {
        ReidTai::NotCanonical
    })
}

/// Rank of a matrix of field elements by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank of the Jacobian of `polys` (w.r.t. all ring variables) at `point`.
pub fn jacobian_rank(polys: &[Poly], point: &std::collections::HashMap<String, Scalar>) -> Result<usize, SingularityError> {
    if polys.is_empty() {
        return Ok(0);
    }
    let ring = polys[0].ring().clone();
    let mut m = Vec::new();
    for p in polys {
        let mut row = Vec::new();
        for i in 0..ring.nvars() {
            row.push(p.diff(i).eval(point)?);
        }
        m.push(row);
    }
    Ok(rank(m))
}

/// Dimension of the singular locus of {hyp = 0}, with `restrict` pinning variables to values
/// (those variables are not differentiated). -1 means smooth.
pub fn singular_dim(hyp: &Poly, restrict: &[(&str, Poly)], cfg: &GbConfig) -> Result<i64, SingularityError> {
    let ring = hyp.ring();
    let h = hyp.subs_named(restrict)?;
    let pinned: Vec<usize> = restrict.iter().map(|(n, _)| ring.idx(n)).collect::<Result<_, _>>()?;
    let mut gens = vec![h.clone()];
    for i in 0..ring.nvars() {
        if !pinned.contains(&i) {
            gens.push(h.diff(i));
        }
    }
    for (n, v) in restrict {
        gens.push(&ring.var(n)? - v);
    }
    Ok(dim(ring, &gens, cfg)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CaVerdict {
    /// Ordinary cA_{n}.
    OrdinaryCA(u32),
    HypothesisFailed(String),
    NotSquarefree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaClassification {
    pub verdict: CaVerdict,
    pub r: u32,
    pub leading_form: Poly,
}

/// Classifies f = c*x1*x2 + g under weights (r1, r2, 1, 1) on (x1, x2, z, w).
pub fn classify_ca(f: &Poly, axes: (&str, &str), transverse: (&str, &str), weights: (u32, u32)) -> Result<CaClassification, SingularityError> {
    let ring = f.ring();
    let (x1, x2) = (ring.idx(axes.0)?, ring.idx(axes.1)?);
    let (z, w) = (ring.idx(transverse.0)?, ring.idx(transverse.1)?);
    let four = [x1, x2, z, w];
    if f.vars_used().iter().any(|v| !four.contains(v)) {
        return Err(SingularityError::ExtraVariables);
    }
    let x1x2 = &Poly::var_idx(ring, x1) * &Poly::var_idx(ring, x2);
    let c = f.coeff(&x1x2.terms()[0].0);
    let inv = c.inv().ok_or(SingularityError::NoAxisProduct)?;
    let g = &f.scale(&inv) - &x1x2;
    let (r1, r2) = weights;
    let r = r1 + r2;
    let mut wt = vec![0i64; ring.nvars()];
    wt[x1] = r1 as i64;
    wt[x2] = r2 as i64;
    wt[z] = 1;
    wt[w] = 1;
    let leading = g.min_part_by(&wt);
    let fail = |msg: String| {
        Ok(CaClassification {
            verdict: CaVerdict::HypothesisFailed(msg),
            r,
            leading_form: leading.clone(),
        })
    };
    if r1 < r2 {
        return fail(format!("weights ({},{}) are not decreasing", r1, r2));
    }
    match g.order_in(&four) {
        Some(o) if o < 3 => return fail(format!("g has order {} < 3", o)),
        _ => {}
    }
    match g.min_weight_by(&wt) {
        Some(m) if m == r as i64 => {}
        Some(m) => return fail(format!("g has weight {} != {}", m, r)),
        None => return fail("g is zero".to_string()),
    }
    if leading.uses_var(x1) || leading.uses_var(x2) {
        return fail("weight-r part of g involves the axis variables".to_string());
    }
    let verdict = if binary_form_squarefree(&leading, z, w, r) {
        CaVerdict::OrdinaryCA(r - 1)
    } else {
        CaVerdict::NotSquarefree
    };
    Ok(CaClassification {
        verdict,
        r,
        leading_form: leading,
    })
}

/// Rank of the quadratic part of f at the origin in the given variables.
pub fn quadratic_rank(f: &Poly, vars: &[&str]) -> Result<usize, SingularityError> {
    let ring = f.ring();
    let idx: Vec<usize> = vars.iter().map(|v| ring.idx(v)).collect::<Result<_, _>>()?;
    let q = f.degree_part(&idx, 2);
    let zero = ring.field().zero();
    let origin: Vec<Scalar> = vec![zero; ring.nvars()];
    let mut m = Vec::new();
    for &i in &idx {
        let di = q.diff(i);
        m.push(idx.iter().map(|&j| di.diff(j).eval_slice(&origin)).collect());
    }
    Ok(rank(m))
}

/// Convenience for tests and examples: ring on exactly four variables.
pub fn germ_ring(names: [&str; 4], field: crate::poly::Field) -> Result<Ring, PolyError> {
    Ring::new(&names, vec![], field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn cq(r: u64, a: &[i64]) -> CyclicQuotientType {
        CyclicQuotientType::new(r, a)
    }

    #[test]
    fn reid_tai_examples() {
        assert_eq!(reid_tai(&cq(8, &[1, 1, 7])).unwrap(), ReidTai::Terminal);
        assert_eq!(reid_tai(&cq(2, &[1, 1])).unwrap(), ReidTai::CanonicalNotTerminal);
        assert_eq!(reid_tai(&cq(3, &[1, 1])).unwrap(), ReidTai::NotCanonical);
        for d in 2..=7 {
            assert_eq!(reid_tai(&cq(d + 1, &[1, 1, d as i64])).unwrap(), ReidTai::Terminal);
        }
        assert!(matches!(reid_tai(&cq(3, &[1, 0, 0])).unwrap(), ReidTai::Inapplicable(_)));
        // non-faithful: 1/4(2,2,2) is 1/2(1,1,1)
        assert_eq!(faithful(&cq(4, &[2, 2, 2])), cq(2, &[1, 1, 1]));
        assert_eq!(reid_tai(&cq(4, &[2, 2, 2])).unwrap(), ReidTai::Terminal);
    }

    #[test]
    fn jacobian_examples() {
        let r = Ring::plain(&["x", "y"]);
        let pt = |a: i64, b: i64| {
            [("x", a), ("y", b)]
                .iter()
                .map(|(n, v)| (n.to_string(), Field::Rationals.from_int(*v)))
                .collect()
        };
        let f = parse_poly(&r, "x^2 + y^2 - 1").unwrap();
        assert_eq!(jacobian_rank(&[f], &pt(1, 0)).unwrap(), 1);
        let g = vec![parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "y^2").unwrap()];
        assert_eq!(jacobian_rank(&g, &pt(0, 0)).unwrap(), 0);
    }

    #[test]
    fn singular_loci() {
        let r = Ring::new(&["x", "y", "z"], vec![], Field::Prime(32003)).unwrap();
        let cfg = GbConfig::default();
        let cone = parse_poly(&r, "x^2 + y^2 + z^2").unwrap();
        assert_eq!(singular_dim(&cone, &[], &cfg).unwrap(), 0);
        let q = parse_poly(&r, "x^2 + y^2 + z^2 - 1").unwrap();
        assert_eq!(singular_dim(&q, &[], &cfg).unwrap(), -1);
        let cyl = parse_poly(&r, "x^2 + y^2").unwrap();
        assert_eq!(singular_dim(&cyl, &[("z", r.int(1))], &cfg).unwrap(), 0);
    }

    #[test]
    fn ca_examples() {
        let r = germ_ring(["x", "y", "z", "w"], Field::Rationals).unwrap();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let c = classify_ca(&p("x*y + z^2 + w^2"), ("x", "y"), ("z", "w"), (1, 1)).unwrap();
        assert_eq!(c.verdict, CaVerdict::HypothesisFailed("g has order 2 < 3".into()));
        assert_eq!(quadratic_rank(&p("x*y + z^2 + w^2"), &["x", "y", "z", "w"]).unwrap(), 4);
        let c = classify_ca(&p("x*y + z*w*(z + w)"), ("x", "y"), ("z", "w"), (2, 1)).unwrap();
        assert_eq!(c.verdict, CaVerdict::OrdinaryCA(2));
        let c = classify_ca(&p("x*y + z^2*w"), ("x", "y"), ("z", "w"), (2, 1)).unwrap();
        assert_eq!(c.verdict, CaVerdict::NotSquarefree);
        assert_eq!(
            classify_ca(&p("z^3 + w^3"), ("x", "y"), ("z", "w"), (2, 1)),
            Err(SingularityError::NoAxisProduct)
        );
        let c = classify_ca(&p("2*x*y + x^3 + z^3 - w^3"), ("x", "y"), ("z", "w"), (1, 2)).unwrap();
        assert!(matches!(c.verdict, CaVerdict::HypothesisFailed(_)));
    }
}
