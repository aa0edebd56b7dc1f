mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qfano::groebner::{dim_of_basis, eliminate, GbConfig, GroebnerBasis, MonomialOrder};
use qfano::poly::{Field, Poly, Ring};

const P: i64 = 32003;

type Sparse = BTreeMap<Vec<u32>, i64>;

fn monomials(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![deg]];
    }
    (0..=deg)
        .flat_map(|k| {
            monomials(n - 1, deg - k).into_iter().map(move |mut m| {
                m.insert(0, k);
                m
            })
        })
        .collect()
}

fn inv(a: i64) -> i64 {
    let (mut r, mut e, mut b) = (1i64, P - 2, a.rem_euclid(P));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Row-reduces `rows` over F_P and reports whether `target` lies in their span.
fn in_span(rows: Vec<Sparse>, target: &Sparse) -> bool {
    let mut basis: Vec<(Vec<u32>, Sparse)> = Vec::new();
    let reduce = |mut v: Sparse, basis: &[(Vec<u32>, Sparse)]| {
        for (pivot, b) in basis {
            if let Some(&c) = v.get(pivot) {
                for (m, x) in b {
                    let e = v.entry(m.clone()).or_insert(0);
                    *e = (*e - c * x).rem_euclid(P);
                }
                v.retain(|_, x| *x != 0);
            }
        }
        v
    };
    for r in rows {
        let v = reduce(r, &basis);
        if let Some((pivot, &c)) = v.iter().next() {
            let pivot = pivot.clone();
            let ci = inv(c);
            let v: Sparse = v.into_iter().map(|(m, x)| (m, x * ci % P)).collect();
            for (_, b) in basis.iter_mut() {
                if let Some(&c) = b.get(&pivot) {
                    for (m, x) in &v {
                        let e = b.entry(m.clone()).or_insert(0);
                        *e = (*e - c * x).rem_euclid(P);
                    }
                    b.retain(|_, x| *x != 0);
                }
            }
            basis.push((pivot, v));
        }
    }
    reduce(target.clone(), &basis).is_empty()
}

fn shift(g: &Sparse, m: &[u32]) -> Sparse {
    g.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), *c)).collect()
}

fn to_poly(r: &Ring, s: &Sparse) -> Poly {
    common::build(r, &s.iter().map(|(e, c)| (e.clone(), *c)).collect())
}

fn homogeneous(deg: u32, coeffs: &[i64]) -> Sparse {
    monomials(3, deg).into_iter().zip(coeffs).map(|(m, &c)| (m, c.rem_euclid(P))).filter(|x| x.1 != 0).collect()
}

fn ring() -> Ring {
    Ring::new(&["x", "y", "z"], vec![], Field::prime(P as u32).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// For homogeneous ideals, membership in degree D is a linear-algebra question on the
    /// degree-D multiples of the generators.
    #[test]
    fn membership_matches_linear_algebra(
        gens in prop::collection::vec((1u32..=3, prop::collection::vec(-3i64..=3, 10)), 1..=3),
        target_deg in 2u32..=5,
        combo in prop::collection::vec(-3i64..=3, 40),
        noise in prop::collection::vec(-1i64..=1, 21),
        member in any::<bool>(),
    ) {
        let r = ring();
        let gens: Vec<Sparse> = gens.iter().map(|(d, c)| homogeneous(*d, c)).filter(|g| !g.is_empty()).collect();
        prop_assume!(!gens.is_empty());
        let mut rows = Vec::new();
        for g in &gens {
            let d = g.keys().next().unwrap().iter().sum::<u32>();
            if d <= target_deg {
                rows.extend(monomials(3, target_deg - d).into_iter().map(|m| shift(g, &m)));
            }
        }
        let mut target = Sparse::new();
        for (row, c) in rows.iter().zip(&combo) {
            for (m, x) in row {
                let e = target.entry(m.clone()).or_insert(0);
                *e = (*e + c * x).rem_euclid(P);
            }
        }
        if !member {
            for (m, c) in monomials(3, target_deg).into_iter().zip(&noise) {
                let e = target.entry(m).or_insert(0);
                *e = (*e + c).rem_euclid(P);
            }
        }
        target.retain(|_, x| *x != 0);
        let want = in_span(rows, &target);
        let polys: Vec<Poly> = gens.iter().map(|g| to_poly(&r, g)).collect();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = GroebnerBasis::compute(&r, &polys, &order, &GbConfig::default()).unwrap();
            prop_assert_eq!(gb.reduces_to_zero(&to_poly(&r, &target)).unwrap(), want);
        }
    }

    #[test]
    fn dimension_is_order_independent(gens in prop::collection::vec(common_terms(), 1..=3)) {
        let r = ring();
        let polys: Vec<Poly> = gens.iter().map(|t| common::build(&r, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let cfg = GbConfig { max_pairs: 20_000, deadline: None };
        let dims: Vec<i64> = [MonomialOrder::Grevlex, MonomialOrder::Lex]
            .iter()
            .filter_map(|o| GroebnerBasis::compute(&r, &polys, o, &cfg).ok().map(|gb| dim_of_basis(&gb)))
            .collect();
        if dims.len() == 2 {
            prop_assert_eq!(dims[0], dims[1]);
        }
    }

    /// Every eliminant lies in the ideal, and a polynomial in the kept variables lies in the
    /// ideal exactly when it lies in the elimination ideal.
    #[test]
    fn elimination_is_consistent(gens in prop::collection::vec(common_terms(), 1..=3), probes in prop::collection::vec(kept_terms(), 1..=4)) {
        let r = ring();
        let polys: Vec<Poly> = gens.iter().map(|t| common::build(&r, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let cfg = GbConfig { max_pairs: 20_000, deadline: None };
        let (Ok(full), Ok(elim)) = (GroebnerBasis::compute(&r, &polys, &MonomialOrder::Grevlex, &cfg), eliminate(&r, &polys, &[0], &cfg)) else {
            return Ok(());
        };
        for e in &elim {
            prop_assert!(!e.uses_var(0));
            prop_assert!(full.reduces_to_zero(e).unwrap());
        }
        let egb = GroebnerBasis::compute(&r, &elim, &MonomialOrder::Grevlex, &cfg).unwrap();
        for (i, t) in probes.iter().enumerate() {
            let mut q = common::build(&r, t);
            // Half the probes are forced into the elimination ideal.
            if i % 2 == 0 {
                if let Some(e) = elim.first() {
                    q = &q * e;
                }
            }
            prop_assert_eq!(full.reduces_to_zero(&q).unwrap(), egb.reduces_to_zero(&q).unwrap());
        }
    }
}

fn common_terms() -> impl Strategy<Value = common::Terms> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), -20i64..=20), 1..=3)
}

fn kept_terms() -> impl Strategy<Value = common::Terms> {
    prop::collection::vec(((0u32..=2, 0u32..=2), -5i64..=5), 1..=3).prop_map(|v| v.into_iter().map(|((a, b), c)| (vec![0, a, b], c)).collect())
}

/// Leading-term ideals of the key-variety bases agree over two primes.
#[test]
fn leading_terms_agree_across_primes() {
    use qfano::data::{m_ring, matrix_m, minors_d};
    let lead = |p: u32| {
        let r = m_ring(Field::prime(p).unwrap());
        let m = matrix_m(&r).unwrap();
        let cfg = GbConfig::default();
        let twenty: Vec<Poly> = m.minors(3).into_iter().map(|x| x.2).collect();
        let two: Vec<Poly> = m.minors(2).into_iter().map(|x| x.2).collect();
        let eight: Vec<Poly> = minors_d(&r).unwrap().into_iter().map(|x| x.1).collect();
        [twenty, two, eight]
            .iter()
            .map(|g| GroebnerBasis::compute(&r, g, &MonomialOrder::Grevlex, &cfg).unwrap().leading_monomials())
            .collect::<Vec<_>>()
    };
    assert_eq!(lead(32003), lead(1_000_003));
}
