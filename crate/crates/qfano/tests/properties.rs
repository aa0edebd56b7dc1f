mod common;

use proptest::prelude::*;
use qfano::groebner::MonomialOrder;

fn terms(nvars: usize, max_terms: usize, max_exp: u32, max_coeff: i64) -> impl Strategy<Value = common::Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -max_coeff..=max_coeff), 0..=max_terms)
}

fn check(r: Result<(), String>) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn substitution_is_a_homomorphism(
        a in terms(3, 4, 3, 9),
        b in terms(3, 4, 3, 9),
        i0 in terms(2, 3, 2, 5),
        i1 in terms(2, 3, 2, 5),
        i2 in terms(2, 3, 2, 5),
        point in (-4i64..=4, -4i64..=4),
    ) {
        check(common::substitution_homomorphism(&a, &b, &[i0, i1, i2], point))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_normal_form_identities(
        a in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| prop::collection::vec(prop::collection::vec(-20i128..=20, m), n))
    ) {
        check(common::snf_identities(&a))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn groebner_bases_are_certified(gens in prop::collection::vec(terms(3, 3, 3, 30), 1..=3), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        check(common::gb_certificate(&gens, &order))?;
    }

    #[test]
    fn classify_ca_matches_factors(
        c in prop_oneof![-9i64..=-1, 1i64..=9],
        roots in prop::collection::vec(-4i64..=4, 3..=7),
        split in 0u32..8,
        tail in -3i64..=3,
    ) {
        let r2 = 1 + split % (roots.len() as u32 / 2);
        check(common::ca_explicit_factors(c, &roots, r2, tail))?;
    }

    #[test]
    fn reid_tai_terminal_lemma(
        r in prop::sample::select(vec![5u64, 7, 11, 13, 17]),
        w in (1u64..17, 1u64..17, 1u64..17),
        unit in 1u64..17,
    ) {
        let w = [w.0 % r, w.1 % r, w.2 % r];
        prop_assume!(w.iter().all(|&x| x != 0) && unit % r != 0);
        check(common::reid_tai_terminal_lemma(r, w, unit))?;
    }

    #[test]
    fn crossings_are_antisymmetric(
        cols in prop::collection::vec((-6i64..=6, 1i64..=3), 2..=9),
        extra in prop::collection::vec(1i64..=6, 0..=2),
    ) {
        let mut cols = cols;
        cols.extend(extra.into_iter().map(|a| (a, 0)));
        check(common::crossing_antisymmetry(&cols))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn twisted_cubic_elimination(
        a in prop_oneof![-5i64..=-1, 1i64..=5],
        b in prop_oneof![-5i64..=-1, 1i64..=5],
        c in prop_oneof![-5i64..=-1, 1i64..=5],
    ) {
        check(common::twisted_cubic(a, b, c))?;
    }
}
