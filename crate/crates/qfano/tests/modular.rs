use qfano::harness::{run_check, CheckConfig};

/// Exact and modular runs of the key-variety checks agree assertion by assertion.
#[test]
fn modular_agrees_with_exact() {
    for id in ["C1", "C2", "C3", "C4", "C5", "C6"] {
        let exact = run_check(&CheckConfig::new(id)).unwrap();
        for p in [32003, 1_000_003] {
            let m = run_check(&CheckConfig::new(id).with_prime(p)).unwrap();
            assert_eq!(m.verdict, exact.verdict, "{} mod {}", id, p);
            let oks = |r: &qfano::harness::VerificationReport| r.assertions.iter().map(|a| (a.anchor.clone(), a.ok)).collect::<Vec<_>>();
            assert_eq!(oks(&m), oks(&exact), "{} mod {}", id, p);
            assert_eq!(m.mode, format!("modular({})", p));
        }
    }
}

#[test]
fn modular_family_checks() {
    for (id, fam) in [("C11", 550), ("C13", 872), ("C9", 1766)] {
        let r = run_check(&CheckConfig::new(id).with_family(fam).with_prime(32003)).unwrap();
        assert_eq!(r.verdict, qfano::harness::Verdict::Pass, "{} {} {:?}", id, fam, r.assertions);
    }
}
