use qfano::harness::{expand, run_check, run_many, CheckConfig};

fn stable(id: &str, fam: Option<u32>) -> CheckConfig {
    let mut c = CheckConfig::new(id);
    c.family = fam;
    c.stable_timing = true;
    c
}

#[test]
fn reports_are_byte_identical() {
    for (id, fam) in [("C9", Some(878)), ("C11", Some(550)), ("C13", Some(501)), ("C5", None), ("C10", Some(1766))] {
        let a = run_check(&stable(id, fam)).unwrap().to_json();
        let b = run_check(&stable(id, fam)).unwrap().to_json();
        assert_eq!(a, b, "{}", id);
        assert!(a.contains("\"elapsed_ms\": 0"));
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let cfgs = expand("C7", &stable("C7", None)).unwrap();
    assert_eq!(cfgs.len(), 7);
    let json = |w| run_many(&cfgs, w).into_iter().map(|(_, r)| r.unwrap().to_json()).collect::<Vec<_>>();
    assert_eq!(json(1), json(4));
}

#[test]
fn seeds_change_sections_not_verdicts() {
    for seed in [1, 2] {
        let r = run_check(&stable("C9", Some(1766)).with_seed(seed)).unwrap();
        assert_eq!(r.verdict, qfano::harness::Verdict::Pass);
        assert_eq!(r.seed, seed);
    }
}
