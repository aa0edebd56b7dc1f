//! One line per acceptance criterion. Criteria on KNOWN_DEVIATIONS must fail in the documented
//! way; every other criterion must pass.

mod common;

use std::time::{Duration, Instant};

use qfano::groebner::MonomialOrder;
use qfano::harness::{expand, run_check, CheckConfig, VerificationReport, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// C5: two lines of the transition table do not compose to the identity.
const KNOWN_DEVIATIONS: &[usize] = &[5];

const C14_SECONDS_DEFAULT: u64 = 120;

struct Outcome {
    ok: bool,
    detail: String,
}

fn fmt_failures(r: &VerificationReport) -> String {
    let bad: Vec<String> = r.assertions.iter().filter(|a| !a.ok).map(|a| a.detail.clone()).collect();
    format!("{} {:?} {}", r.check, r.verdict, bad.join("; "))
}

/// Runs every expansion of `id` (optionally restricted) and requires Pass within `limit` each.
fn all_pass(id: &str, base: CheckConfig, limit: Duration) -> Outcome {
    let cfgs = match expand(id, &base) {
        Ok(c) => c,
        Err(e) => return Outcome { ok: false, detail: e.to_string() },
    };
    let mut notes = Vec::new();
    let mut ok = true;
    for cfg in cfgs {
        let t = Instant::now();
        let r = run_check(&cfg);
        let dt = t.elapsed();
        let tag = cfg.family.map(|f| format!("{}/{}", id, f)).unwrap_or_else(|| id.to_string());
        match r {
            Ok(r) if r.verdict == Verdict::Pass && dt <= limit => notes.push(format!("{} {:.1}s", tag, dt.as_secs_f64())),
            Ok(r) if r.verdict == Verdict::Pass => {
                ok = false;
                notes.push(format!("{} too slow: {:.1}s > {:?}", tag, dt.as_secs_f64(), limit));
            }
            Ok(r) => {
                ok = false;
                notes.push(fmt_failures(&r));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{}: {}", tag, e));
            }
        }
    }
    Outcome { ok, detail: notes.join(", ") }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// C5 fails on exactly the t2 and s126 lines, and the corrected s126 line closes both round trips.
fn c5_documented_failure() -> Outcome {
    let r = match run_check(&CheckConfig::new("C5")) {
        Ok(r) => r,
        Err(e) => return Outcome { ok: false, detail: e.to_string() },
    };
    let failed: Vec<&str> = r.assertions.iter().filter(|a| !a.ok).map(|a| a.detail.as_str()).collect();
    let ok = r.verdict == Verdict::Fail
        && failed.len() == 2
        && failed[0].contains(": t2 off by")
        && failed[1].contains(": s126_s123 off by")
        && r.assertions.iter().any(|a| a.ok && a.detail.contains(qfano::harness::CORRECTED_S126) && a.detail.ends_with("round trips close"));
    Outcome {
        ok,
        detail: format!("C5 {:?}: {}", r.verdict, failed.join("; ")),
    }
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let terms = |rng: &mut ChaCha8Rng, n: usize, k: usize, e: u32, c: i64| -> common::Terms {
        (0..rng.gen_range(0..=k)).map(|_| ((0..n).map(|_| rng.gen_range(0..=e)).collect(), rng.gen_range(-c..=c))).collect()
    };
    let mut counts = Vec::new();
    let mut run = |name: &str, n: usize, f: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<(), String>, rng: &mut ChaCha8Rng| -> Result<(), String> {
        for i in 0..n {
            f(rng).map_err(|e| format!("{} #{}: {}", name, i, e))?;
        }
        counts.push(format!("{} x{}", name, n));
        Ok(())
    };
    let nz = |rng: &mut ChaCha8Rng, m: i64| if rng.gen_bool(0.5) { rng.gen_range(1..=m) } else { -rng.gen_range(1..=m) };
    let res = (|| {
        run("substitution", 1000, &mut |rng| {
            let (a, b) = (terms(rng, 3, 4, 3, 9), terms(rng, 3, 4, 3, 9));
            let img = [terms(rng, 2, 3, 2, 5), terms(rng, 2, 3, 2, 5), terms(rng, 2, 3, 2, 5)];
            common::substitution_homomorphism(&a, &b, &img, (rng.gen_range(-4..=4), rng.gen_range(-4..=4)))
        }, &mut rng)?;
        run("groebner certificate", 200, &mut |rng| {
            let gens: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| terms(rng, 3, 3, 3, 30)).collect();
            let order = if rng.gen_bool(0.5) { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
            common::gb_certificate(&gens, &order)
        }, &mut rng)?;
        run("smith normal form", 500, &mut |rng| {
            let (n, m) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let a: Vec<Vec<i128>> = (0..n).map(|_| (0..m).map(|_| rng.gen_range(-20..=20)).collect()).collect();
            common::snf_identities(&a)
        }, &mut rng)?;
        run("twisted cubic", 40, &mut |rng| common::twisted_cubic(nz(rng, 5), nz(rng, 5), nz(rng, 5)), &mut rng)?;
        run("classify_ca", 200, &mut |rng| {
            let roots: Vec<i64> = (0..rng.gen_range(3..=7)).map(|_| rng.gen_range(-4..=4)).collect();
            let r2 = rng.gen_range(1..=roots.len() as u32 / 2);
            common::ca_explicit_factors(nz(rng, 9), &roots, r2, rng.gen_range(-3..=3))
        }, &mut rng)?;
        Ok::<(), String>(())
    })();
    match res {
        Ok(()) => Outcome { ok: true, detail: counts.join(", ") },
        Err(e) => Outcome { ok: false, detail: e },
    }
}

fn c14() -> Outcome {
    let limit = std::env::var("QFV_C14_SECONDS").ok().and_then(|s| s.parse().ok()).unwrap_or(C14_SECONDS_DEFAULT);
    let mut cfg = CheckConfig::new("C14");
    cfg.time_limit = Some(secs(limit));
    match run_check(&cfg) {
        Ok(r) => Outcome {
            ok: matches!(r.verdict, Verdict::Pass | Verdict::BudgetExceeded),
            detail: format!("{} {:?} within {} s; {}", r.mode, r.verdict, limit, fmt_failures(&r)),
        },
        Err(e) => Outcome { ok: false, detail: e.to_string() },
    }
}

fn main() {
    let g = CheckConfig::new;
    let criteria: Vec<(usize, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "C1 minor ideals equal", Box::new(move || all_pass("C1", g("C1"), secs(120)))),
        (2, "C2 listed minors in the 2x2-minor ideal", Box::new(move || all_pass("C2", g("C2"), secs(120)))),
        (3, "C3 exceptional parametrization", Box::new(move || all_pass("C3", g("C3"), secs(5)))),
        (4, "C4 smooth point", Box::new(move || all_pass("C4", g("C4"), secs(1)))),
        (5, "C5-C6 chart transitions and t135 elimination", Box::new(move || {
            let c6 = all_pass("C6", g("C6"), secs(10));
            let c5 = all_pass("C5", g("C5"), secs(10));
            Outcome { ok: c5.ok && c6.ok, detail: format!("{}; {}", c5.detail, c6.detail) }
        })),
        (6, "C7 first torus action, all families", Box::new(move || all_pass("C7", g("C7"), secs(1)))),
        (7, "C8 del Pezzo stage two, d = 7..4", Box::new(move || all_pass("C8", g("C8"), secs(1)))),
        (8, "C12 divisorial stage two, d = 4..2", Box::new(move || all_pass("C12", g("C12"), secs(5)))),
        (9, "C9 s1-point blow-up, all families", Box::new(move || all_pass("C9", g("C9"), secs(60)))),
        (10, "C10 Reid-Tai on chart quotients", Box::new(move || all_pass("C10", g("C10"), secs(1)))),
        (11, "C11 ordinary cA points", Box::new(move || all_pass("C11", g("C11"), secs(600)))),
        (12, "C13 sextic fibres in P(1,1,2,3)", Box::new(move || all_pass("C13", g("C13"), secs(600)))),
        (13, "property suites", Box::new(property_suites)),
        (14, "C14 stretch (pass or budget_exceeded)", Box::new(c14)),
    ];
    let mut unexpected = Vec::new();
    for (n, name, f) in &criteria {
        let o = f();
        let known = KNOWN_DEVIATIONS.contains(n);
        let tag = match (o.ok, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known deviation)",
            (false, false) => "FAIL",
            (true, true) => "PASS (deviation no longer reproduces)",
        };
        println!("criterion {:>2} {:<46} {}: {}", n, name, tag, o.detail);
        if o.ok == known {
            unexpected.push(*n);
        }
    }
    // The documented failure itself, beyond "criterion 5 fails".
    let c5 = c5_documented_failure();
    println!("criterion  5 documented failure reproduces: {} ({})", c5.ok, c5.detail);
    if !c5.ok {
        unexpected.push(5);
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes for criteria {:?}", unexpected);
        std::process::exit(1);
    }
}
