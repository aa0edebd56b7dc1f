//! Truncated power-series substitution and the two linear-part elimination loops.

use std::collections::HashMap;

use crate::poly::{Mono, Poly, Scalar};

fn deg_in(m: &Mono, vars: &[usize]) -> u32 {
    vars.iter().map(|&i| m.0[i]).sum()
}

/// a*b with every term of degree above `max` in `vars` dropped.
pub fn trunc_mul(a: &Poly, b: &Poly, vars: &[usize], max: u32) -> Poly {
    let da: Vec<u32> = a.terms().iter().map(|(m, _)| deg_in(m, vars)).collect();
    let db: Vec<u32> = b.terms().iter().map(|(m, _)| deg_in(m, vars)).collect();
    let mut acc: HashMap<Mono, Scalar> = HashMap::new();
    for (i, (ma, ca)) in a.terms().iter().enumerate() {
        for (j, (mb, cb)) in b.terms().iter().enumerate() {
            if da[i] + db[j] > max {
                continue;
            }
            let m = ma.mul(mb);
            let c = ca * cb;
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    Poly::from_terms(a.ring(), acc.into_iter().collect())
}

/// p with variable `v` replaced by `s`, truncated.
pub fn trunc_subs(p: &Poly, v: usize, s: &Poly, vars: &[usize], max: u32) -> Poly {
    let top = match p.degree_in(v) {
        Some(k) if k > 0 => k,
        _ => return p.truncate(vars, max),
    };
    let mut out = p.coeff_in(v, 0).truncate(vars, max);
    let mut pw = p.ring().one();
    for k in 1..=top {
        pw = trunc_mul(&pw, s, vars, max);
        let c = p.coeff_in(v, k);
        if !c.is_zero() {
            out = &out + &trunc_mul(&c, &pw, vars, max);
        }
    }
    out
}

/// Constant c when `eq` is linear in `v` with the single term c*v (no cofactors at all).
fn unit_linear(eq: &Poly, v: usize, vars: &[usize]) -> Option<Scalar> {
    let n = eq.ring().nvars();
    let pure = Mono::var(n, v, 1);
    let c = eq.coeff(&pure);
    if c.is_zero() {
        return None;
    }
    // A v-linear term whose cofactor lies outside the truncated variables would make the
    // coefficient a non-constant function at the expansion point.
    let clash = eq.terms().iter().any(|(m, _)| m != &pure && m.0[v] == 1 && deg_in(m, vars) == 1);
    (!clash).then_some(c)
}

#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub var: String,
    /// Label of the equation that was solved.
    pub equation: String,
    pub solution: Poly,
}

#[derive(Clone, Debug)]
pub struct Elimination {
    pub steps: Vec<EliminationStep>,
    /// Labelled equations that were not used, after substitution; zero ones are dropped.
    pub residual: Vec<(String, Poly)>,
}

impl Elimination {
    pub fn chain(&self) -> String {
        self.steps
            .iter()
            .map(|s| format!("{} from {}", s.var, s.equation))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Iterated implicit-function substitution around the origin of `vars`.
///
/// Repeatedly takes the first equation (in order) having some candidate variable (first in
/// `candidates` order) with an invertible constant linear coefficient, solves for it as a
/// series truncated at total degree `max` in `vars`, and substitutes into the rest.
pub fn implicit_eliminate(eqs: Vec<(String, Poly)>, candidates: &[usize], vars: &[usize], max: u32) -> Elimination {
    let mut eqs: Vec<(String, Poly)> = eqs
        .into_iter()
        .map(|(l, p)| (l, p.truncate(vars, max)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let mut steps = Vec::new();
    let mut used: Vec<usize> = Vec::new();
    loop {
        let mut pick = None;
        'outer: for (k, (_, e)) in eqs.iter().enumerate() {
            for &v in candidates {
                if used.contains(&v) {
                    continue;
                }
                if let Some(c) = unit_linear(e, v, vars) {
                    pick = Some((k, v, c));
                    break 'outer;
                }
            }
        }
        let Some((k, v, c)) = pick else { break };
        let (label, e) = eqs.remove(k);
        let ring = e.ring().clone();
        let h = &e - &Poly::var_idx(&ring, v).scale(&c);
        let minus_inv = -&c.inv().expect("nonzero");
        let mut sol = ring.zero();
        for _ in 0..=max {
            let next = trunc_subs(&h, v, &sol, vars, max).scale(&minus_inv);
            if next == sol {
                break;
            }
            sol = next;
        }
        for (_, p) in eqs.iter_mut() {
            *p = trunc_subs(p, v, &sol, vars, max);
        }
        for s in steps.iter_mut() {
            let s: &mut EliminationStep = s;
            s.solution = trunc_subs(&s.solution, v, &sol, vars, max);
        }
        eqs.retain(|(_, p)| !p.is_zero());
        used.push(v);
        steps.push(EliminationStep {
            var: ring.name(v).to_string(),
            equation: label,
            solution: sol,
        });
    }
    Elimination { steps, residual: eqs }
}

/// Exact elimination: solves for a candidate variable occurring in a single term c*v of an
/// equation, with c a nonzero constant.
pub fn exact_linear_eliminate(eqs: Vec<(String, Poly)>, candidates: &[usize]) -> Elimination {
    let mut eqs: Vec<(String, Poly)> = eqs.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    let mut steps: Vec<EliminationStep> = Vec::new();
    loop {
        let mut pick = None;
        'outer: for (k, (_, e)) in eqs.iter().enumerate() {
            let n = e.ring().nvars();
            for &v in candidates {
                let pure = Mono::var(n, v, 1);
                let c = e.coeff(&pure);
                if c.is_zero() {
                    continue;
                }
                if e.terms().iter().filter(|(m, _)| m.0[v] > 0).count() == 1 {
                    pick = Some((k, v, c));
                    break 'outer;
                }
            }
        }
        let Some((k, v, c)) = pick else { break };
        let (label, e) = eqs.remove(k);
        let ring = e.ring().clone();
        let x = Poly::var_idx(&ring, v);
        let sol = (&e - &x.scale(&c)).scale(&-&c.inv().expect("nonzero"));
        for (_, p) in eqs.iter_mut() {
            *p = p.subs(&[(v, sol.clone())]);
        }
        for s in steps.iter_mut() {
            s.solution = s.solution.subs(&[(v, sol.clone())]);
        }
        eqs.retain(|(_, p)| !p.is_zero());
        steps.push(EliminationStep {
            var: ring.name(v).to_string(),
            equation: label,
            solution: sol,
        });
    }
    Elimination { steps, residual: eqs }
}
