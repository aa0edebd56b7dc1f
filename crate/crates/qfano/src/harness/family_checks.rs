//! Checks on the Q-Fano families cut out by sections: C9, C11 and C13.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::elim::{exact_linear_eliminate, implicit_eliminate, trunc_subs};
use super::local::chart_slice;
use super::{Ctx, HarnessError};
use crate::data::{equations_f, f_ring, weight_matrix, Chart, FamilyRecord, Stage};
use crate::poly::univariate::UPoly;
use crate::poly::{Mono, Poly, Ring, Scalar};
use crate::singularity::{classify_ca, jacobian_rank, quadratic_rank, CaVerdict};

const MAX_ATTEMPTS: u64 = 5;

pub(crate) fn c9(ctx: &mut Ctx, fam: &FamilyRecord) -> Result<(), HarnessError> {
    let field = ctx.field;
    let cring = fam.coefficient_ring(field)?;
    let mut bad = Vec::new();
    for (s, (target, tmpl)) in fam.sections.iter().zip(fam.templates(&cring)?) {
        let lhs = fam.weight(&target).unwrap_or(i64::MIN);
        let row = &cring.gradings()[0];
        let ws: Vec<i64> = tmpl.terms().iter().map(|(m, _)| m.weight(row)).collect();
        if lhs != s.weight || ws.iter().any(|&x| x != lhs) {
            bad.push(format!("{} (weight {}, listed {}): term weights {:?}", target, lhs, s.weight, ws));
        }
    }
    ctx.assert("sections are homogeneous", bad.is_empty(), if bad.is_empty() { format!("{} sections", fam.sections.len()) } else { bad.join("; ") });

    // X in the coordinates of its weighted projective space, on the chart s1 = 1, w = 1.
    let fr = f_ring(field);
    let fr = if fr.index(fam.z()).is_none() { fr.extend(&[fam.z()], &[])? } else { fr };
    let emb: Vec<&str> = fam.embedding.iter().map(|x| x.0.as_str()).filter(|n| *n != "s1").collect();
    let local = Ring::new(&emb, vec![], field)?;
    let mut assign: HashMap<String, Poly> = emb.iter().map(|n| Ok((n.to_string(), local.var(n)?))).collect::<Result<_, HarnessError>>()?;
    assign.insert("s1".into(), local.one());
    assign.insert("w".into(), local.one());
    let mut sec = HashMap::new();
    for (t, p) in fam.sections(ctx.seed).substitution(fam, &fr)? {
        sec.insert(t, p.substitute(&local, &assign)?);
    }
    assign.extend(sec);
    let eqs: Vec<(String, Poly)> = equations_f(&fr)?
        .iter()
        .enumerate()
        .map(|(i, f)| Ok((format!("F{}", i + 1), f.substitute(&local, &assign)?)))
        .collect::<Result<_, HarnessError>>()?;
    let off: Vec<String> = eqs.iter().filter(|(_, e)| !e.constant_term().is_zero()).map(|(l, _)| l.clone()).collect();
    ctx.assert("s1-point lies on X", off.is_empty(), if off.is_empty() { "F1..F9 vanish".to_string() } else { format!("nonzero: {}", off.join(", ")) });

    let used: Vec<(String, Poly)> = [0, 1, 6, 7].iter().map(|&i| eqs[i].clone()).collect();
    let all: Vec<usize> = (0..local.nvars()).collect();
    let order = 2 * (fam.d as u32 + 1);
    let el = implicit_eliminate(used, &all, &all, order);
    let solved: Vec<&str> = el.steps.iter().map(|s| s.var.as_str()).collect();
    let ok = el.steps.len() == 4 && ["u1", "u2", "s3"].iter().all(|v| solved.contains(v)) && el.residual.is_empty();
    ctx.assert(
        "we can eliminate the coordinates",
        ok,
        format!("chain (truncated at degree {}): {}; {} unused equations", order, el.chain(), el.residual.len()),
    );
    let left: Vec<(&str, i64)> = emb
        .iter()
        .filter(|n| !solved.contains(n))
        .map(|n| (*n, fam.weight(n).unwrap_or(0)))
        .collect();
    let r = fam.d as u64 + 1;
    let ws: Vec<i64> = left.iter().map(|x| x.1).collect();
    let t = crate::vgit::CyclicQuotientType::new(r, &ws);
    let ok = left.len() == 3 && t.sorted() == fam.s1_quotient.sorted();
    ctx.assert("weighted blow-up at the s1-point", ok, format!("local coordinates {:?}: {}", left, t));
    Ok(())
}

/// Weights (on p3, on the shifted s123) for the flipped Gorenstein point, r = d - 2.
fn ca_weights(id: u32) -> Option<(u32, u32)> {
    match id {
        501 => Some((3, 2)),
        512 => Some((3, 1)),
        550 => Some((2, 1)),
        _ => None,
    }
}

fn univariate(p: &Poly, v: usize) -> UPoly {
    let deg = p.degree_in(v).unwrap_or(0) as usize;
    let mut c = vec![p.field().zero(); deg + 1];
    for (m, a) in p.terms() {
        c[m.0[v] as usize] = a.clone();
    }
    UPoly::new(p.field(), c)
}

/// Writes f = x*A + B with B free of x and moves all of A into the coordinate y:
/// the new y is A/a where a is the coefficient of y in A. Returns None when a is zero.
fn absorb(f: &Poly, y: usize, x: usize, max: u32) -> Result<Option<(bool, Poly)>, HarnessError> {
    let r = f.ring().clone();
    let b = f.coeff_in(x, 0);
    let xa = f - &b;
    let a_full = Poly::from_terms(
        &r,
        xa.terms()
            .iter()
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.0[x] -= 1;
                (mm, c.clone())
            })
            .collect(),
    );
    let a = a_full.coeff(&Mono::var(r.nvars(), y, 1));
    if a.is_zero() {
        return Ok(None);
    }
    if (&a_full - &Poly::var_idx(&r, y).scale(&a)).is_zero() {
        return Ok(Some((true, f.clone())));
    }
    let mut name = "ynew".to_string();
    while r.index(&name).is_some() {
        name.push('_');
    }
    let ext = r.extend(&[name.as_str()], &[])?;
    let yn = ext.var(&name)?;
    let eq = &yn.scale(&a) - &a_full.map_to(&ext)?;
    let all: Vec<usize> = (0..ext.nvars()).collect();
    let el = implicit_eliminate(vec![("A".into(), eq)], &[y], &all, max);
    let sol = match el.steps.first() {
        Some(s) => s.solution.clone(),
        None => return Ok(None),
    };
    let bb = trunc_subs(&b.map_to(&ext)?, y, &sol, &all, max);
    let nf = &(&ext.var(r.name(x))? * &yn).scale(&a) + &bb;
    // Put the new coordinate back in the slot of y.
    let yi = ext.idx(&name)?;
    let imgs: Vec<Poly> = (0..ext.nvars())
        .map(|i| if i == yi { Poly::var_idx(&r, y) } else if i == y { r.zero() } else { Poly::var_idx(&r, i) })
        .collect();
    Ok(Some((false, nf.compose(&r, &imgs)?)))
}

enum Attempt {
    Done,
    /// Degenerate draw: try the next seed.
    Degenerate(String),
}

pub(crate) fn c11(ctx: &mut Ctx, fam: &FamilyRecord) -> Result<(), HarnessError> {
    for k in 0..MAX_ATTEMPTS {
        let seed = ctx.seed + k;
        match c11_attempt(ctx, fam, seed)? {
            Attempt::Done => return Ok(()),
            Attempt::Degenerate(why) => ctx.note("reseed", format!("seed {}: {}", seed, why)),
        }
    }
    ctx.assert("quadratic part", false, format!("{} draws were all degenerate", MAX_ATTEMPTS));
    Ok(())
}

fn c11_attempt(ctx: &mut Ctx, fam: &FamilyRecord, seed: u64) -> Result<Attempt, HarnessError> {
    let field = ctx.field;
    let one = field.one();
    let sl = chart_slice(fam, Chart::S124, &[("s124", one.clone()), ("s125", one)], &fam.sections(seed), field)?;
    let r = sl.local.clone();
    let z = fam.z();
    let keep = ["s123", "p3", "s126", z];
    let s = r.idx("s123")?;
    let series: Vec<usize> = (0..r.nvars()).filter(|&i| i != s).collect();
    let cands: Vec<usize> = (0..r.nvars()).filter(|&i| !keep.contains(&r.name(i))).collect();
    let target = ca_weights(fam.id);
    let order = match target {
        Some((a, b)) => a + b + 1,
        None => 3,
    };
    let el = implicit_eliminate(sl.equations.clone(), &cands, &series, order);
    let left: Vec<&str> = r.names().iter().map(|n| n.as_str()).filter(|n| !el.steps.iter().any(|st| st.var == *n)).collect();
    if el.residual.len() != 1 || left.len() != 4 {
        ctx.assert("hypersurface in four coordinates", false, format!("chain {}; {} relations left in {:?}", el.chain(), el.residual.len(), left));
        return Ok(Attempt::Done);
    }
    ctx.note("hypersurface in four coordinates", format!("seed {}: chain (truncated at degree {}): {}", seed, order, el.chain()));
    let f = el.residual[0].1.clone();

    // Jacobian criterion along the curve where only s123 is nonzero.
    let f0 = f.degree_part(&series, 0);
    ctx.assert("curve lies on the hypersurface", f0.is_zero(), format!("restriction to the curve: {}", f0.render()));
    let lin = f.degree_part(&series, 1);
    let mut g = UPoly::new(field, vec![]);
    for v in &keep[1..] {
        g = g.gcd(&univariate(&lin.coeff_in(r.idx(v)?, 1), s));
    }
    if g.degree() != Some(1) {
        return Ok(Attempt::Degenerate(format!("gcd of the linear coefficients has degree {:?}", g.degree())));
    }
    let c = -&g.coeffs[0];
    // Independent confirmation on the untruncated equations of the slice.
    let mut point: HashMap<String, Scalar> = r.names().iter().map(|n| (n.clone(), field.zero())).collect();
    point.insert("s123".into(), c.clone());
    let eqs: Vec<Poly> = sl.equations.iter().map(|e| e.1.clone()).collect();
    let on = eqs.iter().all(|e| e.eval(&point).map(|v| v.is_zero()).unwrap_or(false));
    let rank = jacobian_rank(&eqs, &point)?;
    let codim = eqs.len();
    ctx.assert(
        "locate the Gorenstein point",
        on && rank < codim,
        format!("s123 = {}: on the slice {}, Jacobian rank {} < {}", render_scalar(&c), on, rank, codim),
    );

    let germ = crate::singularity::germ_ring(["s123", "p3", "s126", z], field)?;
    let shifted = f.subs(&[(s, &Poly::var_idx(&r, s) + &r.scalar(c.clone()))]).map_to(&germ)?;
    let four: Vec<usize> = (0..4).collect();
    let mut h = shifted.truncate(&four, order);
    match target {
        None => {
            let rk = quadratic_rank(&h, &keep)?;
            ctx.assert("quadratic part", rk == 4, format!("rank of the quadratic part at the point: {}", rk));
        }
        Some((w_p3, w_g)) => {
            let mut settled = false;
            for _ in 0..=order {
                match absorb(&h, 0, 1, order)? {
                    Some((done, nh)) => {
                        h = nh;
                        if done {
                            settled = true;
                            break;
                        }
                    }
                    None => return Ok(Attempt::Degenerate("no s123*p3 term at the point".into())),
                }
            }
            ctx.note("change of s123", format!("all p3-divisible terms moved into the new s123 coordinate: {}", settled));
            let cl = classify_ca(&h, ("p3", "s123"), ("s126", z), (w_p3, w_g))?;
            let want = CaVerdict::OrdinaryCA(fam.d as u32 - 3);
            let detail = format!("weights (p3, s123) = ({}, {}): {:?}, leading form {}", w_p3, w_g, cl.verdict, cl.leading_form.render());
            if cl.verdict == CaVerdict::NotSquarefree {
                return Ok(Attempt::Degenerate(detail));
            }
            ctx.assert("Assigning weights", cl.verdict == want, detail);
        }
    }
    Ok(Attempt::Done)
}

fn render_scalar(c: &Scalar) -> String {
    match c.as_rational() {
        Some(q) => q.to_string(),
        None => format!("{:?}", c),
    }
}

pub(crate) fn c13(ctx: &mut Ctx, fam: &FamilyRecord) -> Result<(), HarnessError> {
    let field = ctx.field;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x13);
    let mut lam = 0i64;
    while lam == 0 {
        lam = rng.gen_range(-50..=50);
    }
    let sl = chart_slice(
        fam,
        Chart::S135,
        &[("s135", field.one()), ("s123", field.from_int(lam))],
        &fam.sections(ctx.seed),
        field,
    )?;
    let r = &sl.local;
    let w = weight_matrix(Stage::Two, fam)?;
    let base = w.col("s135")?;
    // Grading of the fibre: the functional vanishing on the base column, positive on the rest.
    let fw: Vec<i64> = r
        .names()
        .iter()
        .map(|n| w.col(n).map(|c| c.0 * base.1 - c.1 * base.0))
        .collect::<Result<_, _>>()?;
    let fw: Vec<i64> = if fw.iter().any(|&x| x < 0) { fw.iter().map(|x| -x).collect() } else { fw };
    let all: Vec<usize> = (0..r.nvars()).collect();
    let el = exact_linear_eliminate(sl.equations.clone(), &all);
    ctx.note("fibre value", format!("s135 = 1, s123 = {}; chain {}", lam, el.chain()));
    let left: Vec<usize> = all.iter().copied().filter(|&i| !el.steps.iter().any(|s| s.var == r.name(i))).collect();
    let mut lw: Vec<i64> = left.iter().map(|&i| fw[i]).collect();
    lw.sort_unstable();
    let names: Vec<&str> = left.iter().map(|&i| r.name(i)).collect();
    ctx.assert("namely (6)", el.residual.len() == 1, format!("{} residual relations", el.residual.len()));
    ctx.assert("weights (1,1,2,3)", lw == [1, 1, 2, 3], format!("coordinates {:?} with weights {:?}", names, lw));
    if let Some((_, p)) = el.residual.first() {
        let parts: Vec<i64> = p.weighted_parts_by(&fw).keys().copied().collect();
        let inside = p.vars_used().iter().all(|v| left.contains(v));
        ctx.assert("weighted degree 6", parts == [6] && inside, format!("weighted degrees {:?}, {} terms", parts, p.len()));
    }
    Ok(())
}
