//! Checks on the key variety itself: C1-C6 and the stretch check C14.

use std::collections::HashMap;

use super::laurent::Laurent;
use super::{Ctx, HarnessError};
use crate::data::{
    chart_relations, equations_f, exceptional_param, f_bar_pi, f_ring, hyp_ring, m_ring, matrix_m, minor, minors_d,
    rewrite_ratios, smooth_point, stage_two_ring, transitions, unprojection_i, Chart, Transitions, S_BLOCK,
};
use crate::groebner::{ideal_equal, radical_member, GroebnerBasis, MonomialOrder};
use crate::poly::{parse_poly, Poly, PolyMatrix, Ring};
use crate::singularity::singular_dim;

pub(crate) const C14_DEFAULT_PRIME: u32 = 32003;

/// The s126 transition with the sign and factor that make both round trips close.
pub const CORRECTED_S126: &str = "(s125/s135)*(s136/s135)*(s123/s135)^-1 - (s123/s135)*t2";

fn short(p: &Poly) -> String {
    let s = p.render();
    if s.len() > 400 {
        format!("{}... ({} terms)", &s[..400], p.len())
    } else {
        s
    }
}

pub(crate) fn c1(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let r = m_ring(ctx.field);
    let m = matrix_m(&r)?;
    let all: Vec<Poly> = m.minors(3).into_iter().map(|x| x.2).collect();
    let listed: Vec<Poly> = minors_d(&r)?.into_iter().map(|x| x.1).collect();
    let eq = ideal_equal(&r, &all, &listed, &ctx.gb)?;
    let mut detail = format!("{} minors against {} listed generators", all.len(), listed.len());
    if !eq {
        let gb = GroebnerBasis::compute(&r, &listed, &MonomialOrder::Grevlex, &ctx.gb)?;
        if let Some(p) = all.iter().find(|p| !gb.reduces_to_zero(p).unwrap_or(false)) {
            detail = format!("remainder {}", short(&gb.normal_form(p)?));
        }
    }
    ctx.assert("is generated by", eq, detail);
    Ok(())
}

pub(crate) fn c2(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let r = m_ring(ctx.field);
    let m = matrix_m(&r)?;
    let two: Vec<Poly> = m.minors(2).into_iter().map(|x| x.2).collect();
    let gb = GroebnerBasis::compute(&r, &two, &MonomialOrder::Grevlex, &ctx.gb)?;
    ctx.note("2x2 minors", format!("{} generators, basis of {} elements", two.len(), gb.len()));
    for (name, d) in minors_d(&r)? {
        let nf = gb.normal_form(&d)?;
        ctx.assert("it vanishes at every point", nf.is_zero(), format!("{} remainder {}", name, short(&nf)));
    }
    Ok(())
}

pub(crate) fn c3(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let r = f_ring(ctx.field);
    let mut assign: HashMap<String, Poly> = exceptional_param(&r)?.into_iter().collect();
    assign.insert("s1".into(), r.one());
    for (name, d) in minors_d(&r)? {
        let v = d.substitute(&r, &assign)?;
        ctx.assert("coincides with the exceptional divisor", v.is_zero(), format!("{} remainder {}", name, short(&v)));
    }
    Ok(())
}

pub(crate) fn c4(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let r = hyp_ring(ctx.field);
    let f = f_bar_pi(&r)?;
    let mut point: HashMap<String, crate::poly::Scalar> = r.names().iter().map(|n| (n.clone(), ctx.field.zero())).collect();
    for (n, v) in smooth_point() {
        point.insert(n, ctx.field.from_int(v));
    }
    let at = f.eval(&point)?;
    ctx.assert("point lies on F", at.is_zero(), format!("F = {:?}", at.to_i64()));
    let mut nonzero = Vec::new();
    for i in 0..r.nvars() {
        let g = f.diff(i).eval(&point)?;
        if !g.is_zero() {
            nonzero.push(format!("dF/d{} = {}", r.name(i), g.to_i64().map(|x| x.to_string()).unwrap_or_else(|| "?".into())));
        }
    }
    let detail = if nonzero.is_empty() { "gradient is zero".to_string() } else { nonzero.join(", ") };
    ctx.assert("smooth at the point with", !nonzero.is_empty(), detail);
    Ok(())
}

fn var_l(t: &Transitions, name: &str, x: usize) -> Result<Laurent, HarnessError> {
    Ok(Laurent::poly(t.ring.var(name)?, x))
}

/// 1 / x
fn inv_l(t: &Transitions, x: usize) -> Laurent {
    Laurent::new(t.ring.one(), 1, x)
}

fn images_identity(t: &Transitions, x: usize) -> Result<Vec<Laurent>, HarnessError> {
    t.ring.names().iter().map(|n| var_l(t, n, x)).collect()
}

/// Maps s135-chart coordinates to s123-chart coordinates and back; returns the failures.
fn roundtrip_a(t: &Transitions) -> Result<Vec<(String, Laurent)>, HarnessError> {
    let r = &t.ring;
    let lam = r.idx("s123_s135")?;
    let mut img = images_identity(t, lam)?;
    img[r.idx("s135_s123")?] = inv_l(t, lam);
    let mut b: HashMap<String, Laurent> = HashMap::new();
    for (n, p) in &t.from_s135 {
        b.insert(n.clone(), Laurent::eval(p, &img, lam, r));
    }
    let mut img2 = images_identity(t, lam)?;
    img2[r.idx("s135_s123")?] = inv_l(t, lam);
    img2[r.idx("s125_s123")?] = var_l(t, "s125_s135", lam)?.mul(&inv_l(t, lam));
    img2[r.idx("s136_s123")?] = var_l(t, "s136_s135", lam)?.mul(&inv_l(t, lam));
    for (n, v) in &b {
        let n = crate::data::rewrite_ratios(n);
        img2[r.idx(&n)?] = v.clone();
    }
    let mut bad = Vec::new();
    for (n, p) in &t.from_s123 {
        let back = Laurent::eval(p, &img2, lam, r);
        let diff = back.add(&var_l(t, n, lam)?.scale(&-&r.field().one()));
        if !diff.is_zero() {
            bad.push((n.clone(), diff));
        }
    }
    Ok(bad)
}

/// Maps s123-chart coordinates to s135-chart coordinates and back; returns the failures.
fn roundtrip_b(t: &Transitions) -> Result<Vec<(String, Laurent)>, HarnessError> {
    let r = &t.ring;
    let mu = r.idx("s135_s123")?;
    let img = images_identity(t, mu)?;
    let mut a: HashMap<String, Laurent> = HashMap::new();
    for (n, p) in &t.from_s123 {
        a.insert(n.clone(), Laurent::eval(p, &img, mu, r));
    }
    let mut img2 = images_identity(t, mu)?;
    img2[r.idx("s123_s135")?] = inv_l(t, mu);
    img2[r.idx("s125_s135")?] = var_l(t, "s125_s123", mu)?.mul(&inv_l(t, mu));
    img2[r.idx("s136_s135")?] = var_l(t, "s136_s123", mu)?.mul(&inv_l(t, mu));
    for (n, v) in &a {
        img2[r.idx(n)?] = v.clone();
    }
    let mut bad = Vec::new();
    for (n, p) in &t.from_s135 {
        let back = Laurent::eval(p, &img2, mu, r);
        let lhs = rewrite_ratios(n);
        let diff = back.add(&var_l(t, &lhs, mu)?.scale(&-&r.field().one()));
        if !diff.is_zero() {
            bad.push((lhs, diff));
        }
    }
    Ok(bad)
}

fn report_roundtrips(ctx: &mut Ctx, t: &Transitions, anchor: &str) -> Result<bool, HarnessError> {
    let mut all_ok = true;
    for (label, bad, x) in [
        ("s135-chart -> s123-chart -> s135-chart", roundtrip_a(t)?, "s123_s135"),
        ("s123-chart -> s135-chart -> s123-chart", roundtrip_b(t)?, "s135_s123"),
    ] {
        let detail = if bad.is_empty() {
            format!("{}: identity", label)
        } else {
            let parts: Vec<String> = bad.iter().map(|(n, d)| format!("{} off by {}", n, d.render(x))).collect();
            format!("{}: {}", label, parts.join("; "))
        };
        all_ok &= bad.is_empty();
        ctx.assert(anchor, bad.is_empty(), detail);
    }
    Ok(all_ok)
}

pub(crate) fn c5(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let t = transitions(ctx.field)?;
    report_roundtrips(ctx, &t, "the transition functions")?;
    // Replace the s126 line and rerun both directions as a diagnostic.
    let mut fixed = t.clone();
    let p = parse_poly(&fixed.ring, &rewrite_ratios(CORRECTED_S126))?;
    for (n, q) in fixed.from_s135.iter_mut() {
        if rewrite_ratios(n) == "s126_s123" {
            *q = p.clone();
        }
    }
    let mut probe = Ctx {
        field: ctx.field,
        gb: ctx.gb.clone(),
        seed: ctx.seed,
        assertions: vec![],
        inapplicable: false,
    };
    let ok = report_roundtrips(&mut probe, &fixed, "")?;
    ctx.note(
        "diagnostic",
        format!("with s126 transition replaced by {}: round trips {}", CORRECTED_S126, if ok { "close" } else { "still fail" }),
    );
    Ok(())
}

pub(crate) fn c6(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let r = stage_two_ring(ctx.field);
    let i = unprojection_i(&r)?;
    let t135 = r.idx("t135")?;
    let c = i.coeff_in(t135, 1);
    let ok = i.degree_in(t135) == Some(1) && c == r.var("s135")?;
    ctx.assert("we can eliminate t135", ok, format!("coefficient of t135 in I: {}", c.render()));
    for chart in Chart::ALL {
        chart_consistency(ctx, &r, chart)?;
    }
    Ok(())
}

/// On a chart: every w2*s_ijk - D_ijk vanishes, and I is solvable for the eliminated t.
fn chart_consistency(ctx: &mut Ctx, r: &Ring, chart: Chart) -> Result<(), HarnessError> {
    let x = r.idx(chart.var())?;
    let rels = chart_relations(chart, r)?;
    let mut img: Vec<Laurent> = (0..r.nvars()).map(|i| Laurent::poly(Poly::var_idx(r, i), x)).collect();
    let mut pending: Vec<_> = rels.iter().collect();
    let lhs: Vec<usize> = rels.iter().map(|c| r.idx(&c.var)).collect::<Result<_, _>>()?;
    let mut done: Vec<usize> = Vec::new();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for c in pending {
            let ready = c.numerator.vars_used().iter().all(|v| !lhs.contains(v) || done.contains(v));
            if !ready {
                rest.push(c);
                continue;
            }
            let v = Laurent::eval(&c.numerator, &img, x, r).mul(&Laurent::new(r.one(), c.power, x));
            let k = r.idx(&c.var)?;
            img[k] = v;
            done.push(k);
        }
        if rest.len() == before {
            return Err(HarnessError::Check(format!("{} chart relations are circular", chart.var())));
        }
        pending = rest;
    }
    let w2 = img[r.idx("w2")?].clone();
    let mut bad = Vec::new();
    for s in S_BLOCK {
        let cols: Vec<usize> = s[1..].bytes().map(|b| (b - b'0') as usize).collect();
        let d = minor(r, [cols[0], cols[1], cols[2]])?;
        let lhs = w2.mul(&img[r.idx(s)?]);
        let rhs = Laurent::eval(&d, &img, x, r);
        let diff = lhs.add(&rhs.scale(&-&r.field().one()));
        if !diff.is_zero() {
            bad.push(format!("w2*{} - D{}: {}", s, &s[1..], short(&diff.num)));
        }
    }
    ctx.assert(
        "chart relations",
        bad.is_empty(),
        format!("{}-chart: {}", chart.var(), if bad.is_empty() { "w2*s = D for all eight".to_string() } else { bad.join("; ") }),
    );
    if let Some(t) = chart.eliminated_t() {
        let ti = r.idx(t)?;
        let ival = Laurent::eval(&unprojection_i(r)?, &img, x, r);
        // I is affine in t (t maps to itself); split off the t-linear part.
        let lin = Laurent::new(ival.num.coeff_in(ti, 1), ival.e, x);
        let ok = ival.num.degree_in(ti) == Some(1) && lin.num == Poly::var_idx(r, x) && lin.e == 0;
        let detail = format!("{}-chart: coefficient of {} in I is {}", chart.var(), t, lin.render(chart.var()));
        ctx.assert("we can eliminate t135", ok, detail);
    }
    Ok(())
}

fn l_matrix(ctx: &Ctx) -> Result<(Ring, PolyMatrix), HarnessError> {
    let fr = f_ring(ctx.field);
    let hr = hyp_ring(ctx.field);
    let fs = equations_f(&fr)?;
    let mut entries = Vec::new();
    for f in fs.iter().take(6) {
        for v in ["s1", "s2", "s3", "w"] {
            let i = fr.idx(v)?;
            if f.degree_in(i).unwrap_or(0) > 1 {
                return Err(HarnessError::Check(format!("F is not linear in {}", v)));
            }
            entries.push(f.coeff_in(i, 1).map_to(&hr)?);
        }
    }
    Ok((hr, PolyMatrix::new(6, 4, entries)?))
}

pub(crate) fn c14(ctx: &mut Ctx) -> Result<(), HarnessError> {
    let (hr, l) = l_matrix(ctx)?;
    let f = f_bar_pi(&hr)?;
    let minors4: Vec<Poly> = l.minors(4).into_iter().map(|x| x.2).filter(|p| !p.is_zero()).collect();
    ctx.note("L", format!("{} nonzero 4x4 minors of the 6x4 coefficient matrix", minors4.len()));
    let m = matrix_m(&hr)?;
    let two: Vec<Poly> = m.minors(2).into_iter().map(|x| x.2).collect();
    let gb = GroebnerBasis::compute(&hr, &minors4, &MonomialOrder::Grevlex, &ctx.gb)?;
    let mut failures = Vec::new();
    for (k, q) in two.iter().enumerate() {
        let nf = gb.normal_form(&(q * &f))?;
        if !nf.is_zero() {
            failures.push(format!("product {}: remainder {}", k, short(&nf)));
        }
    }
    let detail = if failures.is_empty() { format!("all {} products reduce to 0", two.len()) } else { failures.join("; ") };
    ctx.assert("the products of the", failures.is_empty(), detail);
    let rad = radical_member(&hr, &minors4, &f, &ctx.gb)?;
    ctx.assert("the products of the", rad, "F vanishes on the zero set of the 4x4 minors");
    let sd = singular_dim(&f, &[("p4", hr.one())], &ctx.gb)?;
    // F restricted to p4 = 1 lives in 14 free coordinates, so it has dimension 13.
    ctx.assert("has codimension 3", sd == 10, format!("singular locus of dimension {} in a 13-dimensional hypersurface", sd));
    Ok(())
}
