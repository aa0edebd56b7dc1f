//! Oracles shared by the property suites and the acceptance runner. Each returns Err with a
//! description of the first disagreement.
#![allow(dead_code)]

use std::collections::HashMap;

use qfano::groebner::{eliminate, ideal_equal, GbConfig, GroebnerBasis, MonomialOrder};
use qfano::poly::{parse_poly, Field, Mono, Poly, Ring};
use qfano::singularity::{classify_ca, germ_ring, reid_tai, CaVerdict, ReidTai};
use qfano::vgit::{chamber_scan, crossing_type, diagonal, matmul, smith_normal_form, CyclicQuotientType, IMat, WeightMatrix};

/// (exponents, coefficient) pairs.
pub type Terms = Vec<(Vec<u32>, i64)>;

pub fn build(r: &Ring, t: &Terms) -> Poly {
    let f = r.field();
    Poly::from_terms(r, t.iter().map(|(e, c)| (Mono(e.clone()), f.from_int(*c))).collect())
}

/// Composition with polynomial images respects sums and products, and commutes with evaluation.
pub fn substitution_homomorphism(a: &Terms, b: &Terms, images: &[Terms; 3], point: (i64, i64)) -> Result<(), String> {
    let src = Ring::plain(&["x", "y", "z"]);
    let dst = Ring::plain(&["u", "v"]);
    let (a, b) = (build(&src, a), build(&src, b));
    let img: Vec<Poly> = images.iter().map(|t| build(&dst, t)).collect();
    let c = |p: &Poly| p.compose(&dst, &img).map_err(|e| e.to_string());
    if c(&(&a * &b))? != &c(&a)? * &c(&b)? {
        return Err(format!("product: a = {}, b = {}", a.render(), b.render()));
    }
    if c(&(&a + &b))? != &c(&a)? + &c(&b)? {
        return Err(format!("sum: a = {}, b = {}", a.render(), b.render()));
    }
    let f = Field::Rationals;
    let at: HashMap<String, _> = [("u".to_string(), f.from_int(point.0)), ("v".to_string(), f.from_int(point.1))].into();
    let vals: HashMap<String, _> = ["x", "y", "z"]
        .iter()
        .zip(&img)
        .map(|(n, p)| Ok((n.to_string(), p.eval(&at).map_err(|e| e.to_string())?)))
        .collect::<Result<_, String>>()?;
    let lhs = c(&a)?.eval(&at).map_err(|e| e.to_string())?;
    let rhs = a.eval(&vals).map_err(|e| e.to_string())?;
    if lhs != rhs {
        return Err(format!("evaluation: a = {}", a.render()));
    }
    Ok(())
}

/// Every computed basis carries an S-polynomial certificate, is reduced and contains the input.
pub fn gb_certificate(gens: &[Terms], order: &MonomialOrder) -> Result<(), String> {
    let r = Ring::new(&["x", "y", "z"], vec![], Field::prime(32003).unwrap()).unwrap();
    let gens: Vec<Poly> = gens.iter().map(|t| build(&r, t)).filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        return Ok(());
    }
    let cfg = GbConfig {
        max_pairs: 20_000,
        deadline: None,
    };
    let gb = match GroebnerBasis::compute(&r, &gens, order, &cfg) {
        Ok(gb) => gb,
        // Too large for the sample budget; nothing to certify.
        Err(qfano::groebner::GbError::Budget(_)) => return Ok(()),
        Err(e) => return Err(e.to_string()),
    };
    if !gb.certificate() {
        return Err("S-polynomial certificate fails".into());
    }
    if !gb.is_reduced() {
        return Err("basis not reduced".into());
    }
    for g in &gens {
        if !gb.reduces_to_zero(g).map_err(|e| e.to_string())? {
            return Err(format!("generator {} not in the basis ideal", g.render()));
        }
    }
    Ok(())
}

fn det_by_permutations(m: &[Vec<i128>]) -> i128 {
    fn go(m: &[Vec<i128>], row: usize, used: &mut Vec<bool>, sign: i128) -> i128 {
        if row == m.len() {
            return sign;
        }
        let mut acc = 0;
        for j in 0..m.len() {
            if used[j] || m[row][j] == 0 {
                continue;
            }
            let inversions = used[j + 1..].iter().filter(|&&u| u).count();
            used[j] = true;
            let s = if inversions % 2 == 0 { sign } else { -sign };
            acc += m[row][j] * go(m, row + 1, used, s);
            used[j] = false;
        }
        acc
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// U*A*V = S with unimodular U, V; S diagonal with a divisor chain; d1*...*dk equals the gcd
/// of the k x k minors of A.
pub fn snf_identities(a: &IMat) -> Result<(), String> {
    let (u, s, v) = smith_normal_form(a);
    if matmul(&matmul(&u, a), &v) != s {
        return Err(format!("U*A*V != S for {:?}", a));
    }
    for (name, x) in [("U", &u), ("V", &v)] {
        let d = det_by_permutations(x);
        if d.abs() != 1 {
            return Err(format!("det {} = {} for {:?}", name, d, a));
        }
    }
    for (i, row) in s.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j && x != 0 {
                return Err(format!("S not diagonal for {:?}", a));
            }
        }
    }
    let dg = diagonal(&s);
    for w in dg.windows(2) {
        if w[0] < 0 || (w[0] == 0 && w[1] != 0) || (w[0] != 0 && w[1] % w[0] != 0) {
            return Err(format!("diagonal {:?} is not a divisor chain", dg));
        }
    }
    let (n, m) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut prod = 1i128;
    for k in 1..=n.min(m) {
        prod *= dg.get(k - 1).copied().unwrap_or(0);
        let mut g = 0;
        for rows in subsets(n, k) {
            for cols in subsets(m, k) {
                let sub: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
                g = gcd(g, det_by_permutations(&sub));
            }
        }
        if g != prod.abs() {
            return Err(format!("determinantal divisor {} is {}, diagonal product {} for {:?}", k, g, prod, a));
        }
    }
    Ok(())
}

/// Eliminating t from (x, y, z) = (a t, b t^2, c t^3) gives the three quadrics of the cubic.
pub fn twisted_cubic(a: i64, b: i64, c: i64) -> Result<(), String> {
    let r = Ring::plain(&["t", "x", "y", "z"]);
    let p = |s: String| parse_poly(&r, &s).unwrap();
    let gens = vec![p(format!("x - ({})*t", a)), p(format!("y - ({})*t^2", b)), p(format!("z - ({})*t^3", c))];
    let cfg = GbConfig::default();
    let got = eliminate(&r, &gens, &[0], &cfg).map_err(|e| e.to_string())?;
    if got.iter().any(|g| g.uses_var(0)) {
        return Err("t survives elimination".into());
    }
    let want = vec![
        p(format!("({})*x^2 - ({})*y", b, a * a)),
        p(format!("({})*x*y - ({})*z", c, a * b)),
        p(format!("({})*y^2 - ({})*x*z", a * c, b * b)),
    ];
    if !ideal_equal(&r, &got, &want, &cfg).map_err(|e| e.to_string())? {
        return Err(format!("({}, {}, {}): got {:?}", a, b, c, got.iter().map(|g| g.render()).collect::<Vec<_>>()));
    }
    Ok(())
}

/// f = c*x*y + prod (z - a_i w) + higher terms, weights (r1, r2) with r1 + r2 = deg. Ordinary cA
/// exactly when the roots a_i are distinct.
pub fn ca_explicit_factors(c: i64, roots: &[i64], r2: u32, tail: i64) -> Result<(), String> {
    let r = germ_ring(["x", "y", "z", "w"], Field::Rationals).unwrap();
    let n = roots.len() as u32;
    let r1 = n - r2;
    let mut g = r.one();
    for a in roots {
        g = &g * &parse_poly(&r, &format!("z - ({})*w", a)).unwrap();
    }
    let higher = parse_poly(&r, &format!("({})*z^{} + x*z^{} + y^{}*w", tail, n + 1, r2 + 1, r1 + 1)).unwrap();
    let f = &(&parse_poly(&r, &format!("({})*x*y", c)).unwrap() + &g) + &higher;
    let got = classify_ca(&f, ("x", "y"), ("z", "w"), (r1, r2)).map_err(|e| e.to_string())?;
    let mut s = roots.to_vec();
    s.sort_unstable();
    s.dedup();
    let want = if s.len() == roots.len() { CaVerdict::OrdinaryCA(n - 1) } else { CaVerdict::NotSquarefree };
    if got.verdict != want {
        return Err(format!("{}: got {:?}, expected {:?}", f.render(), got.verdict, want));
    }
    Ok(())
}

/// For r prime and weights prime to r: terminal exactly when two weights sum to 0 mod r; the
/// verdict is invariant under permuting the weights and changing the generator.
pub fn reid_tai_terminal_lemma(r: u64, w: [u64; 3], unit: u64) -> Result<(), String> {
    let t = CyclicQuotientType::new(r, &w.map(|x| x as i64));
    let v = reid_tai(&t).map_err(|e| e.to_string())?;
    let pair = (0..3).any(|i| (i + 1..3).any(|j| (w[i] + w[j]) % r == 0));
    if (v == ReidTai::Terminal) != pair {
        return Err(format!("{}: {:?}", t, v));
    }
    let perm = CyclicQuotientType::new(r, &[w[2] as i64, w[0] as i64, w[1] as i64]);
    let gen = CyclicQuotientType::new(r, &w.map(|x| (x * unit) as i64));
    for o in [perm, gen] {
        let vo = reid_tai(&o).map_err(|e| e.to_string())?;
        if vo != v {
            return Err(format!("{} is {:?} but {} is {:?}", t, v, o, vo));
        }
    }
    Ok(())
}

/// Mirroring the second row reverses the ray order and negates every crossing.
pub fn crossing_antisymmetry(cols: &[(i64, i64)]) -> Result<(), String> {
    let names: Vec<String> = (0..cols.len()).map(|i| format!("c{}", i)).collect();
    let w = WeightMatrix::new(&names, cols.iter().map(|c| c.0).collect(), cols.iter().map(|c| c.1).collect()).map_err(|e| e.to_string())?;
    let m = WeightMatrix::new(&names, cols.iter().map(|c| c.0).collect(), cols.iter().map(|c| -c.1).collect()).map_err(|e| e.to_string())?;
    let (Ok(s), Ok(sm)) = (chamber_scan(&w), chamber_scan(&m)) else {
        return Ok(());
    };
    let n = s.rays.len();
    if sm.rays.len() != n {
        return Err("ray counts differ".into());
    }
    for k in s.walls() {
        let a = crossing_type(&w, &s, k, &[]).map_err(|e| e.to_string())?;
        let b = crossing_type(&m, &sm, n - 1 - k, &[]).map_err(|e| e.to_string())?;
        let neg: Vec<(String, i64)> = b.side_weights.iter().map(|(c, x)| (c.clone(), -x)).collect();
        if a.wall_columns != b.wall_columns || a.side_weights != neg || a.kind != b.kind {
            return Err(format!("wall {}: {} vs mirrored {}", k, a.type_string(), b.type_string()));
        }
    }
    Ok(())
}
