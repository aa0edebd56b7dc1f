use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Mono, PolyError, Ring, Scalar};

/// Sparse polynomial; terms sorted by decreasing grevlex monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Mono, Scalar)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; `pow` is `Poly::pow`.
pub fn poly_arith(op: ArithOp, a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
    if a.ring != b.ring {
        return Err(PolyError::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: vec![],
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Poly {
        let c = ring.field().convert(&c).expect("constant in ring field");
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(Mono::one(ring.nvars()), c)],
        }
    }

    pub fn var_idx(ring: &Ring, i: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: vec![(Mono::var(ring.nvars(), i, 1), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Mono, c: Scalar) -> Poly {
        Poly::from_terms(ring, vec![(m, c)])
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, terms: Vec<(Mono, Scalar)>) -> Poly {
        let mut acc: HashMap<Mono, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Mono, Scalar>) -> Poly {
        let mut terms: Vec<(Mono, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees the terms are sorted, distinct and nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Mono, Scalar)>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Scalar)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.0[i]).max()
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0))
            .collect()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[i] > 0)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        assert!(self.ring == o.ring, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b.0.clone(), if negate { -&b.1 } else { b.1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a.1 - &b.1 } else { &a.1 + &b.1 };
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &o.terms[j..] {
            out.push((b.0.clone(), if negate { -&b.1 } else { b.1.clone() }));
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, o: &Poly) -> Poly {
        assert!(self.ring == o.ring, "ring mismatch");
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut acc: HashMap<Mono, Scalar> = HashMap::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
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
        Poly::from_map(&self.ring, acc)
    }

    /// Ring homomorphism into `target`: assigned variables go to their images, the others to
    /// the same-named variable of `target`.
    pub fn substitute(&self, target: &Ring, assignment: &HashMap<String, Poly>) -> Result<Poly, PolyError> {
        let mut images = Vec::with_capacity(self.ring.nvars());
        for i in 0..self.ring.nvars() {
            let name = self.ring.name(i);
            let img = match assignment.get(name) {
                Some(p) => {
                    if p.ring != *target {
                        return Err(PolyError::RingMismatch);
                    }
                    p.clone()
                }
                None => {
                    if self.uses_var(i) {
                        target.var(name)?
                    } else {
                        target.zero()
                    }
                }
            };
            images.push(img);
        }
        self.compose(target, &images)
    }

    /// Evaluates the polynomial at a list of images, one per variable of this ring.
    pub fn compose(&self, target: &Ring, images: &[Poly]) -> Result<Poly, PolyError> {
        let field = target.field();
        let mut powers: Vec<Vec<Poly>> = vec![Vec::new(); images.len()];
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, field.convert(c)?);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(target.one());
                }
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitution inside the same ring by variable index.
    pub fn subs(&self, assignment: &[(usize, Poly)]) -> Poly {
        let mut images: Vec<Poly> = (0..self.ring.nvars()).map(|i| Poly::var_idx(&self.ring, i)).collect();
        for (i, p) in assignment {
            images[*i] = p.clone();
        }
        self.compose(&self.ring, &images).expect("same ring")
    }

    pub fn subs_named(&self, assignment: &[(&str, Poly)]) -> Result<Poly, PolyError> {
        let mut v = Vec::new();
        for (n, p) in assignment {
            v.push((self.ring.idx(n)?, p.clone()));
        }
        Ok(self.subs(&v))
    }

    /// Moves the polynomial to another ring by variable name, converting coefficients.
    pub fn map_to(&self, target: &Ring) -> Result<Poly, PolyError> {
        let field = target.field();
        let mut pos = Vec::with_capacity(self.ring.nvars());
        for i in 0..self.ring.nvars() {
            pos.push(target.index(self.ring.name(i)));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    match pos[i] {
                        Some(j) => e[j] = k,
                        None => return Err(PolyError::MissingVariable(self.ring.name(i).to_string())),
                    }
                }
            }
            terms.push((Mono(e), field.convert(c)?));
        }
        Ok(Poly::from_terms(target, terms))
    }

    pub fn diff(&self, i: usize) -> Poly {
        let field = self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.0[i] -= 1;
            terms.push((mm, c * &field.from_int(e as i64)));
        }
        Poly::from_terms(&self.ring, terms)
    }

    pub fn diff_var(&self, name: &str) -> Result<Poly, PolyError> {
        Ok(self.diff(self.ring.idx(name)?))
    }

    pub fn eval(&self, point: &HashMap<String, Scalar>) -> Result<Scalar, PolyError> {
        let field = self.field();
        let mut vals = Vec::with_capacity(self.ring.nvars());
        for i in 0..self.ring.nvars() {
            match point.get(self.ring.name(i)) {
                Some(v) => vals.push(Some(field.convert(v)?)),
                None => vals.push(None),
            }
        }
        for i in self.vars_used() {
            if vals[i].is_none() {
                return Err(PolyError::MissingAssignment(self.ring.name(i).to_string()));
            }
        }
        let vals: Vec<Scalar> = vals.into_iter().map(|v| v.unwrap_or_else(|| field.zero())).collect();
        Ok(self.eval_slice(&vals))
    }

    pub fn eval_slice(&self, vals: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &vals[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn weighted_parts_by(&self, weights: &[i64]) -> BTreeMap<i64, Poly> {
        let mut parts: BTreeMap<i64, Vec<(Mono, Scalar)>> = BTreeMap::new();
        for t in &self.terms {
            parts.entry(t.0.weight(weights)).or_default().push(t.clone());
        }
        parts
            .into_iter()
            .map(|(w, ts)| (w, Poly::from_sorted(&self.ring, ts)))
            .collect()
    }

    pub fn weighted_parts(&self, row: usize) -> Result<BTreeMap<i64, Poly>, PolyError> {
        Ok(self.weighted_parts_by(self.ring.grading(row)?))
    }

    /// `None` stands for the +infinity weight of the zero polynomial.
    pub fn min_weight_by(&self, weights: &[i64]) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.weight(weights)).min()
    }

    pub fn min_weight(&self, row: usize) -> Result<Option<i64>, PolyError> {
        Ok(self.min_weight_by(self.ring.grading(row)?))
    }

    pub fn min_part_by(&self, weights: &[i64]) -> Poly {
        match self.min_weight_by(weights) {
            None => self.clone(),
            Some(w) => Poly::from_sorted(
                &self.ring,
                self.terms.iter().filter(|(m, _)| m.weight(weights) == w).cloned().collect(),
            ),
        }
    }

    /// Weight of a nonzero homogeneous polynomial under a grading row.
    pub fn homogeneous_weight(&self, row: usize) -> Option<i64> {
        let g = self.ring.grading(row).ok()?;
        let mut ws = self.terms.iter().map(|(m, _)| m.weight(g));
        let w = ws.next()?;
        if ws.all(|x| x == w) {
            Some(w)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, row: usize) -> bool {
        self.is_zero() || self.homogeneous_weight(row).is_some()
    }

    /// p = v^k q with v not dividing q.
    pub fn divide_out_var(&self, i: usize) -> Result<(Poly, u32), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let k = self.terms.iter().map(|(m, _)| m.0[i]).min().unwrap();
        if k == 0 {
            return Ok((self.clone(), 0));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.0[i] -= k;
                (mm, c.clone())
            })
            .collect();
        Ok((Poly::from_terms(&self.ring, terms), k))
    }

    /// Coefficient of v^k, as a polynomial not involving v.
    pub fn coeff_in(&self, i: usize, k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] == k)
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.0[i] = 0;
                (mm, c.clone())
            })
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Drops terms whose total degree in `vars` exceeds `max`.
    pub fn truncate(&self, vars: &[usize], max: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().map(|&i| m.0[i]).sum::<u32>() <= max)
            .cloned()
            .collect();
        Poly::from_sorted(&self.ring, terms)
    }

    /// Lowest total degree in `vars` among the terms, or `None` for zero.
    pub fn order_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&i| m.0[i]).sum::<u32>())
            .min()
    }

    /// Part of total degree exactly `k` in `vars`.
    pub fn degree_part(&self, vars: &[usize], k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().map(|&i| m.0[i]).sum::<u32>() == k)
            .cloned()
            .collect();
        Poly::from_sorted(&self.ring, terms)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.product(o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
