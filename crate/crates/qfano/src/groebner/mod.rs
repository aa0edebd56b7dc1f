//! Buchberger's algorithm with normal pair selection and Gebauer–Möller pruning.

mod ideal;
mod order;

pub use ideal::{contains, dim, eliminate, ideal_equal, radical_member, dim_of_basis};
pub use order::{Cmp, MonomialOrder};

use std::cmp::Ordering;
use std::time::Instant;

use thiserror::Error;

use crate::poly::{Mono, Poly, PolyError, Ring, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("budget exceeded after {0} S-pair reductions")]
    Budget(u64),
    #[error("deadline reached after {0} S-pair reductions")]
    Deadline(u64),
    #[error("empty generator list needs an explicit ring")]
    NoRing,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug)]
pub struct GbConfig {
    /// Maximum number of S-pair reductions.
    pub max_pairs: u64,
    pub deadline: Option<Instant>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 5_000_000,
            deadline: None,
        }
    }
}

type Terms = Vec<(Mono, Scalar)>;

/// Reduced Gröbner basis, generators monic and sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    cmp: Cmp,
    polys: Vec<Terms>,
    /// S-pair reductions performed while computing the basis.
    pub pairs_reduced: u64,
}

pub(crate) fn sort_terms(p: &Poly, cmp: &Cmp) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| cmp.cmp(&b.0, &a.0));
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.inv().unwrap();
            for (_, a) in t.iter_mut() {
                *a = &*a * &inv;
            }
        }
    }
}

/// f - c * q * g, all sorted decreasingly.
fn sub_mul(f: &[(Mono, Scalar)], c: &Scalar, q: &Mono, g: &[(Mono, Scalar)], cmp: &Cmp) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(m, a)| (q.mul(m), -&(a * c))).peekable();
    while i < f.len() {
        match gi.peek() {
            None => break,
            Some((gm, gc)) => match cmp.cmp(&f[i].0, gm) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(gi.next().unwrap());
                }
                Ordering::Equal => {
                    let s = &f[i].1 + gc;
                    if !s.is_zero() {
                        out.push((f[i].0.clone(), s));
                    }
                    i += 1;
                    gi.next();
                }
            },
        }
    }
    out.extend(f[i..].iter().cloned());
    out.extend(gi);
    out
}

struct Reducer<'a> {
    cmp: &'a Cmp,
    deadline: Option<Instant>,
}

impl Reducer<'_> {
    /// Full reduction of `f` by the monic polynomials `basis` (indices into `store`).
    fn reduce(&self, mut f: Terms, store: &[Terms], basis: &[usize]) -> Result<Terms, ()> {
        let mut rem: Terms = Vec::new();
        let mut steps = 0u64;
        while !f.is_empty() {
            steps += 1;
            if steps % 4096 == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        return Err(());
                    }
                }
            }
            let lead = &f[0].0;
            let div = basis.iter().find(|&&k| store[k][0].0.divides(lead));
            match div {
                Some(&k) => {
                    let g = &store[k];
                    let q = g[0].0.quotient_of(lead);
                    let c = f[0].1.clone();
                    f = sub_mul(&f[1..], &c, &q, &g[1..], self.cmp);
                }
                None => {
                    // peel off the irreducible prefix in one go
                    let mut j = 1;
                    while j < f.len() && !basis.iter().any(|&k| store[k][0].0.divides(&f[j].0)) {
                        j += 1;
                    }
                    rem.extend(f.drain(..j));
                }
            }
        }
        Ok(rem)
    }
}

fn spoly(a: &Terms, b: &Terms, cmp: &Cmp) -> Terms {
    let l = a[0].0.lcm(&b[0].0);
    let qa = a[0].0.quotient_of(&l);
    let qb = b[0].0.quotient_of(&l);
    let fa: Terms = a[1..].iter().map(|(m, c)| (qa.mul(m), c.clone())).collect();
    sub_mul(&fa, &b[0].1, &qb, &b[1..], cmp)
}

/// Gebauer–Möller update with the new polynomial `h`.
fn update(store: &[Terms], active: &mut Vec<usize>, pairs: &mut Vec<(usize, usize, Mono)>, h: usize) {
    let lt = |k: usize| &store[k][0].0;
    let lh = lt(h).clone();
    let mut c: Vec<(usize, Mono)> = active.iter().map(|&g| (g, lh.lcm(lt(g)))).collect();
    let mut d: Vec<(usize, Mono)> = Vec::new();
    while let Some((g1, l1)) = c.pop() {
        let coprime = lh.gcd_is_one(lt(g1));
        let dominated = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
        if coprime || !dominated {
            d.push((g1, l1));
        }
    }
    let e: Vec<(usize, usize, Mono)> = d
        .into_iter()
        .filter(|(g, _)| !lh.gcd_is_one(lt(*g)))
        .map(|(g, l)| (g, h, l))
        .collect();
    pairs.retain(|(a, b, l)| {
        !(lh.divides(l) && lh.lcm(lt(*a)) != *l && lh.lcm(lt(*b)) != *l)
    });
    pairs.extend(e);
    active.retain(|&g| !lh.divides(lt(g)));
    active.push(h);
}

impl GroebnerBasis {
    pub fn compute(ring: &Ring, gens: &[Poly], order: &MonomialOrder, cfg: &GbConfig) -> Result<GroebnerBasis, GbError> {
        for g in gens {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch.into());
            }
        }
        let cmp = order.comparator(ring.nvars());
        let red = Reducer {
            cmp: &cmp,
            deadline: cfg.deadline,
        };
        let mut store: Vec<Terms> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<(usize, usize, Mono)> = Vec::new();
        let mut reduced = 0u64;

        let mut input: Vec<Terms> = gens.iter().filter(|g| !g.is_zero()).map(|g| sort_terms(g, &cmp)).collect();
        input.sort_by(|a, b| cmp.cmp(&a[0].0, &b[0].0));
        for f in input {
            let mut r = red.reduce(f, &store, &active).map_err(|_| GbError::Deadline(0))?;
            if r.is_empty() {
                continue;
            }
            make_monic(&mut r);
            store.push(r);
            let h = store.len() - 1;
            update(&store, &mut active, &mut pairs, h);
        }

        while !pairs.is_empty() {
            // normal strategy: smallest lcm, ties by index
            let mut best = 0;
            for k in 1..pairs.len() {
                let o = cmp.cmp(&pairs[k].2, &pairs[best].2);
                if o == Ordering::Less || (o == Ordering::Equal && (pairs[k].0, pairs[k].1) < (pairs[best].0, pairs[best].1)) {
                    best = k;
                }
            }
            let (a, b, _) = pairs.swap_remove(best);
            reduced += 1;
            if reduced > cfg.max_pairs {
                return Err(GbError::Budget(cfg.max_pairs));
            }
            let s = spoly(&store[a], &store[b], &cmp);
            let mut r = red.reduce(s, &store, &active).map_err(|_| GbError::Deadline(reduced))?;
            if r.is_empty() {
                continue;
            }
            make_monic(&mut r);
            store.push(r);
            let h = store.len() - 1;
            update(&store, &mut active, &mut pairs, h);
        }

        // minimal, then interreduced
        let mut leads: Vec<usize> = active.clone();
        leads.sort_by(|&x, &y| cmp.cmp(&store[x][0].0, &store[y][0].0).then(x.cmp(&y)));
        let mut minimal: Vec<usize> = Vec::new();
        for &k in &leads {
            if !minimal.iter().any(|&j| store[j][0].0.divides(&store[k][0].0)) {
                minimal.push(k);
            }
        }
        let mut out: Vec<Terms> = Vec::with_capacity(minimal.len());
        for (pos, &k) in minimal.iter().enumerate() {
            let others: Vec<usize> = minimal.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &j)| j).collect();
            let head = store[k][0].clone();
            let tail = red
                .reduce(store[k][1..].to_vec(), &store, &others)
                .map_err(|_| GbError::Deadline(reduced))?;
            let mut t = vec![head];
            t.extend(tail);
            out.push(t);
        }
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            cmp,
            polys: out,
            pairs_reduced: reduced,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0][0].0.is_one()
    }

    pub fn generators(&self) -> Vec<Poly> {
        self.polys.iter().map(|t| Poly::from_terms(&self.ring, t.clone())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.polys.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly, GbError> {
        if p.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let red = Reducer {
            cmp: &self.cmp,
            deadline: None,
        };
        let idx: Vec<usize> = (0..self.polys.len()).collect();
        let r = red.reduce(sort_terms(p, &self.cmp), &self.polys, &idx).expect("no deadline");
        Ok(Poly::from_terms(&self.ring, r))
    }

    pub fn reduces_to_zero(&self, p: &Poly) -> Result<bool, GbError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn certificate(&self) -> bool {
        let red = Reducer {
            cmp: &self.cmp,
            deadline: None,
        };
        let idx: Vec<usize> = (0..self.polys.len()).collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = spoly(&self.polys[i], &self.polys[j], &self.cmp);
                if !red.reduce(s, &self.polys, &idx).expect("no deadline").is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced basis: monic, no leading monomial divides a term of another generator.
    pub fn is_reduced(&self) -> bool {
        for (i, p) in self.polys.iter().enumerate() {
            if !p[0].1.is_one() {
                return false;
            }
            for (j, q) in self.polys.iter().enumerate() {
                if i != j && q.iter().any(|(m, _)| p[0].0.divides(m)) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn groebner(ring: &Ring, gens: &[Poly], order: &MonomialOrder) -> Result<GroebnerBasis, GbError> {
    GroebnerBasis::compute(ring, gens, order, &GbConfig::default())
}

pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Result<Poly, GbError> {
    gb.normal_form(p)
}
