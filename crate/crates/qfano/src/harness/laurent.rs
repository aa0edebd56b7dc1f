//! Polynomials with one inverted variable: `num * x^(-e)`.

use crate::poly::{Poly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub num: Poly,
    pub e: u32,
    /// Index of the inverted variable.
    pub x: usize,
}

impl Laurent {
    pub fn poly(p: Poly, x: usize) -> Laurent {
        Laurent { num: p, e: 0, x }
    }

    /// num / x^e
    pub fn new(num: Poly, e: u32, x: usize) -> Laurent {
        Laurent { num, e, x }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(self) -> Laurent {
        if self.num.is_zero() {
            return Laurent { e: 0, ..self };
        }
        let (q, k) = self.num.divide_out_var(self.x).expect("nonzero");
        let drop = k.min(self.e);
        if drop == 0 {
            return self;
        }
        let r = q.ring().clone();
        Laurent {
            num: &q * &Poly::var_idx(&r, self.x).pow(k - drop),
            e: self.e - drop,
            x: self.x,
        }
    }

    fn lift(&self, e: u32) -> Poly {
        let r = self.num.ring();
        &self.num * &Poly::var_idx(r, self.x).pow(e - self.e)
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let e = self.e.max(o.e);
        Laurent::new(&self.lift(e) + &o.lift(e), e, self.x)
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        Laurent::new(&self.num * &o.num, self.e + o.e, self.x)
    }

    pub fn scale(&self, c: &Scalar) -> Laurent {
        Laurent::new(self.num.scale(c), self.e, self.x)
    }

    pub fn pow(&self, k: u32) -> Laurent {
        Laurent::new(self.num.pow(k), self.e * k, self.x)
    }

    /// Value of `p` (over any ring) at the images, one per variable of `p`'s ring.
    pub fn eval(p: &Poly, images: &[Laurent], x: usize, target: &crate::poly::Ring) -> Laurent {
        let mut acc = Laurent::poly(target.zero(), x);
        let mut powers: Vec<Vec<Laurent>> = vec![Vec::new(); images.len()];
        for (m, c) in p.terms() {
            let mut t = Laurent::poly(target.scalar(c.clone()), x);
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(Laurent::poly(target.one(), x));
                }
                while pw.len() <= k as usize {
                    let next = pw[pw.len() - 1].mul(&images[i]);
                    pw.push(next);
                }
                t = t.mul(&pw[k as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn render(&self, xname: &str) -> String {
        if self.e == 0 {
            self.num.render()
        } else {
            format!("({}) / {}^{}", self.num.render(), xname, self.e)
        }
    }
}
