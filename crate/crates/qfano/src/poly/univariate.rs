//! Dense univariate polynomials over a field, just enough for squarefree tests of binary forms.

use super::{Field, Poly, Scalar};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub field: Field,
    pub coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> UPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * &self.field.from_int(i as i64))
            .collect();
        UPoly::new(self.field, c)
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs[dd].inv().unwrap();
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] * &lead_inv;
            if !q.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    let k = top - dd + i;
                    r[k] = &r[k] - &(&q * c);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UPoly::new(self.field, r)
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.coeffs.last().cloned() {
            let inv = l.inv().unwrap();
            a = UPoly::new(a.field, a.coeffs.iter().map(|c| c * &inv).collect());
        }
        a
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Squarefreeness of a binary form in variables `a`, `b` of degree `r`
/// (equivalently: a product of r pairwise coprime linear forms over the closure).
pub fn binary_form_squarefree(g: &Poly, a: usize, b: usize, r: u32) -> bool {
    if g.is_zero() {
        return false;
    }
    if g.terms().iter().any(|(m, _)| {
        m.degree() != r || m.0.iter().enumerate().any(|(i, &e)| e > 0 && i != a && i != b)
    }) {
        return false;
    }
    let field = g.field();
    let mut coeffs = vec![field.zero(); r as usize + 1];
    for (m, c) in g.terms() {
        coeffs[m.0[a] as usize] = c.clone();
    }
    let h = UPoly::new(field, coeffs);
    // b^2 | g  <=>  deg h <= r - 2
    let deg = h.degree().unwrap_or(0);
    if deg + 2 <= r as usize {
        return false;
    }
    h.is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    #[test]
    fn binary_forms() {
        let r = Ring::plain(&["z", "w"]);
        let f = |s: &str| parse_poly(&r, s).unwrap();
        assert!(binary_form_squarefree(&f("z^2 + w^2"), 0, 1, 2));
        assert!(binary_form_squarefree(&f("z*w*(z + w)"), 0, 1, 3));
        assert!(!binary_form_squarefree(&f("z^2*w"), 0, 1, 3));
        assert!(!binary_form_squarefree(&f("z*w^2"), 0, 1, 3));
        assert!(!binary_form_squarefree(&f("(z - 2*w)^2*(z + w)"), 0, 1, 3));
        assert!(binary_form_squarefree(&f("z^3 - w^3"), 0, 1, 3));
        assert!(!binary_form_squarefree(&f("z^3 + w"), 0, 1, 3));
    }
}
