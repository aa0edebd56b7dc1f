use super::{Poly, PolyError, Ring};

/// Rectangular matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<PolyMatrix, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::OutOfBounds);
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.ring() != first.ring()) {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0].ring()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: e,
        }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Determinant of the submatrix on the given (0-based) rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Poly, PolyError> {
        if rows.len() != cols.len() {
            return Err(PolyError::NonSquare(rows.len(), cols.len()));
        }
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(PolyError::OutOfBounds);
        }
        Ok(self.det(rows, cols))
    }

    fn det(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let n = rows.len();
        if n == 0 {
            return self.ring().one();
        }
        if n == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = self.ring().zero();
        let sub_rows = &rows[1..];
        for k in 0..n {
            let e = self.get(rows[0], cols[k]);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &c)| c).collect();
            let t = e * &self.det(sub_rows, &sub_cols);
            acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    /// Laplace expansion along the `along`-th selected row; used to cross-check `minor`.
    pub fn minor_along_row(&self, rows: &[usize], cols: &[usize], along: usize) -> Result<Poly, PolyError> {
        if rows.len() != cols.len() {
            return Err(PolyError::NonSquare(rows.len(), cols.len()));
        }
        let n = rows.len();
        let mut acc = self.ring().zero();
        let rest: Vec<usize> = rows.iter().enumerate().filter(|(i, _)| *i != along).map(|(_, &r)| r).collect();
        for k in 0..n {
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &c)| c).collect();
            let t = self.get(rows[along], cols[k]) * &self.minor(&rest, &sub_cols)?;
            acc = if (along + k) % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    /// All k x k minors, rows and columns in lexicographic order of index subsets.
    pub fn minors(&self, k: usize) -> Vec<(Vec<usize>, Vec<usize>, Poly)> {
        let mut out = Vec::new();
        for r in subsets(self.rows, k) {
            for c in subsets(self.cols, k) {
                let m = self.det(&r, &c);
                out.push((r.clone(), c, m));
            }
        }
        out
    }
}

/// k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn small_minors() {
        let r = Ring::plain(&["a", "b", "c", "d"]);
        let e: Vec<Poly> = ["a", "b", "c", "d"].iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        let m = PolyMatrix::new(2, 2, e).unwrap();
        assert_eq!(m.minor(&[0], &[1]).unwrap(), r.var("b").unwrap());
        assert_eq!(m.minor(&[0, 1], &[0, 1]).unwrap(), parse_poly(&r, "a*d - b*c").unwrap());
        assert!(m.minor(&[0, 1], &[0, 0]).unwrap().is_zero());
        assert!(matches!(m.minor(&[0, 1], &[0]), Err(PolyError::NonSquare(2, 1))));
        assert_eq!(subsets(6, 3).len(), 20);
    }
}
