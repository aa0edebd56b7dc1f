//! Smith normal form over the integers with unimodular transforms.

pub type IMat = Vec<Vec<i128>>;

pub fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

pub fn matmul(a: &IMat, b: &IMat) -> IMat {
    let (n, k) = (a.len(), b.len());
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn det(a: &IMat) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0];
    }
    let mut acc = 0;
    for k in 0..n {
        if a[0][k] == 0 {
            continue;
        }
        let sub: IMat = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect())
            .collect();
        let t = a[0][k] * det(&sub);
        acc += if k % 2 == 0 { t } else { -t };
    }
    acc
}

/// Returns (U, S, V) with U * A * V = S diagonal, d1 | d2 | ..., d_i >= 0.
pub fn smith_normal_form(a: &IMat) -> (IMat, IMat, IMat) {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut s = a.clone();
    let mut u = identity(n);
    let mut v = identity(m);

    fn swap_rows(x: &mut IMat, i: usize, j: usize) {
        x.swap(i, j);
    }
    fn swap_cols(x: &mut IMat, i: usize, j: usize) {
        for r in x.iter_mut() {
            r.swap(i, j);
        }
    }
    // row_i += c * row_j
    fn add_row(x: &mut IMat, i: usize, j: usize, c: i128) {
        let rj = x[j].clone();
        for (a, b) in x[i].iter_mut().zip(rj) {
            *a += c * b;
        }
    }
    fn add_col(x: &mut IMat, i: usize, j: usize, c: i128) {
        for r in x.iter_mut() {
            r[i] += c * r[j];
        }
    }

    for t in 0..n.min(m) {
        loop {
            // pivot: smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..m {
                    if s[i][j] != 0 && best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (u, s, v);
            };
            swap_rows(&mut s, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut s, t, pj);
            swap_cols(&mut v, t, pj);
            let mut clean = true;
            for i in t + 1..n {
                let q = s[i][t].div_euclid(s[t][t]);
                if q != 0 {
                    add_row(&mut s, i, t, -q);
                    add_row(&mut u, i, t, -q);
                }
                if s[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..m {
                let q = s[t][j].div_euclid(s[t][t]);
                if q != 0 {
                    add_col(&mut s, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                if s[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold a non-divisible entry into row t
            let mut bad = None;
            'outer: for i in t + 1..n {
                for j in t + 1..m {
                    if s[i][j] % s[t][t] != 0 {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    add_row(&mut s, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if s[t][t] < 0 {
            for x in s[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    (u, s, v)
}

pub fn diagonal(s: &IMat) -> Vec<i128> {
    let n = s.len();
    let m = if n == 0 { 0 } else { s[0].len() };
    (0..n.min(m)).map(|i| s[i][i]).collect()
}
