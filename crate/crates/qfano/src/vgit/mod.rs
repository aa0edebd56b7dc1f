//! Rank-two toric VGIT: chamber scans, unstable loci, wall crossings and chart stabilizers.

mod snf;
mod weights;

pub use snf::{det, diagonal, identity, matmul, smith_normal_form, IMat};
pub use weights::{eval_entry, Bindings, WeightMatrix};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VgitError {
    #[error("rows and names differ in length")]
    Shape,
    #[error("zero column `{0}`")]
    ZeroColumn(String),
    #[error("duplicate column `{0}`")]
    DuplicateColumn(String),
    #[error("unknown column `{0}`")]
    UnknownColumn(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unbound symbol {0}")]
    Unbound(String),
    #[error("all columns are collinear")]
    Degenerate,
    #[error("columns do not lie in an open half-plane")]
    NotPointed,
    #[error("ray index {0} is not an interior wall")]
    NotAWall(usize),
    #[error("chamber index {0} out of range")]
    NoChamber(usize),
    #[error("wall does not bound the chamber")]
    NotAdjacent,
    #[error("wall crossing has {0} columns on the far side; a monomial map needs exactly one")]
    NoSingleColumn(usize),
    #[error("unit columns span rank {0} < 2: infinite stabilizer")]
    InfiniteStabilizer(usize),
    #[error("unit columns are unstable for this chamber")]
    Unstable,
}

/// Cyclic quotient singularity 1/r(a_1, ..., a_n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicQuotientType {
    pub r: u64,
    pub weights: Vec<u64>,
}

impl CyclicQuotientType {
    pub fn new(r: u64, weights: &[i64]) -> CyclicQuotientType {
        assert!(r >= 1);
        CyclicQuotientType {
            r,
            weights: weights.iter().map(|&a| a.rem_euclid(r as i64) as u64).collect(),
        }
    }

    pub fn sorted(&self) -> CyclicQuotientType {
        let mut w = self.weights.clone();
        w.sort_unstable();
        CyclicQuotientType { r: self.r, weights: w }
    }
}

impl fmt::Display for CyclicQuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|a| a.to_string()).collect();
        write!(f, "1/{}({})", self.r, w.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub dir: (i64, i64),
    pub columns: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberScan {
    /// Counterclockwise, starting after the widest gap.
    pub rays: Vec<Ray>,
}

impl ChamberScan {
    /// Chamber k lies between rays k and k+1.
    pub fn chambers(&self) -> Vec<(usize, usize)> {
        (0..self.rays.len().saturating_sub(1)).map(|k| (k, k + 1)).collect()
    }

    pub fn walls(&self) -> Vec<usize> {
        (1..self.rays.len().saturating_sub(1)).collect()
    }

    pub fn ray_of(&self, column: &str) -> Option<usize> {
        self.rays.iter().position(|r| r.columns.iter().any(|c| c == column))
    }

    /// Chambers at or after the ray carrying `anchor`; the rest are outside the range of interest.
    pub fn chambers_from(&self, anchor: &str) -> Vec<usize> {
        match self.ray_of(anchor) {
            Some(k) => (k..self.rays.len() - 1).collect(),
            None => vec![],
        }
    }

    pub fn rays_from(&self, anchor: &str) -> Vec<usize> {
        match self.ray_of(anchor) {
            Some(k) => (k..self.rays.len()).collect(),
            None => vec![],
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, r) in self.rays.iter().enumerate() {
            s.push_str(&format!("ray {} ({},{}): {}\n", k, r.dir.0, r.dir.1, r.columns.join(" ")));
            if k + 1 < self.rays.len() {
                s.push_str(&format!("  chamber {}\n", k));
            }
        }
        s
    }
}

fn primitive(a: i64, b: i64) -> (i64, i64) {
    let g = a.gcd(&b);
    (a / g, b / g)
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Angular order on directions, half-open [-pi, pi).
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |v: (i64, i64)| if v.1 < 0 || (v.1 == 0 && v.0 < 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

pub fn chamber_scan(w: &WeightMatrix) -> Result<ChamberScan, VgitError> {
    let mut groups: Vec<((i64, i64), Vec<String>)> = Vec::new();
    for j in 0..w.len() {
        let (a, b) = w.column(j);
        let p = primitive(a, b);
        match groups.iter_mut().find(|(d, _)| *d == p) {
            Some((_, cols)) => cols.push(w.names()[j].clone()),
            None => groups.push((p, vec![w.names()[j].clone()])),
        }
    }
    if groups.len() < 2 {
        return Err(VgitError::Degenerate);
    }
    groups.sort_by(|x, y| angle_cmp(x.0, y.0));
    let n = groups.len();
    // widest gap: the pair (k, k+1 mod n) whose counterclockwise angle exceeds pi
    let mut start = None;
    for k in 0..n {
        let (a, b) = (groups[k].0, groups[(k + 1) % n].0);
        let c = cross(a, b);
        if c < 0 || (c == 0 && n > 1 && a != b) {
            if start.is_some() {
                return Err(VgitError::NotPointed);
            }
            start = Some((k + 1) % n);
        }
    }
    let start = start.ok_or(VgitError::NotPointed)?;
    groups.rotate_left(start);
    // all rays must lie strictly within a half-plane: first-to-last turn is less than pi
    if cross(groups[0].0, groups[n - 1].0) <= 0 {
        return Err(if cross(groups[0].0, groups[n - 1].0) == 0 && n == 2 {
            VgitError::Degenerate
        } else {
            VgitError::NotPointed
        });
    }
    Ok(ChamberScan {
        rays: groups.into_iter().map(|(dir, columns)| Ray { dir, columns }).collect(),
    })
}

/// Columns on each side of chamber k: the unstable locus is V(left) union V(right).
pub fn unstable_locus(scan: &ChamberScan, chamber: usize) -> Result<(Vec<String>, Vec<String>), VgitError> {
    if chamber + 1 >= scan.rays.len() {
        return Err(VgitError::NoChamber(chamber));
    }
    let left = scan.rays[..=chamber].iter().flat_map(|r| r.columns.clone()).collect();
    let right = scan.rays[chamber + 1..].iter().flat_map(|r| r.columns.clone()).collect();
    Ok((left, right))
}

/// The functional vanishing on the ray, positive on columns preceding it in angular order.
pub fn wall_functional(dir: (i64, i64)) -> impl Fn((i64, i64)) -> i64 {
    move |q| q.0 * dir.1 - q.1 * dir.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CrossingKind {
    Fibration,
    Divisorial,
    Flip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub wall: usize,
    pub wall_columns: Vec<String>,
    /// Functional values of every non-wall, non-dropped column; positive = preceding side.
    pub side_weights: Vec<(String, i64)>,
    pub kind: CrossingKind,
    pub sum: i64,
}

impl CrossingReport {
    pub fn positive(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.side_weights.iter().map(|x| x.1).filter(|&x| x > 0).collect();
        v.sort_unstable();
        v
    }

    pub fn negative(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.side_weights.iter().map(|x| x.1).filter(|&x| x < 0).collect();
        v.sort_unstable();
        v
    }

    /// `(1^2,2,...; -2,-1)` style rendering.
    pub fn type_string(&self) -> String {
        let fmt = |v: &[i64]| {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &x in v {
                *counts.entry(x).or_default() += 1;
            }
            counts
                .into_iter()
                .map(|(x, c)| if c == 1 { x.to_string() } else { format!("{}^{}", x, c) })
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("({}; {})", fmt(&self.positive()), fmt(&self.negative()))
    }
}

/// Classifies the crossing of an interior ray. `drop` removes columns eliminated on a chart.
///
/// One side empty: fibration. Exactly one side with a single column and the other side
/// larger: divisorial. Anything else is reported as a flip.
pub fn crossing_type(w: &WeightMatrix, scan: &ChamberScan, ray: usize, drop: &[&str]) -> Result<CrossingReport, VgitError> {
    if ray >= scan.rays.len() {
        return Err(VgitError::NotAWall(ray));
    }
    let r = &scan.rays[ray];
    let l = wall_functional(r.dir);
    let mut side = Vec::new();
    for (j, name) in w.names().iter().enumerate() {
        if r.columns.contains(name) || drop.contains(&name.as_str()) {
            continue;
        }
        side.push((name.clone(), l(w.column(j))));
    }
    let np = side.iter().filter(|x| x.1 > 0).count();
    let nn = side.iter().filter(|x| x.1 < 0).count();
    let kind = if np == 0 || nn == 0 {
        CrossingKind::Fibration
    } else if (np == 1) != (nn == 1) {
        CrossingKind::Divisorial
    } else {
        CrossingKind::Flip
    };
    let sum = side.iter().map(|x| x.1).sum();
    Ok(CrossingReport {
        wall: ray,
        wall_columns: r.columns.clone(),
        side_weights: side,
        kind,
        sum,
    })
}

/// Weights of the wall-quotient coordinates when `column` is contracted: the functional
/// vanishing on that column, oriented so that the remaining weights are nonnegative.
pub fn quotient_weights(w: &WeightMatrix, column: &str, drop: &[&str]) -> Result<Vec<(String, i64)>, VgitError> {
    let q = w.col(column)?;
    let p = primitive(q.0, q.1);
    let l = wall_functional(p);
    let mut out: Vec<(String, i64)> = w
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| n.as_str() != column && !drop.contains(&n.as_str()))
        .map(|(j, n)| (n.clone(), l(w.column(j))))
        .collect();
    if out.iter().any(|x| x.1 < 0) {
        for x in out.iter_mut() {
            x.1 = -x.1;
        }
    }
    Ok(out)
}

/// Monomial map with rational exponents: each wall-quotient coordinate becomes
/// `coordinate * far^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub far: String,
    pub images: Vec<(String, BigRational)>,
}

impl MonomialMap {
    pub fn exponent(&self, name: &str) -> Option<&BigRational> {
        self.images.iter().find(|x| x.0 == name).map(|x| &x.1)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|(n, e)| {
                if e == &BigRational::from_integer(0.into()) {
                    n.clone()
                } else if e.is_integer() && e.numer() == &BigInt::from(1) {
                    format!("{}*{}", self.far, n)
                } else if e.is_integer() {
                    format!("{}^{}*{}", self.far, e.numer(), n)
                } else {
                    format!("{}^({}/{})*{}", self.far, e.numer(), e.denom(), n)
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Contraction from `chamber` to the quotient at the bounding ray `wall`, defined when a
/// single column lies beyond the wall.
pub fn wall_map(w: &WeightMatrix, scan: &ChamberScan, chamber: usize, wall: usize) -> Result<MonomialMap, VgitError> {
    if chamber + 1 >= scan.rays.len() {
        return Err(VgitError::NoChamber(chamber));
    }
    let far_rays: Vec<usize> = if wall == chamber {
        (0..wall).collect()
    } else if wall == chamber + 1 {
        (wall + 1..scan.rays.len()).collect()
    } else {
        return Err(VgitError::NotAdjacent);
    };
    let far_cols: Vec<String> = far_rays.iter().flat_map(|&k| scan.rays[k].columns.clone()).collect();
    if far_cols.len() != 1 {
        return Err(VgitError::NoSingleColumn(far_cols.len()));
    }
    let far = far_cols[0].clone();
    let l = wall_functional(scan.rays[wall].dir);
    let le = l(w.col(&far)?);
    let mut images = Vec::new();
    for (j, n) in w.names().iter().enumerate() {
        if *n == far {
            continue;
        }
        let lj = l(w.column(j));
        images.push((n.clone(), BigRational::new(BigInt::from(-lj), BigInt::from(le))));
    }
    Ok(MonomialMap { far, images })
}

/// Finite stabilizer of the points where `units` are nonzero (and set to 1), and its action on
/// the remaining columns minus `exclude`, one cyclic factor per nontrivial invariant factor.
pub fn chart_quotients(
    w: &WeightMatrix,
    scan: &ChamberScan,
    chamber: usize,
    units: &[&str],
    exclude: &[&str],
) -> Result<Vec<CyclicQuotientType>, VgitError> {
    let (left, right) = unstable_locus(scan, chamber)?;
    let meets = |side: &Vec<String>| units.iter().any(|u| side.iter().any(|c| c == u));
    if !meets(&left) || !meets(&right) {
        return Err(VgitError::Unstable);
    }
    let mut q: IMat = vec![Vec::new(), Vec::new()];
    for u in units {
        let c = w.col(u)?;
        q[0].push(c.0 as i128);
        q[1].push(c.1 as i128);
    }
    let (u, s, _v) = smith_normal_form(&q);
    let d = diagonal(&s);
    let rank = d.iter().filter(|&&x| x != 0).count();
    if rank < 2 {
        return Err(VgitError::InfiniteStabilizer(rank));
    }
    let rest: Vec<(i64, i64)> = w
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| !units.contains(&n.as_str()) && !exclude.contains(&n.as_str()))
        .map(|(j, _)| w.column(j))
        .collect();
    let mut out = Vec::new();
    for (i, &di) in d.iter().enumerate() {
        if di > 1 {
            let ws: Vec<i64> = rest
                .iter()
                .map(|c| (u[i][0] * c.0 as i128 + u[i][1] * c.1 as i128).rem_euclid(di) as i64)
                .collect();
            out.push(CyclicQuotientType::new(di as u64, &ws));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_columns() {
        let w = WeightMatrix::new(&["a", "b"], vec![1, 0], vec![0, 1]).unwrap();
        let s = chamber_scan(&w).unwrap();
        assert_eq!(s.rays.len(), 2);
        assert_eq!(s.chambers().len(), 1);
        assert_eq!(unstable_locus(&s, 0).unwrap(), (vec!["a".to_string()], vec!["b".to_string()]));
    }

    #[test]
    fn toy_flip() {
        let w = WeightMatrix::new(&["a", "b", "c"], vec![1, 0, 1], vec![0, 1, 1]).unwrap();
        let s = chamber_scan(&w).unwrap();
        let k = s.ray_of("c").unwrap();
        let c = crossing_type(&w, &s, k, &[]).unwrap();
        assert_eq!(c.kind, CrossingKind::Flip);
        assert_eq!((c.positive(), c.negative()), (vec![1], vec![-1]));
    }

    #[test]
    fn degenerate_and_not_pointed() {
        let w = WeightMatrix::new(&["a", "b"], vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(chamber_scan(&w), Err(VgitError::Degenerate));
        let w = WeightMatrix::new(&["a", "b", "c"], vec![1, -1, 0], vec![0, 0, 1]).unwrap();
        assert_eq!(chamber_scan(&w), Err(VgitError::NotPointed));
    }

    #[test]
    fn weighted_projective_chart() {
        // one C* with weights (1,1,r-1,r) plus a second row fixing the unit column
        let r = 5;
        let w = WeightMatrix::new(&["t", "x", "y", "z", "u"], vec![0, 1, 1, r - 1, r], vec![-1, 0, 0, 0, 0]).unwrap();
        let s = chamber_scan(&w).unwrap();
        let q = chart_quotients(&w, &s, 0, &["t", "u"], &[]).unwrap();
        assert_eq!(q, vec![CyclicQuotientType::new(5, &[1, 1, 4])]);
    }
}
