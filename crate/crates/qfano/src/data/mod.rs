//! Encoded matrices, polynomials, chart relations, weight matrices and family tables.
//!
//! Everything is stored as plain text under `data/` and parsed on demand.

mod families;
mod text;

pub use families::{family, family_ids, FamilyRecord, Kind, SectionInstance, SectionTemplate};
pub use text::{parse_defs, parse_expr};

use std::collections::HashMap;

use thiserror::Error;

use crate::poly::{Field, Poly, PolyError, PolyMatrix, Ring};
use crate::vgit::{Bindings, VgitError, WeightMatrix};

pub const MATRIX_M: &str = include_str!("../../data/matrix_m.txt");
pub const MINORS: &str = include_str!("../../data/minors.txt");
pub const HYPERSURFACE: &str = include_str!("../../data/hypersurface.txt");
pub const EQUATIONS_F: &str = include_str!("../../data/equations_f.txt");
pub const EXCEPTIONAL_PARAM: &str = include_str!("../../data/exceptional_param.txt");
pub const SMOOTH_POINT: &str = include_str!("../../data/smooth_point.txt");
pub const CHART_S135: &str = include_str!("../../data/charts_s135.txt");
pub const CHART_S124: &str = include_str!("../../data/charts_s124.txt");
pub const CHART_S123: &str = include_str!("../../data/charts_s123.txt");
pub const CHART_S246: &str = include_str!("../../data/charts_s246.txt");
pub const TRANSITIONS: &str = include_str!("../../data/transitions.txt");
pub const FAMILIES: &str = include_str!("../../data/families.txt");
pub const WEIGHTS_STAGE_ONE: &str = include_str!("../../data/weights_stage_one.txt");
pub const WEIGHTS_STAGE_TWO_DP: &str = include_str!("../../data/weights_stage_two_dp.txt");
pub const WEIGHTS_STAGE_TWO_DIV: &str = include_str!("../../data/weights_stage_two_div.txt");

/// Every shipped data file, by file name.
pub const FILES: [(&str, &str); 15] = [
    ("matrix_m.txt", MATRIX_M),
    ("minors.txt", MINORS),
    ("hypersurface.txt", HYPERSURFACE),
    ("equations_f.txt", EQUATIONS_F),
    ("exceptional_param.txt", EXCEPTIONAL_PARAM),
    ("smooth_point.txt", SMOOTH_POINT),
    ("charts_s135.txt", CHART_S135),
    ("charts_s124.txt", CHART_S124),
    ("charts_s123.txt", CHART_S123),
    ("charts_s246.txt", CHART_S246),
    ("transitions.txt", TRANSITIONS),
    ("families.txt", FAMILIES),
    ("weights_stage_one.txt", WEIGHTS_STAGE_ONE),
    ("weights_stage_two_dp.txt", WEIGHTS_STAGE_TWO_DP),
    ("weights_stage_two_div.txt", WEIGHTS_STAGE_TWO_DIV),
];

pub const M_VARS: [&str; 8] = ["p1", "p2", "p3", "p4", "u1", "u2", "t1", "t2"];
pub const T_BLOCK: [&str; 7] = ["t123", "t124", "t125", "t126", "t135", "t136", "t245"];
pub const S_BLOCK: [&str; 8] = ["s123", "s124", "s125", "s126", "s135", "s136", "s245", "s246"];
pub const S_POINT_VARS: [&str; 3] = ["s1", "s2", "s3"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DataError {
    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },
    #[error("unknown family {0}")]
    UnknownFamily(u32),
    #[error("minor needs three distinct increasing columns, got {0:?}")]
    RepeatedColumn([usize; 3]),
    #[error("section for {0} involves s1, s2 or s3")]
    SectionUsesS(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Vgit(#[from] VgitError),
}

fn ring_of(groups: &[&[&str]], field: Field) -> Ring {
    let names: Vec<&str> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    Ring::new(&names, vec![], field).expect("fixed names")
}

/// Ring of the entries of M.
pub fn m_ring(field: Field) -> Ring {
    ring_of(&[&M_VARS], field)
}

/// Ring of the hypersurface F: entries of M and the t_ijk.
pub fn hyp_ring(field: Field) -> Ring {
    ring_of(&[&M_VARS, &T_BLOCK], field)
}

/// Ring of F1..F9: key coordinates, s1 s2 s3 and the blow-up variable w.
pub fn f_ring(field: Field) -> Ring {
    ring_of(&[&M_VARS, &T_BLOCK, &S_POINT_VARS, &["w"]], field)
}

/// Ring of the second torus action: key coordinates except s1 s2 s3, w2, the s_ijk.
pub fn stage_two_ring(field: Field) -> Ring {
    ring_of(&[&M_VARS, &T_BLOCK, &["w2"], &S_BLOCK], field)
}

pub fn matrix_m(ring: &Ring) -> Result<PolyMatrix, DataError> {
    let mut entries = Vec::new();
    let mut rows = 0;
    for (line, text) in text::lines(MATRIX_M) {
        for cell in text.split(',') {
            entries.push(parse_expr(ring, cell, &HashMap::new()).map_err(|e| text::at("matrix_m.txt", line, e))?);
        }
        rows += 1;
    }
    let cols = entries.len() / rows.max(1);
    Ok(PolyMatrix::new(rows, cols, entries)?)
}

/// Column triples (1-based) of the listed generators, in order.
pub fn minor_triples() -> Vec<[usize; 3]> {
    let (_, text) = text::lines(MINORS).next().expect("minors.txt has one line");
    text.split_whitespace()
        .map(|w| {
            let d: Vec<usize> = w.bytes().map(|b| (b - b'0') as usize).collect();
            [d[0], d[1], d[2]]
        })
        .collect()
}

pub fn minor_name(c: [usize; 3]) -> String {
    format!("D{}{}{}", c[0], c[1], c[2])
}

/// D_ijk: the 3x3 minor of M on columns i < j < k (1-based).
pub fn minor(ring: &Ring, c: [usize; 3]) -> Result<Poly, DataError> {
    if !(1 <= c[0] && c[0] < c[1] && c[1] < c[2] && c[2] <= 6) {
        return Err(DataError::RepeatedColumn(c));
    }
    let m = matrix_m(ring)?;
    Ok(m.minor(&[0, 1, 2], &[c[0] - 1, c[1] - 1, c[2] - 1])?)
}

/// The eight listed minors with their names.
pub fn minors_d(ring: &Ring) -> Result<Vec<(String, Poly)>, DataError> {
    let m = matrix_m(ring)?;
    minor_triples()
        .into_iter()
        .map(|c| Ok((minor_name(c), m.minor(&[0, 1, 2], &[c[0] - 1, c[1] - 1, c[2] - 1])?)))
        .collect()
}

/// Parses hypersurface.txt up to the definition of `name`, so F only needs the ring of F.
fn hypersurface_def(ring: &Ring, name: &str) -> Result<Poly, DataError> {
    let mut src = String::new();
    for l in HYPERSURFACE.lines() {
        src.push_str(l);
        src.push('\n');
        if l.split_once('=').is_some_and(|(lhs, _)| lhs.trim() == name) {
            break;
        }
    }
    let defs = parse_defs("hypersurface.txt", &src, ring, &HashMap::new())?;
    Ok(defs.into_iter().find(|(n, _)| n == name).expect("definition present").1)
}

/// The hypersurface F: a combination of the eight minors with t-coefficients.
pub fn f_bar_pi(ring: &Ring) -> Result<Poly, DataError> {
    hypersurface_def(ring, "F")
}

/// The bilinear form I in the t-block and the s_ijk.
pub fn unprojection_i(ring: &Ring) -> Result<Poly, DataError> {
    hypersurface_def(ring, "I")
}

/// F1..F9.
pub fn equations_f(ring: &Ring) -> Result<Vec<Poly>, DataError> {
    Ok(parse_defs("equations_f.txt", EQUATIONS_F, ring, &HashMap::new())?
        .into_iter()
        .map(|(_, p)| p)
        .collect())
}

/// Parametrization of the exceptional divisor over the s1-point, with s1 = 1.
pub fn exceptional_param(ring: &Ring) -> Result<Vec<(String, Poly)>, DataError> {
    parse_defs("exceptional_param.txt", EXCEPTIONAL_PARAM, ring, &HashMap::new())
}

/// Integer coordinates of the smooth point; unlisted coordinates are zero.
pub fn smooth_point() -> Vec<(String, i64)> {
    text::lines(SMOOTH_POINT)
        .map(|(_, l)| {
            let (a, b) = l.split_once('=').expect("name = value");
            (a.trim().to_string(), b.trim().parse().expect("integer value"))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Chart {
    S124,
    S135,
    S123,
    S246,
}

impl Chart {
    pub const ALL: [Chart; 4] = [Chart::S124, Chart::S135, Chart::S123, Chart::S246];

    pub fn var(self) -> &'static str {
        match self {
            Chart::S124 => "s124",
            Chart::S135 => "s135",
            Chart::S123 => "s123",
            Chart::S246 => "s246",
        }
    }

    fn text(self) -> (&'static str, &'static str) {
        match self {
            Chart::S124 => ("charts_s124.txt", CHART_S124),
            Chart::S135 => ("charts_s135.txt", CHART_S135),
            Chart::S123 => ("charts_s123.txt", CHART_S123),
            Chart::S246 => ("charts_s246.txt", CHART_S246),
        }
    }

    /// The t-coordinate eliminated by I = 0 on this chart, if any.
    pub fn eliminated_t(self) -> Option<&'static str> {
        match self {
            Chart::S124 => Some("t124"),
            Chart::S135 => Some("t135"),
            Chart::S123 => Some("t123"),
            Chart::S246 => None,
        }
    }
}

impl std::str::FromStr for Chart {
    type Err = String;
    fn from_str(s: &str) -> Result<Chart, String> {
        Chart::ALL
            .into_iter()
            .find(|c| c.var() == s)
            .ok_or_else(|| format!("unknown chart `{}`", s))
    }
}

/// `var = numerator / den^power`, with minors in the numerator expanded.
#[derive(Clone, Debug)]
pub struct ChartRelation {
    pub var: String,
    pub numerator: Poly,
    pub den: String,
    pub power: u32,
}

impl ChartRelation {
    /// den^power * var - numerator.
    pub fn cleared(&self) -> Result<Poly, PolyError> {
        let r = self.numerator.ring();
        Ok(&(&r.var(&self.den)?.pow(self.power) * &r.var(&self.var)?) - &self.numerator)
    }
}

pub fn chart_relations(chart: Chart, ring: &Ring) -> Result<Vec<ChartRelation>, DataError> {
    let (file, src) = chart.text();
    let mut out = Vec::new();
    for (line, l) in text::lines(src) {
        let err = |msg: &str| DataError::Parse {
            file: file.into(),
            line,
            msg: msg.into(),
        };
        let (lhs, rhs) = l.split_once('=').ok_or_else(|| err("expected `=`"))?;
        let (num, den) = rhs.rsplit_once('/').ok_or_else(|| err("expected `/`"))?;
        let (den, power) = match den.split_once('^') {
            Some((v, k)) => (v.trim(), k.trim().parse().map_err(|_| err("bad power"))?),
            None => (den.trim(), 1),
        };
        let numerator = parse_expr(ring, num, &HashMap::new()).map_err(|e| text::at(file, line, e))?;
        out.push(ChartRelation {
            var: lhs.trim().to_string(),
            numerator,
            den: den.to_string(),
            power,
        });
    }
    Ok(out)
}

/// Ratio coordinate `(sA/sB)` as a variable name.
pub fn ratio_name(a: &str, b: &str) -> String {
    format!("{}_{}", a, b)
}

/// Two blocks of transition relations over P^1 with ratio coordinates as variables.
#[derive(Clone, Debug)]
pub struct Transitions {
    pub ring: Ring,
    /// s135-chart coordinates in terms of s123-chart coordinates.
    pub from_s123: Vec<(String, Poly)>,
    /// s123-chart coordinates in terms of s135-chart coordinates.
    pub from_s135: Vec<(String, Poly)>,
}

/// Rewrites `(sA/sB)^-1` and `(sA/sB)` to ratio variable names.
pub fn rewrite_ratios(s: &str) -> String {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find("(s") {
        let tail = &rest[i + 1..];
        let close = tail.find(')');
        let inner = close.map(|c| &tail[..c]);
        match inner.and_then(|x| x.split_once('/')) {
            Some((a, b)) if a.bytes().all(|c| c.is_ascii_alphanumeric()) && b.bytes().all(|c| c.is_ascii_alphanumeric()) => {
                out.push_str(&rest[..i]);
                let after = &tail[close.unwrap() + 1..];
                if let Some(r) = after.strip_prefix("^-1") {
                    out.push_str(&ratio_name(b, a));
                    rest = r;
                } else {
                    out.push_str(&ratio_name(a, b));
                    rest = after;
                }
            }
            _ => {
                out.push_str(&rest[..i + 1]);
                rest = &rest[i + 1..];
            }
        }
    }
    out.push_str(rest);
    out
}

pub fn transitions(field: Field) -> Result<Transitions, DataError> {
    let mut blocks: Vec<Vec<(usize, String, String)>> = Vec::new();
    for (line, l) in text::lines(TRANSITIONS) {
        if l.starts_with('[') {
            blocks.push(Vec::new());
            continue;
        }
        let l = rewrite_ratios(l);
        let (a, b) = l.split_once('=').ok_or_else(|| DataError::Parse {
            file: "transitions.txt".into(),
            line,
            msg: "expected `=`".into(),
        })?;
        blocks
            .last_mut()
            .ok_or_else(|| DataError::Parse {
                file: "transitions.txt".into(),
                line,
                msg: "relation before block header".into(),
            })?
            .push((line, a.trim().to_string(), b.trim().to_string()));
    }
    let mut names: Vec<String> = Vec::new();
    for (_, a, b) in blocks.iter().flatten() {
        for id in text::identifiers(a).into_iter().chain(text::identifiers(b)) {
            if !names.contains(&id) {
                names.push(id);
            }
        }
    }
    names.sort();
    let ring = Ring::new(&names, vec![], field)?;
    let mut parsed = Vec::new();
    for block in &blocks {
        let mut v = Vec::new();
        for (line, a, b) in block {
            let p = parse_expr(&ring, b, &HashMap::new()).map_err(|e| text::at("transitions.txt", *line, e))?;
            v.push((a.clone(), p));
        }
        parsed.push(v);
    }
    if parsed.len() != 2 {
        return Err(DataError::Parse {
            file: "transitions.txt".into(),
            line: 0,
            msg: "expected two blocks".into(),
        });
    }
    let from_s135 = parsed.pop().unwrap();
    let from_s123 = parsed.pop().unwrap();
    Ok(Transitions {
        ring,
        from_s123,
        from_s135,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Stage {
    One,
    Two,
}

/// Fully numeric weight matrix of the first or second torus action for a family.
pub fn weight_matrix(stage: Stage, fam: &FamilyRecord) -> Result<WeightMatrix, DataError> {
    let b = Bindings {
        d: Some(fam.d),
        weights: fam.weights.iter().cloned().collect(),
        star: fam
            .weights
            .iter()
            .filter(|(n, _)| !S_POINT_VARS.contains(&n.as_str()))
            .cloned()
            .collect(),
    };
    let text = match (stage, fam.kind) {
        (Stage::One, _) => WEIGHTS_STAGE_ONE,
        (Stage::Two, Kind::Dp) => WEIGHTS_STAGE_TWO_DP,
        (Stage::Two, Kind::Div) => WEIGHTS_STAGE_TWO_DIV,
    };
    Ok(WeightMatrix::parse(text, &b)?)
}
