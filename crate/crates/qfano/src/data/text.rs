use std::collections::HashMap;

use super::{minor, DataError};
use crate::poly::{parse_poly, Poly, PolyError, Ring};

/// Non-empty lines with `#` comments removed, numbered from 1.
pub(crate) fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub(crate) fn at(file: &str, line: usize, e: DataError) -> DataError {
    match e {
        DataError::Poly(p) => DataError::Parse {
            file: file.into(),
            line,
            msg: p.to_string(),
        },
        other => other,
    }
}

pub(crate) fn identifiers(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let id = s[start..i].to_string();
            if !out.contains(&id) {
                out.push(id);
            }
        } else {
            i += 1;
        }
    }
    out
}

fn minor_columns(name: &str) -> Option<[usize; 3]> {
    let d = name.strip_prefix('D')?;
    if d.len() != 3 || !d.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let v: Vec<usize> = d.bytes().map(|c| (c - b'0') as usize).collect();
    Some([v[0], v[1], v[2]])
}

/// Parses `text` over `ring`, expanding names bound in `env` and minor names `Dijk`.
pub fn parse_expr(ring: &Ring, text: &str, env: &HashMap<String, Poly>) -> Result<Poly, DataError> {
    let mut extra = Vec::new();
    let mut assign = HashMap::new();
    for id in identifiers(text) {
        if ring.index(&id).is_some() {
            continue;
        }
        let value = match env.get(&id) {
            Some(p) => p.clone(),
            None => match minor_columns(&id) {
                Some(c) => minor(ring, c)?,
                None => {
                    return Err(PolyError::UnknownIdentifier {
                        name: id,
                        pos: 0,
                    }
                    .into())
                }
            },
        };
        assign.insert(id.clone(), value);
        extra.push(id);
    }
    if extra.is_empty() {
        return Ok(parse_poly(ring, text)?);
    }
    let ext = ring.extend(&extra, &[])?;
    let p = parse_poly(&ext, text)?;
    Ok(p.substitute(ring, &assign)?)
}

/// Parses `name = expr` lines; each definition is visible to later lines.
pub fn parse_defs(file: &str, src: &str, ring: &Ring, env: &HashMap<String, Poly>) -> Result<Vec<(String, Poly)>, DataError> {
    let mut env = env.clone();
    let mut out = Vec::new();
    for (line, l) in lines(src) {
        let (lhs, rhs) = l.split_once('=').ok_or_else(|| DataError::Parse {
            file: file.into(),
            line,
            msg: "expected `name = expression`".into(),
        })?;
        let p = parse_expr(ring, rhs, &env).map_err(|e| at(file, line, e))?;
        let name = lhs.trim().to_string();
        env.insert(name.clone(), p.clone());
        out.push((name, p));
    }
    Ok(out)
}
