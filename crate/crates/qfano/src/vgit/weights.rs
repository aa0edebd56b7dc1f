use std::collections::HashMap;
use std::fmt;

use super::VgitError;

/// 2 x N integer weight matrix with named columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    names: Vec<String>,
    rows: [Vec<i64>; 2],
}

/// Values available to symbolic entries: `d`, `w(name)`, and the expansion of a `*` column.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub d: Option<i64>,
    pub weights: HashMap<String, i64>,
    /// Coordinates substituted for a `*` header column, with their first-row weights.
    pub star: Vec<(String, i64)>,
}

impl WeightMatrix {
    pub fn new<S: AsRef<str>>(names: &[S], row1: Vec<i64>, row2: Vec<i64>) -> Result<WeightMatrix, VgitError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if row1.len() != names.len() || row2.len() != names.len() {
            return Err(VgitError::Shape);
        }
        for (i, n) in names.iter().enumerate() {
            if row1[i] == 0 && row2[i] == 0 {
                return Err(VgitError::ZeroColumn(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(VgitError::DuplicateColumn(n.clone()));
            }
        }
        Ok(WeightMatrix {
            names,
            rows: [row1, row2],
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn column(&self, j: usize) -> (i64, i64) {
        (self.rows[0][j], self.rows[1][j])
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn col(&self, name: &str) -> Result<(i64, i64), VgitError> {
        self.index(name)
            .map(|j| self.column(j))
            .ok_or_else(|| VgitError::UnknownColumn(name.to_string()))
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.rows[r]
    }

    pub fn negated(&self) -> WeightMatrix {
        WeightMatrix {
            names: self.names.clone(),
            rows: [
                self.rows[0].iter().map(|x| -x).collect(),
                self.rows[1].iter().map(|x| -x).collect(),
            ],
        }
    }

    /// Parses the text format: `#` comments, a header of column names, two rows of entries.
    /// Entries are integer-linear expressions in `d` and `w(name)`; a `*` header column
    /// expands to `bindings.star`, its first-row entry must be `*`.
    pub fn parse(text: &str, b: &Bindings) -> Result<WeightMatrix, VgitError> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .collect();
        if lines.len() != 3 {
            return Err(VgitError::Parse(format!("expected 3 non-comment lines, got {}", lines.len())));
        }
        let header: Vec<&str> = lines[0].split_whitespace().collect();
        let r1: Vec<&str> = lines[1].split_whitespace().collect();
        let r2: Vec<&str> = lines[2].split_whitespace().collect();
        if r1.len() != header.len() || r2.len() != header.len() {
            return Err(VgitError::Parse("row length differs from header".into()));
        }
        let (mut names, mut row1, mut row2) = (Vec::new(), Vec::new(), Vec::new());
        for k in 0..header.len() {
            if header[k] == "*" {
                if r1[k] != "*" {
                    return Err(VgitError::Parse("`*` column needs `*` in the first row".into()));
                }
                let second = eval_entry(r2[k], b)?;
                for (n, w) in &b.star {
                    names.push(n.clone());
                    row1.push(*w);
                    row2.push(second);
                }
            } else {
                names.push(header[k].to_string());
                row1.push(eval_entry(r1[k], b)?);
                row2.push(eval_entry(r2[k], b)?);
            }
        }
        WeightMatrix::new(&names, row1, row2)
    }

    pub fn render(&self) -> String {
        let width: Vec<usize> = (0..self.len())
            .map(|j| {
                self.names[j]
                    .len()
                    .max(self.rows[0][j].to_string().len())
                    .max(self.rows[1][j].to_string().len())
            })
            .collect();
        let line = |cells: Vec<String>| {
            cells
                .iter()
                .zip(&width)
                .map(|(c, w)| format!("{:>w$}", c, w = w))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "{}\n{}\n{}\n",
            line(self.names.clone()),
            line(self.rows[0].iter().map(|x| x.to_string()).collect()),
            line(self.rows[1].iter().map(|x| x.to_string()).collect())
        )
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Evaluates `3d+3`, `3*d-1`, `-1`, `w(s1)+2`, `d` and the like.
pub fn eval_entry(s: &str, b: &Bindings) -> Result<i64, VgitError> {
    let bad = || VgitError::Parse(format!("bad entry `{}`", s));
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut total = 0i64;
    let mut first = true;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !first {
            return Err(bad());
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i64> = if i > start { Some(s[start..i].parse().map_err(|_| bad())?) } else { None };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let atom: Option<i64> = if i < bytes.len() && bytes[i] == b'd' {
            i += 1;
            Some(b.d.ok_or_else(|| VgitError::Unbound("d".into()))?)
        } else if s[i..].starts_with("w(") {
            let close = s[i..].find(')').ok_or_else(bad)? + i;
            let name = &s[i + 2..close];
            i = close + 1;
            Some(*b.weights.get(name).ok_or_else(|| VgitError::Unbound(format!("w({})", name)))?)
        } else {
            None
        };
        let v = match (coef, atom) {
            (Some(c), Some(a)) => c * a,
            (Some(c), None) => c,
            (None, Some(a)) => a,
            (None, None) => return Err(bad()),
        };
        total += sign * v;
    }
    if first {
        return Err(bad());
    }
    Ok(total)
}
