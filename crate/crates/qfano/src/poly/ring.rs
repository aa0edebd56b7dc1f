use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{Field, Poly, PolyError, Scalar};

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    names: Vec<String>,
    gradings: Vec<Vec<i64>>,
    field: Field,
    index: HashMap<String, usize>,
}

/// Polynomial ring with an ordered variable registry. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

fn valid_ident(s: &str) -> bool {
    let mut it = s.chars();
    match it.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    it.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(
        names: &[S],
        gradings: Vec<Vec<i64>>,
        field: Field,
    ) -> Result<Ring, PolyError> {
        if names.is_empty() {
            return Err(PolyError::NoVariables);
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !valid_ident(n) {
                return Err(PolyError::BadIdentifier(n.to_string()));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::DuplicateName(n.to_string()));
            }
            owned.push(n.to_string());
        }
        for (row, g) in gradings.iter().enumerate() {
            if g.len() != owned.len() {
                return Err(PolyError::GradingLength {
                    row,
                    got: g.len(),
                    expected: owned.len(),
                });
            }
        }
        Ok(Ring(Arc::new(RingData {
            names: owned,
            gradings,
            field,
            index,
        })))
    }

    /// Ungraded ring over Q.
    pub fn plain<S: AsRef<str>>(names: &[S]) -> Ring {
        Ring::new(names, vec![], Field::Rationals).expect("valid names")
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn idx(&self, name: &str) -> Result<usize, PolyError> {
        self.index(name)
            .ok_or_else(|| PolyError::MissingVariable(name.to_string()))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn gradings(&self) -> &[Vec<i64>] {
        &self.0.gradings
    }

    pub fn grading(&self, row: usize) -> Result<&[i64], PolyError> {
        self.0
            .gradings
            .get(row)
            .map(|r| r.as_slice())
            .ok_or(PolyError::NoGrading(row))
    }

    pub fn var(&self, name: &str) -> Result<Poly, PolyError> {
        Ok(Poly::var_idx(self, self.idx(name)?))
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self)
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self, self.field().one())
    }

    pub fn int(&self, n: i64) -> Poly {
        Poly::constant(self, self.field().from_int(n))
    }

    pub fn scalar(&self, s: Scalar) -> Poly {
        Poly::constant(self, s)
    }

    pub fn with_field(&self, field: Field) -> Result<Ring, PolyError> {
        Ring::new(&self.0.names, self.0.gradings.clone(), field)
    }

    pub fn with_gradings(&self, gradings: Vec<Vec<i64>>) -> Result<Ring, PolyError> {
        Ring::new(&self.0.names, gradings, self.0.field)
    }

    /// Appends variables; each new variable gets the given entry in every grading row.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S], weights: &[Vec<i64>]) -> Result<Ring, PolyError> {
        let mut names: Vec<String> = self.0.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        let mut gradings = self.0.gradings.clone();
        for (r, g) in gradings.iter_mut().enumerate() {
            for j in 0..extra.len() {
                g.push(weights.get(j).and_then(|w| w.get(r)).copied().unwrap_or(0));
            }
        }
        Ring::new(&names, gradings, self.0.field)
    }

    /// Subring on a subset of variables, keeping registry order and gradings.
    pub fn restrict(&self, keep: &[&str]) -> Result<Ring, PolyError> {
        let idx: Vec<usize> = self
            .0
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| keep.contains(&n.as_str()))
            .map(|(i, _)| i)
            .collect();
        let names: Vec<&str> = idx.iter().map(|&i| self.0.names[i].as_str()).collect();
        let gradings = self
            .0
            .gradings
            .iter()
            .map(|g| idx.iter().map(|&i| g[i]).collect())
            .collect();
        Ring::new(&names, gradings, self.0.field)
    }

    pub fn same(&self, o: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.0 == o.0
    }
}

impl PartialEq for Ring {
    fn eq(&self, o: &Ring) -> bool {
        self.same(o)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({:?}; {:?})", self.0.names, self.0.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_ring_errors() {
        assert!(matches!(
            Ring::new(&["x", "x"], vec![], Field::Rationals),
            Err(PolyError::DuplicateName(_))
        ));
        assert!(matches!(
            Ring::new(&["x", "y"], vec![vec![1]], Field::Rationals),
            Err(PolyError::GradingLength { .. })
        ));
        assert!(matches!(
            Ring::new(&["x"], vec![], Field::Prime(15)),
            Err(PolyError::NotPrime(15))
        ));
        let r = Ring::new(&["x", "y"], vec![vec![1, 1]], Field::Rationals).unwrap();
        assert_eq!(r.nvars(), 2);
        assert_eq!(r.index("y"), Some(1));
    }
}
