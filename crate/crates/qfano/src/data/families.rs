use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::text::{identifiers, lines};
use super::{DataError, S_POINT_VARS};
use crate::poly::{parse_poly, Field, Poly, Ring};
use crate::vgit::CyclicQuotientType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    Dp,
    Div,
}

#[derive(Clone, Debug)]
pub struct SectionTemplate {
    pub weight: i64,
    pub target: String,
    /// Right-hand side as text; free coefficients are identifiers that are not coordinates.
    pub text: String,
}

#[derive(Clone, Debug)]
pub struct FamilyRecord {
    pub id: u32,
    pub kind: Kind,
    pub d: i64,
    /// `(z, p2)` when p2 plays the role of the weight-1 coordinate z.
    pub alias: Option<(String, String)>,
    /// Coordinates of the weighted projective space containing X.
    pub embedding: Vec<(String, i64)>,
    /// Ambient weights of every coordinate of the key variety (plus z for Dp).
    pub weights: Vec<(String, i64)>,
    pub sections: Vec<SectionTemplate>,
    pub s1_quotient: CyclicQuotientType,
}

pub fn family_ids() -> Vec<u32> {
    vec![501, 512, 550, 872, 577, 878, 1766]
}

fn parse_err(line: usize, msg: impl Into<String>) -> DataError {
    DataError::Parse {
        file: "families.txt".into(),
        line,
        msg: msg.into(),
    }
}

fn named_weights(line: usize, s: &str) -> Result<Vec<(String, i64)>, DataError> {
    s.split_whitespace()
        .map(|t| {
            let (n, w) = t.split_once(':').ok_or_else(|| parse_err(line, "expected name:weight"))?;
            Ok((n.to_string(), w.parse().map_err(|_| parse_err(line, "bad weight"))?))
        })
        .collect()
}

fn load_all() -> Result<Vec<FamilyRecord>, DataError> {
    let mut out = Vec::new();
    let mut cur: Option<FamilyRecord> = None;
    for (line, l) in lines(super::FAMILIES) {
        let (key, rest) = l.split_once(' ').unwrap_or((l, ""));
        let rest = rest.trim();
        if key == "family" {
            cur = Some(FamilyRecord {
                id: rest.parse().map_err(|_| parse_err(line, "bad id"))?,
                kind: Kind::Dp,
                d: 0,
                alias: None,
                embedding: vec![],
                weights: vec![],
                sections: vec![],
                s1_quotient: CyclicQuotientType::new(1, &[]),
            });
            continue;
        }
        let f = cur.as_mut().ok_or_else(|| parse_err(line, "entry outside a family block"))?;
        match key {
            "kind" => {
                f.kind = match rest {
                    "Dp" => Kind::Dp,
                    "Div" => Kind::Div,
                    _ => return Err(parse_err(line, "kind is Dp or Div")),
                }
            }
            "d" => {
                f.d = rest.parse().map_err(|_| parse_err(line, "bad d"))?;
                f.s1_quotient = CyclicQuotientType::new(f.d as u64 + 1, &[1, 1, f.d]);
            }
            "alias" => {
                let (a, b) = rest.split_once(' ').ok_or_else(|| parse_err(line, "alias needs two names"))?;
                f.alias = Some((a.to_string(), b.trim().to_string()));
            }
            "embedding" => f.embedding = named_weights(line, rest)?,
            "weights" => f.weights = named_weights(line, rest)?,
            "section" => {
                let (w, rel) = rest.split_once(' ').ok_or_else(|| parse_err(line, "section needs a weight"))?;
                let (t, rhs) = rel.split_once('=').ok_or_else(|| parse_err(line, "section needs `=`"))?;
                let target = t.trim().to_string();
                if S_POINT_VARS.contains(&target.as_str()) || identifiers(rhs).iter().any(|i| S_POINT_VARS.contains(&i.as_str())) {
                    return Err(DataError::SectionUsesS(target));
                }
                f.sections.push(SectionTemplate {
                    weight: w.parse().map_err(|_| parse_err(line, "bad weight"))?,
                    target,
                    text: rhs.trim().to_string(),
                });
            }
            "end" => out.push(cur.take().unwrap()),
            _ => return Err(parse_err(line, format!("unknown key `{}`", key))),
        }
    }
    Ok(out)
}

pub fn family(id: u32) -> Result<FamilyRecord, DataError> {
    load_all()?
        .into_iter()
        .find(|f| f.id == id)
        .ok_or(DataError::UnknownFamily(id))
}

impl FamilyRecord {
    pub fn weight(&self, name: &str) -> Option<i64> {
        self.weights.iter().find(|(n, _)| n == name).map(|(_, w)| *w)
    }

    /// The coordinate playing the role of z.
    pub fn z(&self) -> &str {
        match &self.alias {
            Some((_, b)) => b,
            None => "z",
        }
    }

    pub fn coordinates(&self) -> Vec<&str> {
        self.weights.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Coordinate ring with the ambient grading as its only row.
    pub fn ring(&self, field: Field) -> Ring {
        let names = self.coordinates();
        Ring::new(&names, vec![self.weights.iter().map(|(_, w)| *w).collect()], field).expect("valid family coordinates")
    }

    /// Free coefficient names of all templates, sorted.
    pub fn coefficients(&self) -> Vec<String> {
        let coords: BTreeSet<&str> = self.coordinates().into_iter().collect();
        let mut set = BTreeSet::new();
        for s in &self.sections {
            for id in identifiers(&s.text) {
                if !coords.contains(id.as_str()) {
                    set.insert(id);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Coordinate ring extended by the free coefficients (weight 0).
    pub fn coefficient_ring(&self, field: Field) -> Result<Ring, DataError> {
        Ok(self.ring(field).extend(&self.coefficients(), &[])?)
    }

    /// Templates as polynomials in the coefficient-extended ring.
    pub fn templates(&self, ring: &Ring) -> Result<Vec<(String, Poly)>, DataError> {
        self.sections
            .iter()
            .map(|s| Ok((s.target.clone(), parse_poly(ring, &s.text)?)))
            .collect()
    }

    /// Seeded coefficients: nonzero rationals with numerator and denominator in [-50, 50].
    pub fn sections(&self, seed: u64) -> SectionInstance {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let assignment = self
            .coefficients()
            .into_iter()
            .map(|c| {
                let mut num = 0i64;
                while num == 0 {
                    num = rng.gen_range(-50..=50);
                }
                let mut den = 0i64;
                while den == 0 {
                    den = rng.gen_range(-50..=50);
                }
                (c, BigRational::new(BigInt::from(num), BigInt::from(den)))
            })
            .collect();
        SectionInstance {
            family: self.id,
            seed,
            assignment,
        }
    }

    pub fn sections_with(&self, assignment: Vec<(String, BigRational)>) -> SectionInstance {
        SectionInstance {
            family: self.id,
            seed: 0,
            assignment,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionInstance {
    pub family: u32,
    pub seed: u64,
    pub assignment: Vec<(String, BigRational)>,
}

impl SectionInstance {
    /// Substitution `target -> template(coefficients)` with polynomials in `ring`, which must
    /// contain every coordinate used on the right-hand sides.
    pub fn substitution(&self, fam: &FamilyRecord, ring: &Ring) -> Result<Vec<(String, Poly)>, DataError> {
        let field = ring.field();
        let cring = fam.coefficient_ring(field)?;
        let mut coeffs = HashMap::new();
        for (n, q) in &self.assignment {
            coeffs.insert(n.clone(), ring.scalar(field.from_rational(q)?));
        }
        let mut out = Vec::new();
        for (t, p) in fam.templates(&cring)? {
            let mut assign = coeffs.clone();
            for i in p.vars_used() {
                let n = cring.name(i);
                if !assign.contains_key(n) {
                    assign.insert(n.to_string(), ring.var(n)?);
                }
            }
            out.push((t, p.substitute(ring, &assign)?));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue() {
        let want = [(501, Kind::Dp, 7), (512, Kind::Dp, 6), (550, Kind::Dp, 5), (872, Kind::Dp, 4), (577, Kind::Div, 4), (878, Kind::Div, 3), (1766, Kind::Div, 2)];
        for (id, k, d) in want {
            let f = family(id).unwrap();
            assert_eq!((f.kind, f.d), (k, d));
            assert_eq!(f.embedding.len(), 8);
            assert_eq!(f.weights.len() - f.sections.len(), 8, "{}", id);
            let s1 = f.weight("s1").unwrap();
            assert_eq!(f.weight("s2"), Some(s1 + 1));
            assert_eq!(f.weight("s3"), Some(s1 + 2));
            assert_eq!(s1, d + 1);
        }
        assert_eq!(family(999).unwrap_err(), DataError::UnknownFamily(999));
        assert_eq!(family(872).unwrap().z(), "p2");
    }

    #[test]
    fn table_example() {
        let f = family(501).unwrap();
        let r = f.coefficient_ring(Field::Rationals).unwrap();
        let t = f.templates(&r).unwrap();
        assert_eq!(t[0].0, "t1");
        assert_eq!(t[0].1, parse_poly(&r, "a1*z^2").unwrap());
        assert_eq!(t[1].1, parse_poly(&r, "a245*z^2").unwrap());
    }

    #[test]
    fn seeded() {
        let f = family(512).unwrap();
        assert_eq!(f.sections(0), f.sections(0));
        assert_ne!(f.sections(0), f.sections(1));
        for (_, q) in f.sections(3).assignment {
            assert!(*q.numer() != BigInt::from(0));
        }
    }
}
