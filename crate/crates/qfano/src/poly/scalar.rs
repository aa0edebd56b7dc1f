use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field, PolyError> {
        if is_prime(p as u64) {
            Ok(Field::Prime(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    /// 0 encodes the rationals, as on the command line.
    pub fn from_tag(p: u32) -> Result<Field, PolyError> {
        if p == 0 {
            Ok(Field::Rationals)
        } else {
            Field::prime(p)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u32,
                p: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = n.mod_floor(&BigInt::from(*p));
                Scalar::Fp {
                    v: m.to_u32().unwrap(),
                    p: *p,
                }
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, PolyError> {
        match self {
            Field::Rationals => Ok(Scalar::Q(q.clone())),
            Field::Prime(_) => {
                let n = self.from_bigint(q.numer());
                let d = self.from_bigint(q.denom());
                let di = d.inv().ok_or(PolyError::NonInvertible)?;
                Ok(&n * &di)
            }
        }
    }

    pub fn convert(&self, s: &Scalar) -> Result<Scalar, PolyError> {
        match (self, s) {
            (_, Scalar::Q(q)) => self.from_rational(q),
            (Field::Prime(p), Scalar::Fp { p: q, .. }) if p == q => Ok(s.clone()),
            _ => Err(PolyError::FieldMismatch),
        }
    }
}

/// An element of Q or of F_p. Mixing fields in one operation is a bug and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn powmod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1u32 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: powmod(*v, *p as u64 - 2, *p),
                p: *p,
            },
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(num_traits::pow(q.clone(), e as usize)),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: powmod(*v, e as u64, *p),
                p: *p,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// Integer value when the scalar is an integer (or any element of F_p, symmetric lift).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, p } => Some(lift(*v, *p)),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_integer(),
            Scalar::Fp { .. } => true,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { v, p } => lift(*v, *p) < 0,
        }
    }
}

fn lift(v: u32, p: u32) -> i64 {
    if v as u64 * 2 > p as u64 {
        v as i64 - p as i64
    } else {
        v as i64
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, p } => write!(f, "{}", lift(*v, *p)),
        }
    }
}
