//! expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
//! factor := INT | IDENT | '(' expr ')' | factor '^' UINT.
//! A single leading sign is also accepted at the start of an expr, since the
//! displayed equations routinely begin with a minus.

use num_bigint::BigInt;

use super::{Poly, PolyError, Ring};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'(' => self.err("implicit multiplication"),
            _ => Ok(acc),
        }
    }

    fn uint(&mut self) -> Result<String, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected unsigned integer");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let mut base = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.uint()?;
                let n: BigInt = digits.parse().expect("digits");
                self.ring.scalar(self.ring.field().from_bigint(&n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.ring.index(&name) {
                    Some(i) => Poly::var_idx(self.ring, i),
                    None => return Err(PolyError::UnknownIdentifier { name, pos: start }),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                e
            }
            Some(_) => return self.err("unexpected character"),
            None => return self.err("unexpected end of input"),
        };
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let e: u32 = match self.uint()?.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            base = base.pow(e);
        }
        Ok(base)
    }
}

pub fn parse_poly(ring: &Ring, text: &str) -> Result<Poly, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn grammar() {
        let r = Ring::new(&["x", "y", "t_1"], vec![], Field::Rationals).unwrap();
        let p = parse_poly(&r, "x^2 - 2*x*y + y^2").unwrap();
        assert_eq!(p, parse_poly(&r, "(x - y)^2").unwrap());
        assert_eq!(parse_poly(&r, "-(x)^2^2").unwrap(), -&r.var("x").unwrap().pow(4));
        assert!(parse_poly(&r, "t_1 + 1").is_ok());
        assert!(matches!(
            parse_poly(&r, "x + q"),
            Err(PolyError::UnknownIdentifier { pos: 4, .. })
        ));
        assert!(matches!(parse_poly(&r, "2 x"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly(&r, "(x + y"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly(&r, "x ^ -1"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly(&r, ""), Err(PolyError::Syntax { .. })));
    }
}
