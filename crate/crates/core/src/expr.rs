//! Parser for polynomial expressions.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | 'u' '(' set ')' | 'z' '(' set ',' int ')'
//!         | '[' expr ',' expr ']' | '(' expr ')'
//! set    := '{' (int (',' int)*)? '}'
//! sign   := '+' | '-'
//! ```
//!
//! Whitespace is ignored between tokens. `[p,q]` denotes the commutator
//! `pq − qp`. The canonical serialization produced by `Display` for
//! [`Polynomial`] is accepted by this grammar.

use num::{BigInt, Zero};

use crate::complexes::NodeSet;
use crate::error::{Error, Result};
use crate::free_algebra::{GeneratorSymbol, Polynomial, Rational};

/// Parses `text` as a polynomial whose symbols live over `{1,…,n}`.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    NodeSet::empty(n)?;
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.lift(acc.checked_add(&t))?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.lift(acc.checked_sub(&t))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn lift(&self, r: Result<Polynomial>) -> Result<Polynomial> {
        r.map_err(|e| self.err(&e.to_string()))
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.lift(acc.checked_mul(&f))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Polynomial::constant(Rational::new(num, den)))
                } else {
                    Ok(Polynomial::constant(Rational::from_integer(num)))
                }
            }
            Some(b'u') => {
                self.pos += 1;
                self.expect(b'(')?;
                let at = self.pos;
                let a = self.set()?;
                self.expect(b')')?;
                GeneratorSymbol::u(a).map(Polynomial::symbol).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })
            }
            Some(b'z') => {
                self.pos += 1;
                self.expect(b'(')?;
                let at = self.pos;
                let a = self.set()?;
                self.expect(b',')?;
                let i = self.small_int()?;
                self.expect(b')')?;
                if i > u8::MAX as usize {
                    return Err(Error::Parse { pos: at, msg: format!("vertex {i} exceeds n={}", self.n) });
                }
                GeneratorSymbol::z(a, i as u8)
                    .map(Polynomial::symbol)
                    .map_err(|e| Error::Parse { pos: at, msg: e.to_string() })
            }
            Some(b'[') => {
                self.pos += 1;
                let p = self.expr()?;
                self.expect(b',')?;
                let q = self.expr()?;
                self.expect(b']')?;
                self.lift(p.commutator(&q))
            }
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(_) => Err(self.err("expected a number, symbol, '[' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("digits parse"))
    }

    fn small_int(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.integer()?;
        v.try_into().map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })
    }

    fn set(&mut self) -> Result<NodeSet> {
        self.expect(b'{')?;
        let mut elems = Vec::new();
        if self.peek() != Some(b'}') {
            loop {
                elems.push(self.small_int()?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        let at = self.pos;
        self.expect(b'}')?;
        NodeSet::from_elems(self.n, &elems).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{rat, u, z};

    #[test]
    fn parses_documented_example() {
        let p = parse_polynomial("3/2*u({1,2})*u({1}) - [u({1}),u({2})]", 2).unwrap();
        let expected = &(&(&u(2, &[1, 2]) * &u(2, &[1])).scale(&Rational::new(3.into(), 2.into()))
            - &(&u(2, &[1]) * &u(2, &[2])))
            + &(&u(2, &[2]) * &u(2, &[1]));
        assert_eq!(p, expected);
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_polynomial("u({1,2})*z({},1)-2", 2).unwrap();
        let b = parse_polynomial("  u( { 1 , 2 } ) * z( {} , 1 )  -  2 ", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, &(&u(2, &[1, 2]) * &z(2, &[], 1)) - &Polynomial::constant(rat(2)));
    }

    #[test]
    fn parenthesised_products() {
        let p = parse_polynomial("(u({1}) + u({2}))*u({3})", 3).unwrap();
        assert_eq!(p.to_string(), "u({1})*u({3}) + u({2})*u({3})");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_polynomial("u({4})", 3), Err(Error::Parse { .. })));
        let e = parse_polynomial("u({4})", 3).unwrap_err().to_string();
        assert!(e.contains("vertex 4 exceeds n=3"), "{e}");
        assert!(parse_polynomial("u({})", 3).is_err());
        assert!(parse_polynomial("z({1},1)", 3).is_err());
        assert!(parse_polynomial("u({1}) +", 3).is_err());
        assert!(parse_polynomial("1/0", 3).is_err());
        assert!(parse_polynomial("u({1}) u({2})", 3).is_err());
        assert!(parse_polynomial("x", 3).is_err());
    }
}
