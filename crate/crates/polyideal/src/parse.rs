//! Text syntax: `2*h^8 - 6*h^4*s + 3/2*s^2`, with parentheses.

use std::sync::Arc;

use coadqh_linalg::{BigInt, Q};
use num_traits::Zero;

use crate::poly::{Poly, Ring};
use crate::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {c:?} at {i}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = match self.toks.get(self.pos) {
                    Some(Tok::Num(n)) if !n.is_zero() => n.clone(),
                    _ => return Err(self.err("expected a nonzero integer divisor")),
                };
                self.pos += 1;
                acc = acc.scale(&Q::new(BigInt::from(1), d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => u32::try_from(n).map_err(|_| self.err("exponent too large"))?,
                _ => return Err(self.err("expected an exponent")),
            };
            self.pos += 1;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.ring, Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Poly::var_named(self.ring, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

pub fn parse(ring: &Arc<Ring>, s: &str) -> Result<Poly, PolyError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(PolyError::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadqh_linalg::q;

    #[test]
    fn round_trip() {
        let r = Ring::new(&[("h", 1), ("s", 4), ("t", 6)]);
        for s in ["2*h^8 - 6*h^4*s + 3*s^2", "-h^12 + 3/2*t^2", "h", "-1", "0"] {
            let p = parse(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn parentheses_and_division() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let p = parse(&r, "(x + y)^2 - 2*x*y/2").unwrap();
        assert_eq!(p, parse(&r, "x^2 + x*y + y^2").unwrap());
        assert_eq!(parse(&r, "3/4").unwrap(), Poly::constant(&r, Q::new(3.into(), 4.into())));
        assert_eq!(parse(&r, "x - x").unwrap(), Poly::zero(&r));
        assert_eq!(parse(&r, "2*x").unwrap().coeff(&[1, 0]), q(2));
    }

    #[test]
    fn errors() {
        let r = Ring::new(&[("x", 1)]);
        assert!(parse(&r, "z").is_err());
        assert!(parse(&r, "x +").is_err());
        assert!(parse(&r, "x/0").is_err());
        assert!(parse(&r, "(x").is_err());
        assert!(parse(&r, "x $").is_err());
    }
}
