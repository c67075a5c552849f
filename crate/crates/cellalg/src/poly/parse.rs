//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! expr     := ('+' | '-')? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' natural)?
//! atom     := variable | rational | '(' expr ')'
//! rational := '-'? natural ('/' natural)?
//! ```
//!
//! Whitespace is ignored; juxtaposition is not multiplication. Over 𝔽_p the
//! `/` in a rational literal denotes field division.

use num_bigint::BigInt;

use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let n: BigInt = digits.parse().expect("digit run parses as integer");
                toks.push((start, Tok::Nat(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::PolyParse {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(Lexer { toks, end: text.len() })
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(ref t) if t == want => Ok(()),
            _ => Err(Error::PolyParse { pos, msg: format!("expected {what}") }),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate_first = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate_first = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Nat(n)) => {
                    let exp: u32 = n.try_into().map_err(|_| Error::PolyParse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(exp))
                }
                _ => Err(Error::PolyParse { pos, msg: "expected natural exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.variable(i)),
                None => Err(Error::UnknownVariable { pos, name }),
            },
            Some(Tok::Nat(n)) => self.rational_tail(pos, n),
            Some(Tok::Minus) => {
                let pos2 = self.here();
                match self.bump() {
                    Some(Tok::Nat(n)) => Ok(self.rational_tail(pos2, n)?.neg()),
                    _ => Err(Error::PolyParse {
                        pos: pos2,
                        msg: "expected integer after `-`".into(),
                    }),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::PolyParse {
                pos,
                msg: "expected variable, number or `(`".into(),
            }),
        }
    }

    fn rational_tail(&mut self, pos: usize, numer: BigInt) -> Result<Polynomial> {
        let field = *self.ring.field();
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let dpos = self.here();
            match self.bump() {
                Some(Tok::Nat(d)) => {
                    if d == BigInt::from(0) {
                        return Err(Error::PolyParse {
                            pos: dpos,
                            msg: "denominator must be a positive integer".into(),
                        });
                    }
                    match Scalar::fraction(&field, &numer, &d) {
                        Some(c) => Ok(self.ring.constant(c)),
                        None => Err(Error::DivisionByZero { pos: dpos }),
                    }
                }
                _ => Err(Error::PolyParse {
                    pos: dpos,
                    msg: "expected positive integer denominator".into(),
                }),
            }
        } else {
            let _ = pos;
            Ok(self.ring.constant(field.big_integer(&numer)))
        }
    }
}

/// Parses `text` as a polynomial in `ring`, returning the canonical
/// expanded form.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let lexer = lex(text)?;
    let mut p = Parser { toks: &lexer.toks, pos: 0, end: lexer.end, ring };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::PolyParse {
            pos: p.here(),
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::MonomialOrder;

    fn ring_q(vars: &[&str]) -> Ring {
        Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rationals,
            MonomialOrder::DegRevLex,
        )
    }

    #[test]
    fn binomial_square_expands() {
        let r = ring_q(&["x", "y"]);
        let p = parse_polynomial("(x+y)^2", &r).unwrap();
        let expected = parse_polynomial("x^2 + 2*x*y + y^2", &r).unwrap();
        assert_eq!(p, expected);
        let x = r.variable(0);
        let y = r.variable(1);
        let manual = &(&x.pow(2) + &x.mul(&y).scale(&FieldSpec::Rationals.integer(2))) + &y.pow(2);
        assert_eq!(p, manual);
    }

    #[test]
    fn field_division_in_literals() {
        let f5 = Ring::new(
            vec!["x".into()],
            FieldSpec::prime_field(5).unwrap(),
            MonomialOrder::DegRevLex,
        );
        // 3/2 = 4 in F_5
        let p = parse_polynomial("3/2*x", &f5).unwrap();
        assert_eq!(p, f5.variable(0).scale(&f5.field().integer(4)));
        assert_eq!(
            parse_polynomial("1/5", &f5),
            Err(Error::DivisionByZero { pos: 2 })
        );
    }

    #[test]
    fn cancellation_gives_zero() {
        let r = ring_q(&["x"]);
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn error_positions() {
        let r = ring_q(&["x"]);
        match parse_polynomial("x + z", &r) {
            Err(Error::UnknownVariable { pos, name }) => {
                assert_eq!(pos, 4);
                assert_eq!(name, "z");
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
        // juxtaposition is not multiplication
        match parse_polynomial("2x", &r) {
            Err(Error::PolyParse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_polynomial("x +", &r).is_err());
        assert!(parse_polynomial("(x", &r).is_err());
        assert!(parse_polynomial("x ^ y", &r).is_err());
        assert!(parse_polynomial("1/0", &r).is_err());
    }

    #[test]
    fn signed_literals_and_leading_sign() {
        let r = ring_q(&["x"]);
        let x = r.variable(0);
        assert_eq!(parse_polynomial("-x + 1", &r).unwrap(), &r.one() - &x);
        assert_eq!(
            parse_polynomial("x*-2", &r).unwrap(),
            x.scale(&FieldSpec::Rationals.integer(-2))
        );
        assert_eq!(parse_polynomial("-3/2", &r).unwrap(), r.one().scale(
            &Scalar::fraction(&FieldSpec::Rationals, &BigInt::from(-3), &BigInt::from(2)).unwrap()
        ));
    }
}
