//! Canonical text form. Printing followed by parsing is the identity on
//! canonical polynomials.

use std::fmt;

use num_traits::Signed;

use super::Polynomial;
use crate::field::Scalar;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let (negative, abs) = match c {
                Scalar::Rational(r) if r.is_negative() => {
                    (true, Scalar::Rational(-r.clone()))
                }
                other => (false, other.clone()),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let mut first = true;
                for (v, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring().var_name(v))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::field::FieldSpec;
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    #[test]
    fn canonical_printing() {
        let r = Ring::new(
            vec!["x".into(), "y".into()],
            FieldSpec::Rationals,
            MonomialOrder::DegRevLex,
        );
        let cases = [
            ("(x+y)^2", "x^2 + 2*x*y + y^2"),
            ("x - x", "0"),
            ("-x + 1", "-x + 1"),
            ("3/2*x - 1/2", "3/2*x - 1/2"),
            ("y*x", "x*y"),
            ("x^2 - 1", "x^2 - 1"),
        ];
        for (input, printed) in cases {
            let p = parse_polynomial(input, &r).unwrap();
            assert_eq!(p.to_string(), printed);
            let back = parse_polynomial(&p.to_string(), &r).unwrap();
            assert_eq!(back, p, "print/parse round trip for {input}");
        }
    }

    #[test]
    fn prime_field_prints_residues() {
        let r = Ring::new(
            vec!["x".into()],
            FieldSpec::prime_field(5).unwrap(),
            MonomialOrder::DegRevLex,
        );
        let p = parse_polynomial("3/2*x - 1", &r).unwrap();
        assert_eq!(p.to_string(), "4*x + 4");
        assert_eq!(parse_polynomial(&p.to_string(), &r).unwrap(), p);
    }
}
