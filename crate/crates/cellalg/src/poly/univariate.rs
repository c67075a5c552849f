//! Euclidean arithmetic and separability for univariate polynomials.

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

fn require_univariate(f: &Polynomial) -> Result<()> {
    if f.ring().num_vars() == 1 {
        Ok(())
    } else {
        Err(Error::MultivariateInput)
    }
}

/// Division with remainder: `f = q*g + r` with `deg r < deg g`.
pub fn divmod(f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    require_univariate(f)?;
    if f.ring() != g.ring() {
        return Err(Error::AmbientMismatch);
    }
    assert!(!g.is_zero(), "division by the zero polynomial");
    let ring = f.ring().clone();
    let g_deg = g.degree_in(0);
    let g_lc = g.leading_term().map(|(_, c)| c.clone()).expect("nonzero divisor");
    let g_lc_inv = g_lc.inv().expect("field inverse");
    let mut rem = f.clone();
    let mut quo = ring.zero();
    while !rem.is_zero() && rem.degree_in(0) >= g_deg {
        let d = rem.degree_in(0);
        let lc = rem
            .leading_term()
            .map(|(_, c)| c.clone())
            .expect("nonzero remainder");
        let coeff = lc.mul(&g_lc_inv);
        let shift = Monomial::variable(1, 0, d - g_deg);
        let t = ring.monomial(shift).scale(&coeff);
        quo = quo.add(&t);
        rem = rem.sub(&t.mul(g));
        if d == 0 {
            break;
        }
    }
    Ok((quo, rem))
}

/// Monic greatest common divisor by the Euclidean algorithm.
/// `gcd(0, 0) = 0` by convention.
pub fn gcd_univariate(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    require_univariate(f)?;
    require_univariate(g)?;
    if f.ring() != g.ring() {
        return Err(Error::AmbientMismatch);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = divmod(&a, &b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// True iff `f` has no repeated roots over the algebraic closure, i.e.
/// `gcd(f, f')` is constant. Valid verbatim because both supported fields
/// are perfect.
pub fn is_separable_univariate(f: &Polynomial) -> Result<bool> {
    require_univariate(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd_univariate(f, &f.derivative(0))?;
    Ok(g.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    fn qx() -> Ring {
        Ring::new(vec!["x".into()], FieldSpec::Rationals, MonomialOrder::DegRevLex)
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let r = qx();
        assert_eq!(gcd_univariate(&p(&r, "x^2-1"), &p(&r, "x-1")).unwrap(), p(&r, "x-1"));
        assert_eq!(gcd_univariate(&p(&r, "x^2"), &p(&r, "2*x")).unwrap(), p(&r, "x"));
        // one Euclidean step: x^2+1 = 1*(x^2-1) + 2, so the gcd is constant
        let (_, rem) = divmod(&p(&r, "x^2+1"), &p(&r, "x^2-1")).unwrap();
        assert_eq!(rem, p(&r, "2"));
        assert_eq!(gcd_univariate(&p(&r, "x^2+1"), &p(&r, "x^2-1")).unwrap(), r.one());
        // conventions
        assert!(gcd_univariate(&r.zero(), &r.zero()).unwrap().is_zero());
        assert_eq!(gcd_univariate(&p(&r, "3*x"), &r.zero()).unwrap(), p(&r, "x"));
    }

    #[test]
    fn gcd_rejects_multivariate() {
        let r2 = Ring::new(
            vec!["x".into(), "y".into()],
            FieldSpec::Rationals,
            MonomialOrder::DegRevLex,
        );
        let f = parse_polynomial("x*y", &r2).unwrap();
        assert_eq!(gcd_univariate(&f, &f), Err(Error::MultivariateInput));
    }

    #[test]
    fn separability() {
        let r = qx();
        assert!(is_separable_univariate(&p(&r, "x^2-x")).unwrap());
        assert!(!is_separable_univariate(&p(&r, "x^2")).unwrap());
        assert!(is_separable_univariate(&p(&r, "x^2-2")).unwrap());
        assert!(is_separable_univariate(&r.one()).unwrap());
        assert!(is_separable_univariate(&r.zero()).is_err());
    }

    #[test]
    fn separability_in_char_three() {
        let r = Ring::new(
            vec!["x".into()],
            FieldSpec::prime_field(3).unwrap(),
            MonomialOrder::DegRevLex,
        );
        // x^3 - x = x(x-1)(x+1) over F_3; the derivative is the constant -1,
        // so the Euclidean gcd is 1 and the polynomial is separable.
        let f = p(&r, "x^3 - x");
        assert_eq!(f.derivative(0), p(&r, "-1"));
        assert_eq!(gcd_univariate(&f, &f.derivative(0)).unwrap(), r.one());
        assert!(is_separable_univariate(&f).unwrap());
        // x^3 - 1 = (x - 1)^3 over F_3 is not separable
        assert!(!is_separable_univariate(&p(&r, "x^3 - 1")).unwrap());
    }
}
