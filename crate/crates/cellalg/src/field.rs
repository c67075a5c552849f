//! Exact coefficient fields: the rationals and prime fields.
//!
//! Both supported fields are perfect, which the separability tests rely on.
//! Rational values are reduced fractions of arbitrary-precision integers;
//! prime-field values are canonical residues in `[0, p)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: ℚ or 𝔽_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds 𝔽_p, verifying that `p` is prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NonPrimeCharacteristic(p))
        }
    }

    /// 0 for ℚ, p for 𝔽_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Residue { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Residue { p: *p, value: 1 % *p },
        }
    }

    /// Embeds a signed integer into the field.
    pub fn integer(&self, n: i64) -> Scalar {
        self.big_integer(&BigInt::from(n))
    }

    /// Embeds an arbitrary-precision integer into the field.
    pub fn big_integer(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                let value = digits.first().copied().unwrap_or(0);
                Scalar::Residue { p: *p, value }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
///
/// Residues carry their modulus so that arithmetic can verify operands
/// belong to the same field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { p, value: a }, Scalar::Residue { p: q, value: b }) => {
                assert_eq!(p, q, "scalar moduli differ");
                Scalar::Residue { p: *p, value: addmod(*a, *b, *p) }
            }
            _ => panic!("scalar fields differ"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { p, value } => {
                Scalar::Residue { p: *p, value: if *value == 0 { 0 } else { p - value } }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { p, value: a }, Scalar::Residue { p: q, value: b }) => {
                assert_eq!(p, q, "scalar moduli differ");
                Scalar::Residue { p: *p, value: mulmod(*a, *b, *p) }
            }
            _ => panic!("scalar fields differ"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Residue { p, value } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Residue { p: *p, value: powmod(*value, p - 2, *p) })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|inv| self.mul(&inv))
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let field = self.field();
        let mut base = self.clone();
        let mut acc = field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Builds a rational from a signed numerator and positive denominator,
    /// interpreted as field division over 𝔽_p.
    pub fn fraction(field: &FieldSpec, numer: &BigInt, denom: &BigInt) -> Option<Scalar> {
        let n = field.big_integer(numer);
        let d = field.big_integer(denom);
        n.div(&d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses decide primality for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_requires_prime() {
        assert!(FieldSpec::prime_field(5).is_ok());
        assert!(FieldSpec::prime_field(2).is_ok());
        assert_eq!(FieldSpec::prime_field(6), Err(Error::NonPrimeCharacteristic(6)));
        assert_eq!(FieldSpec::prime_field(1), Err(Error::NonPrimeCharacteristic(1)));
        assert_eq!(FieldSpec::prime_field(0), Err(Error::NonPrimeCharacteristic(0)));
        assert!(FieldSpec::prime_field(2_147_483_647).is_ok());
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let f = FieldSpec::Rationals;
        let half = Scalar::fraction(&f, &BigInt::from(1), &BigInt::from(2)).unwrap();
        let third = Scalar::fraction(&f, &BigInt::from(1), &BigInt::from(3)).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, Scalar::fraction(&f, &BigInt::from(5), &BigInt::from(6)).unwrap());
        assert_eq!(sum.to_string(), "5/6");
        assert!(half.sub(&half).is_zero());
    }

    #[test]
    fn residues_are_canonical() {
        let f = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f.integer(-1), f.integer(4));
        assert_eq!(f.integer(7).to_string(), "2");
        // 3/2 = 3 * 2^{-1} = 3 * 3 = 9 = 4 in F_5
        let x = Scalar::fraction(&f, &BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(x, f.integer(4));
        // division by an element that reduces to zero
        assert!(Scalar::fraction(&f, &BigInt::from(1), &BigInt::from(5)).is_none());
    }

    #[test]
    fn inverse_and_pow() {
        let f = FieldSpec::prime_field(7).unwrap();
        for v in 1..7 {
            let s = f.integer(v);
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        assert_eq!(f.integer(3).pow(6), f.one());
        let q = FieldSpec::Rationals;
        assert_eq!(q.integer(2).pow(10), q.integer(1024));
    }
}
