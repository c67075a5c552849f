//! Multivariate polynomials with exact coefficients.
//!
//! A [`Ring`] fixes the variable names, the coefficient field and the
//! monomial order up front; every [`Polynomial`] carries its ring. Terms are
//! kept sorted descending by the ring's order with no zero coefficients, so
//! equal polynomials have identical term sequences.

mod display;
mod monomial;
mod order;
mod parse;
pub mod univariate;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

/// An ambient polynomial ring descriptor. Cheap to clone and share.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Ring {
        let mut seen = vars.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), vars.len(), "duplicate variable names");
        Ring(Arc::new(RingInner { vars, field, order }))
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    /// Same variables and field under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring::new(self.0.vars.clone(), self.0.field, order)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.0.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        assert_eq!(c.field(), self.0.field, "scalar field differs from ring field");
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial {
                ring: self.clone(),
                terms: vec![(Monomial::one(self.num_vars()), c)],
            }
        }
    }

    pub fn integer(&self, n: i64) -> Polynomial {
        self.constant(self.0.field.integer(n))
    }

    pub fn variable(&self, var: usize) -> Polynomial {
        self.monomial(Monomial::variable(self.num_vars(), var, 1))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        assert_eq!(m.num_vars(), self.num_vars());
        Polynomial { ring: self.clone(), terms: vec![(m, self.0.field.one())] }
    }

    /// Builds the canonical polynomial from arbitrary (monomial, coefficient)
    /// pairs: like terms are collected and zeros dropped.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Polynomial {
        let mut map: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), self.num_vars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().collect();
        terms.sort_by(|a, b| self.0.order.compare(&b.0, &a.0));
        Polynomial { ring: self.clone(), terms }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.field)?;
        if !self.0.vars.is_empty() {
            write!(f, "[{}]", self.0.vars.join(", "))?;
        }
        Ok(())
    }
}

/// An exact multivariate polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    /// Sorted descending by the ring's monomial order; no zero coefficients.
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// The polynomial minus its leading term. Preserves canonical form.
    pub(crate) fn drop_leading(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms[1..].to_vec() }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Largest exponent of `var` appearing in any term.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.num_vars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert_eq!(self.ring, other.ring, "ambient ring mismatch");
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        // merge two sorted term lists
        let order = self.ring.order().clone();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.compare(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.ring.from_terms(self.terms.iter().flat_map(|(m, c)| {
            other.terms.iter().map(move |(n, d)| (m.mul(n), c.mul(d)))
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.mul(c))).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero field element has an inverse");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.num_vars(), "variable index out of range");
        let field = *self.ring.field();
        self.ring.from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            let factor = field.integer(e as i64);
            Some((Monomial::from_exponents(exps), c.mul(&factor)))
        }))
    }

    /// Substitutes `images[i]` for variable i; all images must live in
    /// `target`, which must share the coefficient field.
    pub fn substitute_into(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.num_vars(), "one image per variable required");
        assert_eq!(target.field(), self.ring.field(), "field mismatch in substitution");
        for im in images {
            assert_eq!(im.ring(), target, "image outside target ring");
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Rebuilds the polynomial in `target`, mapping each monomial's exponent
    /// vector through `f`. The coefficient field must match.
    pub fn map_exponents(&self, target: &Ring, f: impl Fn(&[u32]) -> Vec<u32>) -> Polynomial {
        assert_eq!(target.field(), self.ring.field());
        target.from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_exponents(f(m.exponents())), c.clone())),
        )
    }

    /// The same polynomial in a ring that differs only in monomial order.
    pub fn with_ring(&self, target: &Ring) -> Polynomial {
        assert_eq!(target.vars(), self.ring.vars());
        assert_eq!(target.field(), self.ring.field());
        target.from_terms(self.terms.iter().cloned())
    }
}

/// Exact ring arithmetic on polynomials sharing an ambient ring.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
