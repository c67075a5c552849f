//! Quotient rings `B = K[x..]/I` presented by a reduced Gröbner basis.
//!
//! Elements are identified with their normal forms. When the ideal is
//! zero-dimensional the standard monomials form an explicit K-basis, and
//! multiplication matrices, minimal polynomials, unit and zero-divisor tests
//! all reduce to exact linear algebra.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::ScalarMatrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

use super::ideal_ops::{ideal_quotient, invert_mod_ideal};
use super::{buchberger, normal_form, Budget, GroebnerBasis, IdealPresentation};

/// K-dimension of a quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dimension::Finite(_))
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Result of a unit test in the quotient ring.
#[derive(Debug, Clone)]
pub struct UnitTest {
    pub is_unit: bool,
    /// An inverse witness `c` with `NF(b*c) = 1`, when one was computed.
    pub inverse: Option<Polynomial>,
}

/// Result of a zero-divisor test in the quotient ring.
#[derive(Debug, Clone)]
pub struct ZeroDivisorTest {
    pub is_zero_divisor: bool,
    /// A witness `g` with `NF(g) != 0` and `NF(g*b) = 0`, when one exists.
    pub witness: Option<Polynomial>,
}

/// A quotient `K[x..]/I` with its reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    presentation: IdealPresentation,
    gb: GroebnerBasis,
    zero_dimensional: bool,
    standard_monomials: Option<Vec<Monomial>>,
    monomial_index: HashMap<Monomial, usize>,
    budget: Budget,
}

impl QuotientRing {
    pub fn new(presentation: IdealPresentation) -> Result<QuotientRing> {
        Self::with_budget(presentation, Budget::default())
    }

    pub fn with_budget(presentation: IdealPresentation, budget: Budget) -> Result<QuotientRing> {
        let order = presentation.ring().order().clone();
        let gb = buchberger(&presentation, &order, &budget)?;
        let zero_dimensional = gb_is_zero_dimensional(&gb);
        let standard_monomials = if zero_dimensional {
            Some(enumerate_standard_monomials(&gb))
        } else {
            None
        };
        let monomial_index = standard_monomials
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(QuotientRing {
            presentation,
            gb,
            zero_dimensional,
            standard_monomials,
            monomial_index,
            budget,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn presentation(&self) -> &IdealPresentation {
        &self.presentation
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// True iff every variable has a pure power among the leading monomials,
    /// equivalently the standard monomial set is finite.
    pub fn is_zero_dimensional(&self) -> bool {
        self.zero_dimensional
    }

    /// The monomials divisible by no leading monomial of the basis; a
    /// K-basis of the quotient when zero-dimensional.
    pub fn standard_monomials(&self) -> Option<&[Monomial]> {
        self.standard_monomials.as_deref()
    }

    pub fn dim(&self) -> Dimension {
        match &self.standard_monomials {
            Some(b) => Dimension::Finite(b.len()),
            None => Dimension::Infinite,
        }
    }

    /// Whether the quotient is the zero ring (1 lies in the ideal).
    pub fn is_zero_ring(&self) -> bool {
        self.gb.contains_one()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.gb).expect("element of the ambient ring")
    }

    /// Equality in the quotient.
    pub fn equivalent(&self, f: &Polynomial, g: &Polynomial) -> bool {
        self.normal_form(&f.sub(g)).is_zero()
    }

    /// Coordinates of `NF(f)` on the standard-monomial basis.
    pub fn coords(&self, f: &Polynomial) -> Result<Vec<Scalar>> {
        let basis = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let nf = self.normal_form(f);
        let mut v = vec![self.ring().field().zero(); basis.len()];
        for (m, c) in nf.terms() {
            let idx = *self
                .monomial_index
                .get(m)
                .expect("normal form supported on standard monomials");
            v[idx] = c.clone();
        }
        Ok(v)
    }

    /// The element with the given standard-monomial coordinates.
    pub fn from_coords(&self, v: &[Scalar]) -> Result<Polynomial> {
        let basis = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        assert_eq!(v.len(), basis.len());
        Ok(self.ring().from_terms(
            basis
                .iter()
                .zip(v)
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// Matrix of multiplication by `b` on the standard-monomial basis;
    /// column `j` holds the coordinates of `b * m_j`.
    pub fn multiplication_matrix(&self, b: &Polynomial) -> Result<ScalarMatrix> {
        let basis = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let d = basis.len();
        let field = *self.ring().field();
        let mut m = ScalarMatrix::zero(field, d, d);
        for (j, mono) in basis.iter().enumerate() {
            let col = self.coords(&b.mul(&self.ring().monomial(mono.clone())))?;
            for (i, c) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = c;
            }
        }
        Ok(m)
    }

    /// The ring `K[t]` that minimal polynomials live in.
    pub fn minimal_poly_ring(&self) -> Ring {
        Ring::new(vec!["t".to_string()], *self.ring().field(), MonomialOrder::DegRevLex)
    }

    /// Monic minimal polynomial of `x_var` acting on the quotient, found as
    /// the first linear dependency among the Krylov iterates of 1.
    pub fn minimal_polynomial(&self, var: usize) -> Result<Polynomial> {
        let basis = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let tring = self.minimal_poly_ring();
        let d = basis.len();
        if d == 0 {
            // zero ring: the unit polynomial annihilates everything
            return Ok(tring.one());
        }
        let field = *self.ring().field();
        let mat = self.multiplication_matrix(&self.ring().variable(var))?;
        let mut iterates: Vec<Vec<Scalar>> = vec![self.coords(&self.ring().one())?];
        loop {
            let k = iterates.len();
            let next = mat.mul_vec(iterates.last().expect("nonempty"));
            // solve for next as a combination of the previous iterates
            let mut cols = ScalarMatrix::zero(field, d, k);
            for (j, it) in iterates.iter().enumerate() {
                for i in 0..d {
                    *cols.at_mut(i, j) = it[i].clone();
                }
            }
            if let Some(c) = cols.solve(&next) {
                let t = tring.variable(0);
                let mut m = t.pow(k as u32);
                for (i, ci) in c.iter().enumerate() {
                    m = m.sub(&tring.monomial(Monomial::variable(1, 0, i as u32)).scale(ci));
                }
                let evaluated = evaluate_univariate(&m, &self.ring().variable(var));
                assert!(
                    self.normal_form(&evaluated).is_zero(),
                    "minimal polynomial must annihilate its variable"
                );
                return Ok(m);
            }
            assert!(k <= d, "dependency must appear by the dimension");
            iterates.push(next);
        }
    }

    /// Unit test: `b` is a unit iff 1 lies in `I + (b)`. In the
    /// zero-dimensional case a successful test carries an inverse witness.
    pub fn is_unit(&self, b: &Polynomial) -> Result<UnitTest> {
        let mut gens = self.presentation.generators().to_vec();
        gens.push(b.with_ring(self.ring()));
        let extended = IdealPresentation::new(self.ring().clone(), gens);
        let gb = buchberger(&extended, self.ring().order(), &self.budget)?;
        if !gb.contains_one() {
            return Ok(UnitTest { is_unit: false, inverse: None });
        }
        let inverse = if self.zero_dimensional {
            let m = self.multiplication_matrix(b)?;
            let one = self.coords(&self.ring().one())?;
            let c = m
                .solve(&one)
                .expect("unit has an inverse in a finite-dimensional algebra");
            let inv = self.from_coords(&c)?;
            assert!(
                self.equivalent(&b.mul(&inv), &self.ring().one()),
                "inverse witness must verify"
            );
            Some(inv)
        } else {
            invert_mod_ideal(self, b)?
        };
        Ok(UnitTest { is_unit: true, inverse })
    }

    /// Zero-divisor test with witness. Zero counts as a zero-divisor.
    pub fn is_zero_divisor(&self, b: &Polynomial) -> Result<ZeroDivisorTest> {
        let nf = self.normal_form(b);
        if nf.is_zero() {
            let one = self.normal_form(&self.ring().one());
            let witness = if one.is_zero() { None } else { Some(one) };
            return Ok(ZeroDivisorTest { is_zero_divisor: true, witness });
        }
        if self.zero_dimensional {
            let m = self.multiplication_matrix(&nf)?;
            let kernel = m.kernel_basis();
            match kernel.first() {
                Some(v) => {
                    let witness = self.from_coords(v)?;
                    assert!(!witness.is_zero());
                    assert!(self.normal_form(&witness.mul(&nf)).is_zero());
                    Ok(ZeroDivisorTest { is_zero_divisor: true, witness: Some(witness) })
                }
                None => Ok(ZeroDivisorTest { is_zero_divisor: false, witness: None }),
            }
        } else {
            let quotient = ideal_quotient(&self.presentation, &nf, &self.budget)?;
            let witness = quotient
                .generators()
                .iter()
                .map(|g| self.normal_form(g))
                .find(|g| !g.is_zero());
            match witness {
                Some(w) => {
                    assert!(self.normal_form(&w.mul(&nf)).is_zero());
                    Ok(ZeroDivisorTest { is_zero_divisor: true, witness: Some(w) })
                }
                None => Ok(ZeroDivisorTest { is_zero_divisor: false, witness: None }),
            }
        }
    }
}

/// Evaluates a univariate polynomial at an element of another ring.
pub fn evaluate_univariate(m: &Polynomial, at: &Polynomial) -> Polynomial {
    assert_eq!(m.ring().num_vars(), 1, "minimal polynomials are univariate");
    m.substitute_into(at.ring(), std::slice::from_ref(at))
}

fn gb_is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    let n = gb.ring().num_vars();
    (0..n).all(|i| {
        gb.leading_monomials().any(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(j, &e)| j == i || e == 0)
        })
    })
}

/// All monomials divisible by no leading monomial, ascending in the ring
/// order. Callers must have established zero-dimensionality.
fn enumerate_standard_monomials(gb: &GroebnerBasis) -> Vec<Monomial> {
    let n = gb.ring().num_vars();
    // per-variable exponent bound: the smallest pure power of the variable
    // among the leading monomials
    let mut bounds = vec![0u32; n];
    for i in 0..n {
        bounds[i] = gb
            .leading_monomials()
            .filter(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0)
            })
            .map(|m| m.exponent(i))
            .min()
            .expect("zero-dimensional basis has a pure power per variable");
    }
    let leading: Vec<Monomial> = gb.leading_monomials().cloned().collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    collect_box(&leading, &bounds, &mut current, 0, &mut out);
    out.sort_by(|a, b| gb.ring().order().compare(a, b));
    out
}

fn collect_box(
    leading: &[Monomial],
    bounds: &[u32],
    current: &mut Vec<u32>,
    var: usize,
    out: &mut Vec<Monomial>,
) {
    if var == bounds.len() {
        let m = Monomial::from_exponents(current.clone());
        if leading.iter().all(|l| !l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        collect_box(leading, bounds, current, var + 1, out);
    }
    current[var] = 0;
}
