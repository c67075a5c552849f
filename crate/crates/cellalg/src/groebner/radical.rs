//! Radical and étale tests for quotient rings.
//!
//! Zero-dimensional ideals are decided by the squarefreeness of every
//! variable's minimal polynomial, which is valid verbatim over the perfect
//! fields this crate supports. The zero ideal and principal ideals with a
//! univariate generator are also decided; every other positive-dimensional
//! case honestly answers unknown.

use crate::error::Result;
use crate::poly::univariate::{gcd_univariate, is_separable_univariate};
use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::quotient::QuotientRing;

/// Three-valued answer for sufficient criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriBool {
    True,
    False,
    Unknown,
}

/// One variable's minimal polynomial together with its squarefree status.
/// Over a perfect field squarefree and separable coincide.
#[derive(Debug, Clone)]
pub struct MinimalPolyEvidence {
    pub variable: String,
    pub poly: Polynomial,
    pub squarefree: bool,
}

/// Machine-checkable evidence for a radical decision.
#[derive(Debug, Clone)]
pub enum RadicalCertificate {
    /// Seidenberg: zero-dimensional, decided by the minimal polynomials.
    ZeroDimensional { minimal_polynomials: Vec<MinimalPolyEvidence> },
    /// The zero ideal of a polynomial ring is radical.
    ZeroIdeal,
    /// A principal ideal with univariate generator is radical iff the
    /// generator is squarefree.
    PrincipalUnivariate { generator: Polynomial, squarefree: bool },
    /// Outside the decidable cases.
    Undecided { reason: String },
}

#[derive(Debug, Clone)]
pub struct RadicalResult {
    pub answer: TriBool,
    pub certificate: RadicalCertificate,
}

/// Whether the ideal is radical, i.e. the quotient is reduced.
pub fn is_radical(qr: &QuotientRing) -> Result<RadicalResult> {
    if qr.is_zero_dimensional() {
        let evidence = minimal_poly_evidence(qr)?;
        let all_squarefree = evidence.iter().all(|e| e.squarefree);
        return Ok(RadicalResult {
            answer: if all_squarefree { TriBool::True } else { TriBool::False },
            certificate: RadicalCertificate::ZeroDimensional { minimal_polynomials: evidence },
        });
    }
    if qr.gb().basis().is_empty() {
        return Ok(RadicalResult {
            answer: TriBool::True,
            certificate: RadicalCertificate::ZeroIdeal,
        });
    }
    if qr.gb().basis().len() == 1 {
        let g = &qr.gb().basis()[0];
        let used = g.variables_used();
        if used.len() == 1 {
            let var = used[0];
            let uni = to_univariate(g, var);
            let gcd = gcd_univariate(&uni, &uni.derivative(0))?;
            let squarefree = gcd.is_constant();
            return Ok(RadicalResult {
                answer: if squarefree { TriBool::True } else { TriBool::False },
                certificate: RadicalCertificate::PrincipalUnivariate {
                    generator: g.clone(),
                    squarefree,
                },
            });
        }
    }
    Ok(RadicalResult {
        answer: TriBool::Unknown,
        certificate: RadicalCertificate::Undecided {
            reason: "positive-dimensional ideal outside the decidable cases \
                     (zero ideal, principal univariate, zero-dimensional)"
                .to_string(),
        },
    })
}

/// Étale test: finite-dimensional with every minimal polynomial separable.
/// Over a perfect field this is exactly "finite-dimensional and
/// geometrically reduced".
#[derive(Debug, Clone)]
pub struct EtaleResult {
    pub is_etale: bool,
    /// Present when the ring is zero-dimensional.
    pub minimal_polynomials: Option<Vec<MinimalPolyEvidence>>,
    /// Set when the ring is not finite-dimensional.
    pub reason: Option<String>,
}

pub fn is_etale(qr: &QuotientRing) -> Result<EtaleResult> {
    if !qr.is_zero_dimensional() {
        return Ok(EtaleResult {
            is_etale: false,
            minimal_polynomials: None,
            reason: Some("not finite-dimensional".to_string()),
        });
    }
    let evidence = minimal_poly_evidence(qr)?;
    let is_etale = evidence.iter().all(|e| e.squarefree);
    Ok(EtaleResult { is_etale, minimal_polynomials: Some(evidence), reason: None })
}

/// Minimal polynomials of all variables with their squarefree flags,
/// cross-checked against the separability test.
pub fn minimal_poly_evidence(qr: &QuotientRing) -> Result<Vec<MinimalPolyEvidence>> {
    let ring = qr.ring().clone();
    let mut out = Vec::with_capacity(ring.num_vars());
    for var in 0..ring.num_vars() {
        let m = qr.minimal_polynomial(var)?;
        let gcd = gcd_univariate(&m, &m.derivative(0))?;
        let squarefree = gcd.is_constant();
        debug_assert_eq!(squarefree, is_separable_univariate(&m)?);
        out.push(MinimalPolyEvidence {
            variable: ring.var_name(var).to_string(),
            poly: m,
            squarefree,
        });
    }
    Ok(out)
}

/// Rebuilds a polynomial using only `var` into a fresh univariate ring.
fn to_univariate(g: &Polynomial, var: usize) -> Polynomial {
    let ring = Ring::new(
        vec![g.ring().var_name(var).to_string()],
        *g.ring().field(),
        MonomialOrder::DegRevLex,
    );
    g.map_exponents(&ring, |exps| vec![exps[var]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::IdealPresentation;
    use crate::poly::parse_polynomial;

    fn quotient(vars: &[&str], gens: &[&str]) -> QuotientRing {
        let ring = Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rationals,
            MonomialOrder::DegRevLex,
        );
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect();
        QuotientRing::new(IdealPresentation::new(ring, gens)).unwrap()
    }

    #[test]
    fn radical_zero_dimensional() {
        let r = is_radical(&quotient(&["x"], &["x^2 - x"])).unwrap();
        assert_eq!(r.answer, TriBool::True);

        let r2 = is_radical(&quotient(&["x", "y"], &["x^2", "y - 1"])).unwrap();
        assert_eq!(r2.answer, TriBool::False);
        match r2.certificate {
            RadicalCertificate::ZeroDimensional { minimal_polynomials } => {
                let mx = minimal_polynomials.iter().find(|e| e.variable == "x").unwrap();
                assert!(!mx.squarefree);
                assert_eq!(mx.poly.to_string(), "t^2");
            }
            other => panic!("expected zero-dimensional certificate, got {other:?}"),
        }
    }

    #[test]
    fn radical_special_cases() {
        // zero ideal
        let r = is_radical(&quotient(&["x"], &[])).unwrap();
        assert_eq!(r.answer, TriBool::True);
        assert!(matches!(r.certificate, RadicalCertificate::ZeroIdeal));

        // principal with univariate generator, inside a bivariate ring
        let r2 = is_radical(&quotient(&["x", "y"], &["x^2 - 1"])).unwrap();
        assert_eq!(r2.answer, TriBool::True);
        let r3 = is_radical(&quotient(&["x", "y"], &["x^2"])).unwrap();
        assert_eq!(r3.answer, TriBool::False);

        // (xy) is radical, but lies outside the decidable cases: unknown
        let r4 = is_radical(&quotient(&["x", "y"], &["x*y"])).unwrap();
        assert_eq!(r4.answer, TriBool::Unknown);
    }

    #[test]
    fn etale_examples() {
        assert!(is_etale(&quotient(&["x"], &["x^2 - 2"])).unwrap().is_etale);
        assert!(!is_etale(&quotient(&["x"], &["x^2"])).unwrap().is_etale);
        let inf = is_etale(&quotient(&["x"], &[])).unwrap();
        assert!(!inf.is_etale);
        assert_eq!(inf.reason.as_deref(), Some("not finite-dimensional"));
    }

    #[test]
    fn radical_agrees_with_squarefree_for_univariate_quotients() {
        for (gen, expect) in [
            ("x^2 - x", true),
            ("x^3 - x", true),
            ("x^2", false),
            ("(x - 1)^2", false),
            ("x^4 - 1", true),
            ("x^3 + x^2 - x - 1", false), // (x-1)(x+1)^2
        ] {
            let qr = quotient(&["x"], &[gen]);
            let f = parse_polynomial(gen, qr.ring()).unwrap();
            let gcd = gcd_univariate(&f, &f.derivative(0)).unwrap();
            assert_eq!(gcd.is_constant(), expect, "oracle disagrees for {gen}");
            let r = is_radical(&qr).unwrap();
            assert_eq!(r.answer == TriBool::True, expect, "for {gen}");
        }
    }
}
