//! Elimination, ideal intersection and ideal quotient via tag variables and
//! block orders.

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::quotient::QuotientRing;
use super::{buchberger, Budget, IdealPresentation};

/// A variable name not colliding with any in `ring`.
fn fresh_tag(ring: &Ring) -> String {
    let mut name = "t".to_string();
    while ring.vars().contains(&name) {
        name.push('_');
    }
    name
}

/// `ring` with a tag variable prepended, under an order eliminating it.
fn tag_ring(ring: &Ring) -> Ring {
    let mut vars = vec![fresh_tag(ring)];
    vars.extend(ring.vars().iter().cloned());
    Ring::new(
        vars,
        *ring.field(),
        MonomialOrder::block(1, ring.order().clone()),
    )
}

fn embed(f: &Polynomial, target: &Ring) -> Polynomial {
    f.map_exponents(target, |exps| {
        let mut v = Vec::with_capacity(exps.len() + 1);
        v.push(0);
        v.extend_from_slice(exps);
        v
    })
}

fn project(f: &Polynomial, target: &Ring) -> Polynomial {
    assert!(
        f.terms().iter().all(|(m, _)| m.exponent(0) == 0),
        "projection requires a tag-free polynomial"
    );
    f.map_exponents(target, |exps| exps[1..].to_vec())
}

fn tag_free(f: &Polynomial) -> bool {
    f.terms().iter().all(|(m, _)| m.exponent(0) == 0)
}

/// Generators of `I ∩ K[remaining variables]`, computed through a block
/// order that eliminates `front_vars`. The result lives in the original
/// ambient ring.
pub fn eliminate(
    ideal: &IdealPresentation,
    front_vars: &[usize],
    budget: &Budget,
) -> Result<IdealPresentation> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let mut front: Vec<usize> = front_vars.to_vec();
    front.sort_unstable();
    front.dedup();
    assert!(front.iter().all(|&v| v < n), "variable index out of range");
    let k = front.len();
    let rest: Vec<usize> = (0..n).filter(|v| !front.contains(v)).collect();
    let perm: Vec<usize> = front.iter().chain(rest.iter()).copied().collect();

    let permuted_ring = Ring::new(
        perm.iter().map(|&v| ring.var_name(v).to_string()).collect(),
        *ring.field(),
        MonomialOrder::block(k, MonomialOrder::DegRevLex),
    );
    let mapped: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.map_exponents(&permuted_ring, |exps| {
                perm.iter().map(|&v| exps[v]).collect()
            })
        })
        .collect();
    let gb = buchberger(
        &IdealPresentation::new(permuted_ring.clone(), mapped),
        permuted_ring.order(),
        budget,
    )?;
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0))
        })
        .map(|g| {
            g.map_exponents(ring, |exps| {
                let mut orig = vec![0u32; n];
                for (pos, &v) in perm.iter().enumerate() {
                    orig[v] = exps[pos];
                }
                orig
            })
        })
        .collect();
    Ok(IdealPresentation::new(ring.clone(), kept))
}

/// Generators of `I ∩ J` by the tag-variable method: eliminate `t` from
/// `t*I + (1 - t)*J`.
pub fn ideal_intersection(
    i: &IdealPresentation,
    j: &IdealPresentation,
    budget: &Budget,
) -> Result<IdealPresentation> {
    if i.ring() != j.ring() {
        return Err(Error::AmbientMismatch);
    }
    let ring = i.ring();
    let ext = tag_ring(ring);
    let t = ext.variable(0);
    let one_minus_t = ext.one().sub(&t);
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(t.mul(&embed(g, &ext)));
    }
    for h in j.generators() {
        gens.push(one_minus_t.mul(&embed(h, &ext)));
    }
    let gb = buchberger(&IdealPresentation::new(ext.clone(), gens), ext.order(), budget)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| tag_free(g))
        .map(|g| project(g, ring))
        .collect();
    Ok(IdealPresentation::new(ring.clone(), kept))
}

/// Generators of `(I : b) = {g : g*b in I}`, computed as `I ∩ (b)` followed
/// by exact division of each generator by `b`.
pub fn ideal_quotient(
    ideal: &IdealPresentation,
    b: &Polynomial,
    budget: &Budget,
) -> Result<IdealPresentation> {
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    let principal = IdealPresentation::new(ring.clone(), vec![b.with_ring(ring)]);
    let inter = ideal_intersection(ideal, &principal, budget)?;
    let gens = inter
        .generators()
        .iter()
        .map(|g| divide_exact(g, &b.with_ring(ring)))
        .collect();
    Ok(IdealPresentation::new(ring.clone(), gens))
}

/// Exact multivariate division by a single nonzero polynomial. Every element
/// of `I ∩ (b)` is divisible by `b`, so a nonzero remainder signals an
/// internal bug.
fn divide_exact(g: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = g.ring().clone();
    let (bm, bc) = b.leading_term().expect("nonzero divisor");
    let (bm, bc) = (bm.clone(), bc.clone());
    let mut work = g.clone();
    let mut quotient = ring.zero();
    while let Some((lm, lc)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let shift = lm
            .div(&bm)
            .expect("exact division failure: leading monomial not divisible");
        let coeff = lc.div(&bc).expect("field inverse");
        let term = ring.monomial(shift).scale(&coeff);
        quotient = quotient.add(&term);
        work = work.sub(&term.mul(b));
    }
    quotient
}

/// Finds `c` with `b*c = 1` in the quotient ring, if `b` is a unit, by
/// eliminating `t` from `I + (t*b - 1)`: the reduced basis then contains an
/// element `t - c`. Every candidate is verified before being returned.
pub fn invert_mod_ideal(qr: &QuotientRing, b: &Polynomial) -> Result<Option<Polynomial>> {
    let ring = qr.ring();
    if qr.is_zero_ring() {
        // 0 = 1, so everything is a unit with inverse 0
        return Ok(Some(ring.zero()));
    }
    if qr.normal_form(b).is_zero() {
        return Ok(None);
    }
    let ext = tag_ring(ring);
    let t = ext.variable(0);
    let mut gens: Vec<Polynomial> = qr
        .presentation()
        .generators()
        .iter()
        .map(|g| embed(g, &ext))
        .collect();
    gens.push(t.mul(&embed(&b.with_ring(ring), &ext)).sub(&ext.one()));
    let gb = buchberger(&IdealPresentation::new(ext.clone(), gens), ext.order(), qr.budget())?;
    if gb.contains_one() {
        return Ok(None);
    }
    for g in gb.basis() {
        let lm = g.leading_monomial().expect("nonzero");
        if lm.exponent(0) == 1 && lm.total_degree() == 1 {
            let tail = t.sub(g);
            assert!(tag_free(&tail), "reduced tail of t - c must be tag-free");
            let c = project(&tail, ring);
            if qr.equivalent(&b.mul(&c), &ring.one()) {
                return Ok(Some(c));
            }
            return Ok(None);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::normal_form;
    use crate::poly::parse_polynomial;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rationals,
            MonomialOrder::DegRevLex,
        )
    }

    fn ideal(r: &Ring, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(
            r.clone(),
            gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect(),
        )
    }

    fn reduced_gb(i: &IdealPresentation) -> Vec<Polynomial> {
        buchberger(i, i.ring().order(), &Budget::default())
            .unwrap()
            .basis()
            .to_vec()
    }

    /// Ideal equality through uniqueness of the reduced basis.
    fn ideal_eq(a: &IdealPresentation, b: &IdealPresentation) -> bool {
        reduced_gb(a) == reduced_gb(b)
    }

    #[test]
    fn eliminate_examples() {
        let b = Budget::default();
        // (t*x - 1, t^2) is the unit ideal: 1 = t^2*x^2 - (t*x - 1)*(t*x + 1),
        // so the elimination ideal contains x^2 (and everything else).
        let r = ring(&["t", "x"]);
        let i = ideal(&r, &["t*x - 1", "t^2"]);
        let combo = parse_polynomial("t^2*x^2 - (t*x - 1)*(t*x + 1)", &r).unwrap();
        assert_eq!(combo, r.one());
        let x2 = parse_polynomial("x^2", &r).unwrap();
        let witness = parse_polynomial("x^2*(t^2*x^2 - (t*x - 1)*(t*x + 1))", &r).unwrap();
        assert_eq!(witness, x2);
        let elim = eliminate(&i, &[0], &b).unwrap();
        let egb = buchberger(&elim, r.order(), &b).unwrap();
        assert!(normal_form(&x2, &egb).unwrap().is_zero());
        // and conversely each kept generator is in the original ideal
        let full = buchberger(&i, r.order(), &b).unwrap();
        for g in elim.generators() {
            assert!(normal_form(g, &full).unwrap().is_zero());
        }

        // nothing to eliminate
        let r2 = ring(&["x", "y"]);
        let i2 = ideal(&r2, &["x - y"]);
        let e2 = eliminate(&i2, &[], &b).unwrap();
        assert!(ideal_eq(&e2, &i2));

        // eliminating the only variable of (t) leaves the zero ideal
        let r3 = ring(&["t"]);
        let e3 = eliminate(&ideal(&r3, &["t"]), &[0], &b).unwrap();
        assert!(e3.generators().is_empty());
    }

    #[test]
    fn intersection_examples() {
        let b = Budget::default();
        let r = ring(&["x", "y"]);
        let ix = ideal(&r, &["x"]);
        let iy = ideal(&r, &["y"]);
        let inter = ideal_intersection(&ix, &iy, &b).unwrap();
        // both inclusions, by normal-form membership
        let ixy = ideal(&r, &["x*y"]);
        assert!(ideal_eq(&inter, &ixy));
        let gbx = buchberger(&ix, r.order(), &b).unwrap();
        let gby = buchberger(&iy, r.order(), &b).unwrap();
        for g in inter.generators() {
            assert!(normal_form(g, &gbx).unwrap().is_zero());
            assert!(normal_form(g, &gby).unwrap().is_zero());
        }

        // I ∩ (1) = I
        let i = ideal(&r, &["x^2 - y"]);
        let unit = ideal(&r, &["1"]);
        assert!(ideal_eq(&ideal_intersection(&i, &unit, &b).unwrap(), &i));

        // containment: (x^2) ∩ (x) = (x^2)
        let r1 = ring(&["x"]);
        let a = ideal(&r1, &["x^2"]);
        let c = ideal(&r1, &["x"]);
        assert!(ideal_eq(&ideal_intersection(&a, &c, &b).unwrap(), &a));
    }

    #[test]
    fn quotient_examples() {
        let b = Budget::default();
        let r = ring(&["x"]);
        // (x^2 : x) = (x)
        let q1 = ideal_quotient(&ideal(&r, &["x^2"]), &parse_polynomial("x", &r).unwrap(), &b)
            .unwrap();
        assert!(ideal_eq(&q1, &ideal(&r, &["x"])));

        // ((x^2 - 1) : (x - 1)) = (x + 1); check the product relation directly
        let xm1 = parse_polynomial("x - 1", &r).unwrap();
        let xp1 = parse_polynomial("x + 1", &r).unwrap();
        assert_eq!(xp1.mul(&xm1), parse_polynomial("x^2 - 1", &r).unwrap());
        let q2 = ideal_quotient(&ideal(&r, &["x^2 - 1"]), &xm1, &b).unwrap();
        assert!(ideal_eq(&q2, &ideal(&r, &["x + 1"])));

        // (I : 1) = I
        let i = ideal(&r, &["x^3 - x"]);
        let q3 = ideal_quotient(&i, &r.one(), &b).unwrap();
        assert!(ideal_eq(&q3, &i));

        assert_eq!(
            ideal_quotient(&i, &r.zero(), &b),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn quotient_contains_ideal() {
        let b = Budget::default();
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2*y - y"]);
        let f = parse_polynomial("y", &r).unwrap();
        let q = ideal_quotient(&i, &f, &b).unwrap();
        let qgb = buchberger(&q, r.order(), &b).unwrap();
        for g in i.generators() {
            assert!(normal_form(g, &qgb).unwrap().is_zero());
        }
    }

    #[test]
    fn inverse_in_positive_dimension() {
        // B = Q[x, y]/(x*y - 1): x is a unit with inverse y
        let r = ring(&["x", "y"]);
        let qr = QuotientRing::new(ideal(&r, &["x*y - 1"])).unwrap();
        assert!(!qr.is_zero_dimensional());
        let x = qr.ring().variable(0);
        let inv = invert_mod_ideal(&qr, &x).unwrap().unwrap();
        assert!(qr.equivalent(&x.mul(&inv), &qr.ring().one()));
        // y is not a unit in Q[x, y]/(y^2)
        let qr2 = QuotientRing::new(ideal(&r, &["y^2"])).unwrap();
        assert_eq!(invert_mod_ideal(&qr2, &qr2.ring().variable(1)).unwrap(), None);
        // x - 1 in Q[x]: units of a polynomial ring are constants
        let r1 = ring(&["x"]);
        let qr3 = QuotientRing::new(ideal(&r1, &[])).unwrap();
        assert_eq!(
            invert_mod_ideal(&qr3, &parse_polynomial("x - 1", &r1).unwrap()).unwrap(),
            None
        );
        let two = qr3.ring().integer(2);
        let half = invert_mod_ideal(&qr3, &two).unwrap().unwrap();
        assert!(qr3.equivalent(&two.mul(&half), &qr3.ring().one()));
    }
}
