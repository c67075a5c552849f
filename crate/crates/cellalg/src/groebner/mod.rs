//! Buchberger's algorithm and reduced Gröbner bases.
//!
//! Every computed basis is verified on the spot: all S-polynomials and all
//! input generators must reduce to zero and the basis must be interreduced.
//! Global counters expose how many bases were computed and verified, so test
//! suites can assert the postcondition held across an entire run.

mod ideal_ops;
mod quotient;
mod radical;

pub use ideal_ops::{eliminate, ideal_intersection, ideal_quotient, invert_mod_ideal};
pub use quotient::{Dimension, QuotientRing, UnitTest, ZeroDivisorTest};
pub use radical::{
    is_etale, is_radical, EtaleResult, MinimalPolyEvidence, RadicalCertificate, RadicalResult,
    TriBool,
};

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal given by explicit generators in an ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> IdealPresentation {
        for g in &generators {
            assert_eq!(g.ring(), &ring, "generator outside the ambient ring");
        }
        IdealPresentation { ring, generators }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// Resource limits for a Gröbner run. Exceeding them aborts with
/// [`Error::BudgetExceeded`] rather than grinding on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-polynomial reductions per basis computation.
    pub max_pairs: u64,
    /// Maximum number of basis polynomials held at once.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 100_000, max_basis: 1_000 }
    }
}

/// A reduced Gröbner basis: monic, interreduced, deterministic for a fixed
/// input and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// The ring the basis lives in; its order is the basis order.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn contains_one(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial())
    }
}

static BASES_COMPUTED: AtomicU64 = AtomicU64::new(0);
static BASES_VERIFIED: AtomicU64 = AtomicU64::new(0);

/// Number of Gröbner bases computed so far in this process.
pub fn bases_computed() -> u64 {
    BASES_COMPUTED.load(AtomicOrdering::SeqCst)
}

/// Number of bases that passed the full postcondition check.
pub fn bases_verified() -> u64 {
    BASES_VERIFIED.load(AtomicOrdering::SeqCst)
}

/// The unique remainder of multivariate division of `f` by the basis.
///
/// No term of the result is divisible by any leading monomial of the basis,
/// and `f - result` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring().vars() != gb.ring.vars() || f.ring().field() != gb.ring.field() {
        return Err(Error::AmbientMismatch);
    }
    if f.ring() == &gb.ring {
        Ok(reduce_full(f, &gb.basis))
    } else {
        Ok(reduce_full(&f.with_ring(&gb.ring), &gb.basis).with_ring(f.ring()))
    }
}

/// Full reduction: every term of the result is irreducible.
fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((lm, lc)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let reducer = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)));
        match reducer {
            Some(g) => {
                let gm = g.leading_monomial().expect("reducer is nonzero");
                let shift = lm.div(gm).expect("divisibility checked");
                let glc = g.leading_term().expect("reducer is nonzero").1;
                let coeff = lc.div(glc).expect("leading coefficient is nonzero");
                work = work.sub(&g.mul_term(&shift, &coeff));
            }
            None => {
                remainder.push((lm, lc));
                work = work.drop_leading();
            }
        }
    }
    ring.from_terms(remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let uf = lcm.div(fm).expect("lcm divisible by lm");
    let ug = lcm.div(gm).expect("lcm divisible by lm");
    let a = f.mul_term(&uf, &fc.inv().expect("field inverse"));
    let b = g.mul_term(&ug, &gc.inv().expect("field inverse"));
    a.sub(&b)
}

/// Computes the reduced Gröbner basis of `ideal` with respect to `order`.
///
/// Buchberger with the coprime-leading-monomial and chain discard criteria
/// and normal (smallest-lcm) pair selection, followed by full interreduction.
pub fn buchberger(
    ideal: &IdealPresentation,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let work_ring = if ideal.ring().order() == order {
        ideal.ring().clone()
    } else {
        ideal.ring().with_order(order.clone())
    };
    let originals: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_ring(&work_ring))
        .collect();

    let mut basis: Vec<Polynomial> = originals.iter().map(|g| g.monic()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    let mut reductions: u64 = 0;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let mut best = 0;
        let mut best_lcm = pair_lcm(&basis, pairs[0]);
        for (idx, &p) in pairs.iter().enumerate().skip(1) {
            let l = pair_lcm(&basis, p);
            let ord = work_ring.order().compare(&l, &best_lcm);
            if ord == std::cmp::Ordering::Less
                || (ord == std::cmp::Ordering::Equal && p < pairs[best])
            {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let lm_i = basis[i].leading_monomial().expect("basis is nonzero");
        let lm_j = basis[j].leading_monomial().expect("basis is nonzero");
        // first criterion: coprime leading monomials
        if lm_i.is_coprime_with(lm_j) {
            continue;
        }
        // chain criterion: a third element divides the lcm and both linking
        // pairs are already handled
        let lcm_ij = lm_i.lcm(lm_j);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .leading_monomial()
                    .is_some_and(|lk| lk.divides(&lcm_ij))
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chained {
            continue;
        }

        reductions += 1;
        if reductions > budget.max_pairs {
            return Err(Error::BudgetExceeded { pairs: reductions });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_full(&s, &basis);
        if !r.is_zero() {
            let new = basis.len();
            if new + 1 > budget.max_basis {
                return Err(Error::BudgetExceeded { pairs: reductions });
            }
            basis.push(r.monic());
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }

    let basis = interreduce(basis, &work_ring);
    let gb = GroebnerBasis { ring: work_ring, basis };
    BASES_COMPUTED.fetch_add(1, AtomicOrdering::SeqCst);
    verify_reduced_basis(&originals, &gb);
    BASES_VERIFIED.fetch_add(1, AtomicOrdering::SeqCst);
    Ok(gb)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    let lm_i = basis[i].leading_monomial().expect("nonzero");
    let lm_j = basis[j].leading_monomial().expect("nonzero");
    lm_i.lcm(lm_j)
}

/// Removes redundant elements and reduces every element against the others
/// until nothing changes; result is monic and sorted by leading monomial.
fn interreduce(mut basis: Vec<Polynomial>, ring: &Ring) -> Vec<Polynomial> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = basis.remove(i);
            let r = reduce_full(&g, &basis);
            if r.is_zero() {
                changed = true;
                continue;
            }
            let r = r.monic();
            if r != g {
                changed = true;
            }
            basis.insert(i, r);
            i += 1;
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        let am = a.leading_monomial().expect("nonzero");
        let bm = b.leading_monomial().expect("nonzero");
        ring.order().compare(am, bm)
    });
    basis
}

/// Postcondition check run on every computed basis: reducedness, generator
/// membership, and reduction of every S-polynomial to zero.
fn verify_reduced_basis(originals: &[Polynomial], gb: &GroebnerBasis) {
    for (i, g) in gb.basis.iter().enumerate() {
        let (_, lc) = g.leading_term().expect("basis elements are nonzero");
        assert!(lc.is_one(), "basis element not monic");
        for (j, h) in gb.basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let hm = h.leading_monomial().expect("nonzero");
            for (m, _) in g.terms() {
                assert!(
                    !hm.divides(m),
                    "basis not interreduced: term of element {i} divisible by leading monomial of {j}"
                );
            }
        }
    }
    for f in originals {
        assert!(
            reduce_full(f, &gb.basis).is_zero(),
            "input generator does not reduce to zero"
        );
    }
    for i in 0..gb.basis.len() {
        for j in (i + 1)..gb.basis.len() {
            let s = s_polynomial(&gb.basis[i], &gb.basis[j]);
            assert!(
                reduce_full(&s, &gb.basis).is_zero(),
                "S-polynomial ({i}, {j}) does not reduce to zero"
            );
        }
    }
}
