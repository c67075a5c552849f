//! Monomial orders: degrevlex, lex, and block elimination orders.

use std::cmp::Ordering;

use super::monomial::Monomial;

/// A total, multiplicative well-ordering on monomials (1 is minimal).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree, ties broken reverse-lexicographically. The default.
    DegRevLex,
    /// Pure lexicographic order.
    Lex,
    /// Eliminates the first `elim` variables: compares that block by
    /// degrevlex first, the remaining variables by `inner`.
    Block { elim: usize, inner: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn block(elim: usize, inner: MonomialOrder) -> Self {
        MonomialOrder::Block { elim, inner: Box::new(inner) }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_slices(a.exponents(), b.exponents())
    }

    fn compare_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Block { elim, inner } => {
                let k = (*elim).min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| inner.compare_slices(&a[k..], &b[k..]))
            }
        }
    }
}

fn total_degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    match total_degree(a).cmp(&total_degree(b)) {
        Ordering::Equal => {
            // At the last position where they differ, the monomial with the
            // smaller exponent is the larger one.
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}
