//! Decision procedures for affine cellular algebras given by explicit layer
//! data.
//!
//! An input is a chain of layers, each consisting of a module rank `n`, a
//! commutative affine algebra `B = K[x..]/I` presented by ideal generators,
//! an `n`×`n` bilinear-form matrix `phi` over `B`, and an involution of `B`.
//! From that data the crate decides left-artinianness and semisimplicity
//! exactly, Jacobson semisimplicity and semiprimeness by a sufficient
//! criterion, and separability; it also constructs the switch and asymptotic
//! algebras attached to the chain. Every verdict carries a machine-checkable
//! certificate, and an independent brute-force radical oracle cross-checks
//! the criteria on finite-dimensional realizations.
//!
//! Module layout:
//! - [`field`] / [`poly`]: exact scalars, multivariate polynomials, parser.
//! - [`groebner`]: Buchberger kernel and the zero-dimensional toolkit
//!   (normal forms, standard monomials, minimal polynomials, unit and
//!   zero-divisor tests, radical and étale tests).
//! - [`cellular`]: layers, switch products, determinants, asymptotic maps.
//! - [`decide`]: the verdict procedures with certificates.
//! - [`oracle`]: structure-constant algebras and the trace-form radical.
//! - [`specfile`]: the text format consumed by the CLI.

pub mod cellular;
pub mod decide;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod specfile;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring};
