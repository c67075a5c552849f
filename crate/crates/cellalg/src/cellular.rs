//! Cellular layer data and its algebraic constructions.
//!
//! A layer is a rank `n` together with a commutative quotient ring `B`, an
//! `n`×`n` matrix `phi` of normal forms over `B` (the Gram matrix of the
//! layer's bilinear form) and an involution of `B` given by variable images.
//! The layer's multiplication is the switch product `a * phi * b` on
//! `n`×`n` matrices over `B`; the asymptotic algebra replaces each layer by
//! the plain matrix ring.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::{Dimension, QuotientRing};
use crate::linalg::ScalarMatrix;
use crate::poly::Polynomial;

/// A square matrix of normal forms over a quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl BMatrix {
    /// Builds from rows, normalizing every entry.
    pub fn new(qr: &QuotientRing, rows: Vec<Vec<Polynomial>>) -> Result<BMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch { expected: n, got: row.len() });
            }
            for e in row {
                if e.ring().vars() != qr.ring().vars() || e.ring().field() != qr.ring().field() {
                    return Err(Error::AmbientMismatch);
                }
                entries.push(qr.normal_form(e));
            }
        }
        Ok(BMatrix { n, entries })
    }

    pub fn identity(qr: &QuotientRing, n: usize) -> BMatrix {
        let ring = qr.ring();
        let mut entries = vec![ring.zero(); n * n];
        let one = qr.normal_form(&ring.one());
        for i in 0..n {
            entries[i * n + i] = one.clone();
        }
        BMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.n + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> BMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entry(j, i).clone());
            }
        }
        BMatrix { n, entries }
    }

    pub fn add(&self, other: &BMatrix) -> BMatrix {
        assert_eq!(self.n, other.n);
        BMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &BMatrix) -> BMatrix {
        assert_eq!(self.n, other.n);
        BMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BMatrix {
        BMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    /// Matrix product over `B`, entries reduced to normal form.
    pub fn mul(&self, other: &BMatrix, qr: &QuotientRing) -> BMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let ring = qr.ring();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ring.zero();
                for k in 0..n {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                entries.push(qr.normal_form(&acc));
            }
        }
        BMatrix { n, entries }
    }

    /// Multiplies every entry by a ring element and reduces.
    pub fn scale_poly(&self, c: &Polynomial, qr: &QuotientRing) -> BMatrix {
        BMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| qr.normal_form(&e.mul(c))).collect(),
        }
    }

    /// Determinant by cofactor expansion along the first row, as a normal
    /// form.
    pub fn det(&self, qr: &QuotientRing) -> Polynomial {
        qr.normal_form(&self.det_raw(qr))
    }

    fn det_raw(&self, qr: &QuotientRing) -> Polynomial {
        let ring = qr.ring();
        match self.n {
            0 => ring.one(),
            1 => self.entry(0, 0).clone(),
            _ => {
                let mut acc = ring.zero();
                for j in 0..self.n {
                    let c = self.entry(0, j);
                    if c.is_zero() {
                        continue;
                    }
                    let sub = self.minor(0, j).det_raw(qr);
                    let term = qr.normal_form(&c.mul(&sub));
                    if j % 2 == 0 {
                        acc = acc.add(&term);
                    } else {
                        acc = acc.sub(&term);
                    }
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> BMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j == col {
                    continue;
                }
                entries.push(self.entry(i, j).clone());
            }
        }
        BMatrix { n: n - 1, entries }
    }

    /// Adjugate matrix (transposed cofactors), entries in normal form.
    pub fn adjugate(&self, qr: &QuotientRing) -> BMatrix {
        let n = self.n;
        if n <= 1 {
            return BMatrix::identity(qr, n);
        }
        let mut entries = vec![qr.ring().zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).det(qr);
                let signed = if (i + j) % 2 == 0 { cof } else { cof.neg() };
                entries[j * n + i] = qr.normal_form(&signed);
            }
        }
        BMatrix { n, entries }
    }
}

impl fmt::Display for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// One layer of a cellular chain: rank, coefficient algebra, bilinear form
/// and involution.
#[derive(Debug, Clone)]
pub struct CellLayer {
    vdim: usize,
    ring: QuotientRing,
    phi: BMatrix,
    /// Image of each ambient variable under the involution, in normal form.
    sigma: Vec<Polynomial>,
}

impl CellLayer {
    /// Builds a layer; `sigma` defaults to the identity. Shape errors are
    /// reported here, the algebraic invariants by [`validate_spec`].
    pub fn new(
        vdim: usize,
        ring: QuotientRing,
        phi: Vec<Vec<Polynomial>>,
        sigma: Option<Vec<Polynomial>>,
    ) -> Result<CellLayer> {
        assert!(vdim > 0, "layer rank must be positive");
        if phi.len() != vdim {
            return Err(Error::ShapeMismatch { expected: vdim, got: phi.len() });
        }
        let phi = BMatrix::new(&ring, phi)?;
        let nvars = ring.ring().num_vars();
        let sigma = match sigma {
            Some(images) => {
                if images.len() != nvars {
                    return Err(Error::ShapeMismatch { expected: nvars, got: images.len() });
                }
                images.iter().map(|p| ring.normal_form(p)).collect()
            }
            None => (0..nvars)
                .map(|i| ring.normal_form(&ring.ring().variable(i)))
                .collect(),
        };
        Ok(CellLayer { vdim, ring, phi, sigma })
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn phi(&self) -> &BMatrix {
        &self.phi
    }

    pub fn sigma_images(&self) -> &[Polynomial] {
        &self.sigma
    }

    pub fn sigma_is_identity(&self) -> bool {
        (0..self.ring.ring().num_vars())
            .all(|i| self.ring.equivalent(&self.sigma[i], &self.ring.ring().variable(i)))
    }

    /// Applies the involution to a ring element.
    pub fn apply_sigma(&self, f: &Polynomial) -> Polynomial {
        self.ring
            .normal_form(&f.substitute_into(self.ring.ring(), &self.sigma))
    }

    /// `det(phi)` as a normal form in `B`.
    pub fn det_phi(&self) -> Polynomial {
        self.phi.det(&self.ring)
    }

    /// `phi^{-1} = det^{-1} * adjugate` when the determinant is a unit;
    /// verified against the identity before being returned.
    pub fn phi_inverse(&self) -> Result<Option<BMatrix>> {
        let det = self.det_phi();
        let unit = self.ring.is_unit(&det)?;
        if !unit.is_unit {
            return Ok(None);
        }
        let det_inv = unit
            .inverse
            .expect("unit test returns an inverse witness for units");
        let inv = self.phi.adjugate(&self.ring).scale_poly(&det_inv, &self.ring);
        let product = self.phi.mul(&inv, &self.ring);
        assert_eq!(
            product,
            BMatrix::identity(&self.ring, self.vdim),
            "phi * phi^(-1) must be the identity"
        );
        Ok(Some(inv))
    }

    /// The layer-to-matrix-ring homomorphism `a -> a * phi`. Multiplicative
    /// always; bijective exactly when `det(phi)` is a unit.
    pub fn asymptotic_map(&self, a: &LayerElement) -> BMatrix {
        a.coords().mul(&self.phi, &self.ring)
    }

    /// The K-linear operator `X -> X * phi` on the layer, over the
    /// standard-monomial basis of `B`. Requires `B` finite-dimensional.
    pub fn right_multiplication_operator(&self) -> Result<ScalarMatrix> {
        let sm = self
            .ring
            .standard_monomials()
            .ok_or(Error::NotZeroDimensional)?
            .to_vec();
        let d = sm.len();
        let n = self.vdim;
        let field = *self.ring.ring().field();
        let dim = n * n * d;
        let mut op = ScalarMatrix::zero(field, dim, dim);
        // basis of M_n(B): index (s, t, mu) -> (s*n + t)*d + mu
        for s in 0..n {
            for t in 0..n {
                for (mu, mono) in sm.iter().enumerate() {
                    let col = (s * n + t) * d + mu;
                    // (E_st * mu) * phi has row s equal to mu * phi[t][..]
                    for v in 0..n {
                        let prod = self.ring.normal_form(
                            &self.ring.ring().monomial(mono.clone()).mul(self.phi.entry(t, v)),
                        );
                        let coords = self.ring.coords(&prod)?;
                        for (nu, c) in coords.into_iter().enumerate() {
                            if !c.is_zero() {
                                *op.at_mut((s * n + v) * d + nu, col) = c;
                            }
                        }
                    }
                }
            }
        }
        Ok(op)
    }

    /// A nonzero layer element annihilated by the asymptotic map, when one
    /// exists.
    pub fn asymptotic_kernel_element(self: &Arc<Self>) -> Result<Option<LayerElement>> {
        let op = self.right_multiplication_operator()?;
        let kernel = op.kernel_basis();
        let Some(v) = kernel.first() else {
            return Ok(None);
        };
        let sm = self.ring.standard_monomials().expect("zero-dimensional");
        let d = sm.len();
        let n = self.vdim;
        let ring = self.ring.ring();
        let mut rows = vec![vec![ring.zero(); n]; n];
        for s in 0..n {
            for t in 0..n {
                let mut acc = ring.zero();
                for (mu, mono) in sm.iter().enumerate() {
                    let c = &v[(s * n + t) * d + mu];
                    if !c.is_zero() {
                        acc = acc.add(&ring.monomial(mono.clone()).scale(c));
                    }
                }
                rows[s][t] = acc;
            }
        }
        let elem = LayerElement::new(Arc::clone(self), rows)?;
        assert!(!elem.coords().is_zero());
        assert!(self.asymptotic_map(&elem).is_zero());
        Ok(Some(elem))
    }
}

/// An element of a layer, identified with an `n`×`n` matrix over `B`:
/// the basis element `v_s ⊗ b ⊗ v_t` is `b` placed at position `(s, t)`.
#[derive(Debug, Clone)]
pub struct LayerElement {
    layer: Arc<CellLayer>,
    coords: BMatrix,
}

impl LayerElement {
    pub fn new(layer: Arc<CellLayer>, coords: Vec<Vec<Polynomial>>) -> Result<LayerElement> {
        let coords = BMatrix::new(&layer.ring, coords)?;
        if coords.size() != layer.vdim {
            return Err(Error::ShapeMismatch { expected: layer.vdim, got: coords.size() });
        }
        Ok(LayerElement { layer, coords })
    }

    /// `v_s ⊗ b ⊗ v_t`.
    pub fn from_entry(
        layer: Arc<CellLayer>,
        s: usize,
        t: usize,
        b: &Polynomial,
    ) -> Result<LayerElement> {
        let n = layer.vdim;
        let ring = layer.ring.ring().clone();
        let mut rows = vec![vec![ring.zero(); n]; n];
        rows[s][t] = b.clone();
        LayerElement::new(layer, rows)
    }

    pub fn layer(&self) -> &Arc<CellLayer> {
        &self.layer
    }

    pub fn coords(&self) -> &BMatrix {
        &self.coords
    }

    pub fn add(&self, other: &LayerElement) -> Result<LayerElement> {
        if !same_layer(&self.layer, &other.layer) {
            return Err(Error::LayerMismatch);
        }
        Ok(LayerElement {
            layer: Arc::clone(&self.layer),
            coords: self.coords.add(&other.coords),
        })
    }

    pub fn scale(&self, c: &Scalar) -> LayerElement {
        LayerElement { layer: Arc::clone(&self.layer), coords: self.coords.scale(c) }
    }
}

fn same_layer(a: &Arc<CellLayer>, b: &Arc<CellLayer>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.vdim == b.vdim
            && a.ring.presentation() == b.ring.presentation()
            && a.phi == b.phi
            && a.sigma == b.sigma)
}

/// Layer multiplication `(u ⊗ b ⊗ v)(u' ⊗ b' ⊗ v') = u ⊗ b*phi(v,u')*b' ⊗ v'`,
/// i.e. the matrix product `a * phi * b` over `B`.
pub fn layer_multiply(a: &LayerElement, b: &LayerElement) -> Result<LayerElement> {
    if !same_layer(&a.layer, &b.layer) {
        return Err(Error::LayerMismatch);
    }
    let layer = &a.layer;
    let coords = a
        .coords
        .mul(&layer.phi, &layer.ring)
        .mul(&b.coords, &layer.ring);
    Ok(LayerElement { layer: Arc::clone(layer), coords })
}

/// A matrix algebra over `B` with a fixed pivot, multiplied by
/// `a ~ b = a * pivot * b`.
#[derive(Debug, Clone)]
pub struct SwitchAlgebra {
    ring: QuotientRing,
    n: usize,
    pivot: BMatrix,
}

impl SwitchAlgebra {
    pub fn new(ring: QuotientRing, pivot: Vec<Vec<Polynomial>>) -> Result<SwitchAlgebra> {
        let pivot = BMatrix::new(&ring, pivot)?;
        Ok(SwitchAlgebra { n: pivot.size(), ring, pivot })
    }

    pub fn pivot(&self) -> &BMatrix {
        &self.pivot
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn element(self: &Arc<Self>, value: Vec<Vec<Polynomial>>) -> Result<SwitchElement> {
        let value = BMatrix::new(&self.ring, value)?;
        if value.size() != self.n {
            return Err(Error::ShapeMismatch { expected: self.n, got: value.size() });
        }
        Ok(SwitchElement { algebra: Arc::clone(self), value })
    }
}

/// An element of a switch algebra.
#[derive(Debug, Clone)]
pub struct SwitchElement {
    algebra: Arc<SwitchAlgebra>,
    value: BMatrix,
}

impl SwitchElement {
    pub fn value(&self) -> &BMatrix {
        &self.value
    }

    pub fn add(&self, other: &SwitchElement) -> Result<SwitchElement> {
        if !same_switch_algebra(&self.algebra, &other.algebra) {
            return Err(Error::PivotMismatch);
        }
        Ok(SwitchElement {
            algebra: Arc::clone(&self.algebra),
            value: self.value.add(&other.value),
        })
    }

    pub fn scale(&self, c: &Scalar) -> SwitchElement {
        SwitchElement { algebra: Arc::clone(&self.algebra), value: self.value.scale(c) }
    }
}

fn same_switch_algebra(a: &Arc<SwitchAlgebra>, b: &Arc<SwitchAlgebra>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.n == b.n && a.ring.presentation() == b.ring.presentation() && a.pivot == b.pivot)
}

/// The defining switch product `a ~ b = a * pivot * b`; addition and scalar
/// action pass through unchanged.
pub fn switch_multiply(a: &SwitchElement, b: &SwitchElement) -> Result<SwitchElement> {
    if !same_switch_algebra(&a.algebra, &b.algebra) {
        return Err(Error::PivotMismatch);
    }
    let alg = &a.algebra;
    let value = a.value.mul(&alg.pivot, &alg.ring).mul(&b.value, &alg.ring);
    Ok(SwitchElement { algebra: Arc::clone(alg), value })
}

/// The ordered chain of layers over a common ground field.
#[derive(Debug, Clone)]
pub struct CellularAlgebraSpec {
    field: FieldSpec,
    layers: Vec<Arc<CellLayer>>,
}

impl CellularAlgebraSpec {
    pub fn new(field: FieldSpec, layers: Vec<CellLayer>) -> CellularAlgebraSpec {
        assert!(!layers.is_empty(), "at least one layer required");
        for layer in &layers {
            assert_eq!(layer.ring.ring().field(), &field, "layer field differs");
        }
        CellularAlgebraSpec { field, layers: layers.into_iter().map(Arc::new).collect() }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn layers(&self) -> &[Arc<CellLayer>] {
        &self.layers
    }

    /// A copy with an extra top layer `(V, B, phi) = (K, K, (1))`.
    pub fn with_trivial_top_layer(&self) -> Result<CellularAlgebraSpec> {
        use crate::groebner::IdealPresentation;
        use crate::poly::{MonomialOrder, Ring};
        let ring = Ring::new(Vec::new(), self.field, MonomialOrder::DegRevLex);
        let qr = QuotientRing::new(IdealPresentation::new(ring.clone(), Vec::new()))?;
        let top = CellLayer::new(1, qr, vec![vec![ring.one()]], None)?;
        let mut layers = self.layers.clone();
        layers.push(Arc::new(top));
        Ok(CellularAlgebraSpec { field: self.field, layers })
    }
}

/// Which layer invariant a validation failure violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationCheck {
    SigmaInvolution,
    SigmaPreservesIdeal,
    PhiCompatibility,
}

impl fmt::Display for ValidationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationCheck::SigmaInvolution => write!(f, "sigma is not an involution"),
            ValidationCheck::SigmaPreservesIdeal => {
                write!(f, "sigma does not preserve the ideal")
            }
            ValidationCheck::PhiCompatibility => {
                write!(f, "sigma(phi) transposed differs from phi")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ValidationFailure {
    /// 1-based layer index.
    pub layer: usize,
    pub check: ValidationCheck,
    pub witness: String,
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "layer {}: {} ({})", self.layer, self.check, self.witness)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the layer invariants: the involution squares to the identity and
/// preserves the ideal, and `sigma(phi)` transposed equals `phi`. Failures
/// are report entries, not errors.
pub fn validate_spec(spec: &CellularAlgebraSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (idx, layer) in spec.layers.iter().enumerate() {
        let j = idx + 1;
        let qr = &layer.ring;
        let ring = qr.ring();
        for i in 0..ring.num_vars() {
            let twice = layer.apply_sigma(&layer.sigma[i]);
            let diff = qr.normal_form(&twice.sub(&ring.variable(i)));
            if !diff.is_zero() {
                report.failures.push(ValidationFailure {
                    layer: j,
                    check: ValidationCheck::SigmaInvolution,
                    witness: format!(
                        "sigma(sigma({})) - {} = {}",
                        ring.var_name(i),
                        ring.var_name(i),
                        diff
                    ),
                });
            }
        }
        for g in qr.presentation().generators() {
            let image = layer.apply_sigma(g);
            if !image.is_zero() {
                report.failures.push(ValidationFailure {
                    layer: j,
                    check: ValidationCheck::SigmaPreservesIdeal,
                    witness: format!("sigma({g}) = {image} is not in the ideal"),
                });
            }
        }
        let n = layer.vdim;
        for s in 0..n {
            for t in 0..n {
                let lhs = layer.apply_sigma(layer.phi.entry(s, t));
                let diff = qr.normal_form(&lhs.sub(layer.phi.entry(t, s)));
                if !diff.is_zero() {
                    report.failures.push(ValidationFailure {
                        layer: j,
                        check: ValidationCheck::PhiCompatibility,
                        witness: format!(
                            "sigma(phi[{}][{}]) - phi[{}][{}] = {}",
                            s + 1,
                            t + 1,
                            t + 1,
                            s + 1,
                            diff
                        ),
                    });
                }
            }
        }
    }
    report
}

/// One summand `M_n(B)` of the asymptotic algebra.
#[derive(Debug, Clone)]
pub struct AsymptoticSummand {
    pub n: usize,
    pub ring_description: String,
    pub ring_dim: Dimension,
    /// `n^2 * dim_K(B)` when finite.
    pub total_dim: Dimension,
}

/// The direct sum of full matrix rings over the layer algebras.
#[derive(Debug, Clone)]
pub struct AsymptoticAlgebra {
    pub summands: Vec<AsymptoticSummand>,
    pub total_dim: Dimension,
}

impl fmt::Display for AsymptoticAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " (+) ")?;
            }
            write!(f, "M_{}({})", s.n, s.ring_description)?;
        }
        write!(f, "  [K-dimension {}]", self.total_dim)
    }
}

/// Describes a quotient ring as `K[vars]/(reduced basis)`.
pub fn describe_ring(qr: &QuotientRing) -> String {
    let ring = qr.ring();
    let mut s = ring.field().to_string();
    if ring.num_vars() > 0 {
        s.push('[');
        s.push_str(&ring.vars().join(", "));
        s.push(']');
    }
    let gens: Vec<String> = qr.gb().basis().iter().map(|g| g.to_string()).collect();
    if !gens.is_empty() {
        s.push_str("/(");
        s.push_str(&gens.join(", "));
        s.push(')');
    }
    s
}

/// The formal direct sum `⊕_j M_{n_j}(B_j)` with per-layer dimensions.
pub fn asymptotic_algebra(spec: &CellularAlgebraSpec) -> AsymptoticAlgebra {
    let mut summands = Vec::with_capacity(spec.layers.len());
    let mut total = Some(0usize);
    for layer in &spec.layers {
        let ring_dim = layer.ring.dim();
        let total_dim = match ring_dim {
            Dimension::Finite(d) => Dimension::Finite(layer.vdim * layer.vdim * d),
            Dimension::Infinite => Dimension::Infinite,
        };
        if let (Some(acc), Dimension::Finite(d)) = (total, total_dim) {
            total = Some(acc + d);
        } else {
            total = None;
        }
        summands.push(AsymptoticSummand {
            n: layer.vdim,
            ring_description: describe_ring(&layer.ring),
            ring_dim,
            total_dim,
        });
    }
    AsymptoticAlgebra {
        summands,
        total_dim: total.map_or(Dimension::Infinite, Dimension::Finite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::IdealPresentation;
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    fn quotient_q(vars: &[&str], gens: &[&str]) -> QuotientRing {
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

    fn layer(vars: &[&str], gens: &[&str], n: usize, phi: &[&[&str]]) -> Arc<CellLayer> {
        let qr = quotient_q(vars, gens);
        let ring = qr.ring().clone();
        let phi = phi
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_polynomial(s, &ring).unwrap())
                    .collect()
            })
            .collect();
        Arc::new(CellLayer::new(n, qr, phi, None).unwrap())
    }

    #[test]
    fn validation_examples() {
        // identity sigma with symmetric phi is valid
        let l = layer(&["x"], &["x^2 - 1"], 2, &[&["1", "x"], &["x", "1"]]);
        let spec = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![l] };
        assert!(validate_spec(&spec).is_valid());

        // asymmetric phi under the identity involution is invalid
        let l2 = layer(&["x"], &["x^2 - 1"], 2, &[&["0", "1"], &["0", "0"]]);
        let spec2 = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![l2] };
        let report = validate_spec(&spec2);
        assert!(!report.is_valid());
        assert!(report
            .failures
            .iter()
            .any(|f| f.check == ValidationCheck::PhiCompatibility));

        // sigma: x -> -x on Q[x]/(x^2) with phi = [[x]] breaks compatibility
        let qr = quotient_q(&["x"], &["x^2"]);
        let ring = qr.ring().clone();
        let sigma = vec![parse_polynomial("-x", &ring).unwrap()];
        let l3 = CellLayer::new(
            1,
            qr,
            vec![vec![parse_polynomial("x", &ring).unwrap()]],
            Some(sigma),
        )
        .unwrap();
        let spec3 =
            CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![Arc::new(l3)] };
        let report3 = validate_spec(&spec3);
        assert!(!report3.is_valid());
        assert!(report3
            .failures
            .iter()
            .all(|f| f.check == ValidationCheck::PhiCompatibility));
    }

    #[test]
    fn sigma_involution_and_ideal_stability() {
        // x -> x^2 on Q[x]/(x^3 - 1): sigma(sigma(x)) = x^4 = x, the ideal
        // is fixed, phi symmetric: valid
        let qr = quotient_q(&["x"], &["x^3 - 1"]);
        let ring = qr.ring().clone();
        let sigma = vec![parse_polynomial("x^2", &ring).unwrap()];
        let l = CellLayer::new(1, qr, vec![vec![ring.one()]], Some(sigma)).unwrap();
        let spec = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![Arc::new(l)] };
        assert!(validate_spec(&spec).is_valid());

        // x -> x + 1 on Q[x]/(x^2): neither an involution nor ideal-stable
        let qr2 = quotient_q(&["x"], &["x^2"]);
        let ring2 = qr2.ring().clone();
        let l2 = CellLayer::new(
            1,
            qr2,
            vec![vec![ring2.one()]],
            Some(vec![parse_polynomial("x + 1", &ring2).unwrap()]),
        )
        .unwrap();
        let spec2 =
            CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![Arc::new(l2)] };
        let report = validate_spec(&spec2);
        assert!(report
            .failures
            .iter()
            .any(|f| f.check == ValidationCheck::SigmaInvolution));
        assert!(report
            .failures
            .iter()
            .any(|f| f.check == ValidationCheck::SigmaPreservesIdeal));
    }

    #[test]
    fn layer_multiplication_basis_case() {
        let l = layer(&["x"], &["x^2 - 1"], 2, &[&["1", "x"], &["x", "1"]]);
        let ring = l.ring().ring().clone();
        let one = ring.one();
        // (v_1 ⊗ 1 ⊗ v_2) * (v_1 ⊗ 1 ⊗ v_1) = v_1 ⊗ phi_21 ⊗ v_1
        let a = LayerElement::from_entry(Arc::clone(&l), 0, 1, &one).unwrap();
        let b = LayerElement::from_entry(Arc::clone(&l), 0, 0, &one).unwrap();
        let prod = layer_multiply(&a, &b).unwrap();
        let expected =
            LayerElement::from_entry(Arc::clone(&l), 0, 0, l.phi().entry(1, 0)).unwrap();
        assert_eq!(prod.coords(), expected.coords());
    }

    #[test]
    fn identity_phi_gives_matrix_multiplication() {
        let l = layer(&["x"], &["x^2 - x"], 2, &[&["1", "0"], &["0", "1"]]);
        let ring = l.ring().ring().clone();
        let x = ring.variable(0);
        let a = LayerElement::new(
            Arc::clone(&l),
            vec![vec![ring.one(), x.clone()], vec![ring.zero(), ring.one()]],
        )
        .unwrap();
        let b = LayerElement::new(
            Arc::clone(&l),
            vec![vec![x.clone(), ring.zero()], vec![ring.one(), ring.one()]],
        )
        .unwrap();
        let prod = layer_multiply(&a, &b).unwrap();
        let plain = a.coords().mul(b.coords(), l.ring());
        assert_eq!(prod.coords(), &plain);
    }

    #[test]
    fn zero_phi_kills_products() {
        let l = layer(&["x"], &["x^2 - 1"], 2, &[&["0", "0"], &["0", "0"]]);
        let ring = l.ring().ring().clone();
        let a = LayerElement::from_entry(Arc::clone(&l), 0, 1, &ring.one()).unwrap();
        let prod = layer_multiply(&a, &a).unwrap();
        assert!(prod.coords().is_zero());
    }

    #[test]
    fn layer_mismatch_reported() {
        let l1 = layer(&["x"], &["x^2 - 1"], 1, &[&["1"]]);
        let l2 = layer(&["x"], &["x^2 - x"], 1, &[&["1"]]);
        let a = LayerElement::from_entry(Arc::clone(&l1), 0, 0, &l1.ring().ring().one()).unwrap();
        let b = LayerElement::from_entry(Arc::clone(&l2), 0, 0, &l2.ring().ring().one()).unwrap();
        assert!(matches!(layer_multiply(&a, &b), Err(Error::LayerMismatch)));
    }

    #[test]
    fn switch_algebra_scalar_case() {
        // Lambda = Q (1x1 matrices over the no-variable ring), pivot 2:
        // 3 ~ 5 = 3*2*5 = 30
        let qr = quotient_q(&[], &[]);
        let ring = qr.ring().clone();
        let alg = Arc::new(SwitchAlgebra::new(qr, vec![vec![ring.integer(2)]]).unwrap());
        let a = alg.element(vec![vec![ring.integer(3)]]).unwrap();
        let b = alg.element(vec![vec![ring.integer(5)]]).unwrap();
        let prod = switch_multiply(&a, &b).unwrap();
        assert_eq!(prod.value().entry(0, 0), &ring.integer(30));

        // zero pivot kills everything
        let qr2 = quotient_q(&[], &[]);
        let alg0 = Arc::new(SwitchAlgebra::new(qr2, vec![vec![ring.zero()]]).unwrap());
        let c = alg0.element(vec![vec![ring.integer(7)]]).unwrap();
        assert!(switch_multiply(&c, &c).unwrap().value().is_zero());

        // pivot mismatch
        assert!(matches!(switch_multiply(&a, &c), Err(Error::PivotMismatch)));
    }

    #[test]
    fn switch_product_is_associative_on_samples() {
        let qr = quotient_q(&[], &[]);
        let ring = qr.ring().clone();
        let pivot = vec![
            vec![ring.integer(1), ring.integer(2)],
            vec![ring.integer(2), ring.integer(-1)],
        ];
        let alg = Arc::new(SwitchAlgebra::new(qr, pivot).unwrap());
        let elems = [
            alg.element(vec![
                vec![ring.integer(1), ring.integer(0)],
                vec![ring.integer(3), ring.integer(1)],
            ])
            .unwrap(),
            alg.element(vec![
                vec![ring.integer(0), ring.integer(-2)],
                vec![ring.integer(1), ring.integer(5)],
            ])
            .unwrap(),
            alg.element(vec![
                vec![ring.integer(4), ring.integer(1)],
                vec![ring.integer(1), ring.integer(1)],
            ])
            .unwrap(),
        ];
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let lhs =
                        switch_multiply(&switch_multiply(a, b).unwrap(), c).unwrap();
                    let rhs =
                        switch_multiply(a, &switch_multiply(b, c).unwrap()).unwrap();
                    assert_eq!(lhs.value(), rhs.value());
                }
            }
        }
    }

    #[test]
    fn determinants() {
        // phi = [[1, x], [x, 1]] over Q[x]/(x^2 - 1): det = 1 - x^2 = 0
        let l = layer(&["x"], &["x^2 - 1"], 2, &[&["1", "x"], &["x", "1"]]);
        assert!(l.det_phi().is_zero());
        // [[0, 1], [1, 0]]: det = -1
        let l2 = layer(&["x"], &["x^2 - 1"], 2, &[&["0", "1"], &["1", "0"]]);
        assert_eq!(l2.det_phi(), l2.ring().ring().integer(-1));
        // 1x1: det = the entry
        let l3 = layer(&["x"], &["x^2 - 1"], 1, &[&["x"]]);
        assert_eq!(l3.det_phi(), l3.ring().ring().variable(0));
        // transpose invariance
        let l4 = layer(&["x"], &["x^3 - x"], 2, &[&["x", "x^2"], &["1", "x"]]);
        assert_eq!(l4.phi().det(l4.ring()), l4.phi().transpose().det(l4.ring()));
    }

    #[test]
    fn phi_inverses() {
        // [[2]] over Q: inverse [[1/2]]
        let l = layer(&[], &[], 1, &[&["2"]]);
        let inv = l.phi_inverse().unwrap().unwrap();
        let ring = l.ring().ring();
        assert_eq!(
            inv.entry(0, 0),
            &ring.one().scale(&FieldSpec::Rationals.integer(2).inv().unwrap())
        );
        // [[x]] over Q[x]/(x^2 - 1): x is its own inverse
        let l2 = layer(&["x"], &["x^2 - 1"], 1, &[&["x"]]);
        let inv2 = l2.phi_inverse().unwrap().unwrap();
        assert_eq!(inv2.entry(0, 0), &l2.ring().ring().variable(0));
        // [[x]] over Q[x]/(x^2): not invertible
        let l3 = layer(&["x"], &["x^2"], 1, &[&["x"]]);
        assert!(l3.phi_inverse().unwrap().is_none());
    }

    #[test]
    fn asymptotic_descriptions() {
        let l = layer(&["x"], &["x^2 - x"], 2, &[&["1", "0"], &["0", "1"]]);
        let spec = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![l] };
        let a = asymptotic_algebra(&spec);
        assert_eq!(a.summands.len(), 1);
        assert_eq!(a.total_dim, Dimension::Finite(8));

        let k1 = layer(&[], &[], 1, &[&["1"]]);
        let k2 = layer(&[], &[], 1, &[&["1"]]);
        let spec2 = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![k1, k2] };
        let a2 = asymptotic_algebra(&spec2);
        assert_eq!(a2.total_dim, Dimension::Finite(2));
        assert_eq!(a2.to_string(), "M_1(Q) (+) M_1(Q)  [K-dimension 2]");

        let inf = layer(&["x"], &[], 1, &[&["1"]]);
        let spec3 = CellularAlgebraSpec { field: FieldSpec::Rationals, layers: vec![inf] };
        assert_eq!(asymptotic_algebra(&spec3).total_dim, Dimension::Infinite);
    }

    #[test]
    fn asymptotic_map_properties() {
        // phi invertible: the operator is bijective
        let l = layer(&["x"], &["x^2 - x"], 2, &[&["1", "0"], &["0", "1"]]);
        let op = l.right_multiplication_operator().unwrap();
        assert!(!op.is_singular());
        assert!(l.asymptotic_kernel_element().unwrap().is_none());

        // phi = [[1, 0], [0, x]] over Q[x]/(x^2 - x): det = x is a
        // zero-divisor, so the operator is singular with a nonzero kernel
        let l2 = layer(&["x"], &["x^2 - x"], 2, &[&["1", "0"], &["0", "x"]]);
        let det = l2.det_phi();
        assert!(l2.ring().is_zero_divisor(&det).unwrap().is_zero_divisor);
        let op2 = l2.right_multiplication_operator().unwrap();
        assert!(op2.is_singular());
        let kern = l2.asymptotic_kernel_element().unwrap().unwrap();
        assert!(!kern.coords().is_zero());
        assert!(l2.asymptotic_map(&kern).is_zero());

        // multiplicativity: map(a * b) = map(a) * map(b)
        let ring = l2.ring().ring().clone();
        let x = ring.variable(0);
        let a = LayerElement::new(
            Arc::clone(&l2),
            vec![vec![ring.one(), x.clone()], vec![x.clone(), ring.integer(2)]],
        )
        .unwrap();
        let b = LayerElement::new(
            Arc::clone(&l2),
            vec![vec![x.clone(), ring.zero()], vec![ring.one(), x.clone()]],
        )
        .unwrap();
        let lhs = l2.asymptotic_map(&layer_multiply(&a, &b).unwrap());
        let rhs = l2.asymptotic_map(&a).mul(&l2.asymptotic_map(&b), l2.ring());
        assert_eq!(lhs, rhs);

        // phi = 0: the map is identically zero
        let l3 = layer(&["x"], &["x^2 - 1"], 2, &[&["0", "0"], &["0", "0"]]);
        let e = LayerElement::from_entry(Arc::clone(&l3), 0, 0, &l3.ring().ring().one()).unwrap();
        assert!(l3.asymptotic_map(&e).is_zero());
    }
}
