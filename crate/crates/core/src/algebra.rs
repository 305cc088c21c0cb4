//! The algebra `𝒜_σ` with basis `(U, g)`, `U ∈ Ω_σ`, `g ∈ U`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_set::{RepresentationAxiom, RepresentationViolation};
use crate::field::{Field, FieldScalar};
use crate::group::SubsetMask;
use crate::linalg::Subspace;
use crate::spectrum::Spectrum;

/// A basis pair `(U, g)`.
pub type BasisPair = (SubsetMask, usize);

/// A sparse linear combination of basis pairs; the empty map is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisPair, FieldScalar>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn monomial(k: FieldScalar, u: SubsetMask, g: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term((u, g), k);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisPair, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &BasisPair) -> Option<&FieldScalar> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `k·key`, dropping the term if it cancels.
    pub fn add_term(&mut self, key: BasisPair, k: FieldScalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = &*c + &k;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, k);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, -v);
        }
        out
    }

    pub fn scale(&self, k: &FieldScalar) -> AlgebraElement {
        if k.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(b, v)| (*b, v * k)).collect() }
    }
}

/// Violation of a defining relation of the twisted partial group algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    /// Relation number 1 to 4.
    pub relation: u8,
    pub pair: (usize, usize),
}

/// Result of [`PartialAlgebra::verify_partition_of_unity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub sums_to_unit: bool,
    pub orthogonal: bool,
    pub idempotent: bool,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.sums_to_unit && self.orthogonal && self.idempotent
    }
}

/// `𝒜_σ` over a computed spectrum.
pub struct PartialAlgebra<'a> {
    spectrum: &'a Spectrum,
    basis: Vec<BasisPair>,
    index: HashMap<BasisPair, usize>,
}

impl<'a> PartialAlgebra<'a> {
    pub fn new(spectrum: &'a Spectrum) -> PartialAlgebra<'a> {
        let basis: Vec<BasisPair> =
            spectrum.omega().iter().flat_map(|&u| u.elements().map(move |g| (u, g))).collect();
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        PartialAlgebra { spectrum, basis, index }
    }

    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum
    }

    pub fn field(&self) -> Field {
        self.spectrum.sigma().field()
    }

    /// Basis pairs ordered by the spectrum order of `U`, then `g`.
    pub fn basis(&self) -> &[BasisPair] {
        &self.basis
    }

    /// `Σ_{U ∈ Ω_σ} |U|`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, b: &BasisPair) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// `k·(U,g)`, checked against the basis.
    pub fn element(&self, k: FieldScalar, u: SubsetMask, g: usize) -> Result<AlgebraElement> {
        if !u.contains(0) {
            return Err(Error::IdentityMissing);
        }
        if !u.contains(g) || !self.spectrum.chi(u) {
            return Err(Error::NotInOmega(u.to_string()));
        }
        if k.field() != self.field() {
            return Err(Error::FieldMismatch { left: self.field(), right: k.field() });
        }
        Ok(AlgebraElement::monomial(k, u, g))
    }

    pub fn basis_element(&self, b: BasisPair) -> AlgebraElement {
        AlgebraElement::monomial(self.field().one(), b.0, b.1)
    }

    /// `({1},1)`.
    pub fn unit(&self) -> AlgebraElement {
        self.basis_element((SubsetMask::identity(), 0))
    }

    /// Product of basis pairs: `σ(g,h) χ(U ∪ gV) (U ∪ gV, gh)`.
    pub fn mul_basis(&self, (u, g): BasisPair, (v, h): BasisPair) -> Option<(FieldScalar, BasisPair)> {
        let sigma = self.spectrum.sigma();
        let s = sigma.get(g, h);
        if s.is_zero() {
            return None;
        }
        let grp = sigma.group();
        let w = u.union(grp.translate(v, g));
        if !self.spectrum.chi(w) {
            return None;
        }
        Some((s.clone(), (w, grp.mul(g, h))))
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, ka) in x.terms() {
            for (b, kb) in y.terms() {
                if let Some((s, c)) = self.mul_basis(*a, *b) {
                    out.add_term(c, s * ka * kb);
                }
            }
        }
        out
    }

    fn mul3(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> AlgebraElement {
        self.mul(&self.mul(x, y), z)
    }

    /// Image of the generator `[g]`: `χ({1,g})({1,g},g)`.
    pub fn gen(&self, g: usize) -> AlgebraElement {
        let u = SubsetMask::from_elements([0, g]);
        if self.spectrum.chi(u) {
            self.basis_element((u, g))
        } else {
            AlgebraElement::zero()
        }
    }

    /// `e_g = σ(g,g⁻¹)⁻¹ [g][g⁻¹]`, or zero when `σ(g,g⁻¹) = 0`.
    pub fn e_idempotent(&self, g: usize) -> AlgebraElement {
        let sigma = self.spectrum.sigma();
        let gi = sigma.group().inv(g);
        match sigma.get(g, gi).inv() {
            Ok(k) => self.mul(&self.gen(g), &self.gen(gi)).scale(&k),
            Err(_) => AlgebraElement::zero(),
        }
    }

    /// `Υ_ξ = ∏_{s∈ξ} e_s ∏_{t∉ξ} (1 − e_t)`.
    pub fn upsilon(&self, xi: SubsetMask) -> Result<AlgebraElement> {
        if !self.spectrum.chi(xi) {
            return Err(Error::NotInOmega(xi.to_string()));
        }
        let grp = self.spectrum.sigma().group();
        let one = self.unit();
        let mut acc = one.clone();
        for s in xi.elements() {
            acc = self.mul(&acc, &self.e_idempotent(s));
        }
        for t in grp.full().difference(xi).elements() {
            acc = self.mul(&acc, &one.sub(&self.e_idempotent(t)));
        }
        Ok(acc)
    }

    /// Checks `Σ_A Υ_A = 1`, `Υ_A Υ_B = 0` for `A ≠ B`, and `Υ_A² = Υ_A`.
    pub fn verify_partition_of_unity(&self) -> PartitionReport {
        let ups: Vec<AlgebraElement> = self.spectrum.omega().iter().map(|&a| self.upsilon(a).unwrap()).collect();
        let sum = ups.iter().fold(AlgebraElement::zero(), |acc, u| acc.add(u));
        let mut orthogonal = true;
        let mut idempotent = true;
        for (i, a) in ups.iter().enumerate() {
            for (j, b) in ups.iter().enumerate() {
                let p = self.mul(a, b);
                if i == j {
                    idempotent &= p == *a;
                } else {
                    orthogonal &= p.is_zero();
                }
            }
        }
        PartitionReport { sums_to_unit: sum == self.unit(), orthogonal, idempotent }
    }

    /// The five representation axioms for `π = gen` with factor set `σ`.
    pub fn check_representation_axioms(&self) -> Vec<RepresentationViolation> {
        let sigma = self.spectrum.sigma();
        let grp = sigma.group();
        let gens: Vec<AlgebraElement> = grp.elements().map(|g| self.gen(g)).collect();
        let mut out = Vec::new();
        let mut fail = |axiom, pair| out.push(RepresentationViolation { axiom, pair });
        if gens[0] != self.unit() {
            fail(RepresentationAxiom::III, (0, 0));
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let s = sigma.get(g, h);
                let (gi, hi, gh) = (grp.inv(g), grp.inv(h), grp.mul(g, h));
                if s.is_zero()
                    && !(self.mul(&gens[gi], &gens[gh]).is_zero() && self.mul(&gens[gh], &gens[hi]).is_zero())
                {
                    fail(RepresentationAxiom::I, (g, h));
                }
                if self.mul(&gens[g], &gens[h]).is_zero() && !s.is_zero() {
                    fail(RepresentationAxiom::II, (g, h));
                }
                let lhs = self.mul3(&gens[gi], &gens[g], &gens[h]);
                let rhs = self.mul(&gens[gi], &gens[gh]).scale(s);
                if lhs != rhs {
                    fail(RepresentationAxiom::IV, (g, h));
                }
                let lhs = self.mul3(&gens[g], &gens[h], &gens[hi]);
                let rhs = self.mul(&gens[gh], &gens[hi]).scale(s);
                if lhs != rhs {
                    fail(RepresentationAxiom::V, (g, h));
                }
            }
        }
        out
    }

    /// The four defining relations of the twisted partial group algebra,
    /// evaluated on `gen`.
    pub fn check_defining_relations(&self) -> Vec<RelationViolation> {
        let sigma = self.spectrum.sigma();
        let grp = sigma.group();
        let gens: Vec<AlgebraElement> = grp.elements().map(|g| self.gen(g)).collect();
        let mut out = Vec::new();
        for g in grp.elements() {
            for h in grp.elements() {
                let s = sigma.get(g, h);
                let (gi, hi, gh) = (grp.inv(g), grp.inv(h), grp.mul(g, h));
                let r1 = !s.is_zero()
                    || (self.mul(&gens[gi], &gens[gh]).is_zero() && self.mul(&gens[gh], &gens[hi]).is_zero());
                let r2 = self.mul3(&gens[gi], &gens[g], &gens[h]) == self.mul(&gens[gi], &gens[gh]).scale(s);
                let r3 = self.mul3(&gens[g], &gens[h], &gens[hi]) == self.mul(&gens[gh], &gens[hi]).scale(s);
                for (ok, relation) in [(r1, 1), (r2, 2), (r3, 3)] {
                    if !ok {
                        out.push(RelationViolation { relation, pair: (g, h) });
                    }
                }
            }
            let r4 = self.mul(&gens[g], &gens[0]) == gens[g] && self.mul(&gens[0], &gens[g]) == gens[g];
            if !r4 {
                out.push(RelationViolation { relation: 4, pair: (g, 0) });
            }
        }
        out
    }

    /// Coordinates in the order of [`PartialAlgebra::basis`].
    pub fn to_vector(&self, x: &AlgebraElement) -> Result<Vec<FieldScalar>> {
        let mut v = vec![self.field().zero(); self.dimension()];
        for (b, k) in x.terms() {
            let i = self.basis_index(b).ok_or_else(|| Error::NotInOmega(b.0.to_string()))?;
            v[i] = k.clone();
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &[FieldScalar]) -> AlgebraElement {
        let mut x = AlgebraElement::zero();
        for (b, k) in self.basis.iter().zip(v) {
            x.add_term(*b, k.clone());
        }
        x
    }

    /// `span{(U,1) : U ∈ Ω_σ}`, the image of the idempotent subalgebra.
    pub fn b_span(&self) -> Result<Subspace> {
        let vecs: Result<Vec<_>> = self
            .spectrum
            .omega()
            .iter()
            .map(|&u| self.to_vector(&self.basis_element((u, 0))))
            .collect();
        Subspace::row_reduce(self.field(), self.dimension(), &vecs?)
    }

    /// The two-sided ideal generated by `x`, closed under left and right
    /// multiplication by basis elements until the rank stabilises.
    pub fn ideal(&self, x: &AlgebraElement) -> Result<Subspace> {
        let mut ideal = Subspace::zero(self.field(), self.dimension());
        let mut queue = vec![x.clone()];
        ideal.insert(self.to_vector(x)?)?;
        while let Some(v) = queue.pop() {
            for &b in &self.basis {
                let be = self.basis_element(b);
                for w in [self.mul(&be, &v), self.mul(&v, &be)] {
                    if !w.is_zero() && ideal.insert(self.to_vector(&w)?)? {
                        queue.push(w);
                    }
                }
            }
        }
        Ok(ideal)
    }

    /// Whether the ideal generated by a nonzero `x` meets the span of the
    /// idempotents `(U,1)`.
    pub fn ideal_meets_b(&self, x: &AlgebraElement) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.ideal(x)?.intersect(&self.b_span()?)?.rank() > 0)
    }
}
