//! Partial factor sets `σ: G × G → κ`, where a zero entry marks a
//! non-composable pair.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::PartialAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::group::{FiniteGroup, SubsetMask, DEFAULT_ORDER_CAP};
use crate::spectrum::Spectrum;

/// A dense factor set over a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    group: Arc<FiniteGroup>,
    field: Field,
    entries: Vec<FieldScalar>,
}

/// Which of the basic factor-set rules a pair violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasicRule {
    /// `σ(1,1) = 1`.
    IdentityIsOne,
    /// `σ(g,1) = σ(1,g) = σ(1,g⁻¹) ∈ {0,1}`.
    UnitPattern,
    /// `σ(g,g⁻¹) = σ(g⁻¹,g)`.
    InverseSymmetry,
    /// `σ(g,h) = 0 ⇔ σ(h⁻¹,g⁻¹) = 0`.
    ZeroSymmetry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub rule: BasicRule,
    pub pair: (usize, usize),
}

/// The five relations a partial projective representation must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationAxiom {
    /// `σ(g,h) = 0 ⇒ Γ(g⁻¹)Γ(gh) = 0 = Γ(gh)Γ(h⁻¹)`.
    I,
    /// `Γ(g)Γ(h) = 0 ⇒ σ(g,h) = 0`.
    II,
    /// `Γ(1) = 1`.
    III,
    /// `Γ(g⁻¹)Γ(g)Γ(h) = σ(g,h)Γ(g⁻¹)Γ(gh)`.
    IV,
    /// `Γ(g)Γ(h)Γ(h⁻¹) = σ(g,h)Γ(gh)Γ(h⁻¹)`.
    V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationViolation {
    pub axiom: RepresentationAxiom,
    pub pair: (usize, usize),
}

/// Outcome of [`FactorSet::validate_membership`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub member: bool,
    pub basic_violations: Vec<AxiomViolation>,
    pub representation_violations: Vec<RepresentationViolation>,
    /// `|Ω_σ|`, when the spectrum was built.
    pub omega_size: Option<usize>,
    /// `dim 𝒜_σ`, when the spectrum was built.
    pub dimension: Option<usize>,
}

impl FactorSet {
    /// Builds a factor set from an `n × n` array of entries.
    pub fn new(group: Arc<FiniteGroup>, field: Field, rows: Vec<Vec<FieldScalar>>) -> Result<FactorSet> {
        let n = group.order();
        if rows.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: rows.len() });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch { left: field, right: x.field() });
                }
                entries.push(x);
            }
        }
        Ok(FactorSet { group, field, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> FieldScalar>(group: Arc<FiniteGroup>, field: Field, mut f: F) -> FactorSet {
        let n = group.order();
        let mut entries = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let x = f(g, h);
                assert_eq!(x.field(), field, "entry from a different field");
                entries.push(x);
            }
        }
        FactorSet { group, field, entries }
    }

    /// The `{0,1}`-valued factor set with the given zero predicate.
    pub fn from_zero_pattern<F: FnMut(usize, usize) -> bool>(group: Arc<FiniteGroup>, field: Field, mut zero: F) -> FactorSet {
        let (z, o) = (field.zero(), field.one());
        FactorSet::from_fn(group, field, |g, h| if zero(g, h) { z.clone() } else { o.clone() })
    }

    /// The all-ones factor set, the unit of `pm(G)`.
    pub fn ones(group: Arc<FiniteGroup>, field: Field) -> FactorSet {
        FactorSet::from_zero_pattern(group, field, |_, _| false)
    }

    /// `σ(1,1) = 1` and zero elsewhere.
    pub fn only_identity(group: Arc<FiniteGroup>, field: Field) -> FactorSet {
        FactorSet::from_zero_pattern(group, field, |g, h| g != 0 || h != 0)
    }

    /// `σ_N(a,b) = 1` iff `a, b ∈ N`.
    pub fn subgroup_indicator(group: Arc<FiniteGroup>, field: Field, n: SubsetMask) -> Result<FactorSet> {
        group.check_subset(n)?;
        if !group.is_subgroup(n) {
            return Err(Error::PreconditionFailed(format!("{n} is not a subgroup")));
        }
        Ok(FactorSet::from_zero_pattern(group, field, |a, b| !(n.contains(a) && n.contains(b))))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn get(&self, g: usize, h: usize) -> &FieldScalar {
        &self.entries[g * self.order() + h]
    }

    pub fn is_zero_at(&self, g: usize, h: usize) -> bool {
        self.get(g, h).is_zero()
    }

    pub fn rows(&self) -> Vec<Vec<FieldScalar>> {
        self.entries.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// Pointwise product.
    pub fn pm_product(&self, other: &FactorSet) -> Result<FactorSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).collect();
        Ok(FactorSet { group: self.group.clone(), field: self.field, entries })
    }

    /// `σ'(x,y) = σ(x,y) f(x) f(y) f(xy)⁻¹` for a nowhere-zero `f`.
    pub fn twist_by_coboundary(&self, f: &[FieldScalar]) -> Result<FactorSet> {
        let n = self.order();
        if f.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.len() });
        }
        let mut inv = Vec::with_capacity(n);
        for x in f {
            if x.field() != self.field {
                return Err(Error::FieldMismatch { left: self.field, right: x.field() });
            }
            inv.push(x.inv()?);
        }
        let g = &self.group;
        Ok(FactorSet::from_fn(self.group.clone(), self.field, |x, y| {
            self.get(x, y) * &f[x] * &f[y] * &inv[g.mul(x, y)]
        }))
    }

    /// Scans the four basic rules; each violation names one offending pair.
    pub fn check_basic_axioms(&self) -> Vec<AxiomViolation> {
        let g = &self.group;
        let mut out = Vec::new();
        if !self.get(0, 0).is_one() {
            out.push(AxiomViolation { rule: BasicRule::IdentityIsOne, pair: (0, 0) });
        }
        for x in g.elements() {
            let a = self.get(x, 0);
            let ok = (a.is_zero() || a.is_one()) && a == self.get(0, x) && a == self.get(0, g.inv(x));
            if !ok {
                out.push(AxiomViolation { rule: BasicRule::UnitPattern, pair: (x, 0) });
            }
            if self.get(x, g.inv(x)) != self.get(g.inv(x), x) {
                out.push(AxiomViolation { rule: BasicRule::InverseSymmetry, pair: (x, g.inv(x)) });
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                if self.is_zero_at(x, y) != self.is_zero_at(g.inv(y), g.inv(x)) {
                    out.push(AxiomViolation { rule: BasicRule::ZeroSymmetry, pair: (x, y) });
                }
            }
        }
        out
    }

    /// Nowhere zero and `∂(σ) ≡ 1`.
    pub fn is_total_cocycle(&self) -> bool {
        let g = &self.group;
        if self.entries.iter().any(|x| x.is_zero()) {
            return false;
        }
        g.elements().all(|x| {
            g.elements().all(|y| {
                g.elements().all(|z| {
                    self.get(x, y) * self.get(g.mul(x, y), z) == self.get(x, g.mul(y, z)) * self.get(y, z)
                })
            })
        })
    }

    /// `σ(g,g⁻¹) ∈ {0,1}` for every `g`.
    pub fn is_normalized(&self) -> bool {
        self.group.elements().all(|x| {
            let v = self.get(x, self.group.inv(x));
            v.is_zero() || v.is_one()
        })
    }

    /// Every entry lies in `{0,1}`.
    pub fn is_idempotent(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero() || x.is_one())
    }

    /// `σ` restricted to the listed elements, as a table.
    pub fn restrict(&self, elems: &[usize]) -> Vec<Vec<FieldScalar>> {
        elems.iter().map(|&a| elems.iter().map(|&b| self.get(a, b).clone()).collect()).collect()
    }

    /// Zeros of `σ` as sorted pairs.
    pub fn null_set(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n * n).filter(|&i| self.entries[i].is_zero()).map(|i| (i / n, i % n)).collect()
    }

    /// Membership oracle with the default order cap.
    pub fn validate_membership(&self) -> Result<MembershipCertificate> {
        self.validate_membership_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Decides whether `σ` is a partial factor set: builds `𝒜_σ`, sets
    /// `π(g) = χ({1,g})({1,g},g)` and checks the five representation
    /// axioms with factor set `σ` on every pair. The only error is an
    /// exceeded order cap; failures are recorded in the certificate.
    pub fn validate_membership_with_cap(&self, cap: usize) -> Result<MembershipCertificate> {
        let basic = self.check_basic_axioms();
        if !basic.is_empty() {
            return Ok(MembershipCertificate {
                member: false,
                basic_violations: basic,
                representation_violations: Vec::new(),
                omega_size: None,
                dimension: None,
            });
        }
        let spectrum = Spectrum::with_cap(self.clone(), cap)?;
        let algebra = PartialAlgebra::new(&spectrum);
        let violations = algebra.check_representation_axioms();
        Ok(MembershipCertificate {
            member: violations.is_empty(),
            basic_violations: Vec::new(),
            representation_violations: violations,
            omega_size: Some(spectrum.omega().len()),
            dimension: Some(algebra.dimension()),
        })
    }
}
