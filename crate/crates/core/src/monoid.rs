//! The inverse monoid `𝒮^σ(G)` of scaled pairs `k(U, g)`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::group::SubsetMask;
use crate::sampling::Sampling;
use crate::spectrum::Spectrum;

/// An element of `𝒮^σ(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonoidElement {
    Zero,
    /// `k(U, g)` with `k ≠ 0`, `U ∈ Ω_σ` and `g ∈ U`.
    Scaled { k: FieldScalar, set: SubsetMask, g: usize },
}

impl MonoidElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, MonoidElement::Zero)
    }
}

/// Outcome of [`TwistedMonoid::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    pub carrier_size: usize,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    pub triples_checked: usize,
    pub associativity_failures: usize,
    pub unit_failures: usize,
    pub idempotent_failures: usize,
    pub commuting_failures: usize,
    pub inverse_failures: usize,
    pub cancellativity_failures: usize,
    pub chi_coherence_failures: usize,
    pub chi_pair_failures: usize,
}

impl MonoidReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures == 0
            && self.unit_failures == 0
            && self.idempotent_failures == 0
            && self.commuting_failures == 0
            && self.inverse_failures == 0
            && self.cancellativity_failures == 0
            && self.chi_coherence_failures == 0
            && self.chi_pair_failures == 0
    }
}

/// `𝒮^σ(G)` over a computed spectrum.
pub struct TwistedMonoid<'a> {
    spectrum: &'a Spectrum,
}

impl<'a> TwistedMonoid<'a> {
    pub fn new(spectrum: &'a Spectrum) -> TwistedMonoid<'a> {
        TwistedMonoid { spectrum }
    }

    fn field(&self) -> Field {
        self.spectrum.sigma().field()
    }

    /// `k(U, g)`, checked.
    pub fn element(&self, k: FieldScalar, set: SubsetMask, g: usize) -> Result<MonoidElement> {
        if k.is_zero() {
            return Err(Error::ZeroElement);
        }
        if k.field() != self.field() {
            return Err(Error::FieldMismatch { left: self.field(), right: k.field() });
        }
        if !set.contains(0) {
            return Err(Error::IdentityMissing);
        }
        if !set.contains(g) || !self.spectrum.chi(set) {
            return Err(Error::NotInOmega(set.to_string()));
        }
        Ok(MonoidElement::Scaled { k, set, g })
    }

    /// `({1}, 1)`.
    pub fn unit(&self) -> MonoidElement {
        MonoidElement::Scaled { k: self.field().one(), set: SubsetMask::identity(), g: 0 }
    }

    /// `k(U,g) ★ r(V,h) = σ(g,h) χ(U ∪ gV) kr (U ∪ gV, gh)`.
    pub fn mul(&self, x: &MonoidElement, y: &MonoidElement) -> MonoidElement {
        let (MonoidElement::Scaled { k, set: u, g }, MonoidElement::Scaled { k: r, set: v, g: h }) = (x, y) else {
            return MonoidElement::Zero;
        };
        let sigma = self.spectrum.sigma();
        let s = sigma.get(*g, *h);
        if s.is_zero() {
            return MonoidElement::Zero;
        }
        let grp = sigma.group();
        let w = u.union(grp.translate(*v, *g));
        if !self.spectrum.chi(w) {
            return MonoidElement::Zero;
        }
        MonoidElement::Scaled { k: s * k * r, set: w, g: grp.mul(*g, *h) }
    }

    /// `σ(g,g⁻¹)⁻¹ k⁻¹ (g⁻¹U, g⁻¹)`.
    pub fn inverse(&self, x: &MonoidElement) -> Result<MonoidElement> {
        let MonoidElement::Scaled { k, set, g } = x else {
            return Err(Error::ZeroHasNoInverse);
        };
        let sigma = self.spectrum.sigma();
        let grp = sigma.group();
        let gi = grp.inv(*g);
        let s = sigma.get(*g, gi);
        let k = (s * k).inv()?;
        Ok(MonoidElement::Scaled { k, set: grp.translate(*set, gi), g: gi })
    }

    pub fn scale(&self, r: &FieldScalar, x: &MonoidElement) -> MonoidElement {
        match x {
            MonoidElement::Scaled { k, set, g } if !r.is_zero() => {
                MonoidElement::Scaled { k: r * k, set: *set, g: *g }
            }
            _ => MonoidElement::Zero,
        }
    }

    /// Zero and the unscaled basis elements `(U, g)`.
    pub fn carrier(&self) -> Vec<MonoidElement> {
        let one = self.field().one();
        let mut out = vec![MonoidElement::Zero];
        for &u in self.spectrum.omega() {
            for g in u.elements() {
                out.push(MonoidElement::Scaled { k: one.clone(), set: u, g });
            }
        }
        out
    }

    /// All nonzero elements over a finite field.
    pub fn nonzero_elements(&self) -> Option<Vec<MonoidElement>> {
        let q = self.field().size()?;
        let mut out = Vec::new();
        for &u in self.spectrum.omega() {
            for g in u.elements() {
                for v in 1..q {
                    out.push(MonoidElement::Scaled { k: FieldScalar::from_int(self.field(), v as i64), set: u, g });
                }
            }
        }
        Some(out)
    }

    fn chi(&self, u: SubsetMask) -> bool {
        self.spectrum.chi(u)
    }

    /// Associativity, unit, idempotents, inverses, κ-cancellativity and the
    /// χ-coherence identity. Triple checks run over the carrier of unscaled
    /// elements, exhaustively when `sampling` allows it.
    pub fn verify(&self, sampling: &Sampling) -> MonoidReport {
        let carrier = self.carrier();
        let n = carrier.len();
        let field = self.field();
        let two = FieldScalar::from_int(field, 2);
        let scalars: Vec<FieldScalar> =
            if two.is_zero() { vec![field.one()] } else { vec![field.one(), two.clone()] };
        let mut report = MonoidReport { carrier_size: n, ..Default::default() };

        let triples: Vec<(usize, usize, usize)> = match sampling.plan(n * n * n) {
            None => {
                report.exhaustive = true;
                (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect()
            }
            Some((count, seed)) => {
                report.seed = Some(seed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect()
            }
        };
        report.triples_checked = triples.len();
        report.associativity_failures = triples
            .par_iter()
            .filter(|&&(i, j, k)| {
                let (x, y, z) = (&carrier[i], &carrier[j], &carrier[k]);
                self.mul(&self.mul(x, y), z) != self.mul(x, &self.mul(y, z))
            })
            .count();
        report.chi_coherence_failures = triples
            .par_iter()
            .filter(|&&(i, j, k)| !self.chi_coherent(&carrier[i], &carrier[j], &carrier[k]))
            .count();

        let unit = self.unit();
        for x in &carrier {
            for r in &scalars {
                let x = self.scale(r, x);
                if self.mul(&unit, &x) != x || self.mul(&x, &unit) != x {
                    report.unit_failures += 1;
                }
                let is_idem = self.mul(&x, &x) == x;
                let expected = match &x {
                    MonoidElement::Zero => true,
                    MonoidElement::Scaled { k, g, .. } => k.is_one() && *g == 0,
                };
                if is_idem != expected {
                    report.idempotent_failures += 1;
                }
                if let Ok(xi) = self.inverse(&x) {
                    let ok = self.mul(&self.mul(&x, &xi), &x) == x && self.mul(&self.mul(&xi, &x), &xi) == xi;
                    if !ok {
                        report.inverse_failures += 1;
                    }
                } else if !x.is_zero() {
                    report.inverse_failures += 1;
                }
            }
            if !x.is_zero() {
                for (a, r) in scalars.iter().enumerate() {
                    for t in &scalars[a + 1..] {
                        if self.scale(r, x) == self.scale(t, x) {
                            report.cancellativity_failures += 1;
                        }
                    }
                }
            }
        }

        let idempotents: Vec<&MonoidElement> =
            carrier.iter().filter(|x| matches!(x, MonoidElement::Scaled { g: 0, .. })).collect();
        for x in &idempotents {
            for y in &idempotents {
                if self.mul(x, y) != self.mul(y, x) {
                    report.commuting_failures += 1;
                }
            }
        }

        let sigma = self.spectrum.sigma();
        let grp = sigma.group();
        for g in grp.elements() {
            let chi = self.chi(SubsetMask::from_elements([0, g]));
            if chi == sigma.is_zero_at(g, grp.inv(g)) {
                report.chi_pair_failures += 1;
            }
        }
        report
    }

    /// `χ(U∪gV) χ(U∪gV∪ghS) = χ(V∪hS) χ(U∪gV∪ghS)`.
    fn chi_coherent(&self, x: &MonoidElement, y: &MonoidElement, z: &MonoidElement) -> bool {
        let (
            MonoidElement::Scaled { set: u, g, .. },
            MonoidElement::Scaled { set: v, g: h, .. },
            MonoidElement::Scaled { set: s, .. },
        ) = (x, y, z)
        else {
            return true;
        };
        let grp = self.spectrum.sigma().group();
        let ugv = u.union(grp.translate(*v, *g));
        let all = ugv.union(grp.translate(*s, grp.mul(*g, *h)));
        let vhs = v.union(grp.translate(*s, *h));
        let chi_all = self.chi(all);
        (self.chi(ugv) && chi_all) == (self.chi(vhs) && chi_all)
    }
}
