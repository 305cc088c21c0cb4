//! Prohibitions, the spectrum `Ω_σ` and the spectral partial action.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::field::FieldScalar;
use crate::group::{SubsetMask, DEFAULT_ORDER_CAP};

/// `∂(σ)(x,y,z) = σ(x,y) σ(xy,z) σ(z⁻¹y⁻¹,x⁻¹) σ(z⁻¹,y⁻¹)`.
pub fn coboundary_defect(sigma: &FactorSet, x: usize, y: usize, z: usize) -> FieldScalar {
    let g = sigma.group();
    let (xi, yi, zi) = (g.inv(x), g.inv(y), g.inv(z));
    sigma.get(x, y) * sigma.get(g.mul(x, y), z) * sigma.get(g.mul(zi, yi), xi) * sigma.get(zi, yi)
}

/// Whether to scan for type-2 prohibitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Type2Scan {
    /// Skip the scan for idempotent `σ`, where type 1 suffices.
    #[default]
    Auto,
    /// Always scan.
    Always,
}

/// Inclusion-minimal prohibitions of each type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProhibitionSet {
    /// Sets `{h, hg, hgs}` with `σ(g,s) = 0`.
    pub type1: Vec<SubsetMask>,
    /// Sets `{h, hg, hgs, hgst}` with `σ(g,st)σ(s,t) ≠ σ(g,s)σ(gs,t)`.
    pub type2: Vec<SubsetMask>,
    /// Whether the type-2 scan actually ran.
    pub type2_scanned: bool,
}

impl ProhibitionSet {
    /// Minimal members of the union of both types.
    pub fn minimal(&self) -> Vec<SubsetMask> {
        minimal_sets(self.type1.iter().chain(&self.type2).copied().collect())
    }

    /// True iff no prohibition is contained in `xi`.
    pub fn in_omega(&self, xi: SubsetMask) -> Result<bool> {
        if !xi.contains(0) {
            return Err(Error::IdentityMissing);
        }
        Ok(!self.type1.iter().chain(&self.type2).any(|p| p.is_subset_of(xi)))
    }
}

fn minimal_sets(mut sets: Vec<SubsetMask>) -> Vec<SubsetMask> {
    sets.sort_by_key(|s| s.size_key());
    sets.dedup();
    let mut out: Vec<SubsetMask> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.is_subset_of(s)) {
            out.push(s);
        }
    }
    out
}

/// Scans all `(h,g,s)` and, when requested, all `(h,g,s,t)`.
pub fn compute_prohibitions(sigma: &FactorSet, scan: Type2Scan) -> ProhibitionSet {
    let g = sigma.group();
    let n = g.order();
    let type1: BTreeSet<SubsetMask> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut out = Vec::new();
            for s in 0..n {
                if sigma.is_zero_at(x, s) {
                    for h in 0..n {
                        let hx = g.mul(h, x);
                        out.push(SubsetMask::from_elements([h, hx, g.mul(hx, s)]));
                    }
                }
            }
            out
        })
        .collect();
    let type2_scanned = scan == Type2Scan::Always || !sigma.is_idempotent();
    let type2: BTreeSet<SubsetMask> = if type2_scanned {
        (0..n)
            .into_par_iter()
            .flat_map_iter(|x| {
                let mut out = Vec::new();
                for s in 0..n {
                    let xs = g.mul(x, s);
                    for t in 0..n {
                        let lhs = sigma.get(x, g.mul(s, t)) * sigma.get(s, t);
                        let rhs = sigma.get(x, s) * sigma.get(xs, t);
                        if lhs != rhs {
                            for h in 0..n {
                                let hx = g.mul(h, x);
                                let hxs = g.mul(hx, s);
                                out.push(SubsetMask::from_elements([h, hx, hxs, g.mul(hxs, t)]));
                            }
                        }
                    }
                }
                out
            })
            .collect()
    } else {
        BTreeSet::new()
    };
    ProhibitionSet {
        type1: minimal_sets(type1.into_iter().collect()),
        type2: minimal_sets(type2.into_iter().collect()),
        type2_scanned,
    }
}

/// The spectrum of a factor set: prohibitions and the members of `Ω_σ`
/// sorted by size then mask.
#[derive(Clone, Debug)]
pub struct Spectrum {
    sigma: FactorSet,
    prohibitions: ProhibitionSet,
    minimal: Vec<SubsetMask>,
    omega: Vec<SubsetMask>,
    index: HashMap<SubsetMask, usize>,
}

/// Per-element fixed-point data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointEntry {
    pub element: usize,
    pub fixed_points: Vec<SubsetMask>,
    pub free: bool,
}

/// Isolated-point data for one member of `Ω_σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointEntry {
    pub point: SubsetMask,
    pub size: usize,
    pub admissible_count: usize,
}

/// Topological-freeness summary of the spectral action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub topologically_free: bool,
    pub fixed_points: Vec<FixedPointEntry>,
    pub points: Vec<PointEntry>,
}

impl Spectrum {
    pub fn new(sigma: FactorSet) -> Result<Spectrum> {
        Spectrum::build(sigma, DEFAULT_ORDER_CAP, Type2Scan::Auto)
    }

    pub fn with_cap(sigma: FactorSet, cap: usize) -> Result<Spectrum> {
        Spectrum::build(sigma, cap, Type2Scan::Auto)
    }

    /// Computes prohibitions, then enumerates `Ω_σ` by growing sets one
    /// admissible element at a time in increasing index order. Downward
    /// closure makes this pruned search exhaustive.
    pub fn build(sigma: FactorSet, cap: usize, scan: Type2Scan) -> Result<Spectrum> {
        let n = sigma.order();
        if n > cap {
            return Err(Error::CapExceeded { order: n, cap });
        }
        let prohibitions = compute_prohibitions(&sigma, scan);
        let minimal = prohibitions.minimal();
        let blocked = |xi: SubsetMask| minimal.iter().any(|p| p.is_subset_of(xi));
        let mut omega = Vec::new();
        if !blocked(SubsetMask::identity()) {
            let mut level = vec![SubsetMask::identity()];
            while !level.is_empty() {
                omega.extend_from_slice(&level);
                let next: Vec<SubsetMask> = level
                    .par_iter()
                    .flat_map_iter(|&xi| {
                        let top = 64 - xi.bits().leading_zeros() as usize;
                        (top.max(1)..n).map(move |g| xi.with(g)).filter(|&c| !blocked(c))
                    })
                    .collect();
                level = next;
            }
        }
        omega.sort_by_key(|s| s.size_key());
        let index = omega.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(Spectrum { sigma, prohibitions, minimal, omega, index })
    }

    pub fn sigma(&self) -> &FactorSet {
        &self.sigma
    }

    pub fn prohibitions(&self) -> &ProhibitionSet {
        &self.prohibitions
    }

    /// Inclusion-minimal prohibitions of either type.
    pub fn minimal_prohibitions(&self) -> &[SubsetMask] {
        &self.minimal
    }

    pub fn omega(&self) -> &[SubsetMask] {
        &self.omega
    }

    /// Position of `xi` in [`Spectrum::omega`].
    pub fn position(&self, xi: SubsetMask) -> Option<usize> {
        self.index.get(&xi).copied()
    }

    /// `χ(U)`: whether `U ∈ Ω_σ`.
    pub fn chi(&self, u: SubsetMask) -> bool {
        self.index.contains_key(&u)
    }

    /// Membership decided from the prohibitions alone.
    pub fn in_omega(&self, xi: SubsetMask) -> Result<bool> {
        self.sigma.group().check_subset(xi)?;
        self.prohibitions.in_omega(xi)
    }

    /// `A_σ(ξ) = {g ∉ ξ : ξ ∪ {g} ∈ Ω_σ}`.
    pub fn admissibles(&self, xi: SubsetMask) -> Result<SubsetMask> {
        if !self.chi(xi) {
            return Err(Error::NotInOmega(xi.to_string()));
        }
        let rest = self.sigma.group().full().difference(xi);
        Ok(SubsetMask::from_elements(rest.elements().filter(|&g| self.chi(xi.with(g)))))
    }

    /// Members `ξ` with `g ∈ ξ` and `gξ = ξ`.
    pub fn fixed_points(&self, g: usize) -> Vec<SubsetMask> {
        let grp = self.sigma.group();
        self.omega.iter().copied().filter(|&xi| xi.contains(g) && grp.translate(xi, g) == xi).collect()
    }

    /// Every point of a finite spectrum is isolated, so the action is
    /// topologically free iff no `g ≠ 1` has a fixed point.
    pub fn freeness_report(&self) -> FreenessReport {
        let grp = self.sigma.group();
        let fixed_points: Vec<FixedPointEntry> = (1..grp.order())
            .map(|g| {
                let fp = self.fixed_points(g);
                FixedPointEntry { element: g, free: fp.is_empty(), fixed_points: fp }
            })
            .collect();
        let points = self
            .omega
            .iter()
            .map(|&xi| PointEntry { point: xi, size: xi.len(), admissible_count: self.admissibles(xi).unwrap().len() })
            .collect();
        FreenessReport { topologically_free: fixed_points.iter().all(|e| e.free), fixed_points, points }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;
    use crate::group::FiniteGroup;

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    fn sigma_n() -> FactorSet {
        FactorSet::subgroup_indicator(c(4), Field::Rational, SubsetMask::from_elements([0, 2])).unwrap()
    }

    #[test]
    fn defect_examples() {
        let one = FactorSet::ones(c(3), Field::Rational);
        assert!(coboundary_defect(&one, 1, 2, 1).is_one());
        assert!(coboundary_defect(&sigma_n(), 1, 1, 1).is_zero());
    }

    #[test]
    fn ones_has_no_prohibitions() {
        let p = compute_prohibitions(&FactorSet::ones(c(4), Field::Rational), Type2Scan::Always);
        assert!(p.type1.is_empty() && p.type2.is_empty());
    }

    #[test]
    fn subgroup_indicator_prohibitions() {
        let p = compute_prohibitions(&sigma_n(), Type2Scan::Auto);
        assert!(p.type1.contains(&SubsetMask::from_elements([0, 1])));
        assert!(p.type1.contains(&SubsetMask::from_elements([0, 3])));
    }

    #[test]
    fn omega_examples() {
        let s = Spectrum::new(FactorSet::ones(c(2), Field::Rational)).unwrap();
        assert_eq!(s.omega(), &[SubsetMask::identity(), SubsetMask::from_elements([0, 1])]);
        let s = Spectrum::new(FactorSet::ones(c(5), Field::Rational)).unwrap();
        assert_eq!(s.omega().len(), 16);
        let s = Spectrum::new(sigma_n()).unwrap();
        assert_eq!(s.omega(), &[SubsetMask::identity(), SubsetMask::from_elements([0, 2])]);
        assert!(s.in_omega(SubsetMask::from_elements([0, 2])).unwrap());
        assert!(!s.in_omega(c(4).full()).unwrap());
        assert_eq!(s.in_omega(SubsetMask::singleton(2)), Err(Error::IdentityMissing));
    }

    #[test]
    fn admissible_examples() {
        let s = Spectrum::new(sigma_n()).unwrap();
        assert_eq!(s.admissibles(SubsetMask::identity()).unwrap(), SubsetMask::singleton(2));
        assert_eq!(s.admissibles(SubsetMask::from_elements([0, 2])).unwrap(), SubsetMask::EMPTY);
        assert!(matches!(s.admissibles(SubsetMask::from_elements([0, 1])), Err(Error::NotInOmega(_))));
    }

    #[test]
    fn fixed_point_examples() {
        let s = Spectrum::new(FactorSet::ones(c(2), Field::Rational)).unwrap();
        assert_eq!(s.fixed_points(1), vec![SubsetMask::from_elements([0, 1])]);
        assert!(!s.freeness_report().topologically_free);
        let s = Spectrum::new(sigma_n()).unwrap();
        assert_eq!(s.fixed_points(2), vec![SubsetMask::from_elements([0, 2])]);
        let s = Spectrum::new(FactorSet::only_identity(c(4), Field::Rational)).unwrap();
        assert_eq!(s.omega(), &[SubsetMask::identity()]);
        assert!(s.freeness_report().topologically_free);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(FiniteGroup::cyclic(13).unwrap());
        let r = Spectrum::new(FactorSet::ones(g, Field::Rational));
        assert_eq!(r.err(), Some(Error::CapExceeded { order: 13, cap: 12 }));
    }
}
