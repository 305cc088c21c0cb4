//! Idempotent (`{0,1}`-valued) factor sets: diagonal, lateral and general
//! generators, and the unique diagonal-times-lateral decomposition.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::field::Field;
use crate::group::{FiniteGroup, SubsetMask};

pub type Pair = (usize, usize);
pub type PairSet = BTreeSet<Pair>;

/// `C_(a,b) = {(a,b), (b⁻¹a⁻¹,a), (b,b⁻¹a⁻¹), (b⁻¹,a⁻¹), (a⁻¹,ab), (ab,b⁻¹)}`.
pub fn orbit_c(grp: &FiniteGroup, a: usize, b: usize) -> PairSet {
    let (ai, bi, ab) = (grp.inv(a), grp.inv(b), grp.mul(a, b));
    let bia = grp.mul(bi, ai);
    [(a, b), (bia, a), (b, bia), (bi, ai), (ai, ab), (ab, bi)].into_iter().collect()
}

/// Union of the orbits of the given pairs.
pub fn orbit_closure(grp: &FiniteGroup, pairs: impl IntoIterator<Item = Pair>) -> PairSet {
    pairs.into_iter().flat_map(|(a, b)| orbit_c(grp, a, b)).collect()
}

/// Pairs lying in some `C_(z,z⁻¹)`: exactly those with a coordinate equal
/// to 1 or of the form `(z, z⁻¹)`.
pub fn is_degenerate_pair(grp: &FiniteGroup, (x, y): Pair) -> bool {
    x == 0 || y == 0 || grp.mul(x, y) == 0
}

/// Generator data for an idempotent factor set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdempotentGenerator {
    Diagonal(Vec<usize>),
    Lateral(Vec<Pair>),
    General(Vec<Pair>),
}

impl IdempotentGenerator {
    pub fn generate(&self, grp: Arc<FiniteGroup>, field: Field) -> Result<FactorSet> {
        match self {
            IdempotentGenerator::Diagonal(s) => {
                for &g in s {
                    grp.check_element(g).map_err(|e| Error::InvalidGenerator(e.to_string()))?;
                }
                diagonal(grp, field, SubsetMask::from_elements(s.iter().copied()))
            }
            IdempotentGenerator::Lateral(w) => lateral(grp, field, w),
            IdempotentGenerator::General(t) => general(grp, field, t),
        }
    }
}

fn check_pairs(grp: &FiniteGroup, pairs: &[Pair]) -> Result<()> {
    for &(x, y) in pairs {
        if x >= grp.order() || y >= grp.order() {
            return Err(Error::InvalidGenerator(format!("pair ({x},{y}) out of range")));
        }
    }
    Ok(())
}

/// `σ_S(x,y) = 0` iff `{x, y, xy} ∩ S ≠ ∅`, for symmetric `S ∌ 1`.
pub fn diagonal(grp: Arc<FiniteGroup>, field: Field, s: SubsetMask) -> Result<FactorSet> {
    grp.check_subset(s).map_err(|e| Error::InvalidGenerator(e.to_string()))?;
    if s.contains(0) {
        return Err(Error::InvalidGenerator("diagonal support contains the identity".into()));
    }
    if let Some(g) = s.elements().find(|&g| !s.contains(grp.inv(g))) {
        return Err(Error::InvalidGenerator(format!("diagonal support is not symmetric at {g}")));
    }
    let g2 = grp.clone();
    Ok(FactorSet::from_zero_pattern(grp, field, move |x, y| {
        s.contains(x) || s.contains(y) || s.contains(g2.mul(x, y))
    }))
}

/// `σ_W(a,b) = 0` iff `C_(a,b) ∩ W ≠ ∅`, for `W` avoiding every `C_(z,z⁻¹)`.
pub fn lateral(grp: Arc<FiniteGroup>, field: Field, w: &[Pair]) -> Result<FactorSet> {
    check_pairs(&grp, w)?;
    if let Some(p) = w.iter().find(|&&p| is_degenerate_pair(&grp, p)) {
        return Err(Error::InvalidGenerator(format!("pair {p:?} meets some C_(z,z⁻¹)")));
    }
    let closed = orbit_closure(&grp, w.iter().copied());
    Ok(FactorSet::from_zero_pattern(grp, field, |a, b| closed.contains(&(a, b))))
}

/// Splits an inversion-symmetric `T` into its diagonal part `T₀` and
/// lateral part `T₁`. `T₀` collects both `x` and `x⁻¹` whenever `T` meets
/// `C_(x,x⁻¹)` or `C_(x⁻¹,x)`, so that it is symmetric.
pub fn split_general(grp: &FiniteGroup, t: &[Pair]) -> Result<(SubsetMask, Vec<Pair>)> {
    check_pairs(grp, t)?;
    let set: PairSet = t.iter().copied().collect();
    if set.contains(&(0, 0)) {
        return Err(Error::InvalidGenerator("(1,1) is not allowed".into()));
    }
    if let Some(&(x, y)) = set.iter().find(|&&(x, y)| !set.contains(&(grp.inv(y), grp.inv(x)))) {
        return Err(Error::InvalidGenerator(format!("({x},{y}) present without (y⁻¹,x⁻¹)")));
    }
    let t0 = SubsetMask::from_elements(grp.elements().skip(1).filter(|&x| {
        let xi = grp.inv(x);
        orbit_c(grp, x, xi).union(&orbit_c(grp, xi, x)).any(|p| set.contains(p))
    }));
    let t1 = set.iter().copied().filter(|&p| !is_degenerate_pair(grp, p)).collect();
    Ok((t0, t1))
}

/// `σ_T = σ_{T₀} · σ_{T₁}`.
pub fn general(grp: Arc<FiniteGroup>, field: Field, t: &[Pair]) -> Result<FactorSet> {
    let (t0, t1) = split_general(&grp, t)?;
    diagonal(grp.clone(), field, t0)?.pm_product(&lateral(grp, field, &t1)?)
}

/// A random inversion-symmetric pair set with about `size` seed pairs.
pub fn random_general_generator<R: Rng>(grp: &FiniteGroup, rng: &mut R, size: usize) -> Vec<Pair> {
    let n = grp.order();
    let mut t = PairSet::new();
    if n == 1 {
        return Vec::new();
    }
    while t.len() < 2 * size {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if (x, y) == (0, 0) {
            continue;
        }
        t.insert((x, y));
        t.insert((grp.inv(y), grp.inv(x)));
        if rng.gen_bool(0.3) {
            break;
        }
    }
    t.into_iter().collect()
}

/// Predicted complement of the admissibles of a point under `σ_S`:
/// `{xg : x ∈ ξ, g ∈ S}`.
pub fn diagonal_blocked(grp: &FiniteGroup, s: SubsetMask, xi: SubsetMask) -> SubsetMask {
    SubsetMask::from_elements(xi.elements().flat_map(|x| s.elements().map(move |g| grp.mul(x, g))))
}

/// Predicted complement of the admissibles of a point under `σ_W`:
/// the third vertex of `{h, hx, hxy}` whenever two vertices lie in `ξ`.
pub fn lateral_blocked(grp: &FiniteGroup, w: &[Pair], xi: SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::EMPTY;
    for &(x, y) in w {
        let xy = grp.mul(x, y);
        for h in grp.elements() {
            let (a, b, c) = (h, grp.mul(h, x), grp.mul(h, xy));
            if xi.contains(a) && xi.contains(b) {
                out = out.with(c);
            }
            if xi.contains(a) && xi.contains(c) {
                out = out.with(b);
            }
            if xi.contains(b) && xi.contains(c) {
                out = out.with(a);
            }
        }
    }
    out
}

/// `σ = δ · λ` with `δ` diagonal and `λ` lateral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub diagonal_support: SubsetMask,
    pub lateral_support: Vec<Pair>,
    pub delta: FactorSet,
    pub lambda: FactorSet,
}

/// Builds `S` from the orbits of `Null(σ)` and keeps in `W̄` the
/// nondegenerate zeros where `δ` is 1; then checks `σ = δλ`,
/// `δ = 0 ⇒ λ = 1` and `Null(σ) = Null(δ) ⊔ Null(λ)`.
pub fn canonical_decomposition(sigma: &FactorSet) -> Result<CanonicalDecomposition> {
    if !sigma.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let grp = sigma.group_arc().clone();
    let null: Vec<Pair> = sigma.null_set();
    let (s, _) = split_general(&grp, &null).map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    let delta = diagonal(grp.clone(), sigma.field(), s)?;
    let w: Vec<Pair> =
        null.iter().copied().filter(|&p| !is_degenerate_pair(&grp, p) && !delta.is_zero_at(p.0, p.1)).collect();
    let lambda = lateral(grp.clone(), sigma.field(), &w)?;
    if delta.pm_product(&lambda)? != *sigma {
        return Err(Error::InvariantViolated("σ ≠ δλ".into()));
    }
    for g in grp.elements() {
        for h in grp.elements() {
            if delta.is_zero_at(g, h) && lambda.is_zero_at(g, h) {
                return Err(Error::InvariantViolated(format!("δ and λ both vanish at ({g},{h})")));
            }
        }
    }
    Ok(CanonicalDecomposition { diagonal_support: s, lateral_support: w, delta, lambda })
}
