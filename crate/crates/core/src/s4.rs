//! The action of `S₄` on `G³` and the symmetry of the coboundary defect.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::group::FiniteGroup;
use crate::spectrum::coboundary_defect;

/// A permutation of `{0,1,2,3}` given by its images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation4([usize; 4]);

impl Permutation4 {
    pub const IDENTITY: Permutation4 = Permutation4([0, 1, 2, 3]);

    pub fn new(images: [usize; 4]) -> Result<Permutation4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i] {
                return Err(Error::Schema(format!("{images:?} is not a permutation of 0..4")));
            }
            seen[i] = true;
        }
        Ok(Permutation4(images))
    }

    /// Product of cycles, applied right to left.
    pub fn from_cycles(cycles: &[&[usize]]) -> Result<Permutation4> {
        let mut p = Permutation4::IDENTITY;
        for cyc in cycles.iter().rev() {
            let mut img = [0, 1, 2, 3];
            for (k, &a) in cyc.iter().enumerate() {
                if a > 3 {
                    return Err(Error::Schema(format!("cycle entry {a} out of range")));
                }
                img[a] = cyc[(k + 1) % cyc.len()];
            }
            p = Permutation4::new(img)?.compose(&p);
        }
        Ok(p)
    }

    /// All 24 permutations in lexicographic order of image arrays.
    pub fn all() -> Vec<Permutation4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Ok(p) = Permutation4::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> [usize; 4] {
        self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation4) -> Permutation4 {
        Permutation4([0, 1, 2, 3].map(|i| self.0[other.0[i]]))
    }

    pub fn inverse(&self) -> Permutation4 {
        let mut inv = [0; 4];
        for i in 0..4 {
            inv[self.0[i]] = i;
        }
        Permutation4(inv)
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }
}

impl fmt::Display for Permutation4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut any = false;
        for s in 0..4 {
            if seen[s] || self.0[s] == s {
                continue;
            }
            any = true;
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            let body: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        if !any {
            write!(f, "(0)")?;
        }
        Ok(())
    }
}

pub type Triple = (usize, usize, usize);

/// `γ ▷ (x,y,z)`: with `u = (1, x, xy, xyz)` and `v_k = u_{γ⁻¹(k)}`, returns
/// `(v₀⁻¹v₁, v₁⁻¹v₂, v₂⁻¹v₃)`.
pub fn act(grp: &FiniteGroup, gamma: &Permutation4, (x, y, z): Triple) -> Triple {
    let xy = grp.mul(x, y);
    let u = [0, x, xy, grp.mul(xy, z)];
    let gi = gamma.inverse();
    let v = [0, 1, 2, 3].map(|k| u[gi.apply(k)]);
    let q = |a: usize, b: usize| grp.mul(grp.inv(v[a]), v[b]);
    (q(0, 1), q(1, 2), q(2, 3))
}

/// The orbit of `X` under the action.
pub fn orbit(grp: &FiniteGroup, x: Triple) -> BTreeSet<Triple> {
    Permutation4::all().iter().map(|g| act(grp, g, x)).collect()
}

fn all_triples(grp: &FiniteGroup) -> Vec<Triple> {
    let n = grp.order();
    (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub compositions_checked: usize,
    pub failures: usize,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks `γ ▷ (δ ▷ X) = (γδ) ▷ X` for every `γ, δ` and every `X ∈ G³`.
pub fn verify_action(grp: &FiniteGroup) -> ActionReport {
    let perms = Permutation4::all();
    let triples = all_triples(grp);
    let failures = triples
        .par_iter()
        .map(|&x| {
            let mut bad = 0;
            for g in &perms {
                for d in &perms {
                    if act(grp, g, act(grp, d, x)) != act(grp, &g.compose(d), x) {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    ActionReport { compositions_checked: triples.len() * perms.len() * perms.len(), failures }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationResult {
    pub permutation: String,
    pub even: bool,
    pub checked: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub per_permutation: Vec<PermutationResult>,
    /// Even `γ` with `∂(γ▷X) ≠ ∂(X)`.
    pub even_failures: usize,
    /// Odd `γ` with `∂(X) ≠ 0` and `∂(γ▷X) ≠ ∂(X)⁻¹`.
    pub odd_failures: usize,
    /// `∂(X) = 0` not equivalent to `∂(γ▷X) = 0`.
    pub zero_failures: usize,
    /// `∂(X) = 1` not equivalent to `∂(γ▷X) = 1`.
    pub unit_failures: usize,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.even_failures + self.odd_failures + self.zero_failures + self.unit_failures == 0
    }
}

/// Even permutations preserve `∂(σ)`, odd ones invert it where nonzero,
/// and zeros are preserved. Requires a normalized member of `pm(G)`.
pub fn verify_invariance(sigma: &FactorSet) -> Result<InvarianceReport> {
    if !sigma.is_normalized() {
        return Err(Error::PreconditionFailed("factor set is not normalized: σ(g,g⁻¹) ∉ {0,1}".into()));
    }
    if !sigma.validate_membership()?.member {
        return Err(Error::PreconditionFailed("factor set failed the membership oracle".into()));
    }
    let grp = sigma.group();
    let triples = all_triples(grp);
    let defects: Vec<_> = triples.iter().map(|&(x, y, z)| coboundary_defect(sigma, x, y, z)).collect();
    let n = grp.order();
    let idx = |(x, y, z): Triple| (x * n + y) * n + z;
    let mut report =
        InvarianceReport { per_permutation: Vec::new(), even_failures: 0, odd_failures: 0, zero_failures: 0, unit_failures: 0 };
    for gamma in Permutation4::all() {
        let even = gamma.is_even();
        let mut failures = 0;
        for (i, &x) in triples.iter().enumerate() {
            let d = &defects[i];
            let e = &defects[idx(act(grp, &gamma, x))];
            let mut bad = false;
            if even && d != e {
                report.even_failures += 1;
                bad = true;
            }
            if !even && !d.is_zero() && d.inv().ok().as_ref() != Some(e) {
                report.odd_failures += 1;
                bad = true;
            }
            if d.is_zero() != e.is_zero() {
                report.zero_failures += 1;
                bad = true;
            }
            if d.is_one() != e.is_one() {
                report.unit_failures += 1;
                bad = true;
            }
            failures += bad as usize;
        }
        report.per_permutation.push(PermutationResult {
            permutation: gamma.to_string(),
            even,
            checked: triples.len(),
            failures,
        });
    }
    Ok(report)
}
