//! The infinite dihedral group `D∞ = ⟨a, b | b² = 1, ba = a⁻¹b⟩` and its
//! idempotent factor sets `σ_ν σ_ω`, evaluated symbolically and checked on
//! finite windows of exponents.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The word `b^ε a^k` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DWord {
    pub reflect: bool,
    pub k: i64,
}

impl DWord {
    pub const ONE: DWord = DWord { reflect: false, k: 0 };

    /// `a^k`.
    pub fn rot(k: i64) -> DWord {
        DWord { reflect: false, k }
    }

    /// `ba^k`.
    pub fn refl(k: i64) -> DWord {
        DWord { reflect: true, k }
    }

    /// `(ε₁,k₁)(ε₂,k₂) = (ε₁ ⊕ ε₂, (−1)^{ε₂} k₁ + k₂)`.
    pub fn mul(self, other: DWord) -> DWord {
        let k1 = if other.reflect { -self.k } else { self.k };
        DWord { reflect: self.reflect ^ other.reflect, k: k1 + other.k }
    }

    pub fn inv(self) -> DWord {
        if self.reflect {
            self
        } else {
            DWord::rot(-self.k)
        }
    }

    /// All words with `|k| ≤ n`.
    pub fn window(n: i64) -> Vec<DWord> {
        (-n..=n).flat_map(|k| [DWord::rot(k), DWord::refl(k)]).collect()
    }
}

/// Serialized in display form, e.g. `"ba^-2"`.
impl Serialize for DWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.k) {
            (false, 0) => write!(f, "1"),
            (true, 0) => write!(f, "b"),
            (false, 1) => write!(f, "a"),
            (true, 1) => write!(f, "ba"),
            (false, k) => write!(f, "a^{k}"),
            (true, k) => write!(f, "ba^{k}"),
        }
    }
}

/// `ν` and `ω` given by their finite zero sets; every other value is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DInfGenerator {
    /// `ν₀⁻¹(0) ⊆ ℤ⁺`.
    #[serde(default)]
    pub nu0_zeros: BTreeSet<i64>,
    /// `ν₁⁻¹(0) ⊆ ℤ`.
    #[serde(default)]
    pub nu1_zeros: BTreeSet<i64>,
    /// `ω₀⁻¹(0) ⊆ ℤ⁺ × ℤ⁺`.
    #[serde(default)]
    pub omega0_zeros: BTreeSet<(i64, i64)>,
    /// `ω₁⁻¹(0) ⊆ ℤ⁺ × ℤ`.
    #[serde(default)]
    pub omega1_zeros: BTreeSet<(i64, i64)>,
}

impl DInfGenerator {
    pub fn validate(&self) -> Result<()> {
        if let Some(i) = self.nu0_zeros.iter().find(|&&i| i <= 0) {
            return Err(Error::InvalidGenerator(format!("nu0 zero {i} is not positive")));
        }
        if let Some(p) = self.omega0_zeros.iter().find(|p| p.0 <= 0 || p.1 <= 0) {
            return Err(Error::InvalidGenerator(format!("omega0 zero {p:?} is not in Z+ x Z+")));
        }
        if let Some(p) = self.omega1_zeros.iter().find(|p| p.0 <= 0) {
            return Err(Error::InvalidGenerator(format!("omega1 zero {p:?} is not in Z+ x Z")));
        }
        Ok(())
    }

    pub fn nu0(&self, i: i64) -> bool {
        !self.nu0_zeros.contains(&i)
    }

    pub fn nu1(&self, j: i64) -> bool {
        !self.nu1_zeros.contains(&j)
    }

    pub fn omega0(&self, n: i64, m: i64) -> bool {
        !self.omega0_zeros.contains(&(n, m))
    }

    pub fn omega1(&self, i: i64, j: i64) -> bool {
        !self.omega1_zeros.contains(&(i, j))
    }

    /// Membership in `S_ν = {a^{±i} : ν₀(i) = 0} ∪ {ba^j : ν₁(j) = 0}`.
    pub fn in_s(&self, w: DWord) -> bool {
        if w.reflect {
            !self.nu1(w.k)
        } else {
            w.k != 0 && !self.nu0(w.k.abs())
        }
    }

    /// The finite set `S_ν`.
    pub fn s_nu(&self) -> Vec<DWord> {
        let mut out: Vec<DWord> = self.nu0_zeros.iter().flat_map(|&i| [DWord::rot(i), DWord::rot(-i)]).collect();
        out.extend(self.nu1_zeros.iter().map(|&j| DWord::refl(j)));
        out.sort();
        out
    }

    /// The finite generating set `W_ω`.
    pub fn w_omega(&self) -> Vec<(DWord, DWord)> {
        let mut out: Vec<(DWord, DWord)> =
            self.omega0_zeros.iter().map(|&(n, m)| (DWord::rot(n), DWord::rot(m))).collect();
        out.extend(self.omega1_zeros.iter().map(|&(i, j)| (DWord::rot(i), DWord::refl(j))));
        out
    }

    /// The diagonal factor `σ_ν(x,y)`: false iff `{x, y, xy}` meets `S_ν`.
    pub fn diag_eval(&self, x: DWord, y: DWord) -> bool {
        !(self.in_s(x) || self.in_s(y) || self.in_s(x.mul(y)))
    }

    /// The lateral factor `σ_ω(x,y)`: false iff some element of `C_(x,y)`
    /// is a canonical pair at which `ω` vanishes.
    pub fn lat_eval(&self, x: DWord, y: DWord) -> bool {
        orbit_c(x, y).into_iter().all(|p| match canonical_form(p) {
            Some(CanonicalPair::Rotations(n, m)) => self.omega0(n, m),
            Some(CanonicalPair::Mixed(i, j)) => self.omega1(i, j),
            None => true,
        })
    }

    /// `σ = σ_ν σ_ω` at `(x,y)`; true means the value 1.
    pub fn sigma_eval(&self, x: DWord, y: DWord) -> bool {
        self.diag_eval(x, y) && self.lat_eval(x, y)
    }
}

/// `C_(a,b)` in `D∞`.
pub fn orbit_c(a: DWord, b: DWord) -> BTreeSet<(DWord, DWord)> {
    let (ai, bi, ab) = (a.inv(), b.inv(), a.mul(b));
    let bia = bi.mul(ai);
    [(a, b), (bia, a), (b, bia), (bi, ai), (ai, ab), (ab, bi)].into_iter().collect()
}

/// Canonical orbit representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalPair {
    /// `(a^n, a^m)` with `n, m > 0`.
    Rotations(i64, i64),
    /// `(a^i, ba^j)` with `i > 0`.
    Mixed(i64, i64),
}

pub fn canonical_form((x, y): (DWord, DWord)) -> Option<CanonicalPair> {
    match (x.reflect, y.reflect) {
        (false, false) if x.k > 0 && y.k > 0 => Some(CanonicalPair::Rotations(x.k, y.k)),
        (false, true) if x.k > 0 => Some(CanonicalPair::Mixed(x.k, y.k)),
        _ => None,
    }
}

fn split(v: &[DWord]) -> (Vec<i64>, Vec<i64>) {
    let mut rot: Vec<i64> = v.iter().filter(|w| !w.reflect).map(|w| w.k).collect();
    let mut refl: Vec<i64> = v.iter().filter(|w| w.reflect).map(|w| w.k).collect();
    rot.sort();
    refl.sort();
    (rot, refl)
}

/// Two-element diagonal prohibitions by the closed-form conditions:
/// `{a^p, a^q}` and `{ba^p, ba^q}` iff `ν₀(|p−q|) = 0`; `{a^p, ba^q}` iff
/// `ν₁(p+q) = 0`.
pub fn diagonal_pair_prohibited(gen: &DInfGenerator, x: DWord, y: DWord) -> bool {
    match (x.reflect, y.reflect) {
        (false, false) | (true, true) => x.k != y.k && !gen.nu0((x.k - y.k).abs()),
        (false, true) => !gen.nu1(x.k + y.k),
        (true, false) => !gen.nu1(x.k + y.k),
    }
}

/// Three-element lateral prohibitions by the closed-form families.
pub fn lateral_triple_prohibited(gen: &DInfGenerator, v: [DWord; 3]) -> bool {
    let (rot, refl) = split(&v);
    match (rot.len(), refl.len()) {
        (3, 0) => !gen.omega0(rot[1] - rot[0], rot[2] - rot[1]),
        (0, 3) => !gen.omega0(refl[1] - refl[0], refl[2] - refl[1]),
        (2, 1) => !gen.omega1(rot[1] - rot[0], refl[0] + rot[1]),
        (1, 2) => !gen.omega1(refl[1] - refl[0], rot[0] + refl[1]),
        _ => false,
    }
}

/// Direct type-1 test: some `p, q, r ∈ V` with `σ(p⁻¹q, q⁻¹r) = 0`.
pub fn directly_prohibited<F: Fn(DWord, DWord) -> bool>(sigma: F, v: &[DWord]) -> bool {
    v.iter().any(|&p| v.iter().any(|&q| v.iter().any(|&r| !sigma(p.inv().mul(q), q.inv().mul(r)))))
}

/// Result of [`window_prohibition_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub window: i64,
    pub subsets_checked: usize,
    pub prohibited: usize,
    pub mismatches: Vec<Vec<DWord>>,
    pub passed: bool,
}

/// Compares the closed-form prohibition classification with direct
/// scanning through [`DInfGenerator::sigma_eval`] on every 2- and 3-subset
/// of the window `|k| ≤ n`.
pub fn window_prohibition_check(gen: &DInfGenerator, n: i64) -> Result<WindowReport> {
    gen.validate()?;
    if n < 1 {
        return Err(Error::PreconditionFailed("window bound must be at least 1".into()));
    }
    let w = DWord::window(n);
    let sigma = |x: DWord, y: DWord| gen.sigma_eval(x, y);
    let mut checked = 0;
    let mut prohibited = 0;
    let mut mismatches = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let pair = [w[i], w[j]];
            let by_class = diagonal_pair_prohibited(gen, w[i], w[j]);
            let direct = directly_prohibited(sigma, &pair);
            checked += 1;
            prohibited += direct as usize;
            if by_class != direct {
                mismatches.push(pair.to_vec());
            }
            for k in j + 1..w.len() {
                let tri = [w[i], w[j], w[k]];
                let by_class = lateral_triple_prohibited(gen, tri)
                    || [(0, 1), (0, 2), (1, 2)].iter().any(|&(a, b)| diagonal_pair_prohibited(gen, tri[a], tri[b]));
                let direct = directly_prohibited(sigma, &tri);
                checked += 1;
                prohibited += direct as usize;
                if by_class != direct {
                    mismatches.push(tri.to_vec());
                }
            }
        }
    }
    Ok(WindowReport { window: n, subsets_checked: checked, prohibited, passed: mismatches.is_empty(), mismatches })
}

/// `ξ_I^l = {a^i}_{i∈I} ∪ {ba^{i+l}}_{i∈I}`.
pub fn xi_set(l: i64, index: &BTreeSet<i64>) -> Vec<DWord> {
    let mut out: Vec<DWord> = index.iter().map(|&i| DWord::rot(i)).collect();
    out.extend(index.iter().map(|&i| DWord::refl(i + l)));
    out
}

/// Whether a finite set is a fixed point of the reflection `ba^l`.
fn fixed_by_reflection(l: i64, xi: &[DWord]) -> bool {
    let g = DWord::refl(l);
    let set: BTreeSet<DWord> = xi.iter().copied().collect();
    set.contains(&g) && set.contains(&DWord::ONE) && xi.iter().all(|&x| set.contains(&g.mul(x)))
}

/// The two answers of a dual-route membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualRoute {
    pub by_conditions: bool,
    pub by_fixed_point: bool,
}

impl DualRoute {
    pub fn agree(&self) -> bool {
        self.by_conditions == self.by_fixed_point
    }

    /// The common answer, if the routes agree.
    pub fn value(&self) -> Option<bool> {
        self.agree().then_some(self.by_conditions)
    }
}

fn check_index(index: &BTreeSet<i64>) -> Result<()> {
    if index.contains(&0) {
        Ok(())
    } else {
        Err(Error::MissingZero)
    }
}

/// `I ∈ Δ^l_ν`: `ν₀(|p−q|) = 1` for `p ≠ q` and `ν₁(p+q+l) = 1`, versus
/// `ξ_I^l ∈ Fix_{ba^l}` for `σ_ν`.
pub fn delta_membership(gen: &DInfGenerator, l: i64, index: &BTreeSet<i64>) -> Result<DualRoute> {
    gen.validate()?;
    check_index(index)?;
    let by_conditions = index.iter().all(|&p| {
        index.iter().all(|&q| (p == q || gen.nu0((p - q).abs())) && gen.nu1(p + q + l))
    });
    let xi = xi_set(l, index);
    let by_fixed_point =
        fixed_by_reflection(l, &xi) && !directly_prohibited(|x, y| gen.diag_eval(x, y), &xi);
    Ok(DualRoute { by_conditions, by_fixed_point })
}

/// `I ∈ Λ^l_ω`: `ω₀(y−x, z−y) = 1` for `x < y < z` and
/// `ω₁(y−x, z+y+l) = 1` for `x < y`, any `z`, versus `ξ_I^l ∈ Fix_{ba^l}`
/// for `σ_ω`.
pub fn lambda_membership(gen: &DInfGenerator, l: i64, index: &BTreeSet<i64>) -> Result<DualRoute> {
    gen.validate()?;
    check_index(index)?;
    let v: Vec<i64> = index.iter().copied().collect();
    let mut by_conditions = true;
    for (a, &x) in v.iter().enumerate() {
        for &y in &v[a + 1..] {
            for &z in &v {
                if z > y && !gen.omega0(y - x, z - y) {
                    by_conditions = false;
                }
                if !gen.omega1(y - x, z + y + l) {
                    by_conditions = false;
                }
            }
        }
    }
    let xi = xi_set(l, index);
    let by_fixed_point =
        fixed_by_reflection(l, &xi) && !directly_prohibited(|x, y| gen.lat_eval(x, y), &xi);
    Ok(DualRoute { by_conditions, by_fixed_point })
}

/// Evidence that a fixed point `ξ_I^l` is not isolated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessCertificate {
    pub window: i64,
    pub shift: i64,
    pub point: Vec<DWord>,
    /// Elements outside `ξ` predicted to be non-admissible.
    pub predicted_complement: Vec<DWord>,
    /// Non-admissible elements found by scanning the window.
    pub scanned_complement: Vec<DWord>,
    /// Admissible elements found in the window.
    pub admissible: Vec<DWord>,
    /// The scan agrees with the prediction inside the window.
    pub consistent: bool,
    /// Consistent, and more admissibles than predicted exclusions.
    pub certified: bool,
}

fn blocked_prediction(gen: &DInfGenerator, xi: &[DWord]) -> BTreeSet<DWord> {
    let members: BTreeSet<DWord> = xi.iter().copied().collect();
    let mut out = BTreeSet::new();
    for &x in xi {
        for s in gen.s_nu() {
            out.insert(x.mul(s));
        }
    }
    // For (x,y) ∈ W_ω, any two vertices of {h, hx, hxy} in ξ block the third.
    for (x, y) in gen.w_omega() {
        let xy = x.mul(y);
        for &p in xi {
            for (a, b, c) in [(p, p.mul(x), p.mul(xy)), (p.mul(x.inv()), p, p.mul(y)), (p.mul(xy.inv()), p.mul(y.inv()), p)] {
                if members.contains(&a) && members.contains(&b) {
                    out.insert(c);
                }
                if members.contains(&a) && members.contains(&c) {
                    out.insert(b);
                }
                if members.contains(&b) && members.contains(&c) {
                    out.insert(a);
                }
            }
        }
    }
    out.retain(|w| !members.contains(w));
    out
}

/// Compares the finite predicted complement of `A_σ(ξ_I^l)` with a scan of
/// a window `|k| ≤ N`. `N` starts at `n` and is enlarged until it contains
/// both `ξ` and the whole prediction and has room for more admissibles
/// than predicted exclusions, so a consistent scan certifies the point.
pub fn freeness_certificate(gen: &DInfGenerator, l: i64, index: &BTreeSet<i64>, n: i64) -> Result<FreenessCertificate> {
    let d = delta_membership(gen, l, index)?;
    let m = lambda_membership(gen, l, index)?;
    if d.value() != Some(true) || m.value() != Some(true) {
        return Err(Error::NotAFixedPoint(format!("I = {index:?}, l = {l}")));
    }
    let xi = xi_set(l, index);
    let members: BTreeSet<DWord> = xi.iter().copied().collect();
    let predicted = blocked_prediction(gen, &xi);
    let reach = xi.iter().chain(&predicted).map(|w| w.k.abs()).max().unwrap_or(0);
    let room = (xi.len() + 2 * predicted.len()) as i64 / 4 + 1;
    let n = n.max(reach).max(room);
    let sigma = |x: DWord, y: DWord| gen.sigma_eval(x, y);
    let mut admissible = Vec::new();
    let mut scanned = Vec::new();
    for w in DWord::window(n) {
        if members.contains(&w) {
            continue;
        }
        let mut ext = xi.clone();
        ext.push(w);
        if directly_prohibited(sigma, &ext) {
            scanned.push(w);
        } else {
            admissible.push(w);
        }
    }
    let predicted_in_window: Vec<DWord> = predicted.iter().copied().filter(|w| w.k.abs() <= n).collect();
    let mut sorted_scan = scanned.clone();
    sorted_scan.sort();
    let consistent = sorted_scan == predicted_in_window;
    let certified = consistent && admissible.len() > predicted.len();
    Ok(FreenessCertificate {
        window: n,
        shift: l,
        point: xi,
        predicted_complement: predicted.into_iter().collect(),
        scanned_complement: sorted_scan,
        admissible,
        consistent,
        certified,
    })
}

/// The basic factor-set rules for `sigma_eval` on all pairs in the window.
pub fn window_basic_axioms(gen: &DInfGenerator, n: i64) -> bool {
    let w = DWord::window(n);
    let s = |x: DWord, y: DWord| gen.sigma_eval(x, y);
    let one = DWord::ONE;
    s(one, one)
        && w.iter().all(|&g| s(g, one) == s(one, g) && s(one, g) == s(one, g.inv()) && s(g, g.inv()) == s(g.inv(), g))
        && w.iter().all(|&g| w.iter().all(|&h| s(g, h) == s(h.inv(), g.inv())))
}
