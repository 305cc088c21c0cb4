//! The groupoid algebra `ℛ^σ(G)` with basis `(g, A)`, `g⁻¹ ∈ A ∈ Ω_σ`, its
//! isomorphism with `𝒜_σ`, and the decomposition into matrix algebras over
//! twisted group algebras of the isotropy groups.

use std::collections::{BTreeMap, HashMap, HashSet};

use petgraph::unionfind::UnionFind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraElement, PartialAlgebra};
use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::field::FieldScalar;
use crate::group::SubsetMask;
use crate::linalg::Subspace;
use crate::sampling::Sampling;
use crate::spectrum::Spectrum;

/// An arrow `(g, A)` from `A` to `gA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub g: usize,
    pub source: SubsetMask,
}

/// A sparse combination of arrows; the empty map is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupoidElement {
    terms: BTreeMap<Arrow, FieldScalar>,
}

impl GroupoidElement {
    pub fn zero() -> GroupoidElement {
        GroupoidElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Arrow, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Arrow, k: FieldScalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&a) {
            Some(c) => {
                *c = &*c + &k;
                if c.is_zero() {
                    self.terms.remove(&a);
                }
            }
            None => {
                self.terms.insert(a, k);
            }
        }
    }
}

/// A connected component of the translation groupoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Objects sorted by size then mask; the first is the base object.
    pub objects: Vec<SubsetMask>,
}

impl Component {
    pub fn base(&self) -> SubsetMask {
        self.objects[0]
    }
}

/// Stabiliser of an object with the restricted factor set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotropy {
    pub object: SubsetMask,
    pub subgroup: SubsetMask,
    pub cocycle: Vec<Vec<FieldScalar>>,
    pub total_cocycle: bool,
    pub contained_in_object: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropyReport {
    pub order: usize,
    pub elements: Vec<usize>,
}

/// One summand `M_n(κ^{σ_i} H_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub objects: Vec<SubsetMask>,
    pub base: SubsetMask,
    pub n_i: usize,
    #[serde(rename = "H_i")]
    pub h_i: IsotropyReport,
    pub sigma_i: Vec<Vec<String>>,
    pub total_cocycle: bool,
    pub arrow_count: usize,
    pub matrix_units_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimCheck {
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub components: Vec<ComponentReport>,
    pub dim_check: DimCheck,
}

impl DecompositionReport {
    /// Every structural check held.
    pub fn passed(&self) -> bool {
        self.dim_check.lhs == self.dim_check.rhs
            && self.components.iter().all(|c| {
                c.total_cocycle && c.matrix_units_ok && c.arrow_count == c.n_i * c.n_i * c.h_i.order
            })
    }

    /// The decomposition is the single summand `κ`.
    pub fn is_single_field(&self) -> bool {
        self.components.len() == 1 && self.components[0].n_i == 1 && self.components[0].h_i.order == 1
    }
}

/// Outcome of [`GroupoidAlgebra::verify_psi_isomorphism`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiReport {
    pub dimension: usize,
    pub arrow_count: usize,
    pub leading_terms_bijective: bool,
    pub unitriangular: bool,
    pub rank_checked: Option<bool>,
    pub unit_preserved: bool,
    pub upsilon_to_identities: bool,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    pub pairs_checked: usize,
    pub multiplicative_failures: usize,
}

impl PsiReport {
    pub fn passed(&self) -> bool {
        self.leading_terms_bijective
            && self.unitriangular
            && self.rank_checked != Some(false)
            && self.unit_preserved
            && self.upsilon_to_identities
            && self.multiplicative_failures == 0
    }
}

/// Dimension bound for the extra rank check of `Ψ`.
const RANK_CHECK_LIMIT: usize = 200;

/// `ℛ^σ(G)` over a computed spectrum.
pub struct GroupoidAlgebra<'a> {
    spectrum: &'a Spectrum,
    arrows: Vec<Arrow>,
}

impl<'a> GroupoidAlgebra<'a> {
    pub fn new(spectrum: &'a Spectrum) -> GroupoidAlgebra<'a> {
        let grp = spectrum.sigma().group();
        let arrows = spectrum
            .omega()
            .iter()
            .flat_map(|&a| a.elements().map(move |x| Arrow { g: grp.inv(x), source: a }))
            .collect();
        GroupoidAlgebra { spectrum, arrows }
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn target(&self, a: Arrow) -> SubsetMask {
        self.spectrum.sigma().group().translate(a.source, a.g)
    }

    fn sigma(&self) -> &FactorSet {
        self.spectrum.sigma()
    }

    /// `(g,B)·(h,A) = σ(g,h)(gh,A)` if `B = hA`, else zero.
    pub fn mul_arrows(&self, x: Arrow, y: Arrow) -> Option<(FieldScalar, Arrow)> {
        if x.source != self.target(y) {
            return None;
        }
        let s = self.sigma().get(x.g, y.g);
        if s.is_zero() {
            return None;
        }
        Some((s.clone(), Arrow { g: self.sigma().group().mul(x.g, y.g), source: y.source }))
    }

    pub fn mul(&self, x: &GroupoidElement, y: &GroupoidElement) -> GroupoidElement {
        // Index the left factor by source object so each right term meets at
        // most the arrows leaving its target.
        let mut by_source: HashMap<SubsetMask, Vec<(&Arrow, &FieldScalar)>> = HashMap::new();
        for (a, k) in x.terms() {
            by_source.entry(a.source).or_default().push((a, k));
        }
        let mut out = GroupoidElement::zero();
        for (b, kb) in y.terms() {
            if let Some(lefts) = by_source.get(&self.target(*b)) {
                for (a, ka) in lefts {
                    if let Some((s, c)) = self.mul_arrows(**a, *b) {
                        out.add_term(c, s * *ka * kb);
                    }
                }
            }
        }
        out
    }

    /// `Σ_{A ∈ Ω_σ} (1, A)`.
    pub fn unit(&self) -> GroupoidElement {
        let one = self.sigma().field().one();
        let mut out = GroupoidElement::zero();
        for &a in self.spectrum.omega() {
            out.add_term(Arrow { g: 0, source: a }, one.clone());
        }
        out
    }

    /// `Ψ(U,g) = Σ_{A ⊇ g⁻¹U} (g, A)`, extended linearly.
    pub fn psi(&self, x: &AlgebraElement) -> GroupoidElement {
        let grp = self.sigma().group();
        let mut out = GroupoidElement::zero();
        for (&(u, g), k) in x.terms() {
            let lead = grp.translate(u, grp.inv(g));
            for &a in self.spectrum.omega() {
                if lead.is_subset_of(a) {
                    out.add_term(Arrow { g, source: a }, k.clone());
                }
            }
        }
        out
    }

    /// Bijectivity through the unitriangular shape of `Ψ` (leading term
    /// `(g, g⁻¹U)`, every other term on a strictly larger object), plus
    /// multiplicativity on basis pairs.
    pub fn verify_psi_isomorphism(&self, sampling: &Sampling) -> PsiReport {
        let alg = PartialAlgebra::new(self.spectrum);
        let grp = self.sigma().group();
        let basis = alg.basis();
        let dim = basis.len();

        let leads: HashSet<Arrow> =
            basis.iter().map(|&(u, g)| Arrow { g, source: grp.translate(u, grp.inv(g)) }).collect();
        let arrow_set: HashSet<Arrow> = self.arrows.iter().copied().collect();
        let leading_terms_bijective = leads.len() == dim && leads == arrow_set;

        let images: Vec<GroupoidElement> = basis.iter().map(|&b| self.psi(&alg.basis_element(b))).collect();
        let unitriangular = basis.iter().zip(&images).all(|(&(u, g), img)| {
            let lead = grp.translate(u, grp.inv(g));
            img.terms().all(|(a, k)| a.g == g && lead.is_subset_of(a.source) && (a.source != lead || k.is_one()))
        });

        let rank_checked = (dim <= RANK_CHECK_LIMIT).then(|| {
            let pos: HashMap<Arrow, usize> = self.arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
            let field = self.sigma().field();
            let vecs: Vec<Vec<FieldScalar>> = images
                .iter()
                .map(|img| {
                    let mut v = vec![field.zero(); self.arrows.len()];
                    for (a, k) in img.terms() {
                        v[pos[a]] = k.clone();
                    }
                    v
                })
                .collect();
            Subspace::row_reduce(field, self.arrows.len(), &vecs).map(|s| s.rank() == dim).unwrap_or(false)
        });

        let unit_preserved = self.psi(&alg.unit()) == self.unit();
        let one = self.sigma().field().one();
        let upsilon_to_identities = self.spectrum.omega().iter().all(|&a| {
            let mut expect = GroupoidElement::zero();
            expect.add_term(Arrow { g: 0, source: a }, one.clone());
            alg.upsilon(a).map(|u| self.psi(&u) == expect).unwrap_or(false)
        });

        let (pairs, exhaustive, seed): (Vec<(usize, usize)>, bool, Option<u64>) = match sampling.plan(dim * dim) {
            None => ((0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect(), true, None),
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                ((0..count).map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim))).collect(), false, Some(seed))
            }
        };
        let multiplicative_failures = pairs
            .par_iter()
            .filter(|&&(i, j)| {
                let prod = alg.mul(&alg.basis_element(basis[i]), &alg.basis_element(basis[j]));
                self.psi(&prod) != self.mul(&images[i], &images[j])
            })
            .count();

        PsiReport {
            dimension: dim,
            arrow_count: self.arrows.len(),
            leading_terms_bijective,
            unitriangular,
            rank_checked,
            unit_preserved,
            upsilon_to_identities,
            exhaustive,
            seed,
            pairs_checked: pairs.len(),
            multiplicative_failures,
        }
    }

    /// Union-find over the translations `A → a⁻¹A`, `a ∈ A`.
    pub fn connected_components(&self) -> Vec<Component> {
        let omega = self.spectrum.omega();
        let grp = self.sigma().group();
        let mut uf = UnionFind::<usize>::new(omega.len());
        for (i, &a) in omega.iter().enumerate() {
            for x in a.elements() {
                let b = grp.translate(a, grp.inv(x));
                let j = self.spectrum.position(b).expect("spectrum is closed under translation");
                uf.union(i, j);
            }
        }
        let mut groups: BTreeMap<usize, Vec<SubsetMask>> = BTreeMap::new();
        for (i, &a) in omega.iter().enumerate() {
            groups.entry(uf.find(i)).or_default().push(a);
        }
        let mut comps: Vec<Component> = groups.into_values().map(|objects| Component { objects }).collect();
        comps.sort_by_key(|c| self.spectrum.position(c.base()));
        comps
    }

    /// `H_A = {g : gA = A}` with `σ` restricted to it.
    pub fn isotropy(&self, a: SubsetMask) -> Result<Isotropy> {
        if !self.spectrum.chi(a) {
            return Err(Error::NotInOmega(a.to_string()));
        }
        let sigma = self.sigma();
        let grp = sigma.group();
        let h = SubsetMask::from_elements(grp.elements().filter(|&g| grp.translate(a, g) == a));
        let elems = h.to_vec();
        let cocycle = sigma.restrict(&elems);
        let total_cocycle = elems.iter().all(|&x| {
            elems.iter().all(|&y| {
                !sigma.is_zero_at(x, y)
                    && elems.iter().all(|&z| {
                        sigma.get(x, y) * sigma.get(grp.mul(x, y), z) == sigma.get(x, grp.mul(y, z)) * sigma.get(y, z)
                    })
            })
        });
        Ok(Isotropy { object: a, subgroup: h, cocycle, total_cocycle, contained_in_object: h.is_subset_of(a) })
    }

    /// Arrows whose source lies in the component.
    pub fn component_arrows(&self, comp: &Component) -> Vec<Arrow> {
        let objs: HashSet<SubsetMask> = comp.objects.iter().copied().collect();
        self.arrows.iter().copied().filter(|a| objs.contains(&a.source)).collect()
    }

    /// Fixes the base object `A₁`, connecting arrows `γ_i: A₁ → A_i` (least
    /// `g`), sends `γ: A_i → A_j` to `z_γ E_{j,i}` with
    /// `z_γ = γ_j⁻¹ γ γ_i ∈ κ^σ H`, and checks that the assignment is a
    /// bijection onto `{E_{j,i}} × H` respecting products of all pairs.
    pub fn matrix_units_check(&self, comp: &Component) -> bool {
        let sigma = self.sigma();
        let grp = sigma.group();
        let base = comp.base();
        let index: HashMap<SubsetMask, usize> = comp.objects.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let Some(conn) = comp
            .objects
            .iter()
            .map(|&ai| grp.elements().find(|&g| base.contains(grp.inv(g)) && grp.translate(base, g) == ai))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let Ok(iso) = self.isotropy(base) else {
            return false;
        };

        // Weighted arrow arithmetic: (r, g, A).
        type W = (FieldScalar, usize, SubsetMask);
        let compose = |x: &W, y: &W| -> Option<W> {
            (x.2 == grp.translate(y.2, y.1)).then(|| (sigma.get(x.1, y.1) * &x.0 * &y.0, grp.mul(x.1, y.1), y.2))
        };
        let inverse = |x: &W| -> Option<W> {
            let gi = grp.inv(x.1);
            let k = (sigma.get(gi, x.1) * &x.0).inv().ok()?;
            Some((k, gi, grp.translate(x.2, x.1)))
        };
        let one = sigma.field().one();
        let tau = |x: &W| -> Option<(usize, usize, FieldScalar, usize)> {
            let i = *index.get(&x.2)?;
            let j = *index.get(&grp.translate(x.2, x.1))?;
            let gi: W = (one.clone(), conn[i], base);
            let gj: W = (one.clone(), conn[j], base);
            let z = compose(&inverse(&gj)?, &compose(x, &gi)?)?;
            (z.2 == base && iso.subgroup.contains(z.1)).then_some((j, i, z.0, z.1))
        };

        let arrows = self.component_arrows(comp);
        let mut images = Vec::with_capacity(arrows.len());
        for a in &arrows {
            match tau(&(one.clone(), a.g, a.source)) {
                Some(t) => images.push(t),
                None => return false,
            }
        }
        let distinct: HashSet<(usize, usize, usize)> = images.iter().map(|t| (t.0, t.1, t.3)).collect();
        let n = comp.objects.len();
        if distinct.len() != arrows.len() || arrows.len() != n * n * iso.subgroup.len() {
            return false;
        }
        for (x, tx) in arrows.iter().zip(&images) {
            for (y, ty) in arrows.iter().zip(&images) {
                let prod = compose(&(one.clone(), x.g, x.source), &(one.clone(), y.g, y.source));
                // E_{j,i} E_{t,s} = δ_{i,t} E_{j,s}; z z' multiplies in κ^σ H.
                let matrix_prod = (tx.1 == ty.0).then(|| {
                    (tx.0, ty.1, sigma.get(tx.3, ty.3) * &tx.2 * &ty.2, grp.mul(tx.3, ty.3))
                });
                let ok = match (prod, matrix_prod) {
                    (None, None) => true,
                    (Some(p), Some(m)) => match tau(&p) {
                        Some(tp) => tp == m,
                        None => false,
                    },
                    _ => false,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn decompose(&self) -> DecompositionReport {
        let dim = PartialAlgebra::new(self.spectrum).dimension();
        let comps = self.connected_components();
        let components: Vec<ComponentReport> = comps
            .par_iter()
            .map(|c| {
                let iso = self.isotropy(c.base()).expect("base object lies in the spectrum");
                ComponentReport {
                    objects: c.objects.clone(),
                    base: c.base(),
                    n_i: c.objects.len(),
                    h_i: IsotropyReport { order: iso.subgroup.len(), elements: iso.subgroup.to_vec() },
                    sigma_i: iso.cocycle.iter().map(|r| r.iter().map(|x| x.to_literal()).collect()).collect(),
                    total_cocycle: iso.total_cocycle && iso.contained_in_object,
                    arrow_count: self.component_arrows(c).len(),
                    matrix_units_ok: self.matrix_units_check(c),
                }
            })
            .collect();
        let lhs = components.iter().map(|c| c.n_i * c.n_i * c.h_i.order).sum();
        DecompositionReport { components, dim_check: DimCheck { lhs, rhs: dim } }
    }
}

/// `σ(g,1) = 0` for every `g ≠ 1`.
pub fn is_simple(sigma: &FactorSet) -> bool {
    sigma.group().elements().skip(1).all(|g| sigma.is_zero_at(g, 0))
}
