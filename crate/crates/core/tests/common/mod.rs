#![allow(dead_code)]

use std::sync::Arc;

use parsigma::idempotent::{general, random_general_generator};
use parsigma::{FactorSet, Field, FiniteGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf7() -> Field {
    Field::prime(7).unwrap()
}

pub fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

pub fn klein() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::klein())
}

pub fn s3() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::symmetric(3).unwrap())
}

pub fn d4() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::dihedral(4).unwrap())
}

/// C₂, C₃, C₄, Klein, S₃, D₄.
pub fn test_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![("C2", c(2)), ("C3", c(3)), ("C4", c(4)), ("Klein", klein()), ("S3", s3()), ("D4", d4())]
}

/// Trivial σ, σ_N for every subgroup N and `random` general generators.
pub fn test_sigmas(grp: &Arc<FiniteGroup>, field: Field, random: usize, seed: u64) -> Vec<FactorSet> {
    let mut out = vec![FactorSet::ones(grp.clone(), field)];
    for n in grp.subgroups() {
        out.push(FactorSet::subgroup_indicator(grp.clone(), field, n).unwrap());
    }
    let mut r = rng(seed);
    for i in 0..random {
        let t = random_general_generator(grp, &mut r, 1 + i % 4);
        out.push(general(grp.clone(), field, &t).unwrap());
    }
    out
}

/// `(−1)^{x₂y₁}` on the Klein group over GF(5), twisted by `f(uv) = 2`
/// so that `σ(g,g⁻¹) = 1` everywhere.
pub fn normalized_bilinear() -> FactorSet {
    let f = Field::prime(5).unwrap();
    let k = klein();
    let bil = FactorSet::from_fn(k, f, |x, y| parsigma::FieldScalar::from_int(f, if (x >> 1) & y & 1 == 1 { -1 } else { 1 }));
    let mut fx = vec![f.one(); 4];
    fx[3] = parsigma::FieldScalar::from_int(f, 2);
    bil.twist_by_coboundary(&fx).unwrap()
}
