mod common;

use std::collections::BTreeSet;

use parsigma::idempotent::{self, canonical_decomposition, is_degenerate_pair, orbit_c, random_general_generator, Pair};
use parsigma::{FactorSet, Field, SubsetMask};

use common::*;

/// Every `(δ′, λ′)` with `δ′` diagonal, `λ′` lateral, `σ = δ′λ′`,
/// `δ′ = 0 ⇒ λ′ = 1` and disjoint null sets.
fn all_decompositions(sigma: &FactorSet) -> Vec<(FactorSet, FactorSet)> {
    let g = sigma.group_arc().clone();
    let f = sigma.field();
    let nondegenerate: Vec<Pair> =
        g.elements().flat_map(|x| g.elements().map(move |y| (x, y))).filter(|&p| !is_degenerate_pair(&g, p)).collect();
    let orbits: Vec<BTreeSet<Pair>> = nondegenerate
        .iter()
        .map(|&(x, y)| orbit_c(&g, x, y))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let involutive: Vec<SubsetMask> = g
        .elements()
        .skip(1)
        .filter(|&x| g.inv(x) >= x)
        .map(|x| SubsetMask::singleton(x).with(g.inv(x)))
        .collect();
    let mut out = Vec::new();
    for sm in 0u32..1 << involutive.len() {
        let s = (0..involutive.len()).filter(|b| sm >> b & 1 == 1).fold(SubsetMask::EMPTY, |a, b| a.union(involutive[b]));
        let delta = idempotent::diagonal(g.clone(), f, s).unwrap();
        for wm in 0u64..1 << orbits.len() {
            let w: Vec<Pair> = (0..orbits.len()).filter(|b| wm >> b & 1 == 1).flat_map(|b| orbits[b].iter().copied()).collect();
            let lambda = idempotent::lateral(g.clone(), f, &w).unwrap();
            if delta.pm_product(&lambda).unwrap() != *sigma {
                continue;
            }
            let ok = g.elements().all(|x| g.elements().all(|y| !(delta.is_zero_at(x, y) && lambda.is_zero_at(x, y))));
            if ok {
                out.push((delta.clone(), lambda));
            }
        }
    }
    out
}

#[test]
fn decomposition_is_unique_on_tiny_groups() {
    let mut r = rng(21);
    for (name, g) in test_groups().into_iter().filter(|(_, g)| g.order() <= 4) {
        for i in 0..15 {
            let t = random_general_generator(&g, &mut r, 1 + i % 4);
            let sigma = idempotent::general(g.clone(), Field::Rational, &t).unwrap();
            let canon = canonical_decomposition(&sigma).unwrap();
            let found = all_decompositions(&sigma);
            assert_eq!(found.len(), 1, "{name} T = {t:?}");
            assert_eq!(found[0], (canon.delta, canon.lambda), "{name} T = {t:?}");
        }
    }
}

#[test]
fn null_set_regenerates() {
    let mut r = rng(22);
    for (_, g) in test_groups() {
        for i in 0..10 {
            let t = random_general_generator(&g, &mut r, 1 + i % 3);
            let sigma = idempotent::general(g.clone(), Field::Rational, &t).unwrap();
            assert_eq!(idempotent::general(g.clone(), Field::Rational, &sigma.null_set()).unwrap(), sigma);
        }
    }
}

#[test]
fn blocked_sets_predict_admissibles() {
    let mut r = rng(23);
    for (_, g) in test_groups().into_iter().filter(|(_, g)| g.order() <= 6) {
        for i in 0..6 {
            let t = random_general_generator(&g, &mut r, 1 + i % 3);
            let (s, w) = idempotent::split_general(&g, &t).unwrap();
            let w: Vec<Pair> = idempotent::orbit_closure(&g, w).into_iter().collect();
            for (sigma, diag) in [
                (idempotent::diagonal(g.clone(), Field::Rational, s).unwrap(), true),
                (idempotent::lateral(g.clone(), Field::Rational, &w).unwrap(), false),
            ] {
                let sp = parsigma::Spectrum::new(sigma).unwrap();
                for &xi in sp.omega() {
                    let blocked = if diag {
                        idempotent::diagonal_blocked(&g, s, xi)
                    } else {
                        idempotent::lateral_blocked(&g, &w, xi)
                    };
                    let complement = g.full().difference(xi).difference(sp.admissibles(xi).unwrap());
                    assert_eq!(blocked.difference(xi), complement, "ξ = {xi}");
                }
            }
        }
    }
}

#[test]
fn spec_general_example() {
    let g = c(4);
    let (t0, t1) = idempotent::split_general(&g, &[(1, 0), (0, 3)]).unwrap();
    assert_eq!(t0, SubsetMask::from_elements([1, 3]));
    assert!(t1.is_empty());
}
