mod common;

use parsigma::s4::{act, orbit, Permutation4};
use parsigma::spectrum::coboundary_defect;
use parsigma::{idempotent, FactorSet, FiniteGroup, SubsetMask};

use common::*;

/// `γ ▷ (x,y,z)` for all 24 permutations, words in `x`, `y`, `z`.
const TABLE: [(&[&[usize]], [&str; 3]); 24] = [
    (&[], ["x", "y", "z"]),
    (&[&[2, 3]], ["x", "y z", "z'"]),
    (&[&[1, 2]], ["x y", "y'", "y z"]),
    (&[&[1, 3, 2]], ["x y", "z", "z' y'"]),
    (&[&[1, 2, 3]], ["x y z", "z' y'", "y"]),
    (&[&[1, 3]], ["x y z", "z'", "y'"]),
    (&[&[0, 1]], ["x'", "x y", "z"]),
    (&[&[0, 1], &[2, 3]], ["x'", "x y z", "z'"]),
    (&[&[0, 2, 1]], ["y", "y' x'", "x y z"]),
    (&[&[0, 3, 2, 1]], ["y", "z", "z' y' x'"]),
    (&[&[0, 2, 3, 1]], ["y z", "z' y' x'", "x y"]),
    (&[&[0, 3, 1]], ["y z", "z'", "y' x'"]),
    (&[&[0, 1, 2]], ["y' x'", "x", "y z"]),
    (&[&[0, 1, 3, 2]], ["y' x'", "x y z", "z' y'"]),
    (&[&[0, 2]], ["y'", "x'", "x y z"]),
    (&[&[0, 3, 2]], ["y'", "y z", "z' y' x'"]),
    (&[&[0, 2], &[1, 3]], ["z", "z' y' x'", "x"]),
    (&[&[0, 3, 1, 2]], ["z", "z' y'", "x'"]),
    (&[&[0, 1, 2, 3]], ["z' y' x'", "x", "y"]),
    (&[&[0, 1, 3]], ["z' y' x'", "x y", "y'"]),
    (&[&[0, 2, 3]], ["z' y'", "x'", "x y"]),
    (&[&[0, 3]], ["z' y'", "y", "y' x'"]),
    (&[&[0, 2, 1, 3]], ["z'", "y' x'", "x"]),
    (&[&[0, 3], &[1, 2]], ["z'", "y'", "x'"]),
];

/// Evaluates a word such as `"z' y' x'"`; a prime marks an inverse.
fn eval(g: &FiniteGroup, word: &str, (x, y, z): (usize, usize, usize)) -> usize {
    word.split_whitespace().fold(0, |acc, t| {
        let v = match &t[..1] {
            "x" => x,
            "y" => y,
            "z" => z,
            _ => panic!("bad token {t}"),
        };
        g.mul(acc, if t.ends_with('\'') { g.inv(v) } else { v })
    })
}

#[test]
fn table_matches_action() {
    let g = s3();
    let perms: std::collections::BTreeSet<_> = TABLE.iter().map(|(c, _)| Permutation4::from_cycles(c).unwrap()).collect();
    assert_eq!(perms.len(), 24);
    for (cycles, words) in TABLE {
        let gamma = Permutation4::from_cycles(cycles).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let t = (x, y, z);
                    let expect = (eval(&g, words[0], t), eval(&g, words[1], t), eval(&g, words[2], t));
                    assert_eq!(act(&g, &gamma, t), expect, "{gamma} on {t:?}");
                }
            }
        }
    }
}

#[test]
fn orbits_are_translation_classes() {
    let g = s3();
    let quad = |(a, b, c): (usize, usize, usize), h: usize| {
        let mut v = vec![h, g.mul(h, a), g.mul(g.mul(h, a), b), g.mul(g.mul(g.mul(h, a), b), c)];
        v.sort();
        v
    };
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                let t = (x, y, z);
                let target = quad(t, 0);
                let mut class = std::collections::BTreeSet::new();
                for a in g.elements() {
                    for b in g.elements() {
                        for c in g.elements() {
                            if g.elements().any(|h| quad((a, b, c), h) == target) {
                                class.insert((a, b, c));
                            }
                        }
                    }
                }
                let o = orbit(&g, t);
                assert_eq!(o, class);
                assert_eq!(24 % o.len(), 0);
            }
        }
    }
}

#[test]
fn defect_support_is_saturated() {
    let g = klein();
    let f = normalized_bilinear().field();
    let mut sigmas = vec![normalized_bilinear()];
    for n in g.subgroups() {
        let sn = FactorSet::subgroup_indicator(g.clone(), f, n).unwrap();
        sigmas.push(normalized_bilinear().pm_product(&sn).unwrap());
    }
    sigmas.push(idempotent::diagonal(g.clone(), f, SubsetMask::from_elements([1])).unwrap());
    for sigma in sigmas {
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let d = coboundary_defect(&sigma, x, y, z);
                    let bad = !d.is_zero() && !d.is_one();
                    for t in orbit(&g, (x, y, z)) {
                        let e = coboundary_defect(&sigma, t.0, t.1, t.2);
                        assert_eq!(bad, !e.is_zero() && !e.is_one());
                    }
                }
            }
        }
    }
}

#[test]
fn literal_bilinear_over_gf7_is_not_a_cocycle() {
    let f = gf7();
    let bil = FactorSet::from_fn(klein(), f, |x, y| parsigma::FieldScalar::from_int(f, if (x >> 1) & y & 1 == 1 { 2 } else { 1 }));
    assert!(!bil.is_total_cocycle());
    assert!(normalized_bilinear().is_total_cocycle());
    assert!(normalized_bilinear().is_normalized());
}
