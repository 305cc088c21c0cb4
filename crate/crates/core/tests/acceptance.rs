//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use parsigma::dinf::{self, DInfGenerator};
use parsigma::factor_set::{BasicRule, RepresentationAxiom};
use parsigma::groupoid::{is_simple, GroupoidAlgebra};
use parsigma::idempotent::{self, canonical_decomposition, random_general_generator};
use parsigma::s4;
use parsigma::sampling::Sampling;
use parsigma::spectrum::{compute_prohibitions, Type2Scan};
use parsigma::{AlgebraElement, FactorSet, Field, FieldScalar, FiniteGroup, PartialAlgebra, Spectrum, SubsetMask, TwistedMonoid};
use rand::Rng;

use common::*;

/// Random general generators per group in the dimension suite.
const RANDOM_PER_GROUP: usize = 20;
/// Sampled Ψ pairs for |G| = 6, 8.
const PSI_SAMPLES: usize = 10_000;
/// Sampled associativity triples for |G| = 6, 8.
const ASSOC_SAMPLES: usize = 100_000;
/// Random idempotent σ per group for type-I sufficiency.
const TYPE1_SIGMAS: usize = 20;
/// Random generators for the decomposition on D₄.
const DECOMP_TRIALS: usize = 100;
/// Random elements for the ideal test.
const IDEAL_TRIALS: usize = 50;
/// Random D∞ generators, zero sets of size at most 3, window 6.
const DINF_GENERATORS: usize = 20;
const DINF_WINDOW: i64 = 6;
const DIMENSION_BUDGET: Duration = Duration::from_secs(60);
const DINF_BUDGET: Duration = Duration::from_secs(120);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn dimension_identity() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    for (name, g) in test_groups() {
        for (i, sigma) in test_sigmas(&g, gf7(), RANDOM_PER_GROUP, 1).into_iter().enumerate() {
            if !sigma.validate_membership().unwrap().member {
                return verdict(false, format!("{name} σ#{i} is not a member"));
            }
            let sp = Spectrum::new(sigma).unwrap();
            let lhs: usize = sp.omega().iter().map(|u| u.len()).sum();
            let rep = GroupoidAlgebra::new(&sp).decompose();
            let rhs: usize = rep.components.iter().map(|c| c.n_i * c.n_i * c.h_i.order).sum();
            if lhs != rhs || !rep.passed() {
                return verdict(false, format!("{name} σ#{i}: Σ|U| = {lhs}, Σ n²|H| = {rhs}"));
            }
            checked += 1;
        }
    }
    let t = start.elapsed();
    verdict(t < DIMENSION_BUDGET, format!("{checked} factor sets, {:.1}s", t.as_secs_f64()))
}

fn known_decompositions() -> Verdict {
    let summary = |g: Arc<FiniteGroup>| {
        let sp = Spectrum::new(FactorSet::ones(g, Field::Rational)).unwrap();
        let rep = GroupoidAlgebra::new(&sp).decompose();
        let mut comps: Vec<(Vec<Vec<usize>>, usize, Vec<usize>)> = rep
            .components
            .iter()
            .map(|c| (c.objects.iter().map(|o| o.to_vec()).collect(), c.n_i, c.h_i.elements.clone()))
            .collect();
        comps.sort();
        (comps, rep.dim_check.lhs, rep.dim_check.rhs)
    };
    let c2 = summary(c(2));
    let c2_expect = (vec![(vec![vec![0]], 1, vec![0]), (vec![vec![0, 1]], 1, vec![0, 1])], 3, 3);
    let c3 = summary(c(3));
    let c3_expect = (
        vec![
            (vec![vec![0]], 1, vec![0]),
            (vec![vec![0, 1], vec![0, 2]], 2, vec![0]),
            (vec![vec![0, 1, 2]], 1, vec![0, 1, 2]),
        ],
        8,
        8,
    );
    verdict(c2 == c2_expect && c3 == c3_expect, "C2: κ ⊕ κ[C2]; C3: κ ⊕ M2(κ) ⊕ κ[C3], 1 + 4 + 3 = 8")
}

fn psi_isomorphism() -> Verdict {
    let mut exhaustive = 0;
    let mut sampled = 0;
    for (name, g) in test_groups() {
        let small = g.order() <= 4;
        for (i, sigma) in test_sigmas(&g, gf7(), 4, 2).into_iter().enumerate() {
            let sp = Spectrum::new(sigma).unwrap();
            let plan = if small { Sampling::exhaustive() } else { Sampling::sampled(PSI_SAMPLES, i as u64) };
            let rep = GroupoidAlgebra::new(&sp).verify_psi_isomorphism(&plan);
            if !rep.passed() {
                return verdict(false, format!("{name} σ#{i}: {rep:?}"));
            }
            if small {
                if !rep.exhaustive || rep.pairs_checked != rep.dimension * rep.dimension {
                    return verdict(false, format!("{name} σ#{i}: not exhaustive"));
                }
                exhaustive += 1;
            } else {
                if rep.pairs_checked < PSI_SAMPLES.min(rep.dimension * rep.dimension) {
                    return verdict(false, format!("{name} σ#{i}: only {} pairs", rep.pairs_checked));
                }
                sampled += 1;
            }
        }
    }
    verdict(true, format!("{exhaustive} exhaustive, {sampled} sampled (≥ {PSI_SAMPLES} pairs)"))
}

fn triple_assoc<T: Copy + PartialEq>(
    items: &[T],
    mul: impl Fn(T, T) -> Option<(FieldScalar, T)>,
    triples: impl Iterator<Item = (usize, usize, usize)>,
) -> (usize, usize) {
    let mut failures = 0;
    let mut count = 0;
    for (i, j, k) in triples {
        let (x, y, z) = (items[i], items[j], items[k]);
        let left = mul(x, y).and_then(|(a, p)| mul(p, z).map(|(b, q)| (&a * &b, q)));
        let right = mul(y, z).and_then(|(a, p)| mul(x, p).map(|(b, q)| (&a * &b, q)));
        let norm = |v: Option<(FieldScalar, T)>| v.filter(|(k, _)| !k.is_zero());
        if norm(left) != norm(right) {
            failures += 1;
        }
        count += 1;
    }
    (count, failures)
}

fn associativity() -> Verdict {
    let mut total = 0;
    for (name, g) in test_groups() {
        for (i, sigma) in test_sigmas(&g, gf7(), 3, 3).into_iter().enumerate() {
            let sp = Spectrum::new(sigma).unwrap();
            let alg = PartialAlgebra::new(&sp);
            let ga = GroupoidAlgebra::new(&sp);
            let basis = alg.basis().to_vec();
            let arrows = ga.arrows().to_vec();
            let run = |len: usize, seed: u64| -> Box<dyn Iterator<Item = (usize, usize, usize)>> {
                if g.order() <= 4 {
                    Box::new((0..len).flat_map(move |a| (0..len).flat_map(move |b| (0..len).map(move |c| (a, b, c)))))
                } else {
                    let mut r = rng(seed);
                    let v: Vec<_> = (0..ASSOC_SAMPLES)
                        .map(|_| (r.gen_range(0..len), r.gen_range(0..len), r.gen_range(0..len)))
                        .collect();
                    Box::new(v.into_iter())
                }
            };
            let (na, fa) = triple_assoc(&basis, |x, y| alg.mul_basis(x, y), run(basis.len(), i as u64));
            let (nr, fr) = triple_assoc(&arrows, |x, y| ga.mul_arrows(x, y), run(arrows.len(), 100 + i as u64));
            if fa + fr > 0 {
                return verdict(false, format!("{name} σ#{i}: {fa} algebra and {fr} groupoid failures"));
            }
            total += na + nr;
        }
    }
    verdict(true, format!("{total} triples, zero failures"))
}

fn monoid_suite() -> Verdict {
    let mut checked = 0;
    for (name, g) in test_groups() {
        for (i, sigma) in test_sigmas(&g, gf7(), 3, 4).into_iter().enumerate() {
            let sp = Spectrum::new(sigma).unwrap();
            let rep = TwistedMonoid::new(&sp).verify(&Sampling::default());
            if !rep.passed() {
                return verdict(false, format!("{name} σ#{i}: {rep:?}"));
            }
            checked += 1;
        }
        let gf2 = Field::prime(2).unwrap();
        let sp = Spectrum::new(FactorSet::ones(g.clone(), gf2)).unwrap();
        let count = TwistedMonoid::new(&sp).nonzero_elements().unwrap().len();
        // Σ |U| over all subsets U ∋ 1, by direct enumeration.
        let n = g.order();
        let expect: usize = (0u64..1 << n).filter(|m| m & 1 == 1).map(|m| m.count_ones() as usize).sum();
        if count != expect {
            return verdict(false, format!("{name}: |S¹(G)∖{{0}}| = {count}, expected {expect}"));
        }
    }
    verdict(true, format!("{checked} factor sets; GF(2) expansion counts match"))
}

fn s4_suite() -> Verdict {
    let act = s4::verify_action(&s3());
    if !act.passed() || act.compositions_checked != 576 * 216 {
        return verdict(false, format!("action: {act:?}"));
    }
    let mut sigmas: Vec<FactorSet> = Vec::new();
    for g in [c(4), klein()] {
        for n in g.subgroups() {
            sigmas.push(FactorSet::subgroup_indicator(g.clone(), Field::Rational, n).unwrap());
        }
    }
    sigmas.push(normalized_bilinear());
    for (i, s) in sigmas.iter().enumerate() {
        match s4::verify_invariance(s) {
            Ok(r) if r.passed() => {}
            other => return verdict(false, format!("σ#{i}: {other:?}")),
        }
    }
    verdict(true, format!("{} compositions; {} factor sets invariant", act.compositions_checked, sigmas.len()))
}

fn membership_oracle() -> Verdict {
    let mut r = rng(7);
    let mut members = 0;
    for (name, g) in test_groups() {
        let field = gf7();
        let mut family: Vec<FactorSet> = Vec::new();
        for _ in 0..5 {
            let mut s = SubsetMask::EMPTY;
            for x in g.elements().skip(1) {
                if r.gen_bool(0.3) {
                    s = s.with(x).with(g.inv(x));
                }
            }
            family.push(idempotent::diagonal(g.clone(), field, s).unwrap());
            let w: Vec<_> = (0..2)
                .map(|_| (r.gen_range(0..g.order()), r.gen_range(0..g.order())))
                .filter(|&p| !idempotent::is_degenerate_pair(&g, p))
                .collect();
            let w = idempotent::orbit_closure(&g, w).into_iter().collect::<Vec<_>>();
            family.push(idempotent::lateral(g.clone(), field, &w).unwrap());
            let t = random_general_generator(&g, &mut r, 3);
            family.push(idempotent::general(g.clone(), field, &t).unwrap());
        }
        for n in g.subgroups() {
            family.push(FactorSet::subgroup_indicator(g.clone(), field, n).unwrap());
        }
        let products: Vec<FactorSet> =
            (0..5).map(|_| family[r.gen_range(0..family.len())].pm_product(&family[r.gen_range(0..family.len())]).unwrap()).collect();
        family.extend(products);
        for (i, s) in family.iter().enumerate() {
            if !s.validate_membership().unwrap().member {
                return verdict(false, format!("{name} constructor output #{i} rejected"));
            }
            members += 1;
        }
    }
    let lit = |rows: &[&[i64]]| {
        let g = c(2);
        let f = Field::Rational;
        FactorSet::new(g, f, rows.iter().map(|r| r.iter().map(|&v| FieldScalar::from_int(f, v)).collect()).collect()).unwrap()
    };
    let neg1 = lit(&[&[1, 0], &[0, 1]]).validate_membership().unwrap();
    let neg2 = lit(&[&[1, 1], &[0, 1]]).validate_membership().unwrap();
    let neg3 = lit(&[&[0, 1], &[1, 1]]).validate_membership().unwrap();
    let ok1 = !neg1.member && neg1.representation_violations.iter().any(|v| v.axiom == RepresentationAxiom::II && v.pair == (1, 1));
    let ok2 = !neg2.member && neg2.basic_violations.iter().any(|v| v.rule == BasicRule::UnitPattern && v.pair == (1, 0));
    let ok3 = !neg3.member && neg3.basic_violations.iter().any(|v| v.rule == BasicRule::IdentityIsOne && v.pair == (0, 0));
    verdict(ok1 && ok2 && ok3, format!("{members} constructor outputs accepted; negatives located: {ok1}, {ok2}, {ok3}"))
}

fn idempotent_structure() -> Verdict {
    let mut r = rng(8);
    let mut sets = 0;
    for (name, g) in test_groups().into_iter().filter(|(_, g)| g.order() <= 6) {
        for i in 0..TYPE1_SIGMAS {
            let t = random_general_generator(&g, &mut r, 1 + i % 4);
            let sigma = idempotent::general(g.clone(), gf7(), &t).unwrap();
            let p = compute_prohibitions(&sigma, Type2Scan::Always);
            for m in (0u64..1 << g.order()).filter(|m| m & 1 == 1) {
                let xi = SubsetMask(m);
                let by_type1 = p.type1.iter().any(|q| q.is_subset_of(xi));
                let by_any = by_type1 || p.type2.iter().any(|q| q.is_subset_of(xi));
                if by_type1 != by_any {
                    return verdict(false, format!("{name}: {xi} excluded only by a type-2 prohibition"));
                }
                sets += 1;
            }
        }
    }
    let g = d4();
    for i in 0..DECOMP_TRIALS {
        let t = random_general_generator(&g, &mut r, 1 + i % 5);
        let sigma = idempotent::general(g.clone(), Field::Rational, &t).unwrap();
        let d = match canonical_decomposition(&sigma) {
            Ok(d) => d,
            Err(e) => return verdict(false, format!("D4 trial {i}: {e}")),
        };
        let null = |s: &FactorSet| s.null_set().into_iter().collect::<BTreeSet<_>>();
        let (ns, nd, nl) = (null(&sigma), null(&d.delta), null(&d.lambda));
        let product_ok = d.delta.pm_product(&d.lambda).unwrap() == sigma;
        let disjoint = nd.is_disjoint(&nl) && nd.union(&nl).copied().collect::<BTreeSet<_>>() == ns;
        let diagonal_shape = g.elements().all(|x| {
            g.elements().all(|y| {
                let hit = [x, y, g.mul(x, y)].iter().any(|&z| d.diagonal_support.contains(z));
                d.delta.is_zero_at(x, y) == hit
            })
        });
        if !(product_ok && disjoint && diagonal_shape) {
            return verdict(false, format!("D4 trial {i}: product {product_ok}, disjoint {disjoint}, diagonal {diagonal_shape}"));
        }
    }
    verdict(true, format!("{sets} subsets agree; {DECOMP_TRIALS}/{DECOMP_TRIALS} decompositions on D4"))
}

fn freeness_and_ideals() -> Verdict {
    let g = s3();
    let s = g.full().without(0);
    let sp = Spectrum::new(idempotent::diagonal(g, Field::Rational, s).unwrap()).unwrap();
    let report = sp.freeness_report();
    if !report.topologically_free || report.fixed_points.iter().any(|e| !e.fixed_points.is_empty()) {
        return verdict(false, "diagonal σ with S = G∖{1} on S3 is not reported free");
    }
    let alg = PartialAlgebra::new(&sp);
    let mut r = rng(9);
    let mut tried = 0;
    while tried < IDEAL_TRIALS {
        let mut x = AlgebraElement::zero();
        for &b in alg.basis() {
            x.add_term(b, FieldScalar::from_int(Field::Rational, r.gen_range(-5..=5)));
        }
        if x.is_zero() {
            continue;
        }
        if !alg.ideal_meets_b(&x).unwrap() {
            return verdict(false, "ideal misses B on a free instance");
        }
        tried += 1;
    }
    let sp = Spectrum::new(FactorSet::ones(c(2), Field::Rational)).unwrap();
    let report = sp.freeness_report();
    let flagged = !report.topologically_free
        && report.fixed_points.iter().any(|e| e.element == 1 && !e.free && e.fixed_points.contains(&SubsetMask::from_elements([0, 1])));
    verdict(flagged, format!("{IDEAL_TRIALS} ideals meet B on S3; Fix_a ≠ ∅ flagged on C2"))
}

fn random_dinf(r: &mut impl Rng) -> DInfGenerator {
    let mut g = DInfGenerator::default();
    let pick = |r: &mut dyn rand::RngCore| r.gen_range(0..=3usize);
    for _ in 0..pick(r) {
        g.nu0_zeros.insert(r.gen_range(1..=5));
    }
    for _ in 0..pick(r) {
        g.nu1_zeros.insert(r.gen_range(-5..=5));
    }
    for _ in 0..pick(r) {
        g.omega0_zeros.insert((r.gen_range(1..=4), r.gen_range(1..=4)));
    }
    for _ in 0..pick(r) {
        g.omega1_zeros.insert((r.gen_range(1..=4), r.gen_range(-4..=4)));
    }
    g
}

fn index_sets() -> Vec<BTreeSet<i64>> {
    let others: Vec<i64> = (-3..=3).filter(|&i| i != 0).collect();
    (0u32..1 << others.len())
        .filter(|m| m.count_ones() <= 3)
        .map(|m| {
            let mut s: BTreeSet<i64> = (0..others.len()).filter(|&b| m >> b & 1 == 1).map(|b| others[b]).collect();
            s.insert(0);
            s
        })
        .collect()
}

fn dinf_suite() -> Verdict {
    let start = Instant::now();
    let mut r = rng(10);
    let (mut routes, mut certs) = (0, 0);
    let sets = index_sets();
    for i in 0..DINF_GENERATORS {
        let gen = random_dinf(&mut r);
        let w = dinf::window_prohibition_check(&gen, DINF_WINDOW).unwrap();
        if !w.passed || !dinf::window_basic_axioms(&gen, DINF_WINDOW) {
            return verdict(false, format!("generator #{i} {gen:?}: window mismatches {:?}", w.mismatches));
        }
        for l in -3..=3 {
            for index in &sets {
                let d = dinf::delta_membership(&gen, l, index).unwrap();
                let m = dinf::lambda_membership(&gen, l, index).unwrap();
                if !d.agree() || !m.agree() {
                    return verdict(false, format!("generator #{i}, l = {l}, I = {index:?}: routes disagree"));
                }
                routes += 2;
                if d.value() == Some(true) && m.value() == Some(true) {
                    let c = dinf::freeness_certificate(&gen, l, index, DINF_WINDOW).unwrap();
                    if !c.certified {
                        return verdict(false, format!("generator #{i}, l = {l}, I = {index:?}: certificate failed"));
                    }
                    certs += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    verdict(t < DINF_BUDGET, format!("{routes} dual-route checks, {certs} certificates, {:.1}s", t.as_secs_f64()))
}

fn simplicity() -> Verdict {
    let mut checked = 0;
    for (name, g) in test_groups() {
        let mut sigmas = test_sigmas(&g, gf7(), 5, 11);
        sigmas.push(FactorSet::only_identity(g.clone(), gf7()));
        for (i, sigma) in sigmas.into_iter().enumerate() {
            let simple = is_simple(&sigma);
            let sp = Spectrum::new(sigma).unwrap();
            let single = GroupoidAlgebra::new(&sp).decompose().is_single_field();
            if simple != single {
                return verdict(false, format!("{name} σ#{i}: is_simple = {simple}, single summand = {single}"));
            }
            checked += 1;
        }
    }
    verdict(true, format!("{checked} factor sets agree"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("dimension identity", dimension_identity),
        ("known decompositions", known_decompositions),
        ("psi isomorphism", psi_isomorphism),
        ("associativity", associativity),
        ("monoid suite", monoid_suite),
        ("s4 symmetry", s4_suite),
        ("membership oracle", membership_oracle),
        ("idempotent structure", idempotent_structure),
        ("freeness and ideals", freeness_and_ideals),
        ("infinite dihedral windows", dinf_suite),
        ("simplicity", simplicity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        println!("[{}] {:>2}. {name}: {}", if v.ok { "PASS" } else { "FAIL" }, i + 1, v.detail);
        failed += !v.ok as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
