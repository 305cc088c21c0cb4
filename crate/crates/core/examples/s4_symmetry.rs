//! The S₄ action on G³ and the symmetry of the coboundary defect.

use std::sync::Arc;

use parsigma::s4::{act, orbit, verify_action, verify_invariance, Permutation4};
use parsigma::{FactorSet, Field, FiniteGroup, SubsetMask};

fn main() -> parsigma::Result<()> {
    let s3 = FiniteGroup::symmetric(3)?;
    let gamma = Permutation4::from_cycles(&[&[0, 1, 2, 3]])?;
    println!("{gamma} ▷ (1,3,4) = {:?}", act(&s3, &gamma, (1, 3, 4)));
    println!("orbit of (1,3,4) has {} elements", orbit(&s3, (1, 3, 4)).len());
    let a = verify_action(&s3);
    println!("action: {} compositions, {} failures", a.compositions_checked, a.failures);

    let klein = Arc::new(FiniteGroup::klein());
    let sn = FactorSet::subgroup_indicator(klein, Field::Rational, SubsetMask::from_elements([0, 1]))?;
    let r = verify_invariance(&sn)?;
    println!("σ_N on Klein: invariance holds = {}", r.passed());
    Ok(())
}
