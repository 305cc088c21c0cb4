//! The membership oracle for pm(G), with a failing factor set and the
//! located violation.

use std::sync::Arc;

use parsigma::{FactorSet, Field, FieldScalar, FiniteGroup, SubsetMask};

fn main() -> parsigma::Result<()> {
    let c4 = Arc::new(FiniteGroup::cyclic(4)?);
    let sn = FactorSet::subgroup_indicator(c4, Field::Rational, SubsetMask::from_elements([0, 2]))?;
    let cert = sn.validate_membership()?;
    println!("σ_N on C4: member = {}, |Ω| = {:?}, dim = {:?}", cert.member, cert.omega_size, cert.dimension);

    let c2 = Arc::new(FiniteGroup::cyclic(2)?);
    let q = Field::Rational;
    let rows = vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]];
    let bad = FactorSet::new(c2, q, rows)?;
    let cert = bad.validate_membership()?;
    println!("[[1,0],[0,1]] on C2: member = {}", cert.member);
    for v in &cert.representation_violations {
        println!("  axiom {:?} fails at {:?}", v.axiom, v.pair);
    }

    let f = Field::prime(5)?;
    let klein = Arc::new(FiniteGroup::klein());
    let bil = FactorSet::from_fn(klein, f, |x, y| FieldScalar::from_int(f, if (x >> 1) & y & 1 == 1 { -1 } else { 1 }));
    println!("(−1)^(x₂y₁) on Klein over {f}: cocycle = {}, normalized = {}", bil.is_total_cocycle(), bil.is_normalized());
    Ok(())
}
