//! Products in the basis realization, the partition of unity and ideals.

use std::sync::Arc;

use parsigma::{AlgebraElement, FactorSet, Field, FieldScalar, FiniteGroup, PartialAlgebra, Spectrum, SubsetMask};

fn main() -> parsigma::Result<()> {
    let q = Field::Rational;
    let c3 = Arc::new(FiniteGroup::cyclic(3)?);
    let sp = Spectrum::new(FactorSet::ones(c3, q))?;
    let alg = PartialAlgebra::new(&sp);
    println!("dimension {}", alg.dimension());
    let g = alg.gen(1);
    println!("[a][a⁻¹] has {} terms", alg.mul(&g, &alg.gen(2)).len());
    println!("partition of unity holds: {}", alg.verify_partition_of_unity().passed());
    println!("defining relations violated: {}", alg.check_defining_relations().len());

    let c2 = Arc::new(FiniteGroup::cyclic(2)?);
    let sp = Spectrum::new(FactorSet::ones(c2, q))?;
    let alg = PartialAlgebra::new(&sp);
    let full = SubsetMask::from_elements([0, 1]);
    let mut x = AlgebraElement::monomial(q.one(), full, 0);
    x.add_term((full, 1), FieldScalar::from_int(q, -1));
    println!("ideal of ({{1,a}},1) − ({{1,a}},a) meets B: {}", alg.ideal_meets_b(&x)?);
    Ok(())
}
