//! The inverse monoid of scaled pairs k(U,g) and its axioms.

use std::sync::Arc;

use parsigma::sampling::Sampling;
use parsigma::{FactorSet, Field, FiniteGroup, Spectrum, SubsetMask, TwistedMonoid};

fn main() -> parsigma::Result<()> {
    let gf2 = Field::prime(2)?;
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let sp = Spectrum::new(FactorSet::ones(s3, gf2))?;
    let m = TwistedMonoid::new(&sp);
    let x = m.element(gf2.one(), SubsetMask::from_elements([0, 1]), 1)?;
    let xi = m.inverse(&x)?;
    println!("x = {x:?}\nx⁻¹ = {xi:?}\nx x⁻¹ = {:?}", m.mul(&x, &xi));
    let nonzero = m.nonzero_elements().map(|v| v.len());
    println!("|S(S3)| = {nonzero:?}");
    let report = m.verify(&Sampling::default());
    println!("{} triples checked, passed = {}", report.triples_checked, report.passed());
    Ok(())
}
