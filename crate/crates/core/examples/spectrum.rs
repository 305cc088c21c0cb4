//! Prohibitions, the spectrum Ω_σ and topological freeness.

use std::sync::Arc;

use parsigma::idempotent::diagonal;
use parsigma::{FactorSet, Field, FiniteGroup, Spectrum, SubsetMask};

fn main() -> parsigma::Result<()> {
    let c4 = Arc::new(FiniteGroup::cyclic(4)?);
    let sigma = diagonal(c4.clone(), Field::Rational, SubsetMask::from_elements([1, 3]))?;
    let sp = Spectrum::new(sigma)?;
    println!("minimal prohibitions: {:?}", sp.minimal_prohibitions());
    println!("Ω = {:?}", sp.omega());

    let sp = Spectrum::new(FactorSet::ones(c4, Field::Rational))?;
    let report = sp.freeness_report();
    println!("trivial σ on C4: {} points, topologically free = {}", sp.omega().len(), report.topologically_free);
    for e in report.fixed_points.iter().filter(|e| !e.free) {
        println!("  Fix_{} = {:?}", e.element, e.fixed_points);
    }
    Ok(())
}
