//! Diagonal, lateral and general idempotent factor sets and the unique
//! diagonal-times-lateral decomposition.

use std::sync::Arc;

use parsigma::idempotent::{canonical_decomposition, diagonal, general, lateral, orbit_c, split_general};
use parsigma::{Field, FiniteGroup, Spectrum, SubsetMask};

fn main() -> parsigma::Result<()> {
    let q = Field::Rational;
    let d4 = Arc::new(FiniteGroup::dihedral(4)?);
    println!("C_(r,r) = {:?}", orbit_c(&d4, 1, 1));

    let delta = diagonal(d4.clone(), q, SubsetMask::from_elements([1, 3]))?;
    let lambda = lateral(d4.clone(), q, &[(2, 4)])?;
    println!("diagonal member: {}", delta.validate_membership()?.member);
    println!("lateral member: {}", lambda.validate_membership()?.member);

    let t = [(1, 0), (0, 3), (2, 4), (4, 2)];
    let (t0, t1) = split_general(&d4, &t)?;
    println!("T₀ = {t0}, T₁ = {t1:?}");
    let sigma = general(d4, q, &t)?;
    println!("|Ω_σ| = {}", Spectrum::new(sigma.clone())?.omega().len());
    let d = canonical_decomposition(&sigma)?;
    println!("S = {}, W̄ = {:?}", d.diagonal_support, d.lateral_support);
    Ok(())
}
