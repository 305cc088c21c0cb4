//! The groupoid realization and its decomposition into matrix algebras
//! over twisted group algebras.

use std::sync::Arc;

use parsigma::groupoid::is_simple;
use parsigma::sampling::Sampling;
use parsigma::{FactorSet, Field, FiniteGroup, GroupoidAlgebra, Spectrum};

fn main() -> parsigma::Result<()> {
    for (name, g) in [("C3", FiniteGroup::cyclic(3)?), ("S3", FiniteGroup::symmetric(3)?)] {
        let sigma = FactorSet::ones(Arc::new(g), Field::Rational);
        println!("{name}: simple = {}", is_simple(&sigma));
        let sp = Spectrum::new(sigma)?;
        let ga = GroupoidAlgebra::new(&sp);
        let rep = ga.decompose();
        for c in &rep.components {
            println!("  M_{}(κ H) with |H| = {}, {} objects", c.n_i, c.h_i.order, c.objects.len());
        }
        println!("  Σ|U| = {} = Σ n²|H| = {}", rep.dim_check.lhs, rep.dim_check.rhs);
        println!("  Ψ isomorphism: {}", ga.verify_psi_isomorphism(&Sampling::default()).passed());
    }
    Ok(())
}
