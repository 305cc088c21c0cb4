//! Twisted partial group algebras of finite groups.
//!
//! A factor set `σ` on a finite group `G` determines a finite set of
//! prohibited subsets, the spectrum `Ω_σ` of admissible subsets, and a
//! finite-dimensional algebra with basis `(U, g)`. This crate builds those
//! objects with exact arithmetic and checks their structure: the inverse
//! monoid `𝒮^σ(G)`, the groupoid algebra and its matrix decomposition, the
//! `S₄`-symmetry of the coboundary defect, idempotent factor sets and a
//! windowed model of the infinite dihedral group.

pub mod algebra;
pub mod cli;
pub mod dinf;
pub mod error;
pub mod factor_set;
pub mod field;
pub mod group;
pub mod groupoid;
pub mod idempotent;
pub mod io;
pub mod linalg;
pub mod monoid;
pub mod s4;
pub mod sampling;
pub mod spectrum;

pub use algebra::{AlgebraElement, PartialAlgebra};
pub use error::{Error, Result};
pub use factor_set::FactorSet;
pub use field::{Field, FieldScalar};
pub use group::{FiniteGroup, GroupDescriptor, SubsetMask};
pub use groupoid::GroupoidAlgebra;
pub use monoid::{MonoidElement, TwistedMonoid};
pub use spectrum::Spectrum;
