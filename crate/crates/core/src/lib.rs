//! Exact lower bounds for the dimension of faithful nilrepresentations of
//! nilpotent Lie algebras.

pub mod bound;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod families;
pub mod lie;

pub use bound::{lower_bound_report, solve_exact, BoundProblem, BoundReport, BoundSolution};
pub use decomposition::{analyze_representation, decompose, Decomposition, DecompositionReport};
pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Subspace, Vector};
pub use families::FamilySpec;
pub use lie::{Filtration, LieAlgebra, Representation};
