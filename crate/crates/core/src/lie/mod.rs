//! Lie algebras by structure constants, filtrations and matrix representations.

mod algebra;
mod filtration;
pub mod io;
mod representation;

pub use algebra::{default_names, CentralSeries, JacobiReport, JacobiViolation, LieAlgebra};
pub(crate) use algebra::CoordinateSolver;
pub use filtration::{Filtration, FiltrationFailure, FiltrationReport};
pub use representation::{Representation, RepresentationReport};
