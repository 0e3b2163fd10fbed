use serde::Serialize;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Subspace, Vector};

/// A linear representation `ρ : n → gl(V)` given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_v: usize,
    matrices: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    /// Basis pairs `(i, j)` (1-based) with `[ρ(x_i), ρ(x_j)] ≠ ρ([x_i, x_j])`.
    pub homomorphism_failures: Vec<(usize, usize)>,
    /// Basis elements (1-based) whose image is not nilpotent.
    pub non_nilpotent_basis: Vec<usize>,
    /// Every element of `ρ(n)` is nilpotent: the flag `V ⊇ ρ(n)V ⊇ ρ(n)²V ⊇ …` reaches zero.
    pub nilrepresentation: bool,
    /// Rank of the coordinate map `x ↦ ρ(x)` into `End(V)`.
    pub rank: usize,
    pub faithful: bool,
}

impl RepresentationReport {
    pub fn is_faithful_nilrepresentation(&self) -> bool {
        self.homomorphism_failures.is_empty() && self.nilrepresentation && self.faithful
    }
}

impl Representation {
    /// Shape checks only; use [`Representation::validate`] for the algebraic ones.
    pub fn new(algebra: LieAlgebra, dim_v: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "representation matrices",
                expected: algebra.dim(),
                found: matrices.len(),
            });
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(Error::InvalidRepresentation(format!(
                "matrix of shape {}x{} in a representation of dimension {dim_v}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Representation {
            algebra,
            dim_v,
            matrices,
        })
    }

    /// The matrix algebra spanned by `matrices` with its inclusion into `gl(V)`.
    pub fn from_matrix_algebra(
        name: impl Into<String>,
        basis_names: Vec<String>,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        let dim_v = matrices.first().map_or(0, Matrix::rows);
        let algebra = LieAlgebra::from_matrices(name, basis_names, &matrices)?;
        Representation::new(algebra, dim_v, matrices)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `ρ(x)` for `x` in algebra coordinates.
    pub fn operator(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    pub fn validate(&self) -> RepresentationReport {
        let n = self.algebra.dim();
        let mut homomorphism_failures = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = Matrix::commutator(&self.matrices[i], &self.matrices[j]);
                let rhs = self.operator(self.algebra.basis_bracket(i, j));
                if lhs != rhs {
                    homomorphism_failures.push((i + 1, j + 1));
                }
            }
        }
        let non_nilpotent_basis = self
            .matrices
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_nilpotent())
            .map(|(i, _)| i + 1)
            .collect();
        let rank = self.coordinate_map_rank();
        RepresentationReport {
            homomorphism_failures,
            non_nilpotent_basis,
            nilrepresentation: self.flag_reaches_zero(),
            rank,
            faithful: rank == n,
        }
    }

    /// Fails unless this is a faithful nilrepresentation.
    pub fn check_faithful_nilrepresentation(&self) -> Result<()> {
        let report = self.validate();
        if !report.homomorphism_failures.is_empty() {
            return Err(Error::InvalidRepresentation(format!(
                "not a homomorphism on basis pairs {:?}",
                report.homomorphism_failures
            )));
        }
        if !report.nilrepresentation {
            return Err(Error::InvalidRepresentation(format!(
                "not a nilrepresentation (non-nilpotent basis images: {:?})",
                report.non_nilpotent_basis
            )));
        }
        if !report.faithful {
            return Err(Error::NotFaithful {
                rank: report.rank,
                dim: self.algebra.dim(),
            });
        }
        Ok(())
    }

    fn coordinate_map_rank(&self) -> usize {
        let rows: Vec<Vector> = self.matrices.iter().map(Matrix::to_vector).collect();
        Matrix::from_rows_with_cols(rows, self.dim_v * self.dim_v)
            .expect("matrices share one shape")
            .rank()
    }

    // Engel: ρ(n) acts by nilpotent operators iff iterating V ↦ ρ(n)V reaches 0.
    fn flag_reaches_zero(&self) -> bool {
        let mut current = Subspace::full(self.dim_v);
        loop {
            if current.is_zero() {
                return true;
            }
            let mut images = Vec::new();
            for m in &self.matrices {
                for v in current.basis_vectors() {
                    images.push(m.mul_vec(&v));
                }
            }
            let next = Subspace::span(self.dim_v, &images).expect("vectors of length dim V");
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
    }
}
