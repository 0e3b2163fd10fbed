use num_traits::Zero;

use super::{add_scaled, is_zero_vector, unit_vector, Matrix, Rational, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `k^n` held in reduced row-echelon form.
///
/// The basis rows are nonzero, the pivot columns strictly increase, and every
/// pivot entry is `1` with zeros above and below it. Two spans of the same set
/// of vectors therefore have identical representations, so equality and
/// inclusion are syntactic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical form of the linear hull of `vectors`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                context: "span",
                expected: ambient,
                found: bad.len(),
            });
        }
        let m = Matrix::from_rows_with_cols(vectors.to_vec(), ambient)?;
        Ok(Self::from_rref(m))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_rref(m.clone())
    }

    fn from_rref(m: Matrix) -> Self {
        let ambient = m.cols();
        let r = m.rref();
        Subspace {
            ambient,
            basis: r.matrix.block(0, 0, r.rank, ambient),
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis as the rows of a `dim × ambient` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after subtracting its projection along the pivots.
    /// Zero exactly when `v` lies in the subspace.
    fn reduce(&self, v: &[Rational]) -> Vector {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                add_scaled(&mut w, &c, self.basis.row(r));
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        self.check_len(v.len(), "contains_vector")?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        if !self.contains_vector(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other, "contains")?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| is_zero_vector(&self.reduce(v))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other, "sum")?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, &rows)
    }

    /// Annihilator under the standard pairing: `{x : b·x = 0 for every basis row b}`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// `A ∩ B = ann(ann(A) + ann(B))`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other, "intersect")?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let joint = self.annihilator().sum(&other.annihilator())?;
        Ok(joint.annihilator())
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace image",
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let images: Vec<Vector> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &images)
    }

    /// A complement `C` of `inner` inside `ambient` (`C ⊕ inner = ambient`) that
    /// contains `must_contain`.
    ///
    /// Deterministic: starts from the canonical basis of `must_contain` and
    /// greedily adds rows of the canonical basis of `ambient` that are not yet in
    /// the running span.
    pub fn complement_extending(
        ambient: &Subspace,
        inner: &Subspace,
        must_contain: &Subspace,
    ) -> Result<Subspace> {
        ambient.check_same_ambient(inner, "complement_extending")?;
        ambient.check_same_ambient(must_contain, "complement_extending")?;
        if !ambient.contains(inner)? {
            return Err(Error::Precondition(
                "complement_extending: inner ⊄ ambient".into(),
            ));
        }
        if !ambient.contains(must_contain)? {
            return Err(Error::Precondition(
                "complement_extending: must_contain ⊄ ambient".into(),
            ));
        }
        let overlap = must_contain.intersect(inner)?;
        if !overlap.is_zero() {
            return Err(Error::Precondition(format!(
                "complement_extending: must_contain ∩ inner has dimension {}",
                overlap.dim()
            )));
        }

        let mut chosen = must_contain.basis_vectors();
        let mut running = inner.sum(must_contain)?;
        for v in ambient.basis_vectors() {
            if running.dim() == ambient.dim() {
                break;
            }
            if !running.contains_vector(&v)? {
                running = running.sum(&Subspace::span(ambient.ambient, &[v.clone()])?)?;
                chosen.push(v);
            }
        }
        let c = Subspace::span(ambient.ambient, &chosen)?;
        if c.dim() + inner.dim() != ambient.dim() {
            return Err(Error::Internal(format!(
                "complement_extending produced dim {} for ambient {} and inner {}",
                c.dim(),
                ambient.dim(),
                inner.dim()
            )));
        }
        Ok(c)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Subspace::span(ambient, &vs).expect("unit vectors have the ambient length")
    }

    fn check_len(&self, len: usize, context: &'static str) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    fn check_same_ambient(&self, other: &Subspace, context: &'static str) -> Result<()> {
        self.check_len(other.ambient, context)
    }
}
