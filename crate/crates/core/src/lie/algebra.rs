use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{add_scaled, is_zero_vector, zero_vector, Matrix, Rational, Subspace, Vector};

/// A finite-dimensional Lie algebra given by structure constants
/// `[x_i, x_j] = Σ_k c_ij^k x_k`, stored for `i < j` only (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    // Dense `[x_i, x_j]` for all ordered pairs, row-major over (i, j).
    table: Vec<Vector>,
}

/// One Jacobi violation: basis triple (1-based) and the nonzero Jacobi sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    #[serde(serialize_with = "crate::lie::io::serialize_vector")]
    pub sum: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lower central series `C^1 = n ⊇ C^2 = [n, n] ⊇ …`.
///
/// For a nilpotent algebra `terms` runs down to the last nonzero term. Otherwise
/// the series stabilizes at a nonzero term, which is the last entry, and
/// `nilpotent` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    pub terms: Vec<Subspace>,
    pub nilpotent: bool,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Nilpotency step, if nilpotent. The zero algebra has step 0.
    pub fn step(&self) -> Option<usize> {
        self.nilpotent.then_some(self.terms.len())
    }
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, [(k, c)])` triples, 0-based. Pairs with
    /// `i > j` are flipped with a sign change; `i == j` and repeated pairs are
    /// rejected. The Jacobi identity is not checked here, see [`LieAlgebra::jacobi`].
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        brackets: Vec<(usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut map: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (i, j, terms) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if i == j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket [x{0}, x{0}] must not be given",
                    i + 1
                )));
            }
            let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            let mut dense = zero_vector(dim);
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "bracket term index {} out of range for dimension {dim}",
                        k + 1
                    )));
                }
                dense[k] += if sign > 0 { c } else { -c };
            }
            let sparse: Vec<(usize, Rational)> = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if map.insert((lo, hi), sparse).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({}, {}) given twice",
                    lo + 1,
                    hi + 1
                )));
            }
        }
        map.retain(|_, terms| !terms.is_empty());

        let mut table = vec![zero_vector(dim); dim * dim];
        for (&(i, j), terms) in &map {
            for (k, c) in terms {
                table[i * dim + j][*k] = c.clone();
                table[j * dim + i][*k] = -c.clone();
            }
        }
        Ok(LieAlgebra {
            name: name.into(),
            basis_names,
            brackets: map,
            table,
        })
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebra::new(name, default_names(dim), Vec::new()).expect("no brackets to validate")
    }

    /// The Lie algebra spanned by linearly independent matrices, closed under
    /// commutators. Structure constants are read off in the given basis.
    pub fn from_matrices(
        name: impl Into<String>,
        basis_names: Vec<String>,
        matrices: &[Matrix],
    ) -> Result<Self> {
        if basis_names.len() != matrices.len() {
            return Err(Error::DimensionMismatch {
                context: "basis names",
                expected: matrices.len(),
                found: basis_names.len(),
            });
        }
        let flat: Vec<Vector> = matrices.iter().map(Matrix::to_vector).collect();
        let len = flat.first().map_or(0, Vec::len);
        let rank = Matrix::from_rows_with_cols(flat.clone(), len)?.rank();
        if rank != matrices.len() {
            return Err(Error::InvalidAlgebra(format!(
                "matrices are linearly dependent (rank {rank} of {})",
                matrices.len()
            )));
        }
        let solver = CoordinateSolver::new(&flat, len)?;
        let mut brackets = Vec::new();
        for i in 0..matrices.len() {
            for j in (i + 1)..matrices.len() {
                let c = Matrix::commutator(&matrices[i], &matrices[j]);
                if c.is_zero() {
                    continue;
                }
                let coords = solver.solve(&c.to_vector()).ok_or_else(|| {
                    Error::InvalidAlgebra(format!(
                        "span is not closed under the commutator of basis elements {} and {}",
                        i + 1,
                        j + 1
                    ))
                })?;
                let terms = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                brackets.push((i, j, terms));
            }
        }
        LieAlgebra::new(name, basis_names, brackets)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero structure constants keyed by 0-based `(i, j)`, `i < j`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<(usize, Rational)>> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[x_i, x_j]` in coordinates (0-based indices).
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "bracket",
                    expected: n,
                    found: w.len(),
                });
            }
        }
        let mut out = zero_vector(n);
        for (&(i, j), terms) in &self.brackets {
            let coeff = &u[i] * &v[j] - &u[j] * &v[i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x` in the standard basis (column `j` is `[x, x_j]`).
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket(x, &crate::exact::unit_vector(n, j)))
            .collect::<Result<_>>()?;
        Matrix::from_columns(&cols, n)
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let sum = self.jacobi_sum(i, j, k);
                    if !is_zero_vector(&sum) {
                        violations.push(JacobiViolation {
                            triple: (i + 1, j + 1, k + 1),
                            sum,
                        });
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim();
        let mut sum = zero_vector(n);
        // [x_a, [x_b, x_c]] = Σ_m c_bc^m [x_a, x_m]
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coeff) in self.basis_bracket(b, c).iter().enumerate() {
                if !coeff.is_zero() {
                    add_scaled(&mut sum, coeff, self.basis_bracket(a, m));
                }
            }
        }
        sum
    }

    /// Fails with [`Error::InvalidAlgebra`] listing the first violating triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let report = self.jacobi();
        if report.is_valid() {
            return Ok(());
        }
        let triples: Vec<String> = report
            .violations
            .iter()
            .take(5)
            .map(|v| format!("{:?}", v.triple))
            .collect();
        Err(Error::InvalidAlgebra(format!(
            "Jacobi identity fails on {} triple(s), e.g. {}",
            report.violations.len(),
            triples.join(", ")
        )))
    }

    /// `[A, B]` for subspaces given in coordinates.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        let mut vs = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                let w = self.bracket(&u, &v)?;
                if !is_zero_vector(&w) {
                    vs.push(w);
                }
            }
        }
        Subspace::span(n, &vs)
    }

    pub fn lower_central_series(&self) -> CentralSeries {
        let n = self.dim();
        let whole = Subspace::full(n);
        if n == 0 {
            return CentralSeries {
                terms: Vec::new(),
                nilpotent: true,
            };
        }
        let mut terms = vec![whole.clone()];
        loop {
            let last = terms.last().expect("series is nonempty");
            let next = self
                .bracket_subspaces(&whole, last)
                .expect("subspaces share the algebra's ambient dimension");
            if next.is_zero() {
                return CentralSeries {
                    terms,
                    nilpotent: true,
                };
            }
            if next == *last {
                return CentralSeries {
                    terms,
                    nilpotent: false,
                };
            }
            terms.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilpotent
    }

    /// `{x : [x, y] = 0 for all y}`, the kernel of the stacked adjoint map.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, k) of the stacked map sends x to the k-th coordinate of [x, x_j].
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.basis_bracket(i, j)[k].clone()).collect());
            }
        }
        Matrix::from_rows_with_cols(rows, n)
            .expect("rows have the algebra dimension")
            .kernel()
    }
}

pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}

/// Solves `Σ c_i b_i = v` for a fixed list of independent vectors `b_i`.
pub(crate) struct CoordinateSolver {
    span: Subspace,
    // Inverse of the change of basis from the given vectors to the canonical basis.
    to_given: Matrix,
}

impl CoordinateSolver {
    pub(crate) fn new(vectors: &[Vector], len: usize) -> Result<Self> {
        let span = Subspace::span(len, vectors)?;
        if span.dim() != vectors.len() {
            return Err(Error::Precondition(
                "coordinate solver needs linearly independent vectors".into(),
            ));
        }
        // Row i of `given_in_canonical` holds the canonical coordinates of vectors[i].
        let rows: Vec<Vector> = vectors
            .iter()
            .map(|v| span.coordinates(v).map(|c| c.expect("vector lies in its own span")))
            .collect::<Result<_>>()?;
        let given_in_canonical = Matrix::from_rows_with_cols(rows, span.dim())?;
        let to_given = given_in_canonical
            .inverse()
            .ok_or_else(|| Error::Internal("coordinate change is singular".into()))?;
        Ok(CoordinateSolver { span, to_given })
    }

    pub(crate) fn solve(&self, v: &[Rational]) -> Option<Vector> {
        let canonical = self.span.coordinates(v).ok()??;
        // c · G = canonical  ⇒  c = canonical · G⁻¹
        let row = Matrix::from_rows_with_cols(vec![canonical], self.span.dim()).ok()?;
        Some((&row * &self.to_given).row(0).to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int_vector, rat, unit_vector};

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::new(
            "h3",
            vec!["x".into(), "y".into(), "z".into()],
            vec![(0, 1, vec![(2, rat(1))])],
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_is_valid() {
        assert!(heisenberg().jacobi().is_valid());
    }

    #[test]
    fn abelian_is_valid() {
        assert!(LieAlgebra::abelian("a4", 4).jacobi().is_valid());
    }

    #[test]
    fn broken_jacobi_triple_is_reported() {
        // [x,y] = x, [y,z] = y, [x,z] = 0
        let alg = LieAlgebra::new(
            "broken",
            default_names(3),
            vec![(0, 1, vec![(0, rat(1))]), (1, 2, vec![(1, rat(1))])],
        )
        .unwrap();
        let report = alg.jacobi();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].triple, (1, 2, 3));
        assert_eq!(report.violations[0].sum, int_vector(&[1, 0, 0]));
        assert!(alg.check_jacobi().is_err());
    }

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg();
        let x = unit_vector(3, 0);
        let y = unit_vector(3, 1);
        assert_eq!(h.bracket(&x, &y).unwrap(), unit_vector(3, 2));
        assert_eq!(h.bracket(&y, &x).unwrap(), int_vector(&[0, 0, -1]));
        let v = int_vector(&[2, -3, 5]);
        assert!(is_zero_vector(&h.bracket(&v, &v).unwrap()));
        assert!(h.bracket(&x, &int_vector(&[1])).is_err());
    }

    #[test]
    fn abelian_bracket_vanishes() {
        let a = LieAlgebra::abelian("a3", 3);
        let u = int_vector(&[1, 2, 3]);
        let v = int_vector(&[-1, 0, 4]);
        assert!(is_zero_vector(&a.bracket(&u, &v).unwrap()));
    }

    #[test]
    fn flipped_pairs_change_sign() {
        let alg = LieAlgebra::new("h", default_names(3), vec![(1, 0, vec![(2, rat(1))])]).unwrap();
        assert_eq!(alg.basis_bracket(0, 1), &int_vector(&[0, 0, -1]));
        assert!(LieAlgebra::new("bad", default_names(2), vec![(0, 0, vec![])]).is_err());
        assert!(LieAlgebra::new("bad", default_names(2), vec![(0, 3, vec![])]).is_err());
        assert!(LieAlgebra::new(
            "dup",
            default_names(3),
            vec![(0, 1, vec![(2, rat(1))]), (1, 0, vec![(2, rat(1))])]
        )
        .is_err());
    }

    #[test]
    fn series_and_center() {
        let h = heisenberg();
        let lcs = h.lower_central_series();
        assert!(lcs.nilpotent);
        assert_eq!(lcs.dims(), vec![3, 1]);
        assert_eq!(h.center(), Subspace::coordinate(3, &[2]));

        let a = LieAlgebra::abelian("a4", 4);
        assert_eq!(a.lower_central_series().dims(), vec![4]);
        assert_eq!(a.center().dim(), 4);
    }

    #[test]
    fn non_nilpotent_series_stabilizes() {
        // [x, y] = y
        let alg = LieAlgebra::new("aff", default_names(2), vec![(0, 1, vec![(1, rat(1))])]).unwrap();
        let lcs = alg.lower_central_series();
        assert!(!lcs.nilpotent);
        assert_eq!(lcs.dims(), vec![2, 1]);
        assert_eq!(lcs.step(), None);
    }

    #[test]
    fn from_matrices_recovers_heisenberg() {
        let e12 = Matrix::unit(3, 3, 0, 1);
        let e23 = Matrix::unit(3, 3, 1, 2);
        let e13 = Matrix::unit(3, 3, 0, 2);
        let alg =
            LieAlgebra::from_matrices("h", default_names(3), &[e12, e23, e13.clone()]).unwrap();
        assert_eq!(alg, heisenberg_named("h"));

        let not_closed = LieAlgebra::from_matrices(
            "bad",
            default_names(2),
            &[Matrix::unit(3, 3, 0, 1), Matrix::unit(3, 3, 1, 2)],
        );
        assert!(not_closed.is_err());
        let dependent =
            LieAlgebra::from_matrices("bad", default_names(2), &[e13.clone(), e13.scale(&rat(2))]);
        assert!(dependent.is_err());
    }

    fn heisenberg_named(name: &str) -> LieAlgebra {
        LieAlgebra::new(name, default_names(3), vec![(0, 1, vec![(2, rat(1))])]).unwrap()
    }

    #[test]
    fn ad_columns_are_brackets() {
        let h = heisenberg();
        let ad_x = h.ad(&unit_vector(3, 0)).unwrap();
        assert_eq!(ad_x.column(1), unit_vector(3, 2));
        assert!(is_zero_vector(&ad_x.column(0)));
    }
}
