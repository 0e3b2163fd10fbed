//! Generators for the benchmark algebras, each with its defining representation.
//!
//! Basis order is fixed so that emitted files are reproducible byte for byte:
//! blocks are visited in row-major order over block positions `(I, J)`, `I < J`,
//! and entries row-major within each block. A basis element is named
//! `E{I}{J}[r,c]` after its block position and the entry inside the block
//! (all 1-based).

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::lie::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Strictly block upper triangular `(p+1) × (p+1)` block matrices, blocks `a × a`.
    Nap { a: usize, p: usize },
    /// Block sizes `a, b, c` on the diagonal, three off-diagonal blocks.
    Nabc { a: usize, b: usize, c: usize },
    /// Heisenberg algebra of dimension `2m + 1`.
    Heisenberg { m: usize },
    Abelian { n: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Representation> {
        match *self {
            FamilySpec::Nap { a, p } => make_nap(a, p),
            FamilySpec::Nabc { a, b, c } => make_nabc(a, b, c),
            FamilySpec::Heisenberg { m } => make_heisenberg(m),
            FamilySpec::Abelian { n } => make_abelian(n),
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Nap { a, p } => write!(f, "n_{{{a},{p}}}"),
            FamilySpec::Nabc { a, b, c } => write!(f, "n_{{{a},{b},{c}}}"),
            FamilySpec::Heisenberg { m } => write!(f, "h_{m}"),
            FamilySpec::Abelian { n } => write!(f, "a_{n}"),
        }
    }
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Matrix units for every entry of every listed block, in basis order.
fn block_units(offsets: &[usize], sizes: &[usize], blocks: &[(usize, usize)]) -> (Vec<Matrix>, Vec<String>) {
    let dim_v: usize = sizes.iter().sum();
    let mut matrices = Vec::new();
    let mut names = Vec::new();
    for &(bi, bj) in blocks {
        for r in 0..sizes[bi] {
            for c in 0..sizes[bj] {
                matrices.push(Matrix::unit(dim_v, dim_v, offsets[bi] + r, offsets[bj] + c));
                names.push(format!("E{}{}[{},{}]", bi + 1, bj + 1, r + 1, c + 1));
            }
        }
    }
    (matrices, names)
}

fn offsets_of(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect()
}

/// `n_{a,p}` in its defining representation of dimension `(p+1)a`.
pub fn make_nap(a: usize, p: usize) -> Result<Representation> {
    positive("a", a)?;
    positive("p", p)?;
    let sizes = vec![a; p + 1];
    let blocks: Vec<(usize, usize)> = (0..=p)
        .flat_map(|i| ((i + 1)..=p).map(move |j| (i, j)))
        .collect();
    let (matrices, names) = block_units(&offsets_of(&sizes), &sizes, &blocks);
    Representation::from_matrix_algebra(FamilySpec::Nap { a, p }.name(), names, matrices)
}

/// `n_{a,b,c}` in its defining representation of dimension `a + b + c`.
pub fn make_nabc(a: usize, b: usize, c: usize) -> Result<Representation> {
    positive("a", a)?;
    positive("b", b)?;
    positive("c", c)?;
    let sizes = [a, b, c];
    let (matrices, names) = block_units(&offsets_of(&sizes), &sizes, &[(0, 1), (0, 2), (1, 2)]);
    Representation::from_matrix_algebra(FamilySpec::Nabc { a, b, c }.name(), names, matrices)
}

/// Heisenberg algebra with basis `x_1…x_m, y_1…y_m, z`, `[x_i, y_i] = z`, acting on
/// `k^{m+2}` by `x_i = E_{1,i+1}`, `y_i = E_{i+1,m+2}`, `z = E_{1,m+2}`.
pub fn make_heisenberg(m: usize) -> Result<Representation> {
    positive("m", m)?;
    let d = m + 2;
    let mut matrices = Vec::with_capacity(2 * m + 1);
    let mut names = Vec::with_capacity(2 * m + 1);
    for i in 1..=m {
        matrices.push(Matrix::unit(d, d, 0, i));
        names.push(format!("x{i}"));
    }
    for i in 1..=m {
        matrices.push(Matrix::unit(d, d, i, d - 1));
        names.push(format!("y{i}"));
    }
    matrices.push(Matrix::unit(d, d, 0, d - 1));
    names.push("z".into());
    Representation::from_matrix_algebra(FamilySpec::Heisenberg { m }.name(), names, matrices)
}

/// Abelian algebra of dimension `n` acting on `k^{n+1}` by `x_j = E_{1,j+1}`.
pub fn make_abelian(n: usize) -> Result<Representation> {
    positive("n", n)?;
    let d = n + 1;
    let matrices = (1..=n).map(|j| Matrix::unit(d, d, 0, j)).collect();
    let names = (1..=n).map(|j| format!("x{j}")).collect();
    Representation::from_matrix_algebra(FamilySpec::Abelian { n }.name(), names, matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Filtration, LieAlgebra};

    fn check_rep(rep: &Representation) {
        assert!(rep.algebra().jacobi().is_valid());
        assert!(rep.validate().is_faithful_nilrepresentation());
    }

    #[test]
    fn nap_dimensions() {
        for (a, p, dim, dim_v) in [(1, 2, 3, 3), (2, 2, 12, 6), (1, 3, 6, 4), (3, 2, 27, 9), (2, 3, 24, 8)] {
            let rep = make_nap(a, p).unwrap();
            assert_eq!(rep.algebra().dim(), dim);
            assert_eq!(rep.dim_v(), dim_v);
            assert_eq!(dim, p * (p + 1) / 2 * a * a);
            assert_eq!(rep.algebra().lower_central_series().terms.len(), p);
            check_rep(&rep);
        }
    }

    #[test]
    fn nabc_dimensions() {
        for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 3, 2), (1, 3, 2), (2, 4, 2)] {
            let rep = make_nabc(a, b, c).unwrap();
            let alg = rep.algebra();
            assert_eq!(alg.dim(), a * b + b * c + a * c);
            assert_eq!(rep.dim_v(), a + b + c);
            assert_eq!(alg.center().dim(), a * c);
            assert_eq!(alg.lower_central_series().step(), Some(2));
            check_rep(&rep);
        }
        let rep = make_nabc(2, 3, 2).unwrap();
        assert_eq!((rep.algebra().dim(), rep.dim_v(), rep.algebra().center().dim()), (16, 7, 4));
    }

    #[test]
    fn nabc_series_and_default_filtration() {
        let alg = make_nabc(1, 1, 2).unwrap().algebra().clone();
        assert_eq!(alg.lower_central_series().dims(), vec![5, 2]);
        let f = Filtration::default_for(&alg).unwrap();
        assert_eq!(f.dims(), vec![5, 2]);
        let alg = make_nabc(1, 1, 4).unwrap().algebra().clone();
        let f = Filtration::default_for(&alg).unwrap();
        assert_eq!((f.dims(), f.p0()), (vec![9, 4], 2));
    }

    #[test]
    fn strictly_upper_4x4() {
        let alg = make_nap(1, 3).unwrap().algebra().clone();
        let f = Filtration::default_for(&alg).unwrap();
        assert_eq!((f.dims(), f.p0()), (vec![6, 3, 1], 3));
        assert_eq!(f.admissible_p0(&alg), vec![3]);
    }

    #[test]
    fn heisenberg_matches_nap_up_to_reordering() {
        let h = make_heisenberg(1).unwrap();
        let n = make_nap(1, 2).unwrap();
        check_rep(&h);
        // nap(1,2) basis: E12, E13, E23; heisenberg(1): x = E12, y = E23, z = E13
        let perm = [0usize, 2, 1];
        let reordered: Vec<Matrix> = perm.iter().map(|&i| n.matrices()[i].clone()).collect();
        assert_eq!(reordered, h.matrices());
        let relabeled =
            LieAlgebra::from_matrices("h_1", h.algebra().basis_names().to_vec(), &reordered).unwrap();
        assert_eq!(&relabeled, h.algebra());
    }

    #[test]
    fn heisenberg_and_abelian() {
        let h2 = make_heisenberg(2).unwrap();
        assert_eq!(h2.algebra().dim(), 5);
        assert_eq!(h2.dim_v(), 4);
        assert_eq!(h2.algebra().center().dim(), 1);
        check_rep(&h2);

        let a4 = make_abelian(4).unwrap();
        assert!(a4.algebra().is_abelian());
        assert_eq!(a4.dim_v(), 5);
        check_rep(&a4);
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(make_nap(0, 2).is_err());
        assert!(make_nap(1, 0).is_err());
        assert!(make_nabc(1, 0, 1).is_err());
        assert!(make_heisenberg(0).is_err());
        assert!(make_abelian(0).is_err());
    }

    #[test]
    fn names_are_block_ordered() {
        let rep = make_nabc(1, 2, 1).unwrap();
        assert_eq!(
            rep.algebra().basis_names(),
            &["E12[1,1]", "E12[1,2]", "E13[1,1]", "E23[1,1]", "E23[2,1]"]
        );
    }
}
