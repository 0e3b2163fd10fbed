//! JSON file formats for algebras, representations and filtrations.
//!
//! Indices in files are 1-based; rationals are `"num/den"` text.
//!
//! ```json
//! {"name": "h3", "dim": 3, "basis": ["x", "y", "z"],
//!  "brackets": [{"i": 1, "j": 2, "terms": [[3, "1"]]}]}
//! ```
//!
//! A representation file inlines its algebra:
//! `{"algebra": {...}, "dimV": 3, "matrices": [[["0", "1", "0"], ...], ...]}`.
//! A filtration file lists each level by spanning coordinate vectors:
//! `{"levels": [[["1", "0", "0"], ...], ...], "p0": 2}` (`p0` optional).

use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use super::{Filtration, LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::exact::{format_rational, format_vector, parse_rational, parse_vector, Matrix, Rational, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub algebra: AlgebraFile,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationFile {
    pub levels: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p0: Option<usize>,
}

impl From<&LieAlgebra> for AlgebraFile {
    fn from(alg: &LieAlgebra) -> Self {
        let brackets = alg
            .structure_constants()
            .iter()
            .map(|(&(i, j), terms)| BracketEntry {
                i: i + 1,
                j: j + 1,
                terms: terms
                    .iter()
                    .map(|(k, c)| (k + 1, format_rational(c)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: alg.name().to_string(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            brackets,
        }
    }
}

impl AlgebraFile {
    /// Builds the algebra and checks the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let names = if self.basis.is_empty() {
            super::algebra::default_names(self.dim)
        } else if self.basis.len() == self.dim {
            self.basis.clone()
        } else {
            return Err(Error::DimensionMismatch {
                context: "basis labels",
                expected: self.dim,
                found: self.basis.len(),
            });
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 {
                return Err(Error::InvalidAlgebra("bracket indices are 1-based".into()));
            }
            if b.i >= b.j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({}, {}) must have i < j",
                    b.i, b.j
                )));
            }
            let mut terms = Vec::with_capacity(b.terms.len());
            for (k, c) in &b.terms {
                if *k == 0 {
                    return Err(Error::InvalidAlgebra("term indices are 1-based".into()));
                }
                terms.push((k - 1, parse_rational(c)?));
            }
            brackets.push((b.i - 1, b.j - 1, terms));
        }
        let alg = LieAlgebra::new(self.name.clone(), names, brackets)?;
        alg.check_jacobi()?;
        Ok(alg)
    }
}

impl From<&Representation> for RepresentationFile {
    fn from(rep: &Representation) -> Self {
        RepresentationFile {
            algebra: rep.algebra().into(),
            dim_v: rep.dim_v(),
            matrices: rep.matrices().iter().map(matrix_to_text).collect(),
        }
    }
}

impl RepresentationFile {
    /// Builds the representation; checks shapes and the Jacobi identity only.
    pub fn to_representation(&self) -> Result<Representation> {
        let algebra = self.algebra.to_algebra()?;
        let matrices = self
            .matrices
            .iter()
            .map(|m| matrix_from_text(m, self.dim_v))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(algebra, self.dim_v, matrices)
    }
}

impl FiltrationFile {
    pub fn from_filtration(f: &Filtration) -> Self {
        FiltrationFile {
            levels: f
                .levels()
                .iter()
                .map(|s| s.basis_vectors().iter().map(|v| format_vector(v)).collect())
                .collect(),
            p0: Some(f.p0()),
        }
    }

    /// Parses and validates the filtration against `alg`.
    pub fn to_filtration(&self, alg: &LieAlgebra) -> Result<Filtration> {
        let levels = self
            .levels
            .iter()
            .map(|vs| {
                let vs = vs.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>>>()?;
                Subspace::span(alg.dim(), &vs)
            })
            .collect::<Result<Vec<_>>>()?;
        Filtration::checked(alg, levels, self.p0)
    }
}

pub fn matrix_to_text(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| format_vector(r)).collect()
}

pub fn matrix_from_text(rows: &[Vec<String>], dim: usize) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(Error::DimensionMismatch {
            context: "matrix rows",
            expected: dim,
            found: rows.len(),
        });
    }
    let rows = rows.iter().map(|r| parse_vector(r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows_with_cols(rows, dim)
}

pub fn algebra_to_json(alg: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from(alg)).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

pub fn representation_to_json(rep: &Representation) -> String {
    serde_json::to_string_pretty(&RepresentationFile::from(rep)).expect("serializable")
}

pub fn representation_from_json(text: &str) -> Result<Representation> {
    let file: RepresentationFile = serde_json::from_str(text)?;
    file.to_representation()
}

pub fn read_algebra(path: &Path) -> Result<LieAlgebra> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

pub fn read_representation(path: &Path) -> Result<Representation> {
    representation_from_json(&std::fs::read_to_string(path)?)
}

pub fn read_filtration(path: &Path, alg: &LieAlgebra) -> Result<Filtration> {
    let file: FiltrationFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    file.to_filtration(alg)
}

pub(crate) fn serialize_vector<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    format_vector(v).serialize(s)
}
