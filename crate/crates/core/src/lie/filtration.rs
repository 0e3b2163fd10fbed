use serde::Serialize;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::Subspace;

/// A decreasing chain `n = n_1 ⊇ n_2 ⊇ … ⊇ n_p ≠ 0` of subspaces with
/// `[n_i, n_j] ⊆ n_{i+j}` (where `n_m = 0` for `m > p`), together with a marked
/// index `p0` such that `n_{p0}` is central.
///
/// Levels are 1-based in the public API. Trailing zero levels are dropped on
/// construction, so `p` always counts nonzero levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    levels: Vec<Subspace>,
    p0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiltrationFailure {
    Empty,
    AmbientMismatch { level: usize, found: usize, expected: usize },
    FirstLevelNotWhole,
    NotDecreasing { level: usize },
    Multiplicativity { i: usize, j: usize },
    P0OutOfRange { p0: usize, p: usize },
    P0NotCentral { p0: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub failures: Vec<FiltrationFailure>,
}

impl FiltrationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Filtration {
    /// Wraps a chain without validating it; trailing zero levels are stripped.
    /// When `p0` is `None` it is set to `p`.
    pub fn new(mut levels: Vec<Subspace>, p0: Option<usize>) -> Self {
        while levels.last().is_some_and(Subspace::is_zero) {
            levels.pop();
        }
        let p0 = p0.unwrap_or(levels.len());
        Filtration { levels, p0 }
    }

    /// Like [`Filtration::new`] but fails unless [`Filtration::validate`] passes.
    /// With `p0 = None` the largest admissible index is used.
    pub fn checked(alg: &LieAlgebra, levels: Vec<Subspace>, p0: Option<usize>) -> Result<Self> {
        let mut f = Filtration::new(levels, p0);
        if p0.is_none() {
            if let Some(&best) = f.admissible_p0(alg).last() {
                f.p0 = best;
            }
        }
        let report = f.validate(alg);
        if !report.is_valid() {
            return Err(Error::InvalidFiltration(format!("{:?}", report.failures)));
        }
        Ok(f)
    }

    /// `n_k = C^k(n) + z(n)` for `k = 1..p`, with `p` the nilpotency step and `p0 = p`.
    pub fn default_for(alg: &LieAlgebra) -> Result<Self> {
        let series = alg.lower_central_series();
        if !series.nilpotent {
            return Err(Error::NotNilpotent(format!(
                "lower central series of {} stabilizes at dimension {}",
                alg.name(),
                series.terms.last().map_or(0, Subspace::dim)
            )));
        }
        if alg.dim() == 0 {
            return Err(Error::InvalidAlgebra("zero-dimensional algebra".into()));
        }
        let center = alg.center();
        let levels = series
            .terms
            .iter()
            .map(|c| c.sum(&center))
            .collect::<Result<Vec<_>>>()?;
        let f = Filtration::new(levels, None);
        let report = f.validate(alg);
        if !report.is_valid() {
            return Err(Error::Internal(format!(
                "default filtration failed validation: {:?}",
                report.failures
            )));
        }
        Ok(f)
    }

    pub fn p(&self) -> usize {
        self.levels.len()
    }

    pub fn p0(&self) -> usize {
        self.p0
    }

    pub fn with_p0(&self, p0: usize) -> Self {
        Filtration {
            levels: self.levels.clone(),
            p0,
        }
    }

    /// `n_k`, 1-based.
    pub fn level(&self, k: usize) -> &Subspace {
        &self.levels[k - 1]
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.levels
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }

    /// All `k` in `1..=p` with `n_k ⊆ z(n)`.
    pub fn admissible_p0(&self, alg: &LieAlgebra) -> Vec<usize> {
        let center = alg.center();
        (1..=self.p())
            .filter(|&k| {
                let level = self.level(k);
                level.ambient_dim() == center.ambient_dim()
                    && center.contains(level).unwrap_or(false)
            })
            .collect()
    }

    pub fn validate(&self, alg: &LieAlgebra) -> FiltrationReport {
        let mut failures = Vec::new();
        let n = alg.dim();
        let p = self.p();
        if p == 0 {
            failures.push(FiltrationFailure::Empty);
            return FiltrationReport { failures };
        }
        for (idx, level) in self.levels.iter().enumerate() {
            if level.ambient_dim() != n {
                failures.push(FiltrationFailure::AmbientMismatch {
                    level: idx + 1,
                    found: level.ambient_dim(),
                    expected: n,
                });
            }
        }
        if !failures.is_empty() {
            return FiltrationReport { failures };
        }
        if !self.levels[0].is_full() {
            failures.push(FiltrationFailure::FirstLevelNotWhole);
        }
        for k in 1..p {
            if !self.levels[k - 1].contains(&self.levels[k]).expect("ambient checked") {
                failures.push(FiltrationFailure::NotDecreasing { level: k + 1 });
            }
        }
        for i in 1..=p {
            for j in i..=p {
                let br = alg
                    .bracket_subspaces(self.level(i), self.level(j))
                    .expect("ambient checked");
                let ok = if i + j > p {
                    br.is_zero()
                } else {
                    self.level(i + j).contains(&br).expect("ambient checked")
                };
                if !ok {
                    failures.push(FiltrationFailure::Multiplicativity { i, j });
                }
            }
        }
        if self.p0 == 0 || self.p0 > p {
            failures.push(FiltrationFailure::P0OutOfRange { p0: self.p0, p });
        } else if !alg.center().contains(self.level(self.p0)).expect("ambient checked") {
            failures.push(FiltrationFailure::P0NotCentral { p0: self.p0 });
        }
        FiltrationReport { failures }
    }
}
