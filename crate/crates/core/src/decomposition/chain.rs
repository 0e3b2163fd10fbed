use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{combine, rat, Matrix, Rational, Subspace, Vector};
use crate::lie::{CoordinateSolver, Filtration, Representation};

/// A decreasing chain `T_p ⊆ … ⊆ T_1` of subspaces of `End(V)`.
///
/// Operators are stored once, as a linearly independent list; each level is a
/// subspace of the coordinate space of that list. For a faithful
/// representation the list is `ρ(x_1), …, ρ(x_n)` and level coordinates are
/// algebra coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorChain {
    dim_v: usize,
    operators: Vec<Matrix>,
    levels: Vec<Subspace>,
}

impl OperatorChain {
    /// The chain `ρ(n_1) ⊇ … ⊇ ρ(n_p)`; `rep` must be a faithful nilrepresentation.
    pub fn from_representation(rep: &Representation, filt: &Filtration) -> Result<Self> {
        rep.check_faithful_nilrepresentation()?;
        let report = filt.validate(rep.algebra());
        if !report.is_valid() {
            return Err(Error::InvalidFiltration(format!("{:?}", report.failures)));
        }
        Self::new(rep.dim_v(), rep.matrices().to_vec(), filt.levels().to_vec())
    }

    /// Levels given by spanning sets of `dim_v × dim_v` matrices, outermost first.
    pub fn from_level_matrices(dim_v: usize, levels: &[Vec<Matrix>]) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Precondition("operator chain needs at least one level".into()));
        }
        let len = dim_v * dim_v;
        let mut flat = Vec::new();
        for m in levels.iter().flatten() {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::DimensionMismatch {
                    context: "chain operator",
                    expected: dim_v,
                    found: m.rows().max(m.cols()),
                });
            }
            flat.push(m.to_vector());
        }
        let outer = Subspace::span(len, &flat)?;
        let basis = outer.basis_vectors();
        let solver = CoordinateSolver::new(&basis, len)?;
        let operators = basis
            .iter()
            .map(|v| Matrix::from_vector(dim_v, dim_v, v.clone()))
            .collect::<Result<Vec<_>>>()?;
        let subspaces = levels
            .iter()
            .map(|ms| {
                let coords: Vec<Vector> = ms
                    .iter()
                    .map(|m| solver.solve(&m.to_vector()).expect("inside the outer span"))
                    .collect();
                Subspace::span(basis.len(), &coords)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim_v, operators, subspaces)
    }

    fn new(dim_v: usize, operators: Vec<Matrix>, levels: Vec<Subspace>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Precondition("operator chain needs at least one level".into()));
        }
        for (k, pair) in levels.windows(2).enumerate() {
            if !pair[0].contains(&pair[1])? {
                return Err(Error::Precondition(format!(
                    "chain level {} is not contained in level {}",
                    k + 2,
                    k + 1
                )));
            }
        }
        if levels.last().is_some_and(Subspace::is_zero) {
            return Err(Error::Precondition("deepest chain level is zero".into()));
        }
        Ok(OperatorChain {
            dim_v,
            operators,
            levels,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn p(&self) -> usize {
        self.levels.len()
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.operators
    }

    /// `T_k`, 1-based.
    pub fn level(&self, k: usize) -> &Subspace {
        &self.levels[k - 1]
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.levels
    }

    /// Number of coordinates used for levels.
    pub fn coordinate_dim(&self) -> usize {
        self.operators.len()
    }

    /// The operator with the given coordinates.
    pub fn operator(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (c, m) in x.iter().zip(&self.operators) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// `M_v`, whose column `i` is `operators[i]·v`; then `X·v = M_v x`.
    pub fn evaluation(&self, v: &[Rational]) -> Matrix {
        let columns: Vec<Vector> = self.operators.iter().map(|m| m.mul_vec(v)).collect();
        Matrix::from_columns(&columns, self.dim_v).expect("columns of length dim V")
    }

    /// `S·v` as a subspace of `V`.
    pub fn apply(&self, s: &Subspace, v: &[Rational]) -> Subspace {
        let m = self.evaluation(v);
        s.image(&m).expect("level coordinates match the operator count")
    }

    /// `{X ∈ S : X·v = 0}`.
    pub fn annihilator_in(&self, s: &Subspace, v: &[Rational]) -> Subspace {
        let m = self.evaluation(v);
        // columns are M_v applied to the basis of S
        let basis = s.basis_vectors();
        if basis.is_empty() {
            return s.clone();
        }
        let cols: Vec<Vector> = basis.iter().map(|b| m.mul_vec(b)).collect();
        let image = Matrix::from_columns(&cols, self.dim_v).expect("columns of length dim V");
        let coeffs = image.kernel().basis_vectors();
        let vectors: Vec<Vector> = coeffs
            .iter()
            .map(|c| combine(c, &basis, s.ambient_dim()))
            .collect();
        Subspace::span(s.ambient_dim(), &vectors).expect("combinations have the ambient length")
    }

    /// `S·V`, the span of all images.
    pub fn range_of(&self, s: &Subspace) -> Subspace {
        let mut images = Vec::new();
        for x in s.basis_vectors() {
            let op = self.operator(&x);
            images.extend(op.column_vectors());
        }
        Subspace::span(self.dim_v, &images).expect("columns of length dim V")
    }
}

/// `(dim S_1·v, …, dim S_q·v)`.
pub fn rank_profile(chain: &OperatorChain, levels: &[Subspace], v: &[Rational]) -> Vec<usize> {
    let m = chain.evaluation(v);
    levels
        .iter()
        .map(|s| {
            if s.is_zero() {
                0
            } else {
                (&m * &s.basis().transpose()).rank()
            }
        })
        .collect()
}

/// Initial sampling range and batch sizes for [`find_rank_vector`].
pub const INITIAL_RANGE: i64 = 16;
const BATCH: usize = 8;
const CONFIRM: usize = 2;
const MAX_ROUNDS: usize = 12;

/// A vector reaching the generic value of `dim S·v` on every level at once.
///
/// Integer vectors are drawn uniformly from `[-M, M]^dim V`. A batch of 8 is
/// scored; a sample whose dimension tuple dominates the whole batch is kept if
/// two more samples do not beat it anywhere. Otherwise `M` doubles.
pub fn find_rank_vector(
    chain: &OperatorChain,
    levels: &[Subspace],
    rng: &mut ChaCha8Rng,
) -> Result<(Vector, Vec<usize>)> {
    let mut range = INITIAL_RANGE;
    for _ in 0..MAX_ROUNDS {
        let batch: Vec<(Vector, Vec<usize>)> = (0..BATCH)
            .map(|_| {
                let v = sample(chain.dim_v(), range, rng);
                let dims = rank_profile(chain, levels, &v);
                (v, dims)
            })
            .collect();
        let best = batch
            .iter()
            .find(|(_, d)| batch.iter().all(|(_, other)| dominates(d, other)));
        if let Some((v, dims)) = best {
            let confirmed = (0..CONFIRM).all(|_| {
                let w = sample(chain.dim_v(), range, rng);
                dominates(dims, &rank_profile(chain, levels, &w))
            });
            if confirmed {
                return Ok((v.clone(), dims.clone()));
            }
        }
        range = range.saturating_mul(2);
    }
    Err(Error::SamplingExhausted {
        rounds: MAX_ROUNDS,
        range,
    })
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

fn sample(dim: usize, range: i64, rng: &mut ChaCha8Rng) -> Vector {
    (0..dim).map(|_| rat(rng.random_range(-range..=range))).collect()
}
