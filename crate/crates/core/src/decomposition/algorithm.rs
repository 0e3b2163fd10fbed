use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chain::{find_rank_vector, OperatorChain};
use crate::error::{Error, Result};
use crate::exact::{Subspace, Vector};
use crate::lie::{Filtration, Representation};

/// Output of the rank-vector algorithm on a chain `T_p ⊆ … ⊆ T_1`.
///
/// `grid[k-1][j-1]` is `T_{k,j}` for `1 ≤ j ≤ s_k`, held in the chain's
/// operator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub partition: Vec<usize>,
    pub vectors: Vec<Vector>,
    pub grid: Vec<Vec<Subspace>>,
    /// Generic dimensions `dim R_k·v_i` found for each step, levels `1..=q`.
    pub step_dims: Vec<Vec<usize>>,
    pub seed: u64,
}

impl Decomposition {
    pub fn p(&self) -> usize {
        self.partition.len()
    }

    /// `T_{k,j}`, 1-based.
    pub fn cell(&self, k: usize, j: usize) -> &Subspace {
        &self.grid[k - 1][j - 1]
    }

    /// `r_k = dim T_{k,1}`.
    pub fn r(&self) -> Vec<usize> {
        self.grid.iter().map(|row| row[0].dim()).collect()
    }

    pub fn grid_dims(&self) -> Vec<Vec<usize>> {
        self.grid
            .iter()
            .map(|row| row.iter().map(Subspace::dim).collect())
            .collect()
    }
}

/// Runs the algorithm on `ρ(n_1) ⊇ … ⊇ ρ(n_p)`.
pub fn decompose(rep: &Representation, filt: &Filtration, seed: u64) -> Result<Decomposition> {
    let chain = OperatorChain::from_representation(rep, filt)?;
    decompose_chain(&chain, seed)
}

/// Steps:
/// 1. `R_k = T_k`, `q = p`.
/// 2. Pick a rank vector `v_i` for `R_q ⊆ … ⊆ R_1`.
/// 3. `R̃_k = Ann_{R_k}(v_i)`; choose `T_{k,i}` with `R_k = T_{k,i} ⊕ R̃_k` and
///    `T_{k,i} ⊇ T_{k+1,i}`, going from `k = q` up to `k = 1`.
/// 4. Stop if `R̃_1 = 0`, else `q` = largest `j` with `R̃_j ≠ 0`, `R_k = R̃_k`, repeat.
pub fn decompose_chain(chain: &OperatorChain, seed: u64) -> Result<Decomposition> {
    let p = chain.p();
    let coord = chain.coordinate_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining: Vec<Subspace> = chain.levels().to_vec();
    let mut q = p;
    let mut partition = vec![0usize; p];
    let mut vectors = Vec::new();
    let mut grid: Vec<Vec<Subspace>> = vec![Vec::new(); p];
    let mut step_dims = Vec::new();

    loop {
        let (v, dims) = find_rank_vector(chain, &remaining[..q], &mut rng)?;
        let annihilators: Vec<Subspace> = remaining[..q]
            .iter()
            .map(|r| chain.annihilator_in(r, &v))
            .collect();
        if annihilators[q - 1] == remaining[q - 1] {
            return Err(Error::Internal(format!(
                "rank vector {} annihilates the nonzero level {q}",
                vectors.len() + 1
            )));
        }
        let mut below = Subspace::zero(coord);
        let mut column = vec![Subspace::zero(coord); q];
        for k in (0..q).rev() {
            let cell = Subspace::complement_extending(&remaining[k], &annihilators[k], &below)?;
            column[k] = cell.clone();
            below = cell;
        }
        for (k, cell) in column.into_iter().enumerate() {
            partition[k] += 1;
            grid[k].push(cell);
        }
        vectors.push(v);
        step_dims.push(dims);

        if annihilators[0].is_zero() {
            break;
        }
        q = annihilators
            .iter()
            .rposition(|r| !r.is_zero())
            .expect("first annihilator is nonzero")
            + 1;
        remaining = annihilators[..q].to_vec();
    }

    Ok(Decomposition {
        partition,
        vectors,
        grid,
        step_dims,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Matrix;
    use crate::families::{make_abelian, make_heisenberg, make_nabc};

    fn run(rep: &Representation, seed: u64) -> Decomposition {
        let filt = Filtration::default_for(rep.algebra()).unwrap();
        decompose(rep, &filt, seed).unwrap()
    }

    #[test]
    fn heisenberg_partition() {
        let dec = run(&make_heisenberg(1).unwrap(), 42);
        assert_eq!(dec.partition, vec![2, 1]);
        assert_eq!(dec.r(), vec![2, 1]);
        assert_eq!(dec.vectors.len(), 2);
    }

    #[test]
    fn nabc_112_partition() {
        let dec = run(&make_nabc(1, 1, 2).unwrap(), 0);
        assert_eq!(dec.partition, vec![3, 2]);
        assert_eq!(dec.r(), vec![2, 1]);
    }

    #[test]
    fn abelian_one() {
        let rep = make_abelian(1).unwrap();
        let dec = run(&rep, 0);
        assert_eq!(dec.partition, vec![1]);
        assert_eq!(dec.r(), vec![1]);
    }

    #[test]
    fn same_seed_same_output() {
        let rep = make_nabc(1, 2, 1).unwrap();
        assert_eq!(run(&rep, 5), run(&rep, 5));
    }

    #[test]
    fn non_faithful_input_is_rejected() {
        let rep = make_heisenberg(1).unwrap();
        let bad = Representation::new(rep.algebra().clone(), 3, vec![Matrix::zeros(3, 3); 3]).unwrap();
        let filt = Filtration::default_for(rep.algebra()).unwrap();
        assert!(decompose(&bad, &filt, 0).is_err());
    }
}
