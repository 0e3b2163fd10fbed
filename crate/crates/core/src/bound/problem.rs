use serde::Serialize;

use crate::error::{Error, Result};

/// Integer profile `(a_0, …, a_p)`.
pub type Profile = Vec<u64>;

/// The data `(p, p0, n_1 … n_p)` of the integer program
///
/// ```text
/// minimize   r_0 = a_0 + … + a_p          (r_k = a_k + … + a_p)
/// subject to a_0, a_p ≥ 1, a_k ≥ 0
///            Σ_{i=0}^{p0-k} a_i r_{k+i} ≥ n_k    for k = 1..p0
///            a_0 r_k ≥ n_k                     for k = p0..p
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundProblem {
    p0: usize,
    n: Vec<u64>,
}

impl BoundProblem {
    /// `n` must be a weakly decreasing list of positive integers, `1 ≤ p0 ≤ len(n)`.
    pub fn new(p0: usize, n: Vec<u64>) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::InvalidParameter("need at least one dimension".into()));
        }
        if n.iter().any(|&x| x == 0) {
            return Err(Error::InvalidParameter(format!(
                "dimensions must be positive, got {n:?}"
            )));
        }
        if n.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "dimensions must be weakly decreasing, got {n:?}"
            )));
        }
        if p0 == 0 || p0 > n.len() {
            return Err(Error::InvalidParameter(format!(
                "p0 = {p0} outside 1..={}",
                n.len()
            )));
        }
        Ok(BoundProblem { p0, n })
    }

    /// Builds a problem from level dimensions, dropping trailing zeros first.
    /// Fails if `p0` points into the dropped tail.
    pub fn from_dims(p0: usize, dims: &[usize]) -> Result<Self> {
        let mut n: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
        while n.last() == Some(&0) {
            n.pop();
        }
        BoundProblem::new(p0, n)
    }

    pub fn p(&self) -> usize {
        self.n.len()
    }

    pub fn p0(&self) -> usize {
        self.p0
    }

    pub fn dims(&self) -> &[u64] {
        &self.n
    }

    /// `n_k`, 1-based.
    pub fn n(&self, k: usize) -> u64 {
        self.n[k - 1]
    }

    /// The profile `(n_1, 0, …, 0, 1)`, feasible for every problem.
    pub fn trivial_profile(&self) -> Profile {
        let mut a = vec![0; self.p() + 1];
        a[0] = self.n(1);
        a[self.p()] = 1;
        a
    }
}

/// `r_k = a_k + … + a_p` for `k = 0..=p`.
pub fn suffix_sums(a: &[u64]) -> Vec<u64> {
    let mut r = vec![0; a.len()];
    let mut acc = 0;
    for k in (0..a.len()).rev() {
        acc += a[k];
        r[k] = acc;
    }
    r
}

pub fn is_feasible(prob: &BoundProblem, a: &[u64]) -> Result<bool> {
    if a.len() != prob.p() + 1 {
        return Err(Error::DimensionMismatch {
            context: "profile length",
            expected: prob.p() + 1,
            found: a.len(),
        });
    }
    Ok(feasible(prob, a))
}

pub(crate) fn feasible(prob: &BoundProblem, a: &[u64]) -> bool {
    let p = prob.p();
    let p0 = prob.p0();
    if a[0] == 0 || a[p] == 0 {
        return false;
    }
    let r = suffix_sums(a);
    for k in 1..=p0 {
        let lhs: u128 = (0..=p0 - k).map(|i| a[i] as u128 * r[k + i] as u128).sum();
        if lhs < prob.n(k) as u128 {
            return false;
        }
    }
    (p0..=p).all(|k| a[0] as u128 * r[k] as u128 >= prob.n(k) as u128)
}
