use serde::Serialize;

use super::algorithm::Decomposition;
use super::chain::OperatorChain;
use crate::bound::{is_feasible, BoundProblem, Profile};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Subspace, Vector};

/// The ordered basis `B = (X_1 v_1, …, X_{r_1} v_1, w_1, …, w_q, v_1, …, v_{s_{p0}})`.
///
/// `x_basis` is a basis of `T_{1,1}` whose first `r_k` elements span `T_{k,1}`.
/// Columns of `basis` are the elements of `B` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub p0: usize,
    pub r: Vec<usize>,
    pub x_basis: Vec<Vector>,
    pub q: usize,
    pub s_p0: usize,
    pub w: Subspace,
    pub v0: Subspace,
    pub basis: Matrix,
    pub inverse: Matrix,
}

pub fn build_adapted_basis(dec: &Decomposition, chain: &OperatorChain, p0: usize) -> Result<AdaptedBasis> {
    let p = dec.p();
    if p0 == 0 || p0 > p {
        return Err(Error::InvalidParameter(format!("p0 = {p0} outside 1..={p}")));
    }
    let coord = chain.coordinate_dim();
    let dim_v = chain.dim_v();
    let r = dec.r();

    // extend a basis of T_{p,1} through T_{p-1,1}, …, T_{1,1}
    let mut x_basis: Vec<Vector> = Vec::new();
    let mut running = Subspace::zero(coord);
    for k in (1..=p).rev() {
        for x in dec.cell(k, 1).basis_vectors() {
            if !running.contains_vector(&x)? {
                running = running.sum(&Subspace::span(coord, &[x.clone()])?)?;
                x_basis.push(x);
            }
        }
        if x_basis.len() != r[k - 1] {
            return Err(Error::Internal(format!("T_{{{k},1}} does not contain T_{{{},1}}", k + 1)));
        }
    }

    let v1 = &dec.vectors[0];
    let images: Vec<Vector> = x_basis.iter().map(|x| chain.operator(x).mul_vec(v1)).collect();
    let s_p0 = dec.partition[p0 - 1];
    let v0_vectors: Vec<Vector> = dec.vectors[..s_p0].to_vec();
    let mut head = images.clone();
    head.extend(v0_vectors.iter().cloned());
    let head_span = Subspace::span(dim_v, &head)?;
    if head_span.dim() != head.len() {
        return Err(Error::Internal(
            "images of v_1 and v_1..v_{s_p0} are linearly dependent".into(),
        ));
    }
    let w = Subspace::complement_extending(&Subspace::full(dim_v), &head_span, &Subspace::zero(dim_v))?;
    let q = w.dim();

    let mut columns = images;
    columns.extend(w.basis_vectors());
    columns.extend(v0_vectors.iter().cloned());
    assemble(p0, r, x_basis, q, s_p0, w, Subspace::span(dim_v, &v0_vectors)?, columns, dim_v)
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    p0: usize,
    r: Vec<usize>,
    x_basis: Vec<Vector>,
    q: usize,
    s_p0: usize,
    w: Subspace,
    v0: Subspace,
    columns: Vec<Vector>,
    dim_v: usize,
) -> Result<AdaptedBasis> {
    if columns.len() != dim_v {
        return Err(Error::Internal(format!(
            "adapted basis has {} elements in dimension {dim_v}",
            columns.len()
        )));
    }
    let basis = Matrix::from_columns(&columns, dim_v)?;
    let inverse = basis
        .inverse()
        .ok_or_else(|| Error::Internal("adapted basis is singular".into()))?;
    Ok(AdaptedBasis {
        p0,
        r,
        x_basis,
        q,
        s_p0,
        w,
        v0,
        basis,
        inverse,
    })
}

impl AdaptedBasis {
    pub fn r1(&self) -> usize {
        self.r[0]
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `[X]_B = B⁻¹ X B`.
    pub fn matrix_of(&self, op: &Matrix) -> Matrix {
        &(&self.inverse * op) * &self.basis
    }

    /// The same basis with `X_1, …, X_{r_1}` (and their images) put in the given order.
    pub fn with_image_order(&self, order: &[usize], chain: &OperatorChain, v1: &[crate::exact::Rational]) -> Result<Self> {
        let r1 = self.r1();
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..r1).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter(format!("{order:?} is not a permutation of 0..{r1}")));
        }
        let x_basis: Vec<Vector> = order.iter().map(|&i| self.x_basis[i].clone()).collect();
        let mut columns: Vec<Vector> = x_basis.iter().map(|x| chain.operator(x).mul_vec(v1)).collect();
        columns.extend(self.basis.column_vectors().into_iter().skip(r1));
        assemble(
            self.p0,
            self.r.clone(),
            x_basis,
            self.q,
            self.s_p0,
            self.w.clone(),
            self.v0.clone(),
            columns,
            self.basis.rows(),
        )
    }
}

/// Zero patterns of `[X]_B` for `X` running over a basis of every `T_{k,j}`.
/// Block rows and columns follow `V = T_{1,1}v_1 ⊕ W ⊕ V_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    /// `j = 1`: the first column of `A_{1,3}` vanishes below row `r_k`.
    pub first_column_rows: bool,
    /// `j = 1`: that column determines `X`.
    pub first_column_injective: bool,
    /// `j ≥ 2`: `A_{2,*} = A_{3,*} = 0`.
    pub lower_blocks_zero: bool,
    /// `j ≥ 2`: the first `j − 1` columns of `A_{1,3}` vanish.
    pub leading_columns_zero: bool,
    /// `j ≥ 2`: rows below `r_k` of `A_{1,*}` vanish.
    pub rows_below_rk_zero: bool,
    /// `j ≥ 2`: column `i ≤ r_h` of `A_{1,1}` vanishes below row `r_{k+h}`.
    pub staircase: bool,
    /// `j ≥ 2`, `k ≥ p0`: `A_{1,1} = 0`.
    pub deep_a11_zero: bool,
    pub operators_checked: usize,
    pub failures: Vec<String>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Needs the chain to come from a filtration (`[T_k, T_h] ⊆ T_{k+h}`) for the
/// staircase pattern to hold.
pub fn verify_block_structure(ab: &AdaptedBasis, dec: &Decomposition, chain: &OperatorChain) -> BlockReport {
    let p = dec.p();
    let n = ab.len();
    let r1 = ab.r1();
    let c13 = r1 + ab.q;
    let r_at = |m: usize| if m >= 1 && m <= p { ab.r[m - 1] } else { 0 };
    let mut report = BlockReport {
        first_column_rows: true,
        first_column_injective: true,
        lower_blocks_zero: true,
        leading_columns_zero: true,
        rows_below_rk_zero: true,
        staircase: true,
        deep_a11_zero: true,
        operators_checked: 0,
        failures: Vec::new(),
    };
    let zero = |m: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        rows.clone()
            .all(|i| cols.clone().all(|j| num_traits::Zero::is_zero(m.get(i, j))))
    };

    for k in 1..=p {
        let rk = r_at(k);
        for j in 1..=dec.partition[k - 1] {
            let xs = dec.cell(k, j).basis_vectors();
            let mut first_columns = Vec::new();
            for (idx, x) in xs.iter().enumerate() {
                let m = ab.matrix_of(&chain.operator(x));
                report.operators_checked += 1;
                let tag = format!("X{} ∈ T_{{{k},{j}}}", idx + 1);
                if j == 1 {
                    if !zero(&m, rk..r1, c13..c13 + 1) {
                        report.first_column_rows = false;
                        report.failures.push(format!("{tag}: A13 first column nonzero below row r_{k}"));
                    }
                    first_columns.push((0..r1).map(|i| m.get(i, c13).clone()).collect::<Vector>());
                    continue;
                }
                if !zero(&m, r1..n, 0..n) {
                    report.lower_blocks_zero = false;
                    report.failures.push(format!("{tag}: A2*/A3* nonzero"));
                }
                let lead = (j - 1).min(ab.s_p0);
                if !zero(&m, 0..r1, c13..c13 + lead) {
                    report.leading_columns_zero = false;
                    report.failures.push(format!("{tag}: first {lead} columns of A13 nonzero"));
                }
                if !zero(&m, rk..r1, 0..n) {
                    report.rows_below_rk_zero = false;
                    report.failures.push(format!("{tag}: A1* nonzero below row r_{k}"));
                }
                for h in 1..=p {
                    if !zero(&m, r_at(k + h)..r1, 0..r_at(h)) {
                        report.staircase = false;
                        report.failures.push(format!("{tag}: staircase broken at h = {h}"));
                    }
                }
                if k >= ab.p0 && !zero(&m, 0..r1, 0..r1) {
                    report.deep_a11_zero = false;
                    report.failures.push(format!("{tag}: A11 nonzero with k ≥ p0"));
                }
            }
            if j == 1 && !first_columns.is_empty() {
                let rank = Matrix::from_rows_with_cols(first_columns, r1).map(|m| m.rank()).unwrap_or(0);
                if rank != xs.len() {
                    report.first_column_injective = false;
                    report.failures.push(format!("T_{{{k},1}}: A13 first column is not injective"));
                }
            }
        }
    }
    report
}

/// `a_0 = dim V − r_1`, `a_h = r_h − r_{h+1}`, `a_p = r_p`, checked against the
/// integer program built from the level dimensions.
pub fn extract_profile(dec: &Decomposition, chain: &OperatorChain, p0: usize) -> Result<Profile> {
    let r: Vec<u64> = dec.r().iter().map(|&x| x as u64).collect();
    let dim_v = chain.dim_v() as u64;
    let p = r.len();
    if r[0] > dim_v || r.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!("dims r = {r:?} are not a chain in dim V = {dim_v}")));
    }
    let mut a = Vec::with_capacity(p + 1);
    a.push(dim_v - r[0]);
    for h in 0..p - 1 {
        a.push(r[h] - r[h + 1]);
    }
    a.push(r[p - 1]);
    if a[0] == 0 || a[p] == 0 {
        return Err(Error::Internal(format!("profile {a:?} has a zero end")));
    }
    if a.iter().sum::<u64>() != dim_v {
        return Err(Error::Internal(format!("profile {a:?} does not sum to dim V")));
    }
    let dims: Vec<usize> = chain.levels().iter().map(Subspace::dim).collect();
    let prob = BoundProblem::from_dims(p0, &dims)?;
    if !is_feasible(&prob, &a)? {
        return Err(Error::Internal(format!(
            "profile {a:?} violates the constraints for dims {dims:?}, p0 = {p0}"
        )));
    }
    Ok(a)
}
