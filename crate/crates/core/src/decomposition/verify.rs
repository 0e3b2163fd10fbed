use serde::Serialize;

use super::algorithm::Decomposition;
use super::chain::OperatorChain;
use crate::exact::{Matrix, Subspace};

/// Exact checks of the decomposition properties. `moreover` is `None` when its
/// hypotheses (nilpotent operators, `[T_1, T_{p0}] = 0`) do not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub partition_valid: bool,
    pub direct_sums: bool,
    pub column_nesting: bool,
    pub image_dims: bool,
    pub zero_actions: bool,
    pub image_containment: bool,
    pub independent_vectors: bool,
    pub moreover: Option<bool>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_decomposition(dec: &Decomposition, chain: &OperatorChain, p0: usize) -> VerificationReport {
    let mut failures = Vec::new();
    let p = chain.p();
    let coord = chain.coordinate_dim();
    let s = &dec.partition;

    let partition_valid = s.len() == p
        && dec.grid.len() == p
        && s.windows(2).all(|w| w[0] >= w[1])
        && s.last().is_some_and(|&x| x > 0)
        && s.first() == Some(&dec.vectors.len())
        && dec.grid.iter().zip(s).all(|(row, &n)| row.len() == n);
    if !partition_valid {
        failures.push(format!("partition {s:?} does not match grid or vectors"));
        return VerificationReport {
            partition_valid,
            direct_sums: false,
            column_nesting: false,
            image_dims: false,
            zero_actions: false,
            image_containment: false,
            independent_vectors: false,
            moreover: None,
            failures,
        };
    }

    let mut direct_sums = true;
    for k in 1..=p {
        let row = &dec.grid[k - 1];
        let total: usize = row.iter().map(Subspace::dim).sum();
        let span = row
            .iter()
            .fold(Subspace::zero(coord), |acc, c| acc.sum(c).expect("same ambient"));
        if total != chain.level(k).dim() || &span != chain.level(k) {
            direct_sums = false;
            failures.push(format!("(1) level {k} is not the direct sum of its row"));
        }
    }

    let mut column_nesting = true;
    for k in 1..p {
        for j in 1..=s[k] {
            if !dec.cell(k, j).contains(dec.cell(k + 1, j)).expect("same ambient") {
                column_nesting = false;
                failures.push(format!("(1) T_{{{},{j}}} ⊄ T_{{{k},{j}}}", k + 1));
            }
        }
    }

    let mut image_dims = true;
    let mut zero_actions = true;
    let mut image_containment = true;
    for k in 1..=p {
        for j in 1..=s[k - 1] {
            let cell = dec.cell(k, j);
            if chain.apply(cell, &dec.vectors[j - 1]).dim() != cell.dim() {
                image_dims = false;
                failures.push(format!("(2) dim T_{{{k},{j}}} v_{j} ≠ dim T_{{{k},{j}}}"));
            }
            let range = chain.range_of(cell);
            for i in 1..j {
                if !chain.apply(cell, &dec.vectors[i - 1]).is_zero() {
                    zero_actions = false;
                    failures.push(format!("(3) T_{{{k},{j}}} v_{i} ≠ 0"));
                }
                let target = chain.apply(dec.cell(k, i), &dec.vectors[i - 1]);
                if !target.contains(&range).expect("same ambient") {
                    image_containment = false;
                    failures.push(format!("(4) T_{{{k},{j}}} V ⊄ T_{{{k},{i}}} v_{i}"));
                }
            }
        }
    }

    let independent_vectors = Subspace::span(chain.dim_v(), &dec.vectors)
        .map(|sp| sp.dim() == dec.vectors.len())
        .unwrap_or(false);
    if !independent_vectors {
        failures.push("v_1, …, v_{s_1} are linearly dependent".into());
    }

    let moreover = if moreover_applies(chain, p0) {
        let image = chain.apply(dec.cell(1, 1), &dec.vectors[0]);
        let v0 = Subspace::span(chain.dim_v(), &dec.vectors[..s[p0 - 1]]).expect("vectors of length dim V");
        let ok = image.intersect(&v0).expect("same ambient").is_zero();
        if !ok {
            failures.push(format!("T_{{1,1}} v_1 meets span(v_1..v_{{s_{p0}}})"));
        }
        Some(ok)
    } else {
        None
    };

    VerificationReport {
        partition_valid,
        direct_sums,
        column_nesting,
        image_dims,
        zero_actions,
        image_containment,
        independent_vectors,
        moreover,
        failures,
    }
}

/// `T_1` consists of nilpotent operators and commutes with `T_{p0}`.
///
/// Nilpotency is certified by the flag `V ⊇ T_1 V ⊇ T_1² V ⊇ …` reaching zero,
/// which is sufficient for every element of `T_1` to be nilpotent.
pub fn moreover_applies(chain: &OperatorChain, p0: usize) -> bool {
    if p0 == 0 || p0 > chain.p() {
        return false;
    }
    let outer: Vec<Matrix> = chain.level(1).basis_vectors().iter().map(|x| chain.operator(x)).collect();
    let central: Vec<Matrix> = chain.level(p0).basis_vectors().iter().map(|x| chain.operator(x)).collect();
    let commute = outer
        .iter()
        .all(|a| central.iter().all(|b| Matrix::commutator(a, b).is_zero()));
    commute && flag_reaches_zero(chain.dim_v(), &outer)
}

fn flag_reaches_zero(dim_v: usize, ops: &[Matrix]) -> bool {
    let mut current = Subspace::full(dim_v);
    while !current.is_zero() {
        let mut images = Vec::new();
        for op in ops {
            images.extend(current.image(op).expect("square operators").basis_vectors());
        }
        let next = Subspace::span(dim_v, &images).expect("vectors of length dim V");
        if next.dim() == current.dim() {
            return false;
        }
        current = next;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::algorithm::decompose_chain;
    use crate::families::{make_heisenberg, make_nabc};
    use crate::lie::Filtration;

    fn chain_of(rep: &crate::lie::Representation) -> OperatorChain {
        let filt = Filtration::default_for(rep.algebra()).unwrap();
        OperatorChain::from_representation(rep, &filt).unwrap()
    }

    #[test]
    fn heisenberg_passes() {
        let chain = chain_of(&make_heisenberg(1).unwrap());
        let dec = decompose_chain(&chain, 42).unwrap();
        let report = verify_decomposition(&dec, &chain, 2);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.moreover, Some(true));
    }

    #[test]
    fn nabc_passes_with_moreover() {
        let chain = chain_of(&make_nabc(1, 1, 2).unwrap());
        let dec = decompose_chain(&chain, 0).unwrap();
        let report = verify_decomposition(&dec, &chain, 2);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.moreover, Some(true));
    }

    #[test]
    fn swapped_vectors_break_zero_actions() {
        let chain = chain_of(&make_heisenberg(1).unwrap());
        let mut dec = decompose_chain(&chain, 1).unwrap();
        dec.vectors.swap(0, 1);
        let report = verify_decomposition(&dec, &chain, 2);
        assert!(!report.zero_actions);
        assert!(!report.passed());
    }

    #[test]
    fn moreover_needs_nilpotent_operators() {
        let id = Matrix::identity(2);
        let chain = OperatorChain::from_level_matrices(2, &[vec![id]]).unwrap();
        assert!(!moreover_applies(&chain, 1));
        let dec = decompose_chain(&chain, 0).unwrap();
        let report = verify_decomposition(&dec, &chain, 1);
        assert_eq!(report.moreover, None);
        assert!(report.passed(), "{:?}", report.failures);
    }
}
