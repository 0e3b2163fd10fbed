use serde::Serialize;

use super::closed::{theorem_mainbound, ClosedBounds};
use super::problem::BoundProblem;
use super::solve::solve_exact;
use crate::error::{Error, Result};
use crate::lie::{Filtration, LieAlgebra};

/// Bound data for one admissible central index `p0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerP0 {
    pub p0: usize,
    pub r0_min: u64,
    pub witness: Vec<u64>,
    pub nodes_explored: u64,
    pub closed_first: String,
    pub closed_first_ceil: u64,
    pub closed_second: Option<String>,
    pub closed_second_ceil: Option<u64>,
    pub case: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub algebra: String,
    pub p: usize,
    pub filtration_dims: Vec<usize>,
    pub per_p0: Vec<PerP0>,
    pub mu_nil_lower_bound: u64,
    /// Closed form in terms of the step, `dim n` and `dim z(n)`; needs step ≥ 2.
    #[serde(rename = "theorem_1_2_value")]
    pub center_bound: Option<String>,
    pub center_bound_ceil: Option<u64>,
    pub notes: Vec<String>,
}

/// Lower bound for the minimal dimension of a faithful nilrepresentation of
/// `alg`, using `filtration` or the default `C^k + z` chain.
pub fn lower_bound_report(alg: &LieAlgebra, filtration: Option<&Filtration>) -> Result<BoundReport> {
    let series = alg.lower_central_series();
    if !series.nilpotent {
        return Err(Error::NotNilpotent(format!(
            "{} is not nilpotent; a faithful nilrepresentation cannot exist",
            alg.name()
        )));
    }
    let filt = match filtration {
        Some(f) => {
            let report = f.validate(alg);
            if !report.is_valid() {
                return Err(Error::InvalidFiltration(format!("{:?}", report.failures)));
            }
            f.clone()
        }
        None => Filtration::default_for(alg)?,
    };
    let dims = filt.dims();

    let mut per_p0 = Vec::new();
    for p0 in filt.admissible_p0(alg) {
        let prob = BoundProblem::from_dims(p0, &dims)?;
        let sol = solve_exact(&prob);
        let closed = ClosedBounds::compute(p0, prob.n(1), prob.n(p0))?;
        let (closed_second, closed_second_ceil, case) = match &closed.second {
            Some((s, case)) => (Some(s.decimal()), Some(s.ceil()), case.as_str().to_string()),
            None => (None, None, "none".to_string()),
        };
        per_p0.push(PerP0 {
            p0,
            r0_min: sol.r0_min,
            witness: sol.witness,
            nodes_explored: sol.nodes_explored,
            closed_first: closed.first.decimal(),
            closed_first_ceil: closed.first.ceil(),
            closed_second,
            closed_second_ceil,
            case,
        });
    }
    let mu_nil_lower_bound = per_p0
        .iter()
        .map(|r| r.r0_min)
        .max()
        .ok_or_else(|| Error::Internal("filtration has no central level".into()))?;

    let (center_bound, center_bound_ceil) = match series.step() {
        Some(step) if step >= 2 => {
            let (value, _) = theorem_mainbound(step, alg.dim() as u64, alg.center().dim() as u64)?;
            (Some(value.decimal()), Some(value.ceil()))
        }
        _ => (None, None),
    };

    Ok(BoundReport {
        algebra: alg.name().to_string(),
        p: filt.p(),
        filtration_dims: dims,
        per_p0,
        mu_nil_lower_bound,
        center_bound,
        center_bound_ceil,
        notes: vec![
            "lower bound for mu_nil (faithful nilrepresentations); input required to be nilpotent".into(),
            "mu_nil_lower_bound uses only the exact minimum r0_min".into(),
            "closed_second is informational: it can exceed r0_min, e.g. p0 = 2, n = (20, 3) has r0_min 8 below 2*sqrt(17)".into(),
        ],
    })
}
