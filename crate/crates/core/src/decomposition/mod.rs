//! Rank-vector decomposition of an operator chain, the adapted basis it
//! induces, and the integer profile read off from it.

mod adapted;
mod algorithm;
mod chain;
mod verify;

use serde::Serialize;

pub use adapted::{build_adapted_basis, extract_profile, verify_block_structure, AdaptedBasis, BlockReport};
pub use algorithm::{decompose, decompose_chain, Decomposition};
pub use chain::{find_rank_vector, rank_profile, OperatorChain, INITIAL_RANGE};
pub use verify::{moreover_applies, verify_decomposition, VerificationReport};

use crate::error::Result;
use crate::exact::format_vector;
use crate::lie::{Filtration, Representation};

/// Everything computed for one `(representation, filtration, seed)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub algebra: String,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub seed: u64,
    pub p0: usize,
    pub filtration_dims: Vec<usize>,
    pub partition: Vec<usize>,
    pub vectors: Vec<Vec<String>>,
    pub grid_dims: Vec<Vec<usize>>,
    pub r: Vec<usize>,
    pub q: Option<usize>,
    pub profile: Option<Vec<u64>>,
    pub profile_sum: Option<u64>,
    pub decomposition: VerificationReport,
    pub blocks: Option<BlockReport>,
    pub errors: Vec<String>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty()
            && self.decomposition.passed()
            && self.blocks.as_ref().is_some_and(BlockReport::passed)
            && self.profile_sum == Some(self.dim_v as u64)
    }
}

/// Decomposes, verifies, builds the adapted basis, checks its block structure
/// and extracts the profile. Input errors are returned as `Err`; failed checks
/// further down are recorded in the report.
pub fn analyze_representation(rep: &Representation, filt: &Filtration, seed: u64) -> Result<DecompositionReport> {
    let chain = OperatorChain::from_representation(rep, filt)?;
    let dec = decompose_chain(&chain, seed)?;
    let p0 = filt.p0();
    let verification = verify_decomposition(&dec, &chain, p0);
    let mut errors = Vec::new();
    let mut q = None;
    let mut blocks = None;
    let mut profile = None;
    if verification.passed() {
        match build_adapted_basis(&dec, &chain, p0) {
            Ok(ab) => {
                q = Some(ab.q);
                blocks = Some(verify_block_structure(&ab, &dec, &chain));
            }
            Err(e) => errors.push(e.to_string()),
        }
        match extract_profile(&dec, &chain, p0) {
            Ok(a) => profile = Some(a),
            Err(e) => errors.push(e.to_string()),
        }
    }
    Ok(DecompositionReport {
        algebra: rep.algebra().name().to_string(),
        dim_v: rep.dim_v(),
        seed,
        p0,
        filtration_dims: filt.dims(),
        partition: dec.partition.clone(),
        vectors: dec.vectors.iter().map(|v| format_vector(v)).collect(),
        grid_dims: dec.grid_dims(),
        r: dec.r(),
        q,
        profile_sum: profile.as_ref().map(|a: &Vec<u64>| a.iter().sum()),
        profile,
        decomposition: verification,
        blocks,
        errors,
    })
}
