#![allow(dead_code)]

use nilbound_core::exact::{rat, Matrix, Subspace};
use nilbound_core::lie::default_names;
use nilbound_core::Representation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_DIM_V: usize = 7;
pub const MAX_ALGEBRA_DIM: usize = 12;

/// Lie algebra generated by a few random strictly upper triangular matrices,
/// in its inclusion into `gl(V)`. Returns `None` when the closure is zero or
/// larger than [`MAX_ALGEBRA_DIM`].
pub fn random_upper_triangular(rng: &mut ChaCha8Rng) -> Option<Representation> {
    let n = rng.random_range(2..=MAX_DIM_V);
    let gens = rng.random_range(1..=3);
    let mut mats = Vec::new();
    for _ in 0..gens {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(0.3) {
                    m.set(i, j, rat(rng.random_range(-2..=2)));
                }
            }
        }
        mats.push(m);
    }
    close_under_commutators(n, mats)
}

fn close_under_commutators(n: usize, gens: Vec<Matrix>) -> Option<Representation> {
    let len = n * n;
    let mut span = Subspace::span(len, &gens.iter().map(Matrix::to_vector).collect::<Vec<_>>()).ok()?;
    loop {
        if span.is_zero() || span.dim() > MAX_ALGEBRA_DIM {
            return None;
        }
        let basis: Vec<Matrix> = span
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_vector(n, n, v).unwrap())
            .collect();
        let mut vectors = span.basis_vectors();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                vectors.push(Matrix::commutator(&basis[i], &basis[j]).to_vector());
            }
        }
        let next = Subspace::span(len, &vectors).ok()?;
        if next.dim() == span.dim() {
            let dim = basis.len();
            return Representation::from_matrix_algebra(format!("upper_{n}_{dim}"), default_names(dim), basis).ok();
        }
        span = next;
    }
}

/// `count` random inputs from a fixed seed.
pub fn random_corpus(seed: u64, count: usize) -> Vec<Representation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(rep) = random_upper_triangular(&mut rng) {
            out.push(rep);
        }
    }
    out
}

/// Smallest `s ≥ 0` with `s² ≥ x`.
pub fn ceil_sqrt_int(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}
