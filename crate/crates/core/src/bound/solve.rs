use serde::Serialize;

use super::closed::closed_bound_first;
use super::problem::{feasible, BoundProblem, Profile};

/// An optimal profile: `r0_min = Σ witness`, `witness` lexicographically smallest
/// among the optimal ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundSolution {
    pub r0_min: u64,
    pub witness: Profile,
    pub nodes_explored: u64,
}

/// Reference oracle: every profile with sum at most `n_1 + 1`, in lexicographic order.
pub fn solve_bruteforce(prob: &BoundProblem) -> BoundSolution {
    solve_bruteforce_by(prob, |a| feasible(prob, a))
}

/// [`solve_bruteforce`] with a caller-supplied feasibility predicate.
pub fn solve_bruteforce_by(prob: &BoundProblem, mut is_feasible: impl FnMut(&[u64]) -> bool) -> BoundSolution {
    let cap = prob.n(1) + 1;
    let len = prob.p() + 1;
    let mut a = vec![0u64; len];
    let mut best: Option<(u64, Profile)> = None;
    let mut nodes = 0u64;
    // odometer over all tuples with Σ ≤ cap, lexicographic
    loop {
        nodes += 1;
        let sum: u64 = a.iter().sum();
        if best.as_ref().map_or(true, |(s, _)| sum < *s) && is_feasible(&a) {
            best = Some((sum, a.clone()));
        }
        let mut pos = len;
        loop {
            if pos == 0 {
                let (r0_min, witness) = best.unwrap_or_else(|| (cap, prob.trivial_profile()));
                return BoundSolution {
                    r0_min,
                    witness,
                    nodes_explored: nodes,
                };
            }
            pos -= 1;
            let prefix: u64 = a[..pos].iter().sum();
            if prefix + a[pos] < cap {
                a[pos] += 1;
                for x in &mut a[pos + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Branch and bound over target sums `s = ⌈first closed bound⌉, s + 1, …`;
/// within a sum, profiles are visited in lexicographic order, so the first hit
/// is the answer.
pub fn solve_exact(prob: &BoundProblem) -> BoundSolution {
    let start = closed_bound_first(prob.p0(), prob.n(1))
        .map(|b| b.ceil())
        .unwrap_or(0);
    solve_from(prob, start)
}

/// The same search started at an arbitrary target sum. Starting above the
/// optimum returns the first feasible sum at or after `start`.
pub fn solve_from(prob: &BoundProblem, start: u64) -> BoundSolution {
    let start = start.max(2);
    let mut search = Search {
        prob,
        s: 0,
        a: vec![0; prob.p() + 1],
        prefix: vec![0; prob.p() + 2],
        nodes: 0,
    };
    let cap = prob.n(1) + 1;
    for s in start..=cap.max(start) {
        search.s = s;
        if search.dfs(0) {
            return BoundSolution {
                r0_min: s,
                witness: search.a.clone(),
                nodes_explored: search.nodes,
            };
        }
    }
    // unreachable: the trivial profile has sum n_1 + 1
    BoundSolution {
        r0_min: cap,
        witness: prob.trivial_profile(),
        nodes_explored: search.nodes,
    }
}

struct Search<'a> {
    prob: &'a BoundProblem,
    s: u64,
    a: Vec<u64>,
    // prefix[j] = a_0 + … + a_{j-1} for the assigned part
    prefix: Vec<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, m: usize) -> bool {
        let p = self.prob.p();
        let used = self.prefix[m];
        if m == p {
            self.nodes += 1;
            let last = self.s - used;
            if last == 0 {
                return false;
            }
            self.a[p] = last;
            return feasible(self.prob, &self.a);
        }
        let lo = u64::from(m == 0);
        // leave at least 1 for a_p
        if self.s < used + 1 + lo {
            return false;
        }
        let hi = self.s - used - 1;
        for x in lo..=hi {
            self.nodes += 1;
            self.a[m] = x;
            self.prefix[m + 1] = used + x;
            if self.may_extend(m) && self.dfs(m + 1) {
                return true;
            }
        }
        false
    }

    /// Upper bounds on every constraint's left side over all completions of
    /// `a_0..=a_m`.
    fn may_extend(&self, m: usize) -> bool {
        let p = self.prob.p();
        let p0 = self.prob.p0();
        let s = self.s as u128;
        let rest = s - self.prefix[m + 1] as u128;
        // r_j is fixed for j ≤ m + 1 and at most `rest` beyond
        let r = |j: usize| -> u128 {
            if j <= m + 1 {
                s - self.prefix[j] as u128
            } else {
                rest
            }
        };
        for k in 1..=p0 {
            let top = p0 - k;
            let mut ub: u128 = (0..=top.min(m)).map(|i| self.a[i] as u128 * r(k + i)).sum();
            if top > m {
                ub += rest * rest;
            }
            if ub < self.prob.n(k) as u128 {
                return false;
            }
        }
        let a0 = self.a[0] as u128;
        (p0..=p).all(|k| a0 * r(k) >= self.prob.n(k) as u128)
    }
}
