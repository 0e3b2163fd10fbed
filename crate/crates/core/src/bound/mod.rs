//! The integer program for profiles, its exact solvers, the closed-form
//! relaxation bounds, and the per-algebra lower-bound report.

mod closed;
mod problem;
mod report;
mod solve;

pub use closed::{
    ceil_sqrt, closed_bound_first, closed_bound_second, theorem_mainbound, ClosedBounds, SecondCase, Surd,
};
pub use problem::{is_feasible, suffix_sums, BoundProblem, Profile};
pub use report::{lower_bound_report, BoundReport, PerP0};
pub use solve::{solve_bruteforce, solve_bruteforce_by, solve_exact, solve_from, BoundSolution};
