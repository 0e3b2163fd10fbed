//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use nilbound_core::bound::{
    closed_bound_first, closed_bound_second, solve_bruteforce, solve_exact, solve_from, theorem_mainbound,
    BoundProblem, ClosedBounds,
};
use nilbound_core::families::{make_nabc, make_nap};
use nilbound_core::{analyze_representation, lower_bound_report, Filtration, Representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{ceil_sqrt_int, random_corpus};

const NAP_CASES: [(usize, usize); 5] = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)];
const NABC_CASES: [(usize, usize, usize); 7] = [(1, 2, 1), (1, 3, 2), (2, 3, 1), (1, 1, 1), (1, 2, 1), (2, 3, 2), (2, 4, 2)];

const NAP_LIMIT: Duration = Duration::from_secs(10);
const NABC_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const ABELIAN_LIMIT: Duration = Duration::from_secs(1);
const DECOMPOSITION_LIMIT: Duration = Duration::from_secs(600);
const RANDOM_PROBLEMS: usize = 1000;
const RANDOM_ALGEBRAS: usize = 200;
const SEEDS: [u64; 3] = [0, 1, 2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn block_triangular_bounds() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (a, p) in NAP_CASES {
        let start = Instant::now();
        let rep = make_nap(a, p).unwrap();
        let got = lower_bound_report(rep.algebra(), None).unwrap().mu_nil_lower_bound;
        let took = start.elapsed();
        slowest = slowest.max(took);
        let want = ((p + 1) * a) as u64;
        if got != want || took > NAP_LIMIT {
            bad.push(format!("n_{{{a},{p}}}: got {got}, want {want}, {took:.2?}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} cases, slowest {slowest:.2?} (limit {NAP_LIMIT:?}) {bad:?}", NAP_CASES.len()),
    )
}

fn three_block_bounds() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (a, b, c) in NABC_CASES {
        let start = Instant::now();
        let rep = make_nabc(a, b, c).unwrap();
        let got = lower_bound_report(rep.algebra(), None).unwrap().mu_nil_lower_bound;
        let took = start.elapsed();
        slowest = slowest.max(took);
        let want = (a + b + c) as u64;
        if got != want || took > NABC_LIMIT {
            bad.push(format!("n_{{{a},{b},{c}}}: got {got}, want {want}, {took:.2?}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} cases, slowest {slowest:.2?} (limit {NABC_LIMIT:?}) {bad:?}", NABC_CASES.len()),
    )
}

fn decreasing_tuples(p: usize, max: u64) -> Vec<Vec<u64>> {
    if p == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in decreasing_tuples(p - 1, max) {
        let top = rest.last().copied().unwrap_or(max);
        for x in 1..=top {
            let mut t = rest.clone();
            t.push(x);
            out.push(t);
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut mismatches = Vec::new();
    for p in 1..=3 {
        for n in decreasing_tuples(p, 12) {
            for p0 in 1..=p {
                let prob = BoundProblem::new(p0, n.clone()).unwrap();
                let fast = solve_exact(&prob);
                let slow = solve_bruteforce(&prob);
                count += 1;
                if (fast.r0_min, &fast.witness) != (slow.r0_min, &slow.witness) {
                    mismatches.push(format!("{prob:?}: {fast:?} vs {slow:?}"));
                }
            }
        }
    }
    let took = start.elapsed();
    outcome(
        mismatches.is_empty() && took <= ORACLE_LIMIT,
        format!(
            "{count} instances, {} mismatches, {took:.2?} (limit {ORACLE_LIMIT:?}) {:?}",
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn random_problem(rng: &mut ChaCha8Rng) -> BoundProblem {
    let p = rng.random_range(1..=5usize);
    let mut n = vec![rng.random_range(1..=60u64)];
    for _ in 1..p {
        let prev = *n.last().unwrap();
        n.push(rng.random_range(1..=prev));
    }
    let p0 = rng.random_range(1..=p);
    BoundProblem::new(p0, n).unwrap()
}

fn closed_form_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    let mut examples = Vec::new();
    let mut second_checked = 0;
    let mut note = |kind: &'static str, text: String| {
        *kinds.entry(kind).or_default() += 1;
        if examples.len() < 4 {
            examples.push(text);
        }
    };
    for _ in 0..RANDOM_PROBLEMS {
        let prob = random_problem(&mut rng);
        // reference optimum from a search that does not use the closed forms
        let reference = solve_from(&prob, 2);
        let exact = solve_exact(&prob);
        // node counts differ between start points; compare optimum and witness
        if (exact.r0_min, &exact.witness) != (reference.r0_min, &reference.witness) {
            note("seeded_search", format!("{prob:?}: {exact:?} vs {reference:?}"));
        }
        let r0 = reference.r0_min;
        let first = closed_bound_first(prob.p0(), prob.n(1)).unwrap();
        if !first.le_integer(r0) {
            note("first", format!("{prob:?}: first {} > r0_min {r0}", first.decimal()));
        }
        if prob.p0() >= 2 {
            second_checked += 1;
            let (second, case) = closed_bound_second(prob.p0(), prob.n(1), prob.n(prob.p0())).unwrap();
            if !second.le_integer(r0) {
                note(
                    case.as_str(),
                    format!(
                        "{prob:?}: second {} > r0_min {r0} at witness {:?}",
                        second.decimal(),
                        reference.witness
                    ),
                );
            }
            let bounds = ClosedBounds::compute(prob.p0(), prob.n(1), prob.n(prob.p0())).unwrap();
            if !bounds.second_dominates() {
                note(
                    "dominance",
                    format!("{prob:?}: second {} < first {}", second.decimal(), first.decimal()),
                );
            }
        }
    }
    let total: usize = kinds.values().sum();
    outcome(
        total == 0,
        format!("{RANDOM_PROBLEMS} problems ({second_checked} with p0 >= 2), {total} violations by kind {kinds:?} e.g. {examples:?}"),
    )
}

fn center_bound_spot_values() -> Outcome {
    let cases: [(usize, u64, u64, u64, Representation); 3] = [
        (2, 5, 1, 4, make_nabc(1, 2, 1).unwrap()),
        (2, 16, 4, 7, make_nabc(2, 3, 2).unwrap()),
        (3, 6, 1, 4, make_nap(1, 3).unwrap()),
    ];
    let mut bad = Vec::new();
    for (p, dim_n, dim_z, want, rep) in cases {
        let (value, _) = theorem_mainbound(p, dim_n, dim_z).unwrap();
        let ceil = value.ceil();
        let filt = Filtration::default_for(rep.algebra()).unwrap();
        let dims: Vec<u64> = filt.dims().iter().map(|&d| d as u64).collect();
        let solved = solve_exact(&BoundProblem::new(filt.p0(), dims.clone()).unwrap()).r0_min;
        if ceil != want || solved != want || dims[0] != dim_n || *dims.last().unwrap() != dim_z {
            bad.push(format!(
                "({p},{dim_n},{dim_z}): value {} ceil {ceil}, exact solve on {dims:?} = {solved}, want {want}",
                value.decimal()
            ));
        }
    }
    outcome(bad.is_empty(), format!("3 spot values {bad:?}"))
}

fn abelian_identity() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n1 in 1..=50u64 {
        let got = solve_exact(&BoundProblem::new(1, vec![n1]).unwrap()).r0_min;
        // ceil(2√n1) is the least s with s² ≥ 4·n1
        let want = ceil_sqrt_int(4 * n1);
        if got != want {
            bad.push(format!("n1 = {n1}: {got} vs {want}"));
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took <= ABELIAN_LIMIT,
        format!("n1 = 1..50, {took:.2?} (limit {ABELIAN_LIMIT:?}) {bad:?}"),
    )
}

fn two_step_sanity() -> Outcome {
    let mut bad = Vec::new();
    let mut rows = Vec::new();
    for c in 1..=8usize {
        let rep = make_nabc(1, 1, c).unwrap();
        let dim = rep.algebra().dim() as u64;
        let got = lower_bound_report(rep.algebra(), None).unwrap().mu_nil_lower_bound;
        let upper = ceil_sqrt_int(8 * c as u64); // ceil(2√(2c))
        let lower = ceil_sqrt_int(3 * dim);
        rows.push(format!("c={c}:{lower}<={got}<={upper}"));
        if got > upper || got < lower {
            bad.push(format!("c = {c}: {got} outside [{lower}, {upper}]"));
        }
    }
    outcome(bad.is_empty(), format!("{} {bad:?}", rows.join(" ")))
}

struct Input {
    label: String,
    rep: Representation,
}

fn decomposition_inputs() -> Vec<Input> {
    let mut inputs = Vec::new();
    for (a, p) in NAP_CASES {
        inputs.push(Input {
            label: format!("n_{{{a},{p}}}"),
            rep: make_nap(a, p).unwrap(),
        });
    }
    let mut seen = Vec::new();
    for abc in NABC_CASES {
        if seen.contains(&abc) {
            continue;
        }
        seen.push(abc);
        let (a, b, c) = abc;
        inputs.push(Input {
            label: format!("n_{{{a},{b},{c}}}"),
            rep: make_nabc(a, b, c).unwrap(),
        });
    }
    for (i, rep) in random_corpus(2024, RANDOM_ALGEBRAS).into_iter().enumerate() {
        inputs.push(Input {
            label: format!("random #{i} ({})", rep.algebra().name()),
            rep,
        });
    }
    inputs
}

type Shape = (Vec<usize>, Vec<usize>);

/// Criterion 8 result plus the per-seed shapes criterion 9 compares.
fn decomposition_suite(inputs: &[Input]) -> (Outcome, BTreeMap<usize, Vec<Option<Shape>>>) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut shapes: BTreeMap<usize, Vec<Option<Shape>>> = BTreeMap::new();
    let mut runs = 0;
    for (idx, input) in inputs.iter().enumerate() {
        let filt = Filtration::default_for(input.rep.algebra()).unwrap();
        for seed in SEEDS {
            runs += 1;
            let shape = match analyze_representation(&input.rep, &filt, seed) {
                Ok(report) => {
                    if !report.passed() {
                        failures.push(format!(
                            "{} seed {seed}: decomposition {:?} blocks {:?} errors {:?} sum {:?} vs dimV {}",
                            input.label,
                            report.decomposition.failures,
                            report.blocks.as_ref().map(|b| &b.failures),
                            report.errors,
                            report.profile_sum,
                            report.dim_v
                        ));
                    }
                    Some((report.partition, report.r))
                }
                Err(e) => {
                    failures.push(format!("{} seed {seed}: {e}", input.label));
                    None
                }
            };
            shapes.entry(idx).or_default().push(shape);
        }
    }
    let took = start.elapsed();
    let out = outcome(
        failures.is_empty() && took <= DECOMPOSITION_LIMIT,
        format!(
            "{} inputs x {} seeds = {runs} runs, {} failures, {took:.2?} (limit {DECOMPOSITION_LIMIT:?}) {:?}",
            inputs.len(),
            SEEDS.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    );
    (out, shapes)
}

fn seed_stability(inputs: &[Input], shapes: &BTreeMap<usize, Vec<Option<Shape>>>) -> Outcome {
    let mut unstable = Vec::new();
    for (idx, runs) in shapes {
        let first = &runs[0];
        if first.is_none() || runs.iter().any(|s| s != first) {
            unstable.push(format!("{}: {runs:?}", inputs[*idx].label));
        }
    }
    outcome(
        unstable.is_empty(),
        format!(
            "{} inputs, seeds {SEEDS:?}, {} unstable {:?}",
            shapes.len(),
            unstable.len(),
            unstable.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "block-triangular family bounds", block_triangular_bounds()),
        (2, "three-block family bounds", three_block_bounds()),
        (3, "branch and bound matches brute force", oracle_equivalence()),
        (4, "closed forms are sound and ordered", closed_form_soundness()),
        (5, "center bound spot values", center_bound_spot_values()),
        (6, "abelian identity", abelian_identity()),
        (7, "n_{1,1,c} sanity window", two_step_sanity()),
    ];
    let inputs = decomposition_inputs();
    let (decomp, shapes) = decomposition_suite(&inputs);
    results.push((8, "decomposition property suite", decomp));
    results.push((9, "seed stability", seed_stability(&inputs, &shapes)));

    let mut failed = 0;
    for (id, name, out) in &results {
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {id} [{tag}] {name}: {}", out.detail);
        if !out.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
