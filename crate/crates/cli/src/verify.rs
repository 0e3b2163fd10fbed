//! Recomputes the published family values and prints an expected-vs-computed table.

use nilbound_core::bound::{solve_bruteforce_by, solve_exact, suffix_sums, theorem_mainbound, BoundProblem};
use nilbound_core::families::{make_nabc, make_nap};
use nilbound_core::{lower_bound_report, Filtration, LieAlgebra};

const NAP: [(usize, usize); 5] = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)];
const NABC: [(usize, usize, usize); 7] = [(1, 2, 1), (1, 3, 2), (2, 3, 1), (1, 1, 1), (1, 2, 1), (2, 3, 2), (2, 4, 2)];
const NAP_QUICK: [(usize, usize); 3] = [(1, 2), (2, 2), (1, 3)];
const NABC_QUICK: [(usize, usize, usize); 2] = [(1, 2, 1), (1, 1, 1)];

/// Least `s` with `s² ≥ x`.
fn ceil_sqrt(x: u64) -> u64 {
    let s = x.isqrt();
    if s * s == x {
        s
    } else {
        s + 1
    }
}

struct Row {
    label: String,
    expected: String,
    computed: String,
    pass: bool,
}

/// Solves with the correct constraints, or with the last term of each
/// shifted sum dropped when `fault` is set.
struct Solver {
    fault: bool,
}

impl Solver {
    fn solve(&self, prob: &BoundProblem) -> u64 {
        if !self.fault {
            return solve_exact(prob).r0_min;
        }
        let (p, p0) = (prob.p(), prob.p0());
        solve_bruteforce_by(prob, |a| {
            if a[0] == 0 || a[p] == 0 {
                return false;
            }
            let r = suffix_sums(a);
            let shifted = (1..=p0).all(|k| (0..p0 - k).map(|i| a[i] * r[k + i]).sum::<u64>() >= prob.n(k));
            shifted && (p0..=p).all(|k| a[0] * r[k] >= prob.n(k))
        })
        .r0_min
    }

    fn algebra_bound(&self, alg: &LieAlgebra) -> Result<u64, String> {
        if !self.fault {
            return lower_bound_report(alg, None).map(|r| r.mu_nil_lower_bound).map_err(|e| e.to_string());
        }
        let filt = Filtration::default_for(alg).map_err(|e| e.to_string())?;
        let dims = filt.dims();
        filt.admissible_p0(alg)
            .into_iter()
            .map(|p0| BoundProblem::from_dims(p0, &dims).map(|prob| self.solve(&prob)))
            .try_fold(0, |best, v| v.map(|v| best.max(v)))
            .map_err(|e| e.to_string())
    }
}

fn exact_row(label: String, expected: u64, computed: Result<u64, String>) -> Row {
    let pass = computed.as_ref() == Ok(&expected);
    Row {
        label,
        expected: expected.to_string(),
        computed: computed.map_or_else(|e| format!("error: {e}"), |v| v.to_string()),
        pass,
    }
}

fn family_rows(solver: &Solver, nap: &[(usize, usize)], nabc: &[(usize, usize, usize)]) -> Vec<Row> {
    let mut rows = Vec::new();
    for &(a, p) in nap {
        let computed = make_nap(a, p)
            .map_err(|e| e.to_string())
            .and_then(|rep| solver.algebra_bound(rep.algebra()));
        rows.push(exact_row(format!("n_{{{a},{p}}} = (p+1)a"), ((p + 1) * a) as u64, computed));
    }
    for &(a, b, c) in nabc {
        let computed = make_nabc(a, b, c)
            .map_err(|e| e.to_string())
            .and_then(|rep| solver.algebra_bound(rep.algebra()));
        rows.push(exact_row(format!("n_{{{a},{b},{c}}} = a+b+c"), (a + b + c) as u64, computed));
    }
    rows
}

fn center_rows(solver: &Solver) -> Vec<Row> {
    let cases = [(2usize, 5u64, 1u64, 4u64, [5u64, 1]), (2, 16, 4, 7, [16, 4])];
    let mut rows = Vec::new();
    for (p, dim_n, dim_z, want, dims) in cases {
        rows.push(center_row(solver, p, dim_n, dim_z, want, &dims));
    }
    rows.push(center_row(solver, 3, 6, 1, 4, &[6, 3, 1]));
    rows
}

fn center_row(solver: &Solver, p: usize, dim_n: u64, dim_z: u64, want: u64, dims: &[u64]) -> Row {
    let computed = theorem_mainbound(p, dim_n, dim_z).and_then(|(value, _)| {
        let solved = solver.solve(&BoundProblem::new(p, dims.to_vec())?);
        Ok((value.ceil(), solved))
    });
    let (computed, pass) = match computed {
        Ok((ceil, solved)) => (format!("ceil {ceil}, solve {solved}"), ceil == want && solved == want),
        Err(e) => (format!("error: {e}"), false),
    };
    Row {
        label: format!("center bound ({p},{dim_n},{dim_z})"),
        expected: want.to_string(),
        computed,
        pass,
    }
}

fn abelian_row(solver: &Solver) -> Row {
    let mismatches: Vec<u64> = (1..=50u64)
        .filter(|&n1| {
            let prob = BoundProblem::new(1, vec![n1]).expect("positive");
            solver.solve(&prob) != ceil_sqrt(4 * n1)
        })
        .collect();
    Row {
        label: "abelian n1 = 1..50".into(),
        expected: "ceil(2 sqrt n1)".into(),
        computed: if mismatches.is_empty() {
            "all equal".into()
        } else {
            format!("differs at {mismatches:?}")
        },
        pass: mismatches.is_empty(),
    }
}

fn two_step_rows(solver: &Solver) -> Vec<Row> {
    (1..=8usize)
        .map(|c| {
            let upper = ceil_sqrt(8 * c as u64);
            let label = format!("n_{{1,1,{c}}} in range");
            let rep = match make_nabc(1, 1, c) {
                Ok(rep) => rep,
                Err(e) => {
                    return Row {
                        label,
                        expected: format!("<= {upper}"),
                        computed: format!("error: {e}"),
                        pass: false,
                    }
                }
            };
            let lower = ceil_sqrt(3 * rep.algebra().dim() as u64);
            let (computed, pass) = match solver.algebra_bound(rep.algebra()) {
                Ok(v) => (v.to_string(), (lower..=upper).contains(&v)),
                Err(e) => (format!("error: {e}"), false),
            };
            Row {
                label,
                expected: format!("{lower}..={upper}"),
                computed,
                pass,
            }
        })
        .collect()
}

/// Prints the table; returns the exit code (0 all rows pass, 2 otherwise).
pub fn run(quick: bool, inject_fault: bool) -> u8 {
    let solver = Solver { fault: inject_fault };
    let rows = if quick {
        family_rows(&solver, &NAP_QUICK, &NABC_QUICK)
    } else {
        let mut rows = family_rows(&solver, &NAP, &NABC);
        rows.extend(center_rows(&solver));
        rows.push(abelian_row(&solver));
        rows.extend(two_step_rows(&solver));
        rows
    };
    let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    println!("{:<width$}  {:<16}  {:<22}  status", "row", "expected", "computed");
    for row in &rows {
        println!(
            "{:<width$}  {:<16}  {:<22}  {}",
            row.label,
            row.expected,
            row.computed,
            if row.pass { "PASS" } else { "FAIL" }
        );
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    println!("{} rows, {} passed, {failed} failed", rows.len(), rows.len() - failed);
    if failed == 0 {
        0
    } else {
        2
    }
}
