mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilbound_core::bound::{solve_bruteforce, solve_exact, BoundProblem, ClosedBounds};
use nilbound_core::lie::io::{
    algebra_from_json, algebra_to_json, read_filtration, read_representation, representation_from_json,
    representation_to_json,
};
use nilbound_core::{analyze_representation, lower_bound_report, Error, FamilySpec, Filtration, LieAlgebra};

#[derive(Parser, Debug)]
#[command(name = "nilbound", version, about = "Exact lower bounds for faithful nilrepresentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a built-in family's algebra and defining representation as JSON files.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// Heisenberg half-dimension.
        #[arg(long)]
        m: Option<usize>,
        /// Abelian dimension.
        #[arg(long)]
        n: Option<usize>,
        /// Output directory.
        #[arg(short, long, default_value = ".")]
        output: PathBuf,
    },
    /// Bound and decomposition of a representation file in one report.
    Analyze {
        rep: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        filtration: Option<PathBuf>,
    },
    /// Solve the integer program for explicit filtration dimensions.
    Solve {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        p0: usize,
        /// Comma-separated, weakly decreasing, positive.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        dims: Vec<u64>,
        /// Use the exhaustive reference solver.
        #[arg(long)]
        brute: bool,
    },
    /// Lower-bound report for an algebra (or representation) file.
    Bound {
        file: PathBuf,
        #[arg(long)]
        filtration: Option<PathBuf>,
    },
    /// Decompose a representation and verify every structural property.
    Decompose {
        rep: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        filtration: Option<PathBuf>,
    },
    /// Recompute the published family values and print a comparison table.
    VerifyPaper {
        /// Small family rows only.
        #[arg(long)]
        quick: bool,
        /// Harness self-test: off-by-one in the shifted-sum constraint.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    Nap,
    Nabc,
    Heisenberg,
    Abelian,
}

/// A failure with its exit code: 1 for bad input, 2 for an internal failure.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Family {
            kind,
            a,
            b,
            c,
            p,
            m,
            n,
            output,
        } => cmd_family(kind, [a, b, c, p, m, n], &output),
        Command::Analyze { rep, seed, filtration } => cmd_analyze(&rep, seed, filtration.as_deref()),
        Command::Solve { p, p0, dims, brute } => cmd_solve(p, p0, dims, brute),
        Command::Bound { file, filtration } => cmd_bound(&file, filtration.as_deref()),
        Command::Decompose { rep, seed, filtration } => cmd_decompose(&rep, seed, filtration.as_deref()),
        Command::VerifyPaper { quick, inject_fault } => Ok(verify::run(quick, inject_fault)),
    }
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn require(name: &str, value: Option<usize>) -> Result<usize, Failure> {
    value.ok_or_else(|| input_error(format!("--{name} is required for this family")))
}

fn cmd_family(kind: FamilyKind, params: [Option<usize>; 6], output: &Path) -> CmdResult {
    let [a, b, c, p, m, n] = params;
    let (spec, tag, allowed) = match kind {
        FamilyKind::Nap => {
            let (a, p) = (require("a", a)?, require("p", p)?);
            (FamilySpec::Nap { a, p }, format!("nap_a{a}_p{p}"), [true, false, false, true, false, false])
        }
        FamilyKind::Nabc => {
            let (a, b, c) = (require("a", a)?, require("b", b)?, require("c", c)?);
            (FamilySpec::Nabc { a, b, c }, format!("nabc_a{a}_b{b}_c{c}"), [true, true, true, false, false, false])
        }
        FamilyKind::Heisenberg => {
            let m = require("m", m)?;
            (FamilySpec::Heisenberg { m }, format!("heisenberg_m{m}"), [false, false, false, false, true, false])
        }
        FamilyKind::Abelian => {
            let n = require("n", n)?;
            (FamilySpec::Abelian { n }, format!("abelian_n{n}"), [false, false, false, false, false, true])
        }
    };
    let names = ["a", "b", "c", "p", "m", "n"];
    for ((given, ok), name) in params.iter().zip(allowed).zip(names) {
        if given.is_some() && !ok {
            return Err(input_error(format!("--{name} does not apply to this family")));
        }
    }
    let rep = spec.build()?;
    std::fs::create_dir_all(output).map_err(Error::from)?;
    let algebra_path = output.join(format!("{tag}.algebra.json"));
    let rep_path = output.join(format!("{tag}.rep.json"));
    std::fs::write(&algebra_path, algebra_to_json(rep.algebra()) + "\n").map_err(Error::from)?;
    std::fs::write(&rep_path, representation_to_json(&rep) + "\n").map_err(Error::from)?;

    #[derive(Serialize)]
    struct Summary {
        algebra: String,
        dim: usize,
        #[serde(rename = "dimV")]
        dim_v: usize,
        brackets: usize,
        algebra_file: String,
        representation_file: String,
    }
    print_json(&Summary {
        algebra: spec.name(),
        dim: rep.algebra().dim(),
        dim_v: rep.dim_v(),
        brackets: rep.algebra().structure_constants().len(),
        algebra_file: algebra_path.display().to_string(),
        representation_file: rep_path.display().to_string(),
    });
    Ok(0)
}

fn cmd_solve(p: usize, p0: usize, dims: Vec<u64>, brute: bool) -> CmdResult {
    if dims.len() != p {
        return Err(input_error(format!("--dims has {} entries, --p is {p}", dims.len())));
    }
    let prob = BoundProblem::new(p0, dims)?;
    let sol = if brute { solve_bruteforce(&prob) } else { solve_exact(&prob) };
    let closed = ClosedBounds::compute(p0, prob.n(1), prob.n(p0))?;

    #[derive(Serialize)]
    struct SolveReport {
        p: usize,
        p0: usize,
        dims: Vec<u64>,
        solver: &'static str,
        r0_min: u64,
        witness: Vec<u64>,
        nodes_explored: u64,
        closed_first: String,
        closed_first_ceil: u64,
        closed_second: Option<String>,
        closed_second_ceil: Option<u64>,
        case: String,
    }
    let (closed_second, closed_second_ceil, case) = match &closed.second {
        Some((s, case)) => (Some(s.decimal()), Some(s.ceil()), case.as_str().to_string()),
        None => (None, None, "none".to_string()),
    };
    print_json(&SolveReport {
        p,
        p0,
        dims: prob.dims().to_vec(),
        solver: if brute { "bruteforce" } else { "exact" },
        r0_min: sol.r0_min,
        witness: sol.witness,
        nodes_explored: sol.nodes_explored,
        closed_first: closed.first.decimal(),
        closed_first_ceil: closed.first.ceil(),
        closed_second,
        closed_second_ceil,
        case,
    });
    Ok(0)
}

/// Reads an algebra file, or the algebra embedded in a representation file.
fn load_algebra(path: &Path) -> Result<LieAlgebra, Failure> {
    let text = std::fs::read_to_string(path).map_err(Error::from)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(Error::from)?;
    if value.get("dimV").is_some() {
        Ok(representation_from_json(&text)?.algebra().clone())
    } else {
        Ok(algebra_from_json(&text)?)
    }
}

fn load_filtration(path: Option<&Path>, alg: &LieAlgebra) -> Result<Option<Filtration>, Failure> {
    Ok(path.map(|p| read_filtration(p, alg)).transpose()?)
}

fn cmd_bound(file: &Path, filtration: Option<&Path>) -> CmdResult {
    let alg = load_algebra(file)?;
    alg.check_jacobi()?;
    let filt = load_filtration(filtration, &alg)?;
    print_json(&lower_bound_report(&alg, filt.as_ref())?);
    Ok(0)
}

fn cmd_decompose(rep: &Path, seed: u64, filtration: Option<&Path>) -> CmdResult {
    let rep = read_representation(rep)?;
    let filt = match load_filtration(filtration, rep.algebra())? {
        Some(f) => f,
        None => Filtration::default_for(rep.algebra())?,
    };
    let report = analyze_representation(&rep, &filt, seed)?;
    print_json(&report);
    if report.passed() {
        Ok(0)
    } else {
        eprintln!("error: verification failed for {}", report.algebra);
        Ok(2)
    }
}

fn cmd_analyze(rep: &Path, seed: u64, filtration: Option<&Path>) -> CmdResult {
    let rep = read_representation(rep)?;
    let given = load_filtration(filtration, rep.algebra())?;
    let bound = lower_bound_report(rep.algebra(), given.as_ref())?;
    let filt = match given {
        Some(f) => f,
        None => Filtration::default_for(rep.algebra())?,
    };
    let decomposition = analyze_representation(&rep, &filt, seed)?;
    // the extracted profile is feasible, so dim V can never undercut the bound
    let consistent = bound.mu_nil_lower_bound <= rep.dim_v() as u64;

    #[derive(Serialize)]
    struct AnalyzeReport {
        bound: nilbound_core::BoundReport,
        decomposition: nilbound_core::DecompositionReport,
        #[serde(rename = "dimV_at_least_bound")]
        consistent: bool,
    }
    let passed = decomposition.passed() && consistent;
    print_json(&AnalyzeReport {
        bound,
        decomposition,
        consistent,
    });
    if passed {
        Ok(0)
    } else {
        eprintln!("error: verification failed");
        Ok(2)
    }
}
