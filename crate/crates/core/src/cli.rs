//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven in-process by tests.
//!
//! Exit codes: 0 success, SAT or true; 1 UNSAT or false; 2 usage or input
//! error; 3 search budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::connectivity::{bridges, two_edge_cut_sides, vertex_connectivity};
use crate::error::{Error, Result};
use crate::families::{self, FamilyInstance, RandomInstance};
use crate::graph::{CycleSet, EdgeId, HitMode, Multigraph};
use crate::io::{
    parse_cycles, parse_factor, parse_multigraph, parse_orientation, write_factor,
    write_orientation,
};
use crate::pipelines::{
    extend_factor, orient_even_indegree, orient_even_indegree_arbitrary, run_pipeline, Pipeline,
    PipelineOptions,
};
use crate::solver::{t_factor_oracle, SearchBudget, Status};
use crate::verify::{factor_violation, intersection_violation, verify_orientation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cyclefactor",
    version,
    about = "Regular factors that meet prescribed cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family instance as .mg and .cyc files
    Gen(GenArgs),
    /// Run a construction pipeline and write the factor
    Solve(SolveArgs),
    /// Exhaustive search for a t-factor meeting the cycles
    Oracle(OracleArgs),
    /// Check a factor or an orientation
    Verify(VerifyArgs),
    /// Orientation with even indegrees and no oriented prescribed cycle
    Orient(OrientArgs),
    /// Print structural properties of a graph and its cycles
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Thm4,
    Thm5,
    #[value(name = "sec6-2k")]
    Sec62k,
    Doubled,
    Petersen,
    Complete,
    Circulant,
    RandomOdd,
    RandomArb,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Regularity (thm4, thm5, random-*)
    #[arg(long)]
    r: Option<usize>,
    /// Factor size (thm4)
    #[arg(long)]
    t: Option<usize>,
    /// Number of prescribed 4-cycles (sec6-2k)
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count (complete, circulant, random-*)
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated jumps (circulant)
    #[arg(long, value_delimiter = ',')]
    jumps: Vec<usize>,
    /// Seed for random families
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base graph to double (doubled)
    #[arg(long)]
    base: Option<PathBuf>,
    /// Graph output; standard output if absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cycle output
    #[arg(long)]
    cycles: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Search node cap
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock cap in seconds
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            max_seconds: self.max_seconds,
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    pipeline: Pipeline,
    #[arg(long)]
    graph: PathBuf,
    /// Prescribed cycles; none if absent
    #[arg(long)]
    cycles: Option<PathBuf>,
    #[arg(long)]
    t: usize,
    /// Edge the factor must contain (third pipeline only)
    #[arg(long, default_value_t = 0)]
    force_edge: EdgeId,
    /// Extend the factor to an l-factor afterwards
    #[arg(long)]
    l: Option<usize>,
    /// Factor output; defaults to the graph path with extension .fac
    #[arg(long)]
    out: Option<PathBuf>,
    /// Orientation output for the half pipelines; defaults to extension .ori
    #[arg(long)]
    ori: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Skip the hypothesis checks
    #[arg(long)]
    unchecked: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cycles: Option<PathBuf>,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = HitMode::Hit)]
    mode: HitMode,
    /// Witness output
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(
        long,
        required_unless_present = "orientation",
        conflicts_with = "orientation"
    )]
    factor: Option<PathBuf>,
    /// Orientation to check for even indegrees and no oriented cycle
    #[arg(long)]
    orientation: Option<PathBuf>,
    /// Expected degree; defaults to the one in the factor header
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    cycles: Option<PathBuf>,
    #[arg(long, default_value_t = HitMode::Hit)]
    mode: HitMode,
}

#[derive(Args, Debug)]
struct OrientArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cycles: Option<PathBuf>,
    #[arg(long)]
    t: usize,
    /// Allow even cycles (needs a 3-connected graph)
    #[arg(long)]
    arbitrary: bool,
    /// Orientation output; defaults to the graph path with extension .ori
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    unchecked: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cycles: Option<PathBuf>,
    /// Fail unless the graph is r-regular
    #[arg(long)]
    regular: Option<usize>,
    /// Fail unless the graph is k-connected
    #[arg(long)]
    connectivity: Option<usize>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, details and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Solve(a) => solve(a, out, err),
        Command::Oracle(a) => oracle(a, out),
        Command::Verify(a) => verify(a, out, err),
        Command::Orient(a) => orient(a, out),
        Command::Check(a) => check(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Unsat(_) => EXIT_FALSE,
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn load_graph(path: &Path) -> Result<Multigraph> {
    parse_multigraph(&read(path)?)
}

fn load_cycles(path: Option<&Path>, g: &Multigraph) -> Result<CycleSet> {
    let Some(path) = path else {
        return Ok(CycleSet::empty());
    };
    let cycles = parse_cycles(&read(path)?)?;
    cycles.validate(g, true)?;
    Ok(cycles)
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Precondition(format!("--{flag} is required for family {family}")))
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let named = |graph: Multigraph,
                 cycles: CycleSet,
                 family: &'static str,
                 params: Vec<(&'static str, usize)>| {
        let regular = graph.is_regular().unwrap_or(0);
        FamilyInstance {
            graph,
            cycles,
            meta: families::FamilyMeta {
                family,
                params,
                regular,
                connectivity: None,
                unsat_t: vec![],
                has_factor_t: vec![],
                notes: vec![],
            },
        }
    };
    let inst = match a.family {
        FamilyName::Thm4 => families::gen_thm4(need(a.r, "r", "thm4")?, need(a.t, "t", "thm4")?)?,
        FamilyName::Thm5 => families::gen_thm5(need(a.r, "r", "thm5")?)?,
        FamilyName::Sec62k => families::gen_sec6_2k(need(a.k, "k", "sec6-2k")?)?,
        FamilyName::Doubled => {
            let base = a
                .base
                .as_deref()
                .ok_or_else(|| Error::Precondition("--base is required".into()))?;
            families::gen_doubled(&load_graph(base)?)?
        }
        FamilyName::Petersen => named(
            families::petersen(),
            families::petersen_cycles(),
            "petersen",
            vec![],
        ),
        FamilyName::Complete => {
            let n = need(a.n, "n", "complete")?;
            named(
                families::complete(n),
                CycleSet::empty(),
                "complete",
                vec![("n", n)],
            )
        }
        FamilyName::Circulant => {
            let n = need(a.n, "n", "circulant")?;
            if a.jumps.is_empty() || a.jumps.iter().any(|&j| j == 0 || 2 * j > n) {
                return Err(Error::Precondition("--jumps must lie in 1..=n/2".into()));
            }
            named(
                families::circulant(n, &a.jumps),
                CycleSet::empty(),
                "circulant",
                vec![("n", n)],
            )
        }
        FamilyName::RandomOdd | FamilyName::RandomArb => {
            let (n, r) = (need(a.n, "n", "random")?, need(a.r, "r", "random")?);
            let ri = if a.family == FamilyName::RandomOdd {
                RandomInstance::odd(n, r, a.seed)?
            } else {
                RandomInstance::arbitrary(n, r, a.seed)?
            };
            let name = if a.family == FamilyName::RandomOdd {
                "random-odd"
            } else {
                "random-arb"
            };
            let seed = usize::try_from(a.seed).unwrap_or(usize::MAX);
            named(
                ri.graph,
                ri.cycles,
                name,
                vec![("n", n), ("r", r), ("seed", seed)],
            )
        }
    };
    match &a.out {
        Some(path) => write_file(path, &inst.to_mg())?,
        None => {
            let _ = out.write_all(inst.to_mg().as_bytes());
        }
    }
    if let Some(path) = &a.cycles {
        write_file(path, &inst.to_cyc())?;
    }
    let _ = writeln!(
        out,
        "ok family={} n={} m={} cycles={}",
        inst.meta.family,
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.cycles.len()
    );
    Ok(EXIT_OK)
}

fn solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&a.graph)?;
    let cycles = load_cycles(a.cycles.as_deref(), &g)?;
    let opts = PipelineOptions {
        checked: !a.unchecked,
        budget: a.budget.budget(),
    };
    opts.budget.validate()?;
    let report = run_pipeline(a.pipeline, &g, &cycles, a.t, Some(a.force_edge), opts)?;
    let (factor, mode) = match a.l {
        Some(l) => (extend_factor(&g, &report.factor, l)?, HitMode::Hit),
        None => (report.factor.clone(), report.mode),
    };
    if factor_violation(&g, &factor, factor.t).is_some()
        || intersection_violation(&g, &factor, &cycles, mode).is_some()
    {
        return Err(Error::CheckFailed(
            "final factor failed re-verification".into(),
        ));
    }
    let fac_path = a.out.unwrap_or_else(|| a.graph.with_extension("fac"));
    write_file(&fac_path, &write_factor(&factor))?;
    if let Some(d) = &report.orientation {
        let ori_path = a.ori.unwrap_or_else(|| a.graph.with_extension("ori"));
        write_file(&ori_path, &write_orientation(d))?;
    }
    let _ = writeln!(
        out,
        "ok t={} hits={} nodes={}",
        factor.t, mode, report.solver_nodes
    );
    for s in &report.expansion_stats {
        let _ = writeln!(err, "stage {}: n={} m={}", s.stage, s.vertices, s.edges);
    }
    for c in &report.checks {
        let _ = writeln!(
            err,
            "check {}: {}",
            c.name,
            if c.passed { "pass" } else { "fail" }
        );
    }
    Ok(EXIT_OK)
}

fn oracle(a: OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&a.graph)?;
    let cycles = load_cycles(a.cycles.as_deref(), &g)?;
    let verdict = t_factor_oracle(&g, a.t, &cycles, a.mode, a.budget.budget())?;
    let _ = writeln!(out, "{verdict}");
    Ok(match &verdict.status {
        Status::Sat(f) => {
            if let Some(path) = &a.out {
                write_file(path, &write_factor(f))?;
            }
            EXIT_OK
        }
        Status::Unsat => EXIT_FALSE,
        Status::BudgetExceeded => EXIT_BUDGET,
    })
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&a.graph)?;
    let cycles = load_cycles(a.cycles.as_deref(), &g)?;
    let ok = if let Some(path) = &a.orientation {
        let d = parse_orientation(&read(path)?, &g)?;
        verify_orientation(&g, &d, &cycles)
    } else {
        let path = a
            .factor
            .as_deref()
            .expect("clap requires --factor without --orientation");
        let f = parse_factor(&read(path)?)?;
        let t = a.t.unwrap_or(f.t);
        let degree = factor_violation(&g, &f, t);
        let hit = intersection_violation(&g, &f, &cycles, a.mode);
        if let Some((v, d)) = degree {
            let _ = writeln!(err, "vertex {v} has factor degree {d}, expected {t}");
        }
        if let Some(i) = hit {
            let _ = writeln!(err, "cycle {i} is not met as {} requires", a.mode);
        }
        degree.is_none() && hit.is_none()
    };
    let _ = writeln!(out, "{ok}");
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}

fn orient(a: OrientArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&a.graph)?;
    let cycles = load_cycles(a.cycles.as_deref(), &g)?;
    let opts = PipelineOptions {
        checked: !a.unchecked,
        budget: a.budget.budget(),
    };
    opts.budget.validate()?;
    let d = if a.arbitrary {
        orient_even_indegree_arbitrary(&g, &cycles, a.t, opts)?
    } else {
        orient_even_indegree(&g, &cycles, a.t, opts)?
    };
    let path = a.out.unwrap_or_else(|| a.graph.with_extension("ori"));
    write_file(&path, &write_orientation(&d))?;
    let _ = writeln!(out, "ok orientation m={}", g.edge_count());
    Ok(EXIT_OK)
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&a.graph)?;
    let cycles = load_cycles(a.cycles.as_deref(), &g)?;
    let regular = g.is_regular();
    let kappa = vertex_connectivity(&g);
    let _ = writeln!(out, "n={} m={}", g.vertex_count(), g.edge_count());
    let _ = writeln!(
        out,
        "regular={}",
        regular.map_or("no".to_string(), |r| r.to_string())
    );
    let _ = writeln!(out, "connectivity={kappa}");
    let _ = writeln!(out, "bridges={}", bridges(&g).len());
    if g.is_connected() && bridges(&g).is_empty() {
        let _ = writeln!(out, "two_edge_cuts={}", two_edge_cut_sides(&g)?.len());
    }
    let odd = cycles.iter().filter(|c| c.len() % 2 == 1).count();
    let _ = writeln!(
        out,
        "cycles={} odd={} two_cycles={}",
        cycles.len(),
        odd,
        cycles.iter().filter(|c| c.len() == 2).count()
    );
    let ok =
        a.regular.is_none_or(|r| regular == Some(r)) && a.connectivity.is_none_or(|k| kappa >= k);
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}
