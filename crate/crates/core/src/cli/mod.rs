//! Command-line front end.
//!
//! Exit codes: `0` when the answer is positive (controllable, accessible,
//! sweep in agreement, ...), `1` when it is negative, `2` on any input or
//! usage error.

mod documents;
mod dot;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

pub use documents::{CostDocument, PatternDocument};
pub use dot::to_dot;

use crate::error::Error;
use crate::harness::{min_inputs_report, sweep, DEFAULT_TRIALS};
use crate::pattern_graph::{
    graph_of_pattern, is_structurally_accessible, is_structurally_controllable, transitive_closure, Edge, Method,
    Pattern, PatternGraph,
};
use crate::se_algebra::DEFAULT_TOL;
use crate::sparse_design::{brute_force_min_cost, enumerate_minimal, min_cost_pattern, sparsest_pattern, TreePattern};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable overriding the default random seed.
pub const SEED_ENV: &str = "STRUCTCTRL_SEED";
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(
    name = "structctrl",
    version,
    about = "Structural controllability of bilinear systems on SE(n)"
)]
struct Cli {
    /// Relative rank tolerance for numerical Lie algebra rank tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide structural controllability and accessibility of a pattern.
    Check { file: PathBuf },
    /// Print the transitive-closure trace, optionally as DOT files.
    Closure {
        file: PathBuf,
        /// Directory to write one DOT file per closure step.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide structural accessibility (system with drift).
    Accessible { file: PathBuf },
    /// Emit a sparsest controllable pattern, or all of them.
    Sparsest {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        enumerate: bool,
    },
    /// Minimum-cost controllable pattern for a cost file.
    Mincost {
        file: PathBuf,
        /// Compare against exhaustive search over all minimal patterns.
        #[arg(long)]
        verify: bool,
        /// Accept zero costs on translation entries.
        #[arg(long)]
        allow_zero_broken: bool,
    },
    /// Cross-check graph criteria against the exact rank condition on every pattern.
    Sweep {
        #[arg(long = "n")]
        n: usize,
    },
    /// Smallest number of random inputs that satisfy the rank condition.
    MinInputs(MinInputsArgs),
}

#[derive(Debug, Args)]
struct MinInputsArgs {
    file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Defaults to $STRUCTCTRL_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
}

/// Failure carrying its exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).expect("report serializes");
        writeln!(self.out, "{text}").map_err(|e| Failure(EXIT_INPUT, format!("writing output: {e}")))
    }

    fn warn(&mut self, warnings: &[String]) {
        for w in warnings {
            let _ = writeln!(self.err, "warning: {w}");
        }
    }
}

/// Runs the CLI with explicit arguments and output streams; returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_YES
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: Cli, io: &mut Io<'_>) -> CmdResult {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Error::InvalidTolerance(cli.tol).into());
    }
    match cli.command {
        Command::Check { file } => cmd_check(&file, io),
        Command::Closure { file, dot } => cmd_closure(&file, dot.as_deref(), io),
        Command::Accessible { file } => cmd_accessible(&file, io),
        Command::Sparsest { n, enumerate } => cmd_sparsest(n, enumerate, io),
        Command::Mincost {
            file,
            verify,
            allow_zero_broken,
        } => cmd_mincost(&file, verify, allow_zero_broken, io),
        Command::Sweep { n } => cmd_sweep(n, io),
        Command::MinInputs(args) => cmd_min_inputs(args, cli.tol, io),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("reading {}: {e}", path.display())))
}

fn load_pattern(path: &Path, io: &mut Io<'_>) -> Result<Pattern, Failure> {
    let (pattern, warnings) = PatternDocument::parse(&read(path)?)?.to_pattern()?;
    io.warn(&warnings);
    Ok(pattern)
}

fn verdict_code(yes: bool) -> i32 {
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

#[derive(Serialize)]
struct CheckReport {
    controllable: bool,
    accessible: bool,
    method_agreement: bool,
    closure_steps: usize,
    solid_connected: bool,
    full_connected: bool,
}

fn cmd_check(file: &Path, io: &mut Io<'_>) -> CmdResult {
    let pattern = load_pattern(file, io)?;
    let g = graph_of_pattern(&pattern);
    let trace = transitive_closure(&g);
    let by_closure = is_structurally_controllable(&pattern, Method::Closure);
    let by_connectivity = is_structurally_controllable(&pattern, Method::Connectivity);
    let report = CheckReport {
        controllable: by_closure,
        accessible: is_structurally_accessible(&pattern),
        method_agreement: by_closure == by_connectivity,
        closure_steps: trace.converged_at(),
        solid_connected: g.solid_connected(),
        full_connected: g.full_connected(),
    };
    io.emit(&report)?;
    Ok(verdict_code(report.controllable))
}

fn cmd_accessible(file: &Path, io: &mut Io<'_>) -> CmdResult {
    let pattern = load_pattern(file, io)?;
    let accessible = is_structurally_accessible(&pattern);
    io.emit(&json!({ "accessible": accessible }))?;
    Ok(verdict_code(accessible))
}

#[derive(Serialize)]
struct StepReport {
    l: usize,
    solid: Vec<Edge>,
    broken: Vec<Edge>,
}

fn step_report(l: usize, g: &PatternGraph) -> StepReport {
    StepReport {
        l,
        solid: g.solid().iter().copied().collect(),
        broken: g.broken().iter().copied().collect(),
    }
}

fn cmd_closure(file: &Path, dot_dir: Option<&Path>, io: &mut Io<'_>) -> CmdResult {
    let pattern = load_pattern(file, io)?;
    let trace = transitive_closure(&graph_of_pattern(&pattern));
    let mut dot_files = Vec::new();
    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure(EXIT_INPUT, format!("creating {}: {e}", dir.display())))?;
        for (l, g) in trace.steps().iter().enumerate() {
            let path = dir.join(format!("closure_step_{l}.dot"));
            std::fs::write(&path, to_dot(g, &format!("closure_step_{l}")))
                .map_err(|e| Failure(EXIT_INPUT, format!("writing {}: {e}", path.display())))?;
            dot_files.push(path.display().to_string());
        }
    }
    let steps: Vec<StepReport> = trace
        .steps()
        .iter()
        .enumerate()
        .map(|(l, g)| step_report(l, g))
        .collect();
    io.emit(&json!({
        "n": pattern.n(),
        "converged_at": trace.converged_at(),
        "complete": trace.closure().is_complete(),
        "steps": steps,
        "dot_files": dot_files,
    }))?;
    Ok(EXIT_YES)
}

fn tree_json(t: &TreePattern) -> serde_json::Value {
    json!({
        "n": t.pattern().n(),
        "lambda": PatternDocument::from_pattern(t.pattern()).lambda,
    })
}

fn cmd_sparsest(n: usize, enumerate: bool, io: &mut Io<'_>) -> CmdResult {
    if enumerate {
        let all = enumerate_minimal(n)?;
        let patterns: Vec<_> = all.iter().map(tree_json).collect();
        io.emit(&json!({ "n": n, "count": all.len(), "patterns": patterns }))?;
    } else {
        io.emit(&tree_json(&sparsest_pattern(n)?))?;
    }
    Ok(EXIT_YES)
}

fn cmd_mincost(file: &Path, verify: bool, allow_zero_broken: bool, io: &mut Io<'_>) -> CmdResult {
    let (costs, warnings) = CostDocument::parse(&read(file)?)?.to_costs(allow_zero_broken)?;
    io.warn(&warnings);
    let (tree, cost) = min_cost_pattern(&costs);
    let mut report = tree_json(&tree);
    report["cost"] = json!(cost);
    let mut code = EXIT_YES;
    if verify {
        let best = brute_force_min_cost(&costs)?;
        let matches = (cost - best).abs() <= 1e-12 * best.abs().max(1.0);
        report["verify"] = json!({ "brute_force_cost": best, "match": matches });
        code = verdict_code(matches);
    }
    io.emit(&report)?;
    Ok(code)
}

fn cmd_sweep(n: usize, io: &mut Io<'_>) -> CmdResult {
    let report = sweep(n)?;
    io.emit(&report)?;
    Ok(verdict_code(report.disagreements.is_empty()))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure(EXIT_INPUT, format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn cmd_min_inputs(args: MinInputsArgs, tol: f64, io: &mut Io<'_>) -> CmdResult {
    let pattern = load_pattern(&args.file, io)?;
    let seed = resolve_seed(args.seed)?;
    let report = min_inputs_report(&pattern, args.trials, seed, tol)?;
    io.emit(&json!({
        "m": report.min_inputs,
        "seed": seed,
        "trials": args.trials,
        "tol": tol,
        "checks": report.checks,
    }))?;
    Ok(verdict_code(report.min_inputs.is_some()))
}
