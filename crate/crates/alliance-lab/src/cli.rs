//! Command-line front end.
//!
//! Every analysis command prints one JSON report:
//!
//! ```json
//! { "schema": "alliance-lab/1", "command": "...", "inputs": {...},
//!   "results": {...}, "timing": {...}, "version": "..." }
//! ```
//!
//! `gen` and `product` print a plain edge list instead so their output can
//! feed back into `--graph @file` arguments. Exit codes: `0` success (and
//! any checked property holds), `1` a verdict is false, a violation was
//! found, or a budget ran out undecided, `2` bad input or usage, `3` a
//! bound combination contradicted itself.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::conjecture::{
    check_vizing_like, sweep, GeneratorKind, SweepConfig, SweepError, Verdict, GENERATOR_NAME,
};
use crate::constructions::{
    canonical_two_partition, complement_of_independent_set, cylinder_goa, grid_goa,
    product_partition_goa, Construction, ConstructionError,
};
use crate::edgelist::{parse_edge_list, serialize_edge_list};
use crate::exact::{
    bipartite_number, domination_number, find_efficient_dominating_set,
    global_offensive_alliance_number, independence_number, radius, star_characterization,
    SolveError, SolveOptions, Strategy,
};
use crate::formulas::{bound_envelope, closed_formula, FormulaError, ProductSpec};
use crate::graph::{
    build_family, cartesian_product, FamilySpec, Graph, GraphError, ProductGraph,
};
use crate::set::VertexSet;
use crate::spectral::{laplacian_spectral_radius, spectral_lower_bound};
use crate::verify::{
    check_partition, check_square_lemma, is_dominating_set, is_efficient_dominating_set,
    is_global_offensive_alliance, is_global_strong_offensive_alliance, Certificate, PartitionMode,
};

const SCHEMA: &str = "alliance-lab/1";

#[derive(Parser)]
#[command(
    name = "alliance-lab",
    version,
    about = "Global offensive alliances in graphs and their Cartesian products",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edge list of a family or product expression
    Gen {
        /// Family token (P4, C6, K3, S5, Q3) or product such as P4xC6
        #[arg(long)]
        family: String,
        /// Also write the edge list to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the edge list of the Cartesian product of two graphs
    Product {
        #[command(flatten)]
        pair: PairArgs,
        /// Also write the edge list to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a claimed set or partition against a graph
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Compute an exact invariant with the baseline solver
    Solve {
        problem: Problem,
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Look up the closed-form value or bracket for a named product
    Formula {
        /// Product expression such as P4xC6 or K3xK4
        #[arg(long)]
        family: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Combine every applicable bound for a product into one envelope
    Bounds {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Build a verified alliance from a known recipe
    Construct {
        #[command(subcommand)]
        recipe: ConstructCmd,
    },
    /// Laplacian spectral radius and the derived lower bound
    Spectral {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Test the product inequality on one pair or a reproducible sweep
    Conjecture {
        #[command(subcommand)]
        what: ConjectureCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// Minimum dominating set
    Gamma,
    /// Minimum global offensive alliance
    GammaO,
    /// Maximum independent set
    Alpha,
    /// Maximum induced bipartite subgraph
    Alpha2,
    /// Graph radius
    Radius,
    /// Minimum efficient dominating set, if one exists
    Eds,
    /// Star characterization of alliance-compatible efficient domination
    StarChar,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Dominating set
    Dom(SetCheckArgs),
    /// Global offensive alliance
    Goa(SetCheckArgs),
    /// Global strong offensive alliance
    Strong(SetCheckArgs),
    /// Efficient dominating set
    Eds(SetCheckArgs),
    /// Two-part alliance partition
    Partition {
        #[arg(long)]
        graph: String,
        /// First part, e.g. 0,2,4
        #[arg(long)]
        set: String,
        /// Second part
        #[arg(long)]
        set2: String,
        /// both: two offensive parts; mixed: offensive plus strong
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Every unit square of a path/cycle product meets the set twice
    SquareLemma {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        set: String,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Args)]
struct SetCheckArgs {
    #[arg(long)]
    graph: String,
    /// Comma-separated vertex indices, e.g. 0,2,4
    #[arg(long)]
    set: String,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Both,
    Mixed,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Alliance in a grid (path times path)
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Alliance in a cylinder (path times cycle)
    Cylinder {
        #[arg(long)]
        rows: usize,
        /// Order of the cycle factor
        #[arg(long)]
        cycle: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Product alliance from canonical two-partitions of both factors
    Partition {
        /// Family token for the left factor (path, cycle or clique)
        #[arg(long)]
        left: String,
        /// Family token for the right factor (path, cycle or clique)
        #[arg(long)]
        right: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Complement of an independent set
    ComplementIs {
        #[arg(long)]
        graph: String,
        /// The independent set, e.g. 0,2,4
        #[arg(long)]
        set: String,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Check the product inequality on one pair of graphs
    Check {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run a reproducible sweep over many pairs
    Sweep {
        /// Sweep all ordered pairs of paths, cycles, cliques and stars
        #[arg(long, conflicts_with = "random")]
        families: bool,
        /// Sweep this many random pairs instead
        #[arg(long)]
        random: Option<usize>,
        /// Largest factor order (families) or order range top (random)
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Smallest random factor order
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        /// Edge probability for random factors
        #[arg(long, default_value_t = 0.5)]
        edge_probability: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip pairs whose product has more vertices than this
        #[arg(long, default_value_t = 64)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Wall-clock budget for the whole sweep, in seconds
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Write violating cases to this file, one JSON object per line
        #[arg(long)]
        violations: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
}

/// Two factor graphs, each a family token, product expression or @file.
#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Args, Clone)]
struct SolveArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::BranchAndBound)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Abort after roughly this many search nodes
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Abort after this much wall-clock time
    #[arg(long)]
    budget_seconds: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Enumeration,
    BranchAndBound,
}

impl SolveArgs {
    fn options(&self) -> Result<SolveOptions, CliError> {
        if self.workers == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        Ok(SolveOptions {
            strategy: match self.strategy {
                StrategyArg::Enumeration => Strategy::Enumeration,
                StrategyArg::BranchAndBound => Strategy::BranchAndBound,
            },
            workers: self.workers,
            node_budget: self.budget_nodes,
            time_budget: self.budget_seconds.map(Duration::from_secs_f64),
            lower_floor: None,
        })
    }

    fn describe(&self) -> Value {
        json!({
            "strategy": match self.strategy {
                StrategyArg::Enumeration => "enumeration",
                StrategyArg::BranchAndBound => "branch-and-bound",
            },
            "workers": self.workers,
            "budget_nodes": self.budget_nodes,
            "budget_seconds": self.budget_seconds,
        })
    }
}

#[derive(Args)]
struct ReportArgs {
    /// Also write the JSON report to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    EdgeList(#[from] crate::edgelist::ParseError),
    #[error(transparent)]
    Set(#[from] crate::set::VertexOutOfRange),
    #[error(transparent)]
    Verify(#[from] crate::verify::VerifyError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Spectral(#[from] crate::spectral::SpectralError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Formula(FormulaError::Inconsistent { .. }) => 3,
            _ => 2,
        }
    }
}

/// Parses a graph source: `@path` reads an edge-list file, `AxB` builds a
/// Cartesian product of family tokens, anything else is a family token.
fn parse_source(src: &str) -> Result<Graph, CliError> {
    if let Some(path) = src.strip_prefix('@') {
        let path = PathBuf::from(path);
        let text = fs::read_to_string(&path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        return Ok(parse_edge_list(&text)?);
    }
    if let Some((a, b)) = split_product(src) {
        let g = build_family(&FamilySpec::from_str(a)?)?;
        let h = build_family(&FamilySpec::from_str(b)?)?;
        return Ok(cartesian_product(&g, &h)?.into_graph());
    }
    Ok(build_family(&FamilySpec::from_str(src)?)?)
}

fn parse_family(src: &str) -> Result<FamilySpec, CliError> {
    Ok(FamilySpec::from_str(src)?)
}

/// Splits `P4xC6` into its two family tokens. The separator is a lone
/// lowercase `x`; family letters are upper-case, so this is unambiguous.
fn split_product(src: &str) -> Option<(&str, &str)> {
    let i = src.find('x')?;
    let (a, b) = (src[..i].trim(), src[i + 1..].trim());
    (!a.is_empty() && !b.is_empty() && !b.contains('x')).then_some((a, b))
}

fn parse_set(g: &Graph, text: &str) -> Result<VertexSet, CliError> {
    let mut indices = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let v: usize = token
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex index {token:?} in --set")))?;
        indices.push(v);
    }
    Ok(VertexSet::from_indices(g.n(), indices.iter().copied())?)
}

struct Outcome {
    command: String,
    inputs: Value,
    results: Value,
    code: u8,
    out: Option<PathBuf>,
}

fn certificate_outcome(cert: &Certificate) -> u8 {
    u8::from(!cert.verdict)
}

fn graph_summary(g: &Graph) -> Value {
    json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "family": g.family().map(|f| f.to_string()),
    })
}

fn product_vertices(pg: &ProductGraph, c: &Construction) -> Value {
    let coords: Vec<[usize; 2]> = c.set.iter().map(|v| {
        let (i, j) = pg.coords(v);
        [i, j]
    }).collect();
    json!(coords)
}

fn construction_json(c: &Construction, vertices: Value) -> Value {
    json!({
        "recipe": c.recipe,
        "cardinality": c.cardinality(),
        "vertices": vertices,
    })
}

/// Runs the CLI on explicit arguments, returning the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if informational { 0 } else { 2 };
        }
    };
    let started = Instant::now();
    match dispatch(cli.command) {
        Ok(Output::Report(outcome)) => {
            let report = json!({
                "schema": SCHEMA,
                "version": env!("CARGO_PKG_VERSION"),
                "command": outcome.command,
                "inputs": outcome.inputs,
                "results": outcome.results,
                "timing": { "seconds": started.elapsed().as_secs_f64() },
            });
            let text = format!("{report:#}");
            println!("{text}");
            if let Some(path) = outcome.out {
                if let Err(e) = fs::write(&path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            outcome.code
        }
        Ok(Output::Raw { text, out }) => {
            print!("{text}");
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// A JSON report, or an already formatted plain artifact (edge lists).
enum Output {
    Report(Outcome),
    Raw { text: String, out: Option<PathBuf> },
}

fn dispatch(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Gen { family, out } => {
            let g = parse_source(&family)?;
            Ok(Output::Raw { text: serialize_edge_list(&g), out })
        }
        Command::Product { pair, out } => {
            let g = parse_source(&pair.left)?;
            let h = parse_source(&pair.right)?;
            let pg = cartesian_product(&g, &h)?;
            Ok(Output::Raw { text: serialize_edge_list(pg.graph()), out })
        }
        Command::Verify { what } => verify_cmd(what).map(Output::Report),
        Command::Solve {
            problem,
            graph,
            solve,
            report,
        } => solve_cmd(problem, &graph, &solve, report).map(Output::Report),
        Command::Formula { family, report } => formula_cmd(&family, report).map(Output::Report),
        Command::Bounds {
            pair,
            solve,
            report,
        } => bounds_cmd(&pair, &solve, report).map(Output::Report),
        Command::Construct { recipe } => construct_cmd(recipe).map(Output::Report),
        Command::Spectral { graph, report } => spectral_cmd(&graph, report).map(Output::Report),
        Command::Conjecture { what } => conjecture_cmd(what).map(Output::Report),
    }
}

fn verify_cmd(what: VerifyCmd) -> Result<Outcome, CliError> {
    match what {
        VerifyCmd::Dom(a) => set_check("verify dom", a, is_dominating_set),
        VerifyCmd::Goa(a) => set_check("verify goa", a, is_global_offensive_alliance),
        VerifyCmd::Strong(a) => set_check("verify strong", a, is_global_strong_offensive_alliance),
        VerifyCmd::Eds(a) => set_check("verify eds", a, is_efficient_dominating_set),
        VerifyCmd::Partition {
            graph,
            set,
            set2,
            mode,
            report,
        } => {
            let g = parse_source(&graph)?;
            let x1 = parse_set(&g, &set)?;
            let x2 = parse_set(&g, &set2)?;
            let m = match mode {
                ModeArg::Both => PartitionMode::BothOffensive,
                ModeArg::Mixed => PartitionMode::OffensivePlusStrong,
            };
            let cert = check_partition(&g, &[x1.clone(), x2.clone()], m)?;
            Ok(Outcome {
                command: "verify partition".into(),
                inputs: json!({
                    "graph": graph_summary(&g),
                    "set": x1,
                    "set2": x2,
                    "mode": match m {
                        PartitionMode::BothOffensive => "both",
                        PartitionMode::OffensivePlusStrong => "mixed",
                    },
                }),
                code: certificate_outcome(&cert),
                results: json!(cert),
                out: report.out,
            })
        }
        VerifyCmd::SquareLemma { pair, set, report } => {
            let g = parse_source(&pair.left)?;
            let h = parse_source(&pair.right)?;
            let pg = cartesian_product(&g, &h)?;
            let s = parse_set(pg.graph(), &set)?;
            let cert = check_square_lemma(&pg, &s)?;
            Ok(Outcome {
                command: "verify square-lemma".into(),
                inputs: json!({
                    "left": graph_summary(&g),
                    "right": graph_summary(&h),
                    "set": s,
                }),
                code: certificate_outcome(&cert),
                results: json!(cert),
                out: report.out,
            })
        }
    }
}

fn set_check(
    command: &str,
    args: SetCheckArgs,
    check: fn(&Graph, &VertexSet) -> Result<Certificate, crate::verify::VerifyError>,
) -> Result<Outcome, CliError> {
    let g = parse_source(&args.graph)?;
    let s = parse_set(&g, &args.set)?;
    let cert = check(&g, &s)?;
    Ok(Outcome {
        command: command.into(),
        inputs: json!({ "graph": graph_summary(&g), "set": s }),
        code: certificate_outcome(&cert),
        results: json!(cert),
        out: args.report.out,
    })
}

fn solve_cmd(
    problem: Problem,
    graph: &str,
    solve: &SolveArgs,
    report: ReportArgs,
) -> Result<Outcome, CliError> {
    let g = parse_source(graph)?;
    let opts = solve.options()?;
    let name = match problem {
        Problem::Gamma => "solve gamma",
        Problem::GammaO => "solve gamma-o",
        Problem::Alpha => "solve alpha",
        Problem::Alpha2 => "solve alpha2",
        Problem::Radius => "solve radius",
        Problem::Eds => "solve eds",
        Problem::StarChar => "solve star-char",
    };
    let (results, code) = match problem {
        Problem::Gamma => optimum_json(domination_number(&g, &opts))?,
        Problem::GammaO => optimum_json(global_offensive_alliance_number(&g, &opts))?,
        Problem::Alpha => optimum_json(independence_number(&g, &opts))?,
        Problem::Alpha2 => optimum_json(bipartite_number(&g, &opts))?,
        Problem::Radius => (json!({ "radius": radius(&g)? }), 0),
        Problem::Eds => {
            let found = find_efficient_dominating_set(&g, &opts)?;
            let code = u8::from(found.is_none());
            (
                json!({ "exists": found.is_some(), "search": found }),
                code,
            )
        }
        Problem::StarChar => {
            let ch = star_characterization(&g, &opts)?;
            let code = u8::from(!ch.matches);
            (json!(ch), code)
        }
    };
    Ok(Outcome {
        command: name.into(),
        inputs: json!({ "graph": graph_summary(&g), "solver": solve.describe() }),
        results,
        code,
        out: report.out,
    })
}

/// Renders an exact solve, downgrading a spent budget to its proven
/// bracket with exit code 1.
fn optimum_json(
    solved: Result<crate::exact::SolveResult, SolveError>,
) -> Result<(Value, u8), CliError> {
    match solved {
        Ok(r) => Ok((json!(r), 0)),
        Err(SolveError::Budget { explored, lower, upper, witness }) => Ok((
            json!({
                "budget_exhausted": true,
                "nodes_explored": explored,
                "proven_bracket": { "lo": lower, "hi": upper },
                "feasible_witness": witness,
            }),
            1,
        )),
        Err(e) => Err(e.into()),
    }
}

fn formula_cmd(family: &str, report: ReportArgs) -> Result<Outcome, CliError> {
    let (a, b) = split_product(family).ok_or_else(|| {
        CliError::Usage(format!(
            "--family must be a product expression such as P4xC6, got {family:?}"
        ))
    })?;
    let spec = ProductSpec {
        left: parse_family(a)?,
        right: parse_family(b)?,
    };
    let bracket = closed_formula(&spec)?;
    Ok(Outcome {
        command: "formula".into(),
        inputs: json!({ "left": spec.left, "right": spec.right }),
        results: json!({ "bracket": bracket }),
        code: 0,
        out: report.out,
    })
}

fn bounds_cmd(pair: &PairArgs, solve: &SolveArgs, report: ReportArgs) -> Result<Outcome, CliError> {
    let g = parse_source(&pair.left)?;
    let h = parse_source(&pair.right)?;
    let opts = solve.options()?;
    let envelope = bound_envelope(&g, &h, &opts)?;
    Ok(Outcome {
        command: "bounds".into(),
        inputs: json!({
            "left": graph_summary(&g),
            "right": graph_summary(&h),
            "solver": solve.describe(),
        }),
        results: json!(envelope),
        code: 0,
        out: report.out,
    })
}

fn construct_cmd(recipe: ConstructCmd) -> Result<Outcome, CliError> {
    match recipe {
        ConstructCmd::Grid { rows, cols, report } => {
            let (pg, c) = grid_goa(rows, cols)?;
            let vertices = product_vertices(&pg, &c);
            Ok(Outcome {
                command: "construct grid".into(),
                inputs: json!({ "rows": rows, "cols": cols }),
                results: construction_json(&c, vertices),
                code: 0,
                out: report.out,
            })
        }
        ConstructCmd::Cylinder { rows, cycle, report } => {
            let (pg, c) = cylinder_goa(rows, cycle)?;
            let vertices = product_vertices(&pg, &c);
            Ok(Outcome {
                command: "construct cylinder".into(),
                inputs: json!({ "rows": rows, "cycle": cycle }),
                results: construction_json(&c, vertices),
                code: 0,
                out: report.out,
            })
        }
        ConstructCmd::Partition { left, right, report } => {
            let ls = parse_family(&left)?;
            let rs = parse_family(&right)?;
            let (g, gp) = canonical_two_partition(&ls)?;
            let (h, hp) = canonical_two_partition(&rs)?;
            let attempt = product_partition_goa(&g, &h, &gp, &hp);
            let (pg, c) = match attempt {
                Ok(built) => built,
                Err(ConstructionError::HypothesisNotMet(_)) => {
                    product_partition_goa(&g, &h, &gp, &hp.swapped())?
                }
                Err(e) => return Err(e.into()),
            };
            let vertices = product_vertices(&pg, &c);
            Ok(Outcome {
                command: "construct partition".into(),
                inputs: json!({ "left": ls, "right": rs }),
                results: construction_json(&c, vertices),
                code: 0,
                out: report.out,
            })
        }
        ConstructCmd::ComplementIs { graph, set, report } => {
            let g = parse_source(&graph)?;
            let s = parse_set(&g, &set)?;
            let c = complement_of_independent_set(&g, &s)?;
            let vertices = json!(c.set);
            Ok(Outcome {
                command: "construct complement-is".into(),
                inputs: json!({ "graph": graph_summary(&g), "set": s }),
                results: construction_json(&c, vertices),
                code: 0,
                out: report.out,
            })
        }
    }
}

fn spectral_cmd(graph: &str, report: ReportArgs) -> Result<Outcome, CliError> {
    let g = parse_source(graph)?;
    let radius_result = laplacian_spectral_radius(&g)?;
    let (lower, _) = spectral_lower_bound(&g)?;
    Ok(Outcome {
        command: "spectral".into(),
        inputs: json!({ "graph": graph_summary(&g) }),
        results: json!({
            "laplacian_spectral_radius": radius_result.lambda,
            "residual": radius_result.residual,
            "iterations": radius_result.iterations,
            "alliance_lower_bound": lower,
        }),
        code: 0,
        out: report.out,
    })
}

fn conjecture_cmd(what: ConjectureCmd) -> Result<Outcome, CliError> {
    match what {
        ConjectureCmd::Check { pair, solve, report } => {
            let g = parse_source(&pair.left)?;
            let h = parse_source(&pair.right)?;
            let opts = solve.options()?;
            let case = format!("{} x {}", pair.left, pair.right);
            let r = check_vizing_like(&g, &h, &case, &opts)?;
            let code = u8::from(r.verdict != Verdict::Holds);
            Ok(Outcome {
                command: "conjecture check".into(),
                inputs: json!({
                    "left": graph_summary(&g),
                    "right": graph_summary(&h),
                    "solver": solve.describe(),
                }),
                results: json!(r),
                code,
                out: report.out,
            })
        }
        ConjectureCmd::Sweep {
            families,
            random,
            max_n,
            min_n,
            edge_probability,
            seed,
            cap,
            workers,
            budget_nodes,
            budget_seconds,
            violations,
            report,
        } => {
            let generator = match (families, random) {
                (true, None) => GeneratorKind::FamilyPairs { max_order: max_n },
                (false, Some(count)) => GeneratorKind::Random {
                    count,
                    min_n,
                    max_n,
                    edge_probability,
                },
                (false, None) => {
                    return Err(CliError::Usage(
                        "choose a generator: --families or --random <count>".into(),
                    ))
                }
                (true, Some(_)) => unreachable!("clap forbids this combination"),
            };
            let config = SweepConfig {
                generator,
                seed,
                product_order_cap: cap,
                workers,
                node_budget: budget_nodes,
                time_budget: budget_seconds.map(Duration::from_secs_f64),
            };
            let (reports, summary) = sweep(&config)?;
            if let Some(path) = violations {
                let mut text = String::new();
                for r in reports.iter().filter(|r| r.verdict == Verdict::Violation) {
                    let line = serde_json::to_string(r).expect("reports serialize");
                    let _ = writeln!(text, "{line}");
                }
                fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
            }
            let code = u8::from(summary.violations > 0 || summary.inconclusive > 0);
            Ok(Outcome {
                command: "conjecture sweep".into(),
                inputs: json!({
                    "config": config,
                    "generator_name": GENERATOR_NAME,
                }),
                results: json!({ "summary": summary, "reports": reports }),
                code,
                out: report.out,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_expressions_split_cleanly() {
        assert_eq!(split_product("P4xC6"), Some(("P4", "C6")));
        assert_eq!(split_product("Q3xK2"), Some(("Q3", "K2")));
        assert_eq!(split_product("P4"), None);
        assert_eq!(split_product("xC6"), None);
        assert_eq!(split_product("P4x"), None);
        assert_eq!(split_product("P4xC6xK2"), None);
    }

    #[test]
    fn sources_parse() {
        assert_eq!(parse_source("P4").unwrap().n(), 4);
        assert_eq!(parse_source("P4xC6").unwrap().n(), 24);
        assert!(parse_source("Z9").is_err());
        assert!(parse_source("@/does/not/exist").is_err());
    }

    #[test]
    fn set_parsing_respects_the_graph_order() {
        let g = build_family(&FamilySpec::Path(4)).unwrap();
        let s = parse_set(&g, "0, 2").unwrap();
        assert_eq!(s.indices(), vec![0, 2]);
        assert!(parse_set(&g, "0,9").is_err());
        assert!(parse_set(&g, "0,two").is_err());
    }
}
