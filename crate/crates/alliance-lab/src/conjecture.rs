//! Reproducible sweeps testing the product inequality
//! `gamma_o(G x H) >= gamma_o(G) gamma_o(H)` over family pairs and random
//! graphs.
//!
//! Every sweep is driven by a named deterministic generator, so a rerun
//! with the same configuration produces byte-identical reports.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{global_offensive_alliance_number, SolveError, SolveOptions, Strategy};
use crate::formulas::{factor_domination_lower, FormulaError};
use crate::graph::{build_family, cartesian_product_with_cap, FamilySpec, Graph, GraphError};

pub use crate::rng::Rng;

/// Name and revision of the pseudo-random stream; part of the report so
/// that archived sweeps stay comparable.
pub const GENERATOR_NAME: &str = "splitmix64/1";

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("could not sample a graph without isolated vertices after {0} attempts")]
    Generation(u32),
}

const SAMPLE_ATTEMPTS: u32 = 64;

/// Samples an Erdos-Renyi graph conditioned on minimum degree one,
/// retrying (on the same stream) until no vertex is isolated.
pub fn random_graph(n: usize, edge_probability: f64, rng: &mut Rng) -> Result<Graph, SweepError> {
    if n < 2 {
        return Err(SweepError::InvalidConfig("random graphs need order >= 2".into()));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(SweepError::InvalidConfig("edge probability must lie in [0, 1]".into()));
    }
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_f64() < edge_probability {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.min_degree() >= 1 {
            return Ok(g);
        }
    }
    Err(SweepError::Generation(SAMPLE_ATTEMPTS))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Both checked inequalities hold.
    Holds,
    /// A proven inequality failed on this case.
    Violation,
    /// The solve budget ran out before the comparison was decided.
    Inconclusive,
}

/// One checked case. Field order is stable and there are no timestamps,
/// so serialized reports can be compared bytewise across reruns.
#[derive(Debug, Clone, Serialize)]
pub struct VizingReport {
    pub case: String,
    pub left_order: usize,
    pub right_order: usize,
    pub gamma_o_left: usize,
    pub gamma_o_right: usize,
    /// Exact value, or the proven bracket when the budget tripped.
    pub gamma_o_product: Option<usize>,
    pub product_lower: usize,
    pub product_upper: usize,
    /// `gamma_o_left * gamma_o_right`, the conjectured floor.
    pub factor_product: usize,
    /// The factor-domination lower bound, checked for consistency.
    pub factor_domination_lower: usize,
    pub verdict: Verdict,
}

/// Checks `gamma_o(G x H) >= gamma_o(G) gamma_o(H)` (and, as an internal
/// consistency test, the factor-domination lower bound) on one pair.
pub fn check_vizing_like(
    g: &Graph,
    h: &Graph,
    case: &str,
    opts: &SolveOptions,
) -> Result<VizingReport, SweepError> {
    let goa_g = global_offensive_alliance_number(g, opts)?.value;
    let goa_h = global_offensive_alliance_number(h, opts)?.value;
    let product = cartesian_product_with_cap(g, h, usize::MAX)?;
    let (exact, lower, upper) =
        match global_offensive_alliance_number(product.graph(), opts) {
            Ok(r) => (Some(r.value), r.value, r.value),
            Err(SolveError::Budget { lower, upper, .. }) => (None, lower, upper),
            Err(e) => return Err(e.into()),
        };
    let factor_product = goa_g * goa_h;
    let fd = factor_domination_lower(g, h, opts)?.lo;
    let verdict = if upper < factor_product || upper < fd {
        Verdict::Violation
    } else if lower >= factor_product && lower >= fd {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    };
    Ok(VizingReport {
        case: case.to_string(),
        left_order: g.n(),
        right_order: h.n(),
        gamma_o_left: goa_g,
        gamma_o_right: goa_h,
        gamma_o_product: exact,
        product_lower: lower,
        product_upper: upper,
        factor_product,
        factor_domination_lower: fd,
        verdict,
    })
}

/// Which pairs a sweep visits.
#[derive(Debug, Clone, Serialize)]
pub enum GeneratorKind {
    /// All ordered pairs of paths, cycles, cliques and stars up to the
    /// given order.
    FamilyPairs { max_order: usize },
    /// Random pairs with orders drawn uniformly from `min_n..=max_n`.
    Random { count: usize, min_n: usize, max_n: usize, edge_probability: f64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub generator: GeneratorKind,
    pub seed: u64,
    /// Pairs whose product would exceed this order are skipped.
    pub product_order_cap: usize,
    pub workers: usize,
    pub node_budget: Option<u64>,
    /// Wall-clock cap for the whole sweep; exceeding it truncates the run.
    #[serde(skip)]
    pub time_budget: Option<Duration>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            generator: GeneratorKind::FamilyPairs { max_order: 5 },
            seed: 0,
            product_order_cap: 64,
            workers: 1,
            node_budget: None,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub generator: String,
    pub seed: u64,
    pub cases: usize,
    pub skipped: usize,
    pub holds: usize,
    pub violations: usize,
    pub inconclusive: usize,
    pub truncated: bool,
}

fn family_roster(max_order: usize) -> Vec<FamilySpec> {
    let mut roster = Vec::new();
    for n in 2..=max_order {
        roster.push(FamilySpec::Path(n));
    }
    for n in 3..=max_order {
        roster.push(FamilySpec::Cycle(n));
    }
    for n in 2..=max_order {
        roster.push(FamilySpec::Complete(n));
    }
    // Stars are listed by order; leaves = order - 1, starting where the
    // star stops being a path.
    for n in 4..=max_order {
        roster.push(FamilySpec::Star(n - 1));
    }
    roster
}

/// Runs a sweep; returns one report per visited pair plus a tally.
pub fn sweep(config: &SweepConfig) -> Result<(Vec<VizingReport>, SweepSummary), SweepError> {
    if config.workers == 0 {
        return Err(SweepError::InvalidConfig("workers must be >= 1".into()));
    }
    if config.product_order_cap == 0 {
        return Err(SweepError::InvalidConfig("product order cap must be >= 1".into()));
    }
    let opts = SolveOptions {
        strategy: Strategy::BranchAndBound,
        workers: config.workers,
        node_budget: config.node_budget,
        ..Default::default()
    };
    let started = Instant::now();
    let out_of_time = || config.time_budget.is_some_and(|t| started.elapsed() > t);

    let mut reports = Vec::new();
    let mut skipped = 0usize;
    let mut truncated = false;

    match &config.generator {
        GeneratorKind::FamilyPairs { max_order } => {
            if *max_order < 2 {
                return Err(SweepError::InvalidConfig("family sweeps need max order >= 2".into()));
            }
            let roster = family_roster(*max_order);
            'outer: for a in &roster {
                for b in &roster {
                    if a.order() * b.order() > config.product_order_cap {
                        skipped += 1;
                        continue;
                    }
                    if out_of_time() {
                        truncated = true;
                        break 'outer;
                    }
                    let g = build_family(a)?;
                    let h = build_family(b)?;
                    reports.push(check_vizing_like(&g, &h, &format!("{a} x {b}"), &opts)?);
                }
            }
        }
        GeneratorKind::Random { count, min_n, max_n, edge_probability } => {
            if *min_n < 2 || max_n < min_n {
                return Err(SweepError::InvalidConfig(
                    "random sweeps need 2 <= min_n <= max_n".into(),
                ));
            }
            let mut rng = Rng::new(config.seed);
            for k in 0..*count {
                let n1 = min_n + rng.below(max_n - min_n + 1);
                let n2 = min_n + rng.below(max_n - min_n + 1);
                let g = random_graph(n1, *edge_probability, &mut rng)?;
                let h = random_graph(n2, *edge_probability, &mut rng)?;
                if n1 * n2 > config.product_order_cap {
                    skipped += 1;
                    continue;
                }
                if out_of_time() {
                    truncated = true;
                    break;
                }
                reports.push(check_vizing_like(
                    &g,
                    &h,
                    &format!("random-{k} ({n1} x {n2} vertices)"),
                    &opts,
                )?);
            }
        }
    }

    let summary = SweepSummary {
        generator: GENERATOR_NAME.to_string(),
        seed: config.seed,
        cases: reports.len(),
        skipped,
        holds: reports.iter().filter(|r| r.verdict == Verdict::Holds).count(),
        violations: reports.iter().filter(|r| r.verdict == Verdict::Violation).count(),
        inconclusive: reports.iter().filter(|r| r.verdict == Verdict::Inconclusive).count(),
        truncated,
    };
    Ok((reports, summary))
}
