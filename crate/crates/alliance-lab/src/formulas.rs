//! Closed formulas and general bounds for alliance numbers of Cartesian
//! products.
//!
//! Each bound is returned as a [`BoundResult`] bracket; callers combine
//! brackets by taking the largest lower and smallest upper end. Families
//! are normalized first so that alias pairs (a two-vertex path and a
//! two-vertex clique, a triangle seen as a cycle or a clique, a 4-cycle
//! seen as a 2-cube) land on one canonical branch; where several branches
//! apply, all are evaluated and intersected.

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    canonical_two_partition, product_partition_goa, ConstructionError, TwoPartition,
};
use crate::exact::{
    domination_number, find_efficient_dominating_set, global_offensive_alliance_number, radius,
    SolveError, SolveOptions,
};
use crate::graph::{cartesian_product, detect_family, FamilySpec, Graph, GraphError};
use crate::spectral::{spectral_lower_bound, SpectralError};

#[derive(Debug, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("bounds are inconsistent: lower {lo} exceeds upper {hi}")]
    Inconsistent { lo: usize, hi: usize },
}

/// A proven bracket `lo ..= hi` (`hi = None` means no upper bound), with
/// the rule that produced it and the preconditions it used.
#[derive(Debug, Clone, Serialize)]
pub struct BoundResult {
    pub lo: usize,
    pub hi: Option<usize>,
    pub source: String,
    pub applicability: Vec<String>,
}

impl BoundResult {
    fn exact(value: usize, source: &str) -> Self {
        BoundResult { lo: value, hi: Some(value), source: source.into(), applicability: vec![] }
    }

    fn bracket(lo: usize, hi: usize, source: &str) -> Self {
        BoundResult { lo, hi: Some(hi), source: source.into(), applicability: vec![] }
    }

    fn lower(lo: usize, source: &str) -> Self {
        BoundResult { lo, hi: None, source: source.into(), applicability: vec![] }
    }

    fn upper(hi: usize, source: &str) -> Self {
        BoundResult { lo: 1, hi: Some(hi), source: source.into(), applicability: vec![] }
    }

    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.applicability = notes;
        self
    }

    /// Is this bracket a single point?
    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }
}

/// A pair of factor families describing a Cartesian product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductSpec {
    pub left: FamilySpec,
    pub right: FamilySpec,
}

/// Folds alias families onto one canonical representative.
fn canonical_family(spec: &FamilySpec) -> FamilySpec {
    match *spec {
        FamilySpec::Path(1) => FamilySpec::Complete(1),
        FamilySpec::Star(1) | FamilySpec::Complete(2) | FamilySpec::Hypercube(1) => {
            FamilySpec::Path(2)
        }
        FamilySpec::Star(2) => FamilySpec::Path(3),
        FamilySpec::Cycle(3) => FamilySpec::Complete(3),
        FamilySpec::Hypercube(2) => FamilySpec::Cycle(4),
        other => other,
    }
}

/// The hypercube dimension of a family, when it is one.
fn hypercube_exponent(spec: &FamilySpec) -> Option<u32> {
    match *spec {
        FamilySpec::Hypercube(k) => Some(k),
        FamilySpec::Path(2) | FamilySpec::Complete(2) | FamilySpec::Star(1) => Some(1),
        FamilySpec::Cycle(4) => Some(2),
        _ => None,
    }
}

/// Exact alliance number of a single family, where known.
fn single_factor(spec: &FamilySpec) -> Option<BoundResult> {
    match *spec {
        FamilySpec::Path(1) | FamilySpec::Complete(1) => {
            Some(BoundResult::exact(1, "one-vertex graph"))
        }
        FamilySpec::Path(n) => Some(BoundResult::exact(n / 2, "path: floor(n/2)")),
        FamilySpec::Cycle(n) => Some(BoundResult::exact(n.div_ceil(2), "cycle: ceil(n/2)")),
        FamilySpec::Complete(n) => Some(BoundResult::exact(n.div_ceil(2), "clique: ceil(n/2)")),
        FamilySpec::Star(_) => Some(BoundResult::exact(1, "star: the hub alone")),
        FamilySpec::Hypercube(k) => Some(hypercube_bounds(k)),
        FamilySpec::Explicit => None,
    }
}

/// Bracket for the k-cube: known exactly up to dimension three, otherwise
/// `ceil(ceil((k+1)/2) 2^(k-1) / k) <= value <= 2^(k-1)`.
pub fn hypercube_bounds(k: u32) -> BoundResult {
    match k {
        0 => BoundResult::exact(1, "one-vertex graph"),
        1 => BoundResult::exact(1, "hypercube: single edge"),
        2 => BoundResult::exact(2, "hypercube: 4-cycle"),
        3 => BoundResult::exact(4, "hypercube: degree counting fixes dimension three"),
        _ => {
            let half = 1usize << (k - 1);
            let lo = ((k as usize + 1).div_ceil(2) * half).div_ceil(k as usize);
            BoundResult::bracket(lo, half, "hypercube: counting lower, halving upper")
        }
    }
}

/// Formula bracket (without the dimension-three sharpening), exposed for
/// comparing the general hypercube bounds against exact values.
pub fn hypercube_formula_bracket(k: u32) -> BoundResult {
    if k == 0 {
        return BoundResult::exact(1, "one-vertex graph");
    }
    let half = 1usize << (k - 1);
    let lo = ((k as usize + 1).div_ceil(2) * half).div_ceil(k as usize);
    BoundResult::bracket(lo, half, "hypercube: counting lower, halving upper")
}

fn grid_formula(r: usize, t: usize) -> BoundResult {
    debug_assert!(r >= 2 && t >= 2);
    let third = |x: usize| x.div_ceil(3);
    let odd_cost = |rows: usize, cols: usize| rows * (cols - 1) / 2 + third(rows);
    match (r % 2, t % 2) {
        (0, 0) => BoundResult::exact(r * t / 2, "grid, both sides even: rt/2"),
        (0, 1) => BoundResult::exact(odd_cost(r, t), "grid, odd columns: r(t-1)/2 + ceil(r/3)"),
        (1, 0) => BoundResult::exact(odd_cost(t, r), "grid, odd rows: t(r-1)/2 + ceil(t/3)"),
        _ => BoundResult::bracket(
            (r - 1) * (t - 1) / 2 + third(r) + third(t),
            odd_cost(r, t).min(odd_cost(t, r)),
            "grid, both sides odd: quarter-count lower, third-rows upper",
        ),
    }
}

fn cylinder_formula(r: usize, t: usize) -> BoundResult {
    debug_assert!(r >= 2 && t >= 3);
    if r % 2 == 0 {
        BoundResult::exact(r * t / 2, "cylinder, even path side: rt/2")
    } else {
        BoundResult::exact(
            (r - 1) * t / 2 + t.div_ceil(3),
            "cylinder, odd path side: (r-1)t/2 + ceil(t/3)",
        )
    }
}

/// The best closed-form bracket known for a product of two named families,
/// or `None` when no closed form applies.
pub fn closed_formula(spec: &ProductSpec) -> Result<Option<BoundResult>, FormulaError> {
    spec.left.validate()?;
    spec.right.validate()?;
    let mut candidates: Vec<BoundResult> = Vec::new();

    if let (Some(a), Some(b)) = (
        hypercube_exponent(&spec.left),
        hypercube_exponent(&spec.right),
    ) {
        let mut hb = hypercube_bounds(a + b);
        hb.source = format!("product is the {}-cube; {}", a + b, hb.source);
        candidates.push(hb);
    }

    let left = canonical_family(&spec.left);
    let right = canonical_family(&spec.right);
    for (a, b) in [(&left, &right), (&right, &left)] {
        let found = match (a, b) {
            (FamilySpec::Complete(1), other) => single_factor(other),
            (FamilySpec::Path(r), FamilySpec::Path(t)) => Some(grid_formula(*r, *t)),
            (FamilySpec::Path(r), FamilySpec::Cycle(t)) => Some(cylinder_formula(*r, *t)),
            (FamilySpec::Cycle(r), FamilySpec::Cycle(t)) => Some(BoundResult::exact(
                (r * t).div_ceil(2),
                "torus: ceil(rt/2)",
            )),
            (FamilySpec::Complete(r), FamilySpec::Path(t)) => Some(BoundResult::exact(
                r * t / 2,
                "clique times path: floor(rt/2)",
            )),
            (FamilySpec::Complete(r), FamilySpec::Cycle(t)) => Some(BoundResult::exact(
                (r * t).div_ceil(2),
                "clique times cycle: ceil(rt/2)",
            )),
            (FamilySpec::Complete(r), FamilySpec::Complete(t)) => {
                if r % 2 == t % 2 {
                    Some(BoundResult::exact(
                        (r * t).div_ceil(2),
                        "two cliques of equal parity: ceil(rt/2)",
                    ))
                } else {
                    Some(BoundResult::bracket(
                        (r * t * (r + t - 1)).div_ceil(2 * (r + t)),
                        (r * t).div_ceil(2),
                        "two cliques of mixed parity: counting lower, halving upper",
                    ))
                }
            }
            _ => None,
        };
        if let Some(c) = found {
            candidates.push(c);
        }
        if left == right {
            break;
        }
    }

    if candidates.is_empty() {
        return Ok(None);
    }
    combine(candidates).map(Some)
}

fn combine(parts: Vec<BoundResult>) -> Result<BoundResult, FormulaError> {
    let lo = parts.iter().map(|p| p.lo).max().unwrap_or(1);
    let hi = parts.iter().filter_map(|p| p.hi).min();
    if let Some(h) = hi {
        if lo > h {
            return Err(FormulaError::Inconsistent { lo, hi: h });
        }
    }
    let mut sources: Vec<&str> = parts.iter().map(|p| p.source.as_str()).collect();
    sources.dedup();
    Ok(BoundResult {
        lo,
        hi,
        source: sources.join("; "),
        applicability: vec![],
    })
}

/// Lower bound from factor domination: half of `gamma(G) gamma_o(H)` and
/// `gamma_o(G) gamma(H)`, losing the halving on a side that admits an
/// efficient dominating set.
pub fn factor_domination_lower(
    g: &Graph,
    h: &Graph,
    opts: &SolveOptions,
) -> Result<BoundResult, FormulaError> {
    let gamma_g = domination_number(g, opts)?.value;
    let gamma_h = domination_number(h, opts)?.value;
    let goa_g = global_offensive_alliance_number(g, opts)?.value;
    let goa_h = global_offensive_alliance_number(h, opts)?.value;
    let mut lo = (gamma_g * goa_h).max(goa_g * gamma_h).div_ceil(2);
    let mut notes = Vec::new();
    if find_efficient_dominating_set(g, opts)?.is_some() {
        lo = lo.max(gamma_g * goa_h);
        notes.push("left factor admits an efficient dominating set".to_string());
    }
    if find_efficient_dominating_set(h, opts)?.is_some() {
        lo = lo.max(goa_g * gamma_h);
        notes.push("right factor admits an efficient dominating set".to_string());
    }
    Ok(BoundResult::lower(lo, "factor domination product").with_notes(notes))
}

/// Lower bound for `G x P_t` (`t >= 2`, no isolated vertices in `G`):
/// `ceil((t-1) gamma_o(G) / 2) + ceil(min_degree(G) / 2)`.
pub fn path_product_lower(
    g: &Graph,
    path_order: usize,
    opts: &SolveOptions,
) -> Result<BoundResult, FormulaError> {
    if path_order < 2 {
        return Err(FormulaError::NotApplicable("the path factor needs order >= 2".into()));
    }
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(FormulaError::NotApplicable(
            "the other factor must have minimum degree >= 1".into(),
        ));
    }
    let goa = global_offensive_alliance_number(g, opts)?.value;
    let lo = ((path_order - 1) * goa).div_ceil(2) + g.min_degree().div_ceil(2);
    Ok(BoundResult::lower(lo, "path-fiber counting"))
}

/// Lower bound for `G x C_t` (`t >= 3`): `ceil(t gamma_o(G) / 2)`.
pub fn cycle_product_lower(
    g: &Graph,
    cycle_order: usize,
    opts: &SolveOptions,
) -> Result<BoundResult, FormulaError> {
    if cycle_order < 3 {
        return Err(FormulaError::NotApplicable("the cycle factor needs order >= 3".into()));
    }
    if g.n() == 0 {
        return Err(FormulaError::NotApplicable("the other factor is empty".into()));
    }
    let goa = global_offensive_alliance_number(g, opts)?.value;
    Ok(BoundResult::lower((cycle_order * goa).div_ceil(2), "cycle-fiber counting"))
}

/// Upper bound for products of connected graphs:
/// `n1 n2 - 2 radius(G) radius(H)`.
pub fn radius_upper(g: &Graph, h: &Graph) -> Result<BoundResult, FormulaError> {
    if !g.is_connected() || !h.is_connected() || g.n() == 0 || h.n() == 0 {
        return Err(FormulaError::NotApplicable(
            "the radius bound needs both factors connected".into(),
        ));
    }
    let hi = g.n() * h.n() - 2 * radius(g)? * radius(h)?;
    Ok(BoundResult::upper(hi, "radius-ball removal")
        .with_notes(vec!["both factors connected".into()]))
}

/// Upper bound when the left factor is connected and bipartite:
/// `n1 n2 - ceil(n1 a2(H) / 2)` where `a2` is the maximum order of an
/// induced bipartite subgraph. (The fractional form is floored; the
/// alliance number is an integer.)
pub fn bipartite_factor_upper(
    g: &Graph,
    h: &Graph,
    opts: &SolveOptions,
) -> Result<BoundResult, FormulaError> {
    if g.n() < 2 || !g.is_connected() || g.bipartition().is_none() {
        return Err(FormulaError::NotApplicable(
            "the left factor must be connected bipartite of order >= 2".into(),
        ));
    }
    if h.n() == 0 {
        return Err(FormulaError::NotApplicable("the right factor is empty".into()));
    }
    let a2 = bipartite_number_of(h, opts)?;
    let hi = g.n() * h.n() - (g.n() * a2).div_ceil(2);
    Ok(
        BoundResult::upper(hi, "bipartite factor versus induced-bipartite part (floored)")
            .with_notes(vec!["left factor connected bipartite".into()]),
    )
}

fn bipartite_number_of(h: &Graph, opts: &SolveOptions) -> Result<usize, FormulaError> {
    Ok(crate::exact::bipartite_number(h, opts)?.value)
}

/// Upper bound when both factors are connected and bipartite:
/// `floor(n1 n2 / 2)`.
pub fn bipartite_pair_upper(g: &Graph, h: &Graph) -> Result<BoundResult, FormulaError> {
    for (side, f) in [("left", g), ("right", h)] {
        if f.n() < 2 || !f.is_connected() || f.bipartition().is_none() {
            return Err(FormulaError::NotApplicable(format!(
                "the {side} factor must be connected bipartite of order >= 2"
            )));
        }
    }
    Ok(BoundResult::upper(g.n() * h.n() / 2, "two bipartite factors: half the product")
        .with_notes(vec!["both factors connected bipartite".into()]))
}

/// Upper bound from an explicit two-partition pairing; the returned bound
/// is certified by constructing and verifying the alliance.
pub fn partition_product_upper(
    g: &Graph,
    h: &Graph,
    gp: &TwoPartition,
    hp: &TwoPartition,
) -> Result<BoundResult, FormulaError> {
    let (_, c) = product_partition_goa(g, h, gp, hp)?;
    Ok(BoundResult::upper(c.cardinality(), "two-partition product (verified)"))
}

/// Upper bound `floor(r n / 2)` for a clique factor against a graph that
/// partitions into two offensive alliances; certified by construction.
pub fn complete_factor_partition_upper(
    r: usize,
    h: &Graph,
    hp: &TwoPartition,
) -> Result<BoundResult, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NotApplicable("the clique factor needs order >= 2".into()));
    }
    if !hp.x1_offensive || !hp.x2_offensive {
        return Err(FormulaError::NotApplicable(
            "the partner graph must split into two offensive alliances".into(),
        ));
    }
    let (k, kp) = canonical_two_partition(&FamilySpec::Complete(r))?;
    let built = [hp.clone(), hp.swapped()]
        .iter()
        .filter_map(|p| partition_product_upper(&k, h, &kp, p).ok())
        .filter_map(|b| b.hi)
        .min()
        .ok_or_else(|| {
            FormulaError::NotApplicable("no pairing satisfied the partition hypothesis".into())
        })?;
    let formula = r * h.n() / 2;
    if built > formula {
        return Err(FormulaError::Inconsistent { lo: built, hi: formula });
    }
    Ok(
        BoundResult::upper(built, "clique against a two-alliance partition: floor(rn/2)")
            .with_notes(vec![format!("formula value floor(rn/2) = {formula}")]),
    )
}

/// All bounds applying to one product, with their combination.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub combined: BoundResult,
    pub parts: Vec<BoundResult>,
}

/// Assembles every applicable bound for `gamma_o(G x H)` and intersects
/// them. Fails with [`FormulaError::Inconsistent`] if the pieces ever
/// contradict each other.
pub fn bound_envelope(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Envelope, FormulaError> {
    let pg = cartesian_product(g, h)?;
    let n = pg.graph().n();
    let mut parts = vec![BoundResult::bracket(1, n, "trivial: 1 <= value <= n")];

    let famg = detect_family(g);
    let famh = detect_family(h);
    if let (Some(left), Some(right)) = (famg.clone(), famh.clone()) {
        if let Some(mut c) = closed_formula(&ProductSpec { left, right })? {
            c.source = format!("closed formula: {}", c.source);
            parts.push(c);
        }
    }

    parts.push(factor_domination_lower(g, h, opts)?);

    if let Some(FamilySpec::Path(t)) = famh {
        if let Ok(b) = path_product_lower(g, t, opts) {
            parts.push(b);
        }
    }
    if let Some(FamilySpec::Path(r)) = famg {
        if let Ok(b) = path_product_lower(h, r, opts) {
            parts.push(b);
        }
    }
    if let Some(FamilySpec::Cycle(t)) = famh {
        if let Ok(b) = cycle_product_lower(g, t, opts) {
            parts.push(b);
        }
    }
    if let Some(FamilySpec::Cycle(r)) = famg {
        if let Ok(b) = cycle_product_lower(h, r, opts) {
            parts.push(b);
        }
    }

    if let Ok(b) = radius_upper(g, h) {
        parts.push(b);
    }
    if let Ok(b) = bipartite_factor_upper(g, h, opts) {
        parts.push(b);
    }
    if let Ok(b) = bipartite_factor_upper(h, g, opts) {
        parts.push(b);
    }
    if let Ok(b) = bipartite_pair_upper(g, h) {
        parts.push(b);
    }

    // The canonical split is defined on the family's own labeling; explicit
    // inputs may label vertices differently, so the profile is re-checked
    // on the actual graph before pairing.
    let canon_partition = |actual: &Graph, fam: &Option<FamilySpec>| -> Option<TwoPartition> {
        let spec = fam.as_ref()?;
        if !matches!(
            spec,
            FamilySpec::Path(_) | FamilySpec::Cycle(_) | FamilySpec::Complete(_)
        ) {
            return None;
        }
        let (_, p) = canonical_two_partition(spec).ok()?;
        TwoPartition::classify(actual, p.x1, p.x2).ok()
    };
    if let (Some(gp), Some(hp)) = (canon_partition(g, &famg), canon_partition(h, &famh)) {
        let best = [hp.clone(), hp.swapped()]
            .iter()
            .filter_map(|p| partition_product_upper(g, h, &gp, p).ok())
            .min_by_key(|b| b.hi);
        if let Some(b) = best {
            parts.push(b);
        }
    }

    if pg.graph().is_connected() && n >= 2 {
        let (lo, spec_result) = spectral_lower_bound(pg.graph())?;
        parts.push(
            BoundResult::lower(lo, "spectral: ceil(n ceil((min_degree+1)/2) / lambda)")
                .with_notes(vec![format!("laplacian spectral radius {}", spec_result.lambda)]),
        );
    }

    let combined = combine(parts.clone()).map(|mut c| {
        c.source = "envelope".into();
        let lo_src = parts
            .iter()
            .filter(|p| p.lo == c.lo)
            .map(|p| p.source.clone())
            .next()
            .unwrap_or_default();
        let hi_src = parts
            .iter()
            .filter(|p| p.hi == c.hi)
            .map(|p| p.source.clone())
            .next()
            .unwrap_or_default();
        c.applicability = vec![format!("lower from: {lo_src}"), format!("upper from: {hi_src}")];
        c
    })?;
    Ok(Envelope { combined, parts })
}
