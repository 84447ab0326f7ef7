//! Exact solvers.
//!
//! Two independent strategies compute alliance and domination numbers:
//!
//! * [`Strategy::Enumeration`] scans subsets of each component in
//!   lexicographic order by increasing cardinality. It is the reference
//!   oracle: slow, but with no pruning logic to get wrong.
//! * [`Strategy::BranchAndBound`] decides vertices in index order
//!   (include first) with forcing, feasibility and counting-bound pruning.
//!
//! Both return the same optimum and the same witness: the lexicographically
//! least optimal set. Work is split over workers by fixing the membership
//! pattern of the first few vertices; every pattern is searched
//! independently, so the result (and the node count) does not depend on the
//! worker count. Witnesses are re-verified before being returned.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{is_star_graph, Graph};
use crate::set::VertexSet;
use crate::verify;

/// How to search for an optimal set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Lexicographic subset scan by increasing cardinality.
    Enumeration,
    /// Pruned search over vertex in/out decisions.
    BranchAndBound,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "enumeration" => Ok(Strategy::Enumeration),
            "branch-and-bound" | "bnb" => Ok(Strategy::BranchAndBound),
            other => Err(format!(
                "unknown strategy {other:?}; expected enumeration or branch-and-bound"
            )),
        }
    }
}

/// Search configuration shared by the solvers.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub strategy: Strategy,
    /// Worker threads; the result does not depend on this.
    pub workers: usize,
    /// Abort after roughly this many search nodes.
    pub node_budget: Option<u64>,
    /// Abort after this much wall-clock time.
    pub time_budget: Option<Duration>,
    /// Optional externally proven lower bound; branch and bound may stop
    /// once it matches. Must be sound, or the result is meaningless.
    pub lower_floor: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: Strategy::BranchAndBound,
            workers: 1,
            node_budget: None,
            time_budget: None,
            lower_floor: None,
        }
    }
}

/// An exact optimum with its witness set.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: usize,
    /// Lexicographically least optimal set.
    pub witness: VertexSet,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The budget ran out; `lower..=upper` is still a proven bracket and
    /// `witness` (when present) is a feasible set of cardinality `upper`.
    #[error("budget exhausted after {explored} nodes; proven bracket [{lower}, {upper}]")]
    Budget {
        explored: u64,
        lower: usize,
        upper: usize,
        witness: Option<VertexSet>,
    },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

// ---------------------------------------------------------------------------
// Budget accounting shared across components and workers.

struct BudgetCtl {
    node_cap: Option<u64>,
    deadline: Option<Instant>,
    used: AtomicU64,
    tripped: AtomicBool,
}

impl BudgetCtl {
    fn new(opts: &SolveOptions) -> Self {
        BudgetCtl {
            node_cap: opts.node_budget,
            deadline: opts.time_budget.map(|d| Instant::now() + d),
            used: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    /// Records `k` nodes of work; returns false once any budget is spent.
    fn charge(&self, k: u64) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let total = self.used.fetch_add(k, Ordering::Relaxed) + k;
        let over_nodes = self.node_cap.is_some_and(|cap| total > cap);
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

// ---------------------------------------------------------------------------
// The requirement-cover core: find a minimum set S such that every vertex
// outside S has at least req(v) neighbors inside S. Domination is req = 1;
// the offensive alliance condition is req(v) = floor(deg(v)/2) + 1.

struct SubProblem {
    n: usize,
    words: usize,
    /// Row-major adjacency bit rows, `n * words` words.
    adj: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    req: Vec<usize>,
    /// Local index -> vertex label in the original graph.
    orig: Vec<usize>,
}

impl SubProblem {
    fn new(g: &Graph, orig: Vec<usize>, req_of_degree: impl Fn(usize) -> usize) -> Self {
        let n = g.n();
        let words = g.word_count();
        let mut adj = Vec::with_capacity(n * words);
        for v in 0..n {
            adj.extend_from_slice(g.adj_row(v));
        }
        SubProblem {
            n,
            words,
            adj,
            neighbors: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            req: (0..n).map(|v| req_of_degree(g.degree(v))).collect(),
            orig,
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Does every vertex outside `mask` meet its requirement?
    fn feasible(&self, mask: &[u64]) -> bool {
        for v in 0..self.n {
            if mask[v >> 6] >> (v & 63) & 1 == 1 {
                continue;
            }
            let row = self.row(v);
            let mut cnt = 0usize;
            for (w, m) in row.iter().zip(mask) {
                cnt += (w & m).count_ones() as usize;
            }
            if cnt < self.req[v] {
                return false;
            }
        }
        true
    }
}

/// Outcome for one connected component, in original vertex labels.
struct CompOutcome {
    exact: bool,
    lower: usize,
    upper: usize,
    witness: Vec<usize>,
}

/// Membership patterns fix the first `prefix_len(n)` vertices, giving
/// independent search slices whose union covers all subsets. The split is
/// the same regardless of the worker count, so node counts are stable.
fn prefix_len(n: usize) -> usize {
    n.min(4)
}

fn scatter<T: Send>(
    workers: usize,
    patterns: usize,
    run: impl Fn(usize) -> T + Sync,
) -> Vec<T>
where
    T: Send,
{
    let workers = workers.max(1);
    if workers == 1 || patterns <= 1 {
        return (0..patterns).map(run).collect();
    }
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..patterns).map(|_| None).collect());
    std::thread::scope(|scope| {
        for t in 0..workers.min(patterns) {
            let run = &run;
            let slots = &slots;
            scope.spawn(move || {
                let mut p = t;
                while p < patterns {
                    let out = run(p);
                    slots.lock().unwrap()[p] = Some(out);
                    p += workers;
                }
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|s| s.expect("every pattern produces an outcome"))
        .collect()
}

// --- Enumeration -----------------------------------------------------------

/// Lexicographic k-subset odometer over the suffix domain `[start, n)`.
struct Odometer {
    idx: Vec<usize>,
    n: usize,
    fresh: bool,
}

impl Odometer {
    fn new(start: usize, n: usize, k: usize) -> Self {
        Odometer {
            idx: (start..start + k).collect(),
            n,
            fresh: true,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.fresh {
            self.fresh = false;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[i] + (j - i);
        }
        Some(&self.idx)
    }
}

enum PatternScan {
    Hit(Vec<usize>),
    Miss,
    Aborted,
}

/// Scans one membership pattern at one cardinality, in lexicographic order,
/// stopping at the pattern's first feasible subset.
fn enum_pattern(
    sp: &SubProblem,
    budget: &BudgetCtl,
    pattern: usize,
    kp: usize,
    k: usize,
) -> PatternScan {
    let fixed: Vec<usize> = (0..kp).filter(|i| pattern >> i & 1 == 1).collect();
    if fixed.len() > k || k - fixed.len() > sp.n - kp {
        return PatternScan::Miss;
    }
    let mut base = vec![0u64; sp.words];
    for &i in &fixed {
        base[i >> 6] |= 1 << (i & 63);
    }
    let mut mask = vec![0u64; sp.words];
    let mut odo = Odometer::new(kp, sp.n, k - fixed.len());
    let mut pending = 0u64;
    while let Some(suffix) = odo.next() {
        pending += 1;
        if pending == 4096 {
            if !budget.charge(pending) {
                return PatternScan::Aborted;
            }
            pending = 0;
        }
        mask.copy_from_slice(&base);
        for &i in suffix {
            mask[i >> 6] |= 1 << (i & 63);
        }
        if sp.feasible(&mask) {
            budget.charge(pending);
            let mut witness = fixed.clone();
            witness.extend_from_slice(suffix);
            return PatternScan::Hit(witness);
        }
    }
    if pending > 0 && !budget.charge(pending) {
        return PatternScan::Aborted;
    }
    PatternScan::Miss
}

fn enumerate_component(sp: &SubProblem, budget: &BudgetCtl, workers: usize) -> CompOutcome {
    let kp = prefix_len(sp.n);
    let patterns = 1usize << kp;
    for k in 1..=sp.n {
        let scans = scatter(workers, patterns, |p| enum_pattern(sp, budget, p, kp, k));
        let mut best: Option<Vec<usize>> = None;
        let mut aborted = false;
        for scan in scans {
            match scan {
                PatternScan::Hit(w) => {
                    if best.as_ref().is_none_or(|b| w < *b) {
                        best = Some(w);
                    }
                }
                PatternScan::Miss => {}
                PatternScan::Aborted => aborted = true,
            }
        }
        if let Some(w) = best {
            return CompOutcome {
                exact: true,
                lower: k,
                upper: k,
                witness: w.iter().map(|&v| sp.orig[v]).collect(),
            };
        }
        if aborted {
            // Cardinalities below k are exhausted, so k is still proven.
            return CompOutcome {
                exact: false,
                lower: k,
                upper: sp.n,
                witness: sp.orig.clone(),
            };
        }
    }
    // The full vertex set always satisfies the requirements vacuously, so
    // the loop must have returned by k = n.
    unreachable!("the universe is always feasible");
}

// --- Branch and bound ------------------------------------------------------

const UND: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

#[derive(Clone, Default)]
struct BnbState {
    status: Vec<u8>,
    in_cnt: Vec<u32>,
    undec_cnt: Vec<u32>,
    /// Remaining requirement deficit per vertex (meaningful unless IN).
    def: Vec<u32>,
    /// Sum of `def` over non-IN vertices.
    total_def: u64,
    in_size: usize,
}

impl BnbState {
    fn root(sp: &SubProblem) -> Self {
        BnbState {
            status: vec![UND; sp.n],
            in_cnt: vec![0; sp.n],
            undec_cnt: (0..sp.n).map(|v| sp.neighbors[v].len() as u32).collect(),
            def: sp.req.iter().map(|&r| r as u32).collect(),
            total_def: sp.req.iter().map(|&r| r as u64).sum(),
            in_size: 0,
        }
    }
}

struct BnbEngine<'a> {
    sp: &'a SubProblem,
    budget: &'a BudgetCtl,
    /// One preallocated state per depth, copied on branch.
    levels: Vec<BnbState>,
    /// Strict upper bound: we only accept sets smaller than this.
    best: usize,
    best_witness: Option<Vec<usize>>,
    /// Stop when an optimum of this size is found.
    stop_at: usize,
    reduction_cap: u64,
    nodes_pending: u64,
    aborted: bool,
    done: bool,
}

impl<'a> BnbEngine<'a> {
    fn new(sp: &'a SubProblem, budget: &'a BudgetCtl, initial_best: usize, stop_at: usize) -> Self {
        let max_deg = sp.neighbors.iter().map(Vec::len).max().unwrap_or(0) as u64;
        let max_req = sp.req.iter().copied().max().unwrap_or(0) as u64;
        BnbEngine {
            sp,
            budget,
            levels: (0..=sp.n + 1).map(|_| BnbState::default()).collect(),
            best: initial_best,
            best_witness: None,
            stop_at,
            reduction_cap: (max_deg + max_req).max(1),
            nodes_pending: 0,
            aborted: false,
            done: false,
        }
    }

    fn state_in(&mut self, depth: usize, v: usize) {
        let lvl = &mut self.levels[depth];
        debug_assert_eq!(lvl.status[v], UND);
        lvl.status[v] = IN;
        lvl.total_def -= lvl.def[v] as u64;
        lvl.in_size += 1;
        for i in 0..self.sp.neighbors[v].len() {
            let w = self.sp.neighbors[v][i];
            let lvl = &mut self.levels[depth];
            lvl.undec_cnt[w] -= 1;
            lvl.in_cnt[w] += 1;
            if lvl.def[w] > 0 {
                lvl.def[w] -= 1;
                if lvl.status[w] != IN {
                    lvl.total_def -= 1;
                }
            }
        }
    }

    /// Marks `v` OUT, forcing undecided neighbors IN where required.
    /// Returns false if some OUT vertex can no longer be satisfied.
    fn state_out(&mut self, depth: usize, v: usize) -> bool {
        {
            let lvl = &mut self.levels[depth];
            debug_assert_eq!(lvl.status[v], UND);
            if (lvl.in_cnt[v] + lvl.undec_cnt[v] as u32) < self.sp.req[v] as u32 {
                return false;
            }
            lvl.status[v] = OUT;
        }
        for i in 0..self.sp.neighbors[v].len() {
            let w = self.sp.neighbors[v][i];
            let lvl = &mut self.levels[depth];
            lvl.undec_cnt[w] -= 1;
            let short = lvl.in_cnt[w] + lvl.undec_cnt[w] < self.sp.req[w] as u32;
            match lvl.status[w] {
                OUT if short => return false,
                UND if short => self.state_in(depth, w),
                _ => {}
            }
        }
        true
    }

    fn counting_lower_bound(&self, depth: usize) -> usize {
        let d = self.levels[depth].total_def;
        d.div_ceil(self.reduction_cap) as usize
    }

    fn record(&mut self, depth: usize) {
        let lvl = &self.levels[depth];
        if lvl.in_size < self.best {
            self.best = lvl.in_size;
            self.best_witness = Some(
                (0..self.sp.n)
                    .filter(|&v| lvl.status[v] == IN)
                    .collect(),
            );
            if self.best <= self.stop_at {
                self.done = true;
            }
        }
    }

    fn search(&mut self, depth: usize, cursor: usize) {
        self.nodes_pending += 1;
        if self.nodes_pending >= 512 {
            if !self.budget.charge(self.nodes_pending) {
                self.aborted = true;
            }
            self.nodes_pending = 0;
        }
        if self.aborted || self.done {
            return;
        }
        let lvl = &self.levels[depth];
        if lvl.total_def == 0 {
            // Sending every undecided vertex OUT is now feasible, and any
            // other completion in this subtree is strictly larger.
            self.record(depth);
            return;
        }
        if lvl.in_size + self.counting_lower_bound(depth) >= self.best {
            return;
        }
        let Some(v) = (cursor..self.sp.n).find(|&v| self.levels[depth].status[v] == UND) else {
            return; // fully decided yet deficient: infeasible leaf
        };

        let (src, rest) = self.levels.split_at_mut(depth + 1);
        rest[0].clone_from(&src[depth]);
        self.state_in(depth + 1, v);
        self.search(depth + 1, v + 1);
        if self.aborted || self.done {
            return;
        }

        let (src, rest) = self.levels.split_at_mut(depth + 1);
        rest[0].clone_from(&src[depth]);
        if self.state_out(depth + 1, v) {
            self.search(depth + 1, v + 1);
        }
    }

    fn flush_nodes(&mut self) {
        if self.nodes_pending > 0 {
            self.budget.charge(self.nodes_pending);
            self.nodes_pending = 0;
        }
    }
}

/// Greedy requirement cover, used to seed the upper bound.
fn greedy_cover(sp: &SubProblem) -> usize {
    let mut def: Vec<usize> = sp.req.clone();
    let mut in_set = vec![false; sp.n];
    let mut total: usize = def.iter().sum();
    let mut size = 0;
    while total > 0 {
        let mut pick = usize::MAX;
        let mut pick_gain = 0usize;
        for u in 0..sp.n {
            if in_set[u] {
                continue;
            }
            let gain = def[u]
                + sp.neighbors[u]
                    .iter()
                    .filter(|&&w| !in_set[w] && def[w] > 0)
                    .count();
            if gain > pick_gain {
                pick_gain = gain;
                pick = u;
            }
        }
        debug_assert!(pick != usize::MAX, "positive deficit implies positive gain");
        in_set[pick] = true;
        size += 1;
        total -= def[pick];
        def[pick] = 0;
        for &w in &sp.neighbors[pick] {
            if !in_set[w] && def[w] > 0 {
                def[w] -= 1;
                total -= 1;
            }
        }
    }
    size
}

enum PatternBnb {
    Complete(Option<(usize, Vec<usize>)>),
    Aborted(Option<(usize, Vec<usize>)>),
}

fn bnb_pattern(
    sp: &SubProblem,
    budget: &BudgetCtl,
    pattern: usize,
    kp: usize,
    initial_best: usize,
    stop_at: usize,
) -> PatternBnb {
    let mut eng = BnbEngine::new(sp, budget, initial_best, stop_at);
    eng.levels[0] = BnbState::root(sp);
    if !budget.charge(1) {
        return PatternBnb::Aborted(None);
    }
    let mut feasible = true;
    for i in 0..kp {
        let want_in = pattern >> i & 1 == 1;
        match eng.levels[0].status[i] {
            IN => feasible = want_in,
            OUT => feasible = !want_in,
            _ if want_in => eng.state_in(0, i),
            _ => feasible = eng.state_out(0, i),
        }
        if !feasible {
            break;
        }
    }
    if feasible {
        eng.search(0, kp);
    }
    eng.flush_nodes();
    let found = eng
        .best_witness
        .take()
        .map(|w| (w.len(), w.iter().map(|&v| sp.orig[v]).collect()));
    if eng.aborted {
        PatternBnb::Aborted(found)
    } else {
        PatternBnb::Complete(found)
    }
}

fn bnb_component(
    sp: &SubProblem,
    budget: &BudgetCtl,
    workers: usize,
    floor: usize,
) -> CompOutcome {
    let greedy = greedy_cover(sp);
    let root = BnbState::root(sp);
    let root_lower = root
        .total_def
        .div_ceil({
            let max_deg = sp.neighbors.iter().map(Vec::len).max().unwrap_or(0) as u64;
            let max_req = sp.req.iter().copied().max().unwrap_or(0) as u64;
            (max_deg + max_req).max(1)
        })
        .max(1) as usize;
    let stop_at = floor.max(root_lower);
    let kp = prefix_len(sp.n);
    let outcomes = scatter(workers, 1 << kp, |p| {
        bnb_pattern(sp, budget, p, kp, greedy + 1, stop_at)
    });
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut complete = true;
    for out in outcomes {
        let found = match out {
            PatternBnb::Complete(f) => f,
            PatternBnb::Aborted(f) => {
                complete = false;
                f
            }
        };
        if let Some((val, wit)) = found {
            let better = match &best {
                None => true,
                Some((bv, bw)) => val < *bv || (val == *bv && wit < *bw),
            };
            if better {
                best = Some((val, wit));
            }
        }
    }
    if complete {
        let (value, mut witness) =
            best.expect("branch and bound always finds a feasible set");
        witness.sort_unstable();
        CompOutcome {
            exact: true,
            lower: value,
            upper: value,
            witness,
        }
    } else {
        let (upper, witness) = match best {
            Some((val, mut wit)) => {
                wit.sort_unstable();
                (val, wit)
            }
            None => (sp.n, sp.orig.clone()),
        };
        CompOutcome {
            exact: false,
            lower: root_lower.max(floor),
            upper,
            witness,
        }
    }
}

// --- Assembly over components ---------------------------------------------

fn solve_req_cover(
    g: &Graph,
    opts: &SolveOptions,
    req_of_degree: impl Fn(usize) -> usize + Copy,
    recheck: impl Fn(&Graph, &VertexSet) -> Result<bool, verify::VerifyError>,
) -> Result<SolveResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::InvalidInput("the graph has no vertices".into()));
    }
    let started = Instant::now();
    let budget = BudgetCtl::new(opts);
    let comps = g.components();
    let single = comps.len() == 1;
    let mut outcomes: Vec<CompOutcome> = Vec::with_capacity(comps.len());
    for comp in &comps {
        if budget.tripped.load(Ordering::Relaxed) {
            outcomes.push(CompOutcome {
                exact: false,
                lower: 1,
                upper: comp.len(),
                witness: comp.clone(),
            });
            continue;
        }
        let sub = g
            .induced_subgraph(comp)
            .map_err(|e| SolveError::Internal(format!("component extraction failed: {e}")))?;
        let sp = SubProblem::new(&sub, comp.clone(), req_of_degree);
        let floor = if single { opts.lower_floor.unwrap_or(0) } else { 0 };
        let outcome = match opts.strategy {
            Strategy::Enumeration => enumerate_component(&sp, &budget, opts.workers),
            Strategy::BranchAndBound => bnb_component(&sp, &budget, opts.workers, floor),
        };
        outcomes.push(outcome);
    }

    let explored = budget.used();
    let union = |outs: &[CompOutcome]| -> Result<VertexSet, SolveError> {
        VertexSet::from_indices(g.n(), outs.iter().flat_map(|o| o.witness.iter().copied()))
            .map_err(|e| SolveError::Internal(format!("bad witness: {e}")))
    };

    if outcomes.iter().all(|o| o.exact) {
        let value: usize = outcomes.iter().map(|o| o.lower).sum();
        let witness = union(&outcomes)?;
        if witness.len() != value {
            return Err(SolveError::Internal(
                "component witnesses overlap or are incomplete".into(),
            ));
        }
        match recheck(g, &witness) {
            Ok(true) => {}
            Ok(false) => {
                return Err(SolveError::Internal(
                    "solver returned a witness the verifier rejects".into(),
                ))
            }
            Err(e) => return Err(SolveError::Internal(format!("witness recheck failed: {e}"))),
        }
        Ok(SolveResult {
            value,
            witness,
            nodes_explored: explored,
            elapsed: started.elapsed(),
        })
    } else {
        let mut lower: usize = outcomes.iter().map(|o| o.lower).sum();
        if single {
            lower = lower.max(opts.lower_floor.unwrap_or(0));
        }
        Err(SolveError::Budget {
            explored,
            lower,
            upper: outcomes.iter().map(|o| o.upper).sum(),
            witness: union(&outcomes).ok(),
        })
    }
}

/// Minimum dominating set cardinality with its lexicographically least
/// witness.
pub fn domination_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_req_cover(
        g,
        opts,
        |_deg| 1,
        |g, s| verify::is_dominating_set(g, s).map(|c| c.verdict),
    )
}

/// Minimum global offensive alliance cardinality with its lexicographically
/// least witness. A vertex of degree d outside the alliance needs
/// `floor(d / 2) + 1` neighbors inside.
pub fn global_offensive_alliance_number(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    solve_req_cover(
        g,
        opts,
        |deg| deg / 2 + 1,
        |g, s| verify::is_global_offensive_alliance(g, s).map(|c| c.verdict),
    )
}

// ---------------------------------------------------------------------------
// Independence and induced-bipartite numbers.

struct MisEngine<'a> {
    g: &'a Graph,
    budget: &'a BudgetCtl,
    status: Vec<u8>,
    chosen: Vec<usize>,
    best: usize,
    best_witness: Vec<usize>,
    nodes_pending: u64,
    aborted: bool,
}

impl<'a> MisEngine<'a> {
    fn undecided_from(&self, cursor: usize) -> Option<usize> {
        (cursor..self.g.n()).find(|&v| self.status[v] == UND)
    }

    fn search(&mut self, cursor: usize, undecided_left: usize) {
        self.nodes_pending += 1;
        if self.nodes_pending >= 512 {
            if !self.budget.charge(self.nodes_pending) {
                self.aborted = true;
            }
            self.nodes_pending = 0;
        }
        if self.aborted {
            return;
        }
        if self.chosen.len() + undecided_left <= self.best {
            return;
        }
        let Some(v) = self.undecided_from(cursor) else {
            if self.chosen.len() > self.best {
                self.best = self.chosen.len();
                self.best_witness = self.chosen.clone();
            }
            return;
        };

        // Include v: neighbors drop out.
        let mut blocked = Vec::new();
        self.status[v] = IN;
        self.chosen.push(v);
        for &w in self.g.neighbors(v) {
            if self.status[w] == UND {
                self.status[w] = OUT;
                blocked.push(w);
            }
        }
        self.search(v + 1, undecided_left - 1 - blocked.len());
        for &w in &blocked {
            self.status[w] = UND;
        }
        self.chosen.pop();
        self.status[v] = UND;
        if self.aborted {
            return;
        }

        // Exclude v, unless no remaining neighbor could ever block it:
        // then some maximum set in this subtree includes v anyway.
        let free = self
            .g
            .neighbors(v)
            .iter()
            .all(|&w| self.status[w] == OUT);
        if !free {
            self.status[v] = OUT;
            self.search(v + 1, undecided_left - 1);
            self.status[v] = UND;
        }
    }
}

/// Maximum independent set cardinality with its lexicographically least
/// witness.
pub fn independence_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::InvalidInput("the graph has no vertices".into()));
    }
    let started = Instant::now();
    let budget = BudgetCtl::new(opts);
    let mut eng = MisEngine {
        g,
        budget: &budget,
        status: vec![UND; g.n()],
        chosen: Vec::new(),
        best: 0,
        best_witness: Vec::new(),
        nodes_pending: 0,
        aborted: false,
    };
    eng.search(0, g.n());
    let best = eng.best;
    let witness_vec = eng.best_witness.clone();
    if eng.nodes_pending > 0 {
        budget.charge(eng.nodes_pending);
    }
    if eng.aborted {
        return Err(SolveError::Budget {
            explored: budget.used(),
            lower: best.max(1),
            upper: g.n(),
            witness: VertexSet::from_indices(g.n(), witness_vec.iter().copied()).ok(),
        });
    }
    let witness = VertexSet::from_indices(g.n(), witness_vec.iter().copied())
        .map_err(|e| SolveError::Internal(format!("bad witness: {e}")))?;
    for u in witness.iter() {
        for &w in g.neighbors(u) {
            if witness.contains(w) {
                return Err(SolveError::Internal("independent-set witness has an edge".into()));
            }
        }
    }
    Ok(SolveResult {
        value: best,
        witness,
        nodes_explored: budget.used(),
        elapsed: started.elapsed(),
    })
}

/// Enumerates maximal independent sets (as sorted vertex lists).
fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    // Bron-Kerbosch over non-adjacency: maximal independent sets of g are
    // maximal cliques of its complement.
    fn extend(
        g: &Graph,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(&v) = p.first() {
            let keep = |&w: &usize| w != v && !g.has_edge(v, w);
            let p2: Vec<usize> = p.iter().copied().filter(keep).collect();
            let x2: Vec<usize> = x.iter().copied().filter(keep).collect();
            r.push(v);
            extend(g, r, p2, x2, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    extend(
        g,
        &mut Vec::new(),
        (0..g.n()).collect(),
        Vec::new(),
        &mut out,
    );
    out
}

/// Maximum order of an induced bipartite subgraph, with a witness. Every
/// such subgraph extends to (independent set, independent rest), so the
/// maximum over maximal independent sets `A` of `|A| + alpha(G - A)` is
/// exact.
pub fn bipartite_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::InvalidInput("the graph has no vertices".into()));
    }
    let started = Instant::now();
    let mut best: Option<(usize, VertexSet)> = None;
    let mut nodes = 0u64;
    for a in maximal_independent_sets(g) {
        nodes += 1;
        let rest: Vec<usize> = (0..g.n()).filter(|v| !a.contains(v)).collect();
        let (other_size, other) = if rest.is_empty() {
            (0, Vec::new())
        } else {
            let sub = g
                .induced_subgraph(&rest)
                .map_err(|e| SolveError::Internal(format!("component extraction failed: {e}")))?;
            let inner = independence_number(&sub, opts)?;
            nodes += inner.nodes_explored;
            (inner.value, inner.witness.iter().map(|v| rest[v]).collect())
        };
        let total = a.len() + other_size;
        if best.as_ref().is_none_or(|(b, _)| total > *b) {
            let witness =
                VertexSet::from_indices(g.n(), a.iter().copied().chain(other.iter().copied()))
                    .map_err(|e| SolveError::Internal(format!("bad witness: {e}")))?;
            best = Some((total, witness));
        }
    }
    let (value, witness) = best.ok_or_else(|| {
        SolveError::Internal("a nonempty graph has a maximal independent set".into())
    })?;
    let sub = g
        .induced_subgraph(&witness.indices())
        .map_err(|e| SolveError::Internal(format!("witness extraction failed: {e}")))?;
    if sub.bipartition().is_none() {
        return Err(SolveError::Internal(
            "induced-bipartite witness is not bipartite".into(),
        ));
    }
    Ok(SolveResult {
        value,
        witness,
        nodes_explored: nodes,
        elapsed: started.elapsed(),
    })
}

// ---------------------------------------------------------------------------
// Radius.

/// Graph radius: the least eccentricity over all vertices. Defined only for
/// connected graphs.
pub fn radius(g: &Graph) -> Result<usize, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::InvalidInput("the graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(SolveError::InvalidInput(
            "the radius of a disconnected graph is unbounded".into(),
        ));
    }
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..g.n() {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    ecc = ecc.max(dist[w]);
                    queue.push_back(w);
                }
            }
        }
        best = best.min(ecc);
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Efficient domination.

/// Result of an efficient dominating set search.
#[derive(Debug, Clone, Serialize)]
pub struct EdsSearch {
    pub result: SolveResult,
    /// Whether the minimum efficient dominating set has the same
    /// cardinality as a minimum dominating set. Computed, not assumed.
    pub matches_domination_number: bool,
}

struct EdsCtx<'a> {
    g: &'a Graph,
    budget: &'a BudgetCtl,
    /// Vertices whose closed neighborhood is fully decided once this
    /// vertex is decided.
    finalize_at: Vec<Vec<usize>>,
    covered: Vec<bool>,
    uncovered: usize,
    chosen: Vec<usize>,
    aborted: bool,
    nodes_pending: u64,
}

impl<'a> EdsCtx<'a> {
    fn new(g: &'a Graph, budget: &'a BudgetCtl) -> Self {
        let mut finalize_at = vec![Vec::new(); g.n()];
        for w in 0..g.n() {
            let last = g.neighbors(w).iter().copied().chain([w]).max().unwrap();
            finalize_at[last].push(w);
        }
        EdsCtx {
            g,
            budget,
            finalize_at,
            covered: vec![false; g.n()],
            uncovered: g.n(),
            chosen: Vec::new(),
            aborted: false,
            nodes_pending: 0,
        }
    }


    /// DFS over include/exclude decisions in vertex order; calls `leaf` on
    /// every complete efficient dominating set whose size passes `max_size`.
    /// Returns false if `leaf` requested a stop.
    fn search(&mut self, v: usize, max_size: usize, leaf: &mut impl FnMut(&[usize]) -> bool) -> bool {
        self.nodes_pending += 1;
        if self.nodes_pending >= 512 {
            if !self.budget.charge(self.nodes_pending) {
                self.aborted = true;
            }
            self.nodes_pending = 0;
        }
        if self.aborted {
            return false;
        }
        if v == self.g.n() {
            debug_assert_eq!(self.uncovered, 0);
            return leaf(&self.chosen);
        }
        let lb = self
            .uncovered
            .div_ceil(self.g.max_degree() + 1)
            .max(usize::from(self.uncovered > 0));
        if self.chosen.len() + lb > max_size {
            return true;
        }

        // Include v when its closed neighborhood is still free.
        let g = self.g;
        let closed = move || g.neighbors(v).iter().copied().chain([v]);
        if self.chosen.len() < max_size && closed().all(|w| !self.covered[w]) {
            for w in closed() {
                self.covered[w] = true;
            }
            self.uncovered -= self.g.degree(v) + 1;
            self.chosen.push(v);
            let keep_going = self.finalize_at[v].iter().all(|&w| self.covered[w])
                && self.search(v + 1, max_size, leaf);
            self.chosen.pop();
            self.uncovered += self.g.degree(v) + 1;
            for w in closed() {
                self.covered[w] = false;
            }
            if !keep_going {
                return false;
            }
        }

        // Exclude v: every vertex finalized here must already be covered.
        if self.finalize_at[v].iter().all(|&w| self.covered[w]) {
            if !self.search(v + 1, max_size, leaf) {
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        if self.nodes_pending > 0 {
            self.budget.charge(self.nodes_pending);
            self.nodes_pending = 0;
        }
    }
}

fn budget_error(budget: &BudgetCtl, n: usize) -> SolveError {
    SolveError::Budget {
        explored: budget.used(),
        lower: 0,
        upper: n,
        witness: None,
    }
}

/// Finds a minimum-cardinality efficient dominating set (closed
/// neighborhoods of members partition the vertex set), or `None` when the
/// graph has no efficient dominating set at all. The witness is the
/// lexicographically least among the minimum ones.
pub fn find_efficient_dominating_set(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<Option<EdsSearch>, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::InvalidInput("the graph has no vertices".into()));
    }
    let started = Instant::now();
    let budget = BudgetCtl::new(opts);

    // Pass 1: the minimum cardinality of any efficient dominating set.
    let mut best = usize::MAX;
    let mut ctx = EdsCtx::new(g, &budget);
    ctx.search(0, g.n(), &mut |chosen| {
        best = best.min(chosen.len());
        true
    });
    ctx.flush();
    if ctx.aborted {
        return Err(budget_error(&budget, g.n()));
    }
    if best == usize::MAX {
        return Ok(None);
    }

    // Pass 2: the first (lexicographically least) one of that cardinality.
    let mut witness_vec: Option<Vec<usize>> = None;
    let mut ctx = EdsCtx::new(g, &budget);
    ctx.search(0, best, &mut |chosen| {
        if chosen.len() == best {
            witness_vec = Some(chosen.to_vec());
            return false;
        }
        true
    });
    ctx.flush();
    if ctx.aborted && witness_vec.is_none() {
        return Err(budget_error(&budget, g.n()));
    }
    let witness_vec =
        witness_vec.ok_or_else(|| SolveError::Internal("pass 2 lost the optimum".into()))?;
    let witness = VertexSet::from_indices(g.n(), witness_vec.iter().copied())
        .map_err(|e| SolveError::Internal(format!("bad witness: {e}")))?;
    match verify::is_efficient_dominating_set(g, &witness) {
        Ok(c) if c.verdict => {}
        Ok(_) => {
            return Err(SolveError::Internal(
                "efficient-domination witness rejected by the verifier".into(),
            ))
        }
        Err(e) => return Err(SolveError::Internal(format!("witness recheck failed: {e}"))),
    }

    let gamma = domination_number(g, opts)?;
    Ok(Some(EdsSearch {
        result: SolveResult {
            value: best,
            witness,
            nodes_explored: budget.used() + gamma.nodes_explored,
            elapsed: started.elapsed(),
        },
        matches_domination_number: best == gamma.value,
    }))
}

// ---------------------------------------------------------------------------
// Star characterization.

/// Outcome of checking whether some minimum-cardinality efficient
/// dominating set is also a global offensive alliance. For connected
/// graphs of order at least two this happens exactly for stars.
#[derive(Debug, Clone, Serialize)]
pub struct StarCharacterization {
    pub is_star: bool,
    /// A minimum efficient dominating set that is an offensive alliance,
    /// when one exists.
    pub alliance_eds: Option<VertexSet>,
    /// Whether the two sides of the characterization agree.
    pub matches: bool,
}

/// Checks the star characterization on a connected graph of order >= 2.
pub fn star_characterization(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<StarCharacterization, SolveError> {
    if g.n() < 2 {
        return Err(SolveError::InvalidInput(
            "the characterization concerns graphs of order at least two".into(),
        ));
    }
    if !g.is_connected() {
        return Err(SolveError::InvalidInput(
            "the characterization concerns connected graphs".into(),
        ));
    }
    let budget = BudgetCtl::new(opts);

    // Minimum efficient dominating set cardinality, if any exists.
    let mut best = usize::MAX;
    let mut ctx = EdsCtx::new(g, &budget);
    ctx.search(0, g.n(), &mut |chosen| {
        best = best.min(chosen.len());
        true
    });
    ctx.flush();
    if ctx.aborted {
        return Err(budget_error(&budget, g.n()));
    }

    // Scan minimum efficient dominating sets for an offensive alliance.
    let mut alliance_eds = None;
    if best != usize::MAX {
        let mut ctx = EdsCtx::new(g, &budget);
        let mut recheck_failed = false;
        ctx.search(0, best, &mut |chosen| {
            if chosen.len() != best {
                return true;
            }
            let Ok(set) = VertexSet::from_indices(g.n(), chosen.iter().copied()) else {
                recheck_failed = true;
                return false;
            };
            match verify::is_global_offensive_alliance(g, &set) {
                Ok(c) if c.verdict => {
                    alliance_eds = Some(set);
                    false
                }
                Ok(_) => true,
                Err(_) => {
                    recheck_failed = true;
                    false
                }
            }
        });
        ctx.flush();
        if recheck_failed {
            return Err(SolveError::Internal("alliance check failed on a candidate".into()));
        }
        if ctx.aborted && alliance_eds.is_none() {
            return Err(budget_error(&budget, g.n()));
        }
    }

    let is_star = is_star_graph(g);
    Ok(StarCharacterization {
        is_star,
        matches: is_star == alliance_eds.is_some(),
        alliance_eds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn opts(strategy: Strategy) -> SolveOptions {
        SolveOptions { strategy, ..SolveOptions::default() }
    }

    fn gamma_o(g: &Graph, strategy: Strategy) -> SolveResult {
        global_offensive_alliance_number(g, &opts(strategy)).unwrap()
    }

    #[test]
    fn alliance_numbers_of_small_families() {
        // Paths: floor(n/2); cycles and cliques: ceil(n/2); stars: 1.
        for (g, want) in [
            (fam(FamilySpec::Path(2)), 1),
            (fam(FamilySpec::Path(4)), 2),
            (fam(FamilySpec::Path(5)), 2),
            (fam(FamilySpec::Path(7)), 3),
            (fam(FamilySpec::Cycle(4)), 2),
            (fam(FamilySpec::Cycle(5)), 3),
            (fam(FamilySpec::Cycle(7)), 4),
            (fam(FamilySpec::Complete(2)), 1),
            (fam(FamilySpec::Complete(5)), 3),
            (fam(FamilySpec::Complete(6)), 3),
            (fam(FamilySpec::Star(5)), 1),
            (fam(FamilySpec::Complete(1)), 1),
        ] {
            assert_eq!(gamma_o(&g, Strategy::Enumeration).value, want);
            assert_eq!(gamma_o(&g, Strategy::BranchAndBound).value, want);
        }
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        let p4 = fam(FamilySpec::Path(4));
        assert_eq!(gamma_o(&p4, Strategy::Enumeration).witness.indices(), [0, 2]);
        let c4 = fam(FamilySpec::Cycle(4));
        assert_eq!(gamma_o(&c4, Strategy::Enumeration).witness.indices(), [0, 2]);
        let c5 = fam(FamilySpec::Cycle(5));
        assert_eq!(gamma_o(&c5, Strategy::Enumeration).witness.indices(), [0, 1, 3]);
    }

    #[test]
    fn strategies_and_workers_agree() {
        let graphs = [
            fam(FamilySpec::Path(6)),
            fam(FamilySpec::Cycle(7)),
            fam(FamilySpec::Star(4)),
            cartesian_product(&fam(FamilySpec::Path(3)), &fam(FamilySpec::Path(3)))
                .unwrap()
                .into_graph(),
            cartesian_product(&fam(FamilySpec::Complete(3)), &fam(FamilySpec::Path(2)))
                .unwrap()
                .into_graph(),
        ];
        for g in &graphs {
            let reference = gamma_o(g, Strategy::Enumeration);
            for strategy in [Strategy::Enumeration, Strategy::BranchAndBound] {
                for workers in [1, 2, 4] {
                    let opts = SolveOptions { strategy, workers, ..SolveOptions::default() };
                    let got = global_offensive_alliance_number(g, &opts).unwrap();
                    assert_eq!(got.value, reference.value);
                    assert_eq!(got.witness, reference.witness);
                }
            }
        }
    }

    #[test]
    fn domination_numbers_of_small_families() {
        for (g, want, witness) in [
            (fam(FamilySpec::Path(4)), 2, vec![0, 2]),
            (fam(FamilySpec::Cycle(6)), 2, vec![0, 3]),
            (fam(FamilySpec::Complete(1)), 1, vec![0]),
            (fam(FamilySpec::Star(6)), 1, vec![0]),
        ] {
            for strategy in [Strategy::Enumeration, Strategy::BranchAndBound] {
                let r = domination_number(&g, &opts(strategy)).unwrap();
                assert_eq!((r.value, r.witness.indices()), (want, witness.clone()));
            }
        }
    }

    #[test]
    fn disconnected_graphs_decompose() {
        // A path 0-1-2 next to a 4-cycle 3-4-5-6.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap();
        for strategy in [Strategy::Enumeration, Strategy::BranchAndBound] {
            let r = gamma_o(&g, strategy);
            assert_eq!(r.value, 3);
            assert_eq!(r.witness.indices(), [1, 3, 5]);
        }
        // An isolated vertex must join the set.
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        for strategy in [Strategy::Enumeration, Strategy::BranchAndBound] {
            let r = gamma_o(&g, strategy);
            assert_eq!(r.value, 2);
            assert_eq!(r.witness.indices(), [0, 1]);
            let d = domination_number(&g, &opts(strategy)).unwrap();
            assert_eq!(d.value, 2);
        }
    }

    #[test]
    fn budgets_abort_with_a_sound_bracket() {
        let c6 = fam(FamilySpec::Cycle(6));
        let big = cartesian_product(&c6, &c6).unwrap().into_graph();
        let options = SolveOptions {
            strategy: Strategy::Enumeration,
            node_budget: Some(2_000),
            ..SolveOptions::default()
        };
        match global_offensive_alliance_number(&big, &options) {
            Err(SolveError::Budget { lower, upper, witness, .. }) => {
                assert!(lower >= 1 && lower <= upper);
                assert_eq!(upper, 36);
                let w = witness.expect("bracket carries a feasible witness");
                assert_eq!(w.len(), upper);
            }
            other => panic!("expected budget abort, got {other:?}"),
        }
    }

    #[test]
    fn floor_can_stop_branch_and_bound_early() {
        let c4 = fam(FamilySpec::Cycle(4));
        let options = SolveOptions { lower_floor: Some(2), ..SolveOptions::default() };
        let r = global_offensive_alliance_number(&c4, &options).unwrap();
        assert_eq!((r.value, r.witness.indices()), (2, vec![0, 2]));
    }

    #[test]
    fn independence_numbers() {
        for (g, want, witness) in [
            (fam(FamilySpec::Cycle(5)), 2, vec![0, 2]),
            (fam(FamilySpec::Path(5)), 3, vec![0, 2, 4]),
            (fam(FamilySpec::Complete(4)), 1, vec![0]),
            (fam(FamilySpec::Star(5)), 5, vec![1, 2, 3, 4, 5]),
        ] {
            let r = independence_number(&g, &SolveOptions::default()).unwrap();
            assert_eq!((r.value, r.witness.indices()), (want, witness));
        }
    }

    #[test]
    fn bipartite_numbers() {
        for (g, want) in [
            (fam(FamilySpec::Cycle(6)), 6),
            (fam(FamilySpec::Cycle(5)), 4),
            (fam(FamilySpec::Complete(4)), 2),
            (fam(FamilySpec::Path(7)), 7),
        ] {
            let r = bipartite_number(&g, &SolveOptions::default()).unwrap();
            assert_eq!(r.value, want);
        }
    }

    #[test]
    fn radius_values() {
        assert_eq!(radius(&fam(FamilySpec::Path(5))).unwrap(), 2);
        assert_eq!(radius(&fam(FamilySpec::Cycle(6))).unwrap(), 3);
        assert_eq!(radius(&fam(FamilySpec::Complete(4))).unwrap(), 1);
        assert_eq!(radius(&fam(FamilySpec::Star(7))).unwrap(), 1);
        assert_eq!(radius(&fam(FamilySpec::Complete(1))).unwrap(), 0);
        let two = Graph::from_edges(2, []).unwrap();
        assert!(matches!(radius(&two), Err(SolveError::InvalidInput(_))));
    }

    #[test]
    fn efficient_dominating_sets() {
        let opts = SolveOptions::default();
        let c6 = fam(FamilySpec::Cycle(6));
        let found = find_efficient_dominating_set(&c6, &opts).unwrap().unwrap();
        assert_eq!(found.result.witness.indices(), [0, 3]);
        assert!(found.matches_domination_number);

        let q3 = fam(FamilySpec::Hypercube(3));
        let found = find_efficient_dominating_set(&q3, &opts).unwrap().unwrap();
        assert_eq!(found.result.witness.indices(), [0, 7]);
        assert!(found.matches_domination_number);

        let c4 = fam(FamilySpec::Cycle(4));
        assert!(find_efficient_dominating_set(&c4, &opts).unwrap().is_none());

        let p4 = fam(FamilySpec::Path(4));
        let found = find_efficient_dominating_set(&p4, &opts).unwrap().unwrap();
        assert_eq!(found.result.witness.indices(), [0, 3]);
    }

    #[test]
    fn star_characterization_small_cases() {
        let opts = SolveOptions::default();
        for (g, star) in [
            (fam(FamilySpec::Star(5)), true),
            (fam(FamilySpec::Path(3)), true), // a path of order 3 is a star
            (fam(FamilySpec::Path(4)), false),
            (fam(FamilySpec::Cycle(4)), false),
            (fam(FamilySpec::Complete(4)), false),
            (fam(FamilySpec::Complete(3)), false),
        ] {
            let out = star_characterization(&g, &opts).unwrap();
            assert_eq!(out.is_star, star);
            assert!(out.matches, "characterization must agree on {g:?}");
            assert_eq!(out.alliance_eds.is_some(), star);
        }
        let k1 = fam(FamilySpec::Complete(1));
        assert!(matches!(
            star_characterization(&k1, &opts),
            Err(SolveError::InvalidInput(_))
        ));
    }

    #[test]
    fn product_alliance_numbers_match_known_small_values() {
        let p2 = fam(FamilySpec::Path(2));
        let p3 = fam(FamilySpec::Path(3));
        let c3 = fam(FamilySpec::Cycle(3));
        for (g, h, want) in [(&p2, &p3, 3), (&p3, &p3, 4), (&c3, &c3, 5)] {
            let prod = cartesian_product(g, h).unwrap().into_graph();
            assert_eq!(gamma_o(&prod, Strategy::Enumeration).value, want);
            assert_eq!(gamma_o(&prod, Strategy::BranchAndBound).value, want);
        }
    }
}
