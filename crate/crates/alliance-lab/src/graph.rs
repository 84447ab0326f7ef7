//! Graphs, generator families and Cartesian products.
//!
//! Graphs are simple, undirected and immutable once built. Vertices are
//! `0..n`. Adjacency is kept both as sorted neighbor lists (for traversal)
//! and as bit-packed rows (for the solvers and verifiers).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::set::{words_for, VertexSet};

/// Default cap on the order of a Cartesian product. Large products can be
/// built for verification, but unbounded requests are rejected so a typo in
/// a family expression cannot allocate gigabytes.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("product order {order} exceeds the size budget {cap}")]
    ProductTooLarge { order: usize, cap: usize },
    #[error("family expression `{0}` not recognized (expected e.g. P4, C6, K3, S5, Q3)")]
    BadFamilyExpr(String),
}

/// Named generator families.
///
/// `Star(m)` is the star with `m` leaves (order `m + 1`); `Hypercube(k)` is
/// the `k`-cube `Q_k` of order `2^k`. `Explicit` tags graphs that came from
/// an edge list rather than a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Hypercube(u32),
    Explicit,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidParameter(msg));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n < 1 => {
                bad(format!("{self} needs at least one vertex"))
            }
            FamilySpec::Cycle(n) if n < 3 => bad(format!("{self}: cycles need length >= 3")),
            FamilySpec::Star(m) if m < 1 => bad(format!("{self}: stars need at least one leaf")),
            FamilySpec::Hypercube(k) if k < 1 => bad(format!("{self}: dimension must be >= 1")),
            FamilySpec::Hypercube(k) if k > 20 => {
                bad(format!("{self}: dimension {k} is past any sensible budget"))
            }
            FamilySpec::Explicit => bad("explicit graphs come from edge lists".into()),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the family member.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::Star(m) => m + 1,
            FamilySpec::Hypercube(k) => 1usize << k,
            FamilySpec::Explicit => 0,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Star(m) => write!(f, "S{m}"),
            FamilySpec::Hypercube(k) => write!(f, "Q{k}"),
            FamilySpec::Explicit => write!(f, "explicit"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses a single family token: `P4`, `C6`, `K3`, `S5` (5 leaves), `Q3`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let t = s.trim();
        let bad = || GraphError::BadFamilyExpr(s.to_string());
        let (kind, num) = t.split_at(t.char_indices().nth(1).map(|(i, _)| i).unwrap_or(t.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        let spec = match kind.to_ascii_uppercase().as_str() {
            "P" => FamilySpec::Path(n),
            "C" => FamilySpec::Cycle(n),
            "K" => FamilySpec::Complete(n),
            "S" => FamilySpec::Star(n),
            "Q" => FamilySpec::Hypercube(n as u32),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<u64>,
    edge_count: usize,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let words = words_for(n);
        let mut g = Graph {
            n,
            words,
            neighbors: vec![Vec::new(); n],
            rows: vec![0; n.max(1) * words],
            edge_count: 0,
            family: None,
        };
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.rows[u * words + v / 64] |= 1u64 << (v % 64);
            g.rows[v * words + u / 64] |= 1u64 << (u % 64);
            g.neighbors[u].push(v);
            g.neighbors[v].push(u);
            g.edge_count += 1;
        }
        for list in &mut g.neighbors {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub(crate) fn with_family(mut self, family: FamilySpec) -> Graph {
        self.family = Some(family);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Bit row of `v`'s neighbors, `words_for(n)` words long.
    pub(crate) fn adj_row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The generator this graph came from, if any.
    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    /// Neighbors of `v` inside `s`, i.e. `|N(v) ∩ s|`.
    pub fn degree_into(&self, v: usize, s: &VertexSet) -> usize {
        debug_assert_eq!(s.universe(), self.n);
        self.adj_row(v)
            .iter()
            .zip(s.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-colors the graph if it is bipartite. The first class contains the
    /// minimum vertex of every component, so the split is deterministic.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let a = VertexSet::from_indices(self.n, (0..self.n).filter(|&v| color[v] == 0)).unwrap();
        let b = a.complement();
        Some((a, b))
    }

    /// Induced subgraph on `vertices` (sorted, deduplicated by the caller),
    /// relabeled to `0..vertices.len()`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.neighbors[v] {
                if pos[w] != usize::MAX && i < pos[w] {
                    edges.push((i, pos[w]));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.edge_count)?;
        if let Some(fam) = self.family {
            write!(f, ", {fam}")?;
        }
        write!(f, ")")
    }
}

/// Builds a member of a generator family.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
        FamilySpec::Cycle(n) => {
            Graph::from_edges(n, (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))))?
        }
        FamilySpec::Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
        }
        FamilySpec::Star(m) => Graph::from_edges(m + 1, (1..=m).map(|v| (0, v)))?,
        FamilySpec::Hypercube(k) => {
            // Built recursively: Q_k = Q_{k-1} x K_2. With the (i, j) -> 2i + j
            // labeling this makes adjacency exactly "Hamming distance one".
            let mut g = build_family(&FamilySpec::Complete(2))?;
            for _ in 1..k {
                let k2 = build_family(&FamilySpec::Complete(2))?;
                g = cartesian_product(&g, &k2)?.into_graph();
            }
            g
        }
        FamilySpec::Explicit => unreachable!("rejected by validate"),
    };
    Ok(g.with_family(*spec))
}

/// A Cartesian product together with its two factors.
///
/// Product vertex `(i, j)` is labeled `i * n2 + j`; `(i, j) ~ (k, l)` iff
/// `i = k` and `j ~ l` in the right factor, or `j = l` and `i ~ k` in the
/// left factor.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    left: Graph,
    right: Graph,
}

/// Builds the Cartesian product of two nonempty graphs under the default
/// size budget.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    cartesian_product_with_cap(g, h, DEFAULT_PRODUCT_CAP)
}

/// Builds the Cartesian product of two nonempty graphs, rejecting products
/// with more than `cap` vertices.
pub fn cartesian_product_with_cap(
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<ProductGraph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::InvalidParameter(
            "product factors must be nonempty".into(),
        ));
    }
    let order = g
        .n()
        .checked_mul(h.n())
        .ok_or(GraphError::ProductTooLarge { order: usize::MAX, cap })?;
    if order > cap {
        return Err(GraphError::ProductTooLarge { order, cap });
    }
    let n2 = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for i in 0..g.n() {
        for (j, l) in h.edges() {
            edges.push((i * n2 + j, i * n2 + l));
        }
    }
    for (i, k) in g.edges() {
        for j in 0..h.n() {
            edges.push((i * n2 + j, k * n2 + j));
        }
    }
    let graph = Graph::from_edges(order, edges)?;
    debug_assert_eq!(
        graph.edge_count(),
        g.n() * h.edge_count() + h.n() * g.edge_count()
    );
    Ok(ProductGraph {
        graph,
        left: g.clone(),
        right: h.clone(),
    })
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn n1(&self) -> usize {
        self.left.n()
    }

    pub fn n2(&self) -> usize {
        self.right.n()
    }

    /// Label of the product vertex `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n1() && j < self.n2());
        i * self.n2() + j
    }

    /// Coordinates of a product vertex.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.graph.n());
        (v / self.n2(), v % self.n2())
    }

    /// Projection of a product vertex set onto the left factor.
    pub fn project_left(&self, x: &VertexSet) -> VertexSet {
        let mut p = VertexSet::empty(self.n1());
        for v in x.iter() {
            p.insert(self.coords(v).0);
        }
        p
    }

    /// Projection of a product vertex set onto the right factor.
    pub fn project_right(&self, x: &VertexSet) -> VertexSet {
        let mut p = VertexSet::empty(self.n2());
        for v in x.iter() {
            p.insert(self.coords(v).1);
        }
        p
    }

    /// The fiber `V(G) x {j}`: one copy of the left factor's vertex set.
    pub fn left_fiber(&self, j: usize) -> Result<VertexSet, GraphError> {
        if j >= self.n2() {
            return Err(GraphError::VertexOutOfRange { vertex: j, n: self.n2() });
        }
        Ok(VertexSet::from_indices(
            self.graph.n(),
            (0..self.n1()).map(|i| self.index(i, j)),
        )
        .unwrap())
    }

    /// The fiber `{i} x V(H)`.
    pub fn right_fiber(&self, i: usize) -> Result<VertexSet, GraphError> {
        if i >= self.n1() {
            return Err(GraphError::VertexOutOfRange { vertex: i, n: self.n1() });
        }
        Ok(VertexSet::from_indices(
            self.graph.n(),
            (0..self.n2()).map(|j| self.index(i, j)),
        )
        .unwrap())
    }

    /// The cell `c x {j}` spanned by a left-factor vertex set in column `j`.
    pub fn cell(&self, c: &VertexSet, j: usize) -> Result<VertexSet, GraphError> {
        if c.universe() != self.n1() {
            return Err(GraphError::VertexOutOfRange {
                vertex: c.universe(),
                n: self.n1(),
            });
        }
        if j >= self.n2() {
            return Err(GraphError::VertexOutOfRange { vertex: j, n: self.n2() });
        }
        Ok(VertexSet::from_indices(
            self.graph.n(),
            c.iter().map(|i| self.index(i, j)),
        )
        .unwrap())
    }
}

/// Structural test: is `g` a path (including the one- and two-vertex ones)?
pub fn is_path_graph(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    match g.n() {
        0 => false,
        1 => g.edge_count() == 0,
        n => {
            let ones = (0..n).filter(|&v| g.degree(v) == 1).count();
            let twos = (0..n).filter(|&v| g.degree(v) == 2).count();
            ones == 2 && ones + twos == n
        }
    }
}

/// Structural test: is `g` a cycle?
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Structural test: is `g` complete?
pub fn is_complete_graph(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() * (g.n() - 1) / 2
}

/// Structural test: is `g` a star `S_{1,m}` (one hub adjacent to `m >= 1`
/// independent leaves)? The two-vertex star is `K_2`.
pub fn is_star_graph(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() {
        return false;
    }
    let hubs = (0..n).filter(|&v| g.degree(v) == n - 1).count();
    let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
    // For n = 2 both endpoints qualify as hub and leaf at once.
    hubs >= 1 && hubs + leaves == n + if n == 2 { 2 } else { 0 }
}

/// Recognizes a graph structurally as one of the named families, falling
/// back to its declared family tag only for hypercubes (which are costly to
/// recognize by shape). Ambiguous cases prefer the earlier variant in the
/// order path, cycle, complete, star.
pub fn detect_family(g: &Graph) -> Option<FamilySpec> {
    if let Some(FamilySpec::Hypercube(k)) = g.family() {
        return Some(FamilySpec::Hypercube(k));
    }
    if is_path_graph(g) {
        Some(FamilySpec::Path(g.n()))
    } else if is_cycle_graph(g) {
        Some(FamilySpec::Cycle(g.n()))
    } else if is_complete_graph(g) {
        Some(FamilySpec::Complete(g.n()))
    } else if is_star_graph(g) {
        Some(FamilySpec::Star(g.n() - 1))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        assert_eq!((p2.n(), p2.edge_count()), (2, 1));

        let s3 = build_family(&FamilySpec::Star(3)).unwrap();
        assert_eq!((s3.n(), s3.edge_count()), (4, 3));
        assert_eq!(s3.neighbors(0), &[1, 2, 3]);

        let k1 = build_family(&FamilySpec::Complete(1)).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));

        assert!(build_family(&FamilySpec::Cycle(2)).is_err());
        assert!(build_family(&FamilySpec::Star(0)).is_err());
    }

    #[test]
    fn hypercube_is_k_regular() {
        for k in 1..=6u32 {
            let q = build_family(&FamilySpec::Hypercube(k)).unwrap();
            assert_eq!(q.n(), 1 << k);
            assert_eq!(q.edge_count(), (k as usize) << (k - 1));
            assert!((0..q.n()).all(|v| q.degree(v) == k as usize));
        }
    }

    #[test]
    fn hypercube_adjacency_is_hamming_distance_one() {
        let q3 = build_family(&FamilySpec::Hypercube(3)).unwrap();
        for u in 0..q3.n() {
            for v in 0..q3.n() {
                let hamming = (u ^ v).count_ones();
                assert_eq!(q3.has_edge(u, v), hamming == 1, "vertices {u}, {v}");
            }
        }
    }

    #[test]
    fn product_k2_k2_is_a_four_cycle() {
        let k2 = build_family(&FamilySpec::Complete(2)).unwrap();
        let p = cartesian_product(&k2, &k2).unwrap();
        let g = p.graph();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert!(g.bipartition().is_some());
    }

    #[test]
    fn product_p2_p3_counts() {
        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        let p = cartesian_product(&p2, &p3).unwrap();
        assert_eq!((p.graph().n(), p.graph().edge_count()), (6, 7));
    }

    #[test]
    fn product_degrees_add() {
        let c3 = build_family(&FamilySpec::Cycle(3)).unwrap();
        let p = cartesian_product(&c3, &c3).unwrap();
        assert!((0..9).all(|v| p.graph().degree(v) == 4));
    }

    #[test]
    fn product_respects_cap() {
        let k2 = build_family(&FamilySpec::Complete(2)).unwrap();
        let err = cartesian_product_with_cap(&k2, &k2, 3).unwrap_err();
        assert_eq!(err, GraphError::ProductTooLarge { order: 4, cap: 3 });
    }

    #[test]
    fn projections_and_cells() {
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        let p = cartesian_product(&p3, &c4).unwrap();
        let x = VertexSet::from_indices(12, [p.index(0, 1), p.index(2, 1), p.index(2, 3)]).unwrap();
        assert_eq!(p.project_left(&x).indices(), vec![0, 2]);
        assert_eq!(p.project_right(&x).indices(), vec![1, 3]);
        assert!(p.project_left(&x).len() <= x.len());

        assert_eq!(p.left_fiber(1).unwrap().indices(), vec![1, 5, 9]);
        assert_eq!(p.right_fiber(2).unwrap().indices(), vec![8, 9, 10, 11]);

        let c = VertexSet::from_indices(3, [0, 2]).unwrap();
        assert_eq!(p.cell(&c, 3).unwrap().indices(), vec![3, 11]);
        assert!(p.cell(&c, 4).is_err());
    }

    #[test]
    fn structural_detectors() {
        let p4 = build_family(&FamilySpec::Path(4)).unwrap();
        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        let s4 = build_family(&FamilySpec::Star(4)).unwrap();
        assert!(is_path_graph(&p4) && !is_cycle_graph(&p4) && !is_star_graph(&p4));
        assert!(is_cycle_graph(&c5) && !is_path_graph(&c5));
        assert!(is_complete_graph(&k4) && !is_star_graph(&k4));
        assert!(is_star_graph(&s4) && !is_path_graph(&s4));
        // The two-vertex graph is simultaneously a path, a clique and a star.
        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        assert!(is_path_graph(&p2) && is_complete_graph(&p2) && is_star_graph(&p2));
    }

    #[test]
    fn components_and_bipartition() {
        // Two components: a path 0-2-4 and an edge 1-3 (interleaved labels).
        let g = Graph::from_edges(5, [(0, 2), (2, 4), (1, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2, 4], vec![1, 3]]);
        assert!(!g.is_connected());
        let (a, b) = g.bipartition().unwrap();
        assert!(a.contains(0) && a.contains(1));
        assert!(a.is_disjoint(&b));
        assert_eq!(a.len() + b.len(), 5);

        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(c5.bipartition().is_none());
    }

    #[test]
    fn family_parsing_round_trips() {
        for expr in ["P4", "C6", "K3", "S5", "Q3"] {
            let spec: FamilySpec = expr.parse().unwrap();
            assert_eq!(spec.to_string(), expr);
        }
        assert_eq!("p4".parse::<FamilySpec>().unwrap(), FamilySpec::Path(4));
        assert!("X4".parse::<FamilySpec>().is_err());
        assert!("P".parse::<FamilySpec>().is_err());
        assert!("C2".parse::<FamilySpec>().is_err());
    }
}
