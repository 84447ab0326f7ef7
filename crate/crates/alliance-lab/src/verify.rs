//! Certified set predicates.
//!
//! Every check returns a [`Certificate`]: a verdict plus, when the verdict
//! is negative, a violating vertex with its boundary degrees so the failure
//! can be re-checked independently. Ill-posed questions (wrong universe,
//! empty candidate alliance) are errors, not `false` verdicts.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{is_cycle_graph, is_path_graph, Graph, ProductGraph};
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex set universe {set} does not match graph order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the empty set is not a candidate alliance")]
    EmptyCandidate,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("expected exactly two parts, got {0}")]
    WrongPartCount(usize),
    #[error("square lemma needs path or cycle factors; {0}")]
    LemmaInapplicable(String),
}

/// A vertex at which a predicate failed, with enough context to re-check
/// the failure by hand: its neighbor counts inside and outside the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: usize,
    pub in_degree: usize,
    pub out_degree: usize,
    pub detail: String,
}

/// Outcome of a verification: `verdict` plus a [`Witness`] when negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl Certificate {
    fn pass() -> Self {
        Certificate { verdict: true, witness: None }
    }

    fn fail(witness: Witness) -> Self {
        Certificate { verdict: false, witness: Some(witness) }
    }
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<(), VerifyError> {
    if s.universe() != g.n() {
        return Err(VerifyError::UniverseMismatch {
            set: s.universe(),
            graph: g.n(),
        });
    }
    Ok(())
}

/// Boundary degrees of `v` with respect to `s`: neighbors inside `s` and
/// neighbors outside it. Their sum is `deg(v)`.
pub fn boundary_degrees(g: &Graph, s: &VertexSet, v: usize) -> Result<(usize, usize), VerifyError> {
    check_universe(g, s)?;
    if v >= g.n() {
        return Err(VerifyError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let inside = g.degree_into(v, s);
    Ok((inside, g.degree(v) - inside))
}

/// Does `s` dominate `g`? Every vertex outside `s` must have a neighbor in
/// `s`. The empty set dominates only the empty graph.
pub fn is_dominating_set(g: &Graph, s: &VertexSet) -> Result<Certificate, VerifyError> {
    check_universe(g, s)?;
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let (din, dout) = boundary_degrees(g, s, v)?;
        if din == 0 {
            return Ok(Certificate::fail(Witness {
                vertex: v,
                in_degree: din,
                out_degree: dout,
                detail: "no neighbor in the set".into(),
            }));
        }
    }
    Ok(Certificate::pass())
}

/// Is `s` a global offensive alliance? Every vertex `v` outside `s` must
/// satisfy `d_in(v) >= d_out(v) + 1`; equivalently `deg(v) >= 2 d_out(v) + 1`.
/// Both forms are evaluated and must agree vertex by vertex.
pub fn is_global_offensive_alliance(g: &Graph, s: &VertexSet) -> Result<Certificate, VerifyError> {
    offensive_check(g, s, 1)
}

/// Is `s` a global strong offensive alliance (`d_in(v) >= d_out(v)` for all
/// `v` outside `s`)?
pub fn is_global_strong_offensive_alliance(
    g: &Graph,
    s: &VertexSet,
) -> Result<Certificate, VerifyError> {
    offensive_check(g, s, 0)
}

fn offensive_check(g: &Graph, s: &VertexSet, margin: usize) -> Result<Certificate, VerifyError> {
    check_universe(g, s)?;
    if s.is_empty() {
        return Err(VerifyError::EmptyCandidate);
    }
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let (din, dout) = boundary_degrees(g, s, v)?;
        let direct = din >= dout + margin;
        // Same condition written on the full degree; cheap cross-check.
        let via_degree = din + dout >= 2 * dout + margin;
        assert_eq!(direct, via_degree, "alliance condition forms disagree at {v}");
        if !direct {
            let what = if margin == 1 { "offensive" } else { "strong offensive" };
            return Ok(Certificate::fail(Witness {
                vertex: v,
                in_degree: din,
                out_degree: dout,
                detail: format!("{what} condition fails"),
            }));
        }
    }
    Ok(Certificate::pass())
}

/// Is `s` an efficient dominating set? The closed neighborhoods of its
/// members must partition `V`, i.e. every vertex is covered exactly once.
pub fn is_efficient_dominating_set(g: &Graph, s: &VertexSet) -> Result<Certificate, VerifyError> {
    check_universe(g, s)?;
    let mut covered = vec![0usize; g.n()];
    for u in s.iter() {
        covered[u] += 1;
        for &w in g.neighbors(u) {
            covered[w] += 1;
        }
    }
    for v in 0..g.n() {
        if covered[v] == 1 {
            continue;
        }
        let (din, dout) = boundary_degrees(g, s, v)?;
        let detail = if covered[v] == 0 {
            "covered by no closed neighborhood".to_string()
        } else {
            format!("covered by {} closed neighborhoods", covered[v])
        };
        return Ok(Certificate::fail(Witness {
            vertex: v,
            in_degree: din,
            out_degree: dout,
            detail,
        }));
    }
    Ok(Certificate::pass())
}

/// How a two-part partition is expected to behave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMode {
    /// Both parts must be global offensive alliances.
    BothOffensive,
    /// The first part must be a global offensive alliance, the second a
    /// global strong offensive alliance.
    OffensivePlusStrong,
}

/// Checks a claimed two-part alliance partition of `V(g)`.
///
/// Rejects inputs that are not partitions at all (overlapping, not covering,
/// or with an empty part); those are errors rather than `false` verdicts.
pub fn check_partition(
    g: &Graph,
    parts: &[VertexSet],
    mode: PartitionMode,
) -> Result<Certificate, VerifyError> {
    if parts.len() != 2 {
        return Err(VerifyError::WrongPartCount(parts.len()));
    }
    for p in parts {
        check_universe(g, p)?;
        if p.is_empty() {
            return Err(VerifyError::NotAPartition("a part is empty".into()));
        }
    }
    if !parts[0].is_disjoint(&parts[1]) {
        return Err(VerifyError::NotAPartition("parts overlap".into()));
    }
    if parts[0].union(&parts[1]).len() != g.n() {
        return Err(VerifyError::NotAPartition(
            "parts do not cover the vertex set".into(),
        ));
    }
    let requirements = match mode {
        PartitionMode::BothOffensive => [1usize, 1],
        PartitionMode::OffensivePlusStrong => [1, 0],
    };
    for (k, (part, margin)) in parts.iter().zip(requirements).enumerate() {
        let mut cert = offensive_check(g, part, margin)?;
        if !cert.verdict {
            if let Some(w) = &mut cert.witness {
                w.detail = format!("part {} fails: {}", k + 1, w.detail);
            }
            return Ok(cert);
        }
    }
    Ok(Certificate::pass())
}

/// One square of a product: the four vertices spanned by a left-factor edge
/// and a right-factor edge, as product labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Square {
    pub vertices: [usize; 4],
}

/// Enumerates all squares of a product, one per (left edge, right edge)
/// pair, in ascending edge order.
pub fn squares(pg: &ProductGraph) -> impl Iterator<Item = Square> + '_ {
    let left_edges: Vec<_> = pg.left().edges().collect();
    left_edges.into_iter().flat_map(move |(i, k)| {
        pg.right().edges().map(move |(j, l)| Square {
            vertices: [
                pg.index(i, j),
                pg.index(i, l),
                pg.index(k, j),
                pg.index(k, l),
            ],
        })
    })
}

/// In a product of paths and/or cycles, every global offensive alliance
/// meets each square in at least two vertices: with maximum degree four,
/// a vertex outside the alliance can have at most one outside neighbor.
/// Verifies that property for `s`, reporting an offending square if any.
pub fn check_square_lemma(pg: &ProductGraph, s: &VertexSet) -> Result<Certificate, VerifyError> {
    for (side, factor) in [("left", pg.left()), ("right", pg.right())] {
        if !is_path_graph(factor) && !is_cycle_graph(factor) {
            return Err(VerifyError::LemmaInapplicable(format!(
                "{side} factor (n={}, m={}) is neither",
                factor.n(),
                factor.edge_count()
            )));
        }
    }
    check_universe(pg.graph(), s)?;
    if s.is_empty() {
        return Err(VerifyError::EmptyCandidate);
    }
    for sq in squares(pg) {
        let hit = sq.vertices.iter().filter(|&&v| s.contains(v)).count();
        if hit < 2 {
            let v = sq.vertices[0];
            let (din, dout) = boundary_degrees(pg.graph(), s, v).unwrap_or((0, 0));
            return Ok(Certificate::fail(Witness {
                vertex: v,
                in_degree: din,
                out_degree: dout,
                detail: format!(
                    "square {:?} meets the set in {hit} < 2 vertices",
                    sq.vertices
                ),
            }));
        }
    }
    Ok(Certificate::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, FamilySpec};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn boundary_degree_examples() {
        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(boundary_degrees(&c4, &set(4, &[0, 2]), 1).unwrap(), (2, 0));
        assert_eq!(boundary_degrees(&c4, &set(4, &[]), 1).unwrap(), (0, 2));

        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(boundary_degrees(&k4, &set(4, &[0]), 1).unwrap(), (1, 2));
        assert!(matches!(
            boundary_degrees(&k4, &set(4, &[0]), 9),
            Err(VerifyError::VertexOutOfRange { vertex: 9, n: 4 })
        ));
        assert!(matches!(
            boundary_degrees(&k4, &set(5, &[0]), 1),
            Err(VerifyError::UniverseMismatch { set: 5, graph: 4 })
        ));
    }

    #[test]
    fn domination_examples() {
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        assert!(is_dominating_set(&p3, &set(3, &[1])).unwrap().verdict);
        let cert = is_dominating_set(&p3, &set(3, &[0])).unwrap();
        assert!(!cert.verdict);
        let w = cert.witness.unwrap();
        assert_eq!((w.vertex, w.in_degree, w.out_degree), (2, 0, 1));

        let c6 = build_family(&FamilySpec::Cycle(6)).unwrap();
        assert!(is_dominating_set(&c6, &set(6, &[0, 3])).unwrap().verdict);

        // The empty set dominates only the empty graph.
        let empty = crate::graph::Graph::from_edges(0, []).unwrap();
        assert!(is_dominating_set(&empty, &VertexSet::empty(0)).unwrap().verdict);
        assert!(!is_dominating_set(&p3, &set(3, &[])).unwrap().verdict);
    }

    #[test]
    fn offensive_alliance_examples() {
        let p4 = build_family(&FamilySpec::Path(4)).unwrap();
        assert!(is_global_offensive_alliance(&p4, &set(4, &[1, 2])).unwrap().verdict);

        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        let cert = is_global_offensive_alliance(&c5, &set(5, &[0, 2])).unwrap();
        assert!(!cert.verdict);
        let w = cert.witness.unwrap();
        assert!(w.vertex == 3 || w.vertex == 4);

        // Ill-posed: the empty set is not a candidate.
        assert!(matches!(
            is_global_offensive_alliance(&c5, &set(5, &[])),
            Err(VerifyError::EmptyCandidate)
        ));
        // The whole vertex set is vacuously an alliance.
        assert!(is_global_offensive_alliance(&c5, &VertexSet::full(5)).unwrap().verdict);
    }

    #[test]
    fn strong_offensive_examples() {
        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(
            is_global_strong_offensive_alliance(&c5, &set(5, &[0, 2]))
                .unwrap()
                .verdict
        );
        let k3 = build_family(&FamilySpec::Complete(3)).unwrap();
        assert!(is_global_strong_offensive_alliance(&k3, &set(3, &[0])).unwrap().verdict);
        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        assert!(is_global_strong_offensive_alliance(&p2, &set(2, &[0])).unwrap().verdict);
    }

    #[test]
    fn efficient_domination_examples() {
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        assert!(is_efficient_dominating_set(&p3, &set(3, &[1])).unwrap().verdict);

        let c6 = build_family(&FamilySpec::Cycle(6)).unwrap();
        assert!(is_efficient_dominating_set(&c6, &set(6, &[0, 3])).unwrap().verdict);

        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        let cert = is_efficient_dominating_set(&c4, &set(4, &[0, 2])).unwrap();
        assert!(!cert.verdict);
        assert!(cert.witness.unwrap().detail.contains("2 closed neighborhoods"));
    }

    #[test]
    fn partition_examples() {
        let p4 = build_family(&FamilySpec::Path(4)).unwrap();
        let parts = [set(4, &[0, 2]), set(4, &[1, 3])];
        assert!(check_partition(&p4, &parts, PartitionMode::BothOffensive).unwrap().verdict);

        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        let parts = [set(5, &[0, 2, 4]), set(5, &[1, 3])];
        assert!(
            check_partition(&c5, &parts, PartitionMode::OffensivePlusStrong)
                .unwrap()
                .verdict
        );
        // {1, 3} is not offensive: both 0 and 4 see one neighbor on each side.
        let cert = check_partition(&c5, &parts, PartitionMode::BothOffensive).unwrap();
        assert!(!cert.verdict);
        let w = cert.witness.unwrap();
        assert!(w.vertex == 0 || w.vertex == 4);
        assert_eq!((w.in_degree, w.out_degree), (1, 1));

        // Not a partition at all -> error.
        let overlap = [set(5, &[0, 1, 2]), set(5, &[2, 3, 4])];
        assert!(matches!(
            check_partition(&c5, &overlap, PartitionMode::BothOffensive),
            Err(VerifyError::NotAPartition(_))
        ));
    }

    #[test]
    fn square_counts() {
        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        let pg = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(squares(&pg).count(), 1);

        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        let pg = cartesian_product(&c4, &c4).unwrap();
        assert_eq!(squares(&pg).count(), 16);
    }

    #[test]
    fn square_lemma_applicability() {
        // K_3 is C_3, so a complete factor of order 3 is still eligible.
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        let k3 = build_family(&FamilySpec::Complete(3)).unwrap();
        let pg = cartesian_product(&p3, &k3).unwrap();
        assert!(check_square_lemma(&pg, &VertexSet::full(9)).unwrap().verdict);

        // A star of three leaves is neither a path nor a cycle.
        let s3 = build_family(&FamilySpec::Star(3)).unwrap();
        let pg = cartesian_product(&p3, &s3).unwrap();
        assert!(matches!(
            check_square_lemma(&pg, &VertexSet::full(12)),
            Err(VerifyError::LemmaInapplicable(_))
        ));
    }
}
