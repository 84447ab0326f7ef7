//! Randomized invariants: verifier implications, solver strategy agreement,
//! product arithmetic, construction soundness, and set algebra against a
//! `BTreeSet` model.

use std::collections::BTreeSet;

use proptest::collection::vec;
use proptest::prelude::*;

use alliance_lab::constructions::complement_of_independent_set;
use alliance_lab::edgelist::{parse_edge_list, serialize_edge_list};
use alliance_lab::exact::{
    domination_number, global_offensive_alliance_number, SolveOptions, Strategy as Search,
};
use alliance_lab::graph::{cartesian_product, Graph};
use alliance_lab::set::VertexSet;
use alliance_lab::verify::{
    is_dominating_set, is_global_offensive_alliance, is_global_strong_offensive_alliance,
};

/// Uniform random simple graph on `2..=max_n` vertices, one bit per
/// unordered pair.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).expect("pairs are distinct and in range")
        })
    })
}

fn arb_graph_with_mask(max_n: usize) -> impl Strategy<Value = (Graph, Vec<bool>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), vec(any::<bool>(), n))
    })
}

fn mask_to_set(mask: &[bool]) -> VertexSet {
    let mut s = VertexSet::empty(mask.len());
    for (v, &inside) in mask.iter().enumerate() {
        if inside {
            s.insert(v);
        }
    }
    s
}

fn options(strategy: Search) -> SolveOptions {
    SolveOptions {
        strategy,
        ..SolveOptions::default()
    }
}

/// Greedy maximal independent set, smallest labels first.
fn greedy_independent(g: &Graph) -> VertexSet {
    let mut taken = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if g.neighbors(v).iter().all(|&u| !taken.contains(u)) {
            taken.insert(v);
        }
    }
    taken
}

proptest! {
    /// An offensive alliance subjugates every outside vertex, so it both
    /// dominates and meets the weaker parity threshold.
    #[test]
    fn offensive_implies_dominating_and_strong((g, mask) in arb_graph_with_mask(8)) {
        let s = mask_to_set(&mask);
        prop_assume!(!s.is_empty());
        if is_global_offensive_alliance(&g, &s)?.verdict {
            prop_assert!(is_dominating_set(&g, &s)?.verdict);
            prop_assert!(is_global_strong_offensive_alliance(&g, &s)?.verdict);
        }
    }

    /// Adding vertices to an offensive alliance never breaks it: outside
    /// vertices only gain attackers and lose defenders.
    #[test]
    fn optimal_witnesses_survive_supersets((g, mask) in arb_graph_with_mask(8)) {
        let witness = global_offensive_alliance_number(&g, &options(Search::BranchAndBound))?
            .witness;
        let grown = witness.union(&mask_to_set(&mask));
        prop_assert!(is_global_offensive_alliance(&g, &grown)?.verdict);
    }

    /// Both strategies are exact and both tie-break lexicographically, so
    /// they must agree on the value and on the witness itself.
    #[test]
    fn strategies_agree_on_value_and_witness(g in arb_graph(7)) {
        let by_scan = global_offensive_alliance_number(&g, &options(Search::Enumeration))?;
        let by_search = global_offensive_alliance_number(&g, &options(Search::BranchAndBound))?;
        prop_assert_eq!(by_scan.value, by_search.value);
        prop_assert_eq!(by_scan.witness.indices(), by_search.witness.indices());

        let gamma = domination_number(&g, &options(Search::BranchAndBound))?.value;
        prop_assert!(gamma <= by_search.value);
    }

    /// The alliance number never drops when the set is forced to stay
    /// feasible: re-verify the returned witness from scratch.
    #[test]
    fn solver_witnesses_verify(g in arb_graph(8)) {
        let r = global_offensive_alliance_number(&g, &options(Search::BranchAndBound))?;
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(is_global_offensive_alliance(&g, &r.witness)?.verdict);
    }

    /// Serialization round-trips through the text format.
    #[test]
    fn edge_lists_round_trip(g in arb_graph(12)) {
        let back = parse_edge_list(&serialize_edge_list(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    /// Order, size, and degrees of a product follow from the factors, and
    /// swapping the factors relabels `(i, j)` to `(j, i)`.
    #[test]
    fn product_arithmetic(g in arb_graph(5), h in arb_graph(5)) {
        let gh = cartesian_product(&g, &h).unwrap();
        let hg = cartesian_product(&h, &g).unwrap();
        let (n1, n2) = (g.n(), h.n());
        prop_assert_eq!(gh.graph().n(), n1 * n2);
        prop_assert_eq!(
            gh.graph().edge_count(),
            g.edge_count() * n2 + n1 * h.edge_count()
        );
        for i in 0..n1 {
            for j in 0..n2 {
                prop_assert_eq!(
                    gh.graph().degree(gh.index(i, j)),
                    g.degree(i) + h.degree(j)
                );
            }
        }
        for (u, v) in gh.graph().edges() {
            let (i1, j1) = gh.coords(u);
            let (i2, j2) = gh.coords(v);
            prop_assert!(hg.graph().has_edge(hg.index(j1, i1), hg.index(j2, i2)));
        }
        prop_assert_eq!(gh.graph().edge_count(), hg.graph().edge_count());
    }

    /// Everything outside an independent set is attacked through all of its
    /// edges, so the complement is an offensive alliance whenever no vertex
    /// is isolated.
    #[test]
    fn complements_of_independent_sets_are_alliances(g in arb_graph(10)) {
        prop_assume!(g.min_degree() >= 1);
        let independent = greedy_independent(&g);
        let c = complement_of_independent_set(&g, &independent).unwrap();
        prop_assert!(is_global_offensive_alliance(&g, &c.set)?.verdict);
        prop_assert_eq!(c.set.len(), g.n() - independent.len());
    }

    /// Set algebra agrees with a `BTreeSet` model.
    #[test]
    fn vertex_sets_match_btreeset_model(
        (a_bits, b_bits) in (1usize..100).prop_flat_map(|n| {
            (vec(any::<bool>(), n), vec(any::<bool>(), n))
        })
    ) {
        let n = a_bits.len();
        let a = mask_to_set(&a_bits);
        let b = mask_to_set(&b_bits);
        let ma: BTreeSet<usize> = a.iter().collect();
        let mb: BTreeSet<usize> = b.iter().collect();

        prop_assert_eq!(a.len(), ma.len());
        for v in 0..n {
            prop_assert_eq!(a.contains(v), ma.contains(&v));
        }
        let union: Vec<usize> = ma.union(&mb).copied().collect();
        prop_assert_eq!(a.union(&b).indices(), union);
        let meet: Vec<usize> = ma.intersection(&mb).copied().collect();
        prop_assert_eq!(a.intersection(&b).indices(), meet);
        let diff: Vec<usize> = ma.difference(&mb).copied().collect();
        prop_assert_eq!(a.difference(&b).indices(), diff);
        let co: Vec<usize> = (0..n).filter(|v| !ma.contains(v)).collect();
        prop_assert_eq!(a.complement().indices(), co);
        prop_assert_eq!(a.is_subset_of(&b), ma.is_subset(&mb));
        prop_assert_eq!(a.is_disjoint(&b), ma.is_disjoint(&mb));

        let mut mutated = a.clone();
        let mut model = ma.clone();
        for v in (0..n).step_by(3) {
            if mutated.contains(v) {
                mutated.remove(v);
                model.remove(&v);
            } else {
                mutated.insert(v);
                model.insert(v);
            }
        }
        prop_assert_eq!(mutated.indices(), model.into_iter().collect::<Vec<_>>());
    }
}
