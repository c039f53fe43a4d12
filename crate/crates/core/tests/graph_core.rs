use num_rational::Ratio;
use proptest::prelude::*;

use clawfree_zeros::families::{self, canonical_code, line_graph};
use clawfree_zeros::graph::{
    classify, is_claw_free, mantel_bound, neighborhood_stats, pair_independence_ratio, parse_graph,
    Graph,
};

fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |m| {
        Graph::from_edges(
            n,
            (0..pairs.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| pairs[i]),
        )
        .unwrap()
    })
}

fn induced_copy_of(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.vertex_count();
    let want = (pattern.edge_count(), canonical_code(pattern));
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            let h = g.induced(&vs);
            (h.edge_count(), canonical_code(&h)) == want
        })
}

/// The complement of `G[N(v)]` has no triangle, for every `v`.
fn neighborhoods_have_triangle_free_complement(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nb = g.neighbors(v);
        let k = nb.len();
        (0..k).all(|a| {
            (a + 1..k).all(|b| {
                (b + 1..k).all(|c| {
                    g.has_edge(nb[a], nb[b]) || g.has_edge(nb[a], nb[c]) || g.has_edge(nb[b], nb[c])
                })
            })
        })
    })
}

fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

#[test]
fn class_tests_agree_with_induced_subgraph_search() {
    let claw = families::star(3);
    let square = families::cycle(4);
    let diamond = diamond();
    for n in 0..=6 {
        for g in labelled_graphs(n) {
            let c = classify(&g);
            assert_eq!(c.claw_free, !induced_copy_of(&g, &claw), "{g:?}");
            assert_eq!(c.square_free, !induced_copy_of(&g, &square), "{g:?}");
            assert_eq!(c.diamond_free, !induced_copy_of(&g, &diamond), "{g:?}");
            assert_eq!(c.claw_free, neighborhoods_have_triangle_free_complement(&g));
            let want_index = match (c.claw_free, c.square_free && c.diamond_free) {
                (false, _) => None,
                (true, true) => Some(1),
                (true, false) => Some(0),
            };
            assert_eq!(c.class_index, want_index);
        }
    }
}

#[test]
fn named_graph_classes() {
    assert_eq!(classify(&families::complete(4)).class_index, Some(1));
    assert_eq!(classify(&families::cycle(5)).class_index, Some(1));
    assert_eq!(classify(&families::triangle_ring(5)).class_index, Some(1));
    assert_eq!(classify(&families::icosahedron()).class_index, Some(0));
    assert_eq!(classify(&families::octahedron()).class_index, Some(0));
    assert_eq!(classify(&families::star(3)).class_index, None);
}

#[test]
fn kappa_examples() {
    assert_eq!(
        pair_independence_ratio(&families::complete(5)).unwrap(),
        Ratio::new(0, 1)
    );
    // every vertex of C5 sees one non-adjacent pair; floor(4/4) = 1
    assert_eq!(
        pair_independence_ratio(&families::cycle(5)).unwrap(),
        Ratio::new(1, 1)
    );
    // octahedron: N(v) is C4, two non-edges over floor(16/4) = 4
    assert_eq!(
        pair_independence_ratio(&families::octahedron()).unwrap(),
        Ratio::new(1, 2)
    );
    // K_{1,3}: three non-edges over floor(9/4) = 2
    assert_eq!(
        pair_independence_ratio(&families::star(3)).unwrap(),
        Ratio::new(3, 2)
    );
    assert!(pair_independence_ratio(&families::path(2)).is_err());
    assert!(pair_independence_ratio(&Graph::empty(4)).is_err());
}

#[test]
fn edge_list_round_trip() {
    for g in [
        families::icosahedron(),
        families::cycle_square(9),
        Graph::empty(3),
    ] {
        let parsed = parse_graph(&g.to_edge_list()).unwrap();
        assert_eq!(parsed.graph, g);
        assert!(!parsed.has_duplicates());
    }
}

#[test]
fn parser_reports_duplicates_and_bad_lines() {
    let p = parse_graph("# comment\n3 3\n0 1\n\n1 0\n1 2\n").unwrap();
    assert_eq!(p.graph.edge_count(), 2);
    assert_eq!(p.duplicate_lines, vec![5]);
    for bad in [
        "",
        "3\n",
        "2 1\n0 0\n",
        "2 1\n0 2\n",
        "2 1\n",
        "2 1\n0 1\n0 1\n",
        "2 1\n0 x\n",
    ] {
        assert!(parse_graph(bad).is_err(), "{bad:?}");
    }
}

fn arb_small_graph() -> impl Strategy<Value = Graph> {
    (2..=7usize).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn line_graphs_are_claw_free_with_kappa_at_most_one(h in arb_small_graph()) {
        let l = line_graph(&h);
        prop_assert!(is_claw_free(&l));
        let stats = neighborhood_stats(&l);
        for v in 0..l.vertex_count() {
            // a triangle-free complement on d vertices has at most floor(d^2/4) edges
            prop_assert!(stats.non_edge_counts[v] <= mantel_bound(l.degree(v)));
        }
        if let Some(k) = stats.kappa {
            prop_assert!(k <= Ratio::new(1, 1));
        }
    }

    #[test]
    fn classification_and_kappa_ignore_labels(
        (g, perm) in arb_small_graph().prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(classify(&g), classify(&h));
        prop_assert_eq!(neighborhood_stats(&g).kappa, neighborhood_stats(&h).kappa);
    }
}
