mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clawfree_zeros::chromatic::chromatic_deletion_contraction;
use clawfree_zeros::corpus;
use clawfree_zeros::families;
use clawfree_zeros::graph::{Edge, Graph};
use clawfree_zeros::penrose::{
    for_each_penrose_forest, forest_closure, is_penrose_forest, is_penrose_tree, penrose_closure,
    penrose_forests, penrose_polynomial, Forest, ForestTable, RootedTreeView, VertexOrdering,
    DEFAULT_ENUM_CAP,
};
use clawfree_zeros::poly::SparsePolynomial;

fn arb_graph(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let all: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                let g = Graph::from_edges(
                    n,
                    all.into_iter()
                        .zip(bits)
                        .filter(|(_, b)| *b)
                        .map(|(p, _)| p),
                )
                .unwrap();
                (g, perm)
            })
    })
}

/// Penrose spanning trees of each induced subgraph, by filtering every edge
/// subset through the closure map.
fn brute_force_tree_counts(g: &Graph, ord: &VertexOrdering) -> Vec<u64> {
    let n = g.vertex_count();
    let mut counts = vec![0u64; 1 << n];
    for w in 1u64..1 << n {
        let size = w.count_ones() as usize;
        if size == 1 {
            counts[w as usize] = 1;
            continue;
        }
        let local: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| w >> e.lo() & 1 == 1 && w >> e.hi() & 1 == 1)
            .collect();
        for m in 0u64..1 << local.len() {
            if m.count_ones() as usize != size - 1 {
                continue;
            }
            let edges: BTreeSet<Edge> = (0..local.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| local[i])
                .collect();
            let covered: BTreeSet<usize> = edges.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
            if covered.len() != size {
                continue;
            }
            let Ok(tree) = RootedTreeView::new(g, ord, edges) else {
                continue; // a cycle plus an isolated vertex is not a tree
            };
            if is_penrose_tree(g, ord, &tree).unwrap() {
                counts[w as usize] += 1;
            }
        }
    }
    counts
}

fn all_forests(g: &Graph) -> Vec<Forest> {
    let edges = g.edges();
    (0u64..1 << edges.len())
        .filter_map(|m| {
            Forest::new(
                g,
                (0..edges.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| edges[i]),
            )
            .ok()
        })
        .collect()
}

#[test]
fn generated_trees_match_closure_filtering_on_named_graphs() {
    for g in [
        families::complete(5),
        families::cycle(6),
        families::octahedron(),
        families::star(4),
        families::triangle_ring(3),
    ] {
        let n = g.vertex_count();
        let ord = VertexOrdering::natural(n);
        let table = ForestTable::build(&g, &ord, DEFAULT_ENUM_CAP).unwrap();
        let brute = brute_force_tree_counts(&g, &ord);
        for w in 1u64..1 << n {
            assert_eq!(table.tree_count(w), brute[w as usize], "{g:?} mask {w:b}");
        }
    }
}

#[test]
fn forest_stream_matches_closure_filtering() {
    let g = families::cycle_square(6);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let ord = VertexOrdering::random(6, &mut rng);
        let streamed: BTreeSet<BTreeSet<Edge>> = penrose_forests(&g, &ord)
            .unwrap()
            .into_iter()
            .map(|f| f.edges().clone())
            .collect();
        let filtered: BTreeSet<BTreeSet<Edge>> = all_forests(&g)
            .into_iter()
            .filter(|f| is_penrose_forest(&g, &ord, f).unwrap())
            .map(|f| f.edges().clone())
            .collect();
        assert_eq!(streamed, filtered);
    }
}

#[test]
fn forest_closure_is_componentwise() {
    let g = families::octahedron();
    let ord = VertexOrdering::natural(6);
    for f in all_forests(&g) {
        let mut union = BTreeSet::new();
        let mut all_penrose = true;
        for comp in f.components() {
            let t = RootedTreeView::new(&g, &ord, comp).unwrap();
            union.extend(penrose_closure(&g, &ord, &t).unwrap());
            all_penrose &= is_penrose_tree(&g, &ord, &t).unwrap();
        }
        assert_eq!(forest_closure(&g, &ord, &f).unwrap(), union);
        assert_eq!(is_penrose_forest(&g, &ord, &f).unwrap(), all_penrose);
    }
}

#[test]
fn polynomial_does_not_depend_on_the_ordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for e in corpus::corpus_up_to(9) {
        let n = e.graph.vertex_count();
        let base = penrose_polynomial(&e.graph, &VertexOrdering::natural(n)).unwrap();
        for _ in 0..5 {
            let ord = VertexOrdering::random(n, &mut rng);
            assert_eq!(
                penrose_polynomial(&e.graph, &ord).unwrap(),
                base,
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn penrose_forests_are_a_subset_of_forests() {
    for g in [
        families::complete(5),
        families::icosahedron().induced(&[0, 1, 2, 3, 4, 5, 6]),
    ] {
        let p = penrose_polynomial(&g, &VertexOrdering::natural(g.vertex_count())).unwrap();
        let all = common::forest_counts(&g);
        for (k, c) in common::coeffs_i64(&p).into_iter().enumerate() {
            assert!(c >= 0 && c as u64 <= all[k], "k={k}: {c} > {}", all[k]);
        }
    }
}

#[test]
fn streamed_forest_sizes_match_polynomial() {
    let g = families::triangle_ring(5);
    let ord = VertexOrdering::natural(10);
    let mut by_size = vec![0i64; 10];
    for_each_penrose_forest(&g, &ord, DEFAULT_ENUM_CAP, |f| by_size[f.len()] += 1).unwrap();
    let p = penrose_polynomial(&g, &ord).unwrap();
    let want = SparsePolynomial::from_i64(&by_size);
    assert_eq!(p, want);
}

#[test]
fn caps_are_explicit_errors() {
    let g = families::cycle(13);
    assert!(penrose_polynomial(&g, &VertexOrdering::natural(13)).is_err());
    assert!(ForestTable::build(&g, &VertexOrdering::natural(13), 13).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_small_graphs_match_brute_force((g, perm) in arb_graph(5)) {
        let ord = VertexOrdering::from_sequence(perm).unwrap();
        let table = ForestTable::build(&g, &ord, DEFAULT_ENUM_CAP).unwrap();
        let brute = brute_force_tree_counts(&g, &ord);
        for w in 1u64..1 << g.vertex_count() {
            prop_assert_eq!(table.tree_count(w), brute[w as usize]);
        }
    }

    #[test]
    fn identity_holds_under_random_orderings((g, perm) in arb_graph(7)) {
        let ord = VertexOrdering::from_sequence(perm).unwrap();
        let lhs = clawfree_zeros::penrose::chromatic_via_penrose(&g, &ord).unwrap();
        prop_assert_eq!(lhs, chromatic_deletion_contraction(&g).unwrap());
    }
}
