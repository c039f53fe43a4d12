//! Fixed graph corpus for the disk certificate and the combinatorial checks.
//!
//! Line graphs are claw-free by construction, so most of the corpus is
//! `L(H)` for small `H`: every connected `H` with at most five edges, a few
//! named graphs, and seeded random ones. All seeds are constants below.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{self, canonical_code, line_graph};
use crate::graph::Graph;
use crate::penrose::VertexOrdering;

pub const RANDOM_LINE_GRAPH_SEED: u64 = 0x6c69_6e65;
pub const RANDOM_LINE_GRAPH_COUNT: usize = 6;
pub const ORACLE_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        CorpusEntry {
            name: name.into(),
            graph,
        }
    }
}

fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn edge_list_name(h: &Graph) -> String {
    let parts: Vec<String> = h
        .edges()
        .iter()
        .map(|e| format!("{}{}", e.lo(), e.hi()))
        .collect();
    format!("L({})", parts.join(","))
}

/// `L(H)` for every connected `H` with 1 to 5 edges, one per isomorphism
/// class of the line graph.
pub fn small_line_graphs() -> Vec<CorpusEntry> {
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // subsets of K6's edges in increasing size, then lexicographic
    for size in 1..=5usize {
        for combo in combinations(pairs.len(), size) {
            let chosen: Vec<(usize, usize)> = combo.iter().map(|&k| pairs[k]).collect();
            let used: BTreeSet<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            // vertices must be 0..k so that H has no isolated vertices
            if used.iter().copied().ne(0..used.len()) {
                continue;
            }
            let h = Graph::from_edges(used.len(), chosen).expect("valid");
            if !is_connected(&h) {
                continue;
            }
            let l = line_graph(&h);
            if seen.insert((l.vertex_count(), canonical_code(&l))) {
                out.push(CorpusEntry::new(edge_list_name(&h), l));
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let pairs = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, pairs).expect("valid")
}

pub fn named_graphs() -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry::new("K4", families::complete(4)),
        CorpusEntry::new("K5", families::complete(5)),
        CorpusEntry::new("K6", families::complete(6)),
        CorpusEntry::new("octahedron", families::octahedron()),
        CorpusEntry::new("icosahedron", families::icosahedron()),
        CorpusEntry::new("L(K4)", line_graph(&families::complete(4))),
        CorpusEntry::new("L(K2,3)", line_graph(&complete_bipartite(2, 3))),
        CorpusEntry::new("L(K3,3)", line_graph(&complete_bipartite(3, 3))),
        CorpusEntry::new("L(K5)", line_graph(&families::complete(5))),
    ];
    for n in 7..=12 {
        out.push(CorpusEntry::new(
            format!("C{n}^2"),
            families::cycle_square(n),
        ));
    }
    for k in 5..=6 {
        out.push(CorpusEntry::new(
            format!("triangle-ring-{k}"),
            families::triangle_ring(k),
        ));
    }
    out
}

/// Line graphs of connected `G(n, 1/2)` samples, `n` in 5..=7, whose line
/// graph has at most 12 vertices.
pub fn random_line_graphs(count: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(5..=7);
        let h = families::random_gnp(n, 0.5, &mut rng);
        if !is_connected(&h) || h.edge_count() > 12 || h.edge_count() < 4 {
            continue;
        }
        out.push(CorpusEntry::new(
            format!("random-{}:{}", out.len(), edge_list_name(&h)),
            line_graph(&h),
        ));
    }
    out
}

/// The whole corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = small_line_graphs();
    out.extend(named_graphs());
    out.extend(random_line_graphs(
        RANDOM_LINE_GRAPH_COUNT,
        RANDOM_LINE_GRAPH_SEED,
    ));
    out
}

/// Corpus graphs with at most `max_vertices` vertices.
pub fn corpus_up_to(max_vertices: usize) -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| e.graph.vertex_count() <= max_vertices)
        .collect()
}

/// `count` random `G(n, 1/2)` graphs with `n` uniform in `sizes`, each
/// paired with a uniformly random vertex ordering.
pub fn random_cases(
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<(Graph, VertexOrdering)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let g = families::random_gnp(n, 0.5, &mut rng);
            let ord = VertexOrdering::random(n, &mut rng);
            (g, ord)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_claw_free;

    #[test]
    fn line_graph_corpus_shape() {
        let small = small_line_graphs();
        assert!(small.iter().all(|e| is_claw_free(&e.graph)));
        assert!(small
            .iter()
            .all(|e| (1..=5).contains(&e.graph.vertex_count())));
        // K3 and K_{1,3} share a line graph, so it appears once
        let triangles = small
            .iter()
            .filter(|e| e.graph.vertex_count() == 3 && e.graph.edge_count() == 3)
            .count();
        assert_eq!(triangles, 1);
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(corpus(), corpus());
        let a = random_cases(5, 6..=8, 42);
        let b = random_cases(5, 6..=8, 42);
        assert_eq!(a.len(), b.len());
        for ((g, o), (h, p)) in a.iter().zip(&b) {
            assert_eq!(g, h);
            assert_eq!(o.sequence(), p.sequence());
        }
    }

    #[test]
    fn everything_is_claw_free_and_small() {
        for e in corpus() {
            assert!(is_claw_free(&e.graph), "{}", e.name);
            assert!(e.graph.vertex_count() <= 12, "{}", e.name);
        }
    }
}
