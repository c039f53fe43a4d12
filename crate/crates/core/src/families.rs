//! Small graph families used by tests, examples and the certificate corpus.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs).expect("valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("valid")
}

/// Vertices of the result are the edges of `h` in [`Graph::edges`] order.
pub fn line_graph(h: &Graph) -> Graph {
    let edges = h.edges();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (edges[i], edges[j]);
            if a.contains(b.lo()) || a.contains(b.hi()) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), pairs).expect("valid")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, pairs).expect("valid")
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// The icosahedron: 12 vertices, 5-regular, every neighborhood a 5-cycle.
pub fn icosahedron() -> Graph {
    // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
    let mut pairs = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let lo = 6 + i;
        let lo_next = 6 + (i + 1) % 5;
        pairs.extend([
            (0, up),
            (up, up_next),
            (up, lo),
            (up_next, lo),
            (lo, lo_next),
            (lo, 11),
        ]);
    }
    Graph::from_edges(12, pairs).expect("valid")
}

/// `K_{2,2,2}`.
pub fn octahedron() -> Graph {
    let pairs = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2);
    Graph::from_edges(6, pairs).expect("valid")
}

/// Square of the cycle: `C_n` plus the chords `{i, i+2}`.
pub fn cycle_square(n: usize) -> Graph {
    assert!(n >= 5);
    let pairs = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
    Graph::from_edges(n, pairs).expect("valid")
}

/// `k` triangles glued in a ring at shared vertices. Shared vertices see two
/// disjoint edges, so the graph is claw-free and diamond-free; the ring of
/// shared vertices is an induced `C_k`, so it is square-free for `k >= 5`.
pub fn triangle_ring(k: usize) -> Graph {
    assert!(k >= 3);
    // shared vertices 0..k, apexes k..2k; triangle i = {i, i+1, k+i}
    let n = 2 * k;
    let mut pairs = Vec::new();
    for i in 0..k {
        let a = i;
        let b = (i + 1) % k;
        let apex = k + i;
        pairs.extend([(a, b), (a, apex), (b, apex)]);
    }
    Graph::from_edges(n, pairs).expect("valid")
}

fn adjacency_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.vertex_count();
    let mut code = 0u64;
    for e in g.edges() {
        let (a, b) = (
            perm[e.lo()].min(perm[e.hi()]),
            perm[e.lo()].max(perm[e.hi()]),
        );
        let bit = a * n + b;
        code |= 1 << bit;
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism invariant that separates non-isomorphic graphs on the same
/// number of vertices: the least adjacency bit code over all relabellings.
/// Brute force, `n <= 8`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 8, "brute-force canonical code only for n <= 8");
    permutations(n)
        .iter()
        .map(|p| adjacency_code(g, p))
        .min()
        .unwrap_or(0)
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices. Brute force over labelled graphs; meant for `n <= 6`.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "brute-force isomorphism classes only for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let g = Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p),
        )
        .expect("valid");
        let canon = perms
            .iter()
            .map(|p| adjacency_code(&g, p))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, is_claw_free};

    #[test]
    fn iso_class_counts() {
        // OEIS A000088
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn named_graph_shapes() {
        let ico = icosahedron();
        assert_eq!(ico.edge_count(), 30);
        assert!((0..12).all(|v| ico.degree(v) == 5));
        assert!(is_claw_free(&ico));
        let oct = octahedron();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(classify(&oct).class_index, Some(0));
        let ring = triangle_ring(5);
        assert_eq!(classify(&ring).class_index, Some(1));
        assert_eq!(ring.max_degree(), 4);
        assert_eq!(line_graph(&complete(4)).edge_count(), 12);
        assert_eq!(star(3).max_degree(), 3);
        assert_eq!(cycle_square(7).max_degree(), 4);
    }
}
