//! Simple undirected graphs on the vertex set `0..n`, the edge-list text
//! format, induced-subgraph classification and the pair independence ratio.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        debug_assert_ne!(u, v, "self-loop");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "vertex {v} not on edge {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        f.write_str("])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs collapse silently;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        if self.matrix[u * self.n + v] {
            return false;
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push(Edge::new(u, v));
        true
    }

    fn finish(&mut self) {
        self.edges.sort_unstable();
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    /// Position of `{u,v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || !self.has_edge(u, v) {
            return None;
        }
        self.edges.binary_search(&Edge::new(u, v)).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut h = Graph::empty(vertices.len());
        for e in &self.edges {
            let (a, b) = (local[e.0], local[e.1]);
            if a != usize::MAX && b != usize::MAX {
                h.insert(a, b);
            }
        }
        h.finish();
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for e in &self.edges {
            h.insert(perm[e.0], perm[e.1]);
        }
        h.finish();
        h
    }

    /// Edge-list text rendering accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }
}

/// Result of [`parse_graph`]: the graph plus any duplicate edge lines
/// that were collapsed (1-based line numbers).
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_lines: Vec<usize>,
}

impl ParsedGraph {
    pub fn has_duplicates(&self) -> bool {
        !self.duplicate_lines.is_empty()
    }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Blank lines and lines starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut g = Graph::empty(n);
    let mut duplicate_lines = Vec::new();
    let mut seen = 0;
    for (line, body) in lines {
        if seen == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} edges declared in the header"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex index out of range (n = {n})"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if !g.insert(u, v) {
            duplicate_lines.push(line);
        }
        seen += 1;
    }
    if seen < m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {seen}"),
        });
    }
    g.finish();
    Ok(ParsedGraph {
        graph: g,
        duplicate_lines,
    })
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut fields = body.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {name}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{name} {tok:?} is not a nonnegative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------------
// Classification

/// Membership in the claw-free class and its square/diamond-free subclass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    pub claw_free: bool,
    pub square_free: bool,
    pub diamond_free: bool,
    /// `Some(1)` for (claw, C4, diamond)-free, `Some(0)` for claw-free
    /// otherwise, `None` when the graph has an induced claw.
    pub class_index: Option<u8>,
}

/// True iff no vertex has an independent triple among its neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(nb[i], c) && !g.has_edge(nb[j], c) {
                        return false;
                    }
                }
            }
        }
        true
    })
}

#[derive(Default)]
struct FourVertexScan {
    squares: bool,
    diamonds: bool,
}

fn scan_four_subsets(g: &Graph, stop_on_square: bool, stop_on_diamond: bool) -> FourVertexScan {
    let n = g.vertex_count();
    let mut out = FourVertexScan::default();
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.has_edge(a, b) as u8;
            for c in b + 1..n {
                let ac = g.has_edge(a, c) as u8;
                let bc = g.has_edge(b, c) as u8;
                for d in c + 1..n {
                    let ad = g.has_edge(a, d) as u8;
                    let bd = g.has_edge(b, d) as u8;
                    let cd = g.has_edge(c, d) as u8;
                    match ab + ac + ad + bc + bd + cd {
                        5 => out.diamonds = true,
                        4 => {
                            // C4 and the paw both have 4 edges; only C4 is 2-regular.
                            let degs = [ab + ac + ad, ab + bc + bd, ac + bc + cd, ad + bd + cd];
                            if degs.iter().all(|&x| x == 2) {
                                out.squares = true;
                            }
                        }
                        _ => {}
                    }
                    if (stop_on_square && out.squares) || (stop_on_diamond && out.diamonds) {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// True iff there is no induced 4-cycle.
pub fn is_square_free(g: &Graph) -> bool {
    !scan_four_subsets(g, true, false).squares
}

/// True iff there is no induced K4 minus an edge.
pub fn is_diamond_free(g: &Graph) -> bool {
    !scan_four_subsets(g, false, true).diamonds
}

pub fn classify(g: &Graph) -> ClassMembership {
    let claw_free = is_claw_free(g);
    let scan = scan_four_subsets(g, false, false);
    let square_free = !scan.squares;
    let diamond_free = !scan.diamonds;
    let class_index = match (claw_free, square_free && diamond_free) {
        (false, _) => None,
        (true, true) => Some(1),
        (true, false) => Some(0),
    };
    ClassMembership {
        claw_free,
        square_free,
        diamond_free,
        class_index,
    }
}

// ---------------------------------------------------------------------------
// Pair independence ratio

/// Non-adjacent pairs `{w, w'}` inside the neighborhood of `v`.
pub fn non_edges_in_neighborhood(g: &Graph, v: usize) -> Vec<Edge> {
    let nb = g.neighbors(v);
    let mut out = Vec::new();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                out.push(Edge::new(a, b));
            }
        }
    }
    out
}

/// Per-vertex neighborhood statistics behind the pair independence ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodStats {
    pub delta: usize,
    /// `|I_v|` for every vertex.
    pub non_edge_counts: Vec<usize>,
    /// `None` when `floor(delta^2 / 4) = 0`.
    pub kappa: Option<Ratio<u64>>,
}

impl NeighborhoodStats {
    pub fn max_non_edges(&self) -> usize {
        self.non_edge_counts.iter().copied().max().unwrap_or(0)
    }

    /// `floor(delta^2 / 4)`, the triangle-free extremal edge count on `delta` vertices.
    pub fn mantel_bound(&self) -> usize {
        mantel_bound(self.delta)
    }
}

pub fn mantel_bound(delta: usize) -> usize {
    delta * delta / 4
}

pub fn neighborhood_stats(g: &Graph) -> NeighborhoodStats {
    let delta = g.max_degree();
    let non_edge_counts: Vec<usize> = (0..g.vertex_count())
        .map(|v| non_edges_in_neighborhood(g, v).len())
        .collect();
    let denom = mantel_bound(delta);
    let kappa = (denom > 0).then(|| {
        let num = non_edge_counts.iter().copied().max().unwrap_or(0);
        Ratio::new(num as u64, denom as u64)
    });
    NeighborhoodStats {
        delta,
        non_edge_counts,
        kappa,
    }
}

/// Exact pair independence ratio `max_v |I_v| / floor(delta^2/4)`.
///
/// Not clamped: graphs with an induced claw can exceed 1.
pub fn pair_independence_ratio(g: &Graph) -> Result<Ratio<u64>> {
    let stats = neighborhood_stats(g);
    stats.kappa.ok_or(Error::DegenerateKappa {
        max_degree: stats.delta,
    })
}
