//! The Penrose partition scheme.
//!
//! Every tree is rooted at its least vertex under a fixed [`VertexOrdering`].
//! The closure of a tree adds each non-tree edge of the induced subgraph on
//! its vertices whose endpoints sit at equal depth, or at depths differing by
//! one where the shallower endpoint comes after the deeper endpoint's father.
//! Penrose trees and forests are the fixed points of that closure, and the
//! forest generating polynomial `F_G(z)` counts Penrose forests by size.
//!
//! ## Generating Penrose trees
//!
//! A Penrose tree is determined by its depth layers: each layer must be an
//! independent set (equal-depth edges are forbidden), every vertex of layer
//! `k + 1` must see layer `k`, and its father is forced to be its greatest
//! neighbor in layer `k` (any greater neighbor would be added by the closure).
//! [`for_each_penrose_tree`] walks exactly these layer sequences, so no
//! candidate tree is ever rejected after the fact. Tests cross-check it
//! against brute-force filtering of all edge subsets through
//! [`penrose_closure`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::poly::SparsePolynomial;

/// Largest vertex count accepted by forest enumeration unless overridden.
pub const DEFAULT_ENUM_CAP: usize = 12;

/// Hard ceiling: vertex subsets are stored as `u64` masks and the forest
/// table has `2^n` entries.
pub const MAX_ENUM_VERTICES: usize = 24;

/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "CLAWFREE_MAX_ENUM";

/// The enumeration cap from [`ENUM_CAP_ENV`], falling back to the default.
pub fn enum_cap_from_env() -> usize {
    std::env::var(ENUM_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .map(|c: usize| c.min(MAX_ENUM_VERTICES))
        .unwrap_or(DEFAULT_ENUM_CAP)
}

// ---------------------------------------------------------------------------
// Orderings

/// A total order on `0..n`, stored as the rank-ordered vertex list plus the
/// inverse rank table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrdering {
    pub fn natural(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    /// `sequence[i]` is the vertex of rank `i`.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::contract(format!(
                    "ordering is not a permutation of 0..{n}"
                )));
            }
            rank[v] = i;
        }
        Ok(VertexOrdering {
            order: sequence,
            rank,
        })
    }

    /// `u` first, then the rest of `prefix`, then the remaining neighbors of
    /// `u`, then everything else; ties by label.
    pub fn anchored_with_prefix(g: &Graph, prefix: &[usize]) -> Result<Self> {
        let n = g.vertex_count();
        let Some(&u) = prefix.first() else {
            return Ok(Self::natural(n));
        };
        let mut seq: Vec<usize> = prefix.to_vec();
        let mut placed = vec![false; n];
        for &v in prefix {
            if v >= n || placed[v] {
                return Err(Error::contract("prefix repeats or leaves 0..n"));
            }
            placed[v] = true;
        }
        for &w in g.neighbors(u) {
            if !placed[w] {
                placed[w] = true;
                seq.push(w);
            }
        }
        seq.extend((0..n).filter(|&v| !placed[v]));
        Self::from_sequence(seq)
    }

    /// `u` least, its neighbors next, then the rest; ties by label.
    pub fn anchored_at(g: &Graph, u: usize) -> Self {
        Self::anchored_with_prefix(g, &[u]).expect("single valid vertex")
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self::from_sequence(crate::families::random_permutation(n, rng)).expect("permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertex_at(&self, rank: usize) -> usize {
        self.order[rank]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.order
    }

    /// `a ≺ b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn least<I: IntoIterator<Item = usize>>(&self, vs: I) -> Option<usize> {
        vs.into_iter().min_by_key(|&v| self.rank[v])
    }

    fn least_in_mask(&self, mask: u64) -> Option<usize> {
        self.least(bits(mask))
    }
}

// ---------------------------------------------------------------------------
// Trees and forests

/// A tree given by its edge set, rooted at a chosen vertex, with depth and
/// father tables. A tree with no edges is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreeView {
    edges: BTreeSet<Edge>,
    root: usize,
    vertices: Vec<usize>,
    depth: Vec<Option<usize>>,
    father: Vec<Option<usize>>,
}

impl RootedTreeView {
    /// Roots the tree at its least vertex under `ord`.
    pub fn new<I>(g: &Graph, ord: &VertexOrdering, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let root = ord
            .least(edges.iter().flat_map(|e| [e.lo(), e.hi()]))
            .ok_or_else(|| Error::contract("empty edge set needs an explicit root"))?;
        Self::with_root(g, edges, root)
    }

    /// The trivial tree consisting of `v` alone.
    pub fn trivial(g: &Graph, v: usize) -> Self {
        Self::with_root(g, BTreeSet::new(), v).expect("trivial tree")
    }

    pub fn with_root(g: &Graph, edges: BTreeSet<Edge>, root: usize) -> Result<Self> {
        let n = g.vertex_count();
        if root >= n {
            return Err(Error::contract(format!("root {root} out of range")));
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &edges {
            if !g.has_edge(e.lo(), e.hi()) {
                return Err(Error::contract(format!("{e} is not an edge of the graph")));
            }
            incident[e.lo()].push(e.hi());
            incident[e.hi()].push(e.lo());
        }
        if !edges.is_empty() && incident[root].is_empty() {
            return Err(Error::contract(format!("root {root} not on the tree")));
        }
        let mut depth = vec![None; n];
        let mut father = vec![None; n];
        let mut vertices = vec![root];
        depth[root] = Some(0);
        let mut head = 0;
        while head < vertices.len() {
            let x = vertices[head];
            head += 1;
            for &y in &incident[x] {
                if depth[y].is_none() {
                    depth[y] = Some(depth[x].unwrap() + 1);
                    father[y] = Some(x);
                    vertices.push(y);
                }
            }
        }
        let touched = incident.iter().filter(|l| !l.is_empty()).count();
        if vertices.len() != edges.len() + 1 || (touched > 0 && touched != vertices.len()) {
            return Err(Error::contract("edge set is not a tree"));
        }
        vertices.sort_unstable();
        Ok(RootedTreeView {
            edges,
            root,
            vertices,
            depth,
            father,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Sorted vertex list; `[root]` for a trivial tree.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.depth.get(v).is_some_and(Option::is_some)
    }

    pub fn depth(&self, v: usize) -> Option<usize> {
        self.depth.get(v).copied().flatten()
    }

    pub fn father(&self, v: usize) -> Option<usize> {
        self.father.get(v).copied().flatten()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&x| self.father(x) == Some(v))
            .collect()
    }
}

/// An acyclic edge set, possibly empty, kept with its component trees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Forest {
    edges: BTreeSet<Edge>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest {
            edges: BTreeSet::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = Edge>>(g: &Graph, edges: I) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut dsu = Dsu::new(g.vertex_count());
        for e in &edges {
            if !g.has_edge(e.lo(), e.hi()) {
                return Err(Error::contract(format!("{e} is not an edge of the graph")));
            }
            if !dsu.union(e.lo(), e.hi()) {
                return Err(Error::contract(format!("edge {e} closes a cycle")));
            }
        }
        Ok(Forest { edges })
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge sets of the nontrivial component trees, ordered by least edge.
    pub fn components(&self) -> Vec<BTreeSet<Edge>> {
        let mut comps: Vec<BTreeSet<Edge>> = Vec::new();
        let mut remaining: Vec<Edge> = self.edges.iter().copied().collect();
        while let Some(seed) = remaining.first().copied() {
            let mut comp = BTreeSet::from([seed]);
            let mut verts = BTreeSet::from([seed.lo(), seed.hi()]);
            remaining.remove(0);
            loop {
                let before = comp.len();
                remaining.retain(|e| {
                    if verts.contains(&e.lo()) || verts.contains(&e.hi()) {
                        comp.insert(*e);
                        verts.insert(e.lo());
                        verts.insert(e.hi());
                        false
                    } else {
                        true
                    }
                });
                if comp.len() == before {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|e| [e.lo(), e.hi()]).collect()
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

// ---------------------------------------------------------------------------
// Closure

/// `p(τ) = τ ∪ E^p_τ`.
pub fn penrose_closure(
    g: &Graph,
    ord: &VertexOrdering,
    t: &RootedTreeView,
) -> Result<BTreeSet<Edge>> {
    if let Some(least) = ord.least(t.vertices().iter().copied()) {
        if least != t.root() {
            return Err(Error::contract(format!(
                "tree rooted at {} but its least vertex is {least}",
                t.root()
            )));
        }
    }
    let mut out = t.edges().clone();
    let vs = t.vertices();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            if !g.has_edge(x, y) {
                continue;
            }
            let e = Edge::new(x, y);
            if t.edges().contains(&e) {
                continue;
            }
            if closure_adds(ord, t, x, y) {
                out.insert(e);
            }
        }
    }
    Ok(out)
}

fn closure_adds(ord: &VertexOrdering, t: &RootedTreeView, x: usize, y: usize) -> bool {
    let (dx, dy) = (t.depth(x).unwrap(), t.depth(y).unwrap());
    if dx == dy {
        return true;
    }
    let (deep, shallow) = if dx == dy + 1 {
        (x, y)
    } else if dy == dx + 1 {
        (y, x)
    } else {
        return false;
    };
    let father = t.father(deep).expect("non-root vertex has a father");
    ord.precedes(father, shallow)
}

pub fn is_penrose_tree(g: &Graph, ord: &VertexOrdering, t: &RootedTreeView) -> Result<bool> {
    Ok(penrose_closure(g, ord, t)?.len() == t.edges().len())
}

/// `p(F)` taken componentwise.
pub fn forest_closure(g: &Graph, ord: &VertexOrdering, f: &Forest) -> Result<BTreeSet<Edge>> {
    let mut out = BTreeSet::new();
    for comp in f.components() {
        let t = RootedTreeView::new(g, ord, comp)?;
        out.extend(penrose_closure(g, ord, &t)?);
    }
    Ok(out)
}

pub fn is_penrose_forest(g: &Graph, ord: &VertexOrdering, f: &Forest) -> Result<bool> {
    for comp in f.components() {
        let t = RootedTreeView::new(g, ord, comp)?;
        if !is_penrose_tree(g, ord, &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Bitmask enumeration

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_of<I: IntoIterator<Item = usize>>(vs: I) -> u64 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| mask_of(g.neighbors(v).iter().copied()))
        .collect()
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let n = g.vertex_count();
    let cap = cap.min(MAX_ENUM_VERTICES);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Penrose forest enumeration",
            size: n,
            cap,
        });
    }
    Ok(())
}

/// A Penrose tree produced by [`for_each_penrose_tree`]: its vertex mask and
/// `(child, father)` pairs in generation order.
#[derive(Clone, Copy, Debug)]
pub struct TreeSketch<'a> {
    pub vertex_mask: u64,
    pub root: usize,
    pub links: &'a [(usize, usize)],
}

impl TreeSketch<'_> {
    pub fn edge_count(&self) -> usize {
        self.links.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.links.iter().map(|&(c, f)| Edge::new(c, f))
    }
}

struct TreeWalker<'a, F> {
    nbr: &'a [u64],
    ord: &'a VertexOrdering,
    allowed: u64,
    max_edges: usize,
    links: Vec<(usize, usize)>,
    root: usize,
    visit: F,
}

impl<F: FnMut(TreeSketch<'_>)> TreeWalker<'_, F> {
    fn grow(&mut self, layer: u64, used: u64) {
        (self.visit)(TreeSketch {
            vertex_mask: used,
            root: self.root,
            links: &self.links,
        });
        if self.links.len() >= self.max_edges {
            return;
        }
        let reach = bits(layer).fold(0, |m, x| m | self.nbr[x]);
        let candidates: Vec<usize> = bits(reach & self.allowed & !used).collect();
        self.choose_layer(layer, used, &candidates, 0, 0);
    }

    // Picks an independent, nonempty subset of `candidates` as the next layer.
    fn choose_layer(&mut self, prev: u64, used: u64, cands: &[usize], from: usize, chosen: u64) {
        for i in from..cands.len() {
            let x = cands[i];
            if self.nbr[x] & chosen != 0 {
                continue;
            }
            if self.links.len() >= self.max_edges {
                return;
            }
            // the father is forced: the greatest neighbor in the previous layer
            let father = bits(prev & self.nbr[x])
                .max_by_key(|&y| self.ord.rank(y))
                .expect("candidate sees the previous layer");
            self.links.push((x, father));
            let layer = chosen | 1 << x;
            self.grow(layer, used | 1 << x);
            self.choose_layer(prev, used | 1 << x, cands, i + 1, layer);
            self.links.pop();
        }
    }
}

/// Calls `visit` once for every Penrose tree rooted at `root` whose other
/// vertices lie in `allowed` (which must hold only vertices after `root`),
/// including the trivial tree, with at most `max_edges` edges.
pub fn for_each_penrose_tree<F>(
    g: &Graph,
    ord: &VertexOrdering,
    root: usize,
    allowed: u64,
    max_edges: usize,
    visit: F,
) where
    F: FnMut(TreeSketch<'_>),
{
    let nbr = neighbor_masks(g);
    walk_trees(&nbr, ord, root, allowed, max_edges, visit);
}

fn walk_trees<F>(
    nbr: &[u64],
    ord: &VertexOrdering,
    root: usize,
    allowed: u64,
    max_edges: usize,
    visit: F,
) where
    F: FnMut(TreeSketch<'_>),
{
    debug_assert!(bits(allowed).all(|v| ord.precedes(root, v)));
    let mut walker = TreeWalker {
        nbr,
        ord,
        allowed: allowed & !(1 << root),
        max_edges,
        links: Vec::new(),
        root,
        visit,
    };
    walker.grow(1 << root, 1 << root);
}

fn later_than(ord: &VertexOrdering, v: usize, within: u64) -> u64 {
    bits(within)
        .filter(|&w| ord.precedes(v, w))
        .fold(0, |m, w| m | 1 << w)
}

/// Number of Penrose spanning trees of the induced subgraph on each vertex
/// subset, indexed by mask. Entries for singletons are 1.
fn penrose_tree_counts(g: &Graph, ord: &VertexOrdering) -> Vec<u64> {
    let n = g.vertex_count();
    let nbr = neighbor_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut counts = vec![0u64; 1 << n];
    for r in 0..n {
        let allowed = later_than(ord, r, full);
        walk_trees(&nbr, ord, r, allowed, usize::MAX, |t| {
            counts[t.vertex_mask as usize] += 1;
        });
    }
    counts
}

/// `F_U(z)` for every vertex subset `U`, together with the Penrose tree
/// counts that generate them.
#[derive(Clone, Debug)]
pub struct ForestTable {
    n: usize,
    tree_counts: Vec<u64>,
    forest_polys: Vec<SparsePolynomial>,
}

impl ForestTable {
    pub fn build(g: &Graph, ord: &VertexOrdering, cap: usize) -> Result<Self> {
        check_cap(g, cap)?;
        let n = g.vertex_count();
        let tree_counts = penrose_tree_counts(g, ord);
        let mut forest_polys = vec![SparsePolynomial::zero(); 1 << n];
        forest_polys[0] = SparsePolynomial::one();
        for u in 1..(1usize << n) {
            let umask = u as u64;
            let v = ord.least_in_mask(umask).unwrap();
            let rest = umask & !(1 << v);
            // component of the least vertex: either v alone or a tree on W ∋ v
            let mut acc = forest_polys[rest as usize].clone();
            let mut sub = rest;
            while sub != 0 {
                let w = sub | 1 << v;
                let c = tree_counts[w as usize];
                if c != 0 {
                    acc.add_scaled_shifted(
                        &BigInt::from(c),
                        sub.count_ones() as usize,
                        &forest_polys[(rest & !sub) as usize],
                    );
                }
                sub = (sub - 1) & rest;
            }
            forest_polys[u] = acc;
        }
        Ok(ForestTable {
            n,
            tree_counts,
            forest_polys,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// `F_U` for the vertex subset encoded by `mask`.
    pub fn polynomial(&self, mask: u64) -> &SparsePolynomial {
        &self.forest_polys[mask as usize]
    }

    pub fn polynomial_of(&self, vertices: &[usize]) -> &SparsePolynomial {
        self.polynomial(mask_of(vertices.iter().copied()))
    }

    pub fn full(&self) -> &SparsePolynomial {
        self.polynomial(self.full_mask())
    }

    /// Penrose spanning trees of the induced subgraph on `mask`.
    pub fn tree_count(&self, mask: u64) -> u64 {
        self.tree_counts[mask as usize]
    }
}

/// `F_G(z) = Σ_{F Penrose} z^{|F|}`, capped at [`DEFAULT_ENUM_CAP`] vertices.
pub fn penrose_polynomial(g: &Graph, ord: &VertexOrdering) -> Result<SparsePolynomial> {
    penrose_polynomial_capped(g, ord, DEFAULT_ENUM_CAP)
}

pub fn penrose_polynomial_capped(
    g: &Graph,
    ord: &VertexOrdering,
    cap: usize,
) -> Result<SparsePolynomial> {
    Ok(ForestTable::build(g, ord, cap)?.full().clone())
}

/// `P_G(q) = q^{|V|} F_G(-1/q)`.
pub fn chromatic_via_penrose(g: &Graph, ord: &VertexOrdering) -> Result<SparsePolynomial> {
    chromatic_via_penrose_capped(g, ord, DEFAULT_ENUM_CAP)
}

pub fn chromatic_via_penrose_capped(
    g: &Graph,
    ord: &VertexOrdering,
    cap: usize,
) -> Result<SparsePolynomial> {
    Ok(penrose_polynomial_capped(g, ord, cap)?.reflect_alternating(g.vertex_count()))
}

/// Calls `visit` for every Penrose forest of `g`, the empty forest first.
pub fn for_each_penrose_forest<F>(
    g: &Graph,
    ord: &VertexOrdering,
    cap: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&Forest),
{
    check_cap(g, cap)?;
    let nbr = neighbor_masks(g);
    let n = g.vertex_count();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut stack: Vec<Edge> = Vec::new();
    forests_rec(&nbr, ord, full, &mut stack, &mut visit);
    Ok(())
}

fn forests_rec<F: FnMut(&Forest)>(
    nbr: &[u64],
    ord: &VertexOrdering,
    remaining: u64,
    stack: &mut Vec<Edge>,
    visit: &mut F,
) {
    let Some(v) = ord.least_in_mask(remaining) else {
        visit(&Forest {
            edges: stack.iter().copied().collect(),
        });
        return;
    };
    let allowed = remaining & !(1 << v);
    let mut trees: Vec<(u64, Vec<Edge>)> = Vec::new();
    walk_trees(nbr, ord, v, allowed, usize::MAX, |t| {
        trees.push((t.vertex_mask, t.edges().collect()));
    });
    for (mask, edges) in trees {
        let depth = stack.len();
        stack.extend(edges);
        forests_rec(nbr, ord, remaining & !mask, stack, visit);
        stack.truncate(depth);
    }
}

pub fn penrose_forests(g: &Graph, ord: &VertexOrdering) -> Result<Vec<Forest>> {
    let mut out = Vec::new();
    for_each_penrose_forest(g, ord, DEFAULT_ENUM_CAP, |f| out.push(f.clone()))?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// The ratio R^u_G(z)

/// Relative threshold for declaring a polynomial value numerically zero.
pub const NONZERO_RESIDUAL: f64 = 1e-9;

/// `F(z)`, or a conditioning error when `|F(z)|` is within rounding noise
/// of zero relative to `Σ|c_k||z|^k`.
pub fn eval_nonvanishing(p: &SparsePolynomial, z: Complex64) -> Result<Complex64> {
    let value = p.eval_complex(z);
    let threshold = NONZERO_RESIDUAL * p.abs_coeff_sum_at(z.norm());
    if value.norm() <= threshold {
        return Err(Error::Conditioning {
            magnitude: value.norm(),
            threshold,
        });
    }
    Ok(value)
}

/// `R^u_G(z) = F_V(z) / F_{V-u}(z) - 1`.
pub fn ratio_r(g: &Graph, u: usize, z: Complex64) -> Result<Complex64> {
    if u >= g.vertex_count() {
        return Err(Error::contract(format!("vertex {u} out of range")));
    }
    let ord = VertexOrdering::anchored_at(g, u);
    let table = ForestTable::build(g, &ord, DEFAULT_ENUM_CAP)?;
    ratio_r_from_table(&table, u, z)
}

/// [`ratio_r`] against a prebuilt table (any ordering; `F_U` does not
/// depend on it).
pub fn ratio_r_from_table(table: &ForestTable, u: usize, z: Complex64) -> Result<Complex64> {
    let full = table.full_mask();
    let num = table.full().eval_complex(z);
    let den = eval_nonvanishing(table.polynomial(full & !(1 << u)), z)?;
    Ok(num / den - 1.0)
}

// ---------------------------------------------------------------------------
// Partition-scheme verification

/// Limit on `|E|_R|` for the interval check, which walks all `2^|E|_R|` subsets.
pub const SCHEME_EDGE_CAP: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeFailure {
    pub subset: Vec<usize>,
    pub edge_set: Vec<Edge>,
    /// How many intervals `[τ, p(τ)]` contain `edge_set`.
    pub cover_count: usize,
    /// Whether `edge_set` is connected and spanning on `subset`.
    pub connected_spanning: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchemeReport {
    pub subsets_checked: usize,
    pub connected_spanning_sets: usize,
    pub spanning_trees: usize,
    pub failure: Option<SchemeFailure>,
}

impl SchemeReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that for every `R` with `2 <= |R| <= r_max` the connected spanning
/// subsets of `E|_R` are partitioned by the intervals `[τ, p(τ)]` over the
/// spanning trees `τ` of `E|_R`. Stops at the first failure.
pub fn verify_partition_scheme(
    g: &Graph,
    ord: &VertexOrdering,
    r_max: usize,
) -> Result<SchemeReport> {
    let n = g.vertex_count();
    if n > MAX_ENUM_VERTICES {
        return Err(Error::CapExceeded {
            what: "partition-scheme verification",
            size: n,
            cap: MAX_ENUM_VERTICES,
        });
    }
    let mut report = SchemeReport::default();
    for r in 0u64..(1 << n) {
        let size = r.count_ones() as usize;
        if size < 2 || size > r_max {
            continue;
        }
        report.subsets_checked += 1;
        if let Some(f) = check_subset(g, ord, r, &mut report)? {
            report.failure = Some(f);
            return Ok(report);
        }
    }
    Ok(report)
}

fn check_subset(
    g: &Graph,
    ord: &VertexOrdering,
    r: u64,
    report: &mut SchemeReport,
) -> Result<Option<SchemeFailure>> {
    let verts: Vec<usize> = bits(r).collect();
    let local_edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| r >> e.lo() & 1 == 1 && r >> e.hi() & 1 == 1)
        .collect();
    let k = local_edges.len();
    if k > SCHEME_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "partition-scheme edge subsets",
            size: k,
            cap: SCHEME_EDGE_CAP,
        });
    }
    let spanning: Vec<bool> = (0u64..1 << k)
        .map(|m| connected_spanning(&local_edges, m, r))
        .collect();
    let mut cover = vec![0u32; 1 << k];
    let edge_pos = |e: &Edge| local_edges.binary_search(e).expect("local edge");
    for m in 0u64..1 << k {
        if m.count_ones() as usize != verts.len() - 1 || !spanning[m as usize] {
            continue;
        }
        report.spanning_trees += 1;
        let tree = RootedTreeView::new(g, ord, bits(m).map(|i| local_edges[i]))?;
        let closure = penrose_closure(g, ord, &tree)?;
        let pmask = mask_of(closure.iter().map(edge_pos));
        let extra = pmask & !m;
        // every E'' with τ ⊆ E'' ⊆ p(τ)
        let mut sub = extra;
        loop {
            cover[(m | sub) as usize] += 1;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & extra;
        }
    }
    for m in 0..1usize << k {
        let cs = spanning[m];
        if cs {
            report.connected_spanning_sets += 1;
        }
        if (cs && cover[m] != 1) || (!cs && cover[m] != 0) {
            return Ok(Some(SchemeFailure {
                subset: verts,
                edge_set: bits(m as u64).map(|i| local_edges[i]).collect(),
                cover_count: cover[m] as usize,
                connected_spanning: cs,
            }));
        }
    }
    Ok(None)
}

fn connected_spanning(edges: &[Edge], m: u64, r: u64) -> bool {
    let Some(start) = bits(r).next() else {
        return false;
    };
    let mut seen = 1u64 << start;
    loop {
        let before = seen;
        for i in bits(m) {
            let e = edges[i];
            let (a, b) = (1u64 << e.lo(), 1u64 << e.hi());
            if seen & a != 0 || seen & b != 0 {
                seen |= a | b;
            }
        }
        if seen == before {
            break;
        }
    }
    seen == r
}

// ---------------------------------------------------------------------------
// Two-branch obstructions

/// Ways a two-branch tree `F ∪ uS` can fail to be Penrose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Obstruction {
    /// (a) a cross edge joining equal depths.
    EqualDepth,
    /// (b) a cross edge between consecutive depths whose shallower endpoint
    /// comes after the deeper endpoint's father.
    FatherOrder,
    /// (c) an edge from `v2` to a child of `v1`.
    SecondRootToChildOfFirst,
}

impl Obstruction {
    pub fn letter(self) -> char {
        match self {
            Obstruction::EqualDepth => 'a',
            Obstruction::FatherOrder => 'b',
            Obstruction::SecondRootToChildOfFirst => 'c',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Penrose,
    /// Every violating cross edge with its classification.
    Violated(Vec<(Obstruction, Edge)>),
}

impl ObstructionVerdict {
    pub fn is_penrose(&self) -> bool {
        matches!(self, ObstructionVerdict::Penrose)
    }

    /// Distinct obstruction kinds, sorted a < b < c.
    pub fn kinds(&self) -> Vec<Obstruction> {
        match self {
            ObstructionVerdict::Penrose => Vec::new(),
            ObstructionVerdict::Violated(list) => {
                let set: BTreeSet<Obstruction> = list.iter().map(|(k, _)| *k).collect();
                set.into_iter().collect()
            }
        }
    }
}

/// The tree `F ∪ {uv1, uv2}`.
pub fn join_at(f: &Forest, u: usize, pair: (usize, usize)) -> BTreeSet<Edge> {
    let mut edges = f.edges().clone();
    edges.insert(Edge::new(u, pair.0));
    edges.insert(Edge::new(u, pair.1));
    edges
}

/// Classifies `F ∪ uS` for `S = {v1, v2}` by inspecting only the edges
/// between the two branches.
///
/// Requires `u ≺ v1 ≺ v2 ≺` everything else, `v1, v2` non-adjacent
/// neighbors of `u`, and `f` a Penrose forest of `G - u` with one component
/// through each of `v1`, `v2` (either may be trivial).
pub fn obstruction_check(
    g: &Graph,
    ord: &VertexOrdering,
    u: usize,
    pair: (usize, usize),
    f: &Forest,
) -> Result<ObstructionVerdict> {
    let (v1, v2) = pair;
    if ord.sequence().get(..3) != Some(&[u, v1, v2][..]) {
        return Err(Error::contract("ordering must start u, v1, v2"));
    }
    if !g.has_edge(u, v1) || !g.has_edge(u, v2) {
        return Err(Error::contract("v1 and v2 must be neighbors of u"));
    }
    if g.has_edge(v1, v2) {
        return Err(Error::contract("S = {v1, v2} must be independent"));
    }
    let comps = f.components();
    let mut branches = [
        RootedTreeView::trivial(g, v1),
        RootedTreeView::trivial(g, v2),
    ];
    for comp in comps {
        let t = RootedTreeView::new(g, ord, comp)?;
        let slot = match (t.contains(v1), t.contains(v2), t.contains(u)) {
            (_, _, true) => return Err(Error::contract("forest must avoid u")),
            (true, false, _) => 0,
            (false, true, _) => 1,
            _ => {
                return Err(Error::contract(
                    "each component must contain exactly one of v1, v2",
                ))
            }
        };
        if !is_penrose_tree(g, ord, &t)? {
            return Err(Error::contract("forest is not Penrose in G - u"));
        }
        branches[slot] = t;
    }
    let [t1, t2] = &branches;
    // depth in F ∪ uS is branch depth plus one; branch roots hang from u
    let depth = |t: &RootedTreeView, x: usize| t.depth(x).unwrap() + 1;
    let father = |t: &RootedTreeView, x: usize| t.father(x).unwrap_or(u);

    let mut found = Vec::new();
    for &x in t1.vertices() {
        for &y in t2.vertices() {
            if !g.has_edge(x, y) {
                continue;
            }
            let e = Edge::new(x, y);
            let (dx, dy) = (depth(t1, x), depth(t2, y));
            if dx == dy {
                found.push((Obstruction::EqualDepth, e));
            } else if y == v2 && father(t1, x) == v1 && dx == 2 {
                found.push((Obstruction::SecondRootToChildOfFirst, e));
            } else if (dx == dy + 1 && ord.precedes(father(t1, x), y))
                || (dy == dx + 1 && ord.precedes(father(t2, y), x))
            {
                found.push((Obstruction::FatherOrder, e));
            }
        }
    }
    Ok(if found.is_empty() {
        ObstructionVerdict::Penrose
    } else {
        ObstructionVerdict::Violated(found)
    })
}

/// All Penrose forests of `G - u` made of a tree through `v1` and a tree
/// through `v2` (either possibly trivial), assuming `u ≺ v1 ≺ v2 ≺` rest.
pub fn two_branch_forests(
    g: &Graph,
    ord: &VertexOrdering,
    u: usize,
    pair: (usize, usize),
) -> Vec<Forest> {
    let (v1, v2) = pair;
    let n = g.vertex_count();
    let nbr = neighbor_masks(g);
    let full = (1u64 << n) - 1;
    let base = full & !(1 << u);
    let mut firsts: Vec<(u64, Vec<Edge>)> = Vec::new();
    walk_trees(
        &nbr,
        ord,
        v1,
        base & !(1 << v1) & !(1 << v2),
        usize::MAX,
        |t| {
            firsts.push((t.vertex_mask, t.edges().collect()));
        },
    );
    let mut out = Vec::new();
    for (mask1, edges1) in firsts {
        let allowed = base & !mask1 & !(1 << v2);
        walk_trees(&nbr, ord, v2, allowed, usize::MAX, |t| {
            let mut edges: BTreeSet<Edge> = edges1.iter().copied().collect();
            edges.extend(t.edges());
            out.push(Forest { edges });
        });
    }
    out
}
