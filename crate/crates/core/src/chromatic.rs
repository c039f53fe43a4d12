//! Chromatic polynomials by deletion–contraction.
//!
//! Independent of the forest expansion: `P_G = P_{G-e} - P_{G/e}`, with
//! edgeless and complete graphs as base cases and isolated vertices factored
//! out as powers of `q`. Intermediate minors are memoized under a
//! refinement-invariant key; entries sharing a key are told apart by an
//! exact isomorphism search.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::SparsePolynomial;

/// Vertex and edge limits for [`chromatic_deletion_contraction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCap {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap {
            max_vertices: 16,
            max_edges: 40,
        }
    }
}

/// `P_G(q)` with the default [`OracleCap`].
pub fn chromatic_deletion_contraction(g: &Graph) -> Result<SparsePolynomial> {
    chromatic_deletion_contraction_capped(g, OracleCap::default())
}

pub fn chromatic_deletion_contraction_capped(
    g: &Graph,
    cap: OracleCap,
) -> Result<SparsePolynomial> {
    let n = g.vertex_count();
    if n > cap.max_vertices.min(32) {
        return Err(Error::CapExceeded {
            what: "deletion-contraction vertices",
            size: n,
            cap: cap.max_vertices.min(32),
        });
    }
    if g.edge_count() > cap.max_edges {
        return Err(Error::CapExceeded {
            what: "deletion-contraction edges",
            size: g.edge_count(),
            cap: cap.max_edges,
        });
    }
    let mini = Mini {
        adj: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect(),
    };
    let mut memo = Memo::default();
    Ok(memo.chromatic(mini))
}

/// `q (q-1) ... (q-n+1)`.
pub fn falling_factorial(n: usize) -> SparsePolynomial {
    (0..n).fold(SparsePolynomial::one(), |acc, k| {
        let factor = SparsePolynomial::from_coeffs(vec![-BigInt::from(k), BigInt::one()]);
        &acc * &factor
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Mini {
    adj: Vec<u32>,
}

impl Mini {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn delete(&self, u: usize, v: usize) -> Mini {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Mini { adj }
    }

    /// Merges `v` into `u` and drops `v`, shifting later labels down.
    fn contract(&self, u: usize, v: usize) -> Mini {
        let mut merged = self.adj.clone();
        merged[u] |= merged[v];
        merged[u] &= !(1 << u) & !(1 << v);
        for w in 0..self.n() {
            if merged[w] >> v & 1 == 1 {
                merged[w] &= !(1 << v);
                if w != u {
                    merged[w] |= 1 << u;
                }
            }
        }
        let squeeze = |m: u32| -> u32 {
            let low = m & ((1 << v) - 1);
            let high = m >> (v + 1);
            low | high << v
        };
        let adj = merged
            .iter()
            .enumerate()
            .filter(|&(w, _)| w != v)
            .map(|(_, &m)| squeeze(m))
            .collect();
        Mini { adj }
    }

    fn without_isolated(&self) -> (Mini, usize) {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.adj[v] != 0).collect();
        let isolated = self.n() - keep.len();
        if isolated == 0 {
            return (self.clone(), 0);
        }
        let mut pos = vec![0usize; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                (0..self.n())
                    .filter(|&w| self.adj[v] >> w & 1 == 1)
                    .fold(0u32, |m, w| m | 1 << pos[w])
            })
            .collect();
        (Mini { adj }, isolated)
    }

    /// Color refinement: iterated (own color, sorted neighbor colors)
    /// relabelling, seeded by degree, until the partition is stable.
    fn refined_colors(&self) -> Vec<u32> {
        let n = self.n();
        let mut colors: Vec<u32> = (0..n).map(|v| self.degree(v)).collect();
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<u32> = (0..n)
                        .filter(|&w| self.adj[v] >> w & 1 == 1)
                        .map(|w| colors[w])
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<u32> = sigs
                .iter()
                .map(|s| distinct.binary_search(s).unwrap() as u32)
                .collect();
            let classes = |c: &[u32]| {
                let mut v = c.to_vec();
                v.sort_unstable();
                v.dedup();
                v.len()
            };
            if classes(&next) == classes(&colors) {
                return next;
            }
            colors = next;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    n: usize,
    edges: usize,
    color_histogram: Vec<(u32, u32, u32)>, // (color, degree, multiplicity)
}

struct Entry {
    graph: Mini,
    colors: Vec<u32>,
    poly: SparsePolynomial,
}

#[derive(Default)]
struct Memo {
    table: HashMap<Key, Vec<Entry>>,
}

impl Memo {
    fn chromatic(&mut self, g: Mini) -> SparsePolynomial {
        let (core, isolated) = g.without_isolated();
        let base = self.chromatic_core(core);
        base.shift(isolated)
    }

    fn chromatic_core(&mut self, g: Mini) -> SparsePolynomial {
        let n = g.n();
        let m = g.edge_count();
        if m == 0 {
            return SparsePolynomial::monomial(BigInt::one(), n);
        }
        if m == n * (n - 1) / 2 {
            return falling_factorial(n);
        }
        let colors = g.refined_colors();
        let key = key_of(&g, &colors);
        if let Some(bucket) = self.table.get(&key) {
            for entry in bucket {
                if isomorphic(&g, &colors, &entry.graph, &entry.colors) {
                    return entry.poly.clone();
                }
            }
        }
        // branch on an edge at a vertex of maximum degree
        let u = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
        let v = g.adj[u].trailing_zeros() as usize;
        let deleted = self.chromatic(g.delete(u, v));
        let contracted = self.chromatic(g.contract(u, v));
        let poly = &deleted - &contracted;
        self.table.entry(key).or_default().push(Entry {
            graph: g,
            colors,
            poly: poly.clone(),
        });
        poly
    }
}

fn key_of(g: &Mini, colors: &[u32]) -> Key {
    let mut hist: HashMap<(u32, u32), u32> = HashMap::new();
    for v in 0..g.n() {
        *hist.entry((colors[v], g.degree(v))).or_default() += 1;
    }
    let mut color_histogram: Vec<(u32, u32, u32)> =
        hist.into_iter().map(|((c, d), k)| (c, d, k)).collect();
    color_histogram.sort_unstable();
    Key {
        n: g.n(),
        edges: g.edge_count(),
        color_histogram,
    }
}

/// Backtracking search for a color-preserving isomorphism `a -> b`.
fn isomorphic(a: &Mini, ca: &[u32], b: &Mini, cb: &[u32]) -> bool {
    let n = a.n();
    if n != b.n() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    fn extend(
        a: &Mini,
        ca: &[u32],
        b: &Mini,
        cb: &[u32],
        i: usize,
        map: &mut Vec<usize>,
        used: &mut u32,
    ) -> bool {
        if i == a.n() {
            return true;
        }
        for j in 0..b.n() {
            if *used >> j & 1 == 1 || ca[i] != cb[j] {
                continue;
            }
            let consistent = (0..i).all(|k| (a.adj[i] >> k & 1) == (b.adj[j] >> map[k] & 1));
            if !consistent {
                continue;
            }
            map[i] = j;
            *used |= 1 << j;
            if extend(a, ca, b, cb, i + 1, map, used) {
                return true;
            }
            *used &= !(1 << j);
        }
        false
    }
    extend(a, ca, b, cb, 0, &mut map, &mut used)
}
