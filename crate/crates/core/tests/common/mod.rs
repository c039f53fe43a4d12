#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use clawfree_zeros::graph::Graph;
use clawfree_zeros::poly::SparsePolynomial;

/// Counts, by size `1..=n_max`, the subtrees of the infinite `d`-ary tree
/// that contain the root and in which every vertex keeps no child, one
/// child, or one of the first `m` child pairs in lexicographic order.
/// Grows trees one leaf at a time; address sets are deduplicated.
pub fn admissible_subtree_counts(d: u8, m: usize, n_max: usize) -> Vec<u64> {
    let pairs: Vec<(u8, u8)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .take(m)
        .collect();
    assert_eq!(pairs.len(), m, "m exceeds the number of child pairs");
    let admissible = |tree: &BTreeSet<Vec<u8>>, parent: &[u8]| -> bool {
        let kids: Vec<u8> = (0..d)
            .filter(|&c| {
                let mut a = parent.to_vec();
                a.push(c);
                tree.contains(&a)
            })
            .collect();
        match kids.len() {
            0 | 1 => true,
            2 => pairs.contains(&(kids[0], kids[1])),
            _ => false,
        }
    };
    let mut level: HashSet<BTreeSet<Vec<u8>>> = HashSet::new();
    level.insert(BTreeSet::from([Vec::new()]));
    let mut counts = vec![1u64];
    for _ in 1..n_max {
        let mut next = HashSet::new();
        for tree in &level {
            for addr in tree {
                for c in 0..d {
                    let mut child = addr.clone();
                    child.push(c);
                    if tree.contains(&child) {
                        continue;
                    }
                    let mut grown = tree.clone();
                    grown.insert(child);
                    if admissible(&grown, addr) {
                        next.insert(grown);
                    }
                }
            }
        }
        counts.push(next.len() as u64);
        level = next;
    }
    counts
}

/// Counts `k`-edge subsets of `g`'s edges that are acyclic.
pub fn forest_counts(g: &Graph) -> Vec<u64> {
    let edges = g.edges();
    let mut counts = vec![0u64; g.vertex_count().max(1)];
    for mask in 0u64..1 << edges.len() {
        let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut ok = true;
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let (a, b) = (find(&mut parent, e.lo()), find(&mut parent, e.hi()));
            if a == b {
                ok = false;
                break;
            }
            parent[a] = b;
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

pub fn coeffs_i64(p: &SparsePolynomial) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c.clone()).expect("small coefficient"))
        .collect()
}

pub fn write_graph_file(dir: &std::path::Path, name: &str, g: &Graph) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, g.to_edge_list()).unwrap();
    path
}
