#![allow(dead_code)]

pub mod diagrams;
pub mod posets;
pub mod weyl;

use std::collections::{BTreeMap, VecDeque};

use latpuzzle_core::{ColoredDigraph, Vertex};

/// Undirected hop distances from `source`, ignoring colors.
pub fn bfs_from<V: Vertex>(g: &ColoredDigraph<V>, source: usize) -> Vec<u32> {
    let mut adj = vec![Vec::new(); g.len()];
    for e in g.edges() {
        adj[e.source].push(e.target);
        adj[e.target].push(e.source);
    }
    let mut dist = vec![u32::MAX; g.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Number of vertices at each rank, with rank taken as BFS distance from the unique source.
pub fn rank_counts<V: Vertex>(g: &ColoredDigraph<V>) -> Vec<u64> {
    let src: Vec<usize> = (0..g.len()).filter(|&v| g.in_edges(v).is_empty()).collect();
    assert_eq!(src.len(), 1, "expected a unique minimum");
    let d = bfs_from(g, src[0]);
    let mut out = vec![0u64; *d.iter().max().unwrap() as usize + 1];
    for r in d {
        out[r as usize] += 1;
    }
    out
}

pub fn symmetric_unimodal(c: &[u64]) -> bool {
    let sym = c.iter().eq(c.iter().rev());
    let peak = c.iter().enumerate().max_by_key(|&(_, v)| *v).map(|(i, _)| i).unwrap_or(0);
    sym && c[..=peak].windows(2).all(|w| w[0] <= w[1]) && c[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// Labeled edge multiset, for comparing digraphs edge-for-edge.
pub fn edge_set<V: Vertex>(g: &ColoredDigraph<V>) -> BTreeMap<(V, V), u32> {
    g.labeled_edges().into_iter().map(|(s, t, c)| ((s, t), c)).collect()
}

pub fn binom(m: u64, k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * (m - i) / (i + 1))
}
