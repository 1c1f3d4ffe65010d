//! Slow, obviously-correct reference implementations used as test oracles.
//! Nothing here calls into the library's distance or monitoring code.

#![allow(dead_code)]

use std::collections::VecDeque;

use demkit::Graph;

pub const INF: usize = usize::MAX;

/// Adjacency lists rebuilt from the raw edge list, minus `skip`.
fn adjacency(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        if Some(k) != skip {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    adj
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut d = vec![INF; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if d[v] == INF {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g.order(), g.edges(), None);
    (0..g.order()).map(|s| bfs(&adj, s)).collect()
}

/// `table[x][e]`: whether removing edge `e` changes some distance from `x`,
/// recomputed from scratch for every pair.
pub fn monitor_table(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let full = adjacency(n, g.edges(), None);
    (0..n)
        .map(|x| {
            let base = bfs(&full, x);
            (0..g.size())
                .map(|e| bfs(&adjacency(n, g.edges(), Some(e)), x) != base)
                .collect()
        })
        .collect()
}

pub fn is_dem_set(table: &[Vec<bool>], set: u64) -> bool {
    let m = table.first().map_or(0, Vec::len);
    (0..m).all(|e| (0..table.len()).any(|x| set >> x & 1 == 1 && table[x][e]))
}

/// Minimum DEM set size and every minimum set, by trying all subsets.
pub fn dem_brute(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    assert!(g.order() <= 20, "brute force is exponential");
    let table = monitor_table(g);
    let mut best = usize::MAX;
    let mut sets = Vec::new();
    for s in 0u64..1 << g.order() {
        let size = s.count_ones() as usize;
        if size > best || !is_dem_set(&table, s) {
            continue;
        }
        if size < best {
            best = size;
            sets.clear();
        }
        sets.push((0..g.order()).filter(|&v| s >> v & 1 == 1).collect());
    }
    sets.sort();
    (best, sets)
}

pub fn vertex_cover_brute(g: &Graph) -> usize {
    assert!(g.order() <= 20, "brute force is exponential");
    (0u64..1 << g.order())
        .filter(|s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Distances from every source in `g` minus edge `e`.
pub fn distances_without(g: &Graph, e: usize) -> Vec<Vec<usize>> {
    let adj = adjacency(g.order(), g.edges(), Some(e));
    (0..g.order()).map(|s| bfs(&adj, s)).collect()
}
