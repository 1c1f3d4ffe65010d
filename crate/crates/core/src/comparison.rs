//! Brute-force metric dimension, edge metric dimension and strong metric
//! dimension, used as reference values next to `dem`.
//!
//! All three search subsets by increasing size in lexicographic order, so
//! the returned witness is the lexicographically smallest optimum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::monitoring::{self, DemOptions};

pub const DEFAULT_COMPARISON_CAP: usize = 12;

/// Parameter value together with one optimal set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub value: usize,
    pub witness: Vec<VertexId>,
}

/// Every pair of distinct vertices is told apart by some `s ∈ set`.
pub fn is_resolving(g: &Graph, set: &[VertexId]) -> bool {
    let d = g.all_pairs_distances();
    distinct_signatures(g.vertices().map(|v| set.iter().map(|&s| d.hops(v, s)).collect()))
}

/// Every pair of distinct edges is told apart, where the distance from
/// `s` to edge `uw` is `min(d(s,u), d(s,w))`.
pub fn is_edge_resolving(g: &Graph, set: &[VertexId]) -> bool {
    if set.is_empty() {
        return false;
    }
    let d = g.all_pairs_distances();
    distinct_signatures(
        g.edges()
            .iter()
            .map(|&(u, w)| set.iter().map(|&s| d.hops(u, s).min(d.hops(w, s))).collect()),
    )
}

/// Every pair `u, v` has `s ∈ set` with `v` on a shortest `u–s` path or
/// `u` on a shortest `v–s` path.
pub fn is_strong_resolving(g: &Graph, set: &[VertexId]) -> bool {
    let d = g.all_pairs_distances();
    let on_geodesic = |a: VertexId, b: VertexId, s: VertexId| d.hops(a, s) == d.hops(a, b) + d.hops(b, s);
    g.vertices().all(|u| {
        (u + 1..g.order()).all(|v| set.iter().any(|&s| on_geodesic(u, v, s) || on_geodesic(v, u, s)))
    })
}

fn distinct_signatures(sigs: impl Iterator<Item = Vec<u32>>) -> bool {
    let mut sigs: Vec<Vec<u32>> = sigs.collect();
    sigs.sort_unstable();
    sigs.windows(2).all(|w| w[0] != w[1])
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns true; returns that subset.
fn first_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let i = (0..k).rev().find(|&i| idx[i] < n - k + i)?;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn smallest(
    g: &Graph,
    cap: usize,
    what: &'static str,
    min_size: usize,
    pred: impl Fn(&Graph, &[VertexId]) -> bool,
) -> Result<Dimension> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what,
            n: g.order(),
            cap,
        });
    }
    (min_size..=g.order())
        .find_map(|k| first_subset(g.order(), k, |s| pred(g, s)))
        .map(|witness| Dimension {
            value: witness.len(),
            witness,
        })
        .ok_or(Error::EmptyGraph)
}

pub fn metric_dimension(g: &Graph, cap: usize) -> Result<Dimension> {
    smallest(g, cap, "metric dimension", 0, is_resolving)
}

pub fn edge_metric_dimension(g: &Graph, cap: usize) -> Result<Dimension> {
    smallest(g, cap, "edge metric dimension", 1, is_edge_resolving)
}

pub fn strong_metric_dimension(g: &Graph, cap: usize) -> Result<Dimension> {
    smallest(g, cap, "strong metric dimension", 0, is_strong_resolving)
}

/// One row of the comparison table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub dem: Dimension,
    pub dim: Dimension,
    pub edim: Dimension,
    pub dim_s: Dimension,
}

impl ComparisonReport {
    pub const CSV_HEADER: &'static str = "graph,n,m,dem,dim,edim,dim_s";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.graph.replace(',', ";"),
            self.n,
            self.m,
            self.dem.value,
            self.dim.value,
            self.edim.value,
            self.dim_s.value
        )
    }
}

pub fn compare(g: &Graph, name: &str, dem_opts: &DemOptions, cap: usize) -> Result<ComparisonReport> {
    let dem = monitoring::dem_number(g, dem_opts)?;
    Ok(ComparisonReport {
        graph: name.to_string(),
        n: g.order(),
        m: g.size(),
        dem: Dimension {
            value: dem.dem,
            witness: dem.witness,
        },
        dim: metric_dimension(g, cap)?,
        edim: edge_metric_dimension(g, cap)?,
        dim_s: strong_metric_dimension(g, cap)?,
    })
}
