//! Immutable simple connected graphs with hop distances.
//!
//! Vertices are the dense ids `0..n`. Edges are stored once, normalized to
//! `(min, max)` and sorted, so an [`EdgeId`] is the index of an edge in that
//! canonical order and is stable across runs.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Sentinel for "unreachable" in the raw `u32` distance buffers.
pub(crate) const UNREACHABLE: u32 = u32::MAX;

/// A hop count, or `Infinite` when the target is unreachable.
///
/// `Infinite` only arises in graphs with an edge removed; it orders after
/// every finite value and is unequal to all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub(crate) fn from_raw(raw: u32) -> Self {
        if raw == UNREACHABLE {
            Distance::Infinite
        } else {
            Distance::Finite(raw)
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Row-major `n × n` table of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Distance {
        Distance::from_raw(self.d[u * self.n + v])
    }

    /// Finite distance; every entry is finite because graphs are connected.
    pub fn hops(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    /// Sorted by neighbor id.
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    labels: Option<Vec<String>>,
    distances: OnceLock<DistanceMatrix>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `0..n`. Duplicate edges (in either orientation)
    /// collapse to one; loops and disconnected inputs are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (line, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge {
                    line: line + 1,
                    vertex: u,
                });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();

        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }

        let g = Graph {
            n,
            edges: list,
            adj,
            labels: None,
            distances: OnceLock::new(),
        };
        g.check_connected()?;
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn check_connected(&self) -> Result<()> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        self.bfs_into(0, None, &mut dist, &mut queue);
        match dist.iter().position(|&d| d == UNREACHABLE) {
            Some(b) => Err(Error::Disconnected { a: 0, b }),
            None => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// Edges in canonical order; the position is the [`EdgeId`].
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let nbrs = self.adj.get(u)?;
        nbrs.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| nbrs[i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors paired with the id of the connecting edge.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    /// BFS from `source`, ignoring edge `removed`, into a caller-owned buffer.
    pub(crate) fn bfs_into(
        &self,
        source: VertexId,
        removed: Option<EdgeId>,
        dist: &mut [u32],
        queue: &mut VecDeque<VertexId>,
    ) {
        dist.fill(UNREACHABLE);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &(w, e) in &self.adj[u] {
                if Some(e) == removed || dist[w] != UNREACHABLE {
                    continue;
                }
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }

    /// Single-source distances in `g`, or in `g − removed` when given.
    pub fn distances_from(&self, source: VertexId, removed: Option<EdgeId>) -> Vec<Distance> {
        let mut dist = vec![UNREACHABLE; self.n];
        self.bfs_into(source, removed, &mut dist, &mut VecDeque::new());
        dist.into_iter().map(Distance::from_raw).collect()
    }

    /// All-pairs distances, computed once and cached.
    pub fn all_pairs_distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| {
            let n = self.n;
            let mut d = vec![UNREACHABLE; n * n];
            let mut queue = VecDeque::new();
            for (s, row) in d.chunks_mut(n).enumerate() {
                self.bfs_into(s, None, row, &mut queue);
            }
            DistanceMatrix { n, d }
        })
    }

    pub fn eccentricity(&self, v: VertexId) -> u32 {
        self.all_pairs_distances()
            .row(v)
            .iter()
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        self.vertices()
            .map(|v| self.eccentricity(v))
            .min()
            .unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.vertices()
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(0)
    }

    /// Connected graphs are trees exactly when `|E| = n − 1`.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Repeatedly strips degree-1 vertices. Returns `None` for trees, which
    /// strip away entirely. Surviving vertices keep their labels (or get
    /// their original id as label when `self` is unlabeled).
    pub fn base_graph(&self) -> Option<Graph> {
        if self.is_tree() {
            return None;
        }
        let mut degree: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.n];
        let mut leaves: Vec<VertexId> = self.vertices().filter(|&v| degree[v] == 1).collect();
        while let Some(v) = leaves.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for w in self.neighbors(v) {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push(w);
                    }
                }
            }
        }

        let kept: Vec<VertexId> = self.vertices().filter(|&v| alive[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| alive[u] && alive[v])
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let labels = kept.iter().map(|&v| self.label(v)).collect();
        let base = Graph::new(kept.len(), edges).expect("a non-tree keeps its cycles connected");
        Some(base.with_labels(labels).expect("one label per kept vertex"))
    }

    /// Edge-list text: one `u v` line per edge, in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses `u v` lines; blank lines and lines starting with `#` are skipped.
/// Vertex set is `0..=max id`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut ids = [0usize; 2];
        let mut tokens = body.split_whitespace();
        for slot in &mut ids {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line,
                token: String::new(),
            })?;
            *slot = token.parse().map_err(|_| Error::Parse {
                line,
                token: token.to_string(),
            })?;
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line,
                token: extra.to_string(),
            });
        }
        let [u, v] = ids;
        if u == v {
            return Err(Error::LoopEdge { line, vertex: u });
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = max_id.map(|m| m + 1).ok_or(Error::EmptyGraph)?;
    Graph::new(n, edges)
}
