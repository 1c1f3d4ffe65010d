//! Distance-edge-monitoring.
//!
//! A probe `x` monitors an edge `e` when removing `e` changes the distance
//! from `x` to some vertex `y` (a bridge makes `y` unreachable, which also
//! counts as a change). A set of probes is a DEM set when every edge is
//! monitored by one of them; `dem(G)` is the smallest size of such a set.
//!
//! DEM sets are exactly the hitting sets of the per-edge monitor lists, so
//! the exact solver is the branch and bound of [`crate::hitting`] run on the
//! columns of the [`MonitorMatrix`].

use std::collections::VecDeque;

use serde::Serialize;

use crate::cover;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{EdgeId, Graph, VertexId, UNREACHABLE};
use crate::hitting::{BranchRule, HittingSet};
use crate::vset::{VertexSet, MAX_BITSET_VERTICES};

pub const DEFAULT_MAX_N: usize = 24;
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

/// Reusable BFS buffers.
struct Scratch {
    base: Vec<u32>,
    cut: Vec<u32>,
    queue: VecDeque<VertexId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            base: vec![UNREACHABLE; n],
            cut: vec![UNREACHABLE; n],
            queue: VecDeque::with_capacity(n),
        }
    }
}

/// Edges monitored by `x`, as a bitset over edge ids.
///
/// Only edges `uv` with `|d(x,u) − d(x,v)| = 1` lie on a shortest path from
/// `x`; any other edge can be deleted without changing a distance from `x`.
/// For each candidate the BFS is rerun on `g − e` and the rows compared.
fn em_row(g: &Graph, x: VertexId, scratch: &mut Scratch) -> Vec<u64> {
    let mut row = vec![0u64; g.size().div_ceil(64)];
    g.bfs_into(x, None, &mut scratch.base, &mut scratch.queue);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if scratch.base[u].abs_diff(scratch.base[v]) != 1 {
            continue;
        }
        g.bfs_into(x, Some(e), &mut scratch.cut, &mut scratch.queue);
        if scratch.base != scratch.cut {
            row[e / 64] |= 1 << (e % 64);
        }
    }
    row
}

fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// `EM(x)`: the edges monitored by probe `x`, in increasing id order.
pub fn monitored_edges(g: &Graph, x: VertexId) -> Result<Vec<EdgeId>> {
    g.check_vertex(x)?;
    let row = em_row(g, x, &mut Scratch::new(g.order()));
    Ok(bits(&row).collect())
}

/// `P(M, e)`: pairs `(x, y)` with `x ∈ probes` whose distance changes when
/// `e` is removed. Sorted, without duplicates.
pub fn monitored_pairs(g: &Graph, probes: &[VertexId], e: EdgeId) -> Result<Vec<(VertexId, VertexId)>> {
    g.check_edge(e)?;
    let mut xs = probes.to_vec();
    for &x in &xs {
        g.check_vertex(x)?;
    }
    xs.sort_unstable();
    xs.dedup();
    let mut scratch = Scratch::new(g.order());
    let mut pairs = Vec::new();
    for x in xs {
        g.bfs_into(x, None, &mut scratch.base, &mut scratch.queue);
        g.bfs_into(x, Some(e), &mut scratch.cut, &mut scratch.queue);
        pairs.extend(
            g.vertices()
                .filter(|&y| scratch.base[y] != scratch.cut[y])
                .map(|y| (x, y)),
        );
    }
    Ok(pairs)
}

/// The relation "probe `x` monitors edge `e`" over `V × E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonitorMatrix {
    n: usize,
    m: usize,
    rows: Vec<Vec<u64>>,
    columns: Vec<VertexSet>,
}

impl MonitorMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::build(g, Execution::default())
    }

    /// Rows are independent and are computed under `exec`.
    pub fn build(g: &Graph, exec: Execution) -> Result<Self> {
        if g.order() > MAX_BITSET_VERTICES {
            return Err(Error::CapExceeded {
                what: "monitor matrix",
                n: g.order(),
                cap: MAX_BITSET_VERTICES,
            });
        }
        let rows = em_rows(g, exec);
        let mut columns = vec![VertexSet::EMPTY; g.size()];
        for (x, row) in rows.iter().enumerate() {
            for e in bits(row) {
                columns[e].insert(x);
            }
        }
        Ok(MonitorMatrix {
            n: g.order(),
            m: g.size(),
            rows,
            columns,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn monitors(&self, x: VertexId, e: EdgeId) -> bool {
        self.rows[x][e / 64] >> (e % 64) & 1 == 1
    }

    /// `EM(x)` as edge ids.
    pub fn row(&self, x: VertexId) -> Vec<EdgeId> {
        bits(&self.rows[x]).collect()
    }

    /// Probes that monitor `e`.
    pub fn column(&self, e: EdgeId) -> VertexSet {
        self.columns[e]
    }

    pub fn columns(&self) -> &[VertexSet] {
        &self.columns
    }

    pub fn is_dem_set(&self, probes: VertexSet) -> bool {
        self.columns.iter().all(|c| !c.is_disjoint(probes))
    }
}

fn em_rows(g: &Graph, exec: Execution) -> Vec<Vec<u64>> {
    exec.map_range(g.order(), |x| em_row(g, x, &mut Scratch::new(g.order())))
}

pub fn monitor_matrix(g: &Graph) -> Result<MonitorMatrix> {
    MonitorMatrix::new(g)
}

pub fn is_dem_set(g: &Graph, probes: &[VertexId]) -> Result<bool> {
    for &x in probes {
        g.check_vertex(x)?;
    }
    let matrix = MonitorMatrix::new(g)?;
    Ok(matrix.is_dem_set(probes.iter().copied().collect()))
}

/// Greedy set cover: repeatedly take the probe monitoring the most
/// still-unmonitored edges, lowest id on ties.
pub fn greedy_dem(g: &Graph) -> Vec<VertexId> {
    greedy_dem_with(g, Execution::default())
}

pub fn greedy_dem_with(g: &Graph, exec: Execution) -> Vec<VertexId> {
    let rows = em_rows(g, exec);
    let mut uncovered = vec![u64::MAX; g.size().div_ceil(64)];
    if !g.size().is_multiple_of(64) {
        *uncovered.last_mut().unwrap() = (1 << (g.size() % 64)) - 1;
    }
    let gain = |row: &[u64], unc: &[u64]| -> u32 {
        row.iter().zip(unc).map(|(a, b)| (a & b).count_ones()).sum()
    };
    let mut chosen = Vec::new();
    while uncovered.iter().any(|&w| w != 0) {
        let best = g
            .vertices()
            .max_by_key(|&x| (gain(&rows[x], &uncovered), std::cmp::Reverse(x)))
            .expect("a graph with edges has vertices");
        for (u, r) in uncovered.iter_mut().zip(&rows[best]) {
            *u &= !r;
        }
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DemOptions {
    pub enumerate_all: bool,
    pub max_n: usize,
    pub enumeration_cap: usize,
    pub execution: Execution,
}

impl Default for DemOptions {
    fn default() -> Self {
        DemOptions {
            enumerate_all: false,
            max_n: DEFAULT_MAX_N,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            execution: Execution::default(),
        }
    }
}

impl DemOptions {
    pub fn enumerating() -> Self {
        DemOptions {
            enumerate_all: true,
            ..Self::default()
        }
    }

    pub fn with_max_n(self, max_n: usize) -> Self {
        DemOptions { max_n, ..self }
    }
}

/// Exact `dem(G)` with a witness. Serializes to the report JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemResult {
    pub n: usize,
    pub m: usize,
    pub dem: usize,
    /// Lexicographically smallest minimum DEM set.
    pub witness: Vec<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimum_sets: Option<Vec<Vec<VertexId>>>,
    pub nodes_explored: u64,
}

impl DemResult {
    /// Number of minimum DEM sets, when they were enumerated.
    pub fn minimum_set_count(&self) -> Option<usize> {
        self.all_minimum_sets.as_ref().map(Vec::len)
    }
}

pub fn dem_number(g: &Graph, opts: &DemOptions) -> Result<DemResult> {
    let cap = opts.max_n.min(MAX_BITSET_VERTICES);
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "dem solver",
            n: g.order(),
            cap,
        });
    }
    let matrix = MonitorMatrix::build(g, opts.execution)?;
    let mut incumbent: VertexSet = greedy_dem_with(g, opts.execution).into_iter().collect();
    if let Ok(vc) = cover::vertex_cover_number_capped(g, cap) {
        if vc.value < incumbent.len() {
            incumbent = vc.witness.into_iter().collect();
        }
    }
    debug_assert!(matrix.is_dem_set(incumbent));

    let mut hs = HittingSet::new(g.order(), matrix.columns().iter().copied(), BranchRule::FewestCandidates);
    let dem = hs.minimum(Some(incumbent)).expect("endpoints monitor their own edge").len();
    let witness = hs
        .lexicographic_minimum(dem)
        .expect("a DEM set of minimum size exists");
    let all_minimum_sets = if opts.enumerate_all {
        let sets = hs
            .enumerate(dem, opts.enumeration_cap)
            .map_err(|cap| Error::EnumerationCapExceeded { cap })?;
        Some(sets.into_iter().map(VertexSet::to_vec).collect())
    } else {
        None
    };
    Ok(DemResult {
        n: g.order(),
        m: g.size(),
        dem,
        witness: witness.to_vec(),
        all_minimum_sets,
        nodes_explored: hs.nodes_explored(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::{self, *};

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn edge(g: &Graph, u: usize, v: usize) -> EdgeId {
        g.edge_id(u, v).unwrap()
    }

    #[test]
    fn monitored_pairs_examples() {
        let p3 = gen(Path(3));
        assert_eq!(monitored_pairs(&p3, &[0], edge(&p3, 1, 2)).unwrap(), vec![(0, 2)]);
        assert_eq!(
            monitored_pairs(&p3, &[0], edge(&p3, 0, 1)).unwrap(),
            vec![(0, 1), (0, 2)]
        );
        let c4 = gen(Cycle(4));
        assert!(monitored_pairs(&c4, &[0], edge(&c4, 1, 2)).unwrap().is_empty());
        assert!(monitored_pairs(&c4, &[0], 9).is_err());
        assert!(monitored_pairs(&c4, &[4], 0).is_err());
    }

    #[test]
    fn monitored_edges_examples() {
        let p3 = gen(Path(3));
        assert_eq!(monitored_edges(&p3, 0).unwrap(), vec![0, 1]);
        let c4 = gen(Cycle(4));
        assert_eq!(
            monitored_edges(&c4, 0).unwrap(),
            vec![edge(&c4, 0, 1), edge(&c4, 0, 3)]
        );
        let k4 = gen(Complete(4));
        assert_eq!(monitored_edges(&k4, 0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn monitor_matrix_examples() {
        let p3 = monitor_matrix(&gen(Path(3))).unwrap();
        for x in 0..3 {
            assert_eq!(p3.row(x), vec![0, 1]);
        }
        let c4 = gen(Cycle(4));
        let mm = monitor_matrix(&c4).unwrap();
        for x in 0..4 {
            let incident: Vec<_> = c4.incident(x).iter().map(|&(_, e)| e).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
            assert_eq!(mm.row(x), incident);
        }
        let b2 = gen(Book(2));
        let mm = monitor_matrix(&b2).unwrap();
        let spine = VertexSet::from_iter([0, 1]);
        assert!((0..b2.size()).all(|e| !mm.column(e).is_disjoint(spine)));
    }

    #[test]
    fn endpoints_monitor_their_edge() {
        for spec in [Cycle(6), Book(3), Hypercube(3), Complete(5)] {
            let g = gen(spec);
            let mm = monitor_matrix(&g).unwrap();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                assert!(mm.monitors(u, e) && mm.monitors(v, e));
            }
        }
    }

    #[test]
    fn is_dem_set_examples() {
        let t = gen(RandomTree { n: 9, seed: 4 });
        for x in t.vertices() {
            assert!(is_dem_set(&t, &[x]).unwrap());
        }
        assert!(is_dem_set(&gen(Cycle(4)), &[0, 2]).unwrap());
        assert!(!is_dem_set(&gen(Book(3)), &[0, 2]).unwrap());
        assert!(is_dem_set(&gen(Cycle(4)), &[9]).is_err());
    }

    #[test]
    fn dem_number_examples() {
        let dem = |spec| dem_number(&gen(spec), &DemOptions::default()).unwrap().dem;
        assert_eq!(dem(Complete(5)), 4);
        assert_eq!(dem(Cycle(6)), 2);
        assert_eq!(dem(CompleteBipartite(3, 4)), 3);
        let b4 = dem_number(&gen(Book(4)), &DemOptions::enumerating()).unwrap();
        assert_eq!(b4.dem, 2);
        assert_eq!(b4.witness, vec![0, 1]);
        assert_eq!(b4.all_minimum_sets, Some(vec![vec![0, 1]]));
    }

    #[test]
    fn dem_caps() {
        let g = gen(Path(30));
        assert!(matches!(
            dem_number(&g, &DemOptions::default()),
            Err(Error::CapExceeded { n: 30, cap: 24, .. })
        ));
        assert_eq!(dem_number(&g, &DemOptions::default().with_max_n(30)).unwrap().dem, 1);
        let opts = DemOptions {
            enumeration_cap: 3,
            ..DemOptions::enumerating()
        };
        assert_eq!(
            dem_number(&gen(Path(5)), &opts),
            Err(Error::EnumerationCapExceeded { cap: 3 })
        );
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_dem(&gen(RandomTree { n: 10, seed: 1 })).len(), 1);
        assert_eq!(greedy_dem(&gen(Complete(4))), vec![0, 1, 2]);
        assert_eq!(greedy_dem(&gen(Cycle(4))), vec![0, 2]);
    }

    #[test]
    fn single_vertex_has_dem_zero() {
        let r = dem_number(&gen(Complete(1)), &DemOptions::enumerating()).unwrap();
        assert_eq!(r.dem, 0);
        assert_eq!(r.all_minimum_sets, Some(vec![vec![]]));
    }

    #[test]
    fn json_shape() {
        let r = dem_number(&gen(Book(4)), &DemOptions::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["n"], 6);
        assert_eq!(v["m"], 9);
        assert_eq!(v["dem"], 2);
        assert_eq!(v["witness"], serde_json::json!([0, 1]));
        assert!(v.get("all_minimum_sets").is_none());
        assert!(v["nodes_explored"].is_u64());
    }

    #[test]
    fn execution_strategies_agree() {
        let g = gen(Hypercube(4));
        assert_eq!(
            MonitorMatrix::build(&g, Execution::Sequential).unwrap(),
            MonitorMatrix::build(&g, Execution::Parallel).unwrap()
        );
    }
}
