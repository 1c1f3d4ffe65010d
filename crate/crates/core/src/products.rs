//! Join, corona, cluster (rooted product) and Cartesian product.
//!
//! Each constructor returns the product graph together with a
//! [`ProductVertexMap`] that records where every product vertex came from.
//! Id conventions:
//!
//! * join: `g` keeps ids `0..m`, `h` vertex `j` becomes `m + j`;
//! * corona: `g` keeps ids `0..m`, vertex `j` of copy `i` is `m + i·n + j`;
//! * cluster: vertex `j` of copy `i` is `i·n + j`, and the root of copy `i`
//!   stands for vertex `i` of `g`;
//! * Cartesian: `(u_i, v_j)` is `i·n + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOp {
    Join,
    Corona,
    Cluster,
    Cartesian,
}

impl ProductOp {
    pub fn name(self) -> &'static str {
        match self {
            ProductOp::Join => "join",
            ProductOp::Corona => "corona",
            ProductOp::Cluster => "cluster",
            ProductOp::Cartesian => "cartesian",
        }
    }
}

impl fmt::Display for ProductOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a product vertex comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Vertex of the single copy of `g`.
    G(VertexId),
    /// Vertex of the single copy of `h` (join only).
    H(VertexId),
    /// Vertex `vertex` of the `copy`-th copy of `h`.
    Copy { copy: usize, vertex: VertexId },
    /// Cartesian pair `(u_i, v_j)`.
    Pair(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductVertexMap {
    op: ProductOp,
    m: usize,
    n: usize,
    root: Option<VertexId>,
    origins: Vec<Origin>,
}

impl ProductVertexMap {
    pub fn op(&self) -> ProductOp {
        self.op
    }

    /// Orders of the left and right factors.
    pub fn factor_orders(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    pub fn len(&self) -> usize {
        self.origins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origins.is_empty()
    }

    pub fn origin(&self, id: VertexId) -> Origin {
        self.origins[id]
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    /// Inverse of [`origin`](Self::origin).
    pub fn id_of(&self, origin: Origin) -> Option<VertexId> {
        let (m, n) = (self.m, self.n);
        let id = match (self.op, origin) {
            (ProductOp::Join, Origin::G(i)) if i < m => i,
            (ProductOp::Join, Origin::H(j)) if j < n => m + j,
            (ProductOp::Corona, Origin::G(i)) if i < m => i,
            (ProductOp::Corona, Origin::Copy { copy, vertex }) if copy < m && vertex < n => {
                m + copy * n + vertex
            }
            (ProductOp::Cluster, Origin::Copy { copy, vertex }) if copy < m && vertex < n => {
                copy * n + vertex
            }
            (ProductOp::Cartesian, Origin::Pair(i, j)) if i < m && j < n => i * n + j,
            _ => return None,
        };
        Some(id)
    }

    /// The product vertex that plays the role of vertex `i` of `g`.
    pub fn g_vertex(&self, i: VertexId) -> Option<VertexId> {
        match self.op {
            ProductOp::Cluster => self.id_of(Origin::Copy {
                copy: i,
                vertex: self.root?,
            }),
            ProductOp::Cartesian => None,
            _ => self.id_of(Origin::G(i)),
        }
    }

    /// Ids of the `i`-th copy of `h` (corona, cluster), or of the layer
    /// `H_i = {(u_i, v_j)}` (Cartesian).
    pub fn h_copy(&self, i: usize) -> Vec<VertexId> {
        match self.op {
            ProductOp::Corona | ProductOp::Cluster => (0..self.n)
                .filter_map(|j| self.id_of(Origin::Copy { copy: i, vertex: j }))
                .collect(),
            ProductOp::Cartesian => self.h_layer(i),
            ProductOp::Join => (0..self.n).map(|j| self.m + j).collect(),
        }
    }

    /// Cartesian layer `H_i`: all `(u_i, v_j)`, ordered by `j`.
    pub fn h_layer(&self, i: VertexId) -> Vec<VertexId> {
        assert_eq!(self.op, ProductOp::Cartesian, "layers exist only in Cartesian products");
        (0..self.n).map(|j| i * self.n + j).collect()
    }

    /// Cartesian layer `G_j`: all `(u_i, v_j)`, ordered by `i`.
    pub fn g_layer(&self, j: VertexId) -> Vec<VertexId> {
        assert_eq!(self.op, ProductOp::Cartesian, "layers exist only in Cartesian products");
        (0..self.m).map(|i| i * self.n + j).collect()
    }
}

pub fn join(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let (m, n) = (g.order(), h.order());
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(a, b)| (m + a, m + b)))
        .chain((0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))));
    let graph = Graph::new(m + n, edges).expect("join of connected graphs is connected");
    let origins = (0..m).map(Origin::G).chain((0..n).map(Origin::H)).collect();
    let map = ProductVertexMap {
        op: ProductOp::Join,
        m,
        n,
        root: None,
        origins,
    };
    (graph, map)
}

pub fn corona(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let (m, n) = (g.order(), h.order());
    let copy_id = |i: usize, j: usize| m + i * n + j;
    let mut edges = g.edges().to_vec();
    for i in 0..m {
        edges.extend(h.edges().iter().map(|&(a, b)| (copy_id(i, a), copy_id(i, b))));
        edges.extend((0..n).map(|j| (i, copy_id(i, j))));
    }
    let graph = Graph::new(m * (n + 1), edges).expect("corona of connected graphs is connected");
    let origins = (0..m)
        .map(Origin::G)
        .chain((0..m).flat_map(|copy| (0..n).map(move |vertex| Origin::Copy { copy, vertex })))
        .collect();
    let map = ProductVertexMap {
        op: ProductOp::Corona,
        m,
        n,
        root: None,
        origins,
    };
    (graph, map)
}

/// Rooted product; `root` defaults to vertex 0 of `h`.
pub fn cluster(g: &Graph, h: &Graph, root: Option<VertexId>) -> Result<(Graph, ProductVertexMap)> {
    let (m, n) = (g.order(), h.order());
    let root = root.unwrap_or(0);
    if root >= n {
        return Err(Error::InvalidRoot { root, n });
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut edges: Vec<_> = g.edges().iter().map(|&(a, b)| (id(a, root), id(b, root))).collect();
    for i in 0..m {
        edges.extend(h.edges().iter().map(|&(a, b)| (id(i, a), id(i, b))));
    }
    let graph = Graph::new(m * n, edges).expect("cluster of connected graphs is connected");
    let origins = (0..m)
        .flat_map(|copy| (0..n).map(move |vertex| Origin::Copy { copy, vertex }))
        .collect();
    let map = ProductVertexMap {
        op: ProductOp::Cluster,
        m,
        n,
        root: Some(root),
        origins,
    };
    Ok((graph, map))
}

pub fn cartesian(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let (m, n) = (g.order(), h.order());
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::with_capacity(m * h.size() + n * g.size());
    for i in 0..m {
        edges.extend(h.edges().iter().map(|&(a, b)| (id(i, a), id(i, b))));
    }
    for j in 0..n {
        edges.extend(g.edges().iter().map(|&(a, b)| (id(a, j), id(b, j))));
    }
    let graph = Graph::new(m * n, edges).expect("Cartesian product of connected graphs is connected");
    let origins = (0..m)
        .flat_map(|i| (0..n).map(move |j| Origin::Pair(i, j)))
        .collect();
    let map = ProductVertexMap {
        op: ProductOp::Cartesian,
        m,
        n,
        root: None,
        origins,
    };
    (graph, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::*;

    fn gen(spec: crate::families::FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn join_examples() {
        let (k4, _) = join(&gen(Path(2)), &gen(Path(2)));
        assert_eq!(k4, gen(Complete(4)));

        let (wheel, map) = join(&gen(Complete(1)), &gen(Cycle(4)));
        assert_eq!((wheel.order(), wheel.size()), (5, 8));
        assert_eq!(wheel.degree(map.id_of(Origin::G(0)).unwrap()), 4);

        let (g, _) = join(&gen(Path(3)), &gen(Path(3)));
        assert_eq!((g.order(), g.size()), (6, 13));
        assert!(g.diameter() <= 2);
    }

    #[test]
    fn corona_examples() {
        let (p4, _) = corona(&gen(Path(2)), &gen(Complete(1)));
        assert_eq!((p4.order(), p4.size()), (4, 3));
        assert!(p4.is_tree());
        assert_eq!(p4.diameter(), 3);

        let (g, map) = corona(&gen(Path(3)), &gen(Complete(2)));
        assert_eq!((g.order(), g.size()), (9, 11));
        for i in 0..3 {
            let u = map.g_vertex(i).unwrap();
            for w in map.h_copy(i) {
                assert!(g.has_edge(u, w));
            }
        }

        let (g, _) = corona(&gen(Complete(2)), &gen(Path(2)));
        assert_eq!((g.order(), g.size()), (6, 7));
    }

    #[test]
    fn cluster_examples() {
        let (g, _) = cluster(&gen(Cycle(4)), &gen(Path(2)), None).unwrap();
        assert_eq!((g.order(), g.size()), (8, 8));
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), 4);

        let (g, _) = cluster(&gen(Complete(2)), &gen(Cycle(3)), Some(2)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));

        let (g, map) = cluster(&gen(Path(2)), &gen(Path(3)), Some(1)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 5));
        assert!(g.is_tree());
        assert_eq!(g.degree(map.g_vertex(0).unwrap()), 3);

        assert_eq!(
            cluster(&gen(Path(2)), &gen(Path(3)), Some(3)).unwrap_err(),
            Error::InvalidRoot { root: 3, n: 3 }
        );
    }

    #[test]
    fn cartesian_examples() {
        let (c4, _) = cartesian(&gen(Path(2)), &gen(Path(2)));
        assert_eq!(c4.order(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));

        let (grid, _) = cartesian(&gen(Path(2)), &gen(Path(3)));
        assert_eq!((grid.order(), grid.size()), (6, 7));

        let (prism, _) = cartesian(&gen(Complete(2)), &gen(Complete(3)));
        assert_eq!((prism.order(), prism.size()), (6, 9));
    }

    #[test]
    fn origin_map_is_bijective() {
        let g = gen(Path(3));
        let h = gen(Cycle(4));
        let products = [
            join(&g, &h),
            corona(&g, &h),
            cluster(&g, &h, Some(2)).unwrap(),
            cartesian(&g, &h),
        ];
        for (graph, map) in &products {
            assert_eq!(map.len(), graph.order());
            for id in graph.vertices() {
                assert_eq!(map.id_of(map.origin(id)), Some(id), "{:?}", map.op());
            }
        }
    }

    #[test]
    fn cartesian_layers_match_factors() {
        let g = gen(Book(2));
        let h = gen(Cycle(5));
        let (p, map) = cartesian(&g, &h);
        for j in 0..h.order() {
            let layer = map.g_layer(j);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(g.has_edge(a, b), p.has_edge(layer[a], layer[b]));
                }
            }
        }
        for i in 0..g.order() {
            let layer = map.h_layer(i);
            for a in 0..h.order() {
                for b in 0..h.order() {
                    assert_eq!(h.has_edge(a, b), p.has_edge(layer[a], layer[b]));
                }
            }
        }
    }
}
