//! Distance-edge-monitoring sets and numbers of graphs and graph products.
//!
//! A probe vertex `x` monitors an edge `e` if deleting `e` changes the hop
//! distance from `x` to some vertex. [`monitoring::dem_number`] computes the
//! smallest set of probes that together monitor every edge, exactly, by
//! branch and bound. [`products`] builds joins, coronas, rooted products and
//! Cartesian products, and [`theorems`] checks closed-form predictions for
//! those constructions against the exact solver.

pub mod comparison;
pub mod cover;
pub mod error;
pub mod exec;
pub mod expr;
pub mod families;
pub mod graph;
pub mod hitting;
pub mod monitoring;
pub mod products;
pub mod theorems;
pub mod vset;

pub use error::{Error, Result};
pub use exec::Execution;
pub use expr::{GraphExpr, ProductSpec};
pub use families::FamilySpec;
pub use graph::{parse_edge_list, Distance, DistanceMatrix, EdgeId, Graph, VertexId};
pub use monitoring::{dem_number, DemOptions, DemResult, MonitorMatrix};
pub use products::{Origin, ProductOp, ProductVertexMap};
pub use vset::VertexSet;
