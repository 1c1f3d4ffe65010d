//! Exact minimum vertex cover.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::hitting::{BranchRule, HittingSet};
use crate::vset::{VertexSet, MAX_BITSET_VERTICES};

pub const DEFAULT_COVER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub value: usize,
    /// Lexicographically smallest minimum cover.
    pub witness: Vec<VertexId>,
}

pub fn is_vertex_cover(g: &Graph, set: &[VertexId]) -> Result<bool> {
    let mut member = vec![false; g.order()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    Ok(g.edges().iter().all(|&(u, v)| member[u] || member[v]))
}

pub fn vertex_cover_number(g: &Graph) -> Result<CoverResult> {
    vertex_cover_number_capped(g, DEFAULT_COVER_CAP)
}

pub fn vertex_cover_number_capped(g: &Graph, cap: usize) -> Result<CoverResult> {
    let cap = cap.min(MAX_BITSET_VERTICES);
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "vertex cover",
            n: g.order(),
            cap,
        });
    }
    let columns = g
        .edges()
        .iter()
        .map(|&(u, v)| VertexSet::singleton(u).union(VertexSet::singleton(v)));
    let mut hs = HittingSet::new(g.order(), columns, BranchRule::HighestDegree);
    let value = hs.minimum(Some(greedy_matching_cover(g))).expect("edges always have endpoints").len();
    let witness = hs
        .lexicographic_minimum(value)
        .expect("a cover of the minimum size exists");
    Ok(CoverResult {
        value,
        witness: witness.to_vec(),
    })
}

/// Both endpoints of a greedy maximal matching: a cover at most twice optimal.
fn greedy_matching_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::EMPTY;
    for &(u, v) in g.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::*;

    #[test]
    fn is_vertex_cover_examples() {
        let c4 = Cycle(4).generate().unwrap();
        assert!(is_vertex_cover(&c4, &[0, 2]).unwrap());
        let p3 = Path(3).generate().unwrap();
        assert!(is_vertex_cover(&p3, &[1]).unwrap());
        let k3 = Complete(3).generate().unwrap();
        assert!(!is_vertex_cover(&k3, &[0]).unwrap());
        assert!(matches!(
            is_vertex_cover(&k3, &[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn cover_numbers() {
        let c = |spec: crate::families::FamilySpec| vertex_cover_number(&spec.generate().unwrap()).unwrap();
        assert_eq!(c(CompleteBipartite(2, 3)).value, 2);
        assert_eq!(c(CompleteBipartite(2, 3)).witness, vec![0, 1]);
        assert_eq!(c(Cycle(5)).value, 3);
        assert_eq!(c(Cycle(5)).witness, vec![0, 1, 3]);
        assert_eq!(c(Complete(5)).value, 4);
        assert_eq!(c(Complete(5)).witness, vec![0, 1, 2, 3]);
        assert_eq!(c(Path(4)).witness, vec![0, 2]);
        assert_eq!(c(Complete(1)).value, 0);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Path(30).generate().unwrap();
        assert_eq!(
            vertex_cover_number(&g),
            Err(Error::CapExceeded {
                what: "vertex cover",
                n: 30,
                cap: 24
            })
        );
        assert_eq!(vertex_cover_number_capped(&g, 30).unwrap().value, 15);
    }

    #[test]
    fn witness_is_minimum_against_exhaustive_search() {
        for spec in [Cycle(7), Book(3), Hypercube(3), CompleteBipartite(3, 4), Path(7)] {
            let g = spec.generate().unwrap();
            let res = vertex_cover_number(&g).unwrap();
            assert!(is_vertex_cover(&g, &res.witness).unwrap());
            let smaller = (0u64..1 << g.order())
                .map(VertexSet)
                .filter(|s| s.len() < res.value)
                .any(|s| is_vertex_cover(&g, &s.to_vec()).unwrap());
            assert!(!smaller, "{spec}");
        }
    }
}
