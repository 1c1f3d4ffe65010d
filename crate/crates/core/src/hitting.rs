//! Exact minimum hitting set over at most 64 elements.
//!
//! Both the vertex cover number (columns are edges) and the
//! distance-edge-monitoring number (columns are the monitor lists of edges)
//! reduce to this problem. The search is a depth-first branch and bound:
//! pick an unhit column, branch on each of its candidates in turn while
//! forbidding the candidates already tried, and prune with a lower bound
//! given by a greedily built family of pairwise disjoint unhit columns.
//!
//! Forbidding earlier candidates makes the branches partition the solution
//! space, which is what lets [`HittingSet::enumerate`] list every minimum
//! solution exactly once.

use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchRule {
    /// Branch on the unhit column with the fewest allowed candidates.
    #[default]
    FewestCandidates,
    /// Branch on a column containing the element that hits the most unhit
    /// columns, trying that element first.
    HighestDegree,
}

#[derive(Debug, Clone)]
pub struct HittingSet {
    universe: usize,
    /// Inclusion-minimal columns, sorted by size then bits.
    columns: Vec<VertexSet>,
    /// Some column had no candidates at all.
    infeasible: bool,
    rule: BranchRule,
    nodes: u64,
}

enum State {
    Hit,
    Dead,
    Open { bound: usize, candidates: Vec<usize> },
}

impl HittingSet {
    pub fn new(universe: usize, columns: impl IntoIterator<Item = VertexSet>, rule: BranchRule) -> Self {
        assert!(universe <= crate::vset::MAX_BITSET_VERTICES);
        let mut cols: Vec<VertexSet> = columns.into_iter().collect();
        let infeasible = cols.iter().any(|c| c.is_empty());
        cols.sort_by_key(|c| (c.len(), c.0));
        cols.dedup();
        // A column that contains another is hit whenever the smaller one is.
        let mut kept: Vec<VertexSet> = Vec::with_capacity(cols.len());
        for c in cols {
            if !kept.iter().any(|k| k.is_subset(c)) {
                kept.push(c);
            }
        }
        HittingSet {
            universe,
            columns: kept,
            infeasible,
            rule,
            nodes: 0,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Columns that survived the dominance reduction.
    pub fn columns(&self) -> &[VertexSet] {
        &self.columns
    }

    /// Search nodes visited so far, across all queries on this instance.
    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    pub fn is_hitting_set(&self, set: VertexSet) -> bool {
        !self.infeasible && self.columns.iter().all(|c| !c.is_disjoint(set))
    }

    fn state(&self, chosen: VertexSet, forbidden: VertexSet) -> State {
        let allowed = VertexSet::full(self.universe).difference(forbidden);
        let mut used = VertexSet::EMPTY;
        let mut bound = 0;
        let mut any_open = false;
        let mut fewest: Option<VertexSet> = None;
        let mut degree = [0u32; 64];
        for &col in &self.columns {
            if !col.is_disjoint(chosen) {
                continue;
            }
            any_open = true;
            let cands = col.intersection(allowed);
            if cands.is_empty() {
                return State::Dead;
            }
            if cands.is_disjoint(used) {
                bound += 1;
                used = used.union(cands);
            }
            match self.rule {
                BranchRule::FewestCandidates => {
                    if fewest.is_none_or(|f| cands.len() < f.len()) {
                        fewest = Some(cands);
                    }
                }
                BranchRule::HighestDegree => {
                    for v in cands.iter() {
                        degree[v] += 1;
                    }
                }
            }
        }
        if !any_open {
            return State::Hit;
        }
        let candidates = match self.rule {
            BranchRule::FewestCandidates => fewest.expect("an open column exists").to_vec(),
            BranchRule::HighestDegree => {
                let top = (0..self.universe)
                    .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
                    .expect("nonempty universe");
                let col = self
                    .columns
                    .iter()
                    .find(|c| c.is_disjoint(chosen) && c.contains(top))
                    .expect("top element lies in an open column")
                    .intersection(allowed);
                std::iter::once(top)
                    .chain(col.iter().filter(|&v| v != top))
                    .collect()
            }
        };
        State::Open { bound, candidates }
    }

    /// A minimum hitting set, or `None` when some column is empty.
    ///
    /// `incumbent`, if given, must be a hitting set; the search only looks
    /// for strictly smaller ones.
    pub fn minimum(&mut self, incumbent: Option<VertexSet>) -> Option<VertexSet> {
        if self.infeasible {
            return None;
        }
        debug_assert!(incumbent.is_none_or(|s| self.is_hitting_set(s)));
        let mut best = incumbent;
        self.minimize(VertexSet::EMPTY, VertexSet::EMPTY, &mut best);
        best
    }

    fn minimize(&mut self, chosen: VertexSet, forbidden: VertexSet, best: &mut Option<VertexSet>) {
        self.nodes += 1;
        match self.state(chosen, forbidden) {
            State::Hit => {
                if best.is_none_or(|b| chosen.len() < b.len()) {
                    *best = Some(chosen);
                }
            }
            State::Dead => {}
            State::Open { bound, candidates } => {
                if best.is_some_and(|b| chosen.len() + bound >= b.len()) {
                    return;
                }
                let mut forbidden = forbidden;
                for v in candidates {
                    self.minimize(chosen.union(VertexSet::singleton(v)), forbidden, best);
                    forbidden.insert(v);
                }
            }
        }
    }

    /// Some hitting set of size at most `budget` that contains `required`
    /// and avoids `forbidden`.
    pub fn find(&mut self, required: VertexSet, forbidden: VertexSet, budget: usize) -> Option<VertexSet> {
        if self.infeasible || !required.is_disjoint(forbidden) {
            return None;
        }
        self.feasible(required, forbidden, budget)
    }

    fn feasible(&mut self, chosen: VertexSet, forbidden: VertexSet, budget: usize) -> Option<VertexSet> {
        self.nodes += 1;
        match self.state(chosen, forbidden) {
            State::Hit => (chosen.len() <= budget).then_some(chosen),
            State::Dead => None,
            State::Open { bound, candidates } => {
                if chosen.len() + bound > budget {
                    return None;
                }
                let mut forbidden = forbidden;
                for v in candidates {
                    if let Some(found) = self.feasible(chosen.union(VertexSet::singleton(v)), forbidden, budget) {
                        return Some(found);
                    }
                    forbidden.insert(v);
                }
                None
            }
        }
    }

    /// The lexicographically smallest (as a sorted id list) hitting set of
    /// size `size`, where `size` is the minimum.
    pub fn lexicographic_minimum(&mut self, size: usize) -> Option<VertexSet> {
        let mut chosen = VertexSet::EMPTY;
        let mut forbidden = VertexSet::EMPTY;
        let mut next = 0;
        while !self.is_hitting_set(chosen) {
            if chosen.len() == size {
                return None;
            }
            let pick = (next..self.universe).find_map(|v| {
                let below = VertexSet::full(v).difference(chosen);
                let with_v = chosen.union(VertexSet::singleton(v));
                self.find(with_v, forbidden.union(below), size)
                    .map(|_| (v, below))
            });
            let (v, below) = pick?;
            chosen.insert(v);
            forbidden = forbidden.union(below);
            next = v + 1;
        }
        Some(chosen)
    }

    /// Every hitting set of exactly `size` elements, where `size` is the
    /// minimum, sorted lexicographically. Fails once more than `cap` are found.
    pub fn enumerate(&mut self, size: usize, cap: usize) -> Result<Vec<VertexSet>, usize> {
        let mut out = Vec::new();
        if !self.infeasible {
            self.collect(VertexSet::EMPTY, VertexSet::EMPTY, size, cap, &mut out)?;
        }
        out.sort_by_key(|s| s.to_vec());
        Ok(out)
    }

    fn collect(
        &mut self,
        chosen: VertexSet,
        forbidden: VertexSet,
        size: usize,
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<(), usize> {
        self.nodes += 1;
        match self.state(chosen, forbidden) {
            State::Hit => {
                if chosen.len() == size {
                    if out.len() == cap {
                        return Err(cap);
                    }
                    out.push(chosen);
                }
            }
            State::Dead => {}
            State::Open { bound, candidates } => {
                if chosen.len() + bound > size {
                    return Ok(());
                }
                let mut forbidden = forbidden;
                for v in candidates {
                    self.collect(chosen.union(VertexSet::singleton(v)), forbidden, size, cap, out)?;
                    forbidden.insert(v);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    /// Smallest size and all minimum hitting sets by trying every subset.
    fn brute(universe: usize, cols: &[VertexSet]) -> (usize, Vec<VertexSet>) {
        let all: Vec<VertexSet> = (0u64..1 << universe)
            .map(VertexSet)
            .filter(|s| cols.iter().all(|c| !c.is_disjoint(*s)))
            .collect();
        let best = all.iter().map(|s| s.len()).min().unwrap();
        let mut mins: Vec<_> = all.into_iter().filter(|s| s.len() == best).collect();
        mins.sort_by_key(|s| s.to_vec());
        (best, mins)
    }

    #[test]
    fn triangle_cover() {
        let cols = [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])];
        for rule in [BranchRule::FewestCandidates, BranchRule::HighestDegree] {
            let mut hs = HittingSet::new(3, cols, rule);
            assert_eq!(hs.minimum(None).unwrap().len(), 2);
            assert_eq!(hs.lexicographic_minimum(2), Some(set(&[0, 1])));
            assert_eq!(
                hs.enumerate(2, 10).unwrap(),
                vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
            );
            assert_eq!(hs.enumerate(2, 2), Err(2));
        }
    }

    #[test]
    fn empty_column_is_infeasible() {
        let mut hs = HittingSet::new(3, [set(&[0]), VertexSet::EMPTY], BranchRule::default());
        assert_eq!(hs.minimum(None), None);
        assert_eq!(hs.enumerate(1, 5), Ok(vec![]));
    }

    #[test]
    fn no_columns() {
        let mut hs = HittingSet::new(4, [], BranchRule::default());
        assert_eq!(hs.minimum(None), Some(VertexSet::EMPTY));
        assert_eq!(hs.lexicographic_minimum(0), Some(VertexSet::EMPTY));
    }

    #[test]
    fn dominated_columns_are_dropped() {
        let hs = HittingSet::new(4, [set(&[0, 1, 2]), set(&[1]), set(&[1, 3])], BranchRule::default());
        assert_eq!(hs.columns(), &[set(&[1])]);
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_instances() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..200 {
            let universe = 3 + round % 8;
            let ncols = 1 + (next() % 12) as usize;
            let cols: Vec<VertexSet> = (0..ncols)
                .map(|_| {
                    let mask = next() & ((1 << universe) - 1);
                    VertexSet(if mask == 0 { 1 } else { mask })
                })
                .collect();
            let (best, mins) = brute(universe, &cols);
            for rule in [BranchRule::FewestCandidates, BranchRule::HighestDegree] {
                let mut hs = HittingSet::new(universe, cols.iter().copied(), rule);
                assert_eq!(hs.minimum(None).unwrap().len(), best);
                assert_eq!(hs.lexicographic_minimum(best), Some(mins[0]));
                assert_eq!(hs.enumerate(best, 1 << 12).unwrap(), mins);
                if best > 0 {
                    assert_eq!(hs.find(VertexSet::EMPTY, VertexSet::EMPTY, best - 1), None);
                }
            }
        }
    }
}
