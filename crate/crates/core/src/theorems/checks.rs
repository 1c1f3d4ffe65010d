//! Checks that compare structure rather than a single predicted number.

use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::monitoring::{self, DemOptions, MonitorMatrix};
use crate::products::{self, Origin};
use crate::vset::VertexSet;

use super::registry::{cartesian_lower, cartesian_upper};
use super::{FactorFacts, PredictedValue, VerificationRecord, Verdict};

pub const UPPER_CLAIM: &str = "cartesian-upper-iff-unique";
pub const LOWER_CLAIM: &str = "cartesian-lower-iff-conditions";
pub const LOCALITY_CLAIM: &str = "layer-locality";

/// The upper Cartesian bound is attained iff `g` or `h` has exactly one
/// minimum DEM set.
///
/// The prediction is the upper bound itself when a factor has a unique
/// minimum set, and the interval strictly below it otherwise.
pub fn check_upper_equality_condition(
    g: &Graph,
    h: &Graph,
    instance: &str,
    opts: &DemOptions,
) -> Result<VerificationRecord> {
    let fg = FactorFacts::compute(g, opts)?;
    let fh = FactorFacts::compute(h, opts)?;
    let (p, _) = products::cartesian(g, h);
    let computed = monitoring::dem_number(&p, opts)?.dem;
    let upper = cartesian_upper(&fg, &fh);
    let lower = cartesian_lower(&fg, &fh);
    let unique = match (fg.has_unique_minimum_set(), fh.has_unique_minimum_set()) {
        (true, true) => "both factors have",
        (true, false) => "G has",
        (false, true) => "H has",
        (false, false) => "neither factor has",
    };
    let note = format!("{unique} a unique minimum DEM set; upper bound {upper}");
    let predicted = if fg.has_unique_minimum_set() || fh.has_unique_minimum_set() {
        Some(PredictedValue::exact(upper))
    } else {
        PredictedValue::interval(lower, upper.saturating_sub(1))
    };
    Ok(record(instance, UPPER_CLAIM, predicted, computed, note))
}

/// The lower Cartesian bound `n dem(G)` is attained iff every vertex of `g`
/// lies in a minimum DEM set and `h` has `k` pairwise disjoint minimum DEM
/// sets, where `k` is the fewest minimum DEM sets of `g` covering `V(g)`.
///
/// Pairs with `|V(g)| > |V(h)|` or `dem(g) < dem(h)` are skipped.
pub fn check_lower_equality_condition(
    g: &Graph,
    h: &Graph,
    instance: &str,
    opts: &DemOptions,
) -> Result<VerificationRecord> {
    let fg = FactorFacts::compute(g, opts)?;
    let fh = FactorFacts::compute(h, opts)?;
    if fg.order > fh.order || fg.dem < fh.dem {
        return Ok(VerificationRecord::skipped(
            instance.to_string(),
            LOWER_CLAIM,
            format!(
                "out of hypothesis: needs |V(G)| <= |V(H)| and dem(G) >= dem(H); got {} {} and {} {}",
                fg.order, fh.order, fg.dem, fh.dem
            ),
        ));
    }
    let (p, _) = products::cartesian(g, h);
    let computed = monitoring::dem_number(&p, opts)?.dem;

    let k = min_cover_count(&fg.minimum_dem_sets, VertexSet::full(fg.order));
    let condition1 = k.is_some();
    let condition2 = k.is_some_and(|k| k >= 2 && has_disjoint_family(&fh.minimum_dem_sets, k));
    let target = fh.order * fg.dem;
    let note = format!(
        "condition 1 {}; k = {}; condition 2 {}; n dem(G) = {target}",
        holds(condition1),
        k.map_or("undefined".to_string(), |k| k.to_string()),
        holds(condition2),
    );
    let predicted = if condition1 && condition2 {
        Some(PredictedValue::exact(target))
    } else {
        PredictedValue::interval(target + 1, cartesian_upper(&fg, &fh))
    };
    Ok(record(instance, LOWER_CLAIM, predicted, computed, note))
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn record(
    instance: &str,
    claim: &str,
    predicted: Option<PredictedValue>,
    computed: usize,
    note: String,
) -> VerificationRecord {
    match predicted {
        Some(p) => VerificationRecord::judged(instance.to_string(), claim, p, computed).with_note(note),
        None => VerificationRecord {
            instance: instance.to_string(),
            claim: claim.to_string(),
            predicted: None,
            computed: Some(computed),
            verdict: Verdict::Fail,
            note: Some(format!("{note}; no value is consistent with the claim")),
            runtime: Default::default(),
        },
    }
}

/// Fewest members of `sets` whose union is `universe`, if any.
pub fn min_cover_count(sets: &[VertexSet], universe: VertexSet) -> Option<usize> {
    let all = sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
    if !universe.is_subset(all) {
        return None;
    }
    (1..=universe.len()).find(|&budget| cover_within(sets, universe, budget))
}

fn cover_within(sets: &[VertexSet], uncovered: VertexSet, budget: usize) -> bool {
    let Some(v) = uncovered.iter().next() else {
        return true;
    };
    budget > 0
        && sets
            .iter()
            .filter(|s| s.contains(v))
            .any(|&s| cover_within(sets, uncovered.difference(s), budget - 1))
}

/// Whether `k` pairwise disjoint members of `sets` exist.
pub fn has_disjoint_family(sets: &[VertexSet], k: usize) -> bool {
    fn go(sets: &[VertexSet], used: VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        sets.iter()
            .enumerate()
            .take((sets.len() + 1).saturating_sub(k))
            .any(|(i, &s)| s.is_disjoint(used) && go(&sets[i + 1..], used.union(s), k - 1))
    }
    go(sets, VertexSet::EMPTY, k)
}

/// Disagreements between monitoring in `g □ h` and monitoring inside its
/// layers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LayerLocalityReport {
    /// Product vertices whose monitored edges differ from the union of what
    /// their two factor vertices monitor in the matching layers.
    pub em_mismatches: Vec<VertexId>,
    /// `(probe, edge)` pairs whose detecting pairs differ from those of the
    /// isolated layer (empty when the probe lies outside the edge's layer).
    pub pair_mismatches: Vec<(VertexId, EdgeId)>,
    pub probes: usize,
    pub edges: usize,
}

impl LayerLocalityReport {
    pub fn is_clean(&self) -> bool {
        self.em_mismatches.is_empty() && self.pair_mismatches.is_empty()
    }

    pub fn counterexamples(&self) -> usize {
        self.em_mismatches.len() + self.pair_mismatches.len()
    }
}

/// Layer coordinates of a product edge: `(layer is H_i, fixed index, factor edge)`.
fn layer_of(g: &Graph, h: &Graph, n: usize, (a, b): (VertexId, VertexId)) -> (bool, usize, EdgeId) {
    let (ia, ja, ib, jb) = (a / n, a % n, b / n, b % n);
    if ia == ib {
        (true, ia, h.edge_id(ja, jb).expect("layer edge"))
    } else {
        (false, ja, g.edge_id(ia, ib).expect("layer edge"))
    }
}

pub fn check_layer_locality(g: &Graph, h: &Graph, exec: Execution) -> Result<LayerLocalityReport> {
    let (p, map) = products::cartesian(g, h);
    let n = h.order();
    let mg = MonitorMatrix::build(g, exec)?;
    let mh = MonitorMatrix::build(h, exec)?;
    let mp = MonitorMatrix::build(&p, exec)?;
    let id = |i: VertexId, j: VertexId| map.id_of(Origin::Pair(i, j)).expect("pair in range");

    let em_mismatches = p
        .vertices()
        .filter(|&w| {
            let (i, j) = (w / n, w % n);
            let mut expected: Vec<EdgeId> = mh
                .row(j)
                .into_iter()
                .map(|e| h.edge(e))
                .map(|(a, b)| p.edge_id(id(i, a), id(i, b)).expect("H-layer edge"))
                .chain(
                    mg.row(i)
                        .into_iter()
                        .map(|e| g.edge(e))
                        .map(|(a, b)| p.edge_id(id(a, j), id(b, j)).expect("G-layer edge")),
                )
                .collect();
            expected.sort_unstable();
            expected != mp.row(w)
        })
        .collect();

    let per_probe = exec.map_range(p.order(), |x| -> Result<Vec<(VertexId, EdgeId)>> {
        let (xi, xj) = (x / n, x % n);
        let mut bad = Vec::new();
        for e in 0..p.size() {
            let (in_h, fixed, fe) = layer_of(g, h, n, p.edge(e));
            let got = monitoring::monitored_pairs(&p, &[x], e)?;
            let expected: Vec<(VertexId, VertexId)> = match (in_h, fixed == xi, fixed == xj) {
                (true, true, _) => monitoring::monitored_pairs(h, &[xj], fe)?
                    .into_iter()
                    .map(|(_, y)| (x, id(xi, y)))
                    .collect(),
                (false, _, true) => monitoring::monitored_pairs(g, &[xi], fe)?
                    .into_iter()
                    .map(|(_, y)| (x, id(y, xj)))
                    .collect(),
                _ => Vec::new(),
            };
            let mut expected = expected;
            expected.sort_unstable();
            if got != expected {
                bad.push((x, e));
            }
        }
        Ok(bad)
    });
    let mut pair_mismatches = Vec::new();
    for bad in per_probe {
        pair_mismatches.extend(bad?);
    }
    Ok(LayerLocalityReport {
        em_mismatches,
        pair_mismatches,
        probes: p.order(),
        edges: p.size(),
    })
}

/// [`check_layer_locality`] as a record predicting zero counterexamples.
pub fn layer_locality_record(g: &Graph, h: &Graph, instance: &str, exec: Execution) -> Result<VerificationRecord> {
    let report = check_layer_locality(g, h, exec)?;
    let mut rec = VerificationRecord::judged(
        instance.to_string(),
        LOCALITY_CLAIM,
        PredictedValue::exact(0),
        report.counterexamples(),
    );
    if !report.is_clean() {
        rec.note = Some(format!(
            "vertices {:?}; probe/edge pairs {:?}",
            report.em_mismatches, report.pair_mismatches
        ));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::{self, *};

    fn gen(f: FamilySpec) -> Graph {
        f.generate().unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn cover_count_and_packing() {
        let k3_pairs = [set(&[0, 1]), set(&[0, 2]), set(&[1, 2])];
        assert_eq!(min_cover_count(&k3_pairs, VertexSet::full(3)), Some(2));
        assert!(!has_disjoint_family(&k3_pairs, 2));
        assert!(has_disjoint_family(&k3_pairs, 1));
        let singles: Vec<_> = (0..4).map(VertexSet::singleton).collect();
        assert!(has_disjoint_family(&singles, 4));
        assert!(!has_disjoint_family(&singles, 5));
        assert_eq!(min_cover_count(&[set(&[0, 2])], VertexSet::full(3)), None);
    }

    #[test]
    fn upper_condition_on_two_edges() {
        let p2 = gen(Path(2));
        let r = check_upper_equality_condition(&p2, &p2, "cartesian(path:2,path:2)", &DemOptions::default()).unwrap();
        assert_eq!(r.computed, Some(2));
        assert_eq!(r.predicted, PredictedValue::interval(2, 2));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn lower_condition_cycle_path() {
        let r = check_lower_equality_condition(&gen(Cycle(4)), &gen(Path(4)), "x", &DemOptions::default()).unwrap();
        assert_eq!(r.predicted, Some(PredictedValue::exact(8)));
        assert_eq!(r.computed, Some(8));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn lower_condition_out_of_hypothesis() {
        let r = check_lower_equality_condition(&gen(Cycle(3)), &gen(Path(2)), "x", &DemOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn locality_on_small_products() {
        for (a, b) in [(Path(2), Path(3)), (Cycle(4), Complete(3)), (Book(2), Path(2))] {
            let r = check_layer_locality(&gen(a), &gen(b), Execution::Sequential).unwrap();
            assert!(r.is_clean(), "{a} {b}: {r:?}");
        }
    }
}
