//! Verification suites.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::cover;
use crate::error::{Error, Result};
use crate::expr::GraphExpr;
use crate::families::FamilySpec;
use crate::monitoring::{self, DemOptions};
use crate::products::ProductOp;

use super::checks::{check_lower_equality_condition, check_upper_equality_condition, layer_locality_record};
use super::registry::{cartesian_lower, cartesian_upper, predicted_dem};
use super::{FactorFacts, PredictedValue, VerificationRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Closed-form values of families and products.
    Formulas,
    /// Two-sided bounds.
    Bounds,
    /// Characterizations of when bounds are attained.
    Sharpness,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 4] = ["formulas", "bounds", "sharpness", "all"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Formulas => "formulas",
            Suite::Bounds => "bounds",
            Suite::Sharpness => "sharpness",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formulas" => Ok(Suite::Formulas),
            "bounds" => Ok(Suite::Bounds),
            "sharpness" => Ok(Suite::Sharpness),
            "all" => Ok(Suite::All),
            _ => Err(Error::Expr {
                expr: s.to_string(),
                reason: format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Solver caps and execution mode; `max_n` also bounds instance size.
    pub dem: DemOptions,
    /// Base seed for the random instances.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            dem: DemOptions::default(),
            seed: 1,
        }
    }
}

/// Facts for the two factors of a product, or nothing for a family.
pub fn factor_facts(expr: &GraphExpr, opts: &DemOptions) -> Result<Vec<FactorFacts>> {
    match expr.as_product() {
        None => Ok(Vec::new()),
        Some(p) => [&p.left, &p.right]
            .into_iter()
            .map(|f| FactorFacts::compute(&f.build()?, opts))
            .collect(),
    }
}

fn is_cap_error(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. } | Error::EnumerationCapExceeded { .. })
}

/// Runs `f`, timing it and turning cap errors into skipped records.
fn timed(instance: &str, claim: &str, f: impl FnOnce() -> Result<VerificationRecord>) -> Result<VerificationRecord> {
    let start = Instant::now();
    let mut rec = match f() {
        Err(e) if is_cap_error(&e) => VerificationRecord::skipped(instance.to_string(), claim, e.to_string()),
        other => other?,
    };
    rec.runtime = start.elapsed();
    Ok(rec)
}

fn too_big(instance: &str, claim: &str, order: usize, cap: usize) -> VerificationRecord {
    VerificationRecord::skipped(instance.to_string(), claim, format!("order {order} exceeds cap {cap}"))
}

/// Compares the registry prediction for `expr` with the exact solver.
pub fn verify_instance(expr: &GraphExpr, opts: &DemOptions) -> Result<VerificationRecord> {
    let instance = expr.to_string();
    timed(&instance, "registry", || {
        let facts = factor_facts(expr, opts)?;
        let prediction = predicted_dem(expr, &facts)?;
        if expr.order() > opts.max_n {
            return Ok(too_big(&instance, prediction.rule, expr.order(), opts.max_n));
        }
        let computed = monitoring::dem_number(&expr.build()?, opts)?.dem;
        Ok(VerificationRecord::judged(instance.clone(), prediction.rule, prediction.value, computed))
    })
}

/// One unit of work in a suite.
#[derive(Debug, Clone)]
enum Job {
    Registry(GraphExpr),
    Sandwich(GraphExpr),
    CoverBound(GraphExpr),
    ApexBounds(GraphExpr),
    ClusterBounds(GraphExpr),
    CompleteIff(GraphExpr),
    TreeIff(GraphExpr),
    BookUnique(usize),
    Upper(GraphExpr),
    Lower(GraphExpr),
    Locality(GraphExpr),
}

impl Job {
    fn claim(&self) -> &'static str {
        match self {
            Job::Registry(_) => "registry",
            Job::Sandwich(_) => "cartesian-bounds",
            Job::CoverBound(_) => "cover-bound",
            Job::ApexBounds(_) => "apex-bounds",
            Job::ClusterBounds(_) => "cluster-bounds",
            Job::CompleteIff(_) => "complete-iff",
            Job::TreeIff(_) => "tree-iff",
            Job::BookUnique(_) => "book-unique-minimum-set",
            Job::Upper(_) => super::checks::UPPER_CLAIM,
            Job::Lower(_) => super::checks::LOWER_CLAIM,
            Job::Locality(_) => super::checks::LOCALITY_CLAIM,
        }
    }

    fn expr(&self) -> GraphExpr {
        match self {
            Job::BookUnique(q) => GraphExpr::Family(FamilySpec::Book(*q)),
            Job::Registry(e)
            | Job::Sandwich(e)
            | Job::CoverBound(e)
            | Job::ApexBounds(e)
            | Job::ClusterBounds(e)
            | Job::CompleteIff(e)
            | Job::TreeIff(e)
            | Job::Upper(e)
            | Job::Lower(e)
            | Job::Locality(e) => e.clone(),
        }
    }

    fn run(&self, opts: &DemOptions) -> Result<VerificationRecord> {
        if let Job::Registry(e) = self {
            return verify_instance(e, opts);
        }
        let expr = self.expr();
        let instance = expr.to_string();
        let claim = self.claim();
        timed(&instance, claim, || {
            if expr.order() > opts.max_n {
                return Ok(too_big(&instance, claim, expr.order(), opts.max_n));
            }
            let judged = |p: PredictedValue, c: usize| Ok(VerificationRecord::judged(instance.clone(), claim, p, c));
            let dem = |g| monitoring::dem_number(g, opts).map(|r| r.dem);
            match self {
                Job::Registry(_) => unreachable!("handled above"),
                Job::Sandwich(e) => {
                    let facts = factor_facts(e, opts)?;
                    let p = interval(cartesian_lower(&facts[0], &facts[1]), cartesian_upper(&facts[0], &facts[1]));
                    judged(p, dem(&e.build()?)?)
                }
                Job::CoverBound(e) => {
                    let g = e.build()?;
                    let c = cover::vertex_cover_number_capped(&g, opts.max_n)?.value;
                    judged(interval(usize::from(g.size() > 0), c), dem(&g)?)
                }
                Job::ApexBounds(e) | Job::ClusterBounds(e) => {
                    let facts = factor_facts(e, opts)?;
                    let (g, h) = (&facts[0], &facts[1]);
                    let p = match self {
                        Job::ApexBounds(_) => interval(g.cover, g.cover + 1),
                        _ => interval(g.dem + 1, g.order * h.dem),
                    };
                    judged(p, dem(&e.build()?)?)
                }
                Job::CompleteIff(e) | Job::TreeIff(e) => {
                    let g = e.build()?;
                    let n = g.order();
                    let p = match self {
                        Job::CompleteIff(_) if g.is_complete() => PredictedValue::exact(n - 1),
                        Job::CompleteIff(_) => interval(1, n.saturating_sub(2)),
                        _ if g.is_tree() => PredictedValue::exact(1),
                        _ => interval(2, n - 1),
                    };
                    judged(p, dem(&g)?)
                }
                Job::BookUnique(_) => {
                    let g = expr.build()?;
                    let sets = monitoring::dem_number(&g, &DemOptions { enumerate_all: true, ..*opts })?
                        .all_minimum_sets
                        .expect("enumeration was requested");
                    let mut rec = VerificationRecord::judged(instance.clone(), claim, PredictedValue::exact(1), sets.len());
                    if sets != [vec![0, 1]] {
                        rec.verdict = super::Verdict::Fail;
                        rec.note = Some(format!("minimum sets {sets:?}"));
                    }
                    Ok(rec)
                }
                Job::Upper(e) | Job::Lower(e) | Job::Locality(e) => {
                    let p = e.as_product().expect("pair jobs hold products");
                    let (g, h) = (p.left.build()?, p.right.build()?);
                    match self {
                        Job::Upper(_) => check_upper_equality_condition(&g, &h, &instance, opts),
                        Job::Lower(_) => check_lower_equality_condition(&g, &h, &instance, opts),
                        _ => layer_locality_record(&g, &h, &instance, opts.execution),
                    }
                }
            }
        })
    }
}

fn interval(lower: usize, upper: usize) -> PredictedValue {
    PredictedValue::interval(lower, upper).expect("bounds are ordered")
}

fn fam(text: &str) -> GraphExpr {
    text.parse().expect("suite expressions are well formed")
}

fn fams(texts: &[&str]) -> Vec<GraphExpr> {
    texts.iter().map(|t| fam(t)).collect()
}

fn pairs(op: ProductOp, left: &[GraphExpr], right: &[GraphExpr], max_order: usize) -> Vec<GraphExpr> {
    left.iter()
        .flat_map(|g| right.iter().map(move |h| GraphExpr::product(op, g.clone(), h.clone())))
        .filter(|e| e.order() <= max_order)
        .collect()
}

fn random_connected(seed: u64, count: usize, orders: std::ops::RangeInclusive<usize>) -> Vec<GraphExpr> {
    let span = orders.end() - orders.start() + 1;
    (0..count)
        .map(|i| {
            GraphExpr::Family(FamilySpec::RandomConnected {
                n: orders.start() + i % span,
                num: 1,
                den: 3,
                seed: seed.wrapping_add(i as u64),
            })
        })
        .collect()
}

fn random_trees(seed: u64, count: usize, orders: std::ops::RangeInclusive<usize>) -> Vec<GraphExpr> {
    let span = orders.end() - orders.start() + 1;
    (0..count)
        .map(|i| {
            GraphExpr::Family(FamilySpec::RandomTree {
                n: orders.start() + i % span,
                seed: seed.wrapping_add(i as u64),
            })
        })
        .collect()
}

fn formulas_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut exprs: Vec<GraphExpr> = Vec::new();
    let range = |f: fn(usize) -> FamilySpec, r: std::ops::RangeInclusive<usize>| {
        r.map(move |n| GraphExpr::Family(f(n)))
    };
    exprs.extend(range(FamilySpec::Complete, 2..=6));
    exprs.extend(range(FamilySpec::Path, 2..=8));
    exprs.extend(range(FamilySpec::Cycle, 3..=8));
    exprs.extend(range(FamilySpec::Book, 1..=5));
    exprs.extend((1..=4).map(|d| GraphExpr::Family(FamilySpec::Hypercube(d))));
    for a in 2..=5 {
        exprs.extend((a..=5).map(|b| GraphExpr::Family(FamilySpec::CompleteBipartite(a, b))));
    }
    exprs.extend(random_trees(cfg.seed, 10, 3..=12));

    let join_factors = fams(&["path:2", "path:3", "path:4", "cycle:3", "cycle:4", "complete:3"]);
    exprs.extend(pairs(ProductOp::Join, &join_factors, &join_factors, 12));
    let apex = [fam("complete:1")];
    exprs.extend(pairs(ProductOp::Join, &fams(&["path:9", "path:10", "path:11", "path:12"]), &apex, 24));
    exprs.extend(pairs(ProductOp::Join, &random_connected(cfg.seed, 10, 4..=10), &apex, 24));

    exprs.extend(pairs(
        ProductOp::Corona,
        &fams(&["path:2", "path:3", "cycle:3"]),
        &fams(&["path:2", "complete:3", "path:3"]),
        12,
    ));
    for g in fams(&["cycle:4", "complete:4"]) {
        for h in fams(&["path:2", "path:3", "cycle:3"]) {
            for root in [None, Some(1)] {
                exprs.push(GraphExpr::cluster(g.clone(), h.clone(), root));
            }
        }
    }

    let paths = fams(&["path:2", "path:3", "path:4", "path:5"]);
    exprs.extend(pairs(ProductOp::Cartesian, &paths, &paths, usize::MAX));
    for (t, c) in [
        ("path:2", "cycle:5"),
        ("path:2", "cycle:6"),
        ("path:3", "cycle:4"),
        ("path:3", "cycle:7"),
        ("path:2", "cycle:4"),
        ("bipartite:1:3", "cycle:5"),
        ("bipartite:1:3", "cycle:6"),
        ("cycle:4", "path:4"),
    ] {
        exprs.push(GraphExpr::cartesian(fam(t), fam(c)));
    }
    exprs.push(GraphExpr::cartesian(
        GraphExpr::Family(FamilySpec::RandomTree { n: 4, seed: cfg.seed }),
        fam("cycle:9"),
    ));
    for (a, b) in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
        exprs.push(GraphExpr::cartesian(fam(&format!("cycle:{a}")), fam(&format!("cycle:{b}"))));
    }
    for (a, b) in [(3, 3), (3, 4), (4, 4)] {
        exprs.push(GraphExpr::cartesian(fam(&format!("complete:{a}")), fam(&format!("complete:{b}"))));
    }
    exprs.into_iter().map(Job::Registry).collect()
}

/// Factor corpus for the Cartesian bound checks.
const CARTESIAN_CORPUS: [&str; 10] = [
    "path:2", "path:3", "path:4", "cycle:3", "cycle:4", "cycle:5", "complete:3", "complete:4", "book:2", "bipartite:2:3",
];

fn bounds_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let corpus = fams(&CARTESIAN_CORPUS);
    let mut jobs: Vec<Job> = pairs(ProductOp::Cartesian, &corpus, &corpus, cfg.dem.max_n)
        .into_iter()
        .map(Job::Sandwich)
        .collect();
    let singles = corpus.iter().cloned().chain(random_connected(cfg.seed, 10, 5..=10));
    jobs.extend(singles.map(Job::CoverBound));
    let apex = [fam("complete:1")];
    jobs.extend(
        pairs(ProductOp::Join, &random_connected(cfg.seed.wrapping_add(100), 20, 3..=10), &apex, 24)
            .into_iter()
            .map(Job::ApexBounds),
    );
    jobs.extend(
        pairs(
            ProductOp::Cluster,
            &fams(&["path:3", "cycle:4", "complete:4"]),
            &fams(&["cycle:3", "cycle:4", "complete:4", "book:2"]),
            cfg.dem.max_n,
        )
        .into_iter()
        .map(Job::ClusterBounds),
    );
    jobs
}

fn sharpness_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let singles: Vec<GraphExpr> = fams(&CARTESIAN_CORPUS)
        .into_iter()
        .chain(fams(&["complete:2", "complete:5", "complete:6", "path:6", "book:3"]))
        .chain(random_connected(cfg.seed.wrapping_add(200), 10, 4..=8))
        .chain(random_trees(cfg.seed.wrapping_add(300), 5, 4..=10))
        .collect();
    let mut jobs: Vec<Job> = singles.iter().cloned().map(Job::CompleteIff).collect();
    jobs.extend(singles.into_iter().map(Job::TreeIff));
    jobs.extend((2..=5).map(Job::BookUnique));

    let corpus = fams(&["path:2", "path:3", "path:4", "cycle:3", "cycle:4", "complete:3", "book:2"]);
    let products = pairs(ProductOp::Cartesian, &corpus, &corpus, cfg.dem.max_n);
    jobs.extend(products.iter().cloned().map(Job::Upper));
    jobs.extend(products.iter().cloned().map(Job::Lower));
    let books = fams(&["book:2", "book:3"]);
    let others = fams(&["path:2", "path:3", "cycle:3", "cycle:4"]);
    jobs.extend(
        pairs(ProductOp::Cartesian, &books, &books, cfg.dem.max_n)
            .into_iter()
            .chain(pairs(ProductOp::Cartesian, &others, &books, cfg.dem.max_n))
            .map(Job::Registry),
    );
    let small = fams(&["path:2", "path:3", "cycle:3", "cycle:4", "book:2", "bipartite:2:2", "complete:4"]);
    jobs.extend(pairs(ProductOp::Cartesian, &small, &small, cfg.dem.max_n).into_iter().map(Job::Locality));
    jobs
}

/// Runs the suite and returns its records sorted by instance then claim.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let jobs: Vec<Job> = match suite {
        Suite::Formulas => formulas_jobs(cfg),
        Suite::Bounds => bounds_jobs(cfg),
        Suite::Sharpness => sharpness_jobs(cfg),
        Suite::All => [formulas_jobs(cfg), bounds_jobs(cfg), sharpness_jobs(cfg)].concat(),
    };
    // The solver itself runs sequentially inside each job; jobs run in parallel.
    let inner = DemOptions {
        execution: crate::exec::Execution::Sequential,
        ..cfg.dem
    };
    let mut records = cfg
        .dem
        .execution
        .map_slice(&jobs, |job| job.run(&inner))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| (&a.instance, &a.claim).cmp(&(&b.instance, &b.claim)));
    records.dedup_by(|a, b| a.instance == b.instance && a.claim == b.claim);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::Verdict;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn verify_instance_examples() {
        let opts = DemOptions::default();
        for text in ["book:4", "hypercube:3", "cluster(cycle:4,path:2)"] {
            let r = verify_instance(&fam(text), &opts).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
        let r = verify_instance(&fam("hypercube:3"), &opts).unwrap();
        assert_eq!((r.predicted, r.computed), (Some(PredictedValue::exact(4)), Some(4)));
    }

    #[test]
    fn oversized_instances_are_skipped() {
        let r = verify_instance(&fam("cartesian(path:5,path:6)"), &DemOptions::default().with_max_n(20)).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.claim, "cartesian-trees");
    }

    #[test]
    fn suites_have_unique_sorted_records() {
        let cfg = VerifyConfig {
            dem: DemOptions::default().with_max_n(9),
            seed: 5,
        };
        let recs = run_suite(Suite::Bounds, &cfg).unwrap();
        assert!(!recs.is_empty());
        assert!(recs.windows(2).all(|w| (&w[0].instance, &w[0].claim) < (&w[1].instance, &w[1].claim)));
    }
}
