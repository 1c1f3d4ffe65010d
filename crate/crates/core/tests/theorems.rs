mod common;

use demkit::theorems::harness::factor_facts;
use demkit::theorems::{
    check_lower_equality_condition, check_upper_equality_condition, predicted_dem, run_suite, verify_instance,
    PredictedValue, Suite, Verdict, VerificationRecord, VerifyConfig,
};
use demkit::{DemOptions, Execution, FamilySpec, Graph, GraphExpr};

fn parse(text: &str) -> GraphExpr {
    text.parse().unwrap()
}

fn gen(text: &str) -> Graph {
    parse(text).build().unwrap()
}

fn predicted(text: &str) -> PredictedValue {
    let e = parse(text);
    predicted_dem(&e, &factor_facts(&e, &DemOptions::default()).unwrap())
        .unwrap()
        .value
}

#[test]
fn registry_examples() {
    let exact = PredictedValue::exact;
    assert_eq!(predicted("cartesian(path:3,path:7)"), exact(7));
    assert_eq!(predicted("cartesian(path:2,cycle:5)"), exact(5));
    assert_eq!(predicted("cartesian(path:3,cycle:4)"), exact(6));
    assert_eq!(predicted("cartesian(complete:3,complete:4)"), exact(9));
    assert_eq!(predicted("cartesian(cycle:3,cycle:5)"), exact(10));
    assert_eq!(predicted("join(path:3,path:3)"), exact(4));
    assert_eq!(predicted("corona(path:3,complete:2)"), exact(3));
    assert_eq!(predicted("cartesian(book:2,book:2)"), exact(12));
    // Generic pair: both factors have several minimum DEM sets.
    assert_eq!(
        predicted("cartesian(cycle:4,complete:4)"),
        PredictedValue::interval(12, 14).unwrap()
    );
}

#[test]
fn verify_instance_examples() {
    for text in ["book:4", "hypercube:3", "cluster(cycle:4,path:2)"] {
        let r = verify_instance(&parse(text), &DemOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }
}

#[test]
fn book_product_prediction_is_refuted() {
    let r = verify_instance(&parse("cartesian(book:2,book:2)"), &DemOptions::default()).unwrap();
    assert_eq!(r.predicted, Some(PredictedValue::exact(12)));
    assert_eq!(r.computed, Some(10));
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(common::dem_brute(&gen("cartesian(book:2,book:2)")).0, 10);
}

#[test]
fn upper_condition_examples() {
    let opts = DemOptions::default();
    let r = check_upper_equality_condition(&gen("path:2"), &gen("path:2"), "p2p2", &opts).unwrap();
    assert_eq!((r.computed, r.verdict), (Some(2), Verdict::Pass));

    // Unique minimum sets on both sides, yet the bound is not attained.
    let r = check_upper_equality_condition(&gen("book:2"), &gen("book:2"), "b2b2", &opts).unwrap();
    assert_eq!((r.predicted, r.computed), (Some(PredictedValue::exact(12)), Some(10)));
    assert_eq!(r.verdict, Verdict::Fail);

    let r = check_upper_equality_condition(&gen("cycle:4"), &gen("book:2"), "c4b2", &opts).unwrap();
    assert_eq!((r.predicted, r.computed), (Some(PredictedValue::exact(12)), Some(10)));
}

#[test]
fn lower_condition_examples() {
    let opts = DemOptions::default();
    let r = check_lower_equality_condition(&gen("cycle:4"), &gen("path:4"), "c4p4", &opts).unwrap();
    assert_eq!((r.computed, r.verdict), (Some(8), Verdict::Pass));

    let r = check_lower_equality_condition(&gen("cycle:3"), &gen("path:2"), "c3p2", &opts).unwrap();
    assert_eq!(r.verdict, Verdict::Skipped);

    // dem(K_3 □ K_3) = 6 = 3 dem(K_3) although K_3 has no two disjoint
    // minimum DEM sets.
    let r = check_lower_equality_condition(&gen("complete:3"), &gen("complete:3"), "k3k3", &opts).unwrap();
    assert_eq!(r.computed, Some(6));
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.note.unwrap().contains("condition 2 fails"));
}

fn strip_runtime(mut recs: Vec<VerificationRecord>) -> Vec<VerificationRecord> {
    for r in &mut recs {
        r.runtime = Default::default();
    }
    recs
}

#[test]
fn formulas_suite_passes_at_twenty() {
    let cfg = VerifyConfig {
        dem: DemOptions::default().with_max_n(20),
        seed: 1,
    };
    let recs = run_suite(Suite::Formulas, &cfg).unwrap();
    let failed: Vec<_> = recs.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(recs.iter().filter(|r| r.verdict == Verdict::Pass).count() > 100);
}

#[test]
fn bounds_suite_passes() {
    let recs = run_suite(Suite::Bounds, &VerifyConfig::default()).unwrap();
    assert!(recs.iter().all(|r| r.verdict == Verdict::Pass), "{recs:#?}");
}

#[test]
fn suites_are_deterministic_across_execution_modes() {
    let mk = |execution| VerifyConfig {
        dem: DemOptions {
            execution,
            ..DemOptions::default().with_max_n(16)
        },
        seed: 3,
    };
    let seq = strip_runtime(run_suite(Suite::All, &mk(Execution::Sequential)).unwrap());
    let par = strip_runtime(run_suite(Suite::All, &mk(Execution::Parallel)).unwrap());
    assert_eq!(seq, par);
}

#[test]
fn sharpness_failures_are_the_documented_ones() {
    let recs = run_suite(Suite::Sharpness, &VerifyConfig::default()).unwrap();
    for r in recs.iter().filter(|r| r.verdict == Verdict::Fail) {
        let e = parse(&r.instance);
        let p = e.as_product().expect("only product claims fail");
        let has_book = [&p.left, &p.right]
            .iter()
            .any(|f| matches!(f.as_family(), Some(FamilySpec::Book(_))));
        let small_triangle = [&p.left, &p.right]
            .iter()
            .all(|f| matches!(f.as_family(), Some(FamilySpec::Cycle(3) | FamilySpec::Complete(3) | FamilySpec::Book(_))));
        assert!(has_book || small_triangle, "unexpected failure {r:?}");
    }
}
