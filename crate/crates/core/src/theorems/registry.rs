//! The prediction table.
//!
//! Rules are tried in order; the first one whose `predict` returns `Some`
//! wins, so specific formulas come before the generic bounds they refine.

use crate::error::{Error, Result};
use crate::expr::GraphExpr;
use crate::families::FamilySpec;
use crate::products::ProductOp;

use super::{FactorFacts, PredictedValue};

/// `facts` is empty for a family and `[left, right]` for a product.
pub type PredictFn = fn(&GraphExpr, &[FactorFacts]) -> Option<PredictedValue>;

pub struct Rule {
    /// Short identifier used as the record's claim.
    pub name: &'static str,
    /// The formula in words.
    pub statement: &'static str,
    pub predict: PredictFn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub value: PredictedValue,
    pub rule: &'static str,
    pub statement: &'static str,
}

pub static REGISTRY: &[Rule] = &[
    Rule {
        name: "tree",
        statement: "dem(T) = 1 for a tree T of order at least 2",
        predict: |e, _| family(e).filter(|f| f.is_tree_family() && f.order() >= 2).map(|_| exact(1)),
    },
    Rule {
        name: "complete",
        statement: "dem(K_n) = n - 1",
        predict: |e, _| match family(e)? {
            FamilySpec::Complete(n) => Some(exact(n - 1)),
            _ => None,
        },
    },
    Rule {
        name: "complete-bipartite",
        statement: "dem(K_{a;b}) = min(a;b)",
        predict: |e, _| match family(e)? {
            FamilySpec::CompleteBipartite(a, b) => Some(exact(*a.min(b))),
            _ => None,
        },
    },
    Rule {
        name: "cycle",
        statement: "dem(C_n) = 2",
        predict: |e, _| matches!(family(e)?, FamilySpec::Cycle(_)).then(|| exact(2)),
    },
    Rule {
        name: "book",
        statement: "dem(B_q) = 2",
        predict: |e, _| matches!(family(e)?, FamilySpec::Book(_)).then(|| exact(2)),
    },
    Rule {
        name: "hypercube",
        statement: "dem(Q_d) = 2^(d-1)",
        predict: |e, _| match family(e)? {
            FamilySpec::Hypercube(d) => Some(exact(1 << (d - 1))),
            _ => None,
        },
    },
    Rule {
        name: "apex",
        statement: "c(G) <= dem(G + K_1) <= c(G) + 1 with equality on the left when rad(G) >= 4",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Join, f)?;
            let other = match (g.order, h.order) {
                (_, 1) => g,
                (1, _) => h,
                _ => return None,
            };
            if other.radius >= 4 {
                Some(exact(other.cover))
            } else {
                interval(other.cover, other.cover + 1)
            }
        },
    },
    Rule {
        name: "join",
        statement: "dem(G + H) = min(c(G) + n; c(H) + m)",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Join, f)?;
            (g.order >= 2 && h.order >= 2).then(|| exact((g.cover + h.order).min(h.cover + g.order)))
        },
    },
    Rule {
        name: "corona",
        statement: "dem(G * H) = m c(H)",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Corona, f)?;
            (g.order >= 2 && h.order >= 2).then(|| exact(g.order * h.cover))
        },
    },
    Rule {
        name: "cluster",
        statement: "dem(G o H) = dem(G) iff H is a tree; otherwise dem(G) + 1 <= dem(G o H) <= m dem(H)",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cluster, f)?;
            if g.order < 2 || h.order < 2 {
                None
            } else if h.is_tree {
                Some(exact(g.dem))
            } else {
                interval(g.dem + 1, g.order * h.dem)
            }
        },
    },
    Rule {
        name: "cartesian-trees",
        statement: "dem(T_1 x T_2) = max(m; n) for trees",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            (g.is_tree && h.is_tree && g.order >= 2 && h.order >= 2).then(|| exact(g.order.max(h.order)))
        },
    },
    Rule {
        name: "cartesian-tree-cycle",
        statement: "dem(T x C_n) = n if n >= 2m + 1 and 2m otherwise",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            let (tree, cycle) = match (g.is_tree && g.order >= 2 && h.is_cycle, h.is_tree && h.order >= 2 && g.is_cycle) {
                (true, _) => (g, h),
                (_, true) => (h, g),
                _ => return None,
            };
            let (m, n) = (tree.order, cycle.order);
            Some(exact(if n > 2 * m { n } else { 2 * m }))
        },
    },
    Rule {
        name: "cartesian-cycles",
        statement: "dem(C_m x C_n) = max(2m; 2n)",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            (g.is_cycle && h.is_cycle).then(|| exact(2 * g.order.max(h.order)))
        },
    },
    Rule {
        name: "cartesian-complete",
        statement: "dem(K_m x K_n) = mn - min(m; n) for m; n >= 3",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            (g.is_complete && h.is_complete && g.order >= 3 && h.order >= 3)
                .then(|| exact(g.order * h.order - g.order.min(h.order)))
        },
    },
    Rule {
        name: "cartesian-books",
        statement: "dem(B_p x B_q) = 2p + 2q + 4",
        predict: |e, _| {
            let spec = e.as_product().filter(|p| p.op == ProductOp::Cartesian)?;
            match (spec.left.as_family()?, spec.right.as_family()?) {
                (FamilySpec::Book(p), FamilySpec::Book(q)) => Some(exact(2 * p + 2 * q + 4)),
                _ => None,
            }
        },
    },
    Rule {
        name: "cartesian-book-factor",
        statement: "dem(G x B_q) = 2m + (q + 2) dem(G) - 2 dem(G)",
        predict: |e, f| {
            let spec = e.as_product().filter(|p| p.op == ProductOp::Cartesian)?;
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            let (other, q) = match (spec.left.as_family(), spec.right.as_family()) {
                (_, Some(FamilySpec::Book(q))) => (g, *q),
                (Some(FamilySpec::Book(q)), _) => (h, *q),
                _ => return None,
            };
            Some(exact(2 * other.order + (q + 2) * other.dem - 2 * other.dem))
        },
    },
    Rule {
        name: "cartesian-unique-minimum-set",
        statement: "dem(G x H) = m dem(H) + n dem(G) - dem(G) dem(H) when G or H has a unique minimum DEM set",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            (g.has_unique_minimum_set() || h.has_unique_minimum_set()).then(|| exact(cartesian_upper(g, h)))
        },
    },
    Rule {
        name: "cartesian-bounds",
        statement: "max(m dem(H); n dem(G)) <= dem(G x H) <= m dem(H) + n dem(G) - dem(G) dem(H)",
        predict: |e, f| {
            let [g, h] = product(e, ProductOp::Cartesian, f)?;
            interval(cartesian_lower(g, h), cartesian_upper(g, h))
        },
    },
];

/// `m dem(H) + n dem(G) - dem(G) dem(H)` for `G` of order `m`.
pub fn cartesian_upper(g: &FactorFacts, h: &FactorFacts) -> usize {
    g.order * h.dem + h.order * g.dem - g.dem * h.dem
}

/// `max(m dem(H), n dem(G))` for `G` of order `m`.
pub fn cartesian_lower(g: &FactorFacts, h: &FactorFacts) -> usize {
    (g.order * h.dem).max(h.order * g.dem)
}

pub fn rule(name: &str) -> Option<&'static Rule> {
    REGISTRY.iter().find(|r| r.name == name)
}

/// First matching rule. `facts` must be empty for a family and hold the
/// left and right factor facts for a product.
pub fn predicted_dem(expr: &GraphExpr, facts: &[FactorFacts]) -> Result<Prediction> {
    REGISTRY
        .iter()
        .find_map(|r| {
            (r.predict)(expr, facts).map(|value| Prediction {
                value,
                rule: r.name,
                statement: r.statement,
            })
        })
        .ok_or_else(|| Error::NotInRegistry(expr.to_string()))
}

fn exact(v: usize) -> PredictedValue {
    PredictedValue::exact(v)
}

fn interval(lower: usize, upper: usize) -> Option<PredictedValue> {
    PredictedValue::interval(lower, upper)
}

fn family(e: &GraphExpr) -> Option<&FamilySpec> {
    e.as_family()
}

fn product<'a>(e: &GraphExpr, op: ProductOp, facts: &'a [FactorFacts]) -> Option<[&'a FactorFacts; 2]> {
    match (e.as_product(), facts) {
        (Some(p), [g, h]) if p.op == op => Some([g, h]),
        _ => None,
    }
}
