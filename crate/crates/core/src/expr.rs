//! Graph expressions: a family, or a binary product of two expressions.
//!
//! ```text
//! expr    := family | op "(" expr SEP expr [SEP "root=" int] ")"
//! op      := "join" | "corona" | "cluster" | "cartesian"
//! SEP     := "," | ";"
//! ```
//!
//! A leading `gen=` is accepted and ignored, so CLI arguments can be passed
//! through unchanged. `;` is an alternative separator that keeps names free
//! of commas inside CSV reports.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexId};
use crate::products::{self, ProductOp, ProductVertexMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    pub op: ProductOp,
    pub left: GraphExpr,
    pub right: GraphExpr,
    /// Cluster root in `right`; `None` means vertex 0.
    pub root: Option<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Family(FamilySpec),
    Product(Box<ProductSpec>),
}

impl From<FamilySpec> for GraphExpr {
    fn from(spec: FamilySpec) -> Self {
        GraphExpr::Family(spec)
    }
}

impl GraphExpr {
    pub fn product(op: ProductOp, left: impl Into<GraphExpr>, right: impl Into<GraphExpr>) -> Self {
        GraphExpr::Product(Box::new(ProductSpec {
            op,
            left: left.into(),
            right: right.into(),
            root: None,
        }))
    }

    pub fn cartesian(left: impl Into<GraphExpr>, right: impl Into<GraphExpr>) -> Self {
        Self::product(ProductOp::Cartesian, left, right)
    }

    pub fn join(left: impl Into<GraphExpr>, right: impl Into<GraphExpr>) -> Self {
        Self::product(ProductOp::Join, left, right)
    }

    pub fn corona(left: impl Into<GraphExpr>, right: impl Into<GraphExpr>) -> Self {
        Self::product(ProductOp::Corona, left, right)
    }

    pub fn cluster(left: impl Into<GraphExpr>, right: impl Into<GraphExpr>, root: Option<VertexId>) -> Self {
        GraphExpr::Product(Box::new(ProductSpec {
            op: ProductOp::Cluster,
            left: left.into(),
            right: right.into(),
            root,
        }))
    }

    pub fn as_family(&self) -> Option<&FamilySpec> {
        match self {
            GraphExpr::Family(f) => Some(f),
            GraphExpr::Product(_) => None,
        }
    }

    pub fn as_product(&self) -> Option<&ProductSpec> {
        match self {
            GraphExpr::Family(_) => None,
            GraphExpr::Product(p) => Some(p),
        }
    }

    /// Order of the graph this expression builds, without building it.
    pub fn order(&self) -> usize {
        match self {
            GraphExpr::Family(f) => f.order(),
            GraphExpr::Product(p) => {
                let (m, n) = (p.left.order(), p.right.order());
                match p.op {
                    ProductOp::Join => m + n,
                    ProductOp::Corona => m * (n + 1),
                    ProductOp::Cluster | ProductOp::Cartesian => m * n,
                }
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.build_with_map().map(|(g, _)| g)
    }

    /// Builds the graph; products also return their vertex map.
    pub fn build_with_map(&self) -> Result<(Graph, Option<ProductVertexMap>)> {
        match self {
            GraphExpr::Family(f) => Ok((f.generate()?, None)),
            GraphExpr::Product(p) => {
                let g = p.left.build()?;
                let h = p.right.build()?;
                let (graph, map) = match p.op {
                    ProductOp::Join => products::join(&g, &h),
                    ProductOp::Corona => products::corona(&g, &h),
                    ProductOp::Cluster => products::cluster(&g, &h, p.root)?,
                    ProductOp::Cartesian => products::cartesian(&g, &h),
                };
                Ok((graph, Some(map)))
            }
        }
    }

    /// Same as `Display` but with `;` separators, for CSV fields.
    pub fn compact(&self) -> String {
        self.to_string().replace(',', ";")
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Family(spec) => write!(f, "{spec}"),
            GraphExpr::Product(p) => {
                write!(f, "{}({},{}", p.op, p.left, p.right)?;
                if let Some(root) = p.root {
                    write!(f, ",root={root}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for GraphExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix("gen=").unwrap_or(body);
        parse_expr(body).map_err(|e| match e {
            Error::Expr { reason, .. } => Error::Expr {
                expr: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

fn expr_error(expr: &str, reason: impl Into<String>) -> Error {
    Error::Expr {
        expr: expr.to_string(),
        reason: reason.into(),
    }
}

fn parse_expr(s: &str) -> Result<GraphExpr> {
    let s = s.trim();
    let Some(open) = s.find('(') else {
        return Ok(GraphExpr::Family(s.parse()?));
    };
    let op = match s[..open].trim() {
        "join" => ProductOp::Join,
        "corona" => ProductOp::Corona,
        "cluster" => ProductOp::Cluster,
        "cartesian" => ProductOp::Cartesian,
        other => return Err(expr_error(s, format!("unknown operation `{other}`"))),
    };
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| expr_error(s, "missing closing parenthesis"))?;
    let args = split_top_level(inner).ok_or_else(|| expr_error(s, "unbalanced parentheses"))?;

    let root = match (op, args.len()) {
        (_, 2) => None,
        (ProductOp::Cluster, 3) => {
            let tok = args[2].trim();
            let value = tok
                .strip_prefix("root=")
                .ok_or_else(|| expr_error(s, "third argument must be root=R"))?;
            Some(value.parse().map_err(|_| expr_error(s, "root must be a vertex id"))?)
        }
        _ => return Err(expr_error(s, format!("{op} takes two graph arguments"))),
    };
    Ok(GraphExpr::Product(Box::new(ProductSpec {
        op,
        left: parse_expr(args[0])?,
        right: parse_expr(args[1])?,
        root,
    })))
}

/// Splits on `,`/`;` at parenthesis depth zero.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' | ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}
