//! Generators for the named graph families.
//!
//! Every family has a compact text form (`path:5`, `book:3`,
//! `randconn:8:1/3:seed=42`, ...) accepted by [`FamilySpec::from_str`] and
//! produced by its `Display` impl.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Rejection sampling budget for [`FamilySpec::RandomConnected`].
pub const RANDOM_CONNECTED_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `pages` triangles sharing the edge `(0, 1)`; page `i` is vertex `i + 2`.
    Book(usize),
    Hypercube(u32),
    /// Uniform labeled tree decoded from a seeded Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
    /// Erdős–Rényi `G(n, num/den)`, resampled until connected.
    RandomConnected { n: usize, num: u32, den: u32, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n < 1 => bad("order must be at least 1"),
            FamilySpec::Cycle(n) if n < 3 => bad("cycle order must be at least 3"),
            FamilySpec::CompleteBipartite(a, b) if a < 1 || b < 1 => bad("parts must be nonempty"),
            FamilySpec::Book(q) if q < 1 => bad("a book needs at least one page"),
            FamilySpec::Hypercube(d) if !(1..=24).contains(&d) => bad("dimension must be in 1..=24"),
            FamilySpec::RandomTree { n, .. } if n < 1 => bad("order must be at least 1"),
            FamilySpec::RandomConnected { n, num, den, .. } => {
                if n < 1 {
                    bad("order must be at least 1")
                } else if den == 0 || num > den {
                    bad("edge probability must be a fraction in [0, 1]")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::RandomTree { n, .. }
            | FamilySpec::RandomConnected { n, .. } => n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Book(q) => q + 2,
            FamilySpec::Hypercube(d) => 1 << d,
        }
    }

    /// True for families that only ever produce trees.
    pub fn is_tree_family(&self) -> bool {
        match *self {
            FamilySpec::Path(_) | FamilySpec::RandomTree { .. } => true,
            FamilySpec::Complete(n) => n <= 2,
            FamilySpec::CompleteBipartite(a, b) => a == 1 || b == 1,
            FamilySpec::Hypercube(d) => d == 1,
            _ => false,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Path(n) => Graph::new(n, (1..n).map(|v| (v - 1, v))),
            FamilySpec::Cycle(n) => Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))),
            FamilySpec::Complete(n) => Graph::new(n, all_pairs(n)),
            FamilySpec::CompleteBipartite(a, b) => {
                Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            FamilySpec::Book(q) => Graph::new(
                q + 2,
                std::iter::once((0, 1)).chain((2..q + 2).flat_map(|p| [(0, p), (1, p)])),
            ),
            FamilySpec::Hypercube(d) => {
                let n = 1usize << d;
                Graph::new(
                    n,
                    (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))),
                )
            }
            FamilySpec::RandomTree { n, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Graph::new(n, random_tree_edges(n, &mut rng))
            }
            FamilySpec::RandomConnected { n, num, den, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..RANDOM_CONNECTED_ATTEMPTS {
                    let edges: Vec<_> = all_pairs(n)
                        .filter(|_| rng.gen_ratio(num, den))
                        .collect();
                    match Graph::new(n, edges) {
                        Ok(g) => return Ok(g),
                        Err(Error::Disconnected { .. }) => continue,
                        Err(e) => return Err(e),
                    }
                }
                Err(Error::RetryBudgetExhausted {
                    attempts: RANDOM_CONNECTED_ATTEMPTS,
                })
            }
        }
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Decodes a uniformly random Prüfer sequence of length `n − 2`.
fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let mut rest = (0..n).filter(|&u| degree[u] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite:{a}:{b}"),
            FamilySpec::Book(q) => write!(f, "book:{q}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "randtree:{n}:seed={seed}"),
            FamilySpec::RandomConnected { n, num, den, seed } => {
                write!(f, "randconn:{n}:{num}/{den}:seed={seed}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Expr {
            expr: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.trim().split(':').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| err("missing parameter"))?
                .parse()
                .map_err(|_| err("expected a nonnegative integer"))
        };
        let seed = |i: usize| -> Result<u64> {
            let tok = parts.get(i).ok_or_else(|| err("random families need seed=S"))?;
            tok.strip_prefix("seed=")
                .ok_or_else(|| err("random families need seed=S"))?
                .parse()
                .map_err(|_| err("seed must be a 64-bit integer"))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(err(&format!("expected {} parameter(s)", k - 1)))
            }
        };

        let spec = match parts[0] {
            "path" => {
                arity(2)?;
                FamilySpec::Path(int(1)?)
            }
            "cycle" => {
                arity(2)?;
                FamilySpec::Cycle(int(1)?)
            }
            "complete" => {
                arity(2)?;
                FamilySpec::Complete(int(1)?)
            }
            "bipartite" | "complete_bipartite" => {
                arity(3)?;
                FamilySpec::CompleteBipartite(int(1)?, int(2)?)
            }
            "book" => {
                arity(2)?;
                FamilySpec::Book(int(1)?)
            }
            "hypercube" => {
                arity(2)?;
                let d = int(1)?;
                FamilySpec::Hypercube(u32::try_from(d).map_err(|_| err("dimension too large"))?)
            }
            "randtree" | "random_tree" => {
                arity(3)?;
                FamilySpec::RandomTree {
                    n: int(1)?,
                    seed: seed(2)?,
                }
            }
            "randconn" | "random_connected" => {
                arity(4)?;
                let (num, den) = parts[2]
                    .split_once('/')
                    .ok_or_else(|| err("edge probability must be written num/den"))?;
                let frac = |t: &str| t.trim().parse::<u32>().map_err(|_| err("bad probability"));
                FamilySpec::RandomConnected {
                    n: int(1)?,
                    num: frac(num)?,
                    den: frac(den)?,
                    seed: seed(3)?,
                }
            }
            other => return Err(err(&format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Every connected graph on vertices `0..n`, one per edge subset, in
/// increasing order of the subset bitmask over [`all_pairs`] order.
pub fn connected_labeled(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "labeled enumeration is limited to 7 vertices");
    let pairs: Vec<_> = all_pairs(n).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).ok()
        })
        .collect()
}

/// One representative of every isomorphism class of connected graphs of
/// order `n`.
pub fn connected_unlabeled(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "unlabeled enumeration is limited to 6 vertices");
    let mut perms = vec![];
    permutations(&mut (0..n).collect(), 0, &mut perms);
    let mut seen = std::collections::BTreeSet::new();
    connected_labeled(n)
        .into_iter()
        .filter(|g| {
            let canonical = perms
                .iter()
                .map(|p| {
                    let mut edges: Vec<_> = g
                        .edges()
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    edges.sort_unstable();
                    edges
                })
                .min()
                .unwrap_or_default();
            seen.insert(canonical)
        })
        .collect()
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}
