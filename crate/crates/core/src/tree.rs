//! Breadth-first enumeration of integral points under Viète moves, the
//! Frobenius uniqueness scan, and fundamental points of sections.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeSurface {
    Fricke,
    DoubleFricke,
}

impl TreeSurface {
    pub fn contains(self, t: &[BigInt; 3]) -> bool {
        let [x, y, z] = t;
        match self {
            Self::Fricke => x * x + y * y + z * z == BigInt::from(3) * x * y * z,
            Self::DoubleFricke => {
                let s = x + y + z;
                &s * &s == BigInt::from(9) * x * y * z
            }
        }
    }

    /// The other root in coordinate `slot`.
    pub fn vieta(self, t: &[BigInt; 3], slot: usize) -> [BigInt; 3] {
        let mut out = t.clone();
        let b = &t[(slot + 1) % 3];
        let c = &t[(slot + 2) % 3];
        out[slot] = match self {
            Self::Fricke => BigInt::from(3) * b * c - &t[slot],
            Self::DoubleFricke => BigInt::from(9) * b * c - 2 * b - 2 * c - &t[slot],
        };
        out
    }
}

impl fmt::Display for TreeSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fricke => "fricke",
            Self::DoubleFricke => "double-fricke",
        })
    }
}

/// Which slot of the sorted parent triple `(a ≤ b ≤ c)` was replaced:
/// `R` the smallest, `L` the middle, `P` the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    R,
    L,
    P,
}

impl Move {
    const BY_SLOT: [Move; 3] = [Move::R, Move::L, Move::P];
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::R => "R",
            Self::L => "L",
            Self::P => "P",
        })
    }
}

/// A triple sorted ascending, tagged with its surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTriple {
    pub surface: TreeSurface,
    pub values: [BigInt; 3],
}

impl CanonicalTriple {
    pub fn new(surface: TreeSurface, mut values: [BigInt; 3]) -> Result<Self> {
        if !surface.contains(&values) {
            return Err(Error::NotOnSurface(join(&values)));
        }
        values.sort();
        Ok(Self { surface, values })
    }

    pub fn largest_abs(&self) -> BigInt {
        self.values.iter().map(Signed::abs).max().expect("three values")
    }
}

impl fmt::Display for CanonicalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.values))
    }
}

fn join(values: &[BigInt; 3]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub triple: [BigInt; 3],
    pub parent: Option<[BigInt; 3]>,
    pub edge: Option<Move>,
    pub depth: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    Depth(u32),
    /// Children whose largest absolute component exceeds the bound are pruned.
    MaxComponent(u64),
}

/// Breadth-first closure of `root` under the three Viète moves, deduplicated
/// by sorted triple and ordered by `(depth, triple)`.
pub fn generate(surface: TreeSurface, root: [BigInt; 3], limit: Limit) -> Result<Vec<TreeNode>> {
    if !surface.contains(&root) {
        return Err(Error::RootOffSurface(join(&root)));
    }
    let mut root = root;
    root.sort();
    let bound = match limit {
        Limit::MaxComponent(b) => Some(BigInt::from(b)),
        Limit::Depth(_) => None,
    };
    let max_depth = match limit {
        Limit::Depth(d) => Some(d),
        Limit::MaxComponent(_) => None,
    };
    let within = |t: &[BigInt; 3]| bound.as_ref().is_none_or(|b| t.iter().all(|v| v.abs() <= *b));
    if !within(&root) {
        return Ok(Vec::new());
    }

    let mut seen: HashSet<[BigInt; 3]> = HashSet::from([root.clone()]);
    let mut out = vec![TreeNode { triple: root.clone(), parent: None, edge: None, depth: 0 }];
    let mut frontier = vec![root];
    let mut depth = 0;
    while !frontier.is_empty() && max_depth.is_none_or(|d| depth < d) {
        depth += 1;
        let expanded: Vec<Vec<([BigInt; 3], Move)>> = frontier
            .par_iter()
            .map(|t| {
                (0..3)
                    .map(|slot| {
                        let mut child = surface.vieta(t, slot);
                        child.sort();
                        (child, Move::BY_SLOT[slot])
                    })
                    .filter(|(child, _)| within(child))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (parent, children) in frontier.iter().zip(expanded) {
            for (child, edge) in children {
                if seen.insert(child.clone()) {
                    next.push(TreeNode { triple: child, parent: Some(parent.clone()), edge: Some(edge), depth });
                }
            }
        }
        next.sort_by(|a, b| a.triple.cmp(&b.triple));
        frontier = next.iter().map(|n| n.triple.clone()).collect();
        out.extend(next);
    }
    Ok(out)
}

/// Triples grouped by their largest absolute component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub by_largest: BTreeMap<BigInt, Vec<[BigInt; 3]>>,
}

impl FrobeniusReport {
    pub fn from_triples<'a>(triples: impl IntoIterator<Item = &'a [BigInt; 3]>) -> Self {
        let mut by_largest: BTreeMap<BigInt, Vec<[BigInt; 3]>> = BTreeMap::new();
        for t in triples {
            let key = t.iter().map(Signed::abs).max().expect("three values");
            by_largest.entry(key).or_default().push(t.clone());
        }
        for list in by_largest.values_mut() {
            list.sort();
        }
        Self { by_largest }
    }

    pub fn triple_count(&self) -> usize {
        self.by_largest.values().map(Vec::len).sum()
    }

    /// Keys shared by more than one triple.
    pub fn duplicates(&self) -> Vec<(&BigInt, &Vec<[BigInt; 3]>)> {
        self.by_largest.iter().filter(|(_, v)| v.len() > 1).collect()
    }
}

/// All positive Markov triples with largest component at most `max_component`.
pub fn frobenius_scan(max_component: u64) -> FrobeniusReport {
    let one = BigInt::one();
    let nodes = generate(TreeSurface::Fricke, [one.clone(), one.clone(), one], Limit::MaxComponent(max_component))
        .expect("(1,1,1) is a Markov triple");
    FrobeniusReport::from_triples(nodes.iter().map(|n| &n.triple))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalPoint {
    pub triple: CanonicalTriple,
    /// Whether no other positive triple has the same largest component.
    pub unique: bool,
}

/// A positive Markov triple whose largest component is `n0`.
pub fn fundamental_point(n0: u64) -> Result<FundamentalPoint> {
    let report = frobenius_scan(n0);
    let list = report.by_largest.get(&BigInt::from(n0)).ok_or_else(|| Error::NotAMarkovNumber(n0.to_string()))?;
    let triple = CanonicalTriple::new(TreeSurface::Fricke, list[0].clone())?;
    Ok(FundamentalPoint { triple, unique: list.len() == 1 })
}
