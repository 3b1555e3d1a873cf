use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::{theta, BooleanFunction};
use crate::limits;

/// A hypergraph on the vertices `{1..n}` with nonempty, pairwise distinct hyperedges.
///
/// Edges are kept sorted by bitmask. In JSON, edges are lists of 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Mask>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        limits::check(raw.n, limits::ARITHMETIC, "hypergraphs")?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for edge in &raw.edges {
            let mut mask: Mask = 0;
            for &v in edge {
                if v == 0 || v > raw.n {
                    return Err(Error::InvalidHypergraph(format!(
                        "vertex {v} outside 1..={}",
                        raw.n
                    )));
                }
                mask |= 1 << (v - 1);
            }
            edges.push(mask);
        }
        Hypergraph::new(raw.n, edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n: h.n,
            edges: h.edges.iter().map(|&e| bits::to_elements(e)).collect(),
        }
    }
}

impl Hypergraph {
    /// Duplicate edges are merged; the empty edge and out-of-range vertices are rejected.
    pub fn new(n: usize, mut edges: Vec<Mask>) -> Result<Self> {
        limits::check(n, limits::ARITHMETIC, "hypergraphs")?;
        let full = bits::full(n);
        for &e in &edges {
            if e == 0 {
                return Err(Error::InvalidHypergraph(
                    "the empty set is not a hyperedge".into(),
                ));
            }
            if e & !full != 0 {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:#b} leaves the vertex set"
                )));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    /// Vertices of `other` are placed after those of `self`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let shifted = other.edges.iter().map(|&e| e << self.n);
        Hypergraph::new(
            self.n + other.n,
            self.edges.iter().copied().chain(shifted).collect(),
        )
    }

    /// The hypergraph induced on `sub`, keeping the edges contained in `sub`, relabeled to
    /// `{1..|sub|}` in increasing order.
    pub fn restrict(&self, sub: Mask) -> Result<Hypergraph> {
        if sub & !bits::full(self.n) != 0 {
            return Err(Error::SubsetOutOfRange {
                mask: u64::from(sub),
                n: self.n,
            });
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & !sub == 0)
            .map(|&e| bits::compress(e, sub))
            .collect();
        Hypergraph::new(sub.count_ones() as usize, edges)
    }
}

/// `ι(H)`: 1 on hyperedges, 0 elsewhere.
pub fn iota(h: &Hypergraph) -> BooleanFunction {
    let mut values = vec![0i64; 1 << h.n];
    for &e in &h.edges {
        values[e as usize] = 1;
    }
    BooleanFunction::new(h.n, values).expect("hypergraph size is within the cap")
}

/// `γ(H) = θ₁(ι(H))`: the number of hyperedges contained in each subset.
pub fn gamma(h: &Hypergraph) -> BooleanFunction {
    theta(&iota(h), 1).expect("edge counts fit in 64 bits")
}

/// No bipartition of the vertices into two nonempty parts is crossed by no edge.
pub fn is_connected(h: &Hypergraph) -> Result<bool> {
    if h.n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut uf = UnionFind::<usize>::new(h.n);
    let mut merges = 0;
    for &e in &h.edges {
        let vs = bits::positions(e);
        for &v in &vs[1..] {
            if uf.union(vs[0], v) {
                merges += 1;
            }
        }
    }
    Ok(merges + 1 == h.n)
}
