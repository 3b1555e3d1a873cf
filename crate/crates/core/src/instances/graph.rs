use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::limits;

/// A loopless multigraph whose edges are the ground set `{1..n}`, `n = ends.len()`.
/// Vertices are numbered `1..=vcount`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMultiGraph", into = "RawMultiGraph")]
pub struct MultiGraph {
    vcount: usize,
    ends: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawMultiGraph {
    vcount: usize,
    ends: Vec<[usize; 2]>,
}

impl TryFrom<RawMultiGraph> for MultiGraph {
    type Error = Error;

    fn try_from(raw: RawMultiGraph) -> Result<Self> {
        MultiGraph::new(
            raw.vcount,
            raw.ends.into_iter().map(|[u, v]| (u, v)).collect(),
        )
    }
}

impl From<MultiGraph> for RawMultiGraph {
    fn from(g: MultiGraph) -> Self {
        RawMultiGraph {
            vcount: g.vcount,
            ends: g.ends.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl MultiGraph {
    pub fn new(vcount: usize, ends: Vec<(usize, usize)>) -> Result<Self> {
        limits::check(ends.len(), limits::ARITHMETIC, "multigraph edge sets")?;
        for (i, &(u, v)) in ends.iter().enumerate() {
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "edge {} is a loop at vertex {u}",
                    i + 1
                )));
            }
            if u == 0 || v == 0 || u > vcount || v > vcount {
                return Err(Error::InvalidGraph(format!(
                    "edge {} = {{{u},{v}}} leaves 1..={vcount}",
                    i + 1
                )));
            }
        }
        Ok(MultiGraph { vcount, ends })
    }

    /// Number of edges, the size of the ground set.
    pub fn n(&self) -> usize {
        self.ends.len()
    }

    pub fn vcount(&self) -> usize {
        self.vcount
    }

    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }
}

/// Rank of the edge set `y`: vertices touched by `y` minus connected components of the
/// subgraph formed by exactly the edges of `y`. This equals the size of a spanning forest.
fn forest_size(g: &MultiGraph, y: Mask) -> i64 {
    let mut uf = UnionFind::<usize>::new(g.vcount);
    bits::positions(y)
        .into_iter()
        .filter(|&e| uf.union(g.ends[e].0 - 1, g.ends[e].1 - 1))
        .count() as i64
}

/// `rk_G(Y) = |V(G|Y)| - cc(G|Y)`, with `rk_G(∅) = 0`.
pub fn graphic_rank(g: &MultiGraph) -> BooleanFunction {
    BooleanFunction::from_fn(g.n(), |y| forest_size(g, y)).expect("edge count is within the cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let edge = MultiGraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(graphic_rank(&edge).values(), &[0, 1]);
        let parallel = MultiGraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(graphic_rank(&parallel).values(), &[0, 1, 1, 1]);
        let triangle = MultiGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(graphic_rank(&triangle).values(), &[0, 1, 1, 2, 1, 2, 2, 2]);
    }

    #[test]
    fn edges_outside_the_subset_do_not_count() {
        // Path 1-2-3 plus the chord 1-3: the subset {1-2, 2-3} spans 3 vertices with 2 edges.
        let g = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(graphic_rank(&g).at(0b011), 2);
        let star = MultiGraph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(graphic_rank(&star).values(), &[0, 1, 1, 2]);
    }

    #[test]
    fn validation() {
        assert!(MultiGraph::new(2, vec![(1, 1)]).is_err());
        assert!(MultiGraph::new(2, vec![(1, 3)]).is_err());
        assert!(serde_json::from_str::<MultiGraph>(r#"{"vcount":2,"ends":[[0,1]]}"#).is_err());
        let g: MultiGraph = serde_json::from_str(r#"{"vcount":3,"ends":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"vcount":3,"ends":[[1,2],[2,3]]}"#
        );
    }
}
