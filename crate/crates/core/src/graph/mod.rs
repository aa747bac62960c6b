//! Vertex-indexed multigraphs with stable edge identifiers.
//!
//! Parallel edges are allowed and counted with multiplicity; loops are
//! rejected at construction time.

mod generate;
mod query;
pub mod text;

pub use generate::{generate, Family, DEFAULT_RETRY_BUDGET};
pub use query::{CycleComponent, TwoRegularProfile};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    /// For an edge of a doubled graph: the id of the source edge it copies.
    pub origin: Option<EdgeId>,
}

impl EdgeRecord {
    /// The endpoint opposite `w`. `w` must be an endpoint.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            debug_assert_eq!(self.v, w);
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<EdgeRecord>,
    adj: Vec<Vec<EdgeId>>,
}

/// A subgraph together with the maps back into its parent.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub graph: MultiGraph,
    /// `vertex_map[i]` is the parent vertex of local vertex `i`.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[i]` is the parent edge id of local edge `i`.
    pub edge_map: Vec<EdgeId>,
}

impl MultiGraph {
    /// Builds a graph on `n` vertices with edges in input order.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::with_origins(n, pairs.iter().map(|&(u, v)| (u, v, None)))
    }

    pub(crate) fn with_origins<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Option<EdgeId>)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameters("graph needs at least one vertex".into()));
        }
        let mut g = MultiGraph { n, edges: Vec::new(), adj: vec![Vec::new(); n] };
        for (u, v, origin) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let id = g.edges.len();
            g.edges.push(EdgeRecord { id, u, v, origin });
            g.adj[u].push(id);
            g.adj[v].push(id);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &EdgeRecord {
        &self.edges[id]
    }

    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    /// Edge ids incident to `v`, in insertion order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Spanning subgraph on the listed edges; local edge `i` is `ids[i]`.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Restriction {
        let graph = MultiGraph::with_origins(
            self.n,
            ids.iter().map(|&id| (self.edges[id].u, self.edges[id].v, None)),
        )
        .expect("edges of a valid graph");
        Restriction { graph, vertex_map: (0..self.n).collect(), edge_map: ids.to_vec() }
    }

    /// Subgraph induced by a vertex set (normally a connected component).
    pub fn induced(&self, vertices: &[Vertex]) -> Restriction {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut pairs = Vec::new();
        for e in &self.edges {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                edge_map.push(e.id);
                pairs.push((local[e.u], local[e.v]));
            }
        }
        let graph = MultiGraph::new(vertices.len().max(1), &pairs).expect("induced edges are valid");
        Restriction { graph, vertex_map: vertices.to_vec(), edge_map }
    }

    /// Edge ids not in `ids`, ascending.
    pub fn complement_edges(&self, ids: &[EdgeId]) -> Vec<EdgeId> {
        let mut used = vec![false; self.m()];
        for &id in ids {
            used[id] = true;
        }
        (0..self.m()).filter(|&id| !used[id]).collect()
    }

    /// Degree of every vertex within the edge set `ids`.
    pub fn degrees_in(&self, ids: &[EdgeId]) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &id in ids {
            deg[self.edges[id].u] += 1;
            deg[self.edges[id].v] += 1;
        }
        deg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = MultiGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edge(2).u, 2);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn parallel_edges_count_twice() {
        let g = MultiGraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2]);
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert_eq!(MultiGraph::new(2, &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(MultiGraph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert!(MultiGraph::new(0, &[]).is_err());
    }

    #[test]
    fn induced_keeps_parent_ids() {
        let g = MultiGraph::new(5, &[(0, 1), (3, 4), (1, 2), (2, 0)]).unwrap();
        let r = g.induced(&[0, 1, 2]);
        assert_eq!(r.graph.m(), 3);
        assert_eq!(r.edge_map, vec![0, 2, 3]);
    }
}
