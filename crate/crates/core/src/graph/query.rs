use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeId, MultiGraph, Vertex};
use crate::error::{Error, Result};

/// One cycle of a 2-regular graph, listed in walk order: `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleComponent {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl CycleComponent {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoRegularProfile {
    pub cycles: Vec<CycleComponent>,
    pub has_odd_cycle: bool,
}

impl TwoRegularProfile {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(CycleComponent::len).collect()
    }
}

impl MultiGraph {
    /// The common degree, if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in self.incident(u) {
                    let w = self.edge(e).other(u);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Decomposes a 2-regular graph into its cycles.
    pub fn two_regular_profile(&self) -> Result<TwoRegularProfile> {
        if self.regularity() != Some(2) {
            return Err(Error::Precondition("graph is not 2-regular".into()));
        }
        let mut cycles = Vec::new();
        for comp in self.components() {
            let start = comp[0];
            let mut vertices = vec![start];
            let mut edges = Vec::new();
            let mut prev = self.incident(start)[0];
            let mut at = self.edge(prev).other(start);
            edges.push(prev);
            while at != start {
                vertices.push(at);
                let next = *self.incident(at).iter().find(|&&e| e != prev).expect("degree two");
                edges.push(next);
                at = self.edge(next).other(at);
                prev = next;
            }
            cycles.push(CycleComponent { vertices, edges });
        }
        let has_odd_cycle = cycles.iter().any(CycleComponent::is_odd);
        Ok(TwoRegularProfile { cycles, has_odd_cycle })
    }

    /// Exact edge connectivity: the minimum over `t` of the max-flow between
    /// vertex 0 and `t` with unit capacities. Zero iff disconnected.
    pub fn edge_connectivity(&self) -> usize {
        if self.n() < 2 {
            return 0;
        }
        let bound = self.min_degree();
        (1..self.n()).map(|t| self.max_flow(0, t, bound)).min().unwrap_or(0)
    }

    /// Cut-edges, ascending. An edge is a bridge when its endpoints fall
    /// apart without it; parallel edges are never bridges.
    pub fn bridges(&self) -> Vec<EdgeId> {
        (0..self.m())
            .filter(|&skip| {
                let (s, t) = (self.edge(skip).u, self.edge(skip).v);
                let mut seen = vec![false; self.n()];
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for &e in self.incident(u) {
                        let w = self.edge(e).other(u);
                        if e != skip && !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                !seen[t]
            })
            .collect()
    }

    /// Unit-capacity max-flow, stopping once `cap` units have been routed.
    fn max_flow(&self, s: Vertex, t: Vertex, cap: usize) -> usize {
        // arc 2e runs u -> v, arc 2e + 1 runs v -> u; each has capacity 1
        let mut flow = vec![0i8; 2 * self.m()];
        let mut total = 0;
        while total < cap {
            let mut via: Vec<Option<usize>> = vec![None; self.n()];
            let mut seen = vec![false; self.n()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in self.incident(u) {
                    let rec = self.edge(e);
                    let arc = if rec.u == u { 2 * e } else { 2 * e + 1 };
                    let w = rec.other(u);
                    if !seen[w] && flow[arc] < 1 {
                        seen[w] = true;
                        via[w] = Some(arc);
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut at = t;
            while let Some(arc) = via[at] {
                flow[arc] += 1;
                flow[arc ^ 1] -= 1;
                let rec = self.edge(arc / 2);
                at = if arc % 2 == 0 { rec.u } else { rec.v };
            }
            total += 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{generate, Family, MultiGraph};

    fn cycle(n: usize) -> MultiGraph {
        generate(&Family::Cycle { n }, None).unwrap()
    }

    fn union(parts: Vec<Family>) -> MultiGraph {
        generate(&Family::DisjointUnion { parts }, None).unwrap()
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(cycle(4).regularity(), Some(2));
        assert_eq!(generate(&Family::Complete { n: 5 }, None).unwrap().regularity(), Some(4));
        let path = MultiGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.regularity(), None);
    }

    #[test]
    fn components_examples() {
        let g = union(vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }]);
        let sizes: Vec<_> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(generate(&Family::Complete { n: 4 }, None).unwrap().components().len(), 1);
        assert_eq!(MultiGraph::new(2, &[]).unwrap().components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn two_regular_profiles() {
        let p = cycle(6).two_regular_profile().unwrap();
        assert_eq!((p.lengths(), p.has_odd_cycle), (vec![6], false));
        let g = union(vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }]);
        let p = g.two_regular_profile().unwrap();
        assert_eq!((p.lengths(), p.has_odd_cycle), (vec![3, 4], true));
        let digon = MultiGraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let p = digon.two_regular_profile().unwrap();
        assert_eq!((p.lengths(), p.has_odd_cycle), (vec![2], false));
        assert!(generate(&Family::Complete { n: 4 }, None).unwrap().two_regular_profile().is_err());
    }

    #[test]
    fn cycle_walk_is_consistent() {
        let p = cycle(5).two_regular_profile().unwrap();
        let c = &p.cycles[0];
        let g = cycle(5);
        for i in 0..c.len() {
            let e = g.edge(c.edges[i]);
            let (a, b) = (c.vertices[i], c.vertices[(i + 1) % c.len()]);
            assert!((e.u, e.v) == (a, b) || (e.u, e.v) == (b, a));
        }
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(generate(&Family::Complete { n: 4 }, None).unwrap().edge_connectivity(), 3);
        assert_eq!(cycle(5).edge_connectivity(), 2);
        let g = union(vec![Family::Cycle { n: 3 }, Family::Cycle { n: 3 }]);
        assert_eq!(g.edge_connectivity(), 0);
        assert_eq!(generate(&Family::Petersen, None).unwrap().edge_connectivity(), 3);
        let bridge = MultiGraph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(bridge.edge_connectivity(), 1);
    }

    #[test]
    fn bridges_examples() {
        let bridge = MultiGraph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(bridge.bridges(), vec![3]);
        assert!(cycle(5).bridges().is_empty());
        let digon = MultiGraph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(digon.bridges(), vec![2]);
    }
}
