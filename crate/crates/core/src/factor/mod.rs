//! Factor machinery: edge doubling, Euler circuits, 2-factorizations of
//! even-regular multigraphs and exact f-factor extraction.

mod ffactor;
pub mod matching;

pub use ffactor::{
    degree_factor, exhaustive_degree_factor, f_factor, f_factor_with, mod3_factor, mod3_factor_with,
    FactorOptions,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Vertex};

/// A list of edge-disjoint spanning regular subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDecomposition {
    pub parts: Vec<Vec<EdgeId>>,
    pub degrees: Vec<usize>,
}

impl FactorDecomposition {
    /// Checks disjointness and per-part regularity; with `complete`, also
    /// that the parts cover every edge of `g`.
    pub fn validate(&self, g: &MultiGraph, complete: bool) -> Result<()> {
        if self.parts.len() != self.degrees.len() {
            return Err(Error::Precondition("parts and degrees differ in length".into()));
        }
        let mut owner = vec![false; g.m()];
        for (part, &h) in self.parts.iter().zip(&self.degrees) {
            for &id in part {
                if id >= g.m() || std::mem::replace(&mut owner[id], true) {
                    return Err(Error::Precondition(format!("edge {id} repeated or unknown")));
                }
            }
            if g.degrees_in(part).iter().any(|&d| d != h) {
                return Err(Error::Precondition(format!("part is not {h}-regular")));
            }
        }
        if complete && owner.iter().any(|&o| !o) {
            return Err(Error::Precondition("parts do not cover every edge".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        crate::json::to_sorted_string(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `G` with every edge duplicated. In the doubled graph edge `i` is the copy
/// of source edge `i` and edge `m + i` is its duplicate.
#[derive(Clone, Debug)]
pub struct DoublingMap {
    pub source: MultiGraph,
    pub doubled: MultiGraph,
    /// `pairs[i] = (copy, duplicate)` for source edge `i`.
    pub pairs: Vec<(EdgeId, EdgeId)>,
}

impl DoublingMap {
    /// Source edge behind a doubled-graph edge.
    pub fn source_of(&self, doubled_edge: EdgeId) -> EdgeId {
        self.doubled.edge(doubled_edge).origin.expect("doubled edges carry an origin")
    }
}

pub fn double_graph(g: &MultiGraph) -> DoublingMap {
    let m = g.m();
    let edges = g.edges().iter().chain(g.edges()).map(|e| (e.u, e.v, Some(e.id)));
    let doubled = MultiGraph::with_origins(g.n(), edges).expect("source edges are valid");
    DoublingMap { source: g.clone(), doubled, pairs: (0..m).map(|i| (i, m + i)).collect() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Traversal {
    pub edge: EdgeId,
    pub from: Vertex,
    pub to: Vertex,
}

/// A closed walk using every edge of one component exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCircuit {
    pub component: Vec<Vertex>,
    pub steps: Vec<Traversal>,
}

/// Hierholzer's algorithm on the component spanned by `component`.
pub fn euler_circuit(g: &MultiGraph, component: &[Vertex]) -> Result<EulerCircuit> {
    for &v in component {
        if g.degree(v) % 2 == 1 {
            return Err(Error::OddDegree(v));
        }
    }
    let mut comp: Vec<Vertex> = component.to_vec();
    comp.sort_unstable();
    comp.dedup();
    let Some(&start) = comp.first() else {
        return Ok(EulerCircuit { component: comp, steps: Vec::new() });
    };
    if !g.components().contains(&comp) {
        return Err(Error::Disconnected);
    }
    let mut used = vec![false; g.m()];
    let mut next_slot = vec![0usize; g.n()];
    // stack of (vertex, edge used to arrive)
    let mut stack: Vec<(Vertex, Option<Traversal>)> = vec![(start, None)];
    let mut reversed = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        let incident = g.incident(v);
        while next_slot[v] < incident.len() && used[incident[next_slot[v]]] {
            next_slot[v] += 1;
        }
        if next_slot[v] == incident.len() {
            let (_, arrived) = stack.pop().expect("non-empty");
            if let Some(t) = arrived {
                reversed.push(t);
            }
        } else {
            let e = incident[next_slot[v]];
            used[e] = true;
            let w = g.edge(e).other(v);
            stack.push((w, Some(Traversal { edge: e, from: v, to: w })));
        }
    }
    reversed.reverse();
    Ok(EulerCircuit { component: comp, steps: reversed })
}

/// Splits a `2r`-regular multigraph into `r` edge-disjoint 2-factors.
///
/// Each component's Euler circuit is oriented, giving every vertex `r` out-
/// and `r` in-edges; the out/in incidence graph is `r`-regular bipartite and
/// peels into `r` perfect matchings, each of which is a 2-factor.
pub fn two_factorization(g: &MultiGraph) -> Result<FactorDecomposition> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    if d % 2 == 1 {
        return Err(Error::Precondition(format!("graph is {d}-regular, not even-regular")));
    }
    let r = d / 2;
    let mut parts = vec![Vec::new(); r];
    for comp in g.components() {
        let circuit = euler_circuit(g, &comp)?;
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let arcs: Vec<(usize, usize)> = circuit.steps.iter().map(|t| (local[t.from], local[t.to])).collect();
        let mut available = vec![true; arcs.len()];
        for part in parts.iter_mut() {
            let chosen = matching::bipartite_perfect_matching(comp.len(), &arcs, &available)
                .expect("regular bipartite graphs have perfect matchings");
            for arc in chosen {
                available[arc] = false;
                part.push(circuit.steps[arc].edge);
            }
        }
    }
    for part in parts.iter_mut() {
        part.sort_unstable();
    }
    Ok(FactorDecomposition { parts, degrees: vec![2; r] })
}

/// A `2h`-factor (union of `h` 2-factors) and its complementary factor.
pub fn extract_2h_factor(g: &MultiGraph, h: usize) -> Result<FactorDecomposition> {
    let two = two_factorization(g)?;
    let r = two.parts.len();
    if h == 0 || h > r {
        return Err(Error::DegreeOutOfRange { h, max: r });
    }
    let mut first: Vec<EdgeId> = two.parts[..h].concat();
    first.sort_unstable();
    let rest = g.complement_edges(&first);
    Ok(FactorDecomposition { parts: vec![first, rest], degrees: vec![2 * h, 2 * (r - h)] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn k(n: usize) -> MultiGraph {
        generate(&Family::Complete { n }, None).unwrap()
    }

    #[test]
    fn doubling_degrees() {
        let c3 = generate(&Family::Cycle { n: 3 }, None).unwrap();
        let d = double_graph(&c3);
        assert_eq!((d.doubled.m(), d.doubled.regularity()), (6, Some(4)));
        let d = double_graph(&k(6));
        assert_eq!((d.doubled.m(), d.doubled.regularity()), (30, Some(10)));
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap();
        let d = double_graph(&k2);
        assert_eq!(d.doubled.pairs(), vec![(0, 1), (0, 1)]);
        assert_eq!(d.source_of(1), 0);
    }

    #[test]
    fn euler_examples() {
        let c4 = generate(&Family::Cycle { n: 4 }, None).unwrap();
        let c = euler_circuit(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c.steps.len(), 4);
        let k5 = k(5);
        let c = euler_circuit(&k5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.steps.len(), 10);
        for w in c.steps.windows(2) {
            assert_eq!(w[0].to, w[1].from);
        }
        assert_eq!(c.steps.last().unwrap().to, c.steps[0].from);
        assert!(matches!(euler_circuit(&k(4), &[0, 1, 2, 3]), Err(Error::OddDegree(_))));
        assert!(matches!(euler_circuit(&c4, &[0, 1]), Err(Error::Disconnected)));
    }

    #[test]
    fn two_factorization_examples() {
        let f = two_factorization(&k(5)).unwrap();
        assert_eq!(f.parts.len(), 2);
        f.validate(&k(5), true).unwrap();
        let c3 = generate(&Family::Cycle { n: 3 }, None).unwrap();
        let d = double_graph(&c3);
        let f = two_factorization(&d.doubled).unwrap();
        assert_eq!(f.parts.len(), 2);
        f.validate(&d.doubled, true).unwrap();
        let c6 = generate(&Family::Cycle { n: 6 }, None).unwrap();
        let f = two_factorization(&c6).unwrap();
        assert_eq!(f.parts, vec![(0..6).collect::<Vec<_>>()]);
        assert!(two_factorization(&k(4)).is_err());
    }

    #[test]
    fn extract_examples() {
        let d = double_graph(&k(6));
        let f = extract_2h_factor(&d.doubled, 1).unwrap();
        assert_eq!(f.degrees, vec![2, 8]);
        f.validate(&d.doubled, true).unwrap();
        let f = extract_2h_factor(&d.doubled, 2).unwrap();
        assert_eq!(f.degrees, vec![4, 6]);
        f.validate(&d.doubled, true).unwrap();
        let f = extract_2h_factor(&k(5), 2).unwrap();
        assert_eq!((f.parts[0].len(), f.parts[1].len()), (10, 0));
        assert!(extract_2h_factor(&k(5), 3).is_err());
        assert!(extract_2h_factor(&k(5), 0).is_err());
    }

    #[test]
    fn decomposition_json_shape() {
        let f = FactorDecomposition { parts: vec![vec![0, 1], vec![2]], degrees: vec![2, 1] };
        let text = f.to_json();
        assert!(text.ends_with('\n'));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["degrees"], serde_json::json!([2, 1]));
        assert_eq!(FactorDecomposition::from_json(&text).unwrap(), f);
    }
}
