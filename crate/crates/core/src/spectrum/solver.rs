//! Exhaustive backtracking oracle for magic labelings over `Z_k`.
//!
//! Edges are fixed in BFS order, grouped by the vertex that discovers them,
//! so vertices close early. When an edge is the last open edge at an
//! endpoint, the only label that does not violate the target sum is forced;
//! every other value would be pruned on closing.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};
use crate::labeling::EdgeLabeling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverBudget {
    /// Instances with more edges are refused outright.
    pub max_edges: usize,
    /// Instances with `(k - 1)^m` at most this run without a node cap.
    pub exhaustive_limit: u64,
    /// Node cap per target sum for larger instances.
    pub max_nodes: u64,
    pub time_cap: Option<Duration>,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { max_edges: 64, exhaustive_limit: 10_000_000, max_nodes: 100_000_000, time_cap: None }
    }
}

impl SolverBudget {
    /// Default budget with the node cap taken from `MAGIC_SOLVER_BUDGET`
    /// when that variable holds a positive integer.
    pub fn from_env() -> Self {
        let mut budget = SolverBudget::default();
        if let Some(cap) = std::env::var("MAGIC_SOLVER_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
        {
            budget.max_nodes = cap;
        }
        budget
    }

    /// Whether the instance may be attempted at all: small enough in edges,
    /// or with a label space small enough to exhaust outright.
    pub fn admits(&self, g: &MultiGraph, k: u64) -> bool {
        g.m() <= self.max_edges || self.node_cap(g, k).is_none()
    }

    fn node_cap(&self, g: &MultiGraph, k: u64) -> Option<u64> {
        let mut space: u64 = 1;
        for _ in 0..g.m() {
            space = space.saturating_mul(k - 1);
            if space > self.exhaustive_limit {
                return Some(self.max_nodes);
            }
        }
        None
    }
}

/// A `c`-sum `k`-magic labeling of `g`, if one exists. Exact within budget.
pub fn solve_for_sum(g: &MultiGraph, k: u64, c: i64, budget: &SolverBudget) -> Result<Option<EdgeLabeling>> {
    if k < 2 {
        return Err(Error::Precondition("the solver works over Z_k with k >= 2".into()));
    }
    if !budget.admits(g, k) {
        return Err(Error::BudgetExceeded { nodes: 0 });
    }
    let order = edge_order(g);
    let mut closes = vec![(false, false); g.m()];
    let mut seen = vec![0usize; g.n()];
    for &id in &order {
        let e = g.edge(id);
        seen[e.u] += 1;
        seen[e.v] += 1;
        closes[id] = (seen[e.u] == g.degree(e.u), seen[e.v] == g.degree(e.v));
    }
    // an isolated vertex has sum 0 forever
    if c.rem_euclid(k as i64) != 0 && (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok(None);
    }
    let mut search = Search {
        g,
        k: k as i64,
        c: c.rem_euclid(k as i64),
        order,
        closes,
        sums: vec![0; g.n()],
        labels: vec![0; g.m()],
        nodes: 0,
        cap: budget.node_cap(g, k),
        deadline: budget.time_cap.map(|t| Instant::now() + t),
    };
    if search.run(0)? {
        Ok(Some(EdgeLabeling::new(k, search.labels)?))
    } else {
        Ok(None)
    }
}

/// BFS from each component root; each vertex contributes its not yet listed
/// incident edges when dequeued.
fn edge_order(g: &MultiGraph) -> Vec<EdgeId> {
    let mut listed = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.m());
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &e in g.incident(u) {
                if !listed[e] {
                    listed[e] = true;
                    order.push(e);
                }
                let w = g.edge(e).other(u);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a MultiGraph,
    k: i64,
    c: i64,
    order: Vec<EdgeId>,
    closes: Vec<(bool, bool)>,
    sums: Vec<i64>,
    labels: Vec<i64>,
    nodes: u64,
    cap: Option<u64>,
    deadline: Option<Instant>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.cap.is_some_and(|cap| self.nodes > cap) {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes.is_multiple_of(65_536) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }

    fn run(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let id = self.order[pos];
        let (u, v) = (self.g.edge(id).u, self.g.edge(id).v);
        let (close_u, close_v) = self.closes[id];
        let forced = if close_u {
            Some((self.c - self.sums[u]).rem_euclid(self.k))
        } else if close_v {
            Some((self.c - self.sums[v]).rem_euclid(self.k))
        } else {
            None
        };
        let candidates = match forced {
            Some(0) => 0..0,
            Some(x) => x..x + 1,
            None => 1..self.k,
        };
        for x in candidates {
            self.tick()?;
            let (su, sv) = ((self.sums[u] + x) % self.k, (self.sums[v] + x) % self.k);
            if (close_u && su != self.c) || (close_v && sv != self.c) {
                continue;
            }
            self.sums[u] = su;
            self.sums[v] = sv;
            self.labels[id] = x;
            let found = self.run(pos + 1)?;
            self.sums[u] = (su - x).rem_euclid(self.k);
            self.sums[v] = (sv - x).rem_euclid(self.k);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Every achievable magic sum, found by running [`solve_for_sum`] for each
/// `c` in increasing order.
pub fn brute_force_sums(g: &MultiGraph, k: u64, budget: &SolverBudget) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for c in 0..k as i64 {
        if solve_for_sum(g, k, c, budget)?.is_some() {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::labeling::verify;

    fn cycle(n: usize) -> MultiGraph {
        generate(&Family::Cycle { n }, None).unwrap()
    }

    #[test]
    fn cycle_examples() {
        let b = SolverBudget::default();
        assert_eq!(brute_force_sums(&cycle(3), 3, &b).unwrap(), vec![1, 2]);
        assert_eq!(brute_force_sums(&cycle(3), 4, &b).unwrap(), vec![0, 2]);
        assert_eq!(brute_force_sums(&cycle(4), 3, &b).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn witnesses_verify() {
        let k5 = generate(&Family::Complete { n: 5 }, None).unwrap();
        for c in [0, 2, 4] {
            let l = solve_for_sum(&k5, 6, c, &SolverBudget::default()).unwrap().unwrap();
            assert_eq!(verify(&k5, &l).unwrap(), Some(c));
        }
        assert!(solve_for_sum(&k5, 6, 1, &SolverBudget::default()).unwrap().is_none());
    }

    #[test]
    fn budget_is_reported() {
        let k6 = generate(&Family::Complete { n: 6 }, None).unwrap();
        let tight = SolverBudget { exhaustive_limit: 1, max_nodes: 10, ..SolverBudget::default() };
        // K_5 over Z_6 with an odd target has to be exhausted
        let k5 = generate(&Family::Complete { n: 5 }, None).unwrap();
        assert!(matches!(solve_for_sum(&k5, 6, 1, &tight), Err(Error::BudgetExceeded { .. })));
        let refuse = SolverBudget { max_edges: 10, exhaustive_limit: 1, ..SolverBudget::default() };
        assert!(solve_for_sum(&k6, 3, 0, &refuse).is_err());
    }

    #[test]
    fn isolated_vertices_only_sum_to_zero() {
        let g = MultiGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(brute_force_sums(&g, 3, &SolverBudget::default()).unwrap(), Vec::<i64>::new());
        let e = MultiGraph::new(2, &[]).unwrap();
        assert_eq!(brute_force_sums(&e, 3, &SolverBudget::default()).unwrap(), vec![0]);
    }
}
