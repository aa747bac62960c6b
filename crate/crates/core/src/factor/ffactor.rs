//! Exact degree-constrained factors.
//!
//! A spanning subgraph with prescribed degrees `f(v)` is found through
//! Tutte's gadget: every vertex `v` becomes one outer node per incident edge
//! plus `deg(v) - f(v)` inner nodes joined to all of its outer nodes, and
//! every edge joins the two outer nodes it owns. Perfect matchings of the
//! gadget correspond to factors: an edge is kept iff its outer-outer link is
//! matched.

use super::matching::maximum_matching;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorOptions {
    /// Graphs with at most this many edges use exhaustive search.
    pub exhaustive_threshold: usize,
    /// Degree profiles tried by [`mod3_factor`] before giving up.
    pub max_profiles: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { exhaustive_threshold: 20, max_profiles: 200_000 }
    }
}

/// Spanning `h`-regular subgraph, if one exists.
pub fn f_factor(g: &MultiGraph, h: usize) -> Result<Option<Vec<EdgeId>>> {
    f_factor_with(g, h, &FactorOptions::default())
}

pub fn f_factor_with(g: &MultiGraph, h: usize, opts: &FactorOptions) -> Result<Option<Vec<EdgeId>>> {
    let max = g.min_degree();
    if h > max {
        return Err(Error::DegreeOutOfRange { h, max });
    }
    let targets = vec![h; g.n()];
    Ok(if g.m() <= opts.exhaustive_threshold {
        exhaustive_degree_factor(g, &targets)
    } else {
        degree_factor(g, &targets)
    })
}

/// Spanning subgraph with `deg(v) = targets[v]`, via the matching gadget.
pub fn degree_factor(g: &MultiGraph, targets: &[usize]) -> Option<Vec<EdgeId>> {
    assert_eq!(targets.len(), g.n());
    if (0..g.n()).any(|v| targets[v] > g.degree(v)) || targets.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    // outer node of (v, slot) and inner nodes, laid out vertex by vertex
    let mut outer_base = vec![0; g.n()];
    let mut inner_base = vec![0; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        outer_base[v] = next;
        next += g.degree(v);
        inner_base[v] = next;
        next += g.degree(v) - targets[v];
    }
    let mut adj = vec![Vec::new(); next];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for v in 0..g.n() {
        for i in 0..g.degree(v) - targets[v] {
            for slot in 0..g.degree(v) {
                link(inner_base[v] + i, outer_base[v] + slot, &mut adj);
            }
        }
    }
    let mut outer_of = vec![(0, 0); g.m()];
    for e in g.edges() {
        let su = g.incident(e.u).iter().position(|&x| x == e.id).expect("incident");
        let sv = g.incident(e.v).iter().position(|&x| x == e.id).expect("incident");
        outer_of[e.id] = (outer_base[e.u] + su, outer_base[e.v] + sv);
        link(outer_of[e.id].0, outer_of[e.id].1, &mut adj);
    }
    let mate = maximum_matching(&adj);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    Some((0..g.m()).filter(|&id| mate[outer_of[id].0] == Some(outer_of[id].1)).collect())
}

/// Exhaustive search for a spanning subgraph with `deg(v) = targets[v]`.
pub fn exhaustive_degree_factor(g: &MultiGraph, targets: &[usize]) -> Option<Vec<EdgeId>> {
    let allowed: Vec<Vec<bool>> =
        (0..g.n()).map(|v| (0..=g.degree(v)).map(|d| d == targets[v]).collect()).collect();
    exhaustive_allowed_factor(g, &allowed)
}

/// Exhaustive search for a spanning subgraph whose degree at `v` is some `d`
/// with `allowed[v][d]`. Edges are decided in id order, keeping before
/// dropping.
fn exhaustive_allowed_factor(g: &MultiGraph, allowed: &[Vec<bool>]) -> Option<Vec<EdgeId>> {
    struct Search<'a> {
        g: &'a MultiGraph,
        allowed: &'a [Vec<bool>],
        degree: Vec<usize>,
        left: Vec<usize>,
        chosen: Vec<EdgeId>,
    }
    impl Search<'_> {
        fn reachable(&self, v: usize) -> bool {
            let lo = self.degree[v];
            let hi = (lo + self.left[v]).min(self.allowed[v].len() - 1);
            (lo..=hi).any(|d| self.allowed[v][d])
        }

        fn run(&mut self, id: EdgeId) -> bool {
            if id == self.g.m() {
                return true;
            }
            let (u, v) = (self.g.edge(id).u, self.g.edge(id).v);
            self.left[u] -= 1;
            self.left[v] -= 1;
            for keep in [true, false] {
                if keep {
                    self.degree[u] += 1;
                    self.degree[v] += 1;
                    self.chosen.push(id);
                }
                if self.reachable(u) && self.reachable(v) && self.run(id + 1) {
                    return true;
                }
                if keep {
                    self.degree[u] -= 1;
                    self.degree[v] -= 1;
                    self.chosen.pop();
                }
            }
            self.left[u] += 1;
            self.left[v] += 1;
            false
        }
    }
    let mut search = Search { g, allowed, degree: vec![0; g.n()], left: g.degrees(), chosen: Vec::new() };
    if (0..g.n()).any(|v| !search.reachable(v)) {
        return None;
    }
    search.run(0).then_some(search.chosen)
}

/// Spanning subgraph with every degree congruent to 1 mod 3.
pub fn mod3_factor(g: &MultiGraph) -> Result<Option<Vec<EdgeId>>> {
    mod3_factor_with(g, &FactorOptions::default())
}

/// Below the exhaustive threshold the edge-subset search decides directly.
/// Otherwise degree profiles `f(v) = 1 + 3 t(v)` are tried in increasing
/// total degree, lexicographically in `t` within a total, each through the
/// matching gadget.
pub fn mod3_factor_with(g: &MultiGraph, opts: &FactorOptions) -> Result<Option<Vec<EdgeId>>> {
    let r = g.regularity().ok_or(Error::NotRegular)?;
    if r % 3 != 0 || r % 2 == 0 {
        return Err(Error::Precondition(format!(
            "mod-3 factor search needs an odd degree divisible by 3, got {r}"
        )));
    }
    let n = g.n();
    if g.m() <= opts.exhaustive_threshold {
        let allowed: Vec<Vec<bool>> = (0..n).map(|_| (0..=r).map(|d| d % 3 == 1).collect()).collect();
        return Ok(exhaustive_allowed_factor(g, &allowed));
    }
    let t_max = (r - 1) / 3;
    let mut tried = 0u64;
    for total in 0..=n * t_max {
        if (n + 3 * total) % 2 == 1 {
            continue;
        }
        let mut t = vec![0usize; n];
        let mut found = None;
        let mut budget_hit = false;
        for_each_profile(&mut t, 0, total, t_max, &mut |t| {
            tried += 1;
            if tried > opts.max_profiles {
                budget_hit = true;
                return true;
            }
            let targets: Vec<usize> = t.iter().map(|&x| 1 + 3 * x).collect();
            if let Some(f) = degree_factor(g, &targets) {
                found = Some(f);
                return true;
            }
            false
        });
        if found.is_some() {
            return Ok(found);
        }
        if budget_hit {
            return Err(Error::BudgetExceeded { nodes: opts.max_profiles });
        }
    }
    Ok(None)
}

/// Visits vectors with entries in `0..=cap` summing to `remaining`, in
/// lexicographic order. Stops early when `visit` returns true.
fn for_each_profile(
    t: &mut [usize],
    at: usize,
    remaining: usize,
    cap: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if at == t.len() {
        return remaining == 0 && visit(t);
    }
    let rest_cap = cap * (t.len() - at - 1);
    let lo = remaining.saturating_sub(rest_cap);
    for x in lo..=cap.min(remaining) {
        t[at] = x;
        if for_each_profile(t, at + 1, remaining - x, cap, visit) {
            return true;
        }
    }
    t[at] = 0;
    false
}
