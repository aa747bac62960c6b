//! Matching algorithms: Edmonds' blossom algorithm for general graphs and
//! augmenting-path bipartite matching for the 2-factorization.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Maximum cardinality matching of a simple general graph given by
/// adjacency lists. Returns `mate[v]`.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut blossom = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    // greedy start
    for (v, nbrs) in adj.iter().enumerate() {
        if blossom.mate[v] == NONE {
            if let Some(&w) = nbrs.iter().find(|&&w| blossom.mate[w] == NONE && w != v) {
                blossom.mate[v] = w;
                blossom.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if blossom.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = blossom.find_path(root) {
            while v != NONE {
                let pv = blossom.parent[v];
                let next = blossom.mate[pv];
                blossom.mate[v] = pv;
                blossom.mate[pv] = v;
                v = next;
            }
        }
    }
    blossom.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Perfect matching in a bipartite multigraph with `size` vertices per side.
/// `arcs[i] = (left, right)`; only arcs with `available[i]` are used. Free
/// left vertices are processed in index order and arcs in index order.
/// Returns the chosen arc index for every left vertex, or `None` when no
/// perfect matching exists.
pub fn bipartite_perfect_matching(
    size: usize,
    arcs: &[(usize, usize)],
    available: &[bool],
) -> Option<Vec<usize>> {
    let mut out_arcs = vec![Vec::new(); size];
    for (i, &(l, _)) in arcs.iter().enumerate() {
        if available[i] {
            out_arcs[l].push(i);
        }
    }
    let mut right_arc = vec![NONE; size];
    for left in 0..size {
        let mut visited = vec![false; size];
        if !augment(left, arcs, &out_arcs, &mut right_arc, &mut visited) {
            return None;
        }
    }
    let mut chosen = vec![NONE; size];
    for &arc in &right_arc {
        chosen[arcs[arc].0] = arc;
    }
    Some(chosen)
}

fn augment(
    left: usize,
    arcs: &[(usize, usize)],
    out_arcs: &[Vec<usize>],
    right_arc: &mut [usize],
    visited: &mut [bool],
) -> bool {
    for &arc in &out_arcs[left] {
        let right = arcs[arc].1;
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let holder = right_arc[right];
        if holder == NONE || augment(arcs[holder].0, arcs, out_arcs, right_arc, visited) {
            right_arc[right] = arc;
            return true;
        }
    }
    false
}
