use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{MultiGraph, Vertex};
use crate::error::{Error, Result};

/// Attempts made by the pairing model before giving up.
pub const DEFAULT_RETRY_BUDGET: usize = 1000;

/// Graph families understood by [`generate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Vertex `i` is joined to `i ± j` for every jump `j`.
    Circulant {
        n: usize,
        jumps: Vec<usize>,
    },
    Petersen,
    /// `C_n` times `K_2`; `Prism { n: 4 }` is the cube `Q_3`.
    Prism {
        n: usize,
    },
    RandomRegular {
        n: usize,
        r: usize,
        retries: usize,
    },
    DisjointUnion {
        parts: Vec<Family>,
    },
}

impl Family {
    pub fn random_regular(n: usize, r: usize) -> Self {
        Family::RandomRegular { n, r, retries: DEFAULT_RETRY_BUDGET }
    }
}

/// Builds a member of `family`. Deterministic for fixed parameters and seed.
pub fn generate(family: &Family, seed: Option<u64>) -> Result<MultiGraph> {
    let (n, pairs) = edges_of(family, seed)?;
    MultiGraph::new(n, &pairs)
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(msg.into()))
}

fn edges_of(family: &Family, seed: Option<u64>) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    match family {
        Family::Cycle { n } => {
            if *n < 3 {
                return invalid("cycle needs n >= 3");
            }
            Ok((*n, (0..*n).map(|i| (i, (i + 1) % n)).collect()))
        }
        Family::Complete { n } => {
            if *n == 0 {
                return invalid("complete graph needs n >= 1");
            }
            let mut pairs = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    pairs.push((i, j));
                }
            }
            Ok((*n, pairs))
        }
        Family::CompleteBipartite { a, b } => {
            if *a == 0 || *b == 0 {
                return invalid("complete bipartite graph needs both sides nonempty");
            }
            let mut pairs = Vec::new();
            for i in 0..*a {
                for j in 0..*b {
                    pairs.push((i, a + j));
                }
            }
            Ok((a + b, pairs))
        }
        Family::Circulant { n, jumps } => circulant(*n, jumps),
        Family::Petersen => {
            let mut pairs = Vec::new();
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((i, i + 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            Ok((10, pairs))
        }
        Family::Prism { n } => {
            if *n < 3 {
                return invalid("prism needs n >= 3");
            }
            let mut pairs = Vec::new();
            for i in 0..*n {
                pairs.push((i, (i + 1) % n));
                pairs.push((n + i, n + (i + 1) % n));
                pairs.push((i, n + i));
            }
            Ok((2 * n, pairs))
        }
        Family::RandomRegular { n, r, retries } => {
            let Some(seed) = seed else {
                return invalid("random_regular requires a seed");
            };
            random_regular(*n, *r, seed, *retries)
        }
        Family::DisjointUnion { parts } => {
            if parts.is_empty() {
                return invalid("disjoint union needs at least one part");
            }
            let mut offset = 0;
            let mut pairs = Vec::new();
            for (i, part) in parts.iter().enumerate() {
                let part_seed = seed.map(|s| s.wrapping_add(i as u64));
                let (pn, pp) = edges_of(part, part_seed)?;
                pairs.extend(pp.into_iter().map(|(u, v)| (u + offset, v + offset)));
                offset += pn;
            }
            Ok((offset, pairs))
        }
    }
}

fn circulant(n: usize, jumps: &[usize]) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    if n < 3 {
        return invalid("circulant needs n >= 3");
    }
    let mut seen = vec![false; n / 2 + 1];
    for &j in jumps {
        if j == 0 || j > n / 2 {
            return invalid(format!("jump {j} outside 1..={}", n / 2));
        }
        if std::mem::replace(&mut seen[j], true) {
            return invalid(format!("duplicate jump {j}"));
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for &j in jumps {
            // the diameter jump joins each antipodal pair once
            if 2 * j == n && i >= n / 2 {
                continue;
            }
            pairs.push((i, (i + j) % n));
        }
    }
    Ok((n, pairs))
}

/// Simple `r`-regular graph from the pairing model, rejecting loops and
/// parallel edges, with at most `retries` attempts.
fn random_regular(n: usize, r: usize, seed: u64, retries: usize) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    if n == 0 || r >= n || (n * r) % 2 == 1 {
        return invalid(format!("no simple {r}-regular graph on {n} vertices"));
    }
    // dense targets: sample the sparser complement instead
    if 2 * r > n - 1 {
        let (_, sparse) = random_regular(n, n - 1 - r, seed, retries)?;
        let mut adjacent = vec![false; n * n];
        for &(u, v) in &sparse {
            adjacent[u * n + v] = true;
        }
        let pairs =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !adjacent[u * n + v]);
        return Ok((n, pairs.collect()));
    }
    if r == 0 {
        return Ok((n, Vec::new()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all_points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    // pairing model that only ever joins two points when the result stays
    // simple; a dead end restarts the attempt
    'attempt: for _ in 0..retries.max(1) {
        let mut free = all_points.clone();
        let mut adjacent = vec![false; n * n];
        let mut pairs = Vec::with_capacity(n * r / 2);
        while !free.is_empty() {
            let ok = |i: usize, j: usize| {
                let (u, v) = (free[i].min(free[j]), free[i].max(free[j]));
                u != v && !adjacent[u * n + v]
            };
            let mut pick = None;
            for _ in 0..32 {
                let (i, j) = (rng.gen_range(0..free.len()), rng.gen_range(0..free.len()));
                if ok(i, j) {
                    pick = Some((i, j));
                    break;
                }
            }
            if pick.is_none() {
                let options: Vec<(usize, usize)> = (0..free.len())
                    .flat_map(|i| (i + 1..free.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| ok(i, j))
                    .collect();
                match options.choose(&mut rng) {
                    Some(&p) => pick = Some(p),
                    None => continue 'attempt,
                }
            }
            let (i, j) = pick.expect("pair chosen");
            let (u, v) = (free[i].min(free[j]), free[i].max(free[j]));
            adjacent[u * n + v] = true;
            pairs.push((u, v));
            free.swap_remove(i.max(j));
            free.swap_remove(i.min(j));
        }
        pairs.sort_unstable();
        return Ok((n, pairs));
    }
    Err(Error::GenerationFailed(retries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        let c4 = generate(&Family::Cycle { n: 4 }, None).unwrap();
        assert_eq!((c4.n(), c4.m(), c4.regularity()), (4, 4, Some(2)));
        let k5 = generate(&Family::Complete { n: 5 }, None).unwrap();
        assert_eq!((k5.m(), k5.regularity()), (10, Some(4)));
        let p = generate(&Family::Petersen, None).unwrap();
        assert_eq!((p.m(), p.regularity()), (15, Some(3)));
        let q3 = generate(&Family::Prism { n: 4 }, None).unwrap();
        assert_eq!((q3.n(), q3.m(), q3.regularity()), (8, 12, Some(3)));
        let k33 = generate(&Family::CompleteBipartite { a: 3, b: 3 }, None).unwrap();
        assert_eq!((k33.m(), k33.regularity()), (9, Some(3)));
    }

    #[test]
    fn circulant_with_diameter_jump() {
        let g = generate(&Family::Circulant { n: 8, jumps: vec![1, 4] }, None).unwrap();
        assert_eq!(g.regularity(), Some(3));
        let g = generate(&Family::Circulant { n: 8, jumps: vec![1, 2] }, None).unwrap();
        assert_eq!((g.m(), g.regularity()), (16, Some(4)));
        assert!(generate(&Family::Circulant { n: 8, jumps: vec![5] }, None).is_err());
    }

    #[test]
    fn random_regular_is_seeded_and_simple() {
        let fam = Family::random_regular(8, 3);
        let a = generate(&fam, Some(1)).unwrap();
        let b = generate(&fam, Some(1)).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.m(), a.regularity()), (12, Some(3)));
        let mut pairs = a.pairs();
        pairs.dedup();
        assert_eq!(pairs.len(), 12);
        assert!(generate(&fam, None).is_err());
        assert!(generate(&Family::random_regular(5, 3), Some(1)).is_err());
    }

    #[test]
    fn dense_random_regular_graphs() {
        for (n, r) in [(6, 5), (7, 4), (9, 6), (10, 7)] {
            for seed in 0..5 {
                let g = generate(&Family::random_regular(n, r), Some(seed)).unwrap();
                assert_eq!(g.regularity(), Some(r));
                let mut pairs = g.pairs();
                pairs.dedup();
                assert_eq!(pairs.len(), n * r / 2);
            }
        }
    }

    #[test]
    fn disjoint_union_offsets() {
        let fam = Family::DisjointUnion { parts: vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }] };
        let g = generate(&fam, None).unwrap();
        assert_eq!((g.n(), g.m()), (7, 7));
        assert_eq!(g.components().len(), 2);
    }
}
