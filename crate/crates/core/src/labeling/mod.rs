//! Edge labelings over `Z_k` (over the integers when `k = 1`) and the
//! operations that build new magic labelings out of old ones.

mod construct;
mod recipes;
mod trace;

pub use construct::{construct, construct_with, ConstructOptions, ConstructResult, Status};
pub use trace::{ConstructionTrace, FactorRef, GraphRef, LabelClass, TraceStep};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::DoublingMap;
use crate::graph::{EdgeId, MultiGraph};

/// Reduces `x` into `0..k`, or leaves it alone over the integers.
pub fn reduce(x: i64, k: u64) -> i64 {
    if k == 1 {
        x
    } else {
        x.rem_euclid(k as i64)
    }
}

/// One label per edge id. For `k >= 2` labels are residues in `1..k`; for
/// `k = 1` they are nonzero integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    k: u64,
    labels: Vec<i64>,
}

impl EdgeLabeling {
    pub fn new(k: u64, labels: Vec<i64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        for (edge, &label) in labels.iter().enumerate() {
            check_label(edge, label, k)?;
        }
        Ok(EdgeLabeling { k, labels })
    }

    /// Reduces raw values mod `k` first; fails on any value that vanishes.
    pub fn from_raw(k: u64, raw: &[i64]) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        Self::new(k, raw.iter().map(|&x| reduce(x, k)).collect())
    }

    pub fn constant(k: u64, m: usize, value: i64) -> Result<Self> {
        Self::from_raw(k, &vec![value; m])
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> i64 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `e -> k - label(e)`. Turns a `c`-sum labeling into a `(k - c)`-sum one.
    pub fn complement(&self) -> Result<Self> {
        if self.k == 1 {
            return Err(Error::Precondition("complement needs k >= 2; use negate over the integers".into()));
        }
        let k = self.k as i64;
        Ok(EdgeLabeling { k: self.k, labels: self.labels.iter().map(|&l| k - l).collect() })
    }

    /// Integer counterpart of [`complement`](Self::complement): `e -> -label(e)`.
    pub fn negate(&self) -> Result<Self> {
        if self.k != 1 {
            return Err(Error::Precondition("negate applies to integer labelings".into()));
        }
        Ok(EdgeLabeling { k: 1, labels: self.labels.iter().map(|&l| -l).collect() })
    }
}

fn check_label(edge: EdgeId, label: i64, k: u64) -> Result<()> {
    if label == 0 {
        return Err(Error::ZeroLabel(edge));
    }
    if k >= 2 && !(1..k as i64).contains(&label) {
        return Err(Error::LabelOutOfRange { edge, label, k });
    }
    Ok(())
}

/// Vertex sums `ℓ⁺(v)`, reduced mod `k`.
pub fn vertex_sums(g: &MultiGraph, l: &EdgeLabeling) -> Result<Vec<i64>> {
    if l.len() != g.m() {
        return Err(Error::LabelCountMismatch { expected: g.m(), found: l.len() });
    }
    let mut sums = vec![0i64; g.n()];
    for e in g.edges() {
        let x = l.label(e.id);
        sums[e.u] = reduce(sums[e.u] + x, l.k());
        sums[e.v] = reduce(sums[e.v] + x, l.k());
    }
    Ok(sums)
}

/// The magic sum of `l` on `g`, or `None` when vertex sums differ.
pub fn verify(g: &MultiGraph, l: &EdgeLabeling) -> Result<Option<i64>> {
    for (edge, &label) in l.labels().iter().enumerate() {
        check_label(edge, label, l.k())?;
    }
    let sums = vertex_sums(g, l)?;
    let c = sums[0];
    Ok(sums.iter().all(|&s| s == c).then_some(c))
}

/// Verifies `l` and returns its complement with the complementary sum.
pub fn complement_on(g: &MultiGraph, l: &EdgeLabeling) -> Result<(EdgeLabeling, i64)> {
    let c = verify(g, l)?.ok_or(Error::NotMagic)?;
    let k = l.k() as i64;
    Ok((l.complement()?, (k - c).rem_euclid(k)))
}

/// Folds a labeling of the doubled graph back onto the source graph: each
/// source edge receives the sum of its two copies' labels (`divisor = 1`) or
/// half of that integer sum (`divisor = 2`). Returns the folded labeling and
/// its verified magic sum.
pub fn fold(d: &DoublingMap, doubled_labels: &EdgeLabeling, divisor: u8) -> Result<(EdgeLabeling, i64)> {
    let k = doubled_labels.k();
    verify(&d.doubled, doubled_labels)?.ok_or(Error::NotMagic)?;
    let folded = fold_values(d, doubled_labels.labels(), k, divisor)?;
    let l = EdgeLabeling::new(k, folded)?;
    let c = verify(&d.source, &l)?.ok_or(Error::NotMagic)?;
    Ok((l, c))
}

/// Label arithmetic of [`fold`] without the magic checks.
pub(crate) fn fold_values(d: &DoublingMap, doubled: &[i64], k: u64, divisor: u8) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(d.pairs.len());
    for (i, &(a, b)) in d.pairs.iter().enumerate() {
        let sum = doubled[a] + doubled[b];
        let value = match divisor {
            1 => reduce(sum, k),
            2 => {
                if sum % 2 != 0 {
                    return Err(Error::OddPairSum(i));
                }
                reduce(sum / 2, k)
            }
            _ => return Err(Error::InvalidParameters(format!("fold divisor {divisor}"))),
        };
        if value == 0 {
            return Err(Error::ZeroLabel(i));
        }
        out.push(value);
    }
    Ok(out)
}

/// Extends a labeling of a spanning `h`-factor `H` to all of `G`: edges of
/// `H` keep `factor_labels` (indexed in the order of `factor_edges`), every
/// other edge gets 1. If `factor_labels` has sum `c - (r - h)` on `H`, the
/// result has sum `c` on `G`.
pub fn extend_by_factor(
    g: &MultiGraph,
    factor_edges: &[EdgeId],
    factor_labels: &EdgeLabeling,
    c: i64,
) -> Result<EdgeLabeling> {
    let r = g.regularity().ok_or(Error::NotRegular)?;
    let k = factor_labels.k();
    let sub = g.edge_subgraph(factor_edges);
    let h = sub.graph.regularity().ok_or_else(|| Error::Precondition("factor is not regular".into()))?;
    if factor_edges.iter().collect::<std::collections::BTreeSet<_>>().len() != factor_edges.len() {
        return Err(Error::Precondition("factor repeats an edge".into()));
    }
    let expected = reduce(c - (r - h) as i64, k);
    match verify(&sub.graph, factor_labels)? {
        Some(s) if s == expected => {}
        Some(s) => return Err(Error::SumMismatch { expected, found: s }),
        None => return Err(Error::NotMagic),
    }
    let mut labels = vec![1i64; g.m()];
    for (local, &id) in factor_edges.iter().enumerate() {
        labels[id] = factor_labels.label(local);
    }
    EdgeLabeling::new(k, labels)
}

/// On-disk labeling: `{"c", "k", "labels": {"<edge id>": value}, "trace"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub k: u64,
    pub c: i64,
    pub labels: BTreeMap<String, i64>,
    #[serde(default)]
    pub trace: Vec<TraceStep>,
}

impl LabelingFile {
    pub fn new(l: &EdgeLabeling, c: i64, trace: &ConstructionTrace) -> Self {
        LabelingFile {
            k: l.k(),
            c,
            labels: l.labels().iter().enumerate().map(|(i, &x)| (i.to_string(), x)).collect(),
            trace: trace.steps.clone(),
        }
    }

    pub fn labeling(&self) -> Result<EdgeLabeling> {
        let mut labels = vec![None; self.labels.len()];
        for (key, &value) in &self.labels {
            let id: usize =
                key.parse().map_err(|_| Error::Json(format!("edge id `{key}` is not an integer")))?;
            if id >= labels.len() {
                return Err(Error::MissingLabel(labels.len()));
            }
            labels[id] = Some(value);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or(Error::MissingLabel(i)))
            .collect::<Result<Vec<_>>>()?;
        EdgeLabeling::new(self.k, labels)
    }

    pub fn to_json(&self) -> String {
        crate::json::to_sorted_string(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{double_graph, extract_2h_factor, two_factorization};
    use crate::graph::{generate, Family};

    fn cycle(n: usize) -> MultiGraph {
        generate(&Family::Cycle { n }, None).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c4 = cycle(4);
        assert_eq!(verify(&c4, &EdgeLabeling::constant(3, 4, 1).unwrap()).unwrap(), Some(2));
        let c3 = cycle(3);
        // edges (0,1) (1,2) (2,0): vertex sums 2+1, 1+1, 1+2
        let l = EdgeLabeling::new(3, vec![1, 1, 2]).unwrap();
        assert_eq!(vertex_sums(&c3, &l).unwrap(), vec![0, 2, 0]);
        assert_eq!(verify(&c3, &l).unwrap(), None);
        assert_eq!(EdgeLabeling::new(3, vec![1, 0, 1, 1]), Err(Error::ZeroLabel(1)));
        assert!(matches!(EdgeLabeling::new(3, vec![1, 3]), Err(Error::LabelOutOfRange { edge: 1, .. })));
        let short = EdgeLabeling::new(3, vec![1, 1]).unwrap();
        assert!(matches!(verify(&c4, &short), Err(Error::LabelCountMismatch { .. })));
    }

    #[test]
    fn integer_verification() {
        let c4 = cycle(4);
        let l = EdgeLabeling::new(1, vec![5, -2, 5, -2]).unwrap();
        assert_eq!(verify(&c4, &l).unwrap(), Some(3));
        assert_eq!(l.negate().unwrap().labels(), &[-5, 2, -5, 2]);
        assert!(l.complement().is_err());
    }

    #[test]
    fn complement_examples() {
        let c4 = cycle(4);
        let ones = EdgeLabeling::constant(3, 4, 1).unwrap();
        let (comp, c) = complement_on(&c4, &ones).unwrap();
        assert_eq!((comp.labels(), c), (&[2, 2, 2, 2][..], 1));
        assert_eq!(comp.complement().unwrap(), ones);
        let c6 = cycle(6);
        let alt = EdgeLabeling::new(5, vec![2, 3, 2, 3, 2, 3]).unwrap();
        let (comp, c) = complement_on(&c6, &alt).unwrap();
        assert_eq!((comp.labels(), c), (&[3, 2, 3, 2, 3, 2][..], 0));
        let bad = EdgeLabeling::new(3, vec![1, 1, 2]).unwrap();
        assert_eq!(complement_on(&cycle(3), &bad), Err(Error::NotMagic));
    }

    fn doubled_two_class(g: &MultiGraph, h: usize, k: u64, a: i64, b: i64) -> (DoublingMap, EdgeLabeling) {
        let d = double_graph(g);
        let split = extract_2h_factor(&d.doubled, h).unwrap();
        let mut labels = vec![b; d.doubled.m()];
        for &e in &split.parts[0] {
            labels[e] = a;
        }
        (d, EdgeLabeling::new(k, labels).unwrap())
    }

    #[test]
    fn fold_zero_sum_doubling_cases() {
        let k6 = generate(&Family::Complete { n: 6 }, None).unwrap();
        for k in [5u64, 6, 7, 9] {
            let (d, l) = doubled_two_class(&k6, 1, k, k as i64 - 4, 1);
            let (folded, c) = fold(&d, &l, 1).unwrap();
            assert_eq!(c, 0, "k = {k}");
            assert_eq!(verify(&k6, &folded).unwrap(), Some(0));
        }
        let (d, l) = doubled_two_class(&k6, 2, 8, 2, 4);
        let (folded, c) = fold(&d, &l, 2).unwrap();
        assert_eq!(c, 0);
        assert!(folded.labels().iter().all(|x| [2, 3, 4].contains(x)));
    }

    #[test]
    fn fold_constant_doubles() {
        let k4 = generate(&Family::Complete { n: 4 }, None).unwrap();
        let d = double_graph(&k4);
        let l = EdgeLabeling::constant(5, d.doubled.m(), 2).unwrap();
        let (folded, c) = fold(&d, &l, 1).unwrap();
        assert!(folded.labels().iter().all(|&x| x == 4));
        assert_eq!(c, 2);
        let l = EdgeLabeling::constant(4, d.doubled.m(), 2).unwrap();
        assert_eq!(fold(&d, &l, 1), Err(Error::ZeroLabel(0)));
        let l = EdgeLabeling::new(4, (0..12).map(|i| if i < 6 { 1 } else { 2 }).collect()).unwrap();
        assert!(matches!(fold(&d, &l, 2), Err(Error::OddPairSum(_)) | Err(Error::NotMagic)));
    }

    #[test]
    fn extend_examples() {
        let g = generate(&Family::Circulant { n: 7, jumps: vec![1, 2] }, None).unwrap();
        let two = two_factorization(&g).unwrap();
        let h = &two.parts[0];
        // a 1-sum labeling of the 2-factor over Z_5: constant 3 (2 * 3 = 6)
        let lh = EdgeLabeling::constant(5, h.len(), 3).unwrap();
        let l = extend_by_factor(&g, h, &lh, 3).unwrap();
        assert_eq!(verify(&g, &l).unwrap(), Some(3));
        for (local, &id) in h.iter().enumerate() {
            assert_eq!(l.label(id), lh.label(local));
        }
        assert_eq!(extend_by_factor(&g, h, &lh, 4), Err(Error::SumMismatch { expected: 2, found: 1 }));
        let all: Vec<_> = (0..g.m()).collect();
        let lg = EdgeLabeling::constant(5, g.m(), 2).unwrap();
        assert_eq!(extend_by_factor(&g, &all, &lg, 3).unwrap(), lg);
    }

    #[test]
    fn extend_k4_matching_pair() {
        // K_4: two perfect matchings form a 4-cycle 2-factor H; the third
        // matching carries label 1, so a s-sum labeling of H extends to s + 1
        let k4 = generate(&Family::Complete { n: 4 }, None).unwrap();
        let h = vec![0, 5, 2, 3]; // (0,1) (2,3) (0,3) (1,2)
        let sub = k4.edge_subgraph(&h);
        let cyc = sub.graph.two_regular_profile().unwrap();
        for (x, y, s) in [(1, 3, 0), (2, 3, 1)] {
            let mut raw = vec![0; 4];
            for (i, &e) in cyc.cycles[0].edges.iter().enumerate() {
                raw[e] = if i % 2 == 0 { x } else { y };
            }
            let lh = EdgeLabeling::new(4, raw).unwrap();
            assert_eq!(verify(&sub.graph, &lh).unwrap(), Some(s));
            let l = extend_by_factor(&k4, &h, &lh, s + 1).unwrap();
            assert_eq!(verify(&k4, &l).unwrap(), Some(s + 1));
        }
    }

    #[test]
    fn labeling_file_round_trip() {
        let l = EdgeLabeling::new(5, (0..12).map(|i| 1 + i % 4).collect()).unwrap();
        let file = LabelingFile::new(&l, 3, &ConstructionTrace::default());
        let text = file.to_json();
        assert!(text.starts_with("{\n  \"c\": 3,"));
        let back = LabelingFile::from_json(&text).unwrap();
        assert_eq!(back.labeling().unwrap(), l);
    }
}
