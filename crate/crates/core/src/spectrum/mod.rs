//! Sum spectra: prediction from structure, the exhaustive oracle, null sets
//! and completeness decisions.
//!
//! Predictions are made per connected component and intersected, since a
//! magic labeling of a disjoint union is exactly a magic labeling of each
//! part with a common sum.

pub mod solver;

pub use solver::{brute_force_sums, solve_for_sum, SolverBudget};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{f_factor_with, mod3_factor_with, two_factorization, FactorOptions};
use crate::graph::MultiGraph;
use crate::labeling::{verify, EdgeLabeling};

/// Infinite spectra over the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symbolic {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Z\\{0}")]
    NonzeroIntegers,
    #[serde(rename = "2Z")]
    Even,
    #[serde(rename = "2Z\\{0}")]
    NonzeroEven,
}

impl Symbolic {
    pub fn tag(self) -> &'static str {
        match self {
            Symbolic::Integers => "Z",
            Symbolic::NonzeroIntegers => "Z\\{0}",
            Symbolic::Even => "2Z",
            Symbolic::NonzeroEven => "2Z\\{0}",
        }
    }

    fn parts(self) -> (bool, bool) {
        // (odd integers allowed, zero allowed)
        match self {
            Symbolic::Integers => (true, true),
            Symbolic::NonzeroIntegers => (true, false),
            Symbolic::Even => (false, true),
            Symbolic::NonzeroEven => (false, false),
        }
    }

    fn from_parts(odd: bool, zero: bool) -> Self {
        match (odd, zero) {
            (true, true) => Symbolic::Integers,
            (true, false) => Symbolic::NonzeroIntegers,
            (false, true) => Symbolic::Even,
            (false, false) => Symbolic::NonzeroEven,
        }
    }

    pub fn contains(self, c: i64) -> bool {
        let (odd, zero) = self.parts();
        match c {
            0 => zero,
            c if c % 2 != 0 => odd,
            _ => true,
        }
    }

    pub fn intersect(self, other: Symbolic) -> Symbolic {
        let (a, b) = (self.parts(), other.parts());
        Symbolic::from_parts(a.0 && b.0, a.1 && b.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// Sorted residues known to be magic sums.
    Explicit(Vec<i64>),
    Symbolic(Symbolic),
}

/// A sum spectrum with the reasons behind it. Residues in `undecided` could
/// not be settled within budget and are not listed as members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSet {
    pub k: u64,
    pub payload: Payload,
    pub provenance: Vec<String>,
    pub undecided: Vec<i64>,
}

impl SpectrumSet {
    pub fn explicit(k: u64, mut members: Vec<i64>, provenance: Vec<String>) -> Self {
        members.sort_unstable();
        members.dedup();
        SpectrumSet { k, payload: Payload::Explicit(members), provenance, undecided: Vec::new() }
    }

    pub fn symbolic(tag: Symbolic, provenance: Vec<String>) -> Self {
        SpectrumSet { k: 1, payload: Payload::Symbolic(tag), provenance, undecided: Vec::new() }
    }

    /// Membership of `c` (reduced mod `k`), or `None` if undecided.
    pub fn contains(&self, c: i64) -> Option<bool> {
        match &self.payload {
            Payload::Symbolic(tag) => Some(tag.contains(c)),
            Payload::Explicit(members) => {
                let c = c.rem_euclid(self.k as i64);
                if self.undecided.contains(&c) {
                    None
                } else {
                    Some(members.contains(&c))
                }
            }
        }
    }

    pub fn members(&self) -> Option<&[i64]> {
        match &self.payload {
            Payload::Explicit(m) => Some(m),
            Payload::Symbolic(_) => None,
        }
    }

    pub fn is_decided(&self) -> bool {
        self.undecided.is_empty()
    }

    /// Whether the spectrum is all of `Z_k` (all of `Z` when `k = 1`).
    pub fn is_complete(&self) -> bool {
        match &self.payload {
            Payload::Symbolic(tag) => *tag == Symbolic::Integers,
            Payload::Explicit(m) => m.len() as u64 == self.k,
        }
    }

    pub fn intersect(&self, other: &SpectrumSet) -> Result<SpectrumSet> {
        if self.k != other.k {
            return Err(Error::InvalidParameters(format!(
                "cannot intersect spectra for k = {} and k = {}",
                self.k, other.k
            )));
        }
        let mut provenance = self.provenance.clone();
        for p in &other.provenance {
            if !provenance.contains(p) {
                provenance.push(p.clone());
            }
        }
        let payload = match (&self.payload, &other.payload) {
            (Payload::Symbolic(a), Payload::Symbolic(b)) => Payload::Symbolic(a.intersect(*b)),
            (Payload::Explicit(a), Payload::Explicit(b)) => {
                Payload::Explicit(a.iter().filter(|c| b.contains(c)).copied().collect())
            }
            _ => return Err(Error::InvalidParameters("mixed spectrum payloads".into())),
        };
        // undecided in one part and not excluded by the other stays undecided
        let k = self.k as i64;
        let undecided = (0..k)
            .filter(|&c| {
                let (a, b) = (self.contains(c), other.contains(c));
                a != Some(false) && b != Some(false) && (a.is_none() || b.is_none())
            })
            .collect::<Vec<_>>();
        let payload = match payload {
            Payload::Explicit(m) => {
                Payload::Explicit(m.into_iter().filter(|c| !undecided.contains(c)).collect())
            }
            p => p,
        };
        Ok(SpectrumSet { k: self.k, payload, provenance, undecided })
    }

    pub fn report(&self) -> SpectrumReport {
        let (spectrum, symbolic) = match &self.payload {
            Payload::Explicit(m) => (Some(m.clone()), None),
            Payload::Symbolic(tag) => (None, Some(tag.tag().to_string())),
        };
        SpectrumReport {
            k: self.k,
            spectrum,
            symbolic,
            complete: self.is_complete(),
            provenance: self.provenance.clone(),
            undecided: self.undecided.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        crate::json::to_sorted_string(&self.report())
    }
}

/// Serialized form of a [`SpectrumSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub k: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<String>,
    pub complete: bool,
    pub provenance: Vec<String>,
    pub undecided: Vec<i64>,
}

/// Budgets for the predicates that prediction decides by search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpectrumOptions {
    pub budget: SolverBudget,
    pub factor: FactorOptions,
}

/// Exhaustive spectrum over `Z_k`; exact, or an error when over budget.
pub fn brute_force_spectrum(g: &MultiGraph, k: u64, budget: &SolverBudget) -> Result<SpectrumSet> {
    if k < 2 {
        return Err(Error::Precondition("the oracle works over Z_k with k >= 2".into()));
    }
    let sums = brute_force_sums(g, k, budget)?;
    Ok(SpectrumSet::explicit(k, sums, vec!["exhaustive search".into()]))
}

/// Why a component is completely `k`-magic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// 2-regular with even cycles only.
    EvenCyclesOnly,
    /// `k >= 5` and odd degree `r >= 3`.
    OddDegree,
    /// `k >= 5`, even degree `r >= 4`, even order.
    EvenDegreeEvenOrder,
    /// `k >= 5` odd, even degree `r >= 4`, odd order.
    EvenDegreeOddOrderOddModulus,
    /// `k = 4`, even order, zero-sum 4-magic.
    ZeroSumFourMagic,
    /// `k = 3`, `r` not divisible by 3.
    DegreeNotMultipleOfThree,
    /// `k = 3`, `r` divisible by 6.
    DegreeMultipleOfSix,
    /// `k = 3`, odd `r` divisible by 3, with a factor of degrees `1 mod 3`.
    ModThreeFactor,
}

impl Condition {
    pub fn describe(self) -> &'static str {
        match self {
            Condition::EvenCyclesOnly => "2-regular with even cycles only",
            Condition::OddDegree => "k >= 5 and r >= 3 odd",
            Condition::EvenDegreeEvenOrder => "k >= 5, r >= 4 even and n even",
            Condition::EvenDegreeOddOrderOddModulus => "k >= 5 odd, r >= 4 even and n odd",
            Condition::ZeroSumFourMagic => "k = 4, r >= 3, n even and zero-sum 4-magic",
            Condition::DegreeNotMultipleOfThree => "k = 3 and r not divisible by 3",
            Condition::DegreeMultipleOfSix => "k = 3 and r divisible by 6",
            Condition::ModThreeFactor => {
                "k = 3, r odd and divisible by 3, with a factor whose degrees are 1 mod 3"
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Membership {
    In,
    Out,
    Unknown,
}

struct ComponentSpectrum {
    status: Vec<Membership>,
    provenance: Vec<String>,
    condition: Option<Condition>,
}

impl ComponentSpectrum {
    fn from_fn(k: u64, provenance: Vec<String>, f: impl Fn(i64) -> Membership) -> Self {
        ComponentSpectrum { status: (0..k as i64).map(f).collect(), provenance, condition: None }
    }

    fn with(mut self, condition: Condition) -> Self {
        self.condition = Some(condition);
        self
    }
}

fn member(b: bool) -> Membership {
    if b {
        Membership::In
    } else {
        Membership::Out
    }
}

fn regular_degree(g: &MultiGraph) -> Result<usize> {
    match g.regularity() {
        None => Err(Error::NotRegular),
        Some(0) => Err(Error::Precondition("graph has no edges".into())),
        Some(r) => Ok(r),
    }
}

/// Predicted spectrum, per component and intersected.
pub fn predict_spectrum(g: &MultiGraph, k: u64) -> Result<SpectrumSet> {
    predict_spectrum_with(g, k, &SpectrumOptions::default())
}

pub fn predict_spectrum_with(g: &MultiGraph, k: u64, opts: &SpectrumOptions) -> Result<SpectrumSet> {
    Ok(predict_detailed(g, k, opts)?.0)
}

/// The prediction together with the completeness condition shared by all
/// components, if any.
fn predict_detailed(
    g: &MultiGraph,
    k: u64,
    opts: &SpectrumOptions,
) -> Result<(SpectrumSet, Option<Condition>)> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    let r = regular_degree(g)?;
    let comps = g.components();
    let tag_component = |i: usize, lines: Vec<String>| -> Vec<String> {
        if comps.len() == 1 {
            lines
        } else {
            lines.into_iter().map(|l| format!("component {i}: {l}")).collect()
        }
    };
    if k == 1 {
        let mut acc: Option<SpectrumSet> = None;
        for (i, comp) in comps.iter().enumerate() {
            let sub = g.induced(comp).graph;
            let (tag, why) = integer_spectrum(&sub, r)?;
            let s = SpectrumSet::symbolic(tag, tag_component(i, vec![why]));
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        return Ok((acc.expect("at least one component"), None));
    }
    let mut status = vec![Membership::In; k as usize];
    let mut provenance = Vec::new();
    let mut condition = None;
    for (i, comp) in comps.iter().enumerate() {
        let sub = g.induced(comp).graph;
        let part = predict_component(&sub, r, k, opts)?;
        for (acc, s) in status.iter_mut().zip(&part.status) {
            *acc = match (*acc, *s) {
                (Membership::Out, _) | (_, Membership::Out) => Membership::Out,
                (Membership::In, Membership::In) => Membership::In,
                _ => Membership::Unknown,
            };
        }
        for line in tag_component(i, part.provenance) {
            if !provenance.contains(&line) {
                provenance.push(line);
            }
        }
        condition = match (i, condition, part.condition) {
            (0, _, c) => c,
            (_, Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
    }
    let pick =
        |want: Membership| -> Vec<i64> { (0..k as i64).filter(|&c| status[c as usize] == want).collect() };
    let mut set = SpectrumSet::explicit(k, pick(Membership::In), provenance);
    set.undecided = pick(Membership::Unknown);
    if !set.is_complete() {
        condition = None;
    }
    Ok((set, condition))
}

/// Integer spectrum of a connected `r`-regular graph.
fn integer_spectrum(g: &MultiGraph, r: usize) -> Result<(Symbolic, String)> {
    let n = g.n();
    Ok(match r {
        1 => (Symbolic::NonzeroIntegers, "1-regular: each label is a vertex sum".into()),
        2 => {
            if g.two_regular_profile()?.has_odd_cycle {
                (Symbolic::NonzeroEven, "2-regular with an odd cycle: constant labels x with 2x = c".into())
            } else {
                (Symbolic::Integers, "2-regular with even cycles only".into())
            }
        }
        _ if n % 2 == 1 => (Symbolic::Even, "r >= 3 and odd order: the degree sum r n forces even c".into()),
        _ => (Symbolic::Integers, "r >= 3 and even order".into()),
    })
}

fn predict_component(g: &MultiGraph, r: usize, k: u64, opts: &SpectrumOptions) -> Result<ComponentSpectrum> {
    let n = g.n();
    let ki = k as i64;
    let all = |why: &str| ComponentSpectrum::from_fn(k, vec![why.into()], |_| Membership::In);
    let nonzero = |why: &str| ComponentSpectrum::from_fn(k, vec![why.into()], |c| member(c != 0));
    let even = |why: &str| ComponentSpectrum::from_fn(k, vec![why.into()], |c| member(c % 2 == 0));

    if k == 2 {
        // every label is 1, so only r mod 2 can occur; still decided by search
        return Ok(match solve_for_sum(g, 2, r as i64 % 2, &opts.budget) {
            Ok(found) => {
                ComponentSpectrum::from_fn(2, vec!["k = 2: decided by exhaustive search".into()], |c| {
                    member(found.is_some() && c == r as i64 % 2)
                })
            }
            Err(Error::BudgetExceeded { .. }) => {
                ComponentSpectrum::from_fn(2, vec!["k = 2: exhaustive search over budget".into()], |_| {
                    Membership::Unknown
                })
            }
            Err(e) => return Err(e),
        });
    }
    if r == 1 {
        return Ok(nonzero("1-regular: each label is a vertex sum, so 0 is excluded"));
    }
    if r == 2 {
        let profile = g.two_regular_profile()?;
        return Ok(if !profile.has_odd_cycle {
            all("2-regular with even cycles only: alternating labels reach every sum")
                .with(Condition::EvenCyclesOnly)
        } else if k % 2 == 1 {
            nonzero("2-regular with an odd cycle, k odd: constant labels x with 2x = c, c != 0")
        } else {
            even("2-regular with an odd cycle, k even: 2x = c forces even c")
        });
    }
    if k >= 5 {
        return Ok(if r % 2 == 1 {
            all("k >= 5 and r >= 3 odd: completely k-magic").with(Condition::OddDegree)
        } else if n.is_multiple_of(2) {
            all("k >= 5, r >= 4 even and n even: completely k-magic").with(Condition::EvenDegreeEvenOrder)
        } else if k % 2 == 1 {
            all("k >= 5 odd, r >= 4 even and n odd: completely k-magic")
                .with(Condition::EvenDegreeOddOrderOddModulus)
        } else {
            even("r >= 4 even, n odd, k even: odd order allows only even sums, all of which occur")
        });
    }
    if k == 4 {
        if n % 2 == 1 {
            return Ok(even("k = 4, odd order: only even sums, and 0 and 2 both occur"));
        }
        if r.is_multiple_of(2) {
            return Ok(all("k = 4, even order, even r: zero-sum 4-magic, so completely 4-magic")
                .with(Condition::ZeroSumFourMagic));
        }
        let units = "k = 4, odd r: constant labels give 1, 2 and 3";
        return Ok(match zero_sum_4_magic_with(g, opts) {
            Ok(true) => ComponentSpectrum::from_fn(
                k,
                vec![units.into(), "zero-sum 4-magic: decided by construction or search".into()],
                |_| Membership::In,
            )
            .with(Condition::ZeroSumFourMagic),
            Ok(false) => ComponentSpectrum::from_fn(
                k,
                vec![
                    units.into(),
                    "not zero-sum 4-magic: spectrum {1, 2, 3} derived from constant labels and the failed zero-sum test".into(),
                ],
                |c| member(c != 0),
            ),
            Err(Error::BudgetExceeded { .. }) => ComponentSpectrum::from_fn(
                k,
                vec![units.into(), "zero-sum 4-magic status undecided within budget".into()],
                |c| if c == 0 { Membership::Unknown } else { Membership::In },
            ),
            Err(e) => return Err(e),
        });
    }
    // k = 3
    debug_assert_eq!(ki, 3);
    if !r.is_multiple_of(3) {
        return Ok(all("k = 3 and r not divisible by 3: completely 3-magic")
            .with(Condition::DegreeNotMultipleOfThree));
    }
    if r.is_multiple_of(6) {
        return Ok(all("k = 3 and r divisible by 6: completely 3-magic").with(Condition::DegreeMultipleOfSix));
    }
    Ok(match mod3_factor_with(g, &opts.factor) {
        Ok(Some(_)) => {
            all("k = 3, r = 3 mod 6, a factor with degrees 1 mod 3 exists").with(Condition::ModThreeFactor)
        }
        Ok(None) => ComponentSpectrum::from_fn(
            k,
            vec![
                "k = 3, r = 3 mod 6, no factor with degrees 1 mod 3: 1 is not a sum".into(),
                "spectrum {0} derived: constant 1 gives 0 and complementing pairs 1 with 2".into(),
            ],
            |c| member(c == 0),
        ),
        Err(Error::BudgetExceeded { .. }) => ComponentSpectrum::from_fn(
            k,
            vec!["k = 3, r = 3 mod 6: mod-3 factor search over budget".into()],
            |c| if c == 0 { Membership::In } else { Membership::Unknown },
        ),
        Err(e) => return Err(e),
    })
}

/// Whether `g` has a zero-sum labeling over `Z_4`.
pub fn zero_sum_4_magic(g: &MultiGraph) -> Result<bool> {
    zero_sum_4_magic_with(g, &SpectrumOptions::default())
}

/// Even `r` always succeeds. For odd `r`: a vertex whose edges are all
/// bridges rules it out; a perfect matching labeled 2 together with the
/// 2-factors of the rest labeled `1, 2, 2, ...` settles it positively;
/// otherwise the solver decides.
pub fn zero_sum_4_magic_with(g: &MultiGraph, opts: &SpectrumOptions) -> Result<bool> {
    let r = regular_degree(g)?;
    if r % 2 == 0 {
        return Ok(true);
    }
    if r == 1 {
        return Ok(false);
    }
    let bridges = g.bridges();
    if (0..g.n()).any(|v| g.incident(v).iter().all(|e| bridges.contains(e))) {
        return Ok(false);
    }
    if let Some(matching) = f_factor_with(g, 1, &opts.factor)? {
        let rest = g.complement_edges(&matching);
        let sub = g.edge_subgraph(&rest);
        let parts = two_factorization(&sub.graph)?.parts;
        let mut labels = vec![2i64; g.m()];
        for &local in &parts[0] {
            labels[sub.edge_map[local]] = 1;
        }
        let l = EdgeLabeling::new(4, labels)?;
        if verify(g, &l)? == Some(0) {
            return Ok(true);
        }
    }
    Ok(solve_for_sum(g, 4, 0, &opts.budget)?.is_some())
}

/// Completeness verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub complete: bool,
    /// Satisfied condition, when complete and shared by every component.
    pub condition: Option<Condition>,
    pub reasons: Vec<String>,
}

pub fn is_completely_k_magic(g: &MultiGraph, k: u64) -> Result<Completeness> {
    is_completely_k_magic_with(g, k, &SpectrumOptions::default())
}

pub fn is_completely_k_magic_with(g: &MultiGraph, k: u64, opts: &SpectrumOptions) -> Result<Completeness> {
    let (set, condition) = predict_detailed(g, k, opts)?;
    if !set.is_decided() {
        return Err(Error::BudgetExceeded { nodes: opts.budget.max_nodes });
    }
    let mut reasons = set.provenance.clone();
    if k == 2 {
        reasons.push("k = 2: every label is 1, so exactly one sum occurs".into());
    }
    if let Some(c) = condition {
        reasons.push(format!("condition: {}", c.describe()));
    }
    Ok(Completeness { complete: set.is_complete(), condition, reasons })
}

/// Bounded null set: every `k` in `1..=kmax` with `0` in the spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullSet {
    pub kmax: u64,
    pub null_set: Vec<u64>,
    pub undecided: Vec<u64>,
}

impl NullSet {
    pub fn to_json(&self) -> String {
        crate::json::to_sorted_string(self)
    }
}

pub fn null_set(g: &MultiGraph, kmax: u64, opts: &SpectrumOptions) -> Result<NullSet> {
    let mut out = NullSet { kmax, null_set: Vec::new(), undecided: Vec::new() };
    for k in 1..=kmax {
        match predict_spectrum_with(g, k, opts)?.contains(0) {
            Some(true) => out.null_set.push(k),
            Some(false) => {}
            None => out.undecided.push(k),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> MultiGraph {
        generate(&f, None).unwrap()
    }

    fn members(g: &MultiGraph, k: u64) -> Vec<i64> {
        predict_spectrum(g, k).unwrap().members().unwrap().to_vec()
    }

    #[test]
    fn predicted_point_values() {
        let k5 = gen(Family::Complete { n: 5 });
        assert_eq!(members(&k5, 6), vec![0, 2, 4]);
        assert_eq!(members(&k5, 5), vec![0, 1, 2, 3, 4]);
        assert_eq!(members(&k5, 4), vec![0, 2]);
        let p = predict_spectrum(&gen(Family::Petersen), 1).unwrap();
        assert_eq!(p.payload, Payload::Symbolic(Symbolic::Integers));
        assert_eq!(members(&gen(Family::Cycle { n: 3 }), 3), vec![1, 2]);
    }

    #[test]
    fn symbolic_algebra() {
        use Symbolic::*;
        assert_eq!(Integers.intersect(Even), Even);
        assert_eq!(NonzeroIntegers.intersect(Even), NonzeroEven);
        assert!(!NonzeroEven.contains(0) && NonzeroEven.contains(-4) && !NonzeroEven.contains(3));
        assert!(Integers.contains(-7));
    }

    #[test]
    fn disconnected_graphs_intersect() {
        let g = gen(Family::DisjointUnion { parts: vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }] });
        assert_eq!(members(&g, 5), vec![1, 2, 3, 4]);
        assert_eq!(members(&g, 6), vec![0, 2, 4]);
        // even total order, but each K_5 has odd order
        let twice =
            gen(Family::DisjointUnion { parts: vec![Family::Complete { n: 5 }, Family::Complete { n: 5 }] });
        assert_eq!(members(&twice, 6), vec![0, 2, 4]);
        let s = predict_spectrum(&g, 1).unwrap();
        assert_eq!(s.payload, Payload::Symbolic(Symbolic::NonzeroEven));
    }

    #[test]
    fn completeness_examples() {
        let v = is_completely_k_magic(&gen(Family::Petersen), 5).unwrap();
        assert!(v.complete);
        assert_eq!(v.condition, Some(Condition::OddDegree));
        assert!(!is_completely_k_magic(&gen(Family::Cycle { n: 5 }), 7).unwrap().complete);
        let v = is_completely_k_magic(&gen(Family::CompleteBipartite { a: 3, b: 3 }), 3).unwrap();
        assert_eq!(v.condition, Some(Condition::ModThreeFactor));
        assert!(!is_completely_k_magic(&gen(Family::Complete { n: 4 }), 2).unwrap().complete);
    }

    #[test]
    fn zero_sum_4_examples() {
        assert!(zero_sum_4_magic(&gen(Family::Complete { n: 4 })).unwrap());
        assert!(zero_sum_4_magic(&gen(Family::Complete { n: 5 })).unwrap());
        assert!(zero_sum_4_magic(&gen(Family::Petersen)).unwrap());
    }

    #[test]
    fn null_set_examples() {
        let opts = SpectrumOptions::default();
        let k4 = gen(Family::Complete { n: 4 });
        assert_eq!(null_set(&k4, 6, &opts).unwrap().null_set, vec![1, 3, 4, 5, 6]);
        let k5 = gen(Family::Complete { n: 5 });
        assert_eq!(null_set(&k5, 5, &opts).unwrap().null_set, vec![1, 2, 3, 4, 5]);
        let c6 = gen(Family::Cycle { n: 6 });
        assert_eq!(null_set(&c6, 4, &opts).unwrap().null_set, vec![1, 2, 3, 4]);
    }

    #[test]
    fn report_shape() {
        let text = predict_spectrum(&gen(Family::Cycle { n: 4 }), 3).unwrap().to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["spectrum"], serde_json::json!([0, 1, 2]));
        assert_eq!(v["complete"], serde_json::json!(true));
        assert!(v.get("symbolic").is_none());
        let text = predict_spectrum(&gen(Family::Petersen), 1).unwrap().to_json();
        assert!(text.contains("\"symbolic\": \"Z\""));
    }
}
