//! Constructive dispatcher: excludes sums outside the predicted spectrum,
//! then tries the labeling recipes in order on each component, verifying
//! every candidate, and falls back to exhaustive search.

use serde::Serialize;

use super::recipes::{self, Attempt, Ctx, RULES};
use super::{reduce, verify, ConstructionTrace, EdgeLabeling, TraceStep};
use crate::error::{Error, Result};
use crate::factor::FactorOptions;
use crate::graph::MultiGraph;
use crate::spectrum::{predict_spectrum_with, solve_for_sum, SolverBudget, SpectrumOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructOptions {
    pub budget: SolverBudget,
    pub factor: FactorOptions,
    /// Run the exhaustive solver when every recipe falls through.
    pub solver_fallback: bool,
    /// Nesting limit for recipes that label a factor recursively.
    pub max_depth: usize,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            budget: SolverBudget::default(),
            factor: FactorOptions::default(),
            solver_fallback: true,
            max_depth: 4,
        }
    }
}

impl ConstructOptions {
    fn spectrum(&self) -> SpectrumOptions {
        SpectrumOptions { budget: self.budget, factor: self.factor }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Built,
    /// No labeling with this sum exists.
    Excluded,
    /// Neither built nor excluded within budget.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructResult {
    pub labeling: Option<EdgeLabeling>,
    pub trace: ConstructionTrace,
    pub status: Status,
}

impl ConstructResult {
    fn failed(status: Status, trace: ConstructionTrace) -> Self {
        ConstructResult { labeling: None, trace, status }
    }
}

/// A `c`-sum `k`-magic labeling of a regular graph with its derivation.
pub fn construct(g: &MultiGraph, k: u64, c: i64) -> Result<ConstructResult> {
    construct_with(g, k, c, &ConstructOptions::default())
}

pub fn construct_with(g: &MultiGraph, k: u64, c: i64, opts: &ConstructOptions) -> Result<ConstructResult> {
    build(g, k, c, opts, 0)
}

pub(super) fn build(
    g: &MultiGraph,
    k: u64,
    c: i64,
    opts: &ConstructOptions,
    depth: usize,
) -> Result<ConstructResult> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    let r = g.regularity().ok_or(Error::NotRegular)?;
    if r == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let t = reduce(c, k);
    let predicted = predict_spectrum_with(g, k, &opts.spectrum())?;
    if predicted.contains(t) == Some(false) {
        let mut trace = ConstructionTrace::default();
        for line in &predicted.provenance {
            trace.push(TraceStep::note("excluded", line.clone()).param("c", t));
        }
        return Ok(ConstructResult::failed(Status::Excluded, trace));
    }
    let comps = g.components();
    if comps.len() == 1 {
        return build_connected(g, r, k, t, opts, depth);
    }
    let mut labels = vec![0i64; g.m()];
    let mut trace = ConstructionTrace::default();
    for (i, comp) in comps.iter().enumerate() {
        let sub = g.induced(comp);
        let res = build_connected(&sub.graph, r, k, t, opts, depth)?;
        trace.extend(res.trace.lift(&sub.edge_map, g.m(), Some(i)));
        let Some(l) = res.labeling else {
            return Ok(ConstructResult::failed(res.status, trace));
        };
        for (j, &x) in l.labels().iter().enumerate() {
            labels[sub.edge_map[j]] = x;
        }
    }
    let labeling = EdgeLabeling::new(k, labels)?;
    debug_assert_eq!(verify(g, &labeling)?, Some(t));
    Ok(ConstructResult { labeling: Some(labeling), trace, status: Status::Built })
}

fn build_connected(
    g: &MultiGraph,
    r: usize,
    k: u64,
    t: i64,
    opts: &ConstructOptions,
    depth: usize,
) -> Result<ConstructResult> {
    let mut trace = ConstructionTrace::default();
    if k == 1 {
        let attempt = recipes::integer_labeling(g, r, t)?;
        return Ok(accept(trace, attempt, None));
    }
    let ctx = Ctx { g, k, r, opts, depth };
    let flip = reduce(k as i64 - t, k);
    let mut targets = vec![t];
    if k >= 3 && flip != t {
        targets.push(flip);
    }
    for (name, rule) in RULES {
        for &target in &targets {
            let candidates = match rule(&ctx, target) {
                Ok(c) => c,
                Err(e) => {
                    trace.push(TraceStep::note(*name, format!("not applicable: {e}")));
                    continue;
                }
            };
            for cand in candidates {
                let attempt = match cand {
                    Ok(a) => a,
                    Err(why) => {
                        trace.push(TraceStep::note("fall-through", why));
                        continue;
                    }
                };
                match verify(g, &attempt.labeling) {
                    Ok(Some(s)) if s == t => return Ok(accept(trace, attempt, None)),
                    Ok(Some(s)) if k >= 3 && s == flip => {
                        return Ok(accept(trace, attempt, Some(s)));
                    }
                    Ok(Some(s)) => {
                        trace.push(TraceStep::note(*name, format!("candidate has sum {s}, not {t}")))
                    }
                    Ok(None) => trace.push(TraceStep::note(*name, "candidate is not magic")),
                    Err(e) => trace.push(TraceStep::note(*name, e.to_string())),
                }
            }
        }
    }
    if !opts.solver_fallback {
        trace.push(TraceStep::note("exhaustive search", "disabled"));
        return Ok(ConstructResult::failed(Status::Undecided, trace));
    }
    match solve_for_sum(g, k, t, &opts.budget) {
        Ok(Some(l)) => {
            trace.push(TraceStep::new("exhaustive search").param("c", t).assigning(l.labels()));
            Ok(ConstructResult { labeling: Some(l), trace, status: Status::Built })
        }
        Ok(None) => {
            trace.push(TraceStep::note("exhaustive search", format!("no labeling with sum {t}")));
            Ok(ConstructResult::failed(Status::Excluded, trace))
        }
        Err(Error::BudgetExceeded { nodes }) => {
            trace.push(TraceStep::note("exhaustive search", format!("budget exceeded after {nodes} nodes")));
            Ok(ConstructResult::failed(Status::Undecided, trace))
        }
        Err(e) => Err(e),
    }
}

/// Appends an accepted attempt, complementing it when it hit `k - t`.
fn accept(mut trace: ConstructionTrace, attempt: Attempt, flipped_from: Option<i64>) -> ConstructResult {
    let Attempt { labeling, steps } = attempt;
    for step in steps {
        trace.push(step);
    }
    let labeling = match flipped_from {
        Some(s) => {
            let l = labeling.complement().expect("complement of a Z_k labeling");
            let to = reduce(l.k() as i64 - s, l.k());
            trace.push(
                TraceStep::new("complement: every label x becomes k - x")
                    .param("from", s)
                    .param("to", to)
                    .assigning(l.labels()),
            );
            l
        }
        None => labeling,
    };
    ConstructResult { labeling: Some(labeling), trace, status: Status::Built }
}
