use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::EdgeLabeling;
use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Which graph a factor's edge ids refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphRef {
    Source,
    /// Doubled graph: id `i < m` copies source edge `i`, id `m + i` duplicates it.
    Doubled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRef {
    pub name: String,
    pub graph: GraphRef,
    pub degree: usize,
    pub edges: Vec<EdgeId>,
}

/// Edges that received one label value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelClass {
    pub label: i64,
    pub edges: Vec<EdgeId>,
}

/// One derivation step. Steps that write labels list them in `assign`;
/// replaying all steps in order (later writes win) reproduces the labeling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assign: Vec<LabelClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TraceStep {
    pub fn new(rule: impl Into<String>) -> Self {
        TraceStep { rule: rule.into(), ..TraceStep::default() }
    }

    pub fn note(rule: impl Into<String>, note: impl Into<String>) -> Self {
        TraceStep { note: Some(note.into()), ..TraceStep::new(rule) }
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn factor(mut self, name: &str, graph: GraphRef, degree: usize, edges: &[EdgeId]) -> Self {
        self.factors.push(FactorRef { name: name.to_string(), graph, degree, edges: edges.to_vec() });
        self
    }

    /// Records every label of `labels` as assignments.
    pub fn assigning(mut self, labels: &[i64]) -> Self {
        let mut classes: BTreeMap<i64, Vec<EdgeId>> = BTreeMap::new();
        for (e, &x) in labels.iter().enumerate() {
            classes.entry(x).or_default().push(e);
        }
        self.assign = classes.into_iter().map(|(label, edges)| LabelClass { label, edges }).collect();
        self
    }

    fn remap(&mut self, edge_map: &[EdgeId], outer_m: usize) {
        let local_m = edge_map.len();
        let map_source = |e: EdgeId| edge_map[e];
        let map_doubled = |e: EdgeId| {
            if e < local_m {
                edge_map[e]
            } else {
                outer_m + edge_map[e - local_m]
            }
        };
        for f in &mut self.factors {
            f.edges = match f.graph {
                GraphRef::Source => f.edges.iter().map(|&e| map_source(e)).collect(),
                GraphRef::Doubled => f.edges.iter().map(|&e| map_doubled(e)).collect(),
            };
        }
        for class in &mut self.assign {
            class.edges = class.edges.iter().map(|&e| map_source(e)).collect();
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn extend(&mut self, other: ConstructionTrace) {
        self.steps.extend(other.steps);
    }

    /// Rewrites edge ids from a subgraph frame (`edge_map[local] = outer`)
    /// into the frame of a parent graph with `outer_m` edges.
    pub fn lift(mut self, edge_map: &[EdgeId], outer_m: usize, component: Option<usize>) -> Self {
        for step in &mut self.steps {
            step.remap(edge_map, outer_m);
            if step.component.is_none() {
                step.component = component;
            }
        }
        self
    }

    /// Rebuilds the labeling from the recorded assignments.
    pub fn replay(&self, k: u64, m: usize) -> Result<EdgeLabeling> {
        let mut labels = vec![0i64; m];
        for step in &self.steps {
            for class in &step.assign {
                for &e in &class.edges {
                    if e >= m {
                        return Err(Error::MissingLabel(e));
                    }
                    labels[e] = class.label;
                }
            }
        }
        if let Some(e) = labels.iter().position(|&x| x == 0) {
            return Err(Error::MissingLabel(e));
        }
        EdgeLabeling::new(k, labels)
    }

    /// Rules of the steps that wrote labels.
    pub fn rules(&self) -> Vec<&str> {
        self.steps.iter().filter(|s| !s.assign.is_empty()).map(|s| s.rule.as_str()).collect()
    }

    /// One line per step.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let mut line = String::new();
            if let Some(c) = step.component {
                line.push_str(&format!("[component {c}] "));
            }
            line.push_str(&step.rule);
            if !step.params.is_empty() {
                let params: Vec<String> = step.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                line.push_str(&format!(" ({})", params.join(", ")));
            }
            if let Some(note) = &step.note {
                line.push_str(&format!(": {note}"));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_last_write_wins() {
        let mut t = ConstructionTrace::default();
        t.push(TraceStep::new("a").assigning(&[1, 1, 2]));
        t.push(TraceStep::note("b", "no labels"));
        t.push(TraceStep::new("complement").assigning(&[2, 2, 1]));
        assert_eq!(t.replay(3, 3).unwrap().labels(), &[2, 2, 1]);
        assert_eq!(t.rules(), vec!["a", "complement"]);
        assert!(t.replay(3, 4).is_err());
    }

    #[test]
    fn lift_maps_both_frames() {
        let mut t = ConstructionTrace::default();
        t.push(TraceStep::new("r").factor("H'", GraphRef::Doubled, 2, &[0, 2]).assigning(&[5, 6]));
        // local graph has 2 edges mapped to outer ids 3 and 7 of 10
        let lifted = t.lift(&[3, 7], 10, Some(1));
        let step = &lifted.steps[0];
        assert_eq!(step.factors[0].edges, vec![3, 13]);
        assert_eq!(step.assign[0].edges, vec![3]);
        assert_eq!(step.assign[1].edges, vec![7]);
        assert_eq!(step.component, Some(1));
    }
}
