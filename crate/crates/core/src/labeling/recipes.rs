//! Labeling recipes. Each rule proposes candidate labelings of a connected
//! regular graph for a target sum; the dispatcher verifies every candidate
//! and records the ones that miss.

use std::collections::VecDeque;

use super::construct::{build, ConstructOptions, Status};
use super::{fold_values, verify, EdgeLabeling, GraphRef, TraceStep};
use crate::error::{Error, Result};
use crate::factor::{
    double_graph, extract_2h_factor, f_factor_with, mod3_factor_with, two_factorization, DoublingMap,
};
use crate::graph::{EdgeId, MultiGraph};

pub(super) struct Ctx<'a> {
    pub g: &'a MultiGraph,
    pub k: u64,
    pub r: usize,
    pub opts: &'a ConstructOptions,
    pub depth: usize,
}

impl Ctx<'_> {
    fn ki(&self) -> i64 {
        self.k as i64
    }

    fn md(&self, x: i64) -> i64 {
        x.rem_euclid(self.ki())
    }

    fn n(&self) -> usize {
        self.g.n()
    }
}

pub(super) struct Attempt {
    pub labeling: EdgeLabeling,
    /// The last step assigns every label.
    pub steps: Vec<TraceStep>,
}

/// A proposed labeling, or a note on why a recipe could not produce one.
pub(super) type Candidate = std::result::Result<Attempt, String>;

pub(super) type Rule = fn(&Ctx, i64) -> Result<Vec<Candidate>>;

/// Rules in dispatch order.
pub(super) const RULES: &[(&str, Rule)] = &[
    ("1-regular constant", one_regular),
    ("2-regular cycles", cycles),
    ("constant label", constant),
    ("zero-sum", zero_sum),
    ("odd-regular", odd_regular),
    ("even-regular", even_regular),
    ("k = 4", four_magic),
    ("k = 3", three_magic),
    ("2-factor split", two_factor_generic),
    ("perfect matching split", matching_generic),
    ("doubling search", doubling_search),
];

fn md(x: i64, k: u64) -> i64 {
    x.rem_euclid(k as i64)
}

fn labeled(k: u64, labels: Vec<i64>, step: TraceStep) -> Candidate {
    match EdgeLabeling::from_raw(k, &labels) {
        Ok(l) => {
            let step = step.assigning(l.labels());
            Ok(Attempt { labeling: l, steps: vec![step] })
        }
        Err(e) => Err(format!("{}: {e}", step.rule)),
    }
}

fn note(rule: &str, e: impl std::fmt::Display) -> Candidate {
    Err(format!("{rule}: {e}"))
}

// ---- cycles ---------------------------------------------------------------

/// Labels a 2-regular graph with sum `t`: even cycles alternate `x` and
/// `t - x`, odd cycles carry a constant `x` with `2x = t`.
pub(crate) fn label_cycles(g: &MultiGraph, k: u64, t: i64) -> Option<Vec<i64>> {
    let profile = g.two_regular_profile().ok()?;
    let mut labels = vec![0; g.m()];
    for cyc in &profile.cycles {
        if cyc.is_odd() {
            let x = (1..k as i64).find(|&x| md(2 * x - t, k) == 0)?;
            for &e in &cyc.edges {
                labels[e] = x;
            }
        } else {
            let x = (1..k as i64).find(|&x| md(t - x, k) != 0)?;
            for (i, &e) in cyc.edges.iter().enumerate() {
                labels[e] = if i % 2 == 0 { x } else { md(t - x, k) };
            }
        }
    }
    Some(labels)
}

fn one_regular(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r != 1 || t == 0 {
        return Ok(Vec::new());
    }
    let step = TraceStep::new("1-regular: every edge labeled c").param("c", t);
    Ok(vec![labeled(ctx.k, vec![t; ctx.g.m()], step)])
}

fn cycles(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r != 2 {
        return Ok(Vec::new());
    }
    let step =
        TraceStep::new("2-regular: alternating labels on even cycles, 2x = c on odd cycles").param("c", t);
    Ok(vec![match label_cycles(ctx.g, ctx.k, t) {
        Some(labels) => labeled(ctx.k, labels, step),
        None => note(&step.rule, format!("no cycle labeling with sum {t}")),
    }])
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn constant(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    let r = ctx.r as i64;
    let Some(y) = (1..ctx.ki()).find(|&y| ctx.md(r * y - t) == 0) else {
        return Ok(Vec::new());
    };
    let rule = if gcd(ctx.r as u64, ctx.k) == 1 {
        "constant label y = c / r (gcd(r, k) = 1)"
    } else {
        "constant label y with r y = c"
    };
    let step = TraceStep::new(rule).param("y", y);
    Ok(vec![labeled(ctx.k, vec![y; ctx.g.m()], step)])
}

// ---- 2-factor and matching splits ------------------------------------------

/// Labels, the 2-factors and their sums.
type Split = (Vec<i64>, Vec<Vec<EdgeId>>, Vec<i64>);

/// A labeling of an even-regular graph made of cycle labelings of its
/// 2-factors, whose sums add up to `t`.
pub(crate) fn split_two_factors(g: &MultiGraph, k: u64, t: i64) -> Result<Option<Split>> {
    let parts = two_factorization(g)?.parts;
    let subs: Vec<_> = parts.iter().map(|p| g.edge_subgraph(p)).collect();
    let ki = k as i64;
    let sets: Vec<Vec<i64>> =
        subs.iter().map(|s| (0..ki).filter(|&c| label_cycles(&s.graph, k, c).is_some()).collect()).collect();
    // reach[i][v]: parts i.. can contribute a total of v
    let s = parts.len();
    let mut reach = vec![vec![false; k as usize]; s + 1];
    reach[s][0] = true;
    for i in (0..s).rev() {
        for v in 0..ki {
            reach[i][v as usize] = sets[i].iter().any(|&c| reach[i + 1][md(v - c, k) as usize]);
        }
    }
    if !reach[0][md(t, k) as usize] {
        return Ok(None);
    }
    let mut rem = md(t, k);
    let mut labels = vec![0; g.m()];
    let mut sums = Vec::with_capacity(s);
    for (i, sub) in subs.iter().enumerate() {
        let c = *sets[i].iter().find(|&&c| reach[i + 1][md(rem - c, k) as usize]).expect("reachable");
        rem = md(rem - c, k);
        let local = label_cycles(&sub.graph, k, c).expect("sum is achievable");
        for (j, &x) in local.iter().enumerate() {
            labels[sub.edge_map[j]] = x;
        }
        sums.push(c);
    }
    Ok(Some((labels, parts, sums)))
}

fn two_factor_candidate(ctx: &Ctx, t: i64, rule: &str) -> Result<Candidate> {
    Ok(match split_two_factors(ctx.g, ctx.k, t)? {
        Some((labels, parts, sums)) => {
            let mut step = TraceStep::new(rule).param("c", t);
            for (i, (part, s)) in parts.iter().zip(&sums).enumerate() {
                step = step.param(&format!("sum_{}", i + 1), *s).factor(
                    &format!("G_{}", i + 1),
                    GraphRef::Source,
                    2,
                    part,
                );
            }
            labeled(ctx.k, labels, step)
        }
        None => note(rule, format!("no split of the 2-factor sums reaches {t}")),
    })
}

/// Odd `r`: a perfect matching labeled `a` plus a 2-factor split of the rest
/// with sum `t - a`.
fn matching_candidate(ctx: &Ctx, t: i64, labels_a: &[i64], rule: &str) -> Result<Candidate> {
    if ctx.r.is_multiple_of(2) || ctx.r < 3 {
        return Ok(note(rule, "needs odd r >= 3"));
    }
    let Some(matching) = f_factor_with(ctx.g, 1, &ctx.opts.factor)? else {
        return Ok(note(rule, "no perfect matching"));
    };
    let rest = ctx.g.complement_edges(&matching);
    let sub = ctx.g.edge_subgraph(&rest);
    for &a in labels_a {
        if let Some((local, parts, sums)) = split_two_factors(&sub.graph, ctx.k, t - a)? {
            let mut labels = vec![a; ctx.g.m()];
            for (j, &x) in local.iter().enumerate() {
                labels[sub.edge_map[j]] = x;
            }
            let mut step = TraceStep::new(rule).param("a", a).factor("M", GraphRef::Source, 1, &matching);
            for (i, (part, s)) in parts.iter().zip(&sums).enumerate() {
                let global: Vec<EdgeId> = part.iter().map(|&e| sub.edge_map[e]).collect();
                step = step.param(&format!("sum_{}", i + 1), *s).factor(
                    &format!("G_{}", i + 1),
                    GraphRef::Source,
                    2,
                    &global,
                );
            }
            return Ok(labeled(ctx.k, labels, step));
        }
    }
    Ok(note(rule, format!("no matching label completes sum {t}")))
}

fn two_factor_generic(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r % 2 == 1 || ctx.r < 4 || ctx.k < 3 {
        return Ok(Vec::new());
    }
    Ok(vec![two_factor_candidate(ctx, t, "2-factorization with cycle labelings")?])
}

fn matching_generic(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r.is_multiple_of(2) || ctx.r < 3 || ctx.k < 3 {
        return Ok(Vec::new());
    }
    let all: Vec<i64> = (1..ctx.ki()).collect();
    Ok(vec![matching_candidate(ctx, t, &all, "perfect matching labeled a, 2-factors of the rest")?])
}

// ---- doubling ---------------------------------------------------------------

/// Raw labels on the doubled graph: each class gets its value, the rest
/// gets `rest`.
fn doubled_labels(m2: usize, classes: &[(&[EdgeId], i64)], rest: i64) -> Vec<i64> {
    let mut raw = vec![rest; m2];
    for (ids, v) in classes {
        for &e in *ids {
            raw[e] = *v;
        }
    }
    raw
}

/// Folds raw doubled-graph labels, recording the doubled sum in the step.
fn fold_candidate(k: u64, d: &DoublingMap, raw: &[i64], divisor: u8, step: TraceStep) -> Candidate {
    let step = match EdgeLabeling::from_raw(k, raw) {
        Ok(l) => match verify(&d.doubled, &l) {
            Ok(Some(s)) => step.param("doubled_sum", s),
            _ => return note(&step.rule, "doubled labeling is not magic"),
        },
        Err(e) => return note(&step.rule, e),
    };
    let step = step.param("divisor", divisor as i64);
    match fold_values(d, raw, k, divisor) {
        Ok(folded) => labeled(k, folded, step),
        Err(e) => note(&step.rule, format!("fold failed: {e}")),
    }
}

fn zero_sum(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if t != 0 || ctx.r < 3 || ctx.k < 3 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if ctx.r.is_multiple_of(2) {
        out.push(two_factor_candidate(ctx, 0, "zero-sum: 2-factors with cycle labelings")?);
    }
    if ctx.r == 5 && ctx.k >= 5 {
        let d = double_graph(ctx.g);
        let k = ctx.ki();
        out.push(if ctx.k != 8 {
            let split = extract_2h_factor(&d.doubled, 1)?;
            let raw = doubled_labels(d.doubled.m(), &[(&split.parts[0], k - 4)], 1);
            let step = TraceStep::new("5-regular zero-sum, k != 8: doubled 2-factor labeled k - 4, rest 1")
                .factor("H'", GraphRef::Doubled, 2, &split.parts[0]);
            fold_candidate(ctx.k, &d, &raw, 1, step)
        } else {
            let split = extract_2h_factor(&d.doubled, 2)?;
            let raw = doubled_labels(d.doubled.m(), &[(&split.parts[0], 2)], 4);
            let step =
                TraceStep::new("5-regular zero-sum, k = 8: doubled 4-factor labeled 2, rest 4, halved")
                    .factor("H'", GraphRef::Doubled, 4, &split.parts[0]);
            fold_candidate(ctx.k, &d, &raw, 2, step)
        });
    }
    if ctx.k == 4 && ctx.r % 2 == 1 {
        out.push(matching_candidate(
            ctx,
            0,
            &[2],
            "zero-sum 4-magic: perfect matching labeled 2, 2-factors of the rest",
        )?);
    }
    Ok(out)
}

fn odd_regular(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r.is_multiple_of(2) || ctx.r < 3 || ctx.k < 5 || t == 0 {
        return Ok(Vec::new());
    }
    let k = ctx.ki();
    let r = ctx.r as i64;
    let d = double_graph(ctx.g);
    let h = extract_2h_factor(&d.doubled, 1)?;
    let hp = &h.parts[0];
    let m2 = d.doubled.m();
    let mut out = Vec::new();
    if k % 2 == 1 {
        let dd = gcd(ctx.r as u64, ctx.k) as i64;
        let b = k / dd;
        if t != ctx.md(k - b) && t != ctx.md(k - 2 * b) {
            let x = if t % 2 == 1 { (b + t) / 2 } else { (b + t + k) / 2 };
            let y = (k + b) / 2;
            let raw = doubled_labels(m2, &[(hp, x)], y);
            let step = TraceStep::new("odd-regular, k odd: doubled 2-factor labeled x, rest (k + b) / 2")
                .param("b", b)
                .param("x", x)
                .factor("H'", GraphRef::Doubled, 2, hp);
            out.push(fold_candidate(ctx.k, &d, &raw, 1, step));
        }
        if k == 3 * b && t == b {
            let j = extract_2h_factor(&d.doubled, 2)?;
            let jsub = d.doubled.edge_subgraph(&j.parts[0]);
            let halves = two_factorization(&jsub.graph)?.parts;
            let j1: Vec<EdgeId> = halves[0].iter().map(|&e| jsub.edge_map[e]).collect();
            let j2: Vec<EdgeId> = halves[1].iter().map(|&e| jsub.edge_map[e]).collect();
            let raw = doubled_labels(m2, &[(&j1, (b + 1) / 2), (&j2, (b - 1) / 2)], b);
            let step = TraceStep::new(
                "odd-regular, k = 3b: doubled 2-factors labeled (b + 1) / 2 and (b - 1) / 2, rest b",
            )
            .param("b", b)
            .factor("J1'", GraphRef::Doubled, 2, &j1)
            .factor("J2'", GraphRef::Doubled, 2, &j2);
            out.push(fold_candidate(ctx.k, &d, &raw, 1, step));
        }
    } else {
        let r0 = ctx.md(r - 1);
        // halving: the integer sum 2L + 2(r - 1) halves to L + r0
        let l = ctx.md(t - r0);
        if l % 2 == 1 {
            let raw = doubled_labels(m2, &[(hp, l)], 1);
            let step = TraceStep::new("odd-regular, k even: doubled 2-factor labeled c - r0, rest 1, halved")
                .param("r0", r0)
                .param("label", l)
                .factor("H'", GraphRef::Doubled, 2, hp);
            out.push(fold_candidate(ctx.k, &d, &raw, 2, step));
        }
        if t % 2 == 0 {
            for half in [t / 2, t / 2 + k / 2] {
                let l = ctx.md(half - r0);
                if l == 0 {
                    continue;
                }
                let raw = doubled_labels(m2, &[(hp, l)], 1);
                let step =
                    TraceStep::new("odd-regular, k even: doubled 2-factor labeled c - r0, rest 1, summed")
                        .param("r0", r0)
                        .param("label", l)
                        .factor("H'", GraphRef::Doubled, 2, hp);
                out.push(fold_candidate(ctx.k, &d, &raw, 1, step));
            }
        }
    }
    Ok(out)
}

// ---- factor extension ---------------------------------------------------------

/// Labels an `h`-factor with sum `t - (r - h)` by a recursive construction
/// and gives every other edge label 1.
fn extension(ctx: &Ctx, t: i64, factor: &[EdgeId], rule: &str) -> Result<Candidate> {
    if ctx.depth >= ctx.opts.max_depth {
        return Ok(note(rule, "recursion depth reached"));
    }
    let sub = ctx.g.edge_subgraph(factor);
    let Some(h) = sub.graph.regularity() else {
        return Ok(note(rule, "factor is not regular"));
    };
    let alpha = ctx.md(t - (ctx.r - h) as i64);
    let inner = build(&sub.graph, ctx.k, alpha, ctx.opts, ctx.depth + 1)?;
    let Some(lh) = inner.labeling else {
        let why = match inner.status {
            Status::Excluded => "has no such labeling",
            _ => "was not decided",
        };
        return Ok(note(rule, format!("{h}-factor {why} for sum {alpha}")));
    };
    let l = match super::extend_by_factor(ctx.g, factor, &lh, t) {
        Ok(l) => l,
        Err(e) => return Ok(note(rule, e)),
    };
    let mut steps = inner.trace.lift(&sub.edge_map, ctx.g.m(), None).steps;
    steps.push(
        TraceStep::new(rule)
            .param("h", h as i64)
            .param("alpha", alpha)
            .factor("H", GraphRef::Source, h, factor)
            .assigning(l.labels()),
    );
    Ok(Ok(Attempt { labeling: l, steps }))
}

/// Two edge-disjoint spanning factors labeled independently with sums adding
/// up to `t`.
fn factor_pair(ctx: &Ctx, t: i64, first: &[EdgeId], rule: &str) -> Result<Candidate> {
    if ctx.depth >= ctx.opts.max_depth {
        return Ok(note(rule, "recursion depth reached"));
    }
    let second = ctx.g.complement_edges(first);
    let (a, b) = (ctx.g.edge_subgraph(first), ctx.g.edge_subgraph(&second));
    for s1 in 0..ctx.ki() {
        let s2 = ctx.md(t - s1);
        let la = build(&a.graph, ctx.k, s1, ctx.opts, ctx.depth + 1)?;
        let Some(l1) = la.labeling else { continue };
        let lb = build(&b.graph, ctx.k, s2, ctx.opts, ctx.depth + 1)?;
        let Some(l2) = lb.labeling else { continue };
        let mut labels = vec![0; ctx.g.m()];
        for (j, &x) in l1.labels().iter().enumerate() {
            labels[a.edge_map[j]] = x;
        }
        for (j, &x) in l2.labels().iter().enumerate() {
            labels[b.edge_map[j]] = x;
        }
        let mut steps = la.trace.lift(&a.edge_map, ctx.g.m(), None).steps;
        steps.extend(lb.trace.lift(&b.edge_map, ctx.g.m(), None).steps);
        let step = TraceStep::new(rule)
            .param("sum_1", s1)
            .param("sum_2", s2)
            .factor("H", GraphRef::Source, a.graph.regularity().unwrap_or(0), first)
            .factor("G - H", GraphRef::Source, b.graph.regularity().unwrap_or(0), &second);
        let Ok(mut attempt) = labeled(ctx.k, labels, step) else {
            continue;
        };
        steps.append(&mut attempt.steps);
        attempt.steps = steps;
        return Ok(Ok(attempt));
    }
    Ok(note(rule, format!("no pair of factor sums reaches {t}")))
}

fn even_regular(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.r % 2 == 1 || ctx.r < 4 || ctx.k < 5 {
        return Ok(Vec::new());
    }
    if ctx.n() % 2 == 1 {
        return Ok(vec![two_factor_candidate(
            ctx,
            t,
            "even-regular, odd order: 2-factors with cycle labelings",
        )?]);
    }
    let mut out = Vec::new();
    if ctx.r == 4 {
        if ctx.k.is_multiple_of(2) && t != 0 {
            out.extend(even_r4_even_k(ctx, t)?);
        }
        return Ok(out);
    }
    if ctx.r % 4 == 2 {
        let h = ctx.r / 2;
        match f_factor_with(ctx.g, h, &ctx.opts.factor)? {
            Some(f) => {
                out.push(extension(ctx, t, &f, "even-regular, even order: extension from an r/2-factor")?)
            }
            None => out.push(note("even-regular", format!("no {h}-factor"))),
        }
        return Ok(out);
    }
    let six = extract_2h_factor(ctx.g, 3)?;
    let first = extension(ctx, t, &six.parts[0], "even-regular, even order: extension from a 6-factor")?;
    let done = first.is_ok();
    out.push(first);
    if done {
        return Ok(out);
    }
    for h in (3..ctx.r).step_by(2) {
        if let Some(f) = f_factor_with(ctx.g, h, &ctx.opts.factor)? {
            let c = extension(ctx, t, &f, "even-regular, even order: extension from an odd-degree factor")?;
            let done = c.is_ok();
            out.push(c);
            if done {
                break;
            }
        }
    }
    Ok(out)
}

/// 4-regular, even order, even `k`: labelings through a 3-factor of the
/// doubled graph, plus the `c = k / 2` constructions.
fn even_r4_even_k(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    let k = ctx.ki();
    let half = k / 2;
    let d = double_graph(ctx.g);
    let Some(h3) = f_factor_with(&d.doubled, 3, &ctx.opts.factor)? else {
        return Ok(vec![note("even-regular", "doubled graph has no 3-factor")]);
    };
    let m2 = d.doubled.m();
    let mut out = Vec::new();
    if t != half {
        let raw = doubled_labels(m2, &[(&h3, ctx.md(2 * t))], k - t);
        let step = TraceStep::new("even-regular, r = 4, k even: doubled 3-factor labeled 2c, rest k - c")
            .param("c", t)
            .factor("H'", GraphRef::Doubled, 3, &h3);
        out.push(fold_candidate(ctx.k, &d, &raw, 1, step));
        return Ok(out);
    }
    let two = two_factorization(ctx.g)?.parts;
    let (g1, g2) = (&two[0], &two[1]);
    let dd = half;
    if dd % 2 == 0 {
        let mut labels = vec![(k - dd) / 2; ctx.g.m()];
        for &e in g1 {
            labels[e] = dd;
        }
        let step = TraceStep::new("even-regular, r = 4, k = 2d, d even: 2-factors labeled d and (k - d) / 2")
            .param("d", dd)
            .factor("G_1", GraphRef::Source, 2, g1)
            .factor("G_2", GraphRef::Source, 2, g2);
        out.push(labeled(ctx.k, labels, step));
    } else if dd != 3 && dd != 9 {
        let mut f = vec![(k - dd - 1) / 2; ctx.g.m()];
        for &e in g1 {
            f[e] = dd + 1;
        }
        let raw = doubled_labels(m2, &[(&h3, k - 2)], 1);
        match fold_values(&d, &raw, ctx.k, 1) {
            Ok(gl) => {
                let labels: Vec<i64> = f.iter().zip(&gl).map(|(a, b)| ctx.md(a + b)).collect();
                let step = TraceStep::new(
                    "even-regular, r = 4, k = 2d, d odd: (d + 1)-sum 2-factor labeling plus folded (k - 1)-sum labeling",
                )
                .param("d", dd)
                .factor("G_1", GraphRef::Source, 2, g1)
                .factor("G_2", GraphRef::Source, 2, g2)
                .factor("H'", GraphRef::Doubled, 3, &h3);
                out.push(labeled(ctx.k, labels, step));
            }
            Err(e) => out.push(note("even-regular", e)),
        }
    } else {
        let x = if dd == 3 { 1 } else { 3 };
        let raw = doubled_labels(m2, &[(&h3, 2 * x)], 1);
        let labels: Vec<i64> =
            (0..ctx.g.m()).map(|i| ctx.md(raw[d.pairs[i].0] + raw[d.pairs[i].1] + 1)).collect();
        let step = TraceStep::new(
            "even-regular, r = 4, d in {3, 9}: doubled 3-factor labeled 2x, rest 1, folded plus 1",
        )
        .param("d", dd)
        .param("x", x)
        .factor("H'", GraphRef::Doubled, 3, &h3);
        out.push(labeled(ctx.k, labels, step));
    }
    Ok(out)
}

fn four_magic(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.k != 4 || ctx.r < 3 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if ctx.n() % 2 == 1 {
        out.push(two_factor_candidate(ctx, t, "k = 4, odd order: 2-factors with cycle labelings")?);
        return Ok(out);
    }
    if ctx.r % 2 == 1 {
        return Ok(out);
    }
    let x = ctx.r / 2;
    if x % 2 == 1 {
        let Some(f) = f_factor_with(ctx.g, x, &ctx.opts.factor)? else {
            return Ok(vec![note("k = 4", format!("no {x}-factor"))]);
        };
        let rest = ctx.g.complement_edges(&f);
        let xi = x as i64;
        for y1 in 1..4 {
            for y2 in 1..4 {
                if ctx.md(xi * (y1 + y2) - t) == 0 {
                    let mut labels = vec![y2; ctx.g.m()];
                    for &e in &f {
                        labels[e] = y1;
                    }
                    let step = TraceStep::new("k = 4, r = 2x, x odd: two x-factors with constant labels")
                        .param("y1", y1)
                        .param("y2", y2)
                        .factor("G_1", GraphRef::Source, x, &f)
                        .factor("G_2", GraphRef::Source, x, &rest);
                    out.push(labeled(4, labels, step));
                    return Ok(out);
                }
            }
        }
    } else if x == 2 {
        if t % 2 == 1 {
            let d = double_graph(ctx.g);
            let Some(h3) = f_factor_with(&d.doubled, 3, &ctx.opts.factor)? else {
                return Ok(vec![note("k = 4", "doubled graph has no 3-factor")]);
            };
            let raw = doubled_labels(d.doubled.m(), &[(&h3, 3)], 1);
            let step = TraceStep::new("k = 4, r = 4: doubled 5-factor labeled 1, 3-factor labeled 3, halved")
                .factor("H'", GraphRef::Doubled, 3, &h3);
            out.push(fold_candidate(4, &d, &raw, 2, step));
        }
    } else {
        let six = extract_2h_factor(ctx.g, 3)?;
        out.push(factor_pair(
            ctx,
            t,
            &six.parts[0],
            "k = 4: 6-factor and its complement labeled separately",
        )?);
    }
    Ok(out)
}

fn three_magic(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.k != 3 || ctx.r < 3 {
        return Ok(Vec::new());
    }
    if ctx.r.is_multiple_of(6) {
        let four = extract_2h_factor(ctx.g, 2)?;
        return Ok(vec![extension(ctx, t, &four.parts[0], "k = 3, r = 0 mod 6: extension from a 4-factor")?]);
    }
    if ctx.r % 6 == 3 && t == 1 {
        return Ok(vec![match mod3_factor_with(ctx.g, &ctx.opts.factor) {
            Ok(Some(h)) => {
                let mut labels = vec![1; ctx.g.m()];
                for &e in &h {
                    labels[e] = 2;
                }
                let step =
                    TraceStep::new("k = 3, r = 3 mod 6: factor with degrees 1 mod 3 labeled 2, rest 1")
                        .factor("H", GraphRef::Source, 0, &h);
                labeled(3, labels, step)
            }
            Ok(None) => note("k = 3", "no factor with degrees 1 mod 3"),
            Err(e) => note("k = 3", e),
        }]);
    }
    Ok(Vec::new())
}

/// Labels a doubled `2h`-factor `a` and the rest `b`, folded with divisor
/// 1 or 2, over all `h`, `a`, `b`.
fn doubling_search(ctx: &Ctx, t: i64) -> Result<Vec<Candidate>> {
    if ctx.k < 3 {
        return Ok(Vec::new());
    }
    let d = double_graph(ctx.g);
    let m = ctx.g.m();
    for h in 1..=ctx.r {
        let split = extract_2h_factor(&d.doubled, h)?;
        let mut inside = vec![false; d.doubled.m()];
        for &e in &split.parts[0] {
            inside[e] = true;
        }
        // copies of each source edge inside the factor
        let count: Vec<i64> =
            (0..m).map(|i| inside[d.pairs[i].0] as i64 + inside[d.pairs[i].1] as i64).collect();
        for divisor in [1i64, 2] {
            for a in 1..ctx.ki() {
                for b in 1..ctx.ki() {
                    let mut labels = Vec::with_capacity(m);
                    for &c in &count {
                        let pair = c * a + (2 - c) * b;
                        if pair % divisor != 0 || ctx.md(pair / divisor) == 0 {
                            break;
                        }
                        labels.push(ctx.md(pair / divisor));
                    }
                    if labels.len() < m {
                        continue;
                    }
                    let mut sums = vec![0; ctx.n()];
                    for e in ctx.g.edges() {
                        sums[e.u] += labels[e.id];
                        sums[e.v] += labels[e.id];
                    }
                    if sums.iter().all(|&s| ctx.md(s - t) == 0) {
                        let step =
                            TraceStep::new("doubling search: doubled 2h-factor labeled a, rest b, folded")
                                .param("h", h as i64)
                                .param("a", a)
                                .param("b", b)
                                .param("divisor", divisor)
                                .factor("H'", GraphRef::Doubled, 2 * h, &split.parts[0]);
                        return Ok(vec![labeled(ctx.k, labels, step)]);
                    }
                }
            }
        }
    }
    Ok(Vec::new())
}

// ---- integers ----------------------------------------------------------------

/// An integer `t`-sum labeling of a connected regular graph whose integer
/// spectrum contains `t`.
pub(super) fn integer_labeling(g: &MultiGraph, r: usize, t: i64) -> Result<Attempt> {
    let attempt = |labels: Vec<i64>, step: TraceStep| -> Result<Attempt> {
        let l = EdgeLabeling::new(1, labels)?;
        let step = step.assigning(l.labels());
        Ok(Attempt { labeling: l, steps: vec![step] })
    };
    if r == 1 || (t != 0 && t % r as i64 == 0) {
        let y = t / r as i64;
        return attempt(vec![y; g.m()], TraceStep::new("integers: constant label c / r").param("y", y));
    }
    if r == 2 {
        let profile = g.two_regular_profile()?;
        let mut labels = vec![0; g.m()];
        for cyc in &profile.cycles {
            if cyc.is_odd() {
                for &e in &cyc.edges {
                    labels[e] = t / 2;
                }
            } else {
                let x = if t == 1 { 2 } else { 1 };
                for (i, &e) in cyc.edges.iter().enumerate() {
                    labels[e] = if i % 2 == 0 { x } else { t - x };
                }
            }
        }
        return attempt(
            labels,
            TraceStep::new(
                "integers, 2-regular: alternating x and c - x on even cycles, c / 2 on odd cycles",
            ),
        );
    }
    let base = tree_solution(g, t)?;
    let zero = zero_sum_integers(g, r)?;
    let scale = base.iter().map(|x| x.abs()).max().unwrap_or(0) + 1;
    let labels: Vec<i64> = base.iter().zip(&zero).map(|(a, b)| a + scale * b).collect();
    attempt(
        labels,
        TraceStep::new("integers: spanning-tree solution plus a scaled nowhere-zero zero-sum labeling")
            .param("scale", scale),
    )
}

/// Some integer labeling, zeros allowed, with every vertex sum `t`. Tree
/// edges are solved leaf-first; on a non-bipartite graph one same-colour
/// non-tree edge absorbs the root's imbalance.
fn tree_solution(g: &MultiGraph, t: i64) -> Result<Vec<i64>> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    colour[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &e in g.incident(u) {
            let w = g.edge(e).other(u);
            if colour[w] == usize::MAX {
                colour[w] = 1 - colour[u];
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }
    let mut labels = vec![0i64; g.m()];
    let same = g.edges().iter().find(|e| colour[e.u] == colour[e.v]);
    let n0 = colour.iter().filter(|&&c| c == 0).count() as i64;
    let n1 = n as i64 - n0;
    if let Some(e) = same {
        let sigma = if colour[e.u] == 0 { 1 } else { -1 };
        if (t * (n0 - n1)) % 2 != 0 {
            return Err(Error::Precondition(format!("{t} is not an integer magic sum here")));
        }
        labels[e.id] = sigma * t * (n0 - n1) / 2;
    } else if n0 != n1 {
        return Err(Error::Precondition("bipartite sides differ in size".into()));
    }
    for &v in order.iter().skip(1).rev() {
        let pe = parent_edge[v];
        let others: i64 = g.incident(v).iter().filter(|&&e| e != pe).map(|&e| labels[e]).sum();
        labels[pe] = t - others;
    }
    Ok(labels)
}

/// A nowhere-zero integer labeling with every vertex sum 0 (`r >= 3`).
fn zero_sum_integers(g: &MultiGraph, r: usize) -> Result<Vec<i64>> {
    if r.is_multiple_of(2) {
        let parts = two_factorization(g)?.parts;
        let s = parts.len();
        let mut weights: Vec<i64> = Vec::with_capacity(s);
        if s % 2 == 1 {
            weights.extend([1, 1, -2]);
        }
        while weights.len() < s {
            weights.extend([1, -1]);
        }
        let mut labels = vec![0; g.m()];
        for (part, w) in parts.iter().zip(weights) {
            for &e in part {
                labels[e] = w;
            }
        }
        return Ok(labels);
    }
    let d = double_graph(g);
    let split = extract_2h_factor(&d.doubled, 1)?;
    let raw = doubled_labels(d.doubled.m(), &[(&split.parts[0], -2 * (r as i64 - 1))], 2);
    fold_values(&d, &raw, 1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::labeling::verify;

    #[test]
    fn cycle_labels() {
        let c5 = generate(&Family::Cycle { n: 5 }, None).unwrap();
        let l = label_cycles(&c5, 7, 3).unwrap();
        assert_eq!(verify(&c5, &EdgeLabeling::new(7, l).unwrap()).unwrap(), Some(3));
        assert!(label_cycles(&c5, 7, 0).is_none());
        assert!(label_cycles(&c5, 6, 3).is_none());
        let c4 = generate(&Family::Cycle { n: 4 }, None).unwrap();
        assert!(label_cycles(&c4, 3, 0).is_some());
    }

    #[test]
    fn two_factor_split_reaches_targets() {
        let k5 = generate(&Family::Complete { n: 5 }, None).unwrap();
        for t in [0, 2, 4] {
            let (labels, _, sums) = split_two_factors(&k5, 6, t).unwrap().unwrap();
            assert_eq!(sums.iter().sum::<i64>().rem_euclid(6), t);
            assert_eq!(verify(&k5, &EdgeLabeling::new(6, labels).unwrap()).unwrap(), Some(t));
        }
        assert!(split_two_factors(&k5, 6, 1).unwrap().is_none());
    }

    #[test]
    fn integer_labelings_verify() {
        for (family, sums) in [
            (Family::Petersen, vec![-3, 0, 1, 7]),
            (Family::Complete { n: 5 }, vec![-2, 0, 6]),
            (Family::Complete { n: 4 }, vec![1, 2, 0]),
            (Family::CompleteBipartite { a: 3, b: 3 }, vec![1, 0, -5]),
            (Family::Complete { n: 6 }, vec![1, 0]),
        ] {
            let g = generate(&family, None).unwrap();
            let r = g.regularity().unwrap();
            for t in sums {
                let a = integer_labeling(&g, r, t).unwrap();
                assert_eq!(verify(&g, &a.labeling).unwrap(), Some(t), "{family:?} c = {t}");
            }
        }
    }

    #[test]
    fn zero_sum_integers_are_nowhere_zero() {
        for n in [4, 6] {
            let g = generate(&Family::Complete { n }, None).unwrap();
            let l = zero_sum_integers(&g, n - 1).unwrap();
            assert!(l.iter().all(|&x| x != 0));
            assert_eq!(verify(&g, &EdgeLabeling::new(1, l).unwrap()).unwrap(), Some(0));
        }
    }
}
