//! The structural check suite run per graph by the `lemmas` mode.
//!
//! Every check evaluates an implication. The verdicts:
//!
//! * `Pass` — the checked objects exist and the conclusion held on all of
//!   them (even when a soundness precondition such as 8-cycle-freeness
//!   fails, a true conclusion is still a pass);
//! * `Skipped` — nothing to check (no qualifying holes, cycles, indices),
//!   or the conclusion failed while a soundness precondition was also
//!   unmet, so the implication is vacuous;
//! * `Violation` — the conclusion failed with every precondition verified.
//!   Disproof-grade: the run aborts with a counterexample bundle;
//! * `BudgetExceeded` — an enumeration guard tripped, coverage incomplete.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::cycles::{
    enumerate_cycles_budgeted, enumerate_holes_budgeted, find_cycle_of_length, is_hole, is_p10_free,
};
use crate::graph::Graph;
use crate::structure::{
    check_attachment_path_exclusions, compute_hole_context, extract_hole, find_good_hole_budgeted,
    find_good_path, find_good_path_len3, find_near_good_path, find_theta_233, ic_bound_holds,
    t_m_budgeted, ExclusionError, ExclusionVerdict, GoodHoleError, HoleContext, PathSearchError,
};

use super::CounterexampleBundle;

/// Stable identifiers of the suite's checks, in report order.
pub const LEMMA_IDS: [&str; 8] = [
    "hole_extraction",
    "long_hole",
    "ic_bound",
    "good_path",
    "near_good_path",
    "good_path_len3",
    "attachment_exclusions",
    "theta_even_cycle",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Violation,
    Skipped,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct LemmaOutcome {
    pub verdicts: BTreeMap<String, Verdict>,
    pub bundles: Vec<CounterexampleBundle>,
}

impl LemmaOutcome {
    pub fn any_violation(&self) -> bool {
        self.verdicts.values().any(|v| *v == Verdict::Violation)
    }

    pub fn any_budget_exhausted(&self) -> bool {
        self.verdicts.values().any(|v| *v == Verdict::BudgetExceeded)
    }
}

const HOLE_CAP: u64 = crate::budget::DEFAULT_HOLE_CAP;

/// Runs all eight checks on one graph. `record` is the graph6 text used in
/// bundles; `op_budget` is the per-check operation guard.
pub fn run_lemma_suite(g: &Graph, record: &str, op_budget: u64) -> LemmaOutcome {
    let mut outcome =
        LemmaOutcome { verdicts: BTreeMap::new(), bundles: Vec::new() };
    let checks: [(&str, fn(&Graph, u64) -> (Verdict, Option<Value>)); 8] = [
        ("hole_extraction", check_hole_extraction),
        ("long_hole", check_long_hole),
        ("ic_bound", check_ic_bound),
        ("good_path", check_good_path),
        ("near_good_path", check_near_good_path),
        ("good_path_len3", check_good_path_len3),
        ("attachment_exclusions", check_attachment_exclusions),
        ("theta_even_cycle", check_theta_even_cycle),
    ];
    for (id, check) in checks {
        let (verdict, witness) = check(g, op_budget);
        if verdict == Verdict::Violation {
            outcome.bundles.push(CounterexampleBundle {
                graph6: record.to_string(),
                operation: id.to_string(),
                preconditions_verified: verified_preconditions(id),
                witness: witness.unwrap_or(Value::Null),
            });
        }
        outcome.verdicts.insert(id.to_string(), verdict);
    }
    outcome
}

fn verified_preconditions(id: &str) -> Vec<String> {
    let common = ["no 4-cycle", "no 8-cycle"];
    let mut v: Vec<String> = match id {
        "hole_extraction" => vec!["no 4-cycle".into()],
        "long_hole" => vec!["no 4-cycle".into(), "minimum degree >= 3".into()],
        "ic_bound" | "attachment_exclusions" => common.iter().map(|s| s.to_string()).collect(),
        "good_path" | "near_good_path" | "good_path_len3" => {
            let mut v: Vec<String> = common.iter().map(|s| s.to_string()).collect();
            v.push("minimum degree >= 3".into());
            v.push("hole is good".into());
            v
        }
        "theta_even_cycle" => vec![
            "no induced 10-vertex path".into(),
            "minimum degree >= 3".into(),
            "no triangulated edge on any 5-hole".into(),
            "theta(2,3,3) subgraph present".into(),
        ],
        _ => Vec::new(),
    };
    v.sort();
    v
}

fn c4_free(g: &Graph) -> bool {
    find_cycle_of_length(g, 4).is_none()
}

fn c8_free(g: &Graph) -> bool {
    g.n() < 8 || find_cycle_of_length(g, 8).is_none()
}

/// Every cycle of length >= 4 in a 4-cycle-free graph shrinks to a hole of
/// length in [5, original] on a vertex subset.
fn check_hole_extraction(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    if !c4_free(g) {
        return (Verdict::Skipped, None);
    }
    let mut budget = Budget::ops(op_budget);
    let cycles = match enumerate_cycles_budgeted(g, 4, g.n(), &mut budget, HOLE_CAP) {
        Ok(c) => c,
        Err(_) => return (Verdict::BudgetExceeded, None),
    };
    if cycles.is_empty() {
        return (Verdict::Skipped, None);
    }
    for c in cycles {
        let bad = |detail: String| {
            (
                Verdict::Violation,
                Some(json!({ "cycle": c.verts(), "detail": detail })),
            )
        };
        match extract_hole(g, &c) {
            Ok(hole) => {
                let len_ok = hole.len() >= 5 && hole.len() <= c.len();
                let subset_ok = hole.verts().iter().all(|v| c.contains(*v));
                let hole_ok = is_hole(g, &hole).unwrap_or(false);
                if !(len_ok && subset_ok && hole_ok) {
                    return bad(format!("extraction produced a non-hole {:?}", hole.verts()));
                }
            }
            Err(e) => return bad(format!("extraction failed: {e}")),
        }
    }
    (Verdict::Pass, None)
}

/// A 4-cycle-free graph with minimum degree 3 has a hole of length >= 5.
fn check_long_hole(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    if !c4_free(g) || g.min_degree() < 3 {
        return (Verdict::Skipped, None);
    }
    let mut budget = Budget::ops(op_budget);
    match find_good_hole_budgeted(g, &mut budget, HOLE_CAP) {
        Ok(_) => (Verdict::Pass, None),
        Err(GoodHoleError::NoLongHole(cause)) => {
            (Verdict::Violation, Some(json!({ "cause": format!("{cause:?}") })))
        }
        Err(GoodHoleError::Budget(_)) => (Verdict::BudgetExceeded, None),
    }
}

/// Every hole of length m in {5, 6, 7} carries at most 7 - m marked
/// indices.
fn check_ic_bound(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    let mut budget = Budget::ops(op_budget);
    let mut any = false;
    for m in 5..=7usize.min(g.n()) {
        let holes = match enumerate_holes_budgeted(g, m, &mut budget, HOLE_CAP) {
            Ok(h) => h,
            Err(_) => return (Verdict::BudgetExceeded, None),
        };
        for hole in holes {
            any = true;
            let ctx = compute_hole_context(g, &hole).expect("enumerated holes are holes");
            if !ic_bound_holds(&ctx) {
                if c4_free(g) && c8_free(g) {
                    return (
                        Verdict::Violation,
                        Some(json!({
                            "hole": ctx.hole().verts(),
                            "marked_indices": ctx.marked_indices(),
                        })),
                    );
                }
                return (Verdict::Skipped, None);
            }
        }
    }
    if any {
        (Verdict::Pass, None)
    } else {
        (Verdict::Skipped, None)
    }
}

fn good_hole_or_skip(g: &Graph, op_budget: u64) -> Result<HoleContext, (Verdict, Option<Value>)> {
    let mut budget = Budget::ops(op_budget);
    match find_good_hole_budgeted(g, &mut budget, HOLE_CAP) {
        Ok(ctx) => Ok(ctx),
        Err(GoodHoleError::NoLongHole(_)) => Err((Verdict::Skipped, None)),
        Err(GoodHoleError::Budget(_)) => Err((Verdict::BudgetExceeded, None)),
    }
}

fn map_path_search<T>(
    result: Result<T, PathSearchError>,
    ctx: &HoleContext,
    i: usize,
) -> Result<Option<T>, (Verdict, Option<Value>)> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(PathSearchError::PreconditionFailed(_)) => Err((Verdict::Skipped, None)),
        Err(PathSearchError::NotFound { .. }) => Err((
            Verdict::Violation,
            Some(json!({ "hole": ctx.hole().verts(), "index": i })),
        )),
        Err(PathSearchError::Budget(_)) => Err((Verdict::BudgetExceeded, None)),
    }
}

/// On a good hole, a good path of the stated order exists at every index.
fn check_good_path(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    let ctx = match good_hole_or_skip(g, op_budget) {
        Ok(ctx) => ctx,
        Err(v) => return v,
    };
    for i in 0..ctx.len() {
        match map_path_search(find_good_path(g, &ctx, i), &ctx, i) {
            Ok(_) => {}
            Err(v) => return v,
        }
    }
    (Verdict::Pass, None)
}

/// At every marked index of a good 5-hole, a near-good path exists.
fn check_near_good_path(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    let ctx = match good_hole_or_skip(g, op_budget) {
        Ok(ctx) => ctx,
        Err(v) => return v,
    };
    if ctx.len() != 5 || ctx.marked_count() == 0 {
        return (Verdict::Skipped, None);
    }
    for i in ctx.marked_indices() {
        match map_path_search(find_near_good_path(g, &ctx, i), &ctx, i) {
            Ok(_) => {}
            Err(v) => return v,
        }
    }
    (Verdict::Pass, None)
}

/// At every plain index of a good 5-hole (neither marked nor following a
/// marked index), a single-attachment path of length three exists.
fn check_good_path_len3(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    let ctx = match good_hole_or_skip(g, op_budget) {
        Ok(ctx) => ctx,
        Err(v) => return v,
    };
    if ctx.len() != 5 {
        return (Verdict::Skipped, None);
    }
    let plain: Vec<usize> =
        (0..5).filter(|&i| !ctx.is_marked(i) && !ctx.follows_marked(i)).collect();
    if plain.is_empty() {
        return (Verdict::Skipped, None);
    }
    for i in plain {
        match map_path_search(find_good_path_len3(g, &ctx, i), &ctx, i) {
            Ok(_) => {}
            Err(v) => return v,
        }
    }
    (Verdict::Pass, None)
}

/// Path lengths between attachment sets of every 5-hole avoid the
/// forbidden values.
fn check_attachment_exclusions(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    let mut budget = Budget::ops(op_budget);
    let holes = match enumerate_holes_budgeted(g, 5, &mut budget, HOLE_CAP) {
        Ok(h) => h,
        Err(_) => return (Verdict::BudgetExceeded, None),
    };
    if holes.is_empty() {
        return (Verdict::Skipped, None);
    }
    for hole in holes {
        let ctx = compute_hole_context(g, &hole).expect("enumerated holes are holes");
        match check_attachment_path_exclusions(g, &ctx, &mut budget) {
            Ok(ExclusionVerdict::Pass) => {}
            Ok(ExclusionVerdict::Violation { from_index, to_index, path }) => {
                return (
                    Verdict::Violation,
                    Some(json!({
                        "hole": ctx.hole().verts(),
                        "from_index": from_index,
                        "to_index": to_index,
                        "path": path.verts(),
                    })),
                );
            }
            Err(ExclusionError::PreconditionFailed(_)) => return (Verdict::Skipped, None),
            Err(ExclusionError::Budget(_)) => return (Verdict::BudgetExceeded, None),
        }
    }
    (Verdict::Pass, None)
}

/// A graph with minimum degree 3, no induced 10-vertex path, no
/// triangulated edge on any 5-hole, and a theta(2,3,3) subgraph contains a
/// 4- or 8-cycle.
fn check_theta_even_cycle(g: &Graph, op_budget: u64) -> (Verdict, Option<Value>) {
    if g.min_degree() < 3 {
        return (Verdict::Skipped, None);
    }
    let mut budget = Budget::ops(op_budget);
    match t_m_budgeted(g, 5, &mut budget, HOLE_CAP) {
        Ok(0) => {}
        Ok(_) => return (Verdict::Skipped, None),
        Err(_) => return (Verdict::BudgetExceeded, None),
    }
    if !is_p10_free(g) {
        return (Verdict::Skipped, None);
    }
    let Some(theta) = find_theta_233(g) else {
        return (Verdict::Skipped, None);
    };
    if find_cycle_of_length(g, 4).is_some() || (g.n() >= 8 && find_cycle_of_length(g, 8).is_some())
    {
        (Verdict::Pass, None)
    } else {
        (
            Verdict::Violation,
            Some(json!({
                "branches": [theta.branches.0, theta.branches.1],
                "mid": theta.mid,
                "long_paths": theta.long_paths,
            })),
        )
    }
}
