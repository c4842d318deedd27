//! Per-component orchestration. Each connected component is attacked in a
//! fixed order: a dominating singleton, the four-path seed (all path ends in,
//! all midpoints out), reduction seeded from six-vertex witnesses, and
//! finally the long-path fallback. The first attempt that survives
//! verification wins, and every winning attempt leaves a replayable trace in
//! original vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use crate::domination::{verify, Conflict, EdsSolution, StateMap};
use crate::engine::{
    apply_alternative, assert_structural_lemmas, branch_candidates, propagate, propagate_scoped,
    AssertionViolation, PropagationResult, RuleFiring, RuleId, RuleScope,
};
use crate::graph::{BipartiteGraph, Vertex};
use crate::oracle;
use crate::pattern::{enumerate_induced_paths, find_induced_c6, find_s115, InducedWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Accept any bipartite input; structural assertion failures become
    /// warnings on the trace.
    Permissive,
    /// Refuse inputs outside the supported class and abort any attempt whose
    /// reduced state fails an assertion.
    Strict,
}

#[derive(Clone, Copy, Debug)]
pub struct DriverConfig {
    pub strictness: Strictness,
    /// Recursion ceiling for branch alternatives; a seed candidate that needs
    /// more is abandoned.
    pub branch_depth_cap: usize,
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig { strictness: Strictness::Permissive, branch_depth_cap: 64 }
    }
}

#[derive(Clone, Debug)]
pub enum SolveError {
    NotS115Free { witness: InducedWitness },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotS115Free { witness } => {
                write!(f, "input contains an induced S(1,1,5) on vertices")?;
                for v in &witness.vertices {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for SolveError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchLabel {
    Singleton,
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// Vertices decided before propagation ran.
    Seed { forced: Vec<Vertex>, excluded: Vec<Vertex> },
    Rule(RuleFiring),
    /// The branch alternative taken at this point, with its position in the
    /// emitted list.
    Alternative { rule: RuleId, index: usize, forced: Vec<Vertex>, excluded: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    /// `basis` and `excluded` snapshot the state handed to the residual
    /// search; `solution` is the component's full answer.
    Solved { basis: Vec<Vertex>, excluded: Vec<Vertex>, solution: Vec<Vertex> },
    /// Every attempt failed for this component.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveTrace {
    pub component: usize,
    pub branch: BranchLabel,
    /// The six-vertex witness whose seeding succeeded, for branch B.
    pub candidate: Option<Vec<Vertex>>,
    pub steps: Vec<TraceStep>,
    pub assertion_warnings: Vec<AssertionViolation>,
    pub outcome: TraceOutcome,
}

impl SolveTrace {
    /// Reapplies the recorded steps to a fresh state. For a Solved trace the
    /// result matches the recorded basis and exclusion snapshot.
    pub fn replay(&self, g: &BipartiteGraph) -> Result<StateMap, Conflict> {
        let mut st = StateMap::new(g.n());
        for step in &self.steps {
            let (forced, excluded) = match step {
                TraceStep::Seed { forced, excluded } => (forced, excluded),
                TraceStep::Rule(f) => (&f.forced, &f.excluded),
                TraceStep::Alternative { forced, excluded, .. } => (forced, excluded),
            };
            for &v in forced {
                st.force(g, v)?;
            }
            for &v in excluded {
                st.exclude(v)?;
            }
        }
        Ok(st)
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: Option<EdsSolution>,
    pub traces: Vec<SolveTrace>,
}

#[derive(Clone, Debug)]
pub struct CompareReport {
    pub driver: Option<EdsSolution>,
    pub oracle: Option<EdsSolution>,
    /// Both sides agree on existence.
    pub agree: bool,
    pub driver_valid: bool,
    pub oracle_valid: bool,
}

pub fn solve(g: &BipartiteGraph) -> Result<SolveOutcome, SolveError> {
    solve_with(g, &DriverConfig::default())
}

pub fn solve_with(g: &BipartiteGraph, cfg: &DriverConfig) -> Result<SolveOutcome, SolveError> {
    if cfg.strictness == Strictness::Strict {
        if let Some(witness) = find_s115(g) {
            return Err(SolveError::NotS115Free { witness });
        }
    }
    let comps = g.components();
    let mut ids: Vec<Vertex> = Vec::new();
    let mut traces = Vec::new();
    for (cid, members) in comps.iter().enumerate() {
        let (sub, map) = g.induced_subgraph(members);
        match solve_component(&sub, cfg) {
            Some(found) => {
                ids.extend(found.solution.iter().map(|&v| map[v]));
                traces.push(found.into_trace(cid, &map));
            }
            None => {
                traces.push(SolveTrace {
                    component: cid,
                    branch: BranchLabel::C,
                    candidate: None,
                    steps: Vec::new(),
                    assertion_warnings: Vec::new(),
                    outcome: TraceOutcome::Exhausted,
                });
                return Ok(SolveOutcome { solution: None, traces });
            }
        }
    }
    let solution = EdsSolution::new(ids);
    assert!(verify(g, &solution).valid, "assembled solution must verify");
    Ok(SolveOutcome { solution: Some(solution), traces })
}

/// Runs the driver and the exact search side by side on the same input.
pub fn solve_compare(g: &BipartiteGraph) -> CompareReport {
    let driver =
        solve(g).expect("permissive mode accepts any bipartite input").solution;
    let oracle_sol = oracle::solve(g, None).solution;
    let driver_valid = driver.as_ref().map_or(true, |d| verify(g, d).valid);
    let oracle_valid = oracle_sol.as_ref().map_or(true, |d| verify(g, d).valid);
    CompareReport {
        agree: driver.is_some() == oracle_sol.is_some(),
        driver,
        oracle: oracle_sol,
        driver_valid,
        oracle_valid,
    }
}

/// A successful component attempt, still in subgraph ids.
struct CompSolve {
    solution: Vec<Vertex>,
    branch: BranchLabel,
    candidate: Option<Vec<Vertex>>,
    steps: Vec<TraceStep>,
    warnings: Vec<AssertionViolation>,
    basis: Vec<Vertex>,
    excluded: Vec<Vertex>,
}

impl CompSolve {
    fn into_trace(self, component: usize, map: &[Vertex]) -> SolveTrace {
        let m = |v: &[Vertex]| -> Vec<Vertex> { v.iter().map(|&x| map[x]).collect() };
        SolveTrace {
            component,
            branch: self.branch,
            candidate: self.candidate.as_deref().map(m),
            steps: self
                .steps
                .iter()
                .map(|s| match s {
                    TraceStep::Seed { forced, excluded } => {
                        TraceStep::Seed { forced: m(forced), excluded: m(excluded) }
                    }
                    TraceStep::Rule(f) => TraceStep::Rule(RuleFiring {
                        rule: f.rule,
                        forced: m(&f.forced),
                        excluded: m(&f.excluded),
                    }),
                    TraceStep::Alternative { rule, index, forced, excluded } => {
                        TraceStep::Alternative {
                            rule: *rule,
                            index: *index,
                            forced: m(forced),
                            excluded: m(excluded),
                        }
                    }
                })
                .collect(),
            assertion_warnings: self
                .warnings
                .iter()
                .map(|w| AssertionViolation { id: w.id, witness: m(&w.witness) })
                .collect(),
            outcome: TraceOutcome::Solved {
                basis: m(&self.basis),
                excluded: m(&self.excluded),
                solution: m(&self.solution),
            },
        }
    }
}

fn solve_component(sub: &BipartiteGraph, cfg: &DriverConfig) -> Option<CompSolve> {
    try_singleton(sub)
        .or_else(|| try_branch_a(sub))
        .or_else(|| try_branch_b(sub, cfg))
        .or_else(|| try_branch_c(sub))
}

/// A vertex adjacent to the whole component is an e.d.s. by itself.
fn try_singleton(sub: &BipartiteGraph) -> Option<CompSolve> {
    let v = (0..sub.n()).find(|&v| sub.degree(v) + 1 == sub.n())?;
    let mut st = StateMap::new(sub.n());
    let excluded = st.force(sub, v).expect("fresh state");
    debug_assert!(verify(sub, &EdsSolution::new(vec![v])).valid);
    Some(CompSolve {
        solution: vec![v],
        branch: BranchLabel::Singleton,
        candidate: None,
        steps: vec![TraceStep::Seed { forced: vec![v], excluded: Vec::new() }],
        warnings: Vec::new(),
        basis: vec![v],
        excluded,
    })
}

/// If no vertex is both an end and a midpoint of induced four-paths, every
/// end can be forced and every midpoint excluded before the exact search
/// runs. With no four-paths at all this is just the exact search.
fn try_branch_a(sub: &BipartiteGraph) -> Option<CompSolve> {
    let mut ends = BTreeSet::new();
    let mut mids = BTreeSet::new();
    for w in enumerate_induced_paths(sub, 4, None) {
        ends.insert(w.vertices[0]);
        ends.insert(w.vertices[3]);
        mids.insert(w.vertices[1]);
        mids.insert(w.vertices[2]);
    }
    if ends.intersection(&mids).next().is_some() {
        return None;
    }
    let mut st = StateMap::new(sub.n());
    for &v in &ends {
        st.force(sub, v).ok()?;
    }
    for &v in &mids {
        st.exclude(v).ok()?;
    }
    let sol = oracle::solve(sub, Some(&st)).solution?;
    if !verify(sub, &sol).valid {
        return None;
    }
    Some(CompSolve {
        solution: sol.ids().to_vec(),
        branch: BranchLabel::A,
        candidate: None,
        steps: vec![TraceStep::Seed {
            forced: ends.into_iter().collect(),
            excluded: mids.into_iter().collect(),
        }],
        warnings: Vec::new(),
        basis: st.basis().to_vec(),
        excluded: st.excluded(),
    })
}

/// The seed pairs branch B tries, in order: the second and fifth vertex of
/// every induced six-path, then the three antipodal pairs of every induced
/// six-cycle, keeping the first witness of each unordered pair.
pub fn branch_b_candidates(g: &BipartiteGraph) -> Vec<(Vec<Vertex>, (Vertex, Vertex))> {
    let mut raw: Vec<(Vec<Vertex>, (Vertex, Vertex))> = Vec::new();
    for w in enumerate_induced_paths(g, 6, None) {
        let pair = (w.vertices[1], w.vertices[4]);
        raw.push((w.vertices, pair));
    }
    for c in find_induced_c6(g) {
        let v = c.vertices;
        for pair in [(v[0], v[3]), (v[1], v[4]), (v[2], v[5])] {
            raw.push((v.clone(), pair));
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (witness, (a, b)) in raw {
        if seen.insert((a.min(b), a.max(b))) {
            out.push((witness, (a, b)));
        }
    }
    out
}

/// Seeds from six-vertex witnesses: the second and fifth vertex of an
/// induced six-path, or an antipodal pair of an induced six-cycle, must both
/// be in the solution if that witness is the reason the instance is hard.
/// Each distinct pair is tried once, six-paths first.
fn try_branch_b(sub: &BipartiteGraph, cfg: &DriverConfig) -> Option<CompSolve> {
    for (witness, (a, b)) in branch_b_candidates(sub) {
        let mut st = StateMap::new(sub.n());
        if st.force(sub, a).is_err() || st.force(sub, b).is_err() {
            continue;
        }
        let mut steps = vec![TraceStep::Seed { forced: vec![a, b], excluded: Vec::new() }];
        if let Some((solution, state, warnings)) =
            reduce_to_solution(sub, st, 0, cfg, &mut steps)
        {
            return Some(CompSolve {
                solution,
                branch: BranchLabel::B,
                candidate: Some(witness),
                steps,
                warnings,
                basis: state.basis().to_vec(),
                excluded: state.excluded(),
            });
        }
    }
    None
}

/// Propagates to a fixpoint and recurses through branch alternatives until a
/// state completes. Steps pushed along a failing path are truncated away.
fn reduce_to_solution(
    sub: &BipartiteGraph,
    st: StateMap,
    depth: usize,
    cfg: &DriverConfig,
    steps: &mut Vec<TraceStep>,
) -> Option<(Vec<Vertex>, StateMap, Vec<AssertionViolation>)> {
    let state = match propagate(sub, &st) {
        PropagationResult::Infeasible { .. } => return None,
        PropagationResult::Reduced { state, log } => {
            steps.extend(log.into_iter().map(TraceStep::Rule));
            state
        }
        PropagationResult::Branch { .. } => unreachable!("propagate never branches"),
    };
    match branch_candidates(sub, &state) {
        PropagationResult::Reduced { .. } => complete(sub, state, cfg),
        PropagationResult::Infeasible { .. } => None,
        PropagationResult::Branch { rule, alternatives } => {
            if depth >= cfg.branch_depth_cap {
                return None;
            }
            for (index, alt) in alternatives.iter().enumerate() {
                let Some(next) = apply_alternative(sub, &state, alt) else {
                    continue;
                };
                let mark = steps.len();
                steps.push(TraceStep::Alternative {
                    rule,
                    index,
                    forced: alt.force.clone(),
                    excluded: alt.exclude.clone(),
                });
                if let Some(hit) = reduce_to_solution(sub, next, depth + 1, cfg, steps) {
                    return Some(hit);
                }
                steps.truncate(mark);
            }
            None
        }
    }
}

/// Checks the reduced state's structure, then lets the exact search fill in
/// whatever the rules left open. The whole component goes to the search in
/// one call: vertices excluded but not yet dominated couple the remaining
/// free regions, so completing them independently would be wrong.
fn complete(
    sub: &BipartiteGraph,
    state: StateMap,
    cfg: &DriverConfig,
) -> Option<(Vec<Vertex>, StateMap, Vec<AssertionViolation>)> {
    let report = assert_structural_lemmas(sub, &state);
    if cfg.strictness == Strictness::Strict && !report.is_empty() {
        return None;
    }
    let sol = oracle::solve(sub, Some(&state)).solution?;
    if !verify(sub, &sol).valid {
        return None;
    }
    Some((sol.ids().to_vec(), state, report.violations))
}

/// Long-path fallback: on every induced eight-path the second and seventh
/// vertex are in the solution. Those forcings plus counting rules restrict
/// the exact search; an answer that contains a six-witness pair is rejected
/// because the six-witness branch already had its chance at it.
fn try_branch_c(sub: &BipartiteGraph) -> Option<CompSolve> {
    let mut forced: Vec<Vertex> = enumerate_induced_paths(sub, 8, None)
        .iter()
        .flat_map(|w| [w.vertices[1], w.vertices[6]])
        .collect();
    forced.sort_unstable();
    forced.dedup();
    let mut st = StateMap::new(sub.n());
    for &v in &forced {
        if st.force(sub, v).is_err() {
            return None;
        }
    }
    let mut steps = Vec::new();
    if !forced.is_empty() {
        steps.push(TraceStep::Seed { forced: forced.clone(), excluded: Vec::new() });
    }
    let state = match propagate_scoped(sub, &st, RuleScope::Counting) {
        PropagationResult::Infeasible { .. } => return None,
        PropagationResult::Reduced { state, log } => {
            steps.extend(log.into_iter().map(TraceStep::Rule));
            state
        }
        PropagationResult::Branch { .. } => unreachable!("propagate never branches"),
    };
    let sol = oracle::solve(sub, Some(&state)).solution?;
    if !verify(sub, &sol).valid {
        return None;
    }
    let picked: BTreeSet<Vertex> = sol.iter().collect();
    for w in enumerate_induced_paths(sub, 6, None) {
        if picked.contains(&w.vertices[1]) && picked.contains(&w.vertices[4]) {
            return None;
        }
    }
    for c in find_induced_c6(sub) {
        let v = c.vertices;
        let antipodal = [(v[0], v[3]), (v[1], v[4]), (v[2], v[5])];
        if antipodal.iter().any(|&(x, y)| picked.contains(&x) && picked.contains(&y)) {
            return None;
        }
    }
    Some(CompSolve {
        solution: sol.ids().to_vec(),
        branch: BranchLabel::C,
        candidate: None,
        steps,
        warnings: Vec::new(),
        basis: state.basis().to_vec(),
        excluded: state.excluded(),
    })
}
