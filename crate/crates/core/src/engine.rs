//! Reduction of a partially decided instance relative to its basis levels.
//!
//! Everything here is driven by the distance levels `N_i` of the current
//! basis. Counting rules R1-R3 follow single-dominator arguments through the
//! levels, structural rules R4-R5 decide shapes in the level-3/4 zone, branch
//! rules B1-B3 emit the alternatives for shapes the rules cannot settle, and
//! assertions A1-A6 check the level structure a fully reduced state must
//! have. Levels are recomputed after every firing because each firing grows
//! the basis.

use std::collections::VecDeque;
use std::fmt;

use crate::domination::StateMap;
use crate::graph::{BipartiteGraph, DistanceLevels, Side, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    B1,
    B2,
    B3,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One rule application: what it forced and what fell out as excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: RuleId,
    pub forced: Vec<Vertex>,
    pub excluded: Vec<Vertex>,
}

/// One way to continue past an under-determined shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchAlternative {
    pub force: Vec<Vertex>,
    pub exclude: Vec<Vertex>,
}

#[derive(Clone, Debug)]
pub enum PropagationResult {
    /// Fixpoint reached; `log` lists the firings in order.
    Reduced { state: StateMap, log: Vec<RuleFiring> },
    /// No e.d.s. extends the incoming state. `witness` names the vertices the
    /// failing rule looked at.
    Infeasible { rule: RuleId, witness: Vec<Vertex>, log: Vec<RuleFiring> },
    /// An under-determined shape; the caller tries the alternatives in order.
    Branch { rule: RuleId, alternatives: Vec<BranchAlternative> },
}

/// `All` runs R1-R5, `Counting` only R1-R3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleScope {
    All,
    Counting,
}

pub const DEFAULT_RULE_ORDER: [RuleId; 5] =
    [RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5];

pub fn propagate(g: &BipartiteGraph, state: &StateMap) -> PropagationResult {
    propagate_scoped(g, state, RuleScope::All)
}

pub fn propagate_scoped(
    g: &BipartiteGraph,
    state: &StateMap,
    scope: RuleScope,
) -> PropagationResult {
    propagate_with_order(g, state, scope, &DEFAULT_RULE_ORDER)
}

enum Step {
    Quiet,
    Fired(RuleFiring),
    Dead(RuleId, Vec<Vertex>),
}

/// Scheduling hook: each cycle tries the rules in `order` and the first one
/// that acts wins the cycle. R4/R5 assume the counting rules are quiet, so
/// orders that put them earlier are only meaningful for experiments. Branch
/// ids in `order` are ignored.
pub fn propagate_with_order(
    g: &BipartiteGraph,
    state: &StateMap,
    scope: RuleScope,
    order: &[RuleId],
) -> PropagationResult {
    let mut state = state.clone();
    let mut log: Vec<RuleFiring> = Vec::new();
    'cycle: loop {
        if state.basis().is_empty() {
            return PropagationResult::Reduced { state, log };
        }
        let levels = g.distance_levels(state.basis()).expect("basis is nonempty");
        for &rule in order {
            let structural = matches!(rule, RuleId::R4 | RuleId::R5);
            if structural && scope == RuleScope::Counting {
                continue;
            }
            let step = match rule {
                RuleId::R1 => rule_r1(g, &state, &levels),
                RuleId::R2 => rule_r2(g, &mut state, &levels),
                RuleId::R3 => rule_r3(g, &mut state, &levels),
                RuleId::R4 => rule_r4(g, &mut state, &levels),
                RuleId::R5 => rule_r5(g, &mut state, &levels),
                _ => Step::Quiet,
            };
            match step {
                Step::Quiet => {}
                Step::Fired(firing) => {
                    log.push(firing);
                    continue 'cycle;
                }
                Step::Dead(rule, witness) => {
                    return PropagationResult::Infeasible { rule, witness, log };
                }
            }
        }
        return PropagationResult::Reduced { state, log };
    }
}

/// A level-2 vertex is excluded along with everything nearer the basis, so
/// its dominator must be an unexcluded level-3 neighbor.
fn rule_r1(g: &BipartiteGraph, state: &StateMap, levels: &DistanceLevels) -> Step {
    for &u in levels.bucket(2) {
        let supported = g
            .neighbors(u)
            .iter()
            .any(|&w| levels.is_level(w, 3) && !state.is_excluded(w));
        if !supported {
            return Step::Dead(RuleId::R1, vec![u]);
        }
    }
    Step::Quiet
}

/// A level-2 vertex with exactly one unexcluded level-3 neighbor pins that
/// neighbor. Two distinct pinned targets within distance 2 of each other can
/// never both be in one e.d.s.
fn rule_r2(g: &BipartiteGraph, state: &mut StateMap, levels: &DistanceLevels) -> Step {
    let mut targets: Vec<Vertex> = Vec::new();
    for &u in levels.bucket(2) {
        let mut avail = g
            .neighbors(u)
            .iter()
            .filter(|&&w| levels.is_level(w, 3) && !state.is_excluded(w));
        if let (Some(&w), None) = (avail.next(), avail.next()) {
            targets.push(w);
        }
    }
    targets.sort_unstable();
    targets.dedup();
    for (i, &w) in targets.iter().enumerate() {
        for &w2 in &targets[i + 1..] {
            if g.distance(w, w2).is_some_and(|d| d <= 2) {
                return Step::Dead(RuleId::R2, vec![w, w2]);
            }
        }
    }
    if let Some(&w) = targets.first() {
        let excluded = state.force(g, w).expect("pinned target sits at level 3");
        return Step::Fired(RuleFiring { rule: RuleId::R2, forced: vec![w], excluded });
    }
    Step::Quiet
}

/// A level-3 vertex whose level-3/4 neighbors are all excluded can only be
/// dominated by itself: force it, or fail if it is excluded too. Two such
/// vertices sharing any neighbor cannot both go in.
fn rule_r3(g: &BipartiteGraph, state: &mut StateMap, levels: &DistanceLevels) -> Step {
    let mut lone: Vec<Vertex> = Vec::new();
    for &w in levels.bucket(3) {
        let supported = g
            .neighbors(w)
            .iter()
            .any(|&x| (levels.is_level(x, 3) || levels.is_level(x, 4)) && state.is_free(x));
        if supported {
            continue;
        }
        if state.is_excluded(w) {
            return Step::Dead(RuleId::R3, vec![w]);
        }
        lone.push(w);
    }
    for (i, &w) in lone.iter().enumerate() {
        for &w2 in &lone[i + 1..] {
            if let Some(c) = common_neighbor(g, w, w2) {
                return Step::Dead(RuleId::R3, vec![w, w2, c]);
            }
        }
    }
    if let Some(&w) = lone.first() {
        let excluded = state.force(g, w).expect("self-dominating vertex sits at level 3");
        return Step::Fired(RuleFiring { rule: RuleId::R3, forced: vec![w], excluded });
    }
    Step::Quiet
}

fn common_neighbor(g: &BipartiteGraph, a: Vertex, b: Vertex) -> Option<Vertex> {
    let (mut xs, mut ys) = (g.neighbors(a).iter(), g.neighbors(b).iter());
    let (mut x, mut y) = (xs.next(), ys.next());
    while let (Some(&u), Some(&v)) = (x, y) {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => x = xs.next(),
            std::cmp::Ordering::Greater => y = ys.next(),
            std::cmp::Ordering::Equal => return Some(u),
        }
    }
    None
}

/// Midpoint rule: along an induced path from level 2 out through levels 3-5,
/// the third vertex is out and the fourth is in. Justified only for a basis
/// seeded from a six-vertex witness pair on a spider-free graph, the one
/// setting in which the driver runs full-scope propagation; anywhere else
/// the end-to-end verification guards the output.
fn rule_r4(g: &BipartiteGraph, state: &mut StateMap, levels: &DistanceLevels) -> Step {
    let Some([r2, r3, r4, r5]) = scan_r4(g, levels) else {
        return Step::Quiet;
    };
    if state.is_excluded(r4) {
        return Step::Dead(RuleId::R4, vec![r2, r3, r4, r5]);
    }
    let mut excluded = Vec::new();
    if state.exclude(r3).expect("a level-3 vertex is never forced") {
        excluded.push(r3);
    }
    excluded.extend(state.force(g, r4).expect("the forced vertex sits at level 3 or 4"));
    excluded.sort_unstable();
    Step::Fired(RuleFiring { rule: RuleId::R4, forced: vec![r4], excluded })
}

/// First induced path r2-r3-r4-r5 with levels (2, 3, 3|4, 3|4|5), scanning
/// level-2 vertices in increasing order. All three non-adjacencies are
/// checked explicitly; with a mixed-side basis the levels say nothing about
/// sides.
fn scan_r4(g: &BipartiteGraph, levels: &DistanceLevels) -> Option<[Vertex; 4]> {
    for &r2 in levels.bucket(2) {
        for &r3 in g.neighbors(r2) {
            if !levels.is_level(r3, 3) {
                continue;
            }
            for &r4 in g.neighbors(r3) {
                if r4 == r2 || !(levels.is_level(r4, 3) || levels.is_level(r4, 4)) {
                    continue;
                }
                if g.has_edge(r2, r4) {
                    continue;
                }
                for &r5 in g.neighbors(r4) {
                    if r5 == r3 || r5 == r2 {
                        continue;
                    }
                    let lv = levels.is_level(r5, 3) || levels.is_level(r5, 4) || levels.is_level(r5, 5);
                    if !lv || g.has_edge(r2, r5) || g.has_edge(r3, r5) {
                        continue;
                    }
                    return Some([r2, r3, r4, r5]);
                }
            }
        }
    }
    None
}

fn edge_hit(g: &BipartiteGraph, u: Vertex, (a, b): (Vertex, Vertex)) -> Option<Vertex> {
    if g.has_edge(u, a) {
        Some(a)
    } else if g.has_edge(u, b) {
        Some(b)
    } else {
        None
    }
}

/// Rules over the isolated edges of the free level-3/4 zone. Each such edge
/// puts exactly one of its ends in the solution, and a level-2 vertex touches
/// at most one end per edge, so hubs reaching into several of them pin or
/// kill the choices.
fn rule_r5(g: &BipartiteGraph, state: &mut StateMap, levels: &DistanceLevels) -> Step {
    let pairs: Vec<(Vertex, Vertex)> = h_components(g, state, levels)
        .into_iter()
        .filter_map(|c| match c[..] {
            [a, b] => Some((a, b)),
            _ => None,
        })
        .collect();
    if pairs.is_empty() {
        return Step::Quiet;
    }
    let hubs = levels.bucket(2);

    // Two hubs covering opposite ends of three shared edges: whichever end
    // the first hub takes, the second collects two dominators.
    for (i, &u) in hubs.iter().enumerate() {
        for &u2 in &hubs[i + 1..] {
            let opposed: Vec<usize> = (0..pairs.len())
                .filter(|&ci| {
                    matches!(
                        (edge_hit(g, u, pairs[ci]), edge_hit(g, u2, pairs[ci])),
                        (Some(x), Some(y)) if x != y
                    )
                })
                .collect();
            if opposed.len() >= 3 {
                let mut witness = vec![u, u2];
                let mut ends: Vec<Vertex> =
                    opposed[..3].iter().flat_map(|&ci| [pairs[ci].0, pairs[ci].1]).collect();
                ends.sort_unstable();
                witness.extend(ends);
                return Step::Dead(RuleId::R5, witness);
            }
        }
    }

    // One hub over four edges plus two hubs over two opposite ends each:
    // dead for the same doubling reason, whichever end the first hub takes.
    for &u in hubs {
        let k: Vec<usize> =
            (0..pairs.len()).filter(|&ci| edge_hit(g, u, pairs[ci]).is_some()).collect();
        if k.len() < 4 {
            continue;
        }
        for (i2, &u2) in hubs.iter().enumerate() {
            if u2 == u {
                continue;
            }
            let a2 = opposed_subset(g, u, u2, &k, &pairs);
            if a2.len() < 2 {
                continue;
            }
            for &u3 in &hubs[i2 + 1..] {
                if u3 == u {
                    continue;
                }
                let a3 = opposed_subset(g, u, u3, &k, &pairs);
                if a3.len() < 2 {
                    continue;
                }
                if let Some(four) = split_two_plus_two(&a2, &a3) {
                    let mut witness = vec![u, u2, u3];
                    let mut ends: Vec<Vertex> =
                        four.iter().flat_map(|&ci| [pairs[ci].0, pairs[ci].1]).collect();
                    ends.sort_unstable();
                    witness.extend(ends);
                    return Step::Dead(RuleId::R5, witness);
                }
            }
        }
    }

    // A hub over three edges with a second hub over the opposite ends of two
    // of them: on the remaining edge the first hub's end is out (taking it
    // would push both opposite ends in, doubling the second hub), so the far
    // end is in.
    for &u in hubs {
        let k: Vec<usize> =
            (0..pairs.len()).filter(|&ci| edge_hit(g, u, pairs[ci]).is_some()).collect();
        if k.len() < 3 {
            continue;
        }
        for &u2 in hubs {
            if u2 == u {
                continue;
            }
            let opp = opposed_subset(g, u, u2, &k, &pairs);
            if opp.len() < 2 {
                continue;
            }
            let Some(&k0) = k.iter().find(|ci| !opp.contains(ci)) else {
                continue;
            };
            let x = edge_hit(g, u, pairs[k0]).expect("k0 is hit by u");
            let y = if pairs[k0].0 == x { pairs[k0].1 } else { pairs[k0].0 };
            let mut excluded = Vec::new();
            if state.exclude(x).expect("zone vertices are free") {
                excluded.push(x);
            }
            excluded.extend(state.force(g, y).expect("the far end sits at level 3 or 4"));
            excluded.sort_unstable();
            return Step::Fired(RuleFiring { rule: RuleId::R5, forced: vec![y], excluded });
        }
    }
    Step::Quiet
}

/// Edges in `k` where `u2` hits the end opposite to the one `u` hits.
fn opposed_subset(
    g: &BipartiteGraph,
    u: Vertex,
    u2: Vertex,
    k: &[usize],
    pairs: &[(Vertex, Vertex)],
) -> Vec<usize> {
    k.iter()
        .copied()
        .filter(|&ci| {
            matches!(
                (edge_hit(g, u, pairs[ci]), edge_hit(g, u2, pairs[ci])),
                (Some(x), Some(y)) if x != y
            )
        })
        .collect()
}

fn split_two_plus_two(a2: &[usize], a3: &[usize]) -> Option<[usize; 4]> {
    for i in 0..a2.len() {
        for j in i + 1..a2.len() {
            let picked = [a2[i], a2[j]];
            let mut rest = a3.iter().copied().filter(|c| !picked.contains(c));
            if let (Some(c3), Some(c4)) = (rest.next(), rest.next()) {
                return Some([picked[0], picked[1], c3, c4]);
            }
        }
    }
    None
}

/// Connected components of the subgraph induced on free level-3/4 vertices,
/// members sorted, ordered by smallest member.
fn h_components(
    g: &BipartiteGraph,
    state: &StateMap,
    levels: &DistanceLevels,
) -> Vec<Vec<Vertex>> {
    let in_h =
        |v: Vertex| state.is_free(v) && (levels.is_level(v, 3) || levels.is_level(v, 4));
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for v in 0..g.n() {
        if seen[v] || !in_h(v) {
            continue;
        }
        let mut comp = vec![v];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(w) = queue.pop_front() {
            for &x in g.neighbors(w) {
                if !seen[x] && in_h(x) {
                    seen[x] = true;
                    comp.push(x);
                    queue.push_back(x);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Applies an alternative's forcings and exclusions to a copy of the state.
/// None if anything conflicts.
pub fn apply_alternative(
    g: &BipartiteGraph,
    state: &StateMap,
    alt: &BranchAlternative,
) -> Option<StateMap> {
    let mut st = state.clone();
    for &v in &alt.force {
        st.force(g, v).ok()?;
    }
    for &v in &alt.exclude {
        st.exclude(v).ok()?;
    }
    Some(st)
}

/// Scans a reduced state for the first under-determined shape, in the fixed
/// order B2 (four-vertex path component), B1 (level-3 vertex with two free
/// zone neighbors), B3 (crosswise choice over two isolated edges). Call only
/// at a propagate fixpoint. Alternatives that conflict with the state are
/// dropped; if none survive the shape itself is a refutation.
pub fn branch_candidates(g: &BipartiteGraph, state: &StateMap) -> PropagationResult {
    if state.basis().is_empty() {
        return PropagationResult::Reduced { state: state.clone(), log: Vec::new() };
    }
    let levels = g.distance_levels(state.basis()).expect("basis is nonempty");
    let comps = h_components(g, state, &levels);

    // B2: a path component on four vertices has exactly one local solution,
    // both ends in and both middles out. A free level-5 neighbor could
    // dominate into the component from outside, so its absence is required.
    for comp in &comps {
        if comp.len() != 4 {
            continue;
        }
        let Some(path) = path_order(g, comp) else {
            continue;
        };
        let leaky = comp
            .iter()
            .any(|&v| g.neighbors(v).iter().any(|&z| state.is_free(z) && levels.is_level(z, 5)));
        if leaky {
            continue;
        }
        let alt = BranchAlternative { force: vec![path[0], path[3]], exclude: Vec::new() };
        return finish_branch(g, state, RuleId::B2, vec![alt], comp.clone());
    }

    // B1: a free level-3 vertex with two free zone neighbors is either in,
    // which clears every other free level-3 vertex on its side, or out.
    for &s in levels.bucket(3) {
        if !state.is_free(s) {
            continue;
        }
        let deg_h = g
            .neighbors(s)
            .iter()
            .filter(|&&x| state.is_free(x) && (levels.is_level(x, 3) || levels.is_level(x, 4)))
            .count();
        if deg_h < 2 {
            continue;
        }
        let side = g.side(s);
        let peers: Vec<Vertex> = levels
            .bucket(3)
            .iter()
            .copied()
            .filter(|&w| w != s && state.is_free(w) && g.side(w) == side)
            .collect();
        let alts = vec![
            BranchAlternative { force: vec![s], exclude: peers },
            BranchAlternative { force: Vec::new(), exclude: vec![s] },
        ];
        return finish_branch(g, state, RuleId::B1, alts, vec![s]);
    }

    // B3: two isolated edges whose same-side ends share level-2 neighbors;
    // the solution takes one end of each, crosswise.
    let pairs: Vec<(Vertex, Vertex)> = comps
        .iter()
        .filter_map(|c| match c[..] {
            [a, b] => Some((a, b)),
            _ => None,
        })
        .collect();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (xi, yi) = split_sides(g, pairs[i]);
            let (xj, yj) = split_sides(g, pairs[j]);
            if common_level2_neighbor(g, &levels, xi, xj).is_none()
                || common_level2_neighbor(g, &levels, yi, yj).is_none()
            {
                continue;
            }
            let mut first = vec![xi, yj];
            first.sort_unstable();
            let mut second = vec![xj, yi];
            second.sort_unstable();
            let alts = vec![
                BranchAlternative { force: first, exclude: Vec::new() },
                BranchAlternative { force: second, exclude: Vec::new() },
            ];
            let mut witness = vec![xi, yi, xj, yj];
            witness.sort_unstable();
            return finish_branch(g, state, RuleId::B3, alts, witness);
        }
    }

    PropagationResult::Reduced { state: state.clone(), log: Vec::new() }
}

fn finish_branch(
    g: &BipartiteGraph,
    state: &StateMap,
    rule: RuleId,
    alternatives: Vec<BranchAlternative>,
    witness: Vec<Vertex>,
) -> PropagationResult {
    let live: Vec<BranchAlternative> = alternatives
        .into_iter()
        .filter(|alt| apply_alternative(g, state, alt).is_some())
        .collect();
    if live.is_empty() {
        PropagationResult::Infeasible { rule, witness, log: Vec::new() }
    } else {
        PropagationResult::Branch { rule, alternatives: live }
    }
}

/// Orders a four-vertex component as a path, smaller end first. None if the
/// component is not a path.
fn path_order(g: &BipartiteGraph, comp: &[Vertex]) -> Option<[Vertex; 4]> {
    let deg = |v: Vertex| {
        g.neighbors(v).iter().filter(|x| comp.binary_search(x).is_ok()).count()
    };
    let ends: Vec<Vertex> = comp.iter().copied().filter(|&v| deg(v) == 1).collect();
    if ends.len() != 2 || comp.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let mut path = [ends[0], 0, 0, 0];
    for i in 1..4 {
        path[i] = *g
            .neighbors(path[i - 1])
            .iter()
            .find(|&&x| comp.binary_search(&x).is_ok() && !path[..i].contains(&x))
            .expect("a path component continues");
    }
    Some(path)
}

fn split_sides(g: &BipartiteGraph, (a, b): (Vertex, Vertex)) -> (Vertex, Vertex) {
    if g.side(a) == Side::X {
        (a, b)
    } else {
        (b, a)
    }
}

fn common_level2_neighbor(
    g: &BipartiteGraph,
    levels: &DistanceLevels,
    a: Vertex,
    b: Vertex,
) -> Option<Vertex> {
    g.neighbors(a)
        .iter()
        .copied()
        .find(|&c| levels.is_level(c, 2) && g.has_edge(b, c))
}

/// Splits the level-2..4 zone crosswise: levels 2 and 4 on one side go with
/// level 3 on the other.
pub fn partition_h1_h2(
    g: &BipartiteGraph,
    levels: &DistanceLevels,
) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for &v in levels.bucket(2).iter().chain(levels.bucket(4)) {
        match g.side(v) {
            Side::X => h1.push(v),
            Side::Y => h2.push(v),
        }
    }
    for &v in levels.bucket(3) {
        match g.side(v) {
            Side::Y => h1.push(v),
            Side::X => h2.push(v),
        }
    }
    h1.sort_unstable();
    h2.sort_unstable();
    (h1, h2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AssertionId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl fmt::Display for AssertionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssertionViolation {
    pub id: AssertionId,
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssertionReport {
    pub violations: Vec<AssertionViolation>,
}

impl AssertionReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structural checks a fully reduced state must pass, at most one witness
/// per check: A1 nothing beyond level 4, A2 level 4 independent, A3 no
/// level-3 edge touching level 4, A4 no induced six-path alternating between
/// levels 2 and 3, A5 same-side level-3 vertices at zone distance 2 or 4,
/// A6 every zone component free of induced eight-paths. Never mutates.
pub fn assert_structural_lemmas(g: &BipartiteGraph, state: &StateMap) -> AssertionReport {
    let mut report = AssertionReport::default();
    if state.basis().is_empty() {
        return report;
    }
    let levels = g.distance_levels(state.basis()).expect("basis is nonempty");
    let mut push = |id: AssertionId, witness: Vec<Vertex>| {
        report.violations.push(AssertionViolation { id, witness });
    };

    if let Some(&v) = levels.bucket(5).first() {
        push(AssertionId::A1, vec![v]);
    }

    'a2: for &a in levels.bucket(4) {
        for &b in g.neighbors(a) {
            if b > a && levels.is_level(b, 4) {
                push(AssertionId::A2, vec![a, b]);
                break 'a2;
            }
        }
    }

    'a3: for &a in levels.bucket(3) {
        for &b in g.neighbors(a) {
            if !(b > a && levels.is_level(b, 3)) {
                continue;
            }
            let contact = g
                .neighbors(a)
                .iter()
                .chain(g.neighbors(b))
                .copied()
                .find(|&c| levels.is_level(c, 4));
            if let Some(c) = contact {
                push(AssertionId::A3, vec![a, b, c]);
                break 'a3;
            }
        }
    }

    if let Some(witness) = a4_violation(g, &levels) {
        push(AssertionId::A4, witness);
    }

    let comps = q_components(g, &levels);
    if let Some(witness) = a5_violation(g, &levels, &comps) {
        push(AssertionId::A5, witness);
    }
    for comp in &comps {
        if let Some(w) = crate::pattern::p8_witness_in(g, comp) {
            push(AssertionId::A6, w.vertices);
            break;
        }
    }

    report
}

/// First induced six-path inside levels 2-3 whose levels alternate.
fn a4_violation(g: &BipartiteGraph, levels: &DistanceLevels) -> Option<Vec<Vertex>> {
    let mut zone: Vec<Vertex> = levels.bucket(2).to_vec();
    zone.extend_from_slice(levels.bucket(3));
    if zone.len() < 6 {
        return None;
    }
    zone.sort_unstable();
    let (sub, map) = g.induced_subgraph(&zone);
    for w in crate::pattern::enumerate_induced_paths(&sub, 6, None) {
        let orig: Vec<Vertex> = w.vertices.iter().map(|&v| map[v]).collect();
        let alternates = orig
            .windows(2)
            .all(|p| levels.level_of(p[0]) != levels.level_of(p[1]));
        if alternates {
            return Some(orig);
        }
    }
    None
}

/// Connected components of the level-2..4 zone, members sorted, ordered by
/// smallest member.
fn q_components(g: &BipartiteGraph, levels: &DistanceLevels) -> Vec<Vec<Vertex>> {
    let in_q = |v: Vertex| (2..=4).contains(&levels.level_of(v).unwrap_or(usize::MAX));
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for v in 0..g.n() {
        if seen[v] || !in_q(v) {
            continue;
        }
        let mut comp = vec![v];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(w) = queue.pop_front() {
            for &x in g.neighbors(w) {
                if !seen[x] && in_q(x) {
                    seen[x] = true;
                    comp.push(x);
                    queue.push_back(x);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Distances within a zone component treat its level-2 vertices of opposite
/// sides as pairwise adjacent; same-side level-3 vertices must then sit at
/// distance 2 or 4 from each other.
fn a5_violation(
    g: &BipartiteGraph,
    levels: &DistanceLevels,
    comps: &[Vec<Vertex>],
) -> Option<Vec<Vertex>> {
    for comp in comps {
        let mut in_comp = vec![false; g.n()];
        for &v in comp {
            in_comp[v] = true;
        }
        let level2 =
            |side: Side| -> Vec<Vertex> {
                comp.iter()
                    .copied()
                    .filter(|&v| levels.is_level(v, 2) && g.side(v) == side)
                    .collect()
            };
        let (n2x, n2y) = (level2(Side::X), level2(Side::Y));
        for side in [Side::X, Side::Y] {
            let third: Vec<Vertex> = comp
                .iter()
                .copied()
                .filter(|&v| levels.is_level(v, 3) && g.side(v) == side)
                .collect();
            for (i, &w) in third.iter().enumerate() {
                if i + 1 == third.len() {
                    break;
                }
                let dist = zone_bfs(g, levels, &in_comp, &n2x, &n2y, w);
                for &w2 in &third[i + 1..] {
                    if !matches!(dist[w2], Some(2) | Some(4)) {
                        return Some(vec![w, w2]);
                    }
                }
            }
        }
    }
    None
}

fn zone_bfs(
    g: &BipartiteGraph,
    levels: &DistanceLevels,
    in_comp: &[bool],
    n2x: &[Vertex],
    n2y: &[Vertex],
    start: Vertex,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        let visit = |x: Vertex, dist: &mut Vec<Option<usize>>, queue: &mut VecDeque<Vertex>| {
            if dist[x].is_none() {
                dist[x] = Some(d + 1);
                queue.push_back(x);
            }
        };
        for &x in g.neighbors(v) {
            if in_comp[x] {
                visit(x, &mut dist, &mut queue);
            }
        }
        if levels.is_level(v, 2) {
            let cross = if g.side(v) == Side::X { n2y } else { n2x };
            for &x in cross {
                visit(x, &mut dist, &mut queue);
            }
        }
    }
    dist
}
