//! Efficient domination as data: candidate solutions, the verifier, and the
//! Forced/Excluded state map that the reduction rules drive.
//!
//! A set D is an efficient dominating set (e.d.s.) iff every vertex has
//! exactly one member of its closed neighborhood in D. Forcing a vertex u
//! into the solution therefore excludes everything at distance 1 or 2 from u,
//! and two forced vertices must stay at distance at least 3 (bipartite parity
//! then pushes same-side pairs to distance 4 or more on its own).

use crate::graph::{BipartiteGraph, Vertex};
use std::collections::VecDeque;
use std::fmt;

/// A candidate solution: a sorted, deduplicated vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdsSolution {
    ids: Vec<Vertex>,
}

impl EdsSolution {
    pub fn new(mut ids: Vec<Vertex>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdsSolution { ids }
    }

    pub fn ids(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.ids.iter().copied()
    }
}

impl fmt::Display for EdsSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Outcome of [`verify`]. When invalid, `violation` names the smallest vertex
/// whose closed neighborhood meets the set the wrong number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub count: usize,
}

/// Checks the e.d.s. condition exactly. Solution ids must lie in `0..g.n()`.
pub fn verify(g: &BipartiteGraph, d: &EdsSolution) -> VerifyReport {
    let mut count = vec![0usize; g.n()];
    for v in d.iter() {
        count[v] += 1;
        for &w in g.neighbors(v) {
            count[w] += 1;
        }
    }
    for v in 0..g.n() {
        if count[v] != 1 {
            return VerifyReport { valid: false, violation: Some(Violation { vertex: v, count: count[v] }) };
        }
    }
    VerifyReport { valid: true, violation: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Free,
    Forced,
    Excluded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConflictReason {
    /// The vertex being forced is adjacent to an already forced vertex.
    AdjacentForced,
    /// The vertex being forced is at distance 2 from an already forced
    /// vertex, so their closed neighborhoods would overlap.
    DistanceViolation,
    /// Force and exclude collided on the same vertex.
    ForcedExcludedClash,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub reason: ConflictReason,
    /// The vertex the failed operation was applied to.
    pub vertex: Vertex,
    /// The previously decided vertex it collided with (equal to `vertex` for
    /// a clash on a single vertex).
    pub other: Vertex,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.reason {
            ConflictReason::AdjacentForced => "adjacent to forced",
            ConflictReason::DistanceViolation => "at distance 2 from forced",
            ConflictReason::ForcedExcludedClash => "forced/excluded clash",
        };
        write!(f, "vertex {}: {} vertex {}", self.vertex, what, self.other)
    }
}

/// Per-vertex solver state. Forced vertices form the basis (kept sorted);
/// forcing eagerly excludes both neighborhoods N(u) and N^2(u), so every
/// vertex at level 1 or 2 of the basis is always excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateMap {
    label: Vec<Label>,
    basis: Vec<Vertex>,
}

impl StateMap {
    pub fn new(n: usize) -> Self {
        StateMap { label: vec![Label::Free; n], basis: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.label.len()
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.label[v]
    }

    pub fn is_forced(&self, v: Vertex) -> bool {
        self.label[v] == Label::Forced
    }

    pub fn is_excluded(&self, v: Vertex) -> bool {
        self.label[v] == Label::Excluded
    }

    pub fn is_free(&self, v: Vertex) -> bool {
        self.label[v] == Label::Free
    }

    /// Forced vertices, ascending.
    pub fn basis(&self) -> &[Vertex] {
        &self.basis
    }

    /// Excluded vertices, ascending.
    pub fn excluded(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.is_excluded(v)).collect()
    }

    /// Forces `v` into the solution. Fails if `v` is within distance 2 of an
    /// already forced vertex, or failing that if `v` is excluded; otherwise
    /// labels `v` forced, excludes everything at distance 1 or 2, and returns
    /// the vertices that exclusion newly touched (ascending). Idempotent on
    /// forced vertices.
    pub fn force(&mut self, g: &BipartiteGraph, v: Vertex) -> Result<Vec<Vertex>, Conflict> {
        if self.label[v] == Label::Forced {
            return Ok(Vec::new());
        }
        let ball = ball_two(g, v);
        for &(u, dist) in &ball {
            if self.label[u] == Label::Forced {
                let reason = if dist == 1 {
                    ConflictReason::AdjacentForced
                } else {
                    ConflictReason::DistanceViolation
                };
                return Err(Conflict { reason, vertex: v, other: u });
            }
        }
        if self.label[v] == Label::Excluded {
            return Err(Conflict {
                reason: ConflictReason::ForcedExcludedClash,
                vertex: v,
                other: v,
            });
        }
        self.label[v] = Label::Forced;
        let pos = self.basis.binary_search(&v).unwrap_err();
        self.basis.insert(pos, v);
        let mut newly = Vec::new();
        for &(u, _) in &ball {
            if self.label[u] == Label::Free {
                self.label[u] = Label::Excluded;
                newly.push(u);
            }
        }
        newly.sort_unstable();
        Ok(newly)
    }

    /// Excludes `v` from the solution. `Ok(true)` when the label changed,
    /// `Ok(false)` when `v` was already excluded.
    pub fn exclude(&mut self, v: Vertex) -> Result<bool, Conflict> {
        match self.label[v] {
            Label::Forced => Err(Conflict {
                reason: ConflictReason::ForcedExcludedClash,
                vertex: v,
                other: v,
            }),
            Label::Excluded => Ok(false),
            Label::Free => {
                self.label[v] = Label::Excluded;
                Ok(true)
            }
        }
    }
}

/// Vertices at distance 1 or 2 from `v`, with their distance.
fn ball_two(g: &BipartiteGraph, v: Vertex) -> Vec<(Vertex, usize)> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        if dist[u] == 2 {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                out.push((w, dist[w]));
                queue.push_back(w);
            }
        }
    }
    out
}

/// Splits the vertex set by the basis's closed neighborhoods: `settled` is
/// their union (those vertices are dominated once and for all, assuming the
/// state is conflict-free), `residual` is everything else. Both ascending.
pub fn settled_and_residual(g: &BipartiteGraph, state: &StateMap) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut settled = vec![false; g.n()];
    for &v in state.basis() {
        settled[v] = true;
        for &w in g.neighbors(v) {
            settled[w] = true;
        }
    }
    let mut s = Vec::new();
    let mut r = Vec::new();
    for v in 0..g.n() {
        if settled[v] {
            s.push(v);
        } else {
            r.push(v);
        }
    }
    (s, r)
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::generate::{gen_family, Family};

    fn path(n: usize) -> BipartiteGraph {
        gen_family(Family::Path, n).unwrap()
    }

    #[test]
    fn verify_accepts_p6_solution() {
        let g = path(6);
        let report = verify(&g, &EdsSolution::new(vec![1, 4]));
        assert!(report.valid);
        assert_eq!(report.violation, None);
    }

    #[test]
    fn verify_rejects_uncovered_vertex() {
        let g = path(6);
        let report = verify(&g, &EdsSolution::new(vec![0, 3]));
        assert!(!report.valid);
        assert_eq!(report.violation, Some(Violation { vertex: 5, count: 0 }));
    }

    #[test]
    fn verify_rejects_double_coverage() {
        let g = gen_family(Family::Cycle, 4).unwrap();
        let report = verify(&g, &EdsSolution::new(vec![0, 2]));
        assert!(!report.valid);
        assert_eq!(report.violation, Some(Violation { vertex: 1, count: 2 }));
    }

    #[test]
    fn verify_reports_smallest_violation() {
        let g = gen_family(Family::Cycle, 4).unwrap();
        let report = verify(&g, &EdsSolution::new(vec![0]));
        assert_eq!(report.violation, Some(Violation { vertex: 2, count: 0 }));
        let report = verify(&g, &EdsSolution::new(vec![]));
        assert_eq!(report.violation, Some(Violation { vertex: 0, count: 0 }));
    }

    #[test]
    fn verify_empty_graph() {
        let g = BipartiteGraph::from_edge_list(0, &[]).unwrap();
        assert!(verify(&g, &EdsSolution::new(vec![])).valid);
    }

    #[test]
    fn solution_normalizes() {
        let d = EdsSolution::new(vec![4, 1, 4]);
        assert_eq!(d.ids(), &[1, 4]);
        assert!(d.contains(4));
        assert!(!d.contains(2));
    }

    #[test]
    fn force_excludes_two_neighborhoods() {
        let g = path(6);
        let mut st = StateMap::new(6);
        let newly = st.force(&g, 1).unwrap();
        assert_eq!(newly, vec![0, 2, 3]);
        assert_eq!(st.basis(), &[1]);
        let newly = st.force(&g, 4).unwrap();
        assert_eq!(newly, vec![5]);
        assert_eq!(st.basis(), &[1, 4]);
        assert_eq!(st.excluded(), vec![0, 2, 3, 5]);
        // Re-forcing is a no-op.
        assert_eq!(st.force(&g, 4).unwrap(), Vec::<Vertex>::new());
    }

    #[test]
    fn force_conflicts() {
        let g = path(5);
        let mut st = StateMap::new(5);
        st.force(&g, 0).unwrap();
        let err = st.clone().force(&g, 1).unwrap_err();
        assert_eq!(err.reason, ConflictReason::AdjacentForced);
        assert_eq!((err.vertex, err.other), (1, 0));
        let err = st.clone().force(&g, 2).unwrap_err();
        assert_eq!(err.reason, ConflictReason::DistanceViolation);
        assert_eq!((err.vertex, err.other), (2, 0));
        // Distance 4, same side: allowed.
        assert!(st.force(&g, 4).is_ok());
    }

    #[test]
    fn forced_excluded_clash() {
        let g = path(3);
        let mut st = StateMap::new(3);
        st.exclude(1).unwrap();
        let err = st.force(&g, 1).unwrap_err();
        assert_eq!(err.reason, ConflictReason::ForcedExcludedClash);
        let mut st = StateMap::new(3);
        st.force(&g, 1).unwrap();
        assert!(st.exclude(1).is_err());
        // Excluding an already excluded vertex reports no change.
        assert_eq!(st.exclude(0), Ok(false));
    }

    #[test]
    fn star_center_clears_everything() {
        let g = gen_family(Family::Star, 5).unwrap();
        let mut st = StateMap::new(5);
        let newly = st.force(&g, 0).unwrap();
        assert_eq!(newly, vec![1, 2, 3, 4]);
        let (settled, residual) = settled_and_residual(&g, &st);
        assert_eq!(settled, vec![0, 1, 2, 3, 4]);
        assert!(residual.is_empty());
    }

    #[test]
    fn residual_on_p8_tail() {
        let g = path(8);
        let mut st = StateMap::new(8);
        st.force(&g, 1).unwrap();
        let (settled, residual) = settled_and_residual(&g, &st);
        assert_eq!(settled, vec![0, 1, 2]);
        assert_eq!(residual, vec![3, 4, 5, 6, 7]);
    }

    #[test]
    fn cross_component_forces_are_independent() {
        let g = BipartiteGraph::from_edge_list(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let mut st = StateMap::new(6);
        st.force(&g, 1).unwrap();
        st.force(&g, 4).unwrap();
        assert_eq!(st.basis(), &[1, 4]);
    }
}
