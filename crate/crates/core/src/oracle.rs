//! Exact e.d.s. search for arbitrary bipartite graphs. Used standalone on
//! small instances and by the reduction driver to finish residual components.
//!
//! The search decides vertices in ascending id order, trying In before Out,
//! with exact-cover unit propagation after every decision. Since no e.d.s.
//! can contain another one, the first solution this order reaches is the
//! lexicographically smallest, so the result is strategy-independent: the
//! MRV variant only adds a fail-fast existence probe before extracting the
//! same solution.

use crate::domination::{EdsSolution, Label, StateMap};
use crate::graph::{BipartiteGraph, Vertex};
use std::fmt;

pub const DEFAULT_COUNT_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Branch on the lowest undecided vertex, In first.
    LowestId,
    /// Existence probe branching on the most constrained undominated vertex,
    /// then lexicographic extraction when satisfiable.
    MrvProbe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub solution: Option<EdsSolution>,
    pub explored_nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCapExceeded {
    pub n: usize,
    pub cap: usize,
}

impl fmt::Display for SizeCapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "instance has {} vertices, counting is capped at {}", self.n, self.cap)
    }
}

impl std::error::Error for SizeCapExceeded {}

/// Lexicographically smallest e.d.s., or `None`. A `restrict` state pins
/// vertices: Forced ones must be in the solution, Excluded ones must not.
pub fn solve(g: &BipartiteGraph, restrict: Option<&StateMap>) -> OracleResult {
    solve_with(g, restrict, SearchStrategy::LowestId)
}

pub fn solve_with(
    g: &BipartiteGraph,
    restrict: Option<&StateMap>,
    strategy: SearchStrategy,
) -> OracleResult {
    let mut s = Search::new(g);
    if !s.apply_restriction(restrict) {
        return OracleResult { solution: None, explored_nodes: s.nodes };
    }
    if strategy == SearchStrategy::MrvProbe {
        let mark = s.trail.len();
        let feasible = s.probe();
        s.undo_to(mark);
        if !feasible {
            return OracleResult { solution: None, explored_nodes: s.nodes };
        }
    }
    let mut solution = None;
    s.dfs(0, &mut |dec| {
        solution = Some(solution_of(dec));
        true
    });
    debug_assert!(strategy == SearchStrategy::LowestId || solution.is_some());
    OracleResult { solution, explored_nodes: s.nodes }
}

/// Number of distinct e.d.s. of `g`, refusing instances larger than `cap`.
pub fn count_with_cap(g: &BipartiteGraph, cap: usize) -> Result<u64, SizeCapExceeded> {
    if g.n() > cap {
        return Err(SizeCapExceeded { n: g.n(), cap });
    }
    let mut s = Search::new(g);
    let mut count = 0u64;
    s.dfs(0, &mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

pub fn count(g: &BipartiteGraph) -> Result<u64, SizeCapExceeded> {
    count_with_cap(g, DEFAULT_COUNT_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dec {
    Undecided,
    In,
    Out,
}

fn solution_of(dec: &[Dec]) -> EdsSolution {
    EdsSolution::new(
        dec.iter()
            .enumerate()
            .filter(|(_, &d)| d == Dec::In)
            .map(|(v, _)| v)
            .collect(),
    )
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    dec: Vec<Dec>,
    /// Decided-In members of N[v].
    dom: Vec<u32>,
    /// Undecided members of N[v] (including v itself): the remaining
    /// candidate dominators of v.
    avail: Vec<u32>,
    trail: Vec<(Vertex, Dec)>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a BipartiteGraph) -> Self {
        Search {
            g,
            dec: vec![Dec::Undecided; g.n()],
            dom: vec![0; g.n()],
            avail: (0..g.n()).map(|v| g.degree(v) as u32 + 1).collect(),
            trail: Vec::new(),
            nodes: 0,
        }
    }

    fn apply_restriction(&mut self, restrict: Option<&StateMap>) -> bool {
        let Some(st) = restrict else { return true };
        assert_eq!(st.n(), self.g.n(), "restriction sized for a different graph");
        for v in 0..self.g.n() {
            let ok = match st.label(v) {
                Label::Forced => self.set_in(v),
                Label::Excluded => self.set_out(v),
                Label::Free => true,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, kind) = self.trail.pop().unwrap();
            self.dec[v] = Dec::Undecided;
            self.avail[v] += 1;
            if kind == Dec::In {
                self.dom[v] -= 1;
            }
            for &w in self.g.neighbors(v) {
                self.avail[w] += 1;
                if kind == Dec::In {
                    self.dom[w] -= 1;
                }
            }
        }
    }

    /// Puts `v` into the solution and propagates: everything in N[v] is now
    /// dominated, so every other undecided candidate around N[v] goes Out.
    fn set_in(&mut self, v: Vertex) -> bool {
        match self.dec[v] {
            Dec::In => return true,
            Dec::Out => return false,
            Dec::Undecided => {}
        }
        if self.dom[v] > 0 || self.g.neighbors(v).iter().any(|&w| self.dom[w] > 0) {
            return false;
        }
        self.dec[v] = Dec::In;
        self.trail.push((v, Dec::In));
        self.dom[v] += 1;
        self.avail[v] -= 1;
        for &w in self.g.neighbors(v) {
            self.dom[w] += 1;
            self.avail[w] -= 1;
        }
        let mut outs = Vec::new();
        for w in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            if self.dec[w] == Dec::Undecided {
                outs.push(w);
            }
            for &z in self.g.neighbors(w) {
                if self.dec[z] == Dec::Undecided {
                    outs.push(z);
                }
            }
        }
        for z in outs {
            if !self.set_out(z) {
                return false;
            }
        }
        true
    }

    /// Rules `z` out and checks the exact-cover counters around it: a still
    /// undominated vertex with no candidates left kills the branch, one with
    /// a single candidate left unit-forces it In.
    fn set_out(&mut self, z: Vertex) -> bool {
        match self.dec[z] {
            Dec::Out => return true,
            Dec::In => return false,
            Dec::Undecided => {}
        }
        self.dec[z] = Dec::Out;
        self.trail.push((z, Dec::Out));
        self.avail[z] -= 1;
        for &w in self.g.neighbors(z) {
            self.avail[w] -= 1;
        }
        let mut units = Vec::new();
        for y in std::iter::once(z).chain(self.g.neighbors(z).iter().copied()) {
            if self.dom[y] > 0 {
                continue;
            }
            match self.avail[y] {
                0 => return false,
                1 => units.push(y),
                _ => {}
            }
        }
        for y in units {
            // Counters may have moved while earlier units propagated.
            if self.dom[y] > 0 {
                continue;
            }
            let c = std::iter::once(y)
                .chain(self.g.neighbors(y).iter().copied())
                .find(|&c| self.dec[c] == Dec::Undecided);
            match c {
                Some(c) => {
                    if !self.set_in(c) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }

    fn dfs(&mut self, from: Vertex, on_solution: &mut dyn FnMut(&[Dec]) -> bool) -> bool {
        let v = match (from..self.g.n()).find(|&v| self.dec[v] == Dec::Undecided) {
            Some(v) => v,
            None => return on_solution(&self.dec),
        };
        let mark = self.trail.len();
        self.nodes += 1;
        if self.set_in(v) && self.dfs(v + 1, on_solution) {
            return true;
        }
        self.undo_to(mark);
        self.nodes += 1;
        if self.set_out(v) && self.dfs(v + 1, on_solution) {
            return true;
        }
        self.undo_to(mark);
        false
    }

    /// Existence-only search: branch on an undominated vertex with the fewest
    /// remaining candidates, trying each candidate In. Exactly one candidate
    /// per vertex is In across any solution, so the branches are disjoint and
    /// exhaustive.
    fn probe(&mut self) -> bool {
        let mut pick: Option<(u32, Vertex)> = None;
        for v in 0..self.g.n() {
            if self.dom[v] == 0 {
                let a = self.avail[v];
                if pick.map_or(true, |(best, _)| a < best) {
                    pick = Some((a, v));
                }
            }
        }
        let Some((_, y)) = pick else { return true };
        let cands: Vec<Vertex> = std::iter::once(y)
            .chain(self.g.neighbors(y).iter().copied())
            .filter(|&c| self.dec[c] == Dec::Undecided)
            .collect();
        for c in cands {
            self.nodes += 1;
            let mark = self.trail.len();
            if self.set_in(c) && self.probe() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::exhaustive;
    use crate::generate::{gen_family, gen_random, Family};

    fn ids(r: &OracleResult) -> Option<Vec<Vertex>> {
        r.solution.as_ref().map(|d| d.ids().to_vec())
    }

    #[test]
    fn golden_families() {
        let c4 = gen_family(Family::Cycle, 4).unwrap();
        assert_eq!(ids(&solve(&c4, None)), None);

        let p6 = gen_family(Family::Path, 6).unwrap();
        assert_eq!(ids(&solve(&p6, None)), Some(vec![1, 4]));

        let p7 = gen_family(Family::Path, 7).unwrap();
        assert_eq!(ids(&solve(&p7, None)), Some(vec![0, 3, 6]));

        let p8 = gen_family(Family::Path, 8).unwrap();
        assert_eq!(ids(&solve(&p8, None)), Some(vec![0, 3, 6]));
        assert_eq!(count(&p8), Ok(2));

        let spider = gen_family(Family::Spider115, 8).unwrap();
        assert_eq!(ids(&solve(&spider, None)), None);
        assert_eq!(count(&spider), Ok(0));

        let edgeless = BipartiteGraph::from_edge_list(3, &[]).unwrap();
        assert_eq!(ids(&solve(&edgeless, None)), Some(vec![0, 1, 2]));
        assert_eq!(count(&edgeless), Ok(1));
    }

    #[test]
    fn first_found_is_lex_smallest_not_greedy() {
        // Greedy "take 0, then repair" would return {2,4} here; {1,3} is the
        // lex-smaller of the two solutions.
        let g = BipartiteGraph::from_edge_list(5, &[(0, 2), (0, 3), (1, 2), (3, 4)]).unwrap();
        let all = exhaustive::all_eds(&g);
        let tuples: Vec<_> = all.iter().map(|d| d.ids().to_vec()).collect();
        assert_eq!(tuples, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(ids(&solve(&g, None)), Some(vec![1, 3]));
    }

    #[test]
    fn empty_graph_has_the_empty_solution() {
        let g = BipartiteGraph::from_edge_list(0, &[]).unwrap();
        let r = solve(&g, None);
        assert_eq!(ids(&r), Some(vec![]));
        assert_eq!(r.explored_nodes, 0);
        assert_eq!(count(&g), Ok(1));
    }

    #[test]
    fn nodes_are_counted() {
        let g = gen_family(Family::Path, 6).unwrap();
        assert!(solve(&g, None).explored_nodes > 0);
    }

    #[test]
    fn restriction_pins_vertices() {
        let g = gen_family(Family::Path, 6).unwrap();
        let mut st = StateMap::new(6);
        st.force(&g, 1).unwrap();
        assert_eq!(ids(&solve(&g, Some(&st))), Some(vec![1, 4]));

        // P6 has no solution through vertex 0.
        let mut st = StateMap::new(6);
        st.force(&g, 0).unwrap();
        assert_eq!(ids(&solve(&g, Some(&st))), None);

        // Nor one avoiding vertex 1.
        let mut st = StateMap::new(6);
        st.exclude(1).unwrap();
        assert_eq!(ids(&solve(&g, Some(&st))), None);
    }

    #[test]
    fn restriction_must_cover_the_forced_set() {
        let g = gen_family(Family::Path, 8).unwrap();
        let mut st = StateMap::new(8);
        st.force(&g, 1).unwrap();
        let r = solve(&g, Some(&st));
        assert_eq!(ids(&r), Some(vec![1, 4, 7]));
    }

    #[test]
    fn matches_exhaustive_on_random_graphs() {
        for seed in 0..60u64 {
            let g = gen_random(6, 6, if seed % 2 == 0 { 0.15 } else { 0.3 }, seed);
            let got = solve(&g, None);
            let want = exhaustive::smallest_eds(&g);
            assert_eq!(got.solution, want, "seed={seed}");
            assert_eq!(count(&g), Ok(exhaustive::count_eds(&g)), "seed={seed}");
        }
    }

    #[test]
    fn strategies_return_identical_solutions() {
        for seed in 0..60u64 {
            let g = gen_random(7, 6, 0.22, seed);
            let a = solve_with(&g, None, SearchStrategy::LowestId);
            let b = solve_with(&g, None, SearchStrategy::MrvProbe);
            assert_eq!(a.solution, b.solution, "seed={seed}");
        }
    }

    #[test]
    fn count_respects_cap() {
        let g = gen_family(Family::Path, 6).unwrap();
        assert_eq!(count_with_cap(&g, 5), Err(SizeCapExceeded { n: 6, cap: 5 }));
        assert_eq!(count_with_cap(&g, 6), Ok(1));
    }

    #[test]
    fn count_multiplies_over_components() {
        // Two disjoint P8s: 2 solutions each.
        let mut edges: Vec<_> = (1..8).map(|i| (i - 1, i)).collect();
        edges.extend((9..16).map(|i| (i - 1, i)));
        let g = BipartiteGraph::from_edge_list(16, &edges).unwrap();
        assert_eq!(count(&g), Ok(4));
    }
}
