//! Induced-subgraph detection: paths, 6-cycles, and the S(1,1,5) spider.
//!
//! All witnesses are canonical so detection is deterministic and testable:
//! paths read from their smaller endpoint, cycles start at their smallest
//! vertex and turn toward the smaller neighbor, and the spider lists its two
//! short legs in increasing order.

use crate::graph::{BipartiteGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// Induced path on `k` vertices.
    Path(usize),
    /// Induced 6-cycle.
    Cycle6,
    /// The spider S(1,1,5): a center with two pendant legs and one leg of
    /// length five. Vertices are listed as (center, leaf, leaf, then the long
    /// leg outward).
    Spider115,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedWitness {
    pub kind: PatternKind,
    pub vertices: Vec<Vertex>,
}

impl InducedWitness {
    /// Re-checks the witness against the adjacency of `g`: right shape, right
    /// edges, no chords, canonical orientation.
    pub fn validate(&self, g: &BipartiteGraph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        match self.kind {
            PatternKind::Path(k) => {
                if k < 2 || vs.len() != k || vs[0] > vs[k - 1] {
                    return false;
                }
                induced_shape_ok(g, vs, &path_edges(k))
            }
            PatternKind::Cycle6 => {
                if vs.len() != 6 || vs[0] != sorted[0] || vs[1] > vs[5] {
                    return false;
                }
                let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
                induced_shape_ok(g, vs, &edges)
            }
            PatternKind::Spider115 => {
                if vs.len() != 8 || vs[1] > vs[2] {
                    return false;
                }
                let edges = [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
                induced_shape_ok(g, vs, &edges)
            }
        }
    }
}

fn path_edges(k: usize) -> Vec<(usize, usize)> {
    (1..k).map(|i| (i - 1, i)).collect()
}

/// True iff the positions listed in `edges` are exactly the adjacent pairs
/// among `vs`.
fn induced_shape_ok(g: &BipartiteGraph, vs: &[Vertex], edges: &[(usize, usize)]) -> bool {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let want = edges.contains(&(i, j)) || edges.contains(&(j, i));
            if g.has_edge(vs[i], vs[j]) != want {
                return false;
            }
        }
    }
    true
}

/// Depth-first scan over induced paths of `g` on exactly `k` vertices,
/// restricted to vertices where `allowed` is true. Paths are produced as
/// directed vertex sequences in lexicographic order; `emit` returning true
/// stops the scan.
fn scan_induced_paths(
    g: &BipartiteGraph,
    k: usize,
    allowed: &[bool],
    emit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    assert!((2..=8).contains(&k), "path length {k} out of supported range");
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(k);
    for start in 0..g.n() {
        if !allowed[start] {
            continue;
        }
        path.push(start);
        on_path[start] = true;
        if extend_path(g, k, allowed, &mut path, &mut on_path, emit) {
            return true;
        }
        on_path[start] = false;
        path.pop();
    }
    false
}

fn extend_path(
    g: &BipartiteGraph,
    k: usize,
    allowed: &[bool],
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    emit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    if path.len() == k {
        return emit(path);
    }
    let last = *path.last().unwrap();
    for &x in g.neighbors(last) {
        if !allowed[x] || on_path[x] {
            continue;
        }
        // No chord back to any earlier path vertex.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(x, p)) {
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend_path(g, k, allowed, path, on_path, emit) {
            return true;
        }
        on_path[x] = false;
        path.pop();
    }
    false
}

/// All induced paths on `k` vertices (2 <= k <= 8), one canonical witness per
/// path (read from the smaller endpoint), sorted by vertex tuple. With
/// `limit = Some(l)` only the first `l` in that order are returned.
pub fn enumerate_induced_paths(
    g: &BipartiteGraph,
    k: usize,
    limit: Option<usize>,
) -> Vec<InducedWitness> {
    let allowed = vec![true; g.n()];
    let mut out = Vec::new();
    scan_induced_paths(g, k, &allowed, &mut |path| {
        if path[0] < path[k - 1] {
            out.push(InducedWitness { kind: PatternKind::Path(k), vertices: path.to_vec() });
            if let Some(l) = limit {
                return out.len() >= l;
            }
        }
        false
    });
    debug_assert!(out.iter().all(|w| w.validate(g)));
    out
}

/// All induced 6-cycles, one canonical witness each (smallest vertex first,
/// then toward its smaller cycle neighbor), sorted by vertex tuple.
pub fn find_induced_c6(g: &BipartiteGraph) -> Vec<InducedWitness> {
    let mut out = Vec::new();
    let mut cyc = Vec::with_capacity(6);
    for start in 0..g.n() {
        cyc.push(start);
        extend_c6(g, &mut cyc, &mut out);
        cyc.pop();
    }
    debug_assert!(out.iter().all(|w| w.validate(g)));
    out
}

fn extend_c6(g: &BipartiteGraph, cyc: &mut Vec<Vertex>, out: &mut Vec<InducedWitness>) {
    let pos = cyc.len();
    if pos == 6 {
        if g.has_edge(cyc[5], cyc[0]) && cyc[1] < cyc[5] {
            out.push(InducedWitness { kind: PatternKind::Cycle6, vertices: cyc.clone() });
        }
        return;
    }
    let last = cyc[pos - 1];
    for &x in g.neighbors(last) {
        // Start vertex stays the smallest; closing edge x-cyc[0] is allowed
        // only at the final position, chords never are.
        if x <= cyc[0] || cyc.contains(&x) {
            continue;
        }
        let lo = if pos == 5 { 1 } else { 0 };
        if cyc[lo..pos - 1].iter().any(|&p| g.has_edge(x, p)) {
            continue;
        }
        if pos == 5 && !g.has_edge(x, cyc[0]) {
            continue;
        }
        cyc.push(x);
        extend_c6(g, cyc, out);
        cyc.pop();
    }
}

/// Lexicographically smallest induced S(1,1,5) witness, if any. The tuple is
/// (center u, leaf w, leaf w' with w < w', then the long leg v1..v5).
pub fn find_s115(g: &BipartiteGraph) -> Option<InducedWitness> {
    let allowed = vec![true; g.n()];
    let mut best: Option<Vec<Vertex>> = None;
    scan_induced_paths(g, 6, &allowed, &mut |path| {
        if path[0] < path[5] {
            try_spider_center(g, path[0], path, false, &mut best);
            try_spider_center(g, path[5], path, true, &mut best);
        }
        false
    });
    let witness = best.map(|vertices| InducedWitness { kind: PatternKind::Spider115, vertices });
    debug_assert!(witness.as_ref().map_or(true, |w| w.validate(g)));
    witness
}

/// Looks for two pendant leaves at `u`, one end of the induced P6 `path`.
/// Reading the long leg outward from u, only the 2nd and 4th leg vertices can
/// share a side with a leaf candidate, so those are the only adjacencies left
/// to rule out.
fn try_spider_center(
    g: &BipartiteGraph,
    u: Vertex,
    path: &[Vertex],
    reversed: bool,
    best: &mut Option<Vec<Vertex>>,
) {
    let leg: Vec<Vertex> = if reversed {
        path.iter().rev().skip(1).copied().collect()
    } else {
        path.iter().skip(1).copied().collect()
    };
    let mut leaves = [None, None];
    for &w in g.neighbors(u) {
        if w == leg[0] || g.has_edge(w, leg[1]) || g.has_edge(w, leg[3]) {
            continue;
        }
        if leaves[0].is_none() {
            leaves[0] = Some(w);
        } else {
            leaves[1] = Some(w);
            break;
        }
    }
    if let (Some(w), Some(w2)) = (leaves[0], leaves[1]) {
        let mut tuple = vec![u, w, w2];
        tuple.extend_from_slice(&leg);
        if best.as_ref().map_or(true, |b| tuple < *b) {
            *best = Some(tuple);
        }
    }
}

/// First induced P8 whose vertices all lie in `subset`, in lexicographic
/// order of the directed sequence (so the returned path reads from its
/// smaller endpoint). `None` when `G[subset]` is P8-free.
pub fn p8_witness_in(g: &BipartiteGraph, subset: &[Vertex]) -> Option<InducedWitness> {
    let mut allowed = vec![false; g.n()];
    for &v in subset {
        allowed[v] = true;
    }
    let mut found = None;
    scan_induced_paths(g, 8, &allowed, &mut |path| {
        found = Some(InducedWitness { kind: PatternKind::Path(8), vertices: path.to_vec() });
        true
    });
    debug_assert!(found.as_ref().map_or(true, |w: &InducedWitness| w.validate(g)));
    found
}

pub fn is_p8_free(g: &BipartiteGraph, subset: &[Vertex]) -> bool {
    p8_witness_in(g, subset).is_none()
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::exhaustive;
    use crate::generate::{gen_family, gen_random, Family};

    fn path(n: usize) -> BipartiteGraph {
        gen_family(Family::Path, n).unwrap()
    }

    fn cycle(n: usize) -> BipartiteGraph {
        gen_family(Family::Cycle, n).unwrap()
    }

    #[test]
    fn p8_has_one_induced_p8() {
        let g = path(8);
        let ws = enumerate_induced_paths(&g, 8, None);
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].vertices, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(ws[0].validate(&g));
    }

    #[test]
    fn c6_has_no_induced_p6_but_six_p5() {
        let g = cycle(6);
        assert!(enumerate_induced_paths(&g, 6, None).is_empty());
        let ws = enumerate_induced_paths(&g, 5, None);
        assert_eq!(ws.len(), 6);
        assert!(ws.iter().all(|w| w.validate(&g)));
        assert_eq!(ws[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn limit_truncates_in_order() {
        let g = path(8);
        let ws = enumerate_induced_paths(&g, 2, Some(3));
        let got: Vec<_> = ws.iter().map(|w| w.vertices.clone()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn enumeration_output_is_sorted() {
        let g = gen_random(6, 6, 0.3, 13);
        let ws = enumerate_induced_paths(&g, 4, None);
        let tuples: Vec<_> = ws.iter().map(|w| w.vertices.clone()).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
    }

    #[test]
    fn c6_detection_on_cycles() {
        let ws = find_induced_c6(&cycle(6));
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].vertices, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_induced_c6(&cycle(8)).is_empty());
    }

    #[test]
    fn k33_has_no_induced_c6() {
        let g = gen_random(3, 3, 1.0, 0);
        assert_eq!(g.edge_count(), 9);
        assert!(find_induced_c6(&g).is_empty());
        assert_eq!(exhaustive::count_induced_c6(&g), 0);
    }

    #[test]
    fn spider_is_its_own_witness() {
        let g = gen_family(Family::Spider115, 8).unwrap();
        let w = find_s115(&g).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(w.validate(&g));
    }

    #[test]
    fn spider_free_family_members() {
        assert!(find_s115(&path(8)).is_none());
        assert!(find_s115(&cycle(6)).is_none());
        // Spider with the tail tip removed.
        let g = BipartiteGraph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)],
        )
        .unwrap();
        assert!(find_s115(&g).is_none());
    }

    #[test]
    fn p9_contains_no_spider_but_p8_plus_leaf_does() {
        assert!(find_s115(&path(9)).is_none());
        // P8 0..7 plus an extra leaf at position 2 gives a spider centered
        // there: legs to 1 and 8, long leg 3-4-5-6-7.
        let mut edges: Vec<_> = (1..8).map(|i| (i - 1, i)).collect();
        edges.push((2, 8));
        let g = BipartiteGraph::from_edge_list(9, &edges).unwrap();
        let w = find_s115(&g).unwrap();
        assert_eq!(w.vertices, vec![2, 1, 8, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn p8_chord_destroys_the_witness() {
        let mut edges: Vec<_> = (1..8).map(|i| (i - 1, i)).collect();
        edges.push((0, 7));
        let g = BipartiteGraph::from_edge_list(8, &edges).unwrap();
        assert!(enumerate_induced_paths(&g, 8, None).is_empty());
        let all: Vec<_> = (0..8).collect();
        assert!(is_p8_free(&g, &all));
    }

    #[test]
    fn p8_witness_respects_subset() {
        let g = path(9);
        let all: Vec<_> = (0..9).collect();
        let w = p8_witness_in(&g, &all).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        let tail: Vec<_> = (1..9).collect();
        let w = p8_witness_in(&g, &tail).unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3, 4, 5, 6, 7, 8]);
        let gap: Vec<_> = (0..9).filter(|&v| v != 4).collect();
        assert!(is_p8_free(&g, &gap));
    }

    #[test]
    fn p8_free_on_c6_plus_p4() {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 7), (7, 8), (8, 9)]);
        let g = BipartiteGraph::from_edge_list(10, &edges).unwrap();
        let all: Vec<_> = (0..10).collect();
        assert!(is_p8_free(&g, &all));
    }

    #[test]
    fn path_counts_match_exhaustive() {
        for seed in 0..40u64 {
            let g = gen_random(5, 5, 0.25, seed);
            for k in [4, 6, 8] {
                assert_eq!(
                    enumerate_induced_paths(&g, k, None).len(),
                    exhaustive::count_induced_paths(&g, k),
                    "k={k} seed={seed}"
                );
            }
        }
    }

    #[test]
    fn c6_counts_match_exhaustive() {
        for seed in 0..40u64 {
            let g = gen_random(5, 5, 0.3, seed);
            assert_eq!(
                find_induced_c6(&g).len(),
                exhaustive::count_induced_c6(&g),
                "seed={seed}"
            );
        }
    }

    #[test]
    fn spider_detection_matches_exhaustive() {
        let mut hits = 0;
        for seed in 0..60u64 {
            let g = gen_random(6, 6, 0.2, seed);
            let got = find_s115(&g);
            assert_eq!(got.is_some(), exhaustive::has_s115(&g), "seed={seed}");
            if let Some(w) = got {
                assert!(w.validate(&g));
                hits += 1;
            }
        }
        assert!(hits > 0, "corpus never produced a spider");
    }
}
