//! Brute-force reference implementations. Test machinery only: everything
//! here scans vertex subsets, so keep inputs at desk scale (n below ~26 for
//! the mask scans, ~16 for the subset scans).

use crate::domination::EdsSolution;
use crate::graph::{BipartiteGraph, Vertex};

fn closed_masks(g: &BipartiteGraph) -> Vec<u64> {
    assert!(g.n() <= 26, "mask scan over 2^{} subsets refused", g.n());
    (0..g.n())
        .map(|v| {
            let mut m = 1u64 << v;
            for &w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect()
}

fn mask_is_eds(full: u64, cn: &[u64], mask: u64) -> bool {
    let mut covered = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if covered & cn[v] != 0 {
            return false;
        }
        covered |= cn[v];
    }
    covered == full
}

fn mask_to_solution(mask: u64) -> EdsSolution {
    let mut ids = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        ids.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    EdsSolution::new(ids)
}

/// True iff the sorted vertex list of `m1` lexicographically precedes that of
/// `m2` (a proper prefix counts as smaller).
fn lex_less(m1: u64, m2: u64) -> bool {
    if m1 == m2 {
        return false;
    }
    let d = m1 ^ m2;
    let k = d.trailing_zeros();
    if m1 >> k & 1 != 0 {
        // m1 owns the first divergent vertex, so it is smaller unless m2 has
        // already ended there (a proper prefix).
        m2 >> k != 0
    } else {
        m1 >> k == 0
    }
}

/// Every e.d.s. of `g`, sorted lexicographically by vertex tuple.
pub fn all_eds(g: &BipartiteGraph) -> Vec<EdsSolution> {
    let cn = closed_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    let mut found: Vec<u64> = (0..1u64 << g.n())
        .filter(|&m| mask_is_eds(full, &cn, m))
        .collect();
    found.sort_by(|&a, &b| {
        if lex_less(a, b) {
            std::cmp::Ordering::Less
        } else if a == b {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Greater
        }
    });
    found.into_iter().map(mask_to_solution).collect()
}

/// Lexicographically smallest e.d.s. of `g`, if any.
pub fn smallest_eds(g: &BipartiteGraph) -> Option<EdsSolution> {
    let cn = closed_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    let mut best: Option<u64> = None;
    for m in 0..1u64 << g.n() {
        if mask_is_eds(full, &cn, m) && best.map_or(true, |b| lex_less(m, b)) {
            best = Some(m);
        }
    }
    best.map(mask_to_solution)
}

pub fn count_eds(g: &BipartiteGraph) -> u64 {
    let cn = closed_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    (0..1u64 << g.n()).filter(|&m| mask_is_eds(full, &cn, m)).count() as u64
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    fn rec(n: usize, k: usize, start: usize, buf: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        for v in start..=n.saturating_sub(need) {
            buf.push(v);
            rec(n, k, v + 1, buf, f);
            buf.pop();
        }
    }
    if k > n {
        return;
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), f);
}

fn subset_degrees(g: &BipartiteGraph, vs: &[Vertex]) -> Vec<usize> {
    vs.iter()
        .map(|&v| vs.iter().filter(|&&w| w != v && g.has_edge(v, w)).count())
        .collect()
}

fn subset_edge_count(degs: &[usize]) -> usize {
    degs.iter().sum::<usize>() / 2
}

fn subset_connected(g: &BipartiteGraph, vs: &[Vertex]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let mut seen = vec![false; vs.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for j in 0..vs.len() {
            if !seen[j] && g.has_edge(vs[i], vs[j]) {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == vs.len()
}

/// 8-subset scan for an induced S(1,1,5). A connected 8-vertex subset with 7
/// edges is a tree; degree profile (3,2,2,2,2,1,1,1) narrows it to a spider
/// with three legs, and leg lengths (1,1,5) are the unique split where the
/// degree-3 center touches exactly two leaves.
pub fn has_s115(g: &BipartiteGraph) -> bool {
    let mut found = false;
    for_each_combination(g.n(), 8, &mut |vs| {
        if found {
            return;
        }
        let degs = subset_degrees(g, vs);
        if subset_edge_count(&degs) != 7 {
            return;
        }
        let mut profile = degs.clone();
        profile.sort_unstable();
        if profile != [1, 1, 1, 2, 2, 2, 2, 3] {
            return;
        }
        if !subset_connected(g, vs) {
            return;
        }
        let center = degs.iter().position(|&d| d == 3).unwrap();
        let pendant_neighbors = (0..vs.len())
            .filter(|&j| degs[j] == 1 && g.has_edge(vs[center], vs[j]))
            .count();
        if pendant_neighbors == 2 {
            found = true;
        }
    });
    found
}

/// Number of induced paths on `k` vertices, counted as vertex sets.
pub fn count_induced_paths(g: &BipartiteGraph, k: usize) -> usize {
    let mut count = 0;
    for_each_combination(g.n(), k, &mut |vs| {
        let degs = subset_degrees(g, vs);
        if subset_edge_count(&degs) == k - 1
            && degs.iter().all(|&d| d <= 2)
            && subset_connected(g, vs)
        {
            count += 1;
        }
    });
    count
}

/// Number of induced 6-cycles, counted as vertex sets.
pub fn count_induced_c6(g: &BipartiteGraph) -> usize {
    let mut count = 0;
    for_each_combination(g.n(), 6, &mut |vs| {
        let degs = subset_degrees(g, vs);
        if degs.iter().all(|&d| d == 2) && subset_connected(g, vs) {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::generate::{gen_family, Family};

    #[test]
    fn eds_census_on_small_families() {
        let p6 = gen_family(Family::Path, 6).unwrap();
        let all = all_eds(&p6);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].ids(), &[1, 4]);

        let p8 = gen_family(Family::Path, 8).unwrap();
        let all = all_eds(&p8);
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].ids(), &[0, 3, 6]);
        assert_eq!(all[1].ids(), &[1, 4, 7]);
        assert_eq!(smallest_eds(&p8).unwrap().ids(), &[0, 3, 6]);

        let c4 = gen_family(Family::Cycle, 4).unwrap();
        assert_eq!(count_eds(&c4), 0);
        assert_eq!(smallest_eds(&c4), None);

        let edgeless = BipartiteGraph::from_edge_list(3, &[]).unwrap();
        let all = all_eds(&edgeless);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].ids(), &[0, 1, 2]);
    }

    #[test]
    fn lex_order_handles_interleaved_sets() {
        // {0,5} precedes {1,2} even though its mask is numerically larger.
        assert!(lex_less(0b100001, 0b000110));
        assert!(!lex_less(0b000110, 0b100001));
        // A prefix precedes its extensions.
        assert!(lex_less(0b000001, 0b001001));
    }

    #[test]
    fn spider_scan_recognizes_the_family_member() {
        let spider = gen_family(Family::Spider115, 8).unwrap();
        assert!(has_s115(&spider));
        assert!(!has_s115(&gen_family(Family::Path, 9).unwrap()));
        // S(1,2,4) has the same degree profile but a different leg split.
        let g = BipartiteGraph::from_edge_list(
            8,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        assert!(!has_s115(&g));
    }

    #[test]
    fn subset_counts_on_fixed_graphs() {
        let p8 = gen_family(Family::Path, 8).unwrap();
        assert_eq!(count_induced_paths(&p8, 8), 1);
        assert_eq!(count_induced_paths(&p8, 4), 5);
        let c6 = gen_family(Family::Cycle, 6).unwrap();
        assert_eq!(count_induced_paths(&c6, 5), 6);
        assert_eq!(count_induced_c6(&c6), 1);
    }
}
