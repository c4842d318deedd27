//! Seeded instance generators. All of them drive a ChaCha8 stream keyed with
//! `seed_from_u64`, so outputs are identical across platforms and runs; the
//! exact draw order is part of each generator's contract and is frozen by
//! tests.

use crate::domination::{verify, EdsSolution};
use crate::graph::{BipartiteGraph, Vertex};
use crate::pattern::find_s115;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    BadParameter(String),
    /// `gen_s115_free` gave up; `tries` attempts were made.
    TriesExhausted { tries: u32 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            GenError::TriesExhausted { tries } => {
                write!(f, "no S(1,1,5)-free graph found in {tries} tries")
            }
        }
    }
}

impl std::error::Error for GenError {}

/// Edge threshold for probability `p`: a u64 draw below it means "edge".
/// NaN is treated as 0 and out-of-range values clamp.
fn edge_threshold(p: f64) -> u128 {
    if !(p > 0.0) {
        return 0;
    }
    if p >= 1.0 {
        return 1u128 << 64;
    }
    (p * 18446744073709551616.0) as u128
}

/// Random bipartite graph on sides `{0..nx}` and `{nx..nx+ny}`. Each cross
/// pair gets one u64 draw, scanned with the X vertex outermost, and becomes
/// an edge iff the draw falls below `floor(p * 2^64)`.
pub fn gen_random(nx: usize, ny: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let thr = edge_threshold(p);
    let mut edges = Vec::new();
    for a in 0..nx {
        for b in 0..ny {
            if (rng.next_u64() as u128) < thr {
                edges.push((a, nx + b));
            }
        }
    }
    BipartiteGraph::from_edge_list(nx + ny, &edges)
        .expect("cross edges between two fixed sides cannot break bipartiteness")
}

#[derive(Clone, Debug)]
pub struct S115FreeSample {
    pub graph: BipartiteGraph,
    /// Attempts consumed, counting the successful one.
    pub tries: u32,
}

/// Rejection-samples [`gen_random`] until the result has no induced
/// S(1,1,5). Attempt seeds are drawn from a master stream keyed by `seed`.
pub fn gen_s115_free(
    nx: usize,
    ny: usize,
    p: f64,
    seed: u64,
    max_tries: u32,
) -> Result<S115FreeSample, GenError> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    for t in 1..=max_tries {
        let attempt_seed = master.next_u64();
        let graph = gen_random(nx, ny, p, attempt_seed);
        if find_s115(&graph).is_none() {
            return Ok(S115FreeSample { graph, tries: t });
        }
    }
    Err(GenError::TriesExhausted { tries: max_tries })
}

#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub graph: BipartiteGraph,
    pub solution: EdsSolution,
}

/// Graph with a known e.d.s. planted in it. Vertices `0..nd` form the
/// solution, alternating sides (even ids on X). Each side then gets `spread`
/// extra vertices, provided the opposite side holds at least one solution
/// vertex to dominate them; every extra vertex is wired to one uniformly
/// drawn solution vertex of the opposite side (X extras first, ascending).
/// Finally each extra-extra cross pair may get a noise edge with probability
/// `extra_p` (same draw scheme as [`gen_random`], X extras outermost).
/// Solution vertices get no other edges, which keeps them pairwise at
/// distance 3 or more, so the planted set stays an e.d.s. by construction.
pub fn gen_planted(
    nd: usize,
    spread: usize,
    extra_p: f64,
    seed: u64,
) -> Result<PlantedInstance, GenError> {
    if nd == 0 {
        return Err(GenError::BadParameter("planted solution must be nonempty".into()));
    }
    let dx: Vec<Vertex> = (0..nd).filter(|i| i % 2 == 0).collect();
    let dy: Vec<Vertex> = (0..nd).filter(|i| i % 2 == 1).collect();
    // X extras need a Y-side dominator and vice versa.
    let x_extras = if dy.is_empty() { 0 } else { spread };
    let y_extras = if dx.is_empty() { 0 } else { spread };
    let n = nd + x_extras + y_extras;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let first_x = nd;
    let first_y = nd + x_extras;
    for e in 0..x_extras {
        let dom = dy[(rng.next_u64() % dy.len() as u64) as usize];
        edges.push((first_x + e, dom));
    }
    for e in 0..y_extras {
        let dom = dx[(rng.next_u64() % dx.len() as u64) as usize];
        edges.push((first_y + e, dom));
    }
    let thr = edge_threshold(extra_p);
    for a in 0..x_extras {
        for b in 0..y_extras {
            if (rng.next_u64() as u128) < thr {
                edges.push((first_x + a, first_y + b));
            }
        }
    }
    let graph = BipartiteGraph::from_edge_list(n, &edges)
        .expect("planted construction only wires opposite sides");
    let solution = EdsSolution::new((0..nd).collect());
    debug_assert!(verify(&graph, &solution).valid);
    Ok(PlantedInstance { graph, solution })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path on n vertices (n >= 1), edges i-(i+1).
    Path,
    /// Cycle on n vertices; n must be even and >= 4.
    Cycle,
    /// Star: vertex 0 joined to 1..n (n >= 1 total vertices).
    Star,
    /// Complete bipartite K_{ceil(n/2), floor(n/2)}.
    CompleteBipartite,
    /// The S(1,1,5) spider; always 8 vertices, n is ignored.
    Spider115,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        match name {
            "path" => Some(Family::Path),
            "cycle" => Some(Family::Cycle),
            "star" => Some(Family::Star),
            "complete" => Some(Family::CompleteBipartite),
            "spider115" => Some(Family::Spider115),
            _ => None,
        }
    }
}

pub fn gen_family(family: Family, n: usize) -> Result<BipartiteGraph, GenError> {
    let edges: Vec<(Vertex, Vertex)> = match family {
        Family::Path => {
            if n == 0 {
                return Err(GenError::BadParameter("path needs n >= 1".into()));
            }
            (1..n).map(|i| (i - 1, i)).collect()
        }
        Family::Cycle => {
            if n < 4 || n % 2 != 0 {
                return Err(GenError::BadParameter(format!(
                    "cycle needs even n >= 4, got {n}"
                )));
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Star => {
            if n == 0 {
                return Err(GenError::BadParameter("star needs n >= 1".into()));
            }
            (1..n).map(|i| (0, i)).collect()
        }
        Family::CompleteBipartite => {
            if n == 0 {
                return Err(GenError::BadParameter("complete bipartite needs n >= 1".into()));
            }
            let a = n.div_ceil(2);
            (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect()
        }
        Family::Spider115 => {
            vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
        }
    };
    let n = if family == Family::Spider115 { 8 } else { n };
    Ok(BipartiteGraph::from_edge_list(n, &edges).expect("families are bipartite"))
}
