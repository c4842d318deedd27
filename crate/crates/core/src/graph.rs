//! Bipartite graph storage and the traversal primitives the solver builds on:
//! validated construction with an odd-cycle witness, BFS distances, connected
//! components, and multi-source distance levels.

use std::collections::VecDeque;
use std::fmt;

pub type Vertex = usize;

/// Color class of a vertex. The coloring is canonical: the lowest-numbered
/// vertex of every connected component is on side `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// The edge list contains a loop `(v, v)`.
    SelfLoop(Vertex),
    /// An endpoint is not in `0..n`.
    VertexOutOfRange { vertex: Vertex, n: usize },
    /// The graph has an odd cycle; the witness lists its vertices in cyclic
    /// order, starting at the smallest one.
    NotBipartite { odd_cycle: Vec<Vertex> },
    /// `distance_levels` was called with no sources.
    EmptySources,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            GraphError::NotBipartite { odd_cycle } => {
                write!(f, "graph is not bipartite, odd cycle:")?;
                for v in odd_cycle {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            GraphError::EmptySources => write!(f, "distance_levels requires at least one source"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected bipartite graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj: Vec<Vec<Vertex>>,
    side: Vec<Side>,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops are rejected, and a proper 2-coloring is derived (or an odd
    /// cycle reported). Vertices unmentioned by any edge are isolated.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let side = color_bipartite(&adj)?;
        Ok(BipartiteGraph { adj, side })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distance, `None` when `u` and `v` are in different components.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n()];
        dist[u] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            for &x in &self.adj[w] {
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Some(dist[x]);
                    }
                    queue.push_back(x);
                }
            }
        }
        None
    }

    /// Connected components with ids assigned by smallest member.
    pub fn components(&self) -> ComponentPartition {
        let n = self.n();
        let mut id = vec![usize::MAX; n];
        let mut members: Vec<Vec<Vertex>> = Vec::new();
        for start in 0..n {
            if id[start] != usize::MAX {
                continue;
            }
            let c = members.len();
            let mut comp = vec![start];
            id[start] = c;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(w) = queue.pop_front() {
                for &x in &self.adj[w] {
                    if id[x] == usize::MAX {
                        id[x] = c;
                        comp.push(x);
                        queue.push_back(x);
                    }
                }
            }
            comp.sort_unstable();
            members.push(comp);
        }
        ComponentPartition { id, members }
    }

    /// Multi-source BFS levels `N_0, N_1, ...` from `sources`. Vertices
    /// unreachable from every source have no level.
    pub fn distance_levels(&self, sources: &[Vertex]) -> Result<DistanceLevels, GraphError> {
        if sources.is_empty() {
            return Err(GraphError::EmptySources);
        }
        let n = self.n();
        let mut level = vec![None; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            debug_assert!(s < n);
            if level[s].is_none() {
                level[s] = Some(0);
                queue.push_back(s);
            }
        }
        let mut max_level = 0;
        while let Some(w) = queue.pop_front() {
            let d = level[w].unwrap();
            for &x in &self.adj[w] {
                if level[x].is_none() {
                    level[x] = Some(d + 1);
                    max_level = max_level.max(d + 1);
                    queue.push_back(x);
                }
            }
        }
        let mut buckets = vec![Vec::new(); max_level + 1];
        for v in 0..n {
            if let Some(d) = level[v] {
                buckets[d].push(v);
            }
        }
        Ok(DistanceLevels { level, buckets })
    }

    /// Subgraph induced by `vertices` (sorted, deduplicated), plus the map
    /// from new ids to old ids. Relative vertex order is preserved.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (BipartiteGraph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut edges = Vec::new();
        for (new_u, &u) in map.iter().enumerate() {
            for &v in &self.adj[u] {
                if v > u {
                    if let Ok(new_v) = map.binary_search(&v) {
                        edges.push((new_u, new_v));
                    }
                }
            }
        }
        let sub = BipartiteGraph::from_edge_list(map.len(), &edges)
            .expect("induced subgraph of a bipartite graph is bipartite");
        (sub, map)
    }
}

/// Result of [`BipartiteGraph::components`].
#[derive(Clone, Debug)]
pub struct ComponentPartition {
    id: Vec<usize>,
    members: Vec<Vec<Vertex>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn id_of(&self, v: Vertex) -> usize {
        self.id[v]
    }

    /// Members of component `c`, ascending.
    pub fn members(&self, c: usize) -> &[Vertex] {
        &self.members[c]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> {
        self.members.iter().map(Vec::as_slice)
    }
}

/// Result of [`BipartiteGraph::distance_levels`]: per-vertex level plus the
/// level buckets `N_i` (each sorted ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLevels {
    level: Vec<Option<usize>>,
    buckets: Vec<Vec<Vertex>>,
}

impl DistanceLevels {
    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.level[v]
    }

    /// Vertices at exactly level `i`; empty past the last populated level.
    pub fn bucket(&self, i: usize) -> &[Vertex] {
        self.buckets.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_level(&self) -> usize {
        self.buckets.len() - 1
    }

    pub fn is_level(&self, v: Vertex, i: usize) -> bool {
        self.level[v] == Some(i)
    }
}

fn color_bipartite(adj: &[Vec<Vertex>]) -> Result<Vec<Side>, GraphError> {
    let n = adj.len();
    let mut side = vec![Side::X; n];
    let mut seen = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        side[start] = Side::X;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    side[v] = side[u].flip();
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Err(GraphError::NotBipartite {
                        odd_cycle: odd_cycle_witness(u, v, &parent, &depth),
                    });
                }
            }
        }
    }
    Ok(side)
}

/// Reconstructs the cycle through BFS-tree paths of `u` and `v` up to their
/// lowest common ancestor, then rotates it to start at its smallest vertex and
/// orients it toward the smaller of that vertex's two cycle neighbors.
fn odd_cycle_witness(u: Vertex, v: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, v);
    let mut path_a = vec![a];
    let mut path_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        path_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        path_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        path_a.push(a);
        path_b.push(b);
    }
    // path_a ends at the LCA; path_b's copy of it is dropped.
    path_b.pop();
    let mut cycle = path_a;
    cycle.extend(path_b.into_iter().rev());
    canonical_cycle(cycle)
}

fn canonical_cycle(cycle: Vec<Vertex>) -> Vec<Vertex> {
    let k = cycle.len();
    let min_pos = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let next = cycle[(min_pos + 1) % k];
    let prev = cycle[(min_pos + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if next <= prev {
        for i in 0..k {
            out.push(cycle[(min_pos + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(cycle[(min_pos + k - i) % k]);
        }
    }
    out
}
