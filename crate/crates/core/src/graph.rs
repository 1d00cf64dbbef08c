//! Immutable simple undirected graphs over dense vertex indices.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self loop on vertex {0}")]
    SelfLoop(usize),
    #[error("empty seed set")]
    EmptySeed,
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and bitsets
/// for the set algebra the recognition code leans on.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    lists: Vec<Vec<usize>>,
    sets: Vec<VertexSet>,
    m: usize,
}

/// Result of a multi-source breadth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    /// `layers[l]` holds the vertices at distance exactly `l` from the seed.
    pub layers: Vec<VertexSet>,
    pub unreached: VertexSet,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation) collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut sets = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self::from_sets(sets))
    }

    /// Builds a graph from symmetric, irreflexive neighbor sets.
    pub(crate) fn from_sets(sets: Vec<VertexSet>) -> Graph {
        let n = sets.len();
        let lists: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
        let m = lists.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!((0..n).all(|i| !sets[i].contains(i)));
        debug_assert!((0..n).all(|i| lists[i].iter().all(|&j| sets[j].contains(i))));
        Graph { n, lists, sets, m }
    }

    /// Builds a graph from an edge predicate evaluated on every unordered pair.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut sets = vec![VertexSet::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    sets[i].insert(j);
                    sets[j].insert(i);
                }
            }
        }
        Self::from_sets(sets)
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sets(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        Self::from_fn(n, |_, _| true)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `N(i)` with a bounds check.
    pub fn neighbors(&self, i: usize) -> Result<&VertexSet, GraphError> {
        self.check(i)?;
        Ok(&self.sets[i])
    }

    /// `N(i)` without the bounds check. Panics on an out-of-range index.
    #[inline]
    pub fn nbrs(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    #[inline]
    pub fn neighbor_list(&self, i: usize) -> &[usize] {
        &self.lists[i]
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.lists[i].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.sets[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Closed neighborhood `N(i) ∪ {i}`.
    pub fn closed_nbrs(&self, i: usize) -> VertexSet {
        let mut s = self.sets[i].clone();
        s.insert(i);
        s
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.sets[v])
        })
    }

    /// First non-adjacent pair inside `s`, if any.
    pub fn non_adjacent_pair(&self, s: &VertexSet) -> Option<(usize, usize)> {
        for u in s {
            let missing = s.difference(&self.sets[u]);
            if let Some(v) = missing.iter().find(|&v| v > u) {
                return Some((u, v));
            }
        }
        None
    }

    /// Induced subgraph on `keep` (ascending), relabelled to `0..keep.len()`.
    /// Returns the subgraph and the map from new to old labels.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (k, &v) in old.iter().enumerate() {
            new_of[v] = k;
        }
        let k = old.len();
        let sets = old
            .iter()
            .map(|&v| VertexSet::from_iter_in(k, self.lists[v].iter().filter(|&&u| keep.contains(u)).map(|&u| new_of[u])))
            .collect();
        (Self::from_sets(sets), old)
    }

    pub fn bfs_layers(&self, seed: &VertexSet) -> Result<BfsLayers, GraphError> {
        if seed.is_empty() {
            return Err(GraphError::EmptySeed);
        }
        if let Some(bad) = seed.iter().find(|&v| v >= self.n) {
            return Err(GraphError::IndexOutOfRange { vertex: bad, n: self.n });
        }
        let mut seen = seed.clone();
        let mut layers = vec![seed.clone()];
        loop {
            let mut next = VertexSet::new(self.n);
            for v in layers.last().unwrap() {
                next.union_with(&self.sets[v]);
            }
            next.difference_with(&seen);
            if next.is_empty() {
                break;
            }
            seen.union_with(&next);
            layers.push(next);
        }
        Ok(BfsLayers {
            layers,
            unreached: seen.complement(),
        })
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.lists[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest path from `from` to `to` using only vertices in `allowed`
    /// (the endpoints must be members). Returns the vertex sequence.
    pub fn shortest_path_within(&self, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        parent[from] = from;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &v in &self.lists[u] {
                if parent[v] == usize::MAX && allowed.contains(v) {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Connected components, ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut assigned = VertexSet::new(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned.contains(v) {
                continue;
            }
            let seed = VertexSet::from_iter_in(self.n, [v]);
            let layers = self.bfs_layers(&seed).expect("seed is a valid vertex");
            let comp = layers.unreached.complement();
            assigned.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_iter_in(self.n, (0..self.n).filter(|&v| self.lists[v].is_empty()))
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
