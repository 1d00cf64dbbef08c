//! Closed-form quantities on realized graphs: intersection number with an
//! explicit cover, diameter against the layer count, the smallest number of
//! layers, and the global clustering coefficient.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::patterns::check_semi_unit_interval;
use crate::rational::Rational;
use crate::recognition::{build_2sat, is_threshold, PMaxPartition};
use crate::twosat::solve;
use crate::vertex_set::VertexSet;
use crate::weights::{decompose_from_c0, verify_dt, DistanceDecomposition, WeightAssignment};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("weights do not realize the graph")]
    NotRealizing,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("no path of length two, clustering is undefined")]
    NoTriplets,
    #[error("decomposition needs at least two layers")]
    TooFewLayers,
    #[error("diameter {diameter} is outside [{m}, {m} + 1]")]
    BoundViolated { m: usize, diameter: usize },
}

/// Vertices sorted by `(weight, index)` with forward neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtOrdering {
    /// `order[k]` is the vertex at rank `k`.
    pub order: Vec<usize>,
    /// `rank[v]` is the position of `v` in `order`.
    pub rank: Vec<usize>,
    /// `forward[k]`: neighbors of `order[k]` with a higher rank, as vertices.
    pub forward: Vec<VertexSet>,
}

impl DtOrdering {
    pub fn forward_degree(&self, k: usize) -> usize {
        self.forward[k].len()
    }
}

pub fn dt_ordering(g: &Graph, wa: &WeightAssignment) -> Result<DtOrdering, MetricsError> {
    verify_dt(g, wa).map_err(|_| MetricsError::NotRealizing)?;
    Ok(ordering_by(g, &wa.weights))
}

fn ordering_by(g: &Graph, weights: &[Rational]) -> DtOrdering {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let forward = order
        .iter()
        .map(|&v| VertexSet::from_iter_in(n, g.neighbor_list(v).iter().copied().filter(|&u| rank[u] > rank[v])))
        .collect();
    DtOrdering { order, rank, forward }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeCliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl EdgeCliqueCover {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }

    /// Every member is a clique and every edge lies in some member.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if !self.cliques.iter().all(|c| c.universe() == n && g.is_clique(c)) {
            return false;
        }
        g.edges().all(|(u, v)| self.cliques.iter().any(|c| c.contains(u) && c.contains(v)))
    }
}

/// `S = {k : N_k⁺ ≠ ∅ and {k} ∪ N_k⁺ ⊄ N_{k−1}⁺}` with `N_{−1}⁺ = ∅`; the
/// cliques `{k} ∪ N_k⁺` for `k ∈ S` cover every edge.
pub fn intersection_number(ord: &DtOrdering) -> (usize, EdgeCliqueCover) {
    let mut cliques = Vec::new();
    for (k, fwd) in ord.forward.iter().enumerate() {
        if fwd.is_empty() {
            continue;
        }
        let mut closed = fwd.clone();
        closed.insert(ord.order[k]);
        if k == 0 || !closed.is_subset(&ord.forward[k - 1]) {
            cliques.push(closed);
        }
    }
    (cliques.len(), EdgeCliqueCover { cliques })
}

/// Longest shortest path, by breadth-first search from every vertex.
pub fn diameter(g: &Graph) -> Result<usize, MetricsError> {
    if g.vertex_count() == 0 {
        return Err(MetricsError::Empty);
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in g.distances_from(s) {
            best = best.max(d.ok_or(MetricsError::Disconnected)?);
        }
    }
    Ok(best)
}

/// `(m, D − m)` for a decomposition with `m ≥ 1`; an error if `D ∉ {m, m+1}`.
pub fn diameter_bound_check(g: &Graph, d: &DistanceDecomposition) -> Result<(usize, usize), MetricsError> {
    let m = d.m();
    if m < 1 {
        return Err(MetricsError::TooFewLayers);
    }
    let diameter = diameter(g)?;
    if diameter < m || diameter > m + 1 {
        return Err(MetricsError::BoundViolated { m, diameter });
    }
    Ok((m, diameter - m))
}

/// A split with `C₀ = V_T` and at most `target_m` further layers, if one exists.
pub fn min_layers(g: &Graph, target_m: usize) -> Option<(usize, PMaxPartition)> {
    let n = g.vertex_count();
    if n == 0 || check_semi_unit_interval(g).is_err() {
        return None;
    }
    if target_m == 0 {
        if !is_threshold(g) || !g.isolated_vertices().is_empty() {
            return None;
        }
        // the vicinal maximum is any vertex of largest degree
        let p = (0..n).max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v))).unwrap();
        return Some((p, PMaxPartition::from_threshold_side(p, g.vertices())));
    }
    for p in 0..n {
        let dist = g.distances_from(p);
        let ecc = dist.iter().map(|d| d.unwrap_or(usize::MAX)).max().unwrap();
        let forced = if target_m == 1 {
            if ecc > 2 {
                continue;
            }
            VertexSet::from_iter_in(n, (0..n).filter(|&v| dist[v] == Some(2)))
        } else {
            if ecc > target_m {
                continue;
            }
            VertexSet::new(n)
        };
        let inst = build_2sat(g, p, &forced).expect("p in range");
        if let Some(a) = solve(&inst) {
            let v_t = VertexSet::from_iter_in(n, (0..n).filter(|&v| a.value(v)));
            return Some((p, PMaxPartition::from_threshold_side(p, v_t)));
        }
    }
    None
}

/// Smallest target in `0..=max_m` for which [`min_layers`] succeeds.
pub fn min_layer_count(g: &Graph, max_m: usize) -> Option<(usize, usize, PMaxPartition)> {
    (0..=max_m).find_map(|m| min_layers(g, m).map(|(p, part)| (m, p, part)))
}

fn choose2(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

/// `Σ C(d_k⁺, 2)`, the number of triangles in a realized graph.
pub fn forward_pair_count(ord: &DtOrdering) -> u64 {
    (0..ord.forward.len()).map(|k| choose2(ord.forward_degree(k))).sum()
}

/// `Σ C(d_i, 2)`, the number of paths of length two.
pub fn triplet_count(g: &Graph) -> u64 {
    (0..g.vertex_count()).map(|v| choose2(g.degree(v))).sum()
}

/// `3 Σ C(d_k⁺, 2) / Σ C(d_i, 2)`, exact.
pub fn clustering_coefficient(g: &Graph, ord: &DtOrdering) -> Result<Rational, MetricsError> {
    let den = triplet_count(g);
    if den == 0 {
        return Err(MetricsError::NoTriplets);
    }
    Ok(Rational::new(BigInt::from(3 * forward_pair_count(ord)), BigInt::from(den)))
}

/// Layers grown from the weight band `[(α−β)/2, (α+β)/2)`; `None` when the
/// band is empty or does not reach every vertex.
pub fn decomposition_from_weights(g: &Graph, wa: &WeightAssignment) -> Option<DistanceDecomposition> {
    decompose_from_c0(g, &wa.core_band()).ok()
}
