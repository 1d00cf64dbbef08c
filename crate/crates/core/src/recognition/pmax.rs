//! The split of a graph into a threshold part `V_T` and a unit interval part
//! `V_U` around a chosen vertex `p`, found through a 2SAT instance.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};
use crate::patterns::{find_forbidden_bull, find_forbidden_claw, Witness};
use crate::twosat::{solve, Literal, TwoSatInstance};
use crate::vertex_set::VertexSet;

use super::preorder::{vicinal_preorder, VicinalPreorder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMaxPartition {
    pub p: usize,
    pub v_t: VertexSet,
    pub v_u: VertexSet,
}

impl PMaxPartition {
    /// `V_U` is taken as the complement of `v_t`.
    pub fn from_threshold_side(p: usize, v_t: VertexSet) -> Self {
        let v_u = v_t.complement();
        PMaxPartition { p, v_t, v_u }
    }
}

/// Why a partition is not admissible, tagged by the violated condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibilityFailure {
    /// The two sides do not partition the vertex set, or `p ∉ V_T`.
    NotAPartition,
    /// (1) two vertices of `V_T` are incomparable.
    Incomparable(usize, usize),
    /// (2) a vertex of `V_T` is not below `p`.
    NotMaximal(usize),
    /// (3) `N(vertex) ∩ V_U` contains the non-adjacent pair.
    NeighborhoodNotClique { vertex: usize, pair: (usize, usize) },
    /// (4) a forbidden placement of a bull or claw.
    ForbiddenBull(Witness),
    ForbiddenClaw(Witness),
}

impl AdmissibilityFailure {
    /// 1 to 4, or 0 for a malformed partition.
    pub fn condition(&self) -> u8 {
        match self {
            AdmissibilityFailure::NotAPartition => 0,
            AdmissibilityFailure::Incomparable(..) => 1,
            AdmissibilityFailure::NotMaximal(_) => 2,
            AdmissibilityFailure::NeighborhoodNotClique { .. } => 3,
            AdmissibilityFailure::ForbiddenBull(_) | AdmissibilityFailure::ForbiddenClaw(_) => 4,
        }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::IndexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    Ok(())
}

/// `W = {i : N(i) ⊆ N(p) ∪ {p}}`.
pub fn compute_w_set(g: &Graph, p: usize) -> Result<VertexSet, GraphError> {
    check_vertex(g, p)?;
    let n = g.vertex_count();
    let closed = g.closed_nbrs(p);
    Ok(VertexSet::from_iter_in(n, (0..n).filter(|&i| g.nbrs(i).is_subset(&closed))))
}

/// Leaf pairs of induced bulls whose degree-2 corner is `p`.
fn bull_leaf_pairs(g: &Graph, p: usize) -> Vec<(usize, usize)> {
    let np = g.neighbor_list(p);
    let closed = g.closed_nbrs(p);
    let mut out = Vec::new();
    for (a, &j1) in np.iter().enumerate() {
        for &j2 in &np[a + 1..] {
            if !g.has_edge(j1, j2) {
                continue;
            }
            // k1 hangs off j1 only, k2 off j2 only
            let only = |j: usize, other: usize| {
                let mut s = g.nbrs(j).difference(&closed);
                s.difference_with(g.nbrs(other));
                s.remove(other);
                s
            };
            let left = only(j1, j2);
            let right = only(j2, j1);
            for k1 in &left {
                for k2 in &right {
                    if k1 != k2 && !g.has_edge(k1, k2) {
                        out.push((k1, k2));
                    }
                }
            }
        }
    }
    out
}

/// Leaf triples of induced claws centred at `c`.
fn claw_leaf_triples(g: &Graph, c: usize) -> Vec<[usize; 3]> {
    let nb = g.neighbor_list(c);
    let mut out = Vec::new();
    for (a, &i) in nb.iter().enumerate() {
        for (b, &j) in nb.iter().enumerate().skip(a + 1) {
            if g.has_edge(i, j) {
                continue;
            }
            for &q in &nb[b + 1..] {
                if !g.has_edge(i, q) && !g.has_edge(j, q) {
                    out.push([i, j, q]);
                }
            }
        }
    }
    out
}

/// Clauses (ii) to (vi) for `p`, plus a unit clause `x_v` for every `v` in
/// `extra_unit_true`. Duplicates are removed.
pub fn build_2sat(g: &Graph, p: usize, extra_unit_true: &VertexSet) -> Result<TwoSatInstance, GraphError> {
    let preorder = vicinal_preorder(g);
    build_2sat_with(g, &preorder, p, extra_unit_true)
}

pub(crate) fn build_2sat_with(
    g: &Graph,
    preorder: &VicinalPreorder,
    p: usize,
    extra_unit_true: &VertexSet,
) -> Result<TwoSatInstance, GraphError> {
    check_vertex(g, p)?;
    if let Some(v) = extra_unit_true.iter().find(|&v| v >= g.vertex_count()) {
        return Err(GraphError::IndexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    let n = g.vertex_count();
    let w = compute_w_set(g, p)?;
    let mut inst = TwoSatInstance::new(n);
    let mut clause = |a: Literal, b: Literal| inst.add_clause(a, b).expect("literals are in range");

    clause(Literal::pos(p), Literal::pos(p));
    for i in &w.complement() {
        clause(Literal::neg(i), Literal::neg(i));
    }
    let np = g.neighbor_list(p);
    for (a, &i) in np.iter().enumerate() {
        for &j in &np[a + 1..] {
            if !g.has_edge(i, j) {
                clause(Literal::pos(i), Literal::pos(j));
            }
        }
    }
    for (i, j) in preorder.incomparable_pairs() {
        clause(Literal::neg(i), Literal::neg(j));
    }
    for (i, j) in bull_leaf_pairs(g, p) {
        clause(Literal::pos(i), Literal::pos(j));
    }
    for c in &w.complement() {
        for [i, j, q] in claw_leaf_triples(g, c) {
            clause(Literal::pos(i), Literal::pos(j));
            clause(Literal::pos(i), Literal::pos(q));
            clause(Literal::pos(j), Literal::pos(q));
        }
    }
    for v in extra_unit_true {
        clause(Literal::pos(v), Literal::pos(v));
    }
    inst.dedup();
    Ok(inst)
}

/// `V_T` is the set of variables the solver sets to true.
pub fn p_max_partition(g: &Graph, p: usize) -> Result<Option<PMaxPartition>, GraphError> {
    let inst = build_2sat(g, p, &VertexSet::new(g.vertex_count()))?;
    Ok(solve(&inst).map(|a| {
        let v_t = VertexSet::from_iter_in(g.vertex_count(), (0..g.vertex_count()).filter(|&v| a.value(v)));
        PMaxPartition::from_threshold_side(p, v_t)
    }))
}

pub fn is_p_admissible(g: &Graph, part: &PMaxPartition) -> Result<(), AdmissibilityFailure> {
    let n = g.vertex_count();
    let (t, u) = (&part.v_t, &part.v_u);
    if t.universe() != n || u.universe() != n || !t.is_disjoint(u) || t.len() + u.len() != n || part.p >= n || !t.contains(part.p) {
        return Err(AdmissibilityFailure::NotAPartition);
    }
    let preorder = vicinal_preorder(g);
    if let Some((i, j)) = preorder.incomparable_within(t) {
        return Err(AdmissibilityFailure::Incomparable(i, j));
    }
    if let Some(i) = t.iter().find(|&i| !preorder.relates(i, part.p)) {
        return Err(AdmissibilityFailure::NotMaximal(i));
    }
    for i in t {
        if let Some(pair) = g.non_adjacent_pair(&g.nbrs(i).intersection(u)) {
            return Err(AdmissibilityFailure::NeighborhoodNotClique { vertex: i, pair });
        }
    }
    if let Some(w) = find_forbidden_bull(g, t) {
        return Err(AdmissibilityFailure::ForbiddenBull(w));
    }
    if let Some(w) = find_forbidden_claw(g, t) {
        return Err(AdmissibilityFailure::ForbiddenClaw(w));
    }
    Ok(())
}
