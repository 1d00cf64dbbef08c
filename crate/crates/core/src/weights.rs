//! Weight realizations: the two-inequality edge rule, distance decompositions,
//! the structural conditions a decomposition must meet, and constructive
//! weight synthesis in exact rational arithmetic.
//!
//! Synthesis runs in three stages:
//!
//! 1. the core layer `C₀` induces a threshold graph; its vertices get weights
//!    from the degree partition, made distinct with small perturbations and
//!    mapped affinely into the open interval `((α−β)/2, (α+β)/2)`;
//! 2. a step size `ε` is chosen below both the smallest gap between core
//!    weights and `n/(n+1)` of the smallest core slack above `(α−β)/2`;
//! 3. each outer layer `C_l` is filled in from the layer below:
//!    `w(i) = β + min{w(k) : k ∈ N(i)∩C_{l−1}} − ε/(n+1)^{l−1} · (1 − (|N(i)∩C_{l+1}| + 1)/(n+1))`.
//!
//! The `+ 1` keeps the bracket strictly below one. Without it a vertex with no
//! neighbor in the next layer can land exactly `β` above a lower-layer vertex
//! it is not adjacent to, which the edge rule reads as an edge.
//!
//! The result is always checked pair-by-pair with [`verify_dt`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::rational::{int, Rational};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {0} is not reachable from the core layer")]
    Unreachable(usize),
    #[error("core layer is empty")]
    EmptyCore,
    #[error("core layer does not induce a threshold graph: {0} and {1} are incomparable")]
    NotThreshold(usize, usize),
    #[error("degenerate core weights: no positive step size exists")]
    DegenerateWeights,
    #[error("layer {layer}: vertex {vertex} has no neighbor in the layer below")]
    PreconditionViolated { layer: usize, vertex: usize },
    #[error("decomposition fails the structural conditions: {0}")]
    ConditionsFailed(ConditionFailure),
    #[error("pair ({i}, {j}) is {} in the graph but the weights say otherwise", if *.in_graph { "an edge" } else { "a non-edge" })]
    Violation { i: usize, j: usize, in_graph: bool },
    #[error("synthesized weights do not reproduce the graph at pair ({0}, {1})")]
    SynthesisFailed(usize, usize),
}

/// Which of the three decomposition conditions failed, with a witness pair.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionFailure {
    #[error("(i) core vertices {0} and {1} are vicinally incomparable")]
    CoreNotTotal(usize, usize),
    #[error("(ii) layer {layer} is not a clique: {i} and {j} are non-adjacent")]
    LayerNotClique { layer: usize, i: usize, j: usize },
    #[error("(iii) layer {layer}: {i} and {j} are incomparable")]
    LayerNotTotal { layer: usize, i: usize, j: usize },
}

impl ConditionFailure {
    /// 1, 2 or 3.
    pub fn condition(&self) -> u8 {
        match self {
            ConditionFailure::CoreNotTotal(..) => 1,
            ConditionFailure::LayerNotClique { .. } => 2,
            ConditionFailure::LayerNotTotal { .. } => 3,
        }
    }
}

/// Parameters `α ≥ β > 0` and a positive weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    pub alpha: Rational,
    pub beta: Rational,
    pub weights: Vec<Rational>,
}

impl WeightAssignment {
    pub fn new(alpha: Rational, beta: Rational, weights: Vec<Rational>) -> Result<Self, WeightError> {
        validate_parameters(&alpha, &beta)?;
        if let Some(k) = weights.iter().position(|w| !w.is_positive()) {
            return Err(WeightError::InvalidParameters(alloc::format!("weight of vertex {k} is not positive")));
        }
        Ok(WeightAssignment { alpha, beta, weights })
    }

    /// `(α, β) = (2, 1)`.
    pub fn default_parameters() -> (Rational, Rational) {
        (int(2), int(1))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `(α − β)/2`, the floor every non-isolated vertex sits on or above.
    pub fn lower_edge(&self) -> Rational {
        (&self.alpha - &self.beta) / int(2)
    }

    /// `(α + β)/2`, the top of the core band.
    pub fn upper_core_edge(&self) -> Rational {
        (&self.alpha + &self.beta) / int(2)
    }

    /// Vertices whose weight lies in `[(α−β)/2, (α+β)/2)`.
    pub fn core_band(&self) -> VertexSet {
        let lo = self.lower_edge();
        let hi = self.upper_core_edge();
        VertexSet::from_iter_in(self.len(), (0..self.len()).filter(|&v| self.weights[v] >= lo && self.weights[v] < hi))
    }
}

pub fn validate_parameters(alpha: &Rational, beta: &Rational) -> Result<(), WeightError> {
    if !beta.is_positive() {
        return Err(WeightError::InvalidParameters("beta must be positive".into()));
    }
    if alpha < beta {
        return Err(WeightError::InvalidParameters("alpha must be at least beta".into()));
    }
    Ok(())
}

#[inline]
fn edge_rule(wi: &Rational, wj: &Rational, alpha: &Rational, beta: &Rational) -> bool {
    &(wi + wj) >= alpha && &(wi - wj).abs() <= beta
}

/// `wi + wj ≥ α` and `|wi − wj| ≤ β`.
pub fn edge_exists(wi: &Rational, wj: &Rational, alpha: &Rational, beta: &Rational) -> Result<bool, WeightError> {
    validate_parameters(alpha, beta)?;
    if !wi.is_positive() || !wj.is_positive() {
        return Err(WeightError::InvalidParameters("weights must be positive".into()));
    }
    Ok(edge_rule(wi, wj, alpha, beta))
}

/// The graph the edge rule induces on `weights`.
pub fn realize(alpha: &Rational, beta: &Rational, weights: &[Rational]) -> Result<Graph, WeightError> {
    let wa = WeightAssignment::new(alpha.clone(), beta.clone(), weights.to_vec())?;
    Ok(realize_assignment(&wa))
}

pub fn realize_assignment(wa: &WeightAssignment) -> Graph {
    Graph::from_fn(wa.len(), |i, j| edge_rule(&wa.weights[i], &wa.weights[j], &wa.alpha, &wa.beta))
}

/// `Ok(())` iff the assignment reproduces every pair of `g` exactly.
pub fn verify_dt(g: &Graph, wa: &WeightAssignment) -> Result<(), WeightError> {
    let n = g.vertex_count();
    if wa.len() != n {
        return Err(WeightError::LengthMismatch { expected: n, got: wa.len() });
    }
    for i in 0..n {
        for j in i + 1..n {
            let in_graph = g.has_edge(i, j);
            if edge_rule(&wa.weights[i], &wa.weights[j], &wa.alpha, &wa.beta) != in_graph {
                return Err(WeightError::Violation { i, j, in_graph });
            }
        }
    }
    Ok(())
}

/// Ordered layers `(C₀, …, C_m)`; `C_l` holds the vertices at distance exactly `l` from `C₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDecomposition {
    layers: Vec<VertexSet>,
}

impl DistanceDecomposition {
    /// Wraps precomputed layers. No validation beyond non-emptiness.
    pub fn from_layers(layers: Vec<VertexSet>) -> Self {
        assert!(!layers.is_empty(), "a decomposition has at least the core layer");
        DistanceDecomposition { layers }
    }

    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn core(&self) -> &VertexSet {
        &self.layers[0]
    }

    /// Index of the last layer.
    pub fn m(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn universe(&self) -> usize {
        self.layers[0].universe()
    }

    /// `C_l`, or the empty set past the last layer.
    pub fn layer(&self, l: usize) -> VertexSet {
        self.layers.get(l).cloned().unwrap_or_else(|| VertexSet::new(self.universe()))
    }

    /// Layer index per vertex; `usize::MAX` for vertices outside every layer.
    pub fn layer_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.universe()];
        for (l, layer) in self.layers.iter().enumerate() {
            for v in layer {
                out[v] = l;
            }
        }
        out
    }
}

pub fn decompose_from_c0(g: &Graph, c0: &VertexSet) -> Result<DistanceDecomposition, WeightError> {
    if c0.is_empty() {
        return Err(WeightError::EmptyCore);
    }
    let bfs = g
        .bfs_layers(c0)
        .map_err(|e| WeightError::InvalidParameters(alloc::format!("{e}")))?;
    if let Some(v) = bfs.unreached.first() {
        return Err(WeightError::Unreachable(v));
    }
    Ok(DistanceDecomposition { layers: bfs.layers })
}

/// `N(j)∩C_{l−1} ⊆ N(i)∩C_{l−1}` and `N(i)∩C_{l+1} ⊆ N(j)∩C_{l+1}`.
pub(crate) fn layer_relation(g: &Graph, below: &VertexSet, above: &VertexSet, i: usize, j: usize) -> bool {
    g.nbrs(j).intersection(below).is_subset(g.nbrs(i))
        && g.nbrs(i).intersection(above).is_subset(g.nbrs(j))
}

/// Checks (i) the vicinal preorder is total on `C₀`, (ii) every outer layer
/// is a clique and (iii) the layer preorder is total on every outer layer.
pub fn check_theorem_conditions(g: &Graph, d: &DistanceDecomposition) -> Result<(), ConditionFailure> {
    let core: Vec<usize> = d.core().to_vec();
    for (a, &i) in core.iter().enumerate() {
        for &j in &core[a + 1..] {
            if !g.nbrs(i).is_subset_except(j, g.nbrs(j)) && !g.nbrs(j).is_subset_except(i, g.nbrs(i)) {
                return Err(ConditionFailure::CoreNotTotal(i, j));
            }
        }
    }
    for l in 1..=d.m() {
        let layer = &d.layers[l];
        if let Some((i, j)) = g.non_adjacent_pair(layer) {
            return Err(ConditionFailure::LayerNotClique { layer: l, i, j });
        }
    }
    for l in 1..=d.m() {
        let below = &d.layers[l - 1];
        let above = d.layer(l + 1);
        let members = d.layers[l].to_vec();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !layer_relation(g, below, &above, i, j) && !layer_relation(g, below, &above, j, i) {
                    return Err(ConditionFailure::LayerNotTotal { layer: l, i, j });
                }
            }
        }
    }
    Ok(())
}

/// Per-vertex weights with `None` for vertices not yet assigned.
pub type PartialWeights = Vec<Option<Rational>>;

/// Core weights satisfying: the core is a threshold graph with threshold
/// exactly `α`, all core weights are distinct, and all lie strictly inside
/// `((α−β)/2, (α+β)/2)`.
pub fn assign_c0_weights(
    g: &Graph,
    c0: &VertexSet,
    alpha: &Rational,
    beta: &Rational,
) -> Result<PartialWeights, WeightError> {
    validate_parameters(alpha, beta)?;
    if c0.is_empty() {
        return Err(WeightError::EmptyCore);
    }
    let members = c0.to_vec();
    let inner: Vec<VertexSet> = members.iter().map(|&v| g.nbrs(v).intersection(c0)).collect();
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let (i, j) = (members[a], members[b]);
            if !inner[a].is_subset_except(j, &inner[b]) && !inner[b].is_subset_except(i, &inner[a]) {
                return Err(WeightError::NotThreshold(i, j));
            }
        }
    }

    // degree partition of the induced subgraph: class 0 is degree 0, then the
    // distinct positive degrees in increasing order
    let degree: Vec<usize> = inner.iter().map(VertexSet::len).collect();
    let mut positive: Vec<usize> = degree.iter().copied().filter(|&d| d > 0).collect();
    positive.sort_unstable();
    positive.dedup();
    let class_of = |d: usize| if d == 0 { 0 } else { positive.binary_search(&d).unwrap() + 1 };
    let classes = positive.len() + 1;
    let threshold = int(classes as i64);

    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (a, &d) in degree.iter().enumerate() {
        by_class[class_of(d)].push(a);
    }

    let two = int(2);
    let scale = beta / (&two * &threshold);
    let offset = (alpha - beta / &two) / &two;
    let mut out: PartialWeights = vec![None; g.vertex_count()];
    for (class, slots) in by_class.iter_mut().enumerate() {
        // ties inside a class follow the full-graph neighborhood order
        slots.sort_by_key(|&a| (g.degree(members[a]), members[a]));
        let size = slots.len() as i64;
        for (k, &a) in slots.iter().enumerate() {
            let bump = Rational::new((k as i64 + 1).into(), (2 * (size + 1)).into());
            let x = int(class as i64) + bump;
            out[members[a]] = Some(&scale * x + &offset);
        }
    }
    Ok(out)
}

/// Half the smaller of the two step-size bounds.
pub fn choose_epsilon(core_weights: &[Rational], alpha: &Rational, beta: &Rational, n: usize) -> Result<Rational, WeightError> {
    validate_parameters(alpha, beta)?;
    if core_weights.is_empty() {
        return Err(WeightError::EmptyCore);
    }
    let floor = (alpha - beta) / int(2);
    let slack = core_weights.iter().map(|w| w - &floor).min().unwrap();
    let n = n as i64;
    let slack_bound = Rational::new(n.into(), (n + 1).into()) * slack;
    if !slack_bound.is_positive() {
        return Err(WeightError::DegenerateWeights);
    }
    let mut sorted = core_weights.to_vec();
    sorted.sort();
    let gap = sorted.windows(2).map(|p| &p[1] - &p[0]).filter(|d| !d.is_zero()).min();
    let bound = match gap {
        Some(gap) if gap < slack_bound => gap,
        _ => slack_bound,
    };
    Ok(bound / int(2))
}

/// `(n+1)^e` as a rational.
fn power(base: usize, e: usize) -> Rational {
    let mut acc = Rational::one();
    let b = int(base as i64);
    for _ in 0..e {
        acc *= &b;
    }
    acc
}

/// Fills in every outer layer from the core weights.
pub fn assign_layer_weights(
    g: &Graph,
    d: &DistanceDecomposition,
    core: &PartialWeights,
    epsilon: &Rational,
    beta: &Rational,
) -> Result<Vec<Rational>, WeightError> {
    let n = g.vertex_count();
    let mut w: PartialWeights = core.clone();
    for v in d.core() {
        if w[v].is_none() {
            return Err(WeightError::PreconditionViolated { layer: 0, vertex: v });
        }
    }
    let n1 = int(n as i64 + 1);
    for l in 1..=d.m() {
        let below = &d.layers()[l - 1];
        let above = d.layer(l + 1);
        let step = epsilon / power(n + 1, l - 1);
        for i in &d.layers()[l] {
            let lower = g.nbrs(i).intersection(below);
            let min_below = lower
                .iter()
                .map(|k| w[k].clone().expect("lower layer assigned"))
                .min()
                .ok_or(WeightError::PreconditionViolated { layer: l, vertex: i })?;
            let up = int(g.nbrs(i).intersection_len(&above) as i64 + 1);
            let value = beta + min_below - &step * (Rational::one() - up / &n1);
            w[i] = Some(value);
        }
    }
    w.into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or(WeightError::Unreachable(v)))
        .collect()
}

/// Weights plus the step size used to build them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synthesis {
    pub assignment: WeightAssignment,
    pub epsilon: Rational,
}

pub fn synthesize(g: &Graph, d: &DistanceDecomposition, alpha: &Rational, beta: &Rational) -> Result<WeightAssignment, WeightError> {
    synthesize_detailed(g, d, alpha, beta).map(|s| s.assignment)
}

pub fn synthesize_detailed(
    g: &Graph,
    d: &DistanceDecomposition,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Synthesis, WeightError> {
    validate_parameters(alpha, beta)?;
    check_theorem_conditions(g, d).map_err(WeightError::ConditionsFailed)?;
    let core = assign_c0_weights(g, d.core(), alpha, beta)?;
    let core_values: Vec<Rational> = d.core().iter().map(|v| core[v].clone().unwrap()).collect();
    let epsilon = choose_epsilon(&core_values, alpha, beta, g.vertex_count())?;
    let weights = assign_layer_weights(g, d, &core, &epsilon, beta)?;
    let assignment = WeightAssignment::new(alpha.clone(), beta.clone(), weights)?;
    match verify_dt(g, &assignment) {
        Ok(()) => Ok(Synthesis { assignment, epsilon }),
        Err(WeightError::Violation { i, j, .. }) => Err(WeightError::SynthesisFailed(i, j)),
        Err(e) => Err(e),
    }
}

/// Per-layer window: `(α+(2l−1)β)/2 + ε/(n(n+1)^{l−1}) < w < (α+(2l+1)β)/2`.
/// Returns the first `(layer, vertex)` outside its window.
pub fn check_layer_bounds(d: &DistanceDecomposition, s: &Synthesis, n: usize) -> Result<(), (usize, usize)> {
    let wa = &s.assignment;
    let two = int(2);
    let nn = int(n as i64);
    for (l, layer) in d.layers().iter().enumerate() {
        let l_i = l as i64;
        // (n+1)^{l-1} with l = 0 read as 1/(n+1)
        let denom = if l == 0 { nn.clone() / int(n as i64 + 1) } else { &nn * power(n + 1, l - 1) };
        let low = (&wa.alpha + int(2 * l_i - 1) * &wa.beta) / &two + &s.epsilon / denom;
        let high = (&wa.alpha + int(2 * l_i + 1) * &wa.beta) / &two;
        for v in layer {
            let w = &wa.weights[v];
            if !(w > &low && w < &high) {
                return Err((l, v));
            }
        }
    }
    Ok(())
}

/// Distinct weights inside a layer differ by at least `ε/(n+1)^l`.
pub fn check_layer_gaps(d: &DistanceDecomposition, s: &Synthesis, n: usize) -> Result<(), (usize, usize, usize)> {
    for (l, layer) in d.layers().iter().enumerate() {
        let need = &s.epsilon / power(n + 1, l);
        let mut members: Vec<usize> = layer.to_vec();
        members.sort_by(|&a, &b| s.assignment.weights[a].cmp(&s.assignment.weights[b]));
        for pair in members.windows(2) {
            let gap = &s.assignment.weights[pair[1]] - &s.assignment.weights[pair[0]];
            if !gap.is_zero() && gap < need {
                return Err((l, pair[0], pair[1]));
            }
        }
    }
    Ok(())
}
