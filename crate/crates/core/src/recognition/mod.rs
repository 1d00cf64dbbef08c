//! Graph class tests and the doubly threshold recognition pipeline.
//!
//! [`recognize`] always returns a [`Certificate`]. Positive certificates
//! carry weights that reproduce the graph exactly; negative ones carry a
//! witness that [`Certificate::verify`] re-checks from scratch.

mod pmax;
mod preorder;
mod unit_interval;

use alloc::vec::Vec;

pub use pmax::{build_2sat, compute_w_set, is_p_admissible, p_max_partition, AdmissibilityFailure, PMaxPartition};
pub use preorder::{is_threshold, vicinal_preorder, VicinalPreorder};
pub use unit_interval::{is_unit_interval, unit_interval_obstruction, unit_interval_order, unit_interval_weights};

use crate::graph::Graph;
use crate::patterns::{check_semi_unit_interval, PatternKind, Witness};
use crate::rational::{int, Rational};
use crate::twosat::solve;
use crate::vertex_set::VertexSet;
use crate::weights::{
    check_theorem_conditions, decompose_from_c0, synthesize_detailed, validate_parameters, verify_dt, ConditionFailure,
    DistanceDecomposition, WeightAssignment, WeightError,
};

/// What happened when a candidate `p` was tried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attempt {
    /// The 2SAT instance for `p` has no solution.
    Unsatisfiable,
    /// The solver's partition failed the admissibility check.
    NotAdmissible(AdmissibilityFailure),
    /// The layers grown from `V_T` break one of the structural conditions.
    ConditionsFailed(ConditionFailure),
    /// Weight synthesis or final verification failed.
    SynthesisFailed(WeightError),
}

/// A successful candidate: `p`, its layers and weights for the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub p: usize,
    /// Layers over the full vertex set; vertices outside the main component
    /// belong to no layer.
    pub layers: DistanceDecomposition,
    /// Unit interval components and isolated vertices placed above the main component.
    pub detached: VertexSet,
    pub weights: WeightAssignment,
    pub epsilon: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    ChordlessCycle(Witness),
    InducedNet(Witness),
    InducedSun(Witness),
    /// Two or more components that are not unit interval, one claw each.
    DisjointNonUnitInterval(Vec<Witness>),
    /// Every candidate `p` of the main component failed, in ascending order.
    NoAdmissiblePartition(Vec<(usize, Attempt)>),
    Decomposition(Decomposition),
    UnitInterval(WeightAssignment),
}

impl Certificate {
    pub fn is_dt(&self) -> bool {
        matches!(self, Certificate::Decomposition(_) | Certificate::UnitInterval(_))
    }

    pub fn weights(&self) -> Option<&WeightAssignment> {
        match self {
            Certificate::Decomposition(d) => Some(&d.weights),
            Certificate::UnitInterval(w) => Some(w),
            _ => None,
        }
    }

    /// Short tag: `chordless_cycle`, `net`, `sun`, `disjoint_non_unit_interval`,
    /// `no_admissible_partition`, `decomposition` or `unit_interval`.
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ChordlessCycle(_) => "chordless_cycle",
            Certificate::InducedNet(_) => "net",
            Certificate::InducedSun(_) => "sun",
            Certificate::DisjointNonUnitInterval(_) => "disjoint_non_unit_interval",
            Certificate::NoAdmissiblePartition(_) => "no_admissible_partition",
            Certificate::Decomposition(_) => "decomposition",
            Certificate::UnitInterval(_) => "unit_interval",
        }
    }

    /// Re-checks the certificate against `g` without trusting how it was built.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::ChordlessCycle(w) => matches!(w.kind, PatternKind::Cycle(k) if k >= 4) && w.verify(g),
            Certificate::InducedNet(w) => w.kind == PatternKind::Net && w.verify(g),
            Certificate::InducedSun(w) => w.kind == PatternKind::Sun3 && w.verify(g),
            Certificate::DisjointNonUnitInterval(ws) => verify_disjoint(g, ws),
            Certificate::NoAdmissiblePartition(attempts) => verify_exhausted(g, attempts),
            Certificate::UnitInterval(wa) => verify_dt(g, wa).is_ok(),
            Certificate::Decomposition(d) => verify_decomposition(g, d),
        }
    }
}

fn verify_disjoint(g: &Graph, ws: &[Witness]) -> bool {
    if ws.len() < 2 || !ws.iter().all(|w| w.kind == PatternKind::K13 && w.verify(g)) {
        return false;
    }
    let comps = g.connected_components();
    let comp_of = |v: usize| comps.iter().position(|c| c.contains(v)).unwrap();
    let mut seen: Vec<usize> = ws.iter().map(|w| comp_of(w.map[0])).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == ws.len()
}

fn verify_exhausted(g: &Graph, attempts: &[(usize, Attempt)]) -> bool {
    if check_semi_unit_interval(g).is_err() || unit_interval_order(g).is_some() {
        return false;
    }
    let Ok(main) = main_component(g) else { return false };
    let (h, map) = g.induced(&main);
    if attempts.len() != h.vertex_count() || attempts.iter().zip(&map).any(|((p, _), &v)| *p != v) {
        return false;
    }
    attempts.iter().enumerate().all(|(local, (_, attempt))| match attempt {
        Attempt::Unsatisfiable => {
            let inst = build_2sat(&h, local, &VertexSet::new(h.vertex_count())).expect("local index in range");
            solve(&inst).is_none()
        }
        // anything else means a satisfiable candidate failed later: redo it
        _ => evaluate_candidate(&h, local, &int(2), &int(1)).is_err(),
    })
}

fn verify_decomposition(g: &Graph, d: &Decomposition) -> bool {
    if verify_dt(g, &d.weights).is_err() || d.layers.universe() != g.vertex_count() {
        return false;
    }
    let mut covered = d.detached.clone();
    for layer in d.layers.layers() {
        if !layer.is_disjoint(&covered) {
            return false;
        }
        covered.union_with(layer);
    }
    if covered.len() != g.vertex_count() || !d.layers.core().contains(d.p) {
        return false;
    }
    let main = covered.difference(&d.detached);
    let (h, map) = g.induced(&main);
    let local = |s: &VertexSet| VertexSet::from_iter_in(h.vertex_count(), map.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(k, _)| k));
    match decompose_from_c0(&h, &local(d.layers.core())) {
        Ok(redo) => {
            redo.layers().len() == d.layers.layers().len()
                && redo.layers().iter().zip(d.layers.layers()).all(|(a, b)| *a == local(b))
                && check_theorem_conditions(&h, &redo).is_ok()
        }
        Err(_) => false,
    }
}

/// Options for [`recognize_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizeOptions {
    pub alpha: Rational,
    pub beta: Rational,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        let (alpha, beta) = WeightAssignment::default_parameters();
        RecognizeOptions { alpha, beta }
    }
}

/// Successful candidate on the main component, in local labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Found {
    pub layers: DistanceDecomposition,
    pub weights: WeightAssignment,
    pub epsilon: Rational,
}

pub type CandidateOutcome = Result<Found, Attempt>;

/// Strategy for walking the candidates of step 3.
///
/// Implementations must return the outcome of every candidate up to and
/// including the first success in `0..count`, in ascending order, or all of
/// them when none succeeds. Candidates past the first success may be omitted.
pub trait CandidateSearch {
    fn run(&self, count: usize, eval: &(dyn Fn(usize) -> CandidateOutcome + Sync)) -> Vec<CandidateOutcome>;
}

/// One candidate at a time, stopping at the first success.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl CandidateSearch for Sequential {
    fn run(&self, count: usize, eval: &(dyn Fn(usize) -> CandidateOutcome + Sync)) -> Vec<CandidateOutcome> {
        let mut out = Vec::new();
        for p in 0..count {
            let outcome = eval(p);
            let done = outcome.is_ok();
            out.push(outcome);
            if done {
                break;
            }
        }
        out
    }
}

/// Runs the full pipeline at `(α, β) = (2, 1)`, one candidate at a time.
pub fn recognize(g: &Graph) -> Certificate {
    recognize_with(g, &RecognizeOptions::default(), &Sequential).expect("default parameters are valid")
}

/// Tries `p` on a connected, semi unit interval graph `h`.
pub fn evaluate_candidate(h: &Graph, p: usize, alpha: &Rational, beta: &Rational) -> CandidateOutcome {
    let part = p_max_partition(h, p).expect("candidate in range").ok_or(Attempt::Unsatisfiable)?;
    is_p_admissible(h, &part).map_err(Attempt::NotAdmissible)?;
    let layers = decompose_from_c0(h, &part.v_t).map_err(Attempt::SynthesisFailed)?;
    check_theorem_conditions(h, &layers).map_err(Attempt::ConditionsFailed)?;
    let s = synthesize_detailed(h, &layers, alpha, beta).map_err(Attempt::SynthesisFailed)?;
    Ok(Found { layers, weights: s.assignment, epsilon: s.epsilon })
}

/// The single non-trivial component that is not unit interval, or the claw
/// witnesses of every such component when there are several.
fn main_component(g: &Graph) -> Result<VertexSet, Vec<Witness>> {
    let mut candidates = Vec::new();
    let mut claws = Vec::new();
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let (h, map) = g.induced(&comp);
        if let Some(w) = unit_interval_obstruction_if_any(&h) {
            claws.push(Witness { kind: w.kind, map: w.map.iter().map(|&v| map[v]).collect() });
            candidates.push(comp);
        }
    }
    if candidates.len() == 1 {
        Ok(candidates.pop().unwrap())
    } else {
        Err(claws)
    }
}

fn unit_interval_obstruction_if_any(h: &Graph) -> Option<Witness> {
    if unit_interval_order(h).is_some() {
        None
    } else {
        Some(unit_interval_obstruction(h).expect("non unit interval graphs have an obstruction"))
    }
}

/// The full pipeline with explicit parameters and candidate strategy.
///
/// 1. reject chordless cycles, nets and 3-suns;
/// 2. accept unit interval graphs outright;
/// 3. on the one component that is not unit interval, try every `p` until
///    the 2SAT split yields layers meeting the structural conditions, then
///    place the remaining components above it.
pub fn recognize_with(g: &Graph, opts: &RecognizeOptions, search: &dyn CandidateSearch) -> Result<Certificate, WeightError> {
    validate_parameters(&opts.alpha, &opts.beta)?;
    if let Err(w) = check_semi_unit_interval(g) {
        return Ok(match w.kind {
            PatternKind::Net => Certificate::InducedNet(w),
            PatternKind::Sun3 => Certificate::InducedSun(w),
            _ => Certificate::ChordlessCycle(w),
        });
    }
    if let Ok(wa) = unit_interval_weights(g, &opts.alpha, &opts.beta) {
        return Ok(Certificate::UnitInterval(wa));
    }
    let main = match main_component(g) {
        Ok(main) => main,
        Err(claws) => return Ok(Certificate::DisjointNonUnitInterval(claws)),
    };
    let (h, map) = g.induced(&main);
    let eval = |p: usize| -> CandidateOutcome {
        let found = evaluate_candidate(&h, p, &opts.alpha, &opts.beta)?;
        // the assembled weights are checked on the whole graph
        assemble(g, &main, &map, p, &found, opts).map(|_| found).map_err(Attempt::SynthesisFailed)
    };
    let outcomes = search.run(h.vertex_count(), &eval);
    let mut attempts = Vec::with_capacity(outcomes.len());
    for (local, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(found) => return Ok(Certificate::Decomposition(assemble(g, &main, &map, local, &found, opts)?)),
            Err(a) => attempts.push((map[local], a)),
        }
    }
    Ok(Certificate::NoAdmissiblePartition(attempts))
}

/// Lifts a local solution to the whole graph. Everything outside the main
/// component is unit interval and goes `2β` above the largest main weight.
fn assemble(
    g: &Graph,
    main: &VertexSet,
    map: &[usize],
    p: usize,
    found: &Found,
    opts: &RecognizeOptions,
) -> Result<Decomposition, WeightError> {
    let n = g.vertex_count();
    let mut weights = alloc::vec![int(0); n];
    for (local, &v) in map.iter().enumerate() {
        weights[v] = found.weights.weights[local].clone();
    }
    let detached = main.complement();
    if !detached.is_empty() {
        let (rest, rest_map) = g.induced(&detached);
        let ui = unit_interval_weights(&rest, &opts.alpha, &opts.beta).expect("components outside the main one are unit interval");
        let top = found.weights.weights.iter().max().expect("main component is non-empty");
        let shift = top + int(2) * &opts.beta - &opts.alpha / int(2);
        for (local, &v) in rest_map.iter().enumerate() {
            weights[v] = &ui.weights[local] + &shift;
        }
    }
    let weights = WeightAssignment::new(opts.alpha.clone(), opts.beta.clone(), weights)?;
    verify_dt(g, &weights)?;
    let layers = found
        .layers
        .layers()
        .iter()
        .map(|layer| VertexSet::from_iter_in(n, layer.iter().map(|v| map[v])))
        .collect();
    Ok(Decomposition {
        p: map[p],
        layers: DistanceDecomposition::from_layers(layers),
        detached,
        weights,
        epsilon: found.epsilon.clone(),
    })
}
