//! Graph families for fixtures and randomized tests.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`, so a seed
//! names the same graph on every platform.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::graph::Graph;
use crate::patterns::{Pattern, PatternKind};
use crate::rational::{from_f64, int, Rational};
use crate::weights::{realize, realize_assignment, WeightAssignment, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("creation sequence is empty")]
    EmptySequence,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown fixture {0:?}")]
    UnknownName(String),
}

impl From<WeightError> for GenError {
    fn from(e: WeightError) -> Self {
        GenError::InvalidParameters(format!("{e}"))
    }
}

/// Smallest weight a sample may take.
pub const WEIGHT_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionKind {
    Uniform { lo: f64, hi: f64 },
    /// Samples below [`WEIGHT_FLOOR`] are raised to it.
    Gaussian { mean: f64, sd: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightDistribution {
    pub kind: DistributionKind,
    pub seed: u64,
}

impl WeightDistribution {
    pub fn uniform(lo: f64, hi: f64, seed: u64) -> Self {
        WeightDistribution { kind: DistributionKind::Uniform { lo, hi }, seed }
    }

    pub fn gaussian(mean: f64, sd: f64, seed: u64) -> Self {
        WeightDistribution { kind: DistributionKind::Gaussian { mean, sd }, seed }
    }

    fn validate(&self) -> Result<(), GenError> {
        let finite = |x: f64| x.is_finite();
        match self.kind {
            DistributionKind::Uniform { lo, hi } if !(finite(lo) && finite(hi) && lo < hi && hi > 0.0) => {
                Err(GenError::InvalidParameters("uniform needs finite lo < hi with hi > 0".into()))
            }
            DistributionKind::Gaussian { mean, sd } if !(finite(mean) && finite(sd) && sd > 0.0) => {
                Err(GenError::InvalidParameters("gaussian needs a finite mean and sd > 0".into()))
            }
            _ => Ok(()),
        }
    }

    /// `n` positive samples, each converted exactly to a rational.
    pub fn sample(&self, n: usize) -> Result<Vec<Rational>, GenError> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let raw: Vec<f64> = match self.kind {
            DistributionKind::Uniform { lo, hi } => (0..n).map(|_| rng.random_range(lo..hi)).collect(),
            DistributionKind::Gaussian { mean, sd } => {
                let normal = Normal::new(mean, sd).map_err(|e| GenError::InvalidParameters(format!("{e}")))?;
                (0..n).map(|_| normal.sample(&mut rng)).collect()
            }
        };
        Ok(raw.into_iter().map(|x| from_f64(x.max(WEIGHT_FLOOR))).collect())
    }
}

/// Bit `k` set adds vertex `k` adjacent to every earlier vertex; clear adds it
/// isolated. The first bit is ignored.
pub fn gen_threshold(creation: &[bool]) -> Result<Graph, GenError> {
    if creation.is_empty() {
        return Err(GenError::EmptySequence);
    }
    Ok(Graph::from_fn(creation.len(), |i, j| creation[i.max(j)]))
}

/// `ij ∈ E ⟺ |w(i) − w(j)| ≤ β`.
pub fn gen_unit_interval(weights: &[Rational], beta: &Rational) -> Result<Graph, GenError> {
    let zero = int(0);
    if beta <= &zero {
        return Err(GenError::InvalidParameters("beta must be positive".into()));
    }
    if weights.iter().any(|w| w <= &zero) {
        return Err(GenError::InvalidParameters("weights must be positive".into()));
    }
    Ok(Graph::from_fn(weights.len(), |i, j| {
        let d = &weights[i] - &weights[j];
        d <= *beta && -d <= *beta
    }))
}

pub fn gen_dt(alpha: &Rational, beta: &Rational, weights: &[Rational]) -> Result<Graph, GenError> {
    Ok(realize(alpha, beta, weights)?)
}

pub fn gen_random_dt(n: usize, alpha: &Rational, beta: &Rational, dist: &WeightDistribution) -> Result<(Graph, WeightAssignment), GenError> {
    if n == 0 {
        return Err(GenError::InvalidParameters("n must be at least 1".into()));
    }
    let wa = WeightAssignment::new(alpha.clone(), beta.clone(), dist.sample(n)?)?;
    Ok((realize_assignment(&wa), wa))
}

pub const FIXTURE_NAMES: [&str; 8] = ["2K2", "C4", "P4", "K13", "bull", "net", "sun3", "fig2-shape"];

/// Weights at `α = 10`, `β = 2` for the seven-vertex example shape. Vertices
/// 0, 1 and 2 carry weights 7, 5 and 4.
pub fn fig2_weights() -> Vec<Rational> {
    [7, 5, 4, 6, 8, 9, 3].iter().map(|&w| int(w)).collect()
}

pub fn named_fixture(name: &str) -> Result<Graph, GenError> {
    if name == "fig2-shape" {
        return Ok(realize(&int(10), &int(2), &fig2_weights())?);
    }
    match PatternKind::from_name(name) {
        Some(kind) if PatternKind::NAMED.contains(&kind) => Ok(Pattern::new(kind).graph),
        _ => Err(GenError::UnknownName(name.into())),
    }
}

pub fn random_bits(n: usize, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random_bool(0.5)).collect()
}

/// Unit interval graph on `n` vertices: uniform positions in `(0, n/3)` at `β = 1`.
pub fn random_unit_interval(n: usize, seed: u64) -> Graph {
    let hi = (n as f64 / 3.0).max(1.0);
    let weights = WeightDistribution::uniform(WEIGHT_FLOOR, hi, seed).sample(n).expect("valid range");
    gen_unit_interval(&weights, &int(1)).expect("positive weights")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("indices in range")
}

/// Connected graph: a random spanning tree plus each other pair with a
/// density drawn per graph from `[0.1, 0.7)`.
pub fn random_connected(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.random_range(0.1..0.7);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("indices in range")
}

/// Flips every pair independently with probability `p`.
pub fn flip_edges(g: &Graph, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) != rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("indices in range")
}
