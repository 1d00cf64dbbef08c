//! JSON documents written and read by the command-line tool.
//!
//! Rationals are always `"p/q"` strings so nothing is lost to floating point.

use dtgraph_core::metrics::EdgeCliqueCover;
use dtgraph_core::patterns::Witness;
use dtgraph_core::rational::{parse, to_ratio_string};
use dtgraph_core::recognition::{AdmissibilityFailure, Attempt, Certificate};
use dtgraph_core::weights::WeightAssignment;
use dtgraph_core::{Rational, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("{0}")]
    Weights(String),
}

fn rational(text: &str) -> Result<Rational, FormatError> {
    parse(text).map_err(|_| FormatError::Rational(text.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsJson {
    pub alpha: String,
    pub beta: String,
    pub weights: Vec<String>,
}

impl WeightsJson {
    pub fn from_assignment(wa: &WeightAssignment) -> Self {
        WeightsJson {
            alpha: to_ratio_string(&wa.alpha),
            beta: to_ratio_string(&wa.beta),
            weights: wa.weights.iter().map(to_ratio_string).collect(),
        }
    }

    /// Parses every field and checks `α ≥ β > 0` and positive weights.
    pub fn to_assignment(&self) -> Result<WeightAssignment, FormatError> {
        let weights = self.weights.iter().map(|w| rational(w)).collect::<Result<Vec<_>, _>>()?;
        WeightAssignment::new(rational(&self.alpha)?, rational(&self.beta)?, weights)
            .map_err(|e| FormatError::Weights(e.to_string()))
    }

    pub fn parse(text: &str) -> Result<WeightAssignment, FormatError> {
        serde_json::from_str::<WeightsJson>(text)?.to_assignment()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub pattern: String,
    /// `vertices[k]` plays pattern vertex `k`.
    pub vertices: Vec<usize>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson { pattern: w.kind.name(), vertices: w.map.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttemptJson {
    pub p: usize,
    pub reason: &'static str,
    /// Number of the violated condition, when the reason has one.
    pub condition: Option<u8>,
    pub detail: String,
}

fn admissibility_detail(f: &AdmissibilityFailure) -> String {
    match f {
        AdmissibilityFailure::NotAPartition => "the sides do not partition the vertex set".into(),
        AdmissibilityFailure::Incomparable(i, j) => format!("{i} and {j} are incomparable in the threshold side"),
        AdmissibilityFailure::NotMaximal(v) => format!("{v} is not below p"),
        AdmissibilityFailure::NeighborhoodNotClique { vertex, pair } => {
            format!("neighbors {} and {} of {vertex} in the other side are non-adjacent", pair.0, pair.1)
        }
        AdmissibilityFailure::ForbiddenBull(w) => format!("forbidden bull on {:?}", w.map),
        AdmissibilityFailure::ForbiddenClaw(w) => format!("forbidden claw on {:?}", w.map),
    }
}

impl AttemptJson {
    fn new(p: usize, a: &Attempt) -> Self {
        let (reason, condition, detail) = match a {
            Attempt::Unsatisfiable => ("unsatisfiable", None, "the 2SAT instance has no solution".into()),
            Attempt::NotAdmissible(f) => ("not_admissible", Some(f.condition()), admissibility_detail(f)),
            Attempt::ConditionsFailed(c) => ("conditions_failed", Some(c.condition()), c.to_string()),
            Attempt::SynthesisFailed(e) => ("synthesis_failed", None, e.to_string()),
        };
        AttemptJson { p, reason, condition, detail }
    }
}

/// Tagged by `kind`, with the same tags as [`Certificate::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateJson {
    ChordlessCycle { witness: WitnessJson },
    Net { witness: WitnessJson },
    Sun { witness: WitnessJson },
    DisjointNonUnitInterval { witnesses: Vec<WitnessJson> },
    NoAdmissiblePartition { attempts: Vec<AttemptJson> },
    Decomposition { p: usize, layers: Vec<Vec<usize>>, detached: Vec<usize>, epsilon: String, weights: WeightsJson },
    UnitInterval { weights: WeightsJson },
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::ChordlessCycle(w) => CertificateJson::ChordlessCycle { witness: w.into() },
            Certificate::InducedNet(w) => CertificateJson::Net { witness: w.into() },
            Certificate::InducedSun(w) => CertificateJson::Sun { witness: w.into() },
            Certificate::DisjointNonUnitInterval(ws) => {
                CertificateJson::DisjointNonUnitInterval { witnesses: ws.iter().map(Into::into).collect() }
            }
            Certificate::NoAdmissiblePartition(att) => CertificateJson::NoAdmissiblePartition {
                attempts: att.iter().map(|(p, a)| AttemptJson::new(*p, a)).collect(),
            },
            Certificate::Decomposition(d) => CertificateJson::Decomposition {
                p: d.p,
                layers: d.layers.layers().iter().map(VertexSet::to_vec).collect(),
                detached: d.detached.to_vec(),
                epsilon: to_ratio_string(&d.epsilon),
                weights: WeightsJson::from_assignment(&d.weights),
            },
            Certificate::UnitInterval(wa) => CertificateJson::UnitInterval { weights: WeightsJson::from_assignment(wa) },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "dt")]
    Dt,
    #[serde(rename = "not-dt")]
    NotDt,
    #[serde(rename = "unsupported")]
    Unsupported,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Dt => 0,
            Verdict::NotDt => 1,
            Verdict::Unsupported => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Dt => "dt",
            Verdict::NotDt => "not-dt",
            Verdict::Unsupported => "unsupported",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationJson {
    /// The certificate re-checked against the input graph.
    pub certificate: bool,
    /// `"agree"`, or `"skipped"` above the exhaustive size cap.
    pub oracle: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingJson {
    pub parse_ms: f64,
    pub recognize_ms: f64,
    pub verify_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    pub vertices: usize,
    pub edges: usize,
    /// Absent only for `unsupported`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
    /// Wall-clock figures, only with `--timing` so that default output is reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<TimingJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsJson {
    pub intersection_number: usize,
    pub cover: Vec<Vec<usize>>,
    /// `null` for a disconnected or empty graph.
    pub diameter: Option<usize>,
    /// Layer count of the decomposition behind the weights, when one exists.
    pub m: Option<usize>,
    /// `diameter − m`, defined for connected graphs with `m ≥ 1`.
    pub lambda: Option<usize>,
    /// `null` when the graph has no path of length two.
    pub clustering: Option<String>,
    /// The same value truncated to six decimal places.
    pub clustering_decimal: Option<String>,
    pub weights: WeightsJson,
}

pub fn cover_lists(cover: &EdgeCliqueCover) -> Vec<Vec<usize>> {
    cover.cliques.iter().map(VertexSet::to_vec).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinLayersJson {
    pub max_m: usize,
    /// Smallest admissible layer count, `null` when none is at most `max_m`.
    pub m: Option<usize>,
    pub p: Option<usize>,
    pub threshold_side: Option<Vec<usize>>,
}
