//! Argument parsing and the four subcommands.
//!
//! Exit codes: 0 success (or `dt`), 1 `not-dt` (or no layer count found),
//! 2 errors and unsupported inputs.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dtgraph_core::edge_list::{read_edge_list, write_edge_list};
use dtgraph_core::generators::{
    gen_dt, gen_random_dt, gen_threshold, gen_unit_interval, gnp, named_fixture, random_bits, random_connected, random_unit_interval,
    GenError, WeightDistribution, FIXTURE_NAMES,
};
use dtgraph_core::metrics::{
    clustering_coefficient, decomposition_from_weights, diameter, dt_ordering, intersection_number, min_layer_count,
};
use dtgraph_core::oracles::{brute_force_is_dt, DT_CAP};
use dtgraph_core::rational::{parse, to_decimal_string, to_ratio_string};
use dtgraph_core::recognition::{recognize_with, CandidateSearch, Certificate, RecognizeOptions, Sequential};
use dtgraph_core::weights::{check_theorem_conditions, verify_dt, DistanceDecomposition, WeightAssignment};
use dtgraph_core::{Graph, Rational};

use crate::format::{
    cover_lists, CertificateJson, MetricsJson, MinLayersJson, RecognitionReport, TimingJson, Verdict, VerificationJson,
    WeightsJson,
};
use crate::search::Threaded;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Generate(#[from] GenError),
    #[error("weights do not realize the graph: {0}")]
    NotRealizing(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Usage(String),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    parse(s).map_err(|_| format!("not a rational number: {s:?}"))
}

/// Comma-separated rationals such as `5,7,4` or `1/2,3.25`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalList(pub Vec<Rational>);

fn parse_rational_list(s: &str) -> Result<RationalList, String> {
    s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_, _>>().map(RationalList)
}

#[derive(Debug, Parser)]
#[command(name = "dtgraphs", version, about = "Doubly threshold graphs: recognition, metrics and generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether an edge list is a DT graph and print a certificate.
    Recognize(RecognizeArgs),
    /// Intersection number, diameter and clustering of a DT graph.
    Metrics(MetricsArgs),
    /// Write a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Smallest number of layers a decomposition can have.
    Minlayers(MinLayersArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OutputMode {
    /// Machine-readable output (the default).
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable summary.
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Parameters {
    #[arg(long, default_value = "2", value_parser = parse_rational)]
    pub alpha: Rational,
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    pub beta: Rational,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    /// Edge list file, or `-` for standard input.
    pub input: PathBuf,
    #[command(flatten)]
    pub params: Parameters,
    #[command(flatten)]
    pub output: OutputMode,
    /// Re-check the certificate and compare with the exhaustive oracle (up to 12 vertices).
    #[arg(long)]
    pub verify: bool,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timing: bool,
    /// Try candidates on several threads; DTGRAPHS_THREADS caps the count.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    pub input: PathBuf,
    /// Weights JSON that must realize the graph.
    #[arg(long, conflicts_with = "auto", required_unless_present = "auto")]
    pub weights: Option<PathBuf>,
    /// Synthesize weights by recognition.
    #[arg(long)]
    pub auto: bool,
    #[command(flatten)]
    pub params: Parameters,
    #[command(flatten)]
    pub output: OutputMode,
}

#[derive(Debug, Args)]
pub struct MinLayersArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub max_m: usize,
    #[command(flatten)]
    pub output: OutputMode,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Edge list destination; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Weights JSON destination for `dt`; defaults to `<out>.weights.json` when `--out` is given.
    #[arg(long, global = true)]
    pub weights_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Dist {
    Uniform,
    Gaussian,
}

#[derive(Debug, Clone, Args)]
pub struct DistArgs {
    #[arg(long, value_enum, default_value = "uniform")]
    pub dist: Dist,
    #[arg(long, default_value_t = 0.2)]
    pub lo: f64,
    #[arg(long, default_value_t = 4.0)]
    pub hi: f64,
    #[arg(long, default_value_t = 1.5)]
    pub mean: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sd: f64,
}

impl DistArgs {
    pub fn distribution(&self, seed: u64) -> WeightDistribution {
        match self.dist {
            Dist::Uniform => WeightDistribution::uniform(self.lo, self.hi, seed),
            Dist::Gaussian => WeightDistribution::gaussian(self.mean, self.sd, seed),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Creation sequence: `1` adds a dominating vertex, `0` an isolated one.
    Threshold {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        bits: Option<String>,
        /// Random sequence of this length.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Adjacent iff weights differ by at most β.
    UnitInterval {
        #[arg(long, value_parser = parse_rational_list, conflicts_with = "n", required_unless_present = "n")]
        weights: Option<RationalList>,
        #[arg(long, default_value = "1", value_parser = parse_rational)]
        beta: Rational,
        /// Random positions for this many vertices (β = 1).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Doubly threshold graph from explicit or sampled weights.
    Dt {
        #[command(flatten)]
        params: Parameters,
        #[arg(long, value_parser = parse_rational_list, conflicts_with = "n", required_unless_present = "n")]
        weights: Option<RationalList>,
        /// Sample this many weights instead.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        dist: DistArgs,
    },
    /// A fixed pattern graph.
    Named {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_NAMES))]
        name: String,
    },
    /// Random spanning tree plus random extra edges.
    Connected {
        #[arg(long)]
        n: usize,
    },
    /// Each pair independently with probability `p`.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
}

/// What a command produced: text for standard output and an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let shown = path.display().to_string();
    if shown == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: shown, source })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|source| CliError::Io { path: shown, source })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_input(path)?;
    read_edge_list(&text).map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn set_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Recognize(a) => cmd_recognize(&a),
        Command::Metrics(a) => cmd_metrics(&a),
        Command::Generate(a) => cmd_generate(&a),
        Command::Minlayers(a) => cmd_minlayers(&a),
    }
}

pub fn recognition_report(g: &Graph, opts: &RecognizeOptions, search: &dyn CandidateSearch) -> (RecognitionReport, Option<Certificate>) {
    let (vertices, edges) = (g.vertex_count(), g.edge_count());
    match recognize_with(g, opts, search) {
        Ok(cert) => {
            let verdict = if cert.is_dt() { Verdict::Dt } else { Verdict::NotDt };
            let report = RecognitionReport {
                verdict,
                vertices,
                edges,
                certificate: Some(CertificateJson::from(&cert)),
                error: None,
                verification: None,
                timing: None,
            };
            (report, Some(cert))
        }
        Err(e) => {
            let report = RecognitionReport {
                verdict: Verdict::Unsupported,
                vertices,
                edges,
                certificate: None,
                error: Some(e.to_string()),
                verification: None,
                timing: None,
            };
            (report, None)
        }
    }
}

fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<VerificationJson, CliError> {
    if !cert.verify(g) {
        return Err(CliError::Verification(format!("the {} certificate does not check out", cert.kind())));
    }
    if g.vertex_count() > DT_CAP {
        return Ok(VerificationJson { certificate: true, oracle: "skipped" });
    }
    let brute = brute_force_is_dt(g).map_err(|e| CliError::Verification(e.to_string()))?;
    if brute != cert.is_dt() {
        return Err(CliError::Verification(format!(
            "recognition says {}, exhaustive search says {}",
            if cert.is_dt() { "dt" } else { "not-dt" },
            if brute { "dt" } else { "not-dt" }
        )));
    }
    Ok(VerificationJson { certificate: true, oracle: "agree" })
}

fn render_certificate_text(out: &mut String, cert: &CertificateJson) {
    match cert {
        CertificateJson::ChordlessCycle { witness } | CertificateJson::Net { witness } | CertificateJson::Sun { witness } => {
            let _ = writeln!(out, "certificate: induced {} on {:?}", witness.pattern, witness.vertices);
        }
        CertificateJson::DisjointNonUnitInterval { witnesses } => {
            let _ = writeln!(out, "certificate: {} components that are not unit interval", witnesses.len());
            for w in witnesses {
                let _ = writeln!(out, "  {} on {:?}", w.pattern, w.vertices);
            }
        }
        CertificateJson::NoAdmissiblePartition { attempts } => {
            let _ = writeln!(out, "certificate: no admissible partition");
            for a in attempts {
                let _ = writeln!(out, "  p = {}: {} ({})", a.p, a.reason, a.detail);
            }
        }
        CertificateJson::Decomposition { p, layers, detached, epsilon, weights } => {
            let _ = writeln!(out, "certificate: decomposition with p = {p}, m = {}", layers.len().saturating_sub(1));
            for (l, layer) in layers.iter().enumerate() {
                let _ = writeln!(out, "  C{l} = {}", set_list(layer));
            }
            if !detached.is_empty() {
                let _ = writeln!(out, "  detached = {}", set_list(detached));
            }
            let _ = writeln!(out, "epsilon: {epsilon}");
            render_weights_text(out, weights);
        }
        CertificateJson::UnitInterval { weights } => {
            let _ = writeln!(out, "certificate: unit interval");
            render_weights_text(out, weights);
        }
    }
}

fn render_weights_text(out: &mut String, w: &WeightsJson) {
    let _ = writeln!(out, "alpha: {}  beta: {}", w.alpha, w.beta);
    for (v, x) in w.weights.iter().enumerate() {
        let _ = writeln!(out, "  w({v}) = {x}");
    }
}

pub fn cmd_recognize(a: &RecognizeArgs) -> Result<Output, CliError> {
    let t0 = Instant::now();
    let g = load_graph(&a.input)?;
    let parse_ms = millis(t0);
    let opts = RecognizeOptions { alpha: a.params.alpha.clone(), beta: a.params.beta.clone() };
    let t1 = Instant::now();
    let (mut report, cert) = if a.parallel {
        recognition_report(&g, &opts, &Threaded::from_env())
    } else {
        recognition_report(&g, &opts, &Sequential)
    };
    let recognize_ms = millis(t1);
    let mut verify_ms = None;
    if a.verify {
        if let Some(cert) = &cert {
            let t2 = Instant::now();
            report.verification = Some(verify_certificate(&g, cert)?);
            verify_ms = Some(millis(t2));
        }
    }
    if a.timing {
        report.timing = Some(TimingJson { parse_ms, recognize_ms, verify_ms });
    }
    let stdout = if a.output.text {
        let mut s = String::new();
        let _ = writeln!(s, "verdict: {}", report.verdict.as_str());
        let _ = writeln!(s, "vertices: {}  edges: {}", report.vertices, report.edges);
        if let Some(e) = &report.error {
            let _ = writeln!(s, "error: {e}");
        }
        if let Some(c) = &report.certificate {
            render_certificate_text(&mut s, c);
        }
        if let Some(v) = &report.verification {
            let _ = writeln!(s, "verification: certificate ok, oracle {}", v.oracle);
        }
        if let Some(t) = &report.timing {
            let _ = writeln!(s, "time: parse {:.3} ms, recognize {:.3} ms", t.parse_ms, t.recognize_ms);
        }
        s
    } else {
        json_line(&report)
    };
    Ok(Output { stdout, code: report.verdict.exit_code() })
}

/// Layers behind a weight assignment, when its core band gives a valid decomposition.
fn layers_from_weights(g: &Graph, wa: &WeightAssignment) -> Option<DistanceDecomposition> {
    decomposition_from_weights(g, wa).filter(|d| check_theorem_conditions(g, d).is_ok())
}

pub fn metrics_of(g: &Graph, wa: &WeightAssignment, layers: Option<&DistanceDecomposition>) -> Result<MetricsJson, CliError> {
    let ord = dt_ordering(g, wa).map_err(|e| CliError::NotRealizing(e.to_string()))?;
    let (k, cover) = intersection_number(&ord);
    let diam = diameter(g).ok();
    let m = layers.map(DistanceDecomposition::m);
    let lambda = match (m, diam) {
        (Some(m), Some(d)) if m >= 1 => d.checked_sub(m),
        _ => None,
    };
    let clustering = clustering_coefficient(g, &ord).ok();
    Ok(MetricsJson {
        intersection_number: k,
        cover: cover_lists(&cover),
        diameter: diam,
        m,
        lambda,
        clustering: clustering.as_ref().map(to_ratio_string),
        clustering_decimal: clustering.as_ref().map(|c| to_decimal_string(c, 6)),
        weights: WeightsJson::from_assignment(wa),
    })
}

fn opt_text<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "undefined".into(), T::to_string)
}

pub fn cmd_metrics(a: &MetricsArgs) -> Result<Output, CliError> {
    let g = load_graph(&a.input)?;
    let (wa, layers) = match &a.weights {
        Some(path) => {
            let text = read_input(path)?;
            let wa = WeightsJson::parse(&text)
                .map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })?;
            verify_dt(&g, &wa).map_err(|e| CliError::NotRealizing(e.to_string()))?;
            let layers = layers_from_weights(&g, &wa);
            (wa, layers)
        }
        None => {
            let opts = RecognizeOptions { alpha: a.params.alpha.clone(), beta: a.params.beta.clone() };
            let (report, cert) = recognition_report(&g, &opts, &Sequential);
            match cert {
                Some(Certificate::Decomposition(d)) => (d.weights, Some(d.layers)),
                Some(Certificate::UnitInterval(wa)) => {
                    let layers = layers_from_weights(&g, &wa);
                    (wa, layers)
                }
                Some(_) => {
                    eprintln!("not a DT graph");
                    return Ok(Output { stdout: json_line(&report), code: 1 });
                }
                None => return Err(CliError::Usage(report.error.unwrap_or_default())),
            }
        }
    };
    let metrics = metrics_of(&g, &wa, layers.as_ref())?;
    let stdout = if a.output.text {
        let mut s = String::new();
        let _ = writeln!(s, "intersection number: {}", metrics.intersection_number);
        for c in &metrics.cover {
            let _ = writeln!(s, "  {}", set_list(c));
        }
        let _ = writeln!(s, "diameter: {}", opt_text(&metrics.diameter));
        let _ = writeln!(s, "m: {}  lambda: {}", opt_text(&metrics.m), opt_text(&metrics.lambda));
        let _ = match (&metrics.clustering, &metrics.clustering_decimal) {
            (Some(c), Some(d)) => writeln!(s, "clustering: {c} ({d})"),
            _ => writeln!(s, "clustering: undefined"),
        };
        s
    } else {
        json_line(&metrics)
    };
    Ok(Output { stdout, code: 0 })
}

pub fn cmd_minlayers(a: &MinLayersArgs) -> Result<Output, CliError> {
    let g = load_graph(&a.input)?;
    let found = min_layer_count(&g, a.max_m);
    let report = MinLayersJson {
        max_m: a.max_m,
        m: found.as_ref().map(|f| f.0),
        p: found.as_ref().map(|f| f.1),
        threshold_side: found.as_ref().map(|f| f.2.v_t.to_vec()),
    };
    let stdout = if a.output.text {
        match (&report.m, &report.p) {
            (Some(m), Some(p)) => format!("m = {m} (p = {p})\n"),
            _ => format!("none <= {}\n", a.max_m),
        }
    } else {
        json_line(&report)
    };
    Ok(Output { stdout, code: if found.is_some() { 0 } else { 1 } })
}

pub fn cmd_generate(a: &GenerateArgs) -> Result<Output, CliError> {
    let mut weights: Option<WeightAssignment> = None;
    let g = match &a.family {
        Family::Threshold { bits, n } => {
            let seq: Vec<bool> = match (bits, n) {
                (Some(b), _) => b
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(GenError::InvalidParameters(format!("bits must be 0 or 1, got {c:?}"))),
                    })
                    .collect::<Result<_, _>>()?,
                (None, Some(n)) => random_bits(*n, a.seed),
                (None, None) => unreachable!("clap requires one of them"),
            };
            gen_threshold(&seq)?
        }
        Family::UnitInterval { weights: w, beta, n } => match (w, n) {
            (Some(w), _) => gen_unit_interval(&w.0, beta)?,
            (None, Some(n)) => random_unit_interval(*n, a.seed),
            (None, None) => unreachable!("clap requires one of them"),
        },
        Family::Dt { params, weights: w, n, dist } => {
            let (g, wa) = match (w, n) {
                (Some(w), _) => {
                    let g = gen_dt(&params.alpha, &params.beta, &w.0)?;
                    let wa = WeightAssignment::new(params.alpha.clone(), params.beta.clone(), w.0.clone())
                        .map_err(|e| GenError::InvalidParameters(e.to_string()))?;
                    (g, wa)
                }
                (None, Some(n)) => gen_random_dt(*n, &params.alpha, &params.beta, &dist.distribution(a.seed))?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            weights = Some(wa);
            g
        }
        Family::Named { name } => named_fixture(name)?,
        Family::Connected { n } => random_connected(*n, a.seed),
        Family::Gnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(GenError::InvalidParameters("p must lie in [0, 1]".into()).into());
            }
            gnp(*n, *p, a.seed)
        }
    };
    let text = write_edge_list(&g);
    let weights_path = a
        .weights_out
        .clone()
        .or_else(|| a.out.as_ref().map(|o| PathBuf::from(format!("{}.weights.json", o.display()))));
    if let (Some(wa), Some(path)) = (&weights, &weights_path) {
        write_file(path, &json_line(&WeightsJson::from_assignment(wa)))?;
    } else if a.weights_out.is_some() {
        return Err(CliError::Usage("--weights-out only applies to the dt family".into()));
    }
    match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Output { stdout: String::new(), code: 0 })
        }
        None => Ok(Output { stdout: text, code: 0 }),
    }
}

/// Parses arguments, runs the command and prints; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
