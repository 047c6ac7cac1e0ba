//! `acrkit` — structural analysis, ACR verdicts, canonicalization, operation
//! replay, exact root sampling, and reaction-diagram figures for mass-action
//! networks given as text files (one `reactants -> products` line each).
//!
//! Exit codes: 0 success, 1 input error, 2 internal invariant violation,
//! 3 classification required but unavailable.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use acrkit_core::net_core::parse::parse_network_with;
use acrkit_core::operations::canonical::{
    canonicalize_one_species_two_reactions, canonicalize_two_species_two_reactions,
    CanonicalFamily, CanonicalizeError,
};
use acrkit_core::oracle::{
    empirical_acr_check, sample_rate_constants, EmpiricalAcrReport, MassActionSystem,
};
use acrkit_core::ratio_fmt;
use acrkit_core::{
    decide, linkage_report, projection_diagram, transport_rates, ArrowDiagram, IsolatedRoot,
    LinkageReport, Network, NetworkOperation, OperationTrace, ReactionGraph, SpeciesId,
    Strictness,
};

const SCHEMA: &str = "acrkit/report/v1";

#[derive(Parser)]
#[command(name = "acrkit", version, about = "Mass-action network analysis and ACR decisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for rate sampling; overrides the ACRKIT_SEED environment variable.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of sampled rate assignments for oracle sweeps.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Require integer stoichiometric coefficients (the default).
    #[arg(long, global = true, conflicts_with = "generalized")]
    strict: bool,
    /// Accept positive rational stoichiometric coefficients.
    #[arg(long, global = true)]
    generalized: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report and ACR verdict for a network file.
    Analyze { file: PathBuf },
    /// Canonical ACR family and operation trace for a two-reaction network.
    Canonicalize {
        file: PathBuf,
        /// Also write the operation trace as JSON to this path.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Reaction-diagram figure.
    Diagram {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Dot)]
        format: DiagramFormat,
    },
    /// Apply an operation-trace file to a network.
    Ops {
        file: PathBuf,
        trace: PathBuf,
        /// Comma-separated rate constants to transport through the trace.
        #[arg(long)]
        rates: Option<String>,
        /// Write the transformed network text here as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded exact-arithmetic root sweep for one species.
    Oracle {
        file: PathBuf,
        /// Species label to track (defaults to the ACR witness).
        #[arg(long)]
        species: Option<String>,
    },
    /// Sweep all small networks of a given shape and tally ACR statuses.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        species: usize,
        #[arg(long, default_value_t = 2)]
        reactions: usize,
        #[arg(long, default_value_t = 2)]
        max_coeff: i64,
        /// Run the ACR decision procedure on every network and tally.
        #[arg(long)]
        classify: bool,
        /// Keep only networks admitting a positive steady state.
        #[arg(long)]
        require_steady_state: bool,
        /// Keep only networks where every species is moved by some reaction.
        #[arg(long)]
        no_catalyst_only: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    Dot,
    Svg,
    TikzCoords,
}

enum CliError {
    /// Bad input: missing/malformed file, unparsable network, out-of-range
    /// request.
    Input(String),
    /// An internal invariant failed to hold.
    Internal(String),
    /// The command needs a classification the network does not admit.
    Unclassified(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
            CliError::Unclassified(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) | CliError::Unclassified(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let strictness = if cli.generalized {
        Strictness::GeneralizedRational
    } else {
        Strictness::StrictInteger
    };
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(cli, strictness, file),
        Command::Canonicalize { file, trace_out } => {
            cmd_canonicalize(cli, strictness, file, trace_out.as_deref())
        }
        Command::Diagram { file, format } => cmd_diagram(strictness, file, *format),
        Command::Ops { file, trace, rates, out } => {
            cmd_ops(cli, strictness, file, trace, rates.as_deref(), out.as_deref())
        }
        Command::Oracle { file, species } => cmd_oracle(cli, strictness, file, species.as_deref()),
        Command::Enumerate {
            species,
            reactions,
            max_coeff,
            classify,
            require_steady_state,
            no_catalyst_only,
        } => cmd_enumerate(
            cli,
            *species,
            *reactions,
            *max_coeff,
            *classify,
            *require_steady_state,
            *no_catalyst_only,
        ),
    }
}

fn load_network(path: &Path, strictness: Strictness) -> Result<Network, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_network_with(&text, strictness)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn seed_of(cli: &Cli) -> u64 {
    cli.seed
        .or_else(|| std::env::var("ACRKIT_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(1)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))
}

#[derive(Serialize)]
struct NetworkEcho {
    reactions: Vec<String>,
    species: Vec<String>,
    rate_labels: Vec<String>,
    stoichiometric_dimension: usize,
    conservation_laws: Vec<Vec<String>>,
}

impl NetworkEcho {
    fn of(net: &Network) -> NetworkEcho {
        let basis = net.conservation_basis();
        let m = basis.matrix();
        let conservation_laws = (0..basis.dim())
            .map(|i| {
                (0..net.n_species())
                    .map(|j| ratio_fmt::format_rational(m.get(i, j)))
                    .collect()
            })
            .collect();
        NetworkEcho {
            reactions: net.render().lines().map(str::to_string).collect(),
            species: net.species_labels(),
            rate_labels: net.rate_labels().to_vec(),
            stoichiometric_dimension: net.stoichiometric_dimension(),
            conservation_laws,
        }
    }
}

#[derive(Serialize)]
struct DiagramEntry {
    species: String,
    ascii: String,
    unicode: String,
    diagram: ArrowDiagram,
}

#[derive(Serialize)]
struct OracleSample {
    kappa: Vec<String>,
    continuum: bool,
    root_count: usize,
    roots: Vec<IsolatedRoot>,
    /// For a unique root: simple with negative derivative.
    stable: Option<bool>,
}

#[derive(Serialize)]
struct OracleSection {
    species: String,
    seed: u64,
    samples: usize,
    per_sample: Vec<OracleSample>,
    aggregate: EmpiricalAcrReport,
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema: &'static str,
    network: NetworkEcho,
    linkage: LinkageReport,
    diagrams: Vec<DiagramEntry>,
    verdict: acrkit_core::AcrVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleSection>,
}

fn diagram_entries(net: &Network) -> Vec<DiagramEntry> {
    (0..net.n_species())
        .filter_map(|i| {
            projection_diagram(net, i).ok().map(|d| DiagramEntry {
                species: net.species()[i].label.clone(),
                ascii: d.render_ascii(),
                unicode: d.render_unicode(),
                diagram: d,
            })
        })
        .collect()
}

fn oracle_section(
    net: &Network,
    species: SpeciesId,
    samples: usize,
    seed: u64,
) -> Result<OracleSection, CliError> {
    let mut per_sample = Vec::with_capacity(samples);
    for kappa in sample_rate_constants(net.n_reactions(), samples, seed) {
        let system = MassActionSystem::new(net, kappa.clone())
            .map_err(|e| CliError::Input(e.to_string()))?;
        let report = system
            .steady_state_report(species)
            .map_err(|e| CliError::Input(format!("oracle cannot cover this network: {e}")))?;
        let stable = match report.roots.as_slice() {
            [root] if !report.continuum => Some(
                root.multiplicity == 1
                    && root.derivative_sign == acrkit_core::Sign::Negative
                    && !report.degenerate_axis,
            ),
            _ => None,
        };
        per_sample.push(OracleSample {
            kappa: kappa.iter().map(ratio_fmt::format_rational).collect(),
            continuum: report.continuum,
            root_count: report.positive_root_count,
            roots: report.roots,
            stable,
        });
    }
    let aggregate = empirical_acr_check(net, species, samples, seed)
        .map_err(|e| CliError::Input(format!("oracle cannot cover this network: {e}")))?;
    Ok(OracleSection {
        species: net.species()[species].label.clone(),
        seed,
        samples,
        per_sample,
        aggregate,
    })
}

fn cmd_analyze(cli: &Cli, strictness: Strictness, file: &Path) -> Result<String, CliError> {
    let net = load_network(file, strictness)?;
    let verdict = decide(&net);
    let samples = cli.samples.unwrap_or(0);
    let oracle = match (samples, verdict.witness_species) {
        (0, _) | (_, None) => None,
        (n, Some(w)) => Some(oracle_section(&net, w, n, seed_of(cli))?),
    };
    let report = AnalyzeReport {
        schema: SCHEMA,
        network: NetworkEcho::of(&net),
        linkage: linkage_report(&net),
        diagrams: diagram_entries(&net),
        verdict,
        oracle,
    };
    if cli.json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "network:").unwrap();
    for line in &report.network.reactions {
        writeln!(out, "  {line}").unwrap();
    }
    writeln!(out, "species: {}", report.network.species.join(", ")).unwrap();
    writeln!(
        out,
        "dimension: {}   deficiency: {}   linkage classes: {}   complexes: {}",
        report.network.stoichiometric_dimension,
        report.linkage.deficiency,
        report.linkage.linkage_class_count,
        report.linkage.complex_count,
    )
    .unwrap();
    writeln!(out, "conservation laws: {}", report.network.conservation_laws.len()).unwrap();
    for entry in &report.diagrams {
        writeln!(out, "diagram[{}]: {}", entry.species, entry.ascii).unwrap();
    }
    writeln!(out, "status: {}", report.verdict.status).unwrap();
    if let Some(w) = report.verdict.witness_species {
        writeln!(out, "witness: {}", report.network.species[w]).unwrap();
    }
    if let Some(value) = &report.verdict.acr_value {
        writeln!(out, "value: {value}").unwrap();
    }
    if let Some(family) = &report.verdict.family {
        writeln!(out, "family: {family}").unwrap();
    }
    if let Some(trace) = &report.verdict.trace {
        writeln!(out, "trace steps: {}", trace.steps.len()).unwrap();
    }
    writeln!(out, "rule: {}", rule_name(&report.verdict)).unwrap();
    for note in &report.verdict.evidence.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    if let Some(oracle) = &report.oracle {
        writeln!(
            out,
            "oracle[{}]: samples {}  seed {}  max roots {}  at-most-one-root {}",
            oracle.species,
            oracle.samples,
            oracle.seed,
            oracle.aggregate.max_distinct_positive_roots,
            oracle.aggregate.always_at_most_one_root,
        )
        .unwrap();
    }
    Ok(out)
}

fn rule_name(verdict: &acrkit_core::AcrVerdict) -> String {
    serde_json::to_value(verdict.evidence.rule)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Serialize)]
struct CanonicalizeReport {
    schema: &'static str,
    network: NetworkEcho,
    family: CanonicalFamily,
    parameter: String,
    trace: OperationTrace,
    steps: Vec<String>,
    canonical: Vec<String>,
}

fn cmd_canonicalize(
    cli: &Cli,
    strictness: Strictness,
    file: &Path,
    trace_out: Option<&Path>,
) -> Result<String, CliError> {
    let net = load_network(file, strictness)?;
    let outcome = match net.n_species() {
        1 => canonicalize_one_species_two_reactions(&net),
        2 => canonicalize_two_species_two_reactions(&net),
        s => {
            return Err(CliError::Input(format!(
                "canonicalization covers one- and two-species networks, not {s} species"
            )))
        }
    };
    let (family, trace) = outcome.map_err(|e| match e {
        CanonicalizeError::WrongReactionCount
        | CanonicalizeError::NotOneSpecies
        | CanonicalizeError::WrongSpeciesCount => CliError::Input(e.to_string()),
        CanonicalizeError::Operation(_) => CliError::Internal(e.to_string()),
        _ => CliError::Unclassified(e.to_string()),
    })?;
    let replayed = trace
        .apply(&net)
        .map_err(|e| CliError::Internal(format!("canonical trace failed to replay: {e}")))?;
    if !family.matches(&replayed) {
        return Err(CliError::Internal(
            "replaying the canonical trace did not reproduce the family member".into(),
        ));
    }
    if let Some(path) = trace_out {
        let json = to_json(&trace)?;
        fs::write(path, json).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    let report = CanonicalizeReport {
        schema: SCHEMA,
        network: NetworkEcho::of(&net),
        parameter: ratio_fmt::format_rational(family.parameter()),
        steps: trace.steps.iter().map(step_summary).collect(),
        canonical: replayed.render().lines().map(str::to_string).collect(),
        family,
        trace,
    };
    if cli.json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "family: {}", report.family).unwrap();
    writeln!(out, "parameter: {}", report.parameter).unwrap();
    if report.steps.is_empty() {
        writeln!(out, "trace: already canonical").unwrap();
    } else {
        writeln!(out, "trace:").unwrap();
        for (i, step) in report.steps.iter().enumerate() {
            writeln!(out, "  {}. {step}", i + 1).unwrap();
        }
    }
    writeln!(out, "canonical network:").unwrap();
    for line in &report.canonical {
        writeln!(out, "  {line}").unwrap();
    }
    Ok(out)
}

fn step_summary(op: &NetworkOperation) -> String {
    match op {
        NetworkOperation::Relabel { permutation } => {
            format!("relabel species by {permutation:?}")
        }
        NetworkOperation::Translate { shift } => {
            let coords: Vec<String> = shift.iter().map(ratio_fmt::format_rational).collect();
            format!("translate by ({})", coords.join(", "))
        }
        NetworkOperation::Stretch { reaction, factor } => {
            format!(
                "stretch reaction {} by {}",
                reaction + 1,
                ratio_fmt::format_rational(factor)
            )
        }
        NetworkOperation::Duplicate { reaction, alpha, beta } => format!(
            "duplicate reaction {} with factors {}, {}",
            reaction + 1,
            ratio_fmt::format_rational(alpha),
            ratio_fmt::format_rational(beta)
        ),
        NetworkOperation::PartialScale { species, factor } => format!(
            "partially scale species {} by {}",
            species,
            ratio_fmt::format_rational(factor)
        ),
    }
}

fn cmd_diagram(
    strictness: Strictness,
    file: &Path,
    format: DiagramFormat,
) -> Result<String, CliError> {
    let net = load_network(file, strictness)?;
    match format {
        DiagramFormat::Dot => Ok(ReactionGraph::new(&net).to_dot(&net)),
        DiagramFormat::TikzCoords => {
            let points = coordinate_pairs(&net)?;
            let mut out = String::new();
            for (y, p) in points {
                writeln!(out, "\\draw[->] ({}) -- ({});", y.join(","), p.join(",")).unwrap();
            }
            Ok(out)
        }
        DiagramFormat::Svg => render_svg(&net),
    }
}

/// Reactant/product coordinate tuples for coordinate-space figures
/// (1–3 species; 1-species networks sit on the x-axis).
fn coordinate_pairs(net: &Network) -> Result<Vec<(Vec<String>, Vec<String>)>, CliError> {
    let s = net.n_species();
    if s > 3 {
        return Err(CliError::Input(format!(
            "TooManySpeciesForCoordinatePlot: coordinate figures cover at most 3 species, \
             network has {s}"
        )));
    }
    let tuple = |c: &acrkit_core::Complex| -> Vec<String> {
        let mut coords: Vec<String> =
            (0..s).map(|i| ratio_fmt::format_rational(&c.coeff(i))).collect();
        if s == 1 {
            coords.push("0".to_string());
        }
        coords
    };
    Ok(net
        .reactions()
        .iter()
        .map(|r| (tuple(&r.reactant), tuple(&r.product)))
        .collect())
}

fn render_svg(net: &Network) -> Result<String, CliError> {
    let s = net.n_species();
    if s > 3 {
        return Err(CliError::Input(format!(
            "TooManySpeciesForCoordinatePlot: coordinate figures cover at most 3 species, \
             network has {s}"
        )));
    }
    let to_f = |x: &num::rational::BigRational| -> f64 {
        let n: f64 = x.numer().to_string().parse().unwrap_or(0.0);
        let d: f64 = x.denom().to_string().parse().unwrap_or(1.0);
        n / d
    };
    // Oblique projection for 3 species; plane/line otherwise.
    let project = |c: &acrkit_core::Complex| -> (f64, f64) {
        let x = to_f(&c.coeff(0));
        let y = if s >= 2 { to_f(&c.coeff(1)) } else { 0.0 };
        let z = if s >= 3 { to_f(&c.coeff(2)) } else { 0.0 };
        (x + 0.35 * z, y + 0.35 * z)
    };
    let segments: Vec<((f64, f64), (f64, f64))> = net
        .reactions()
        .iter()
        .map(|r| (project(&r.reactant), project(&r.product)))
        .collect();
    let xs = segments.iter().flat_map(|(a, b)| [a.0, b.0]);
    let ys = segments.iter().flat_map(|(a, b)| [a.1, b.1]);
    let min_x = xs.clone().fold(0.0f64, f64::min) - 1.0;
    let max_x = xs.fold(0.0f64, f64::max) + 1.0;
    let min_y = ys.clone().fold(0.0f64, f64::min) - 1.0;
    let max_y = ys.fold(0.0f64, f64::max) + 1.0;
    let unit = 48.0;
    let width = (max_x - min_x) * unit;
    let height = (max_y - min_y) * unit;
    let px = |x: f64| (x - min_x) * unit;
    let py = |y: f64| (max_y - y) * unit;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.0} {height:.0}\" \
         width=\"{width:.0}\" height=\"{height:.0}\">"
    )
    .unwrap();
    writeln!(
        out,
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>"
    )
    .unwrap();
    // Coordinate axes through the origin.
    writeln!(
        out,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#bbb\"/>",
        px(min_x + 0.2),
        py(0.0),
        px(max_x - 0.2),
        py(0.0)
    )
    .unwrap();
    writeln!(
        out,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#bbb\"/>",
        px(0.0),
        py(min_y + 0.2),
        px(0.0),
        py(max_y - 0.2)
    )
    .unwrap();
    for ((ax, ay), (bx, by)) in &segments {
        writeln!(
            out,
            "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#000\" \
             stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>",
            px(*ax),
            py(*ay),
            px(*bx),
            py(*by)
        )
        .unwrap();
        writeln!(
            out,
            "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"2.5\"/>",
            px(*ax),
            py(*ay)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[derive(Serialize)]
struct OpsReport {
    schema: &'static str,
    steps_applied: usize,
    network: Vec<String>,
    species: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rates: Option<Vec<String>>,
}

fn cmd_ops(
    cli: &Cli,
    strictness: Strictness,
    file: &Path,
    trace_path: &Path,
    rates: Option<&str>,
    out_path: Option<&Path>,
) -> Result<String, CliError> {
    let net = load_network(file, strictness)?;
    let trace_text = fs::read_to_string(trace_path)
        .map_err(|e| CliError::Input(format!("{}: {e}", trace_path.display())))?;
    let trace: OperationTrace = serde_json::from_str(&trace_text)
        .map_err(|e| CliError::Input(format!("{}: {e}", trace_path.display())))?;
    let mut kappa = match rates {
        None => None,
        Some(text) => {
            let parsed: Option<Vec<_>> =
                text.split(',').map(|p| ratio_fmt::parse_rational(p.trim())).collect();
            let parsed =
                parsed.ok_or_else(|| CliError::Input(format!("unparsable rate list: {text}")))?;
            if parsed.len() != net.n_reactions() {
                return Err(CliError::Input(format!(
                    "{} rates given for {} reactions",
                    parsed.len(),
                    net.n_reactions()
                )));
            }
            Some(parsed)
        }
    };
    let mut current = net;
    for (idx, op) in trace.steps.iter().enumerate() {
        current = op
            .apply(&current)
            .map_err(|e| CliError::Input(format!("step {}: {e}", idx + 1)))?;
        if let Some(k) = kappa.take() {
            kappa = Some(
                transport_rates(op, &k)
                    .map_err(|e| CliError::Input(format!("step {}: {e}", idx + 1)))?,
            );
        }
    }
    let report = OpsReport {
        schema: SCHEMA,
        steps_applied: trace.steps.len(),
        network: current.render().lines().map(str::to_string).collect(),
        species: current.species_labels(),
        rates: kappa.map(|k| k.iter().map(ratio_fmt::format_rational).collect()),
    };
    if let Some(path) = out_path {
        let mut text = report.network.join("\n");
        text.push('\n');
        fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    if cli.json {
        return to_json(&report);
    }
    let mut out = String::new();
    for line in &report.network {
        writeln!(out, "{line}").unwrap();
    }
    if let Some(rates) = &report.rates {
        writeln!(out, "rates: {}", rates.join(", ")).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct OracleReport {
    schema: &'static str,
    network: NetworkEcho,
    oracle: OracleSection,
}

fn cmd_oracle(
    cli: &Cli,
    strictness: Strictness,
    file: &Path,
    species: Option<&str>,
) -> Result<String, CliError> {
    let net = load_network(file, strictness)?;
    let id = match species {
        Some(label) => net
            .species_by_label(label)
            .ok_or_else(|| CliError::Input(format!("unknown species: {label}")))?,
        None => decide(&net).witness_species.ok_or_else(|| {
            CliError::Input("no ACR witness to track; pass --species".to_string())
        })?,
    };
    let samples = cli.samples.unwrap_or(60);
    let section = oracle_section(&net, id, samples, seed_of(cli))?;
    let report =
        OracleReport { schema: SCHEMA, network: NetworkEcho::of(&net), oracle: section };
    if cli.json {
        return to_json(&report);
    }
    let o = &report.oracle;
    let mut out = String::new();
    writeln!(
        out,
        "species {}   samples {}   seed {}",
        o.species, o.samples, o.seed
    )
    .unwrap();
    writeln!(
        out,
        "max distinct positive roots: {}",
        o.aggregate.max_distinct_positive_roots
    )
    .unwrap();
    writeln!(out, "always at most one root: {}", o.aggregate.always_at_most_one_root).unwrap();
    writeln!(
        out,
        "unique-root samples: {} (stable in {})",
        o.aggregate.unique_root_samples, o.aggregate.stable_unique_root_samples
    )
    .unwrap();
    if o.aggregate.any_continuum {
        writeln!(out, "continuum witnessed").unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct EnumerateReport {
    schema: &'static str,
    species: usize,
    reactions: usize,
    max_coeff: i64,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    statuses: Option<BTreeMap<String, usize>>,
}

fn cmd_enumerate(
    cli: &Cli,
    species: usize,
    reactions: usize,
    max_coeff: i64,
    classify: bool,
    require_steady_state: bool,
    no_catalyst_only: bool,
) -> Result<String, CliError> {
    if species == 0 || species > 3 || reactions == 0 || max_coeff < 1 {
        return Err(CliError::Input(
            "sweep shape out of range: 1-3 species, >=1 reactions, max-coeff >= 1".to_string(),
        ));
    }
    let universe = acrkit_core::enumerate::reactions(species, max_coeff).len();
    let mut combinations: u128 = if reactions > universe { 0 } else { 1 };
    for i in 0..reactions.min(universe) {
        combinations = combinations.saturating_mul((universe - i) as u128) / (i as u128 + 1);
    }
    if combinations > 2_000_000 {
        return Err(CliError::Input(format!(
            "sweep of {combinations} networks is too large; tighten the bounds"
        )));
    }
    let mut count = 0usize;
    let mut statuses: BTreeMap<String, usize> = BTreeMap::new();
    for net in acrkit_core::enumerate::networks(species, reactions, max_coeff) {
        if no_catalyst_only && !net.catalyst_only_species().is_empty() {
            continue;
        }
        if require_steady_state
            && acrkit_core::positive_steady_state_exists(&net) != Ok(true)
        {
            continue;
        }
        count += 1;
        if classify {
            *statuses.entry(decide(&net).status.to_string()).or_insert(0) += 1;
        }
    }
    let report = EnumerateReport {
        schema: SCHEMA,
        species,
        reactions,
        max_coeff,
        count,
        statuses: classify.then_some(statuses),
    };
    if cli.json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "networks: {}", report.count).unwrap();
    if let Some(statuses) = &report.statuses {
        for (status, n) in statuses {
            writeln!(out, "  {status}: {n}").unwrap();
        }
    }
    Ok(out)
}
