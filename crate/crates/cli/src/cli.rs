//! Command definitions and dispatch.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphdesign_core::bounds::{self, BoundsOptions};
use graphdesign_core::design::{self, DEFAULT_ACTIVITY_THRESHOLD};
use graphdesign_core::spectral::{GraphSpectrum, DEFAULT_GROUPING_TOLERANCE};
use graphdesign_core::{families, products, Graph, VertexSet};
use serde_json::{json, Value};

use crate::fixtures::{self, FixtureError};
use crate::io::{self, FormatError, Mode};
use crate::report::{self, RunReport};

pub const EXIT_BAD_INPUT: u8 = 2;
pub const EXIT_SPECTRAL: u8 = 3;
pub const EXIT_CAP: u8 = 4;
pub const EXIT_DISCONNECTED_PRODUCT: u8 = 5;

/// Graph design analysis: design orders, spectral bounds and products.
///
/// Graph arguments are edge-list files or `fixture:<name>`; set arguments are
/// vertex-set files or `fixture:<name>` for the fixture's design. Reports go
/// to stdout as a single JSON document.
#[derive(Debug, Parser)]
#[command(name = "graphdesign", version)]
pub struct Cli {
    /// Leave the timestamp out of the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Collapse duplicate edges instead of rejecting them.
    #[arg(long, global = true)]
    pub lenient: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family graph, plus a `.design` sidecar where the family has one.
    Gen(GenArgs),
    /// Design order of a vertex subset.
    Analyze(AnalyzeArgs),
    /// Hoffman and Cheeger bounds with optional exact oracles.
    Bounds(BoundsArgs),
    /// Weak or cartesian product of two graphs.
    Product(ProductArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Hypercube,
    Kneser,
    Derangement,
    Sylvester,
    TruncatedTetrahedron,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Family parameters, e.g. `6 2` for the Kneser graph KG(6,2).
    pub params: Vec<usize>,
    #[arg(short, long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct Tolerances {
    /// Activity threshold: an eigenspace counts when ‖P 1_W‖² > ε|W|.
    #[arg(long, default_value_t = DEFAULT_ACTIVITY_THRESHOLD)]
    pub epsilon: f64,
    /// Eigenvalue grouping tolerance.
    #[arg(long, default_value_t = DEFAULT_GROUPING_TOLERANCE)]
    pub tau: f64,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub graph: String,
    pub set: String,
    #[command(flatten)]
    pub tolerances: Tolerances,
    /// Include an explicit eigenbasis certifying the order.
    #[arg(long)]
    pub witness_basis: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    pub graph: String,
    /// Compute the independence ratio exactly.
    #[arg(long)]
    pub exact_alpha: bool,
    /// Compute the Cheeger constant exactly.
    #[arg(long)]
    pub exact_cheeger: bool,
    #[arg(long, default_value_t = bounds::DEFAULT_INDEPENDENCE_CAP)]
    pub alpha_cap: usize,
    #[arg(long, default_value_t = bounds::DEFAULT_CHEEGER_CAP)]
    pub cheeger_cap: usize,
    #[arg(long, default_value_t = bounds::DEFAULT_SHARPNESS_TOLERANCE)]
    pub sharpness_tolerance: f64,
    #[arg(long, default_value_t = DEFAULT_GROUPING_TOLERANCE)]
    pub tau: f64,
    /// Independent set to test against the Hoffman bound without the exact oracle.
    #[arg(long)]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Weak,
    Cartesian,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    pub graph1: String,
    pub graph2: String,
    #[arg(long, value_enum, default_value_t = ProductKind::Weak)]
    pub kind: ProductKind,
    /// Where to write the product graph.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long, requires = "set2")]
    pub set1: Option<String>,
    #[arg(long, requires = "set1")]
    pub set2: Option<String>,
    /// Also report the product's spectrum.
    #[arg(long)]
    pub spectrum: bool,
    #[command(flatten)]
    pub tolerances: Tolerances,
}

/// A failed run: exit code plus the message for stderr.
#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn bad_input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }
}

impl From<graphdesign_core::Error> for CliError {
    fn from(e: graphdesign_core::Error) -> Self {
        use graphdesign_core::Error as E;
        let code = match e {
            E::NoConvergence { .. } | E::CertificationFailed(_) => EXIT_SPECTRAL,
            E::TooLarge { .. } => EXIT_CAP,
            E::DisconnectedProduct { .. } => EXIT_DISCONNECTED_PRODUCT,
            _ => EXIT_BAD_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Graph(inner) => inner.into(),
            other => CliError::bad_input(other.to_string()),
        }
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        CliError::bad_input(e.to_string())
    }
}

const FIXTURE_PREFIX: &str = "fixture:";

fn load_graph(arg: &str, mode: Mode) -> Result<Graph, CliError> {
    match arg.strip_prefix(FIXTURE_PREFIX) {
        Some(name) => Ok(fixtures::fixture(name)?.graph),
        None => Ok(io::read_graph(Path::new(arg), mode)?),
    }
}

fn load_set(arg: &str, g: &Graph) -> Result<VertexSet, CliError> {
    let set = match arg.strip_prefix(FIXTURE_PREFIX) {
        Some(name) => fixtures::fixture(name)?.design,
        None => io::read_vertex_set(Path::new(arg), g.vertex_count())?,
    };
    if set.host_n() != g.vertex_count() {
        return Err(graphdesign_core::Error::HostMismatch {
            expected: g.vertex_count(),
            found: set.host_n(),
        }
        .into());
    }
    Ok(set)
}

fn check_tolerance(name: &str, value: f64) -> Result<(), CliError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(CliError::bad_input(format!(
            "{name} must be a non-negative number, got {value}"
        )))
    }
}

fn spectrum_into(report: &mut RunReport, spectrum: &GraphSpectrum) {
    report.spectrum = Some(report::spectrum(&spectrum.decomposition));
    report
        .warnings
        .extend(report::grouping_warnings(&spectrum.decomposition));
}

/// Runs one command and returns the JSON report.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Value, CliError> {
    let mut report = RunReport::new(argv);
    if !cli.no_timestamp {
        report.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }
    let mode = if cli.lenient {
        Mode::Lenient
    } else {
        Mode::Strict
    };
    match &cli.command {
        Command::Gen(args) => gen(args, &mut report)?,
        Command::Analyze(args) => analyze(args, mode, &mut report)?,
        Command::Bounds(args) => bounds_cmd(args, mode, &mut report)?,
        Command::Product(args) => product(args, mode, &mut report)?,
    }
    Ok(report.to_json())
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().unwrap().get_name().to_string()
}

fn params<const N: usize>(family: Family, given: &[usize]) -> Result<[usize; N], CliError> {
    given.try_into().map_err(|_| {
        CliError::bad_input(format!(
            "{} takes {N} parameter(s), got {}",
            value_name(family),
            given.len()
        ))
    })
}

fn gen(args: &GenArgs, report: &mut RunReport) -> Result<(), CliError> {
    let (graph, design): (Graph, Option<VertexSet>) = match args.family {
        Family::Complete => {
            let [n] = params(args.family, &args.params)?;
            let g = families::complete(n)?;
            (g, Some(VertexSet::new(n, [0])?))
        }
        Family::Cycle => {
            let [n] = params(args.family, &args.params)?;
            let g = families::cycle(n)?;
            let part = g.bipartition()?.map(|(a, _)| a);
            (g, part)
        }
        Family::Hypercube => {
            let [n] = params(args.family, &args.params)?;
            let g = families::hypercube(n)?;
            let s = (n >= 2)
                .then(|| families::hypercube_design(n, &[1]))
                .transpose()?;
            (g, s.map(|(s, _)| s))
        }
        Family::Kneser => {
            let [n, k] = params(args.family, &args.params)?;
            if k >= 1 && n < 2 * k + 1 {
                return Err(CliError::bad_input(format!(
                    "KG({n},{k}) is degenerate: need n >= 2k + 1 for a connected graph"
                )));
            }
            let kg = families::kneser(n, k)?;
            (kg.graph, Some(families::kneser_star(n, k, 1)?))
        }
        Family::Derangement => {
            let [n] = params(args.family, &args.params)?;
            let dg = families::derangement_graph(n)?;
            (dg.graph, Some(families::permutation_stabilizer(n, 1, 1)?))
        }
        Family::Sylvester | Family::TruncatedTetrahedron => {
            params::<0>(args.family, &args.params)?;
            let name = if args.family == Family::Sylvester {
                "sylvester"
            } else {
                "truncated_tetrahedron"
            };
            let f = fixtures::fixture(name)?;
            (f.graph, Some(f.design))
        }
    };
    io::write_graph(&graph, &args.out)?;
    let mut files = vec![args.out.display().to_string()];
    if let Some(s) = &design {
        let path = args.out.with_extension("design");
        io::write_vertex_set(s, &path)?;
        files.push(path.display().to_string());
    }
    report.graph = Some(report::graph_summary(&graph));
    report.section(
        "generated",
        json!({
            "family": value_name(args.family),
            "params": args.params,
            "files": files,
            "design": design.as_ref().map(report::vertex_set),
        }),
    );
    Ok(())
}

fn analyze(args: &AnalyzeArgs, mode: Mode, report: &mut RunReport) -> Result<(), CliError> {
    check_tolerance("epsilon", args.tolerances.epsilon)?;
    check_tolerance("tau", args.tolerances.tau)?;
    let g = load_graph(&args.graph, mode)?;
    let w = load_set(&args.set, &g)?;
    report.graph = Some(report::graph_summary(&g));
    let spectrum = GraphSpectrum::compute(&g, args.tolerances.tau)?;
    spectrum_into(report, &spectrum);
    let eps = args.tolerances.epsilon;
    let value = if args.witness_basis {
        let basis = design::witness_basis(&spectrum, &w, eps)?;
        report::design(&basis.report, Some(&basis))
    } else {
        report::design(&design::design_order(&spectrum, &w, eps)?, None)
    };
    report.section("design", value);
    Ok(())
}

fn bounds_cmd(args: &BoundsArgs, mode: Mode, report: &mut RunReport) -> Result<(), CliError> {
    check_tolerance("tau", args.tau)?;
    check_tolerance("sharpness tolerance", args.sharpness_tolerance)?;
    let g = load_graph(&args.graph, mode)?;
    report.graph = Some(report::graph_summary(&g));
    let spectrum = GraphSpectrum::compute(&g, args.tau)?;
    spectrum_into(report, &spectrum);
    let options = BoundsOptions {
        exact_alpha: args.exact_alpha,
        exact_cheeger: args.exact_cheeger,
        alpha_cap: args.alpha_cap,
        cheeger_cap: args.cheeger_cap,
        sharpness_tolerance: args.sharpness_tolerance,
    };
    let result = bounds::bounds_report(&g, &spectrum, &options)?;
    let witness = match &args.witness {
        Some(arg) => {
            let s = load_set(arg, &g)?;
            let check = bounds::hoffman_witness_check(&g, &spectrum, &s, args.sharpness_tolerance)?;
            report.warnings.push(json!({
                "kind": "witness_only",
                "message": "Hoffman sharpness was checked on the given witness only; \
                            maximality was not verified by the exact oracle",
            }));
            Some(check)
        }
        None => None,
    };
    report.section("bounds", report::bounds(&result, witness.as_ref()));
    Ok(())
}

fn product(args: &ProductArgs, mode: Mode, report: &mut RunReport) -> Result<(), CliError> {
    check_tolerance("epsilon", args.tolerances.epsilon)?;
    check_tolerance("tau", args.tolerances.tau)?;
    if args.set1.is_some() && args.kind != ProductKind::Weak {
        return Err(CliError::bad_input(
            "design verification is defined for weak products only",
        ));
    }
    let g1 = load_graph(&args.graph1, mode)?;
    let g2 = load_graph(&args.graph2, mode)?;
    let g = match args.kind {
        ProductKind::Weak => products::weak_product(&g1, &g2)?,
        ProductKind::Cartesian => products::cartesian_product(&g1, &g2)?,
    };
    if let Some(out) = &args.out {
        io::write_graph(&g, out)?;
    }
    report.graph = Some(report::graph_summary(&g));
    let mut section = json!({
        "kind": value_name(args.kind),
        "factors": [report::graph_summary(&g1), report::graph_summary(&g2)],
        "file": args.out.as_ref().map(|p| p.display().to_string()),
    });
    if let (Some(a), Some(b)) = (&args.set1, &args.set2) {
        let w1 = load_set(a, &g1)?;
        let w2 = load_set(b, &g2)?;
        let record = products::verify_product_order(
            &g1,
            &w1,
            &g2,
            &w2,
            args.tolerances.epsilon,
            args.tolerances.tau,
        )?;
        if record.cylinder && !record.collision_free {
            report.warnings.push(json!({
                "kind": "eigenvalue_collision",
                "message": "product eigenvalues collide; the cylinder order is checked as an upper bound only",
            }));
        }
        section["order"] = report::product_order(&record);
    }
    if args.spectrum {
        let spectrum = GraphSpectrum::compute(&g, args.tolerances.tau)?;
        spectrum_into(report, &spectrum);
    }
    report.section("product", section);
    Ok(())
}
