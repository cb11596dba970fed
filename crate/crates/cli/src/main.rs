//! Command-line laboratory for star-graph bond scattering: secular spectra,
//! analytic scar vectors with entropy reports, convergence traces, the
//! two-phase Hadamard entropy landscape, and the built-in invariant suites.
//!
//! Every output file embeds the artifact version and the resolved
//! configuration, and identical configuration plus seed produces
//! byte-identical files. CSV floats carry 17 significant digits so values
//! round-trip exactly; all angles are radians.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use starscar::checks;
use starscar::entropy::{entropy_report, uncertainty_bounds, EntropyReport};
use starscar::graphcore::{CentralScattering, StarGraph};
use starscar::landscape;
use starscar::numkernel::{CMat, CVec};
use starscar::scars::{
    eigen_residual, equitransmitting_halfscar, fourier_general_j, fourier_halfscar,
    general_j_quartic_residual, permuted_halfscar, ScarVector,
};
use starscar::spectral::{scar_convergence_scan, secular_roots, secular_roots_with_step};
use starscar::{Sign, StarGraph64};

const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Environment variable naming the directory for outputs without --out.
const OUTDIR_VAR: &str = "STARSCAR_OUTDIR";

#[derive(Parser)]
#[command(name = "starscar", version, about = "Star-graph scarring laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Scan the secular equation for standing-wave momenta
    Spectrum(SpectrumArgs),
    /// Build an analytic scar vector and its entropy report
    Scar(ScarArgs),
    /// Trace how closely secular eigenvectors approach a target scar
    Converge(ConvergeArgs),
    /// Scan the two-phase Hadamard family's entropy surface
    Landscape(LandscapeArgs),
    /// Entropy report for a vector stored in a JSON file
    Entropy(EntropyArgs),
    /// Run the built-in invariant suites
    Verify(VerifyArgs),
}

/// Star graph given either as a JSON file or inline. The file form is
/// {"B": n, "lengths": [..] | "sqrt-primes", "central": "fourier" |
/// "et-paley" | "kirchhoff" | {"explicit": [[re,im], ..]}} with the explicit
/// matrix row-major.
#[derive(Args, Serialize, Clone)]
struct GraphArgs {
    /// Graph description file (JSON)
    #[arg(long, value_name = "FILE", conflicts_with_all = ["bonds", "lengths", "central"])]
    graph: Option<PathBuf>,
    /// Bond count for an inline graph
    #[arg(long)]
    bonds: Option<usize>,
    /// "sqrt-primes" or comma-separated bond lengths
    #[arg(long, default_value = "sqrt-primes")]
    lengths: String,
    /// Central scattering family for an inline graph
    #[arg(long, value_enum, default_value_t = CentralKind::Fourier)]
    central: CentralKind,
}

#[derive(ValueEnum, Clone, Copy, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CentralKind {
    Fourier,
    EtPaley,
    Kirchhoff,
}

#[derive(Args, Serialize)]
struct SpectrumArgs {
    #[command(flatten)]
    #[serde(flatten)]
    graph: GraphArgs,
    /// Lower end of the momentum window
    #[arg(long, default_value_t = 0.0)]
    kmin: f64,
    /// Upper end of the momentum window
    #[arg(long)]
    kmax: f64,
    /// Scan step; defaults to pi / (8 max L)
    #[arg(long)]
    step: Option<f64>,
    /// Output file (default spectrum.csv in the output directory)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    FourierFirstBond,
    FourierGeneralJ,
    FourierPermuted,
    EquiTransmitting,
}

/// Flags shared by the scar-building commands.
#[derive(Args, Serialize, Clone)]
struct ScarParams {
    /// Scar family
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Bond count B
    #[arg(long)]
    bonds: usize,
    /// Stretch phase of the enhanced bond, radians
    #[arg(long)]
    kappa: f64,
    /// Sign of the square-root eigenvalue branch, +1 or -1
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    eps1: i32,
    /// Branch of the reduced eigenpair, +1 or -1; fourier-general-j ignores it
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    eps2: i32,
    /// Enhanced bond index, 1-based; used by fourier-permuted and
    /// fourier-general-j
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Root index 0..=3 in eigenvalue-phase order; fourier-general-j only
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Args, Serialize)]
struct ScarArgs {
    #[command(flatten)]
    #[serde(flatten)]
    params: ScarParams,
    /// Comma-separated Renyi orders for the entropy report
    #[arg(long, default_value = "-0.5,0.5,2", allow_hyphen_values = true)]
    rho: String,
    /// Renyi pair parameter for the uncertainty bound
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Output file (default scar.json in the output directory)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct ConvergeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    params: ScarParams,
    /// "sqrt-primes" or comma-separated lengths for the scan graph
    #[arg(long, default_value = "sqrt-primes")]
    lengths: String,
    /// Upper end of the momentum scan, from 0
    #[arg(long)]
    kmax: f64,
    /// Minimum k spacing between non-improving rows; 0 keeps every root
    #[arg(long, default_value_t = 0.0)]
    report_every: f64,
    /// Output file (default converge.csv in the output directory)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct LandscapeArgs {
    /// Grid resolution per axis
    #[arg(long, default_value_t = 200)]
    resolution: usize,
    /// Eigenvalue gap under which a grid point is flagged degenerate
    #[arg(long, default_value_t = 1e-2)]
    gap_threshold: f64,
    /// Grid CSV output (default landscape.csv in the output directory)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Minima summary JSON (default landscape-minima.json)
    #[arg(long)]
    minima_out: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct EntropyArgs {
    /// JSON file holding the vector as [[re,im], ..]
    #[arg(long, value_name = "FILE")]
    vector: PathBuf,
    /// Comma-separated Renyi orders
    #[arg(long, default_value = "-0.5,0.5,2", allow_hyphen_values = true)]
    rho: String,
    /// Optional graph file whose central matrix supplies uncertainty bounds
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Renyi pair parameter for the uncertainty bound
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Output file (default entropy.json or entropy.csv)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run one named suite instead of all of them
    #[arg(long)]
    only: Option<String>,
    /// Optional graph file; an explicit central matrix gets its unitarity
    /// checked and the outcome lands in the report
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// JSON report (default verify.json in the output directory)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Cmd::Spectrum(a) => cmd_spectrum(a),
        Cmd::Scar(a) => cmd_scar(a),
        Cmd::Converge(a) => cmd_converge(a),
        Cmd::Landscape(a) => cmd_landscape(a),
        Cmd::Entropy(a) => cmd_entropy(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match run {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            // config or environment problem
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------- commands

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode> {
    let (graph, graph_echo) = build_graph(&args.graph)?;
    let roots = match args.step {
        Some(step) => secular_roots_with_step(&graph, args.kmin, args.kmax, step),
        None => secular_roots(&graph, args.kmin, args.kmax),
    }?;

    let mut config = serde_json::to_value(&args)?;
    config["resolved_graph"] = graph_echo;
    let mut text = csv_preamble(&config)?;
    text.push_str("k,residual,multiplicity,distance_to_target\n");
    for r in &roots {
        let _ = writeln!(text, "{},{},{},", fmt_f(r.k), fmt_f(r.residual), r.multiplicity);
    }

    let path = out_path(&args.out, "spectrum.csv");
    write_out(&path, &text)?;
    println!("{} roots in [{}, {}] -> {}", roots.len(), args.kmin, args.kmax, path.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_scar(args: ScarArgs) -> Result<ExitCode> {
    let rhos = parse_rho_list(&args.rho)?;
    let records = build_scar_records(&args.params, &rhos, args.sigma)?;

    let config = serde_json::to_value(&args)?;
    let body = json!({
        "version": VERSION,
        "command": "scar",
        "config": config,
        "records": records,
    });
    let path = out_path(&args.out, "scar.json");
    write_out(&path, &json_text(&body)?)?;
    println!("{} record(s) -> {}", body["records"].as_array().map_or(0, Vec::len), path.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_converge(args: ConvergeArgs) -> Result<ExitCode> {
    let params = &args.params;
    let scar = build_single_scar(params)?;
    let central = match params.family {
        FamilyArg::EquiTransmitting => CentralScattering::EquiTransmittingPaley,
        _ => CentralScattering::Fourier,
    };
    let graph = graph_with_lengths(params.bonds, &args.lengths, central)?;
    // a vanishing interval means "keep every root"; the scan treats the
    // interval as a lower bound between non-improving rows
    let report_every = if args.report_every > 0.0 { args.report_every } else { f64::MIN_POSITIVE };
    let trace = scar_convergence_scan(&graph, &scar.vec, args.kmax, report_every)?;

    let mut config = serde_json::to_value(&args)?;
    config["resolved_lengths"] = json!(graph.lengths().to_vec());
    let mut text = csv_preamble(&config)?;
    text.push_str("k,residual,multiplicity,distance_to_target,running_min\n");
    for r in &trace.records {
        let _ = writeln!(
            text,
            "{},{},{},{},{}",
            fmt_f(r.k),
            fmt_f(r.residual),
            r.multiplicity,
            fmt_f(r.distance),
            fmt_f(r.running_min)
        );
    }

    let path = out_path(&args.out, "converge.csv");
    write_out(&path, &text)?;
    println!(
        "{} rows, final running min {:.3e} -> {}",
        trace.records.len(),
        trace.running_min,
        path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_landscape(args: LandscapeArgs) -> Result<ExitCode> {
    let grid = landscape::scan_with_threshold::<f64>(args.resolution, args.gap_threshold)?;
    let config = serde_json::to_value(&args)?;

    let mut text = csv_preamble(&config)?;
    text.push_str("x1,x2,min_doubled_entropy,degenerate_flag\n");
    for p in &grid.points {
        let _ = writeln!(
            text,
            "{},{},{},{}",
            fmt_f(p.x1),
            fmt_f(p.x2),
            fmt_f(p.min_doubled_entropy),
            u8::from(p.degenerate)
        );
    }
    let grid_path = out_path(&args.out, "landscape.csv");
    write_out(&grid_path, &text)?;

    let minima: Vec<Value> = landscape::find_minima(&grid)
        .into_iter()
        .map(|(x1, x2, v)| json!({ "x1": x1, "x2": x2, "value": v }))
        .collect();
    let flagged: Vec<Value> = grid
        .points
        .iter()
        .filter(|p| p.degenerate)
        .map(|p| json!({ "x1": p.x1, "x2": p.x2, "gap": p.eigenvalue_gap }))
        .collect();
    let summary = json!({
        "version": VERSION,
        "command": "landscape",
        "config": config,
        "exact_minimum": landscape::exact_minimum_value::<f64>(),
        "minima": minima,
        "degenerate_points": flagged,
    });
    let minima_path = out_path(&args.minima_out, "landscape-minima.json");
    write_out(&minima_path, &json_text(&summary)?)?;

    println!(
        "{}x{} grid -> {}; {} local minima, {} flagged -> {}",
        args.resolution,
        args.resolution,
        grid_path.display(),
        summary["minima"].as_array().map_or(0, Vec::len),
        summary["degenerate_points"].as_array().map_or(0, Vec::len),
        minima_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_entropy(args: EntropyArgs) -> Result<ExitCode> {
    let rhos = parse_rho_list(&args.rho)?;
    let v = read_vector(&args.vector)?;
    let mut report = entropy_report(&v, &rhos)?;
    if let Some(path) = &args.graph {
        let (graph, _) = graph_from_file(path)?;
        let (s_bound, pair_bound) = uncertainty_bounds(graph.central_matrix(), args.sigma)?;
        report.lower_bound_shannon = Some(s_bound);
        report.lower_bound_renyi_pair = Some(pair_bound);
    }

    let config = serde_json::to_value(&args)?;
    let (path, text) = match args.format {
        OutFormat::Json => {
            let body = json!({
                "version": VERSION,
                "command": "entropy",
                "config": config,
                "report": report_json(&report),
            });
            (out_path(&args.out, "entropy.json"), json_text(&body)?)
        }
        OutFormat::Csv => {
            let mut text = csv_preamble(&config)?;
            let mut header = String::from("dim,shannon,renyi_inf");
            let mut row = format!("{},{},{}", report.dim, fmt_f(report.shannon), fmt_f(report.renyi_inf));
            for (rho, value) in &report.renyi {
                let _ = write!(header, ",renyi_{rho}");
                let _ = write!(row, ",{}", fmt_f(*value));
            }
            header.push_str(",lower_bound_shannon,lower_bound_renyi_pair");
            for bound in [report.lower_bound_shannon, report.lower_bound_renyi_pair] {
                match bound {
                    Some(b) => {
                        let _ = write!(row, ",{}", fmt_f(b));
                    }
                    None => row.push(','),
                }
            }
            let _ = writeln!(text, "{header}");
            let _ = writeln!(text, "{row}");
            (out_path(&args.out, "entropy.csv"), text)
        }
    };
    write_out(&path, &text)?;
    println!("shannon {:.12} (dim {}) -> {}", report.shannon, report.dim, path.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut outcomes = match &args.only {
        Some(suite) => checks::run_suite(suite, args.seed)
            .with_context(|| format!("suite {suite:?} (available: {})", checks::SUITES.join(", ")))?,
        None => checks::run_all(args.seed).outcomes,
    };
    if let Some(path) = &args.graph {
        let file = parse_graph_file(path)?;
        if let CentralField::Explicit { explicit } = &file.central {
            let m = explicit_matrix(file.b, explicit)?;
            outcomes.push(checks::check_explicit_unitary(&m));
        }
    }

    for o in &outcomes {
        println!("{} {}/{}: {}", if o.passed { "PASS" } else { "FAIL" }, o.suite, o.name, o.detail);
    }
    let failures = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} checks, {} failures", outcomes.len(), failures);

    let config = serde_json::to_value(&args)?;
    let body = json!({
        "version": VERSION,
        "command": "verify",
        "config": config,
        "seed": args.seed,
        "all_passed": failures == 0,
        "failures": failures,
        "outcomes": outcomes
            .iter()
            .map(|o| json!({
                "suite": o.suite,
                "name": o.name,
                "passed": o.passed,
                "detail": o.detail,
            }))
            .collect::<Vec<_>>(),
    });
    let path = out_path(&args.out, "verify.json");
    write_out(&path, &json_text(&body)?)?;
    println!("report -> {}", path.display());

    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ------------------------------------------------------------ scar assembly

/// One output record: the scar itself, its certificate numbers, and the
/// entropy report with lifted-vector lower bounds attached.
fn build_scar_records(params: &ScarParams, rhos: &[f64], sigma: f64) -> Result<Vec<Value>> {
    let eps1 = Sign::from_i32(params.eps1)?;
    Sign::from_i32(params.eps2)?;
    let mut records = Vec::new();
    match params.family {
        FamilyArg::FourierGeneralJ => {
            let basis = fourier_general_j(params.bonds, params.j, params.kappa)?;
            for (index, root) in basis.roots.iter().enumerate() {
                let scar = basis.lift(index, eps1)?;
                let quartic =
                    general_j_quartic_residual(params.bonds, params.j, params.kappa, root.root)?;
                let mut record = scar_record(&scar, rhos, sigma)?;
                record["root"] = json!(c2a(root.root));
                record["root_phase"] = json!(root.phi);
                record["quartic_residual"] = json!(quartic);
                records.push(record);
            }
        }
        _ => {
            let scar = build_single_scar(params)?;
            records.push(scar_record(&scar, rhos, sigma)?);
        }
    }
    Ok(records)
}

/// The one scar a converge run targets; general-j picks the root at
/// params.index.
fn build_single_scar(params: &ScarParams) -> Result<ScarVector<f64>> {
    let eps1 = Sign::from_i32(params.eps1)?;
    let eps2 = Sign::from_i32(params.eps2)?;
    Ok(match params.family {
        FamilyArg::FourierFirstBond => fourier_halfscar(params.bonds, params.kappa, eps1, eps2)?.0,
        FamilyArg::FourierPermuted => {
            permuted_halfscar(params.bonds, params.j, params.kappa, eps1, eps2)?
        }
        FamilyArg::EquiTransmitting => {
            equitransmitting_halfscar(params.bonds, params.kappa, eps1, eps2)?
        }
        FamilyArg::FourierGeneralJ => {
            fourier_general_j(params.bonds, params.j, params.kappa)?.lift(params.index, eps1)?
        }
    })
}

fn scar_record(scar: &ScarVector<f64>, rhos: &[f64], sigma: f64) -> Result<Value> {
    let doubled = scar.doubled_matrix()?;
    let residual = eigen_residual(&doubled, &scar.vec, scar.eigenvalue);

    let central = match scar.family {
        starscar::scars::ScarFamily::EquiTransmitting => {
            CentralScattering::<f64>::EquiTransmittingPaley.matrix(scar.bonds())?
        }
        _ => CentralScattering::<f64>::Fourier.matrix(scar.bonds())?,
    };
    let (s_bound, pair_bound) = uncertainty_bounds(&central, sigma)?;
    let mut report = entropy_report(&scar.vec, rhos)?;
    // the lift doubles the dimension and splits mass evenly between the two
    // halves, shifting the Shannon bound by log 2 and the pair by 2 log 2
    report.lower_bound_shannon = Some(s_bound + std::f64::consts::LN_2);
    report.lower_bound_renyi_pair = Some(pair_bound + 2.0 * std::f64::consts::LN_2);

    let vector: Vec<[f64; 2]> = (0..scar.vec.dim()).map(|i| c2a(scar.vec[i])).collect();
    Ok(json!({
        "scar": {
            "family": scar.family.to_string(),
            "B": scar.bonds(),
            "j": scar.j,
            "kappa": scar.kappa,
            "eps1": scar.eps1.as_i32(),
            "eps2": scar.eps2.as_i32(),
            "eigenvalue": c2a(scar.eigenvalue),
            "vector": vector,
        },
        "eigen_residual": residual,
        "entropy": report_json(&report),
    }))
}

fn report_json(report: &EntropyReport<f64>) -> Value {
    let mut renyi = serde_json::Map::new();
    for (rho, value) in &report.renyi {
        renyi.insert(rho.to_string(), json!(value));
    }
    json!({
        "dim": report.dim,
        "shannon": report.shannon,
        "renyi": renyi,
        "renyi_inf": report.renyi_inf,
        "lower_bound_shannon": report.lower_bound_shannon,
        "lower_bound_renyi_pair": report.lower_bound_renyi_pair,
    })
}

// ------------------------------------------------------------ graph loading

#[derive(Serialize, Deserialize)]
struct GraphFile {
    #[serde(rename = "B")]
    b: usize,
    lengths: LengthsField,
    central: CentralField,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LengthsField {
    Named(String),
    Values(Vec<f64>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CentralField {
    Named(String),
    Explicit { explicit: Vec<[f64; 2]> },
}

fn build_graph(args: &GraphArgs) -> Result<(StarGraph64, Value)> {
    if let Some(path) = &args.graph {
        return graph_from_file(path);
    }
    let bonds = args.bonds.context("either --graph or --bonds is required")?;
    let central = match args.central {
        CentralKind::Fourier => CentralScattering::Fourier,
        CentralKind::EtPaley => CentralScattering::EquiTransmittingPaley,
        CentralKind::Kirchhoff => CentralScattering::Kirchhoff,
    };
    let graph = graph_with_lengths(bonds, &args.lengths, central)?;
    let echo = graph_echo(&graph, &args.central.central_name());
    Ok((graph, echo))
}

impl CentralKind {
    fn central_name(self) -> String {
        match self {
            CentralKind::Fourier => "fourier",
            CentralKind::EtPaley => "et-paley",
            CentralKind::Kirchhoff => "kirchhoff",
        }
        .to_string()
    }
}

fn graph_with_lengths(
    bonds: usize,
    lengths: &str,
    central: CentralScattering<f64>,
) -> Result<StarGraph64> {
    if lengths == "sqrt-primes" {
        return Ok(StarGraph::with_sqrt_prime_lengths(bonds, central)?);
    }
    let values = parse_f64_list(lengths).context("parsing --lengths")?;
    if values.len() != bonds {
        bail!("{} lengths given for {} bonds", values.len(), bonds);
    }
    Ok(StarGraph::new(values, central)?)
}

fn parse_graph_file(path: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading graph file {}", path.display()))?;
    let file: GraphFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing graph file {}", path.display()))?;
    Ok(file)
}

fn graph_from_file(path: &Path) -> Result<(StarGraph64, Value)> {
    let file = parse_graph_file(path)?;
    let lengths = match &file.lengths {
        LengthsField::Named(name) if name == "sqrt-primes" => None,
        LengthsField::Named(name) => bail!("unknown lengths keyword {name:?}"),
        LengthsField::Values(values) => {
            if values.len() != file.b {
                bail!("graph file lists {} lengths for B = {}", values.len(), file.b);
            }
            Some(values.clone())
        }
    };
    let (central, central_name) = match &file.central {
        CentralField::Named(name) => (
            match name.as_str() {
                "fourier" => CentralScattering::Fourier,
                "et-paley" => CentralScattering::EquiTransmittingPaley,
                "kirchhoff" => CentralScattering::Kirchhoff,
                other => bail!("unknown central scattering {other:?}"),
            },
            name.clone(),
        ),
        CentralField::Explicit { explicit } => (
            CentralScattering::ExplicitUnitary(explicit_matrix(file.b, explicit)?),
            "explicit".to_string(),
        ),
    };
    let graph = match lengths {
        Some(values) => StarGraph::new(values, central)?,
        None => StarGraph::with_sqrt_prime_lengths(file.b, central)?,
    };
    let echo = graph_echo(&graph, &central_name);
    Ok((graph, echo))
}

fn explicit_matrix(b: usize, entries: &[[f64; 2]]) -> Result<CMat<f64>> {
    if entries.len() != b * b {
        bail!("explicit central matrix has {} entries, want {}", entries.len(), b * b);
    }
    Ok(CMat::from_fn(b, b, |r, c| {
        let [re, im] = entries[r * b + c];
        Complex::new(re, im)
    }))
}

fn graph_echo(graph: &StarGraph64, central_name: &str) -> Value {
    json!({
        "B": graph.bonds(),
        "lengths": graph.lengths().to_vec(),
        "central": central_name,
    })
}

fn read_vector(path: &Path) -> Result<CVec<f64>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading vector {}", path.display()))?;
    let entries: Vec<[f64; 2]> = serde_json::from_str(&text)
        .with_context(|| format!("parsing vector {}", path.display()))?;
    if entries.is_empty() {
        bail!("vector file {} holds no entries", path.display());
    }
    Ok(CVec::from_fn(entries.len(), |i| Complex::new(entries[i][0], entries[i][1])))
}

// ----------------------------------------------------------------- plumbing

fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().with_context(|| format!("bad number {s:?}")))
        .collect()
}

fn parse_rho_list(text: &str) -> Result<Vec<f64>> {
    let rhos = parse_f64_list(text).context("parsing --rho")?;
    for rho in &rhos {
        if *rho <= -1.0 {
            bail!("Renyi order {rho} out of range; orders must exceed -1");
        }
    }
    Ok(rhos)
}

/// 17 significant digits: enough for an exact f64 round trip.
fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn c2a(z: Complex<f64>) -> [f64; 2] {
    [z.re, z.im]
}

fn csv_preamble(config: &Value) -> Result<String> {
    let mut text = format!("# starscar {VERSION}\n");
    let _ = writeln!(text, "# config: {}", serde_json::to_string(config)?);
    Ok(text)
}

fn json_text(body: &Value) -> Result<String> {
    let mut text = serde_json::to_string_pretty(body)?;
    text.push('\n');
    Ok(text)
}

fn out_path(explicit: &Option<PathBuf>, default_name: &str) -> PathBuf {
    match explicit {
        Some(path) => path.clone(),
        None => std::env::var_os(OUTDIR_VAR)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."))
            .join(default_name),
    }
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)
                .with_context(|| format!("creating output directory {}", dir.display()))?;
        }
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
