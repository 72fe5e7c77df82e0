use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use shapecalc::batch::map_seeds;
use shapecalc::fields::{cosines_field, nd_pythagoras_field, pythagoras_field, sines_field};
use shapecalc::hadamard::hadamard_derivative;
use shapecalc::theorems::{
    random_hadamard_instance, random_right_simplex, random_triangle, verify_law_of_cosines,
    verify_law_of_sines, verify_nd_pythagoras, verify_pythagoras, LegMode, TriangleKind,
};
use shapecalc::{
    AffineDensity, AffineField, Side, Simplex, TheoremId, Tolerance, Triangle, Vector,
};

use crate::error::CliError;
use crate::report::{Entry, RunReport};
use crate::shape::{parse_shape, ShapeDocument};

#[derive(Debug, Parser)]
#[command(
    name = "shapecalc",
    version,
    about = "Shape derivatives on simplices and the theorems they prove"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify a theorem on a shape file or a seeded batch of random instances.
    Verify(VerifyArgs),
    /// Evaluate the shape derivative three ways and report the residuals.
    Derive(DeriveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Pythagoras,
    Sines,
    Cosines,
    NdPythagoras,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Pythagoras => TheoremId::Pythagoras,
            TheoremArg::Sines => TheoremId::Sines,
            TheoremArg::Cosines => TheoremId::Cosines,
            TheoremArg::NdPythagoras => TheoremId::NdPythagoras,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LegsArg {
    Orthonormal,
    Scaled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    General,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "random"])))]
pub struct SourceArgs {
    /// Shape document (JSON).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Generate seeded random instances instead of reading a file.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: TheoremArg,
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value_t = LegsArg::Orthonormal)]
    pub legs: LegsArg,
    /// Random triangle family for `sines` and `cosines`.
    #[arg(long, value_enum, default_value_t = KindArg::General)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 1e-12)]
    pub tol_abs: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol_rel: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DeriveArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// `pythagoras`, `sines:a|b|c`, `cosines`, `nd-pythagoras`, `identity`,
    /// or `{"matrix": [[..]], "offset": [..]}`. Random when omitted with
    /// `--random`.
    #[arg(long)]
    pub field: Option<String>,
    /// `one` or `{"gradient": [..], "constant": c}`. Random when omitted
    /// with `--random`, otherwise `one`.
    #[arg(long)]
    pub density: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Cli {
    pub fn output(&self) -> &OutputArgs {
        match &self.command {
            Command::Verify(a) => &a.output,
            Command::Derive(a) => &a.output,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    matrix: Vec<Vec<f64>>,
    offset: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DensitySpec {
    gradient: Vec<f64>,
    constant: f64,
}

fn json_error(e: serde_json::Error) -> CliError {
    if e.is_data() {
        CliError::Validation(e.to_string())
    } else {
        CliError::Parse(e.to_string())
    }
}

fn read_shape(path: &Path) -> Result<ShapeDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_shape(&text)
}

/// Builds a field from its command-line spec for the shape `s`. Triangle
/// fields use `labels` (default `A, B, C` = vertices 0, 1, 2).
pub fn parse_field(
    spec: &str,
    s: &Simplex,
    labels: [usize; 3],
    hyp_index: usize,
) -> Result<AffineField, CliError> {
    let triangle = || Triangle::from_simplex(s, labels).map_err(CliError::from);
    let spec = spec.trim();
    let field = match spec {
        "pythagoras" => pythagoras_field(&triangle()?),
        "cosines" => cosines_field(&triangle()?),
        "sines:a" => sines_field(&triangle()?, Side::A),
        "sines:b" => sines_field(&triangle()?, Side::B),
        "sines:c" => sines_field(&triangle()?, Side::C),
        "nd-pythagoras" => nd_pythagoras_field(s, hyp_index)?,
        "identity" => AffineField::identity(s.dim()),
        _ if spec.starts_with('{') => {
            let raw: FieldSpec = serde_json::from_str(spec).map_err(json_error)?;
            AffineField::new(raw.matrix, Vector::new(raw.offset)?)?
        }
        other => return Err(CliError::Validation(format!("unknown field `{other}`"))),
    };
    if field.dim() != s.dim() {
        return Err(shapecalc::Error::DimensionMismatch {
            expected: s.dim(),
            found: field.dim(),
        }
        .into());
    }
    Ok(field)
}

pub fn parse_density(spec: &str, dim: usize) -> Result<AffineDensity, CliError> {
    let spec = spec.trim();
    let density = if spec == "one" {
        AffineDensity::one(dim)
    } else if spec.starts_with('{') {
        let raw: DensitySpec = serde_json::from_str(spec).map_err(json_error)?;
        AffineDensity::new(Vector::new(raw.gradient)?, raw.constant)?
    } else {
        return Err(CliError::Validation(format!("unknown density `{spec}`")));
    };
    if density.dim() != dim {
        return Err(shapecalc::Error::DimensionMismatch {
            expected: dim,
            found: density.dim(),
        }
        .into());
    }
    Ok(density)
}

/// Runs the parsed command. `command` is echoed into the report.
pub fn execute(cli: &Cli, command: Vec<String>) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let entries = match &cli.command {
        Command::Verify(args) => verify_entries(args)?,
        Command::Derive(args) => derive_entries(args)?,
    };
    Ok(RunReport::new(
        command,
        entries,
        start.elapsed().as_secs_f64(),
    ))
}

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn collect<T>(results: Vec<Result<T, CliError>>) -> Result<Vec<T>, CliError> {
    results.into_iter().collect()
}

fn verify_entries(args: &VerifyArgs) -> Result<Vec<Entry>, CliError> {
    let theorem = TheoremId::from(args.theorem);
    let tol = Tolerance {
        abs: args.tol_abs,
        rel: args.tol_rel,
    };
    if !(tol.abs >= 0.0 && tol.rel >= 0.0) {
        return Err(CliError::Validation(
            "tolerances must be non-negative".into(),
        ));
    }
    let src = &args.source;

    if let Some(path) = &src.input {
        let doc = read_shape(path)?;
        let report = match theorem {
            TheoremId::Pythagoras => verify_pythagoras(&doc.triangle()?, tol)?,
            TheoremId::Sines => verify_law_of_sines(&doc.triangle()?, tol)?,
            TheoremId::Cosines => verify_law_of_cosines(&doc.triangle()?, tol)?,
            TheoremId::NdPythagoras => verify_nd_pythagoras(&doc.right_simplex()?, tol)?,
        };
        return Ok(vec![Entry::theorem(0, None, report)]);
    }

    let dim = match (theorem, src.dim) {
        (TheoremId::NdPythagoras, d) => d.unwrap_or(3),
        (_, None | Some(2)) => 2,
        (_, Some(d)) => {
            return Err(CliError::Validation(format!(
                "{theorem} works on triangles, got --dim {d}"
            )))
        }
    };
    let kind = match (theorem, args.kind) {
        (TheoremId::Pythagoras, _) | (_, KindArg::Right) => TriangleKind::Right,
        (_, KindArg::General) => TriangleKind::General,
        (_, KindArg::Obtuse) => TriangleKind::Obtuse,
    };
    let legs = match args.legs {
        LegsArg::Orthonormal => LegMode::Orthonormal,
        LegsArg::Scaled => LegMode::Scaled,
    };
    let results = map_seeds(src.seed, src.count, |seed| -> Result<_, CliError> {
        let report = match theorem {
            TheoremId::Pythagoras => verify_pythagoras(&random_triangle(seed, kind)?, tol)?,
            TheoremId::Sines => verify_law_of_sines(&random_triangle(seed, kind)?, tol)?,
            TheoremId::Cosines => verify_law_of_cosines(&random_triangle(seed, kind)?, tol)?,
            TheoremId::NdPythagoras => {
                verify_nd_pythagoras(&random_right_simplex(seed, dim, legs)?, tol)?
            }
        };
        Ok(report)
    });
    Ok(collect(results)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| Entry::theorem(i, Some(shapecalc::batch::instance_seed(src.seed, i)), r))
        .collect())
}

fn derive_entries(args: &DeriveArgs) -> Result<Vec<Entry>, CliError> {
    let src = &args.source;
    if let Some(path) = &src.input {
        let doc = read_shape(path)?;
        let s = doc.simplex()?;
        let labels = doc.labels.unwrap_or_default();
        let spec = args
            .field
            .as_deref()
            .ok_or_else(|| CliError::Validation("--field is required with --input".into()))?;
        let field = parse_field(spec, &s, [labels.a, labels.b, labels.c], doc.hyp_index())?;
        let density = parse_density(args.density.as_deref().unwrap_or("one"), s.dim())?;
        let report = hadamard_derivative(&s, &density, &field)?;
        return Ok(vec![Entry::derivative(0, None, report)]);
    }

    let dim = src.dim.unwrap_or(2);
    if !(2..=16).contains(&dim) {
        return Err(shapecalc::Error::DimensionOutOfRange(dim, 2, 16).into());
    }
    let results = map_seeds(src.seed, src.count, |seed| -> Result<_, CliError> {
        let inst = random_hadamard_instance(seed, dim)?;
        let field = match &args.field {
            Some(spec) => parse_field(spec, &inst.simplex, [0, 1, 2], 0)?,
            None => inst.field,
        };
        let density = match &args.density {
            Some(spec) => parse_density(spec, dim)?,
            None => inst.density,
        };
        Ok(hadamard_derivative(&inst.simplex, &density, &field)?)
    });
    Ok(collect(results)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| Entry::derivative(i, Some(shapecalc::batch::instance_seed(src.seed, i)), r))
        .collect())
}
