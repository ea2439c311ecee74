//! Command-line front end for the barycev geometry kernel.
//!
//! [`parse_args`] turns an argument vector into a validated [`Command`];
//! [`run`] executes it against an output sink and returns the exit status.

mod args;
mod render;
mod verify;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use barycev_core::locus::ScanRegion;
use barycev_core::{BaryPoint, CenterKind, GeomError, Scalar, Triangle};
use clap::error::{ContextKind, ContextValue, ErrorKind};
use clap::Parser;
use thiserror::Error;

pub use verify::{verify_triangle, CheckOutcome, CheckStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

impl Format {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(CliError::InvalidValue { flag: "format", value: other.into() }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Kariya,
    Franke,
    Excenter(CenterKind),
}

impl Construction {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "kariya" => Ok(Construction::Kariya),
            "franke" => Ok(Construction::Franke),
            "excenter_a" => Ok(Construction::Excenter(CenterKind::ExcenterA)),
            "excenter_b" => Ok(Construction::Excenter(CenterKind::ExcenterB)),
            "excenter_c" => Ok(Construction::Excenter(CenterKind::ExcenterC)),
            other => Err(CliError::InvalidValue { flag: "construction", value: other.into() }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Construction::Kariya => "kariya",
            Construction::Franke => "franke",
            Construction::Excenter(kind) => kind.name(),
        }
    }
}

/// Side lengths as given; triangle validity is a domain check done by [`run`].
pub type Sides = [Scalar; 3];

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Verify { sides: Sides, k_set: Vec<Scalar>, format: Format },
    Point { sides: Sides, construction: Construction, k: Scalar, format: Format },
    Conditions { sides: Sides, point: [Scalar; 3], format: Format },
    Pedal { sides: Sides, point: [Scalar; 3], k: Scalar, format: Format },
    Locus { sides: Sides, region: ScanRegion, output: Option<PathBuf>, format: Format },
}

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version`; the payload is the rendered text.
    #[error("{0}")]
    Help(String),
    #[error("unknown flag {0}")]
    UnknownFlag(String),
    #[error("missing required flag --{0}")]
    MissingRequired(String),
    #[error("--{flag}: malformed rational {value:?} (use an integer or num/den)")]
    MalformedRational { flag: &'static str, value: String },
    #[error("--{flag}: invalid value {value:?}")]
    InvalidValue { flag: &'static str, value: String },
    #[error("--{flag}: expected {expected} comma-separated values, got {got}")]
    WrongArity { flag: &'static str, expected: usize, got: usize },
    #[error("--k: scale factor must be nonzero")]
    ZeroK,
    #[error("--format {format} is not available for {command}")]
    UnsupportedFormat { format: Format, command: &'static str },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] GeomError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_status(&self) -> i32 {
        match self {
            CliError::Help(_) => EXIT_OK,
            CliError::Domain(_) | CliError::Io(_) => EXIT_DOMAIN,
            _ => EXIT_USAGE,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Help(_) => "help",
            CliError::UnknownFlag(_) => "unknown_flag",
            CliError::MissingRequired(_) => "missing_required",
            CliError::MalformedRational { .. } => "malformed_rational",
            CliError::InvalidValue { .. } => "invalid_value",
            CliError::WrongArity { .. } => "wrong_arity",
            CliError::ZeroK => "zero_k",
            CliError::UnsupportedFormat { .. } => "unsupported_format",
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "io",
        }
    }
}

fn rational(flag: &'static str, s: &str) -> Result<Scalar, CliError> {
    s.trim().parse().map_err(|e| match e {
        GeomError::DivisionByZero => CliError::Domain(e),
        _ => CliError::MalformedRational { flag, value: s.trim().into() },
    })
}

fn rationals(flag: &'static str, s: &str) -> Result<Vec<Scalar>, CliError> {
    s.split(',').map(|part| rational(flag, part)).collect()
}

fn triple(flag: &'static str, s: &str) -> Result<[Scalar; 3], CliError> {
    let v = rationals(flag, s)?;
    let got = v.len();
    v.try_into().map_err(|_| CliError::WrongArity { flag, expected: 3, got })
}

fn nonzero_k(s: &str) -> Result<Scalar, CliError> {
    let k = rational("k", s)?;
    if k.is_zero() {
        return Err(CliError::ZeroK);
    }
    Ok(k)
}

fn flag_name(arg: &str) -> String {
    let name = arg.split([' ', '=']).next().unwrap_or(arg);
    name.trim_start_matches('-').to_string()
}

fn from_clap(err: clap::Error) -> CliError {
    let invalid = || match err.get(ContextKind::InvalidArg) {
        Some(ContextValue::String(s)) => s.clone(),
        Some(ContextValue::Strings(v)) => v.first().cloned().unwrap_or_default(),
        _ => String::new(),
    };
    match err.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            CliError::Help(err.render().to_string())
        }
        ErrorKind::UnknownArgument => CliError::UnknownFlag(invalid()),
        ErrorKind::MissingRequiredArgument => CliError::MissingRequired(flag_name(&invalid())),
        _ => CliError::Usage(err.render().to_string().trim_end().to_string()),
    }
}

/// Parses an argument vector, without the program name, into a [`Command`].
pub fn parse_args<I, S>(argv: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let full = std::iter::once(std::ffi::OsString::from("barycev")).chain(argv.into_iter().map(Into::into));
    let cli = args::Cli::try_parse_from(full).map_err(from_clap)?;
    let (common, name) = match &cli.command {
        args::Sub::Verify { common, .. } => (common, "verify"),
        args::Sub::Point { common, .. } => (common, "point"),
        args::Sub::Conditions { common, .. } => (common, "conditions"),
        args::Sub::Pedal { common, .. } => (common, "pedal"),
        args::Sub::Locus { common, .. } => (common, "locus"),
    };
    let triangle = common.triangle.as_deref().ok_or_else(|| CliError::MissingRequired("triangle".into()))?;
    let sides = triple("triangle", triangle)?;
    let format = Format::parse(&common.format)?;
    if format == Format::Svg && !matches!(name, "pedal" | "locus") {
        return Err(CliError::UnsupportedFormat { format, command: name });
    }
    let required = |v: &Option<String>, flag: &str| v.clone().ok_or_else(|| CliError::MissingRequired(flag.into()));

    Ok(match cli.command {
        args::Sub::Verify { k_set, .. } => {
            let k_set = match k_set {
                Some(s) => rationals("k-set", &s)?,
                None => barycev_core::default_k_set(),
            };
            if k_set.iter().any(Scalar::is_zero) {
                return Err(CliError::ZeroK);
            }
            Command::Verify { sides, k_set, format }
        }
        args::Sub::Point { construction, k, .. } => Command::Point {
            sides,
            construction: Construction::parse(&required(&construction, "construction")?)?,
            k: nonzero_k(&required(&k, "k")?)?,
            format,
        },
        args::Sub::Conditions { point, .. } => {
            Command::Conditions { sides, point: triple("point", &required(&point, "point")?)?, format }
        }
        args::Sub::Pedal { point, k, .. } => {
            Command::Pedal { sides, point: triple("point", &required(&point, "point")?)?, k: nonzero_k(&k)?, format }
        }
        args::Sub::Locus { region, extended, resolution, output, .. } => {
            let mut scan = if extended { ScanRegion::extended_region() } else { ScanRegion::default_region() };
            if let Some(region) = region {
                let bounds = region
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<f64>().map_err(|_| CliError::InvalidValue { flag: "region", value: v.into() })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let [a0, a1, b0, b1] = bounds[..] else {
                    return Err(CliError::WrongArity { flag: "region", expected: 4, got: bounds.len() });
                };
                scan = ScanRegion::new((a0, a1), (b0, b1), resolution).map_err(CliError::Usage)?;
            }
            scan.resolution = resolution;
            scan.validate().map_err(CliError::Usage)?;
            Command::Locus { sides, region: scan, output, format }
        }
    })
}

fn triangle(sides: &Sides) -> Result<Triangle, CliError> {
    let [a, b, c] = sides.clone();
    Ok(Triangle::new(a, b, c)?)
}

fn point(coords: &[Scalar; 3]) -> Result<BaryPoint, CliError> {
    let [a, b, c] = coords.clone();
    Ok(BaryPoint::new(a, b, c)?.normalize()?)
}

/// Builds the report for `cmd`. Returns the rendered output and whether every
/// check passed (only `verify` can report failures).
pub fn execute(cmd: &Command) -> Result<(String, bool), CliError> {
    match cmd {
        Command::Verify { sides, k_set, format } => {
            let t = triangle(sides)?;
            let outcomes = verify_triangle(&t, k_set);
            let ok = outcomes.iter().all(|o| o.status != CheckStatus::Fail);
            Ok((render::verify(&t, k_set, &outcomes, *format), ok))
        }
        Command::Point { sides, construction, k, format } => {
            let t = triangle(sides)?;
            let x = match construction {
                Construction::Kariya => barycev_core::kariya_point(&t, k)?,
                Construction::Franke => barycev_core::franke_point(&t, k)?,
                Construction::Excenter(kind) => barycev_core::excenter_point(&t, *kind, k)?,
            };
            Ok((render::point(*construction, k, &x, *format), true))
        }
        Command::Conditions { sides, point: coords, format } => {
            let t = triangle(sides)?;
            let p = point(coords)?;
            let values = barycev_core::condition_values(&t, &p)?;
            let holds = barycev_core::concurrence_conditions_hold(&t, &p);
            Ok((render::conditions(&p, &values, holds, *format), true))
        }
        Command::Pedal { sides, point: coords, k, format } => {
            let t = triangle(sides)?;
            let p = point(coords)?;
            Ok((render::pedal(&t, &p, k, *format)?, true))
        }
        Command::Locus { sides, region, format, .. } => {
            let t = triangle(sides)?;
            let report = barycev_core::locus::explore(&t, region, &Default::default());
            Ok((render::locus(&t, &report, *format)?, true))
        }
    }
}

fn write_error(err: &CliError, json: bool, stderr: &mut dyn Write) {
    let _ = if json {
        let body = serde_json::json!({
            "schema_version": "1",
            "error": { "code": err.code(), "message": err.to_string() },
        });
        writeln!(stderr, "{body}")
    } else {
        writeln!(stderr, "error[{}]: {err}", err.code())
    };
}

/// Runs a parsed command, writing the report to `out` (or the `--output`
/// file) and errors to `err`. Returns the exit status.
pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let json = matches!(
        cmd,
        Command::Verify { format: Format::Json, .. }
            | Command::Point { format: Format::Json, .. }
            | Command::Conditions { format: Format::Json, .. }
            | Command::Pedal { format: Format::Json, .. }
            | Command::Locus { format: Format::Json, .. }
    );
    let result = execute(cmd).and_then(|(text, ok)| {
        match cmd {
            Command::Locus { output: Some(path), .. } => std::fs::write(path, &text)?,
            _ => out.write_all(text.as_bytes())?,
        }
        Ok(ok)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_DOMAIN,
        Err(e) => {
            write_error(&e, json, err);
            e.exit_status()
        }
    }
}

/// Parses and runs `argv`, the entry point of the binary.
pub fn main_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => run(&cmd, out, err),
        Err(CliError::Help(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            write_error(&e, false, err);
            e.exit_status()
        }
    }
}
