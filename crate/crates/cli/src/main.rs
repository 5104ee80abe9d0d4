mod analyze;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shk_core::battery::{BatteryConfig, Check};
use shk_core::format::{write_complex, write_ideal};
use shk_core::ideal::{complex_of_ideal, dual_ideal, stanley_reisner_bridge, IdealView};
use shk_core::SearchLimit;
use thiserror::Error;

use crate::analyze::{analyze, parse_fields, replay, select_props, AnalyzeOptions, Bundle};
use crate::input::Input;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Core(#[from] shk_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_capacity() => 3,
            _ => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "shk", version, about = "Decide combinatorial and homological properties of simplicial complexes and monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide properties of a complex (.cx), monomial ideal (.mi) or graph (.g).
    Analyze(AnalyzeArgs),
    /// Alexander duality between complexes and squarefree ideals.
    Dualize(DualizeArgs),
    /// Randomized cross-check of the relations between the properties.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Run every search to completion (the default).
    #[arg(long, conflicts_with = "budget")]
    exact: bool,
    /// Stop searches after N nodes and answer unknown.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

impl SearchArgs {
    fn limit(&self) -> SearchLimit {
        match self.budget {
            Some(n) => SearchLimit::Nodes(n),
            None => SearchLimit::Exact,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file.
    #[arg(required_unless_present = "replay")]
    path: Option<PathBuf>,
    /// `all` or a comma separated list, e.g. `vdism,scalable,icm,dismissing:c`.
    #[arg(long, default_value = "all")]
    props: String,
    /// Fields for homological properties: q, gf2, gf3, gf32003.
    #[arg(long, default_value = "q,gf2,gf3")]
    fields: String,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    json: bool,
    /// Write a replay bundle for every certificate into this directory.
    #[arg(long, value_name = "DIR")]
    certs_out: Option<PathBuf>,
    /// Re-validate a certificate bundle instead of analyzing.
    #[arg(long, value_name = "FILE", conflicts_with = "path")]
    replay: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum View {
    /// Facet complements: the Alexander dual ideal, and back.
    Dual,
    /// Minimal non-faces: the Stanley–Reisner ideal, and back.
    Sr,
}

#[derive(Args)]
struct DualizeArgs {
    /// A complex (.cx) or a squarefree ideal (.mi).
    path: PathBuf,
    #[arg(long, value_enum, default_value = "dual")]
    view: View,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma separated subset of: hierarchy, duality, skeletal, cycles,
    /// cochordal, mdim1, truncation, polarization.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value_t = 7)]
    vertices: usize,
    #[arg(long, default_value_t = 8)]
    facets: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "q,gf2,gf3")]
    fields: String,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    json: bool,
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, CliError> {
    if let Some(path) = &args.replay {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let bundle: Bundle =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(match replay(&bundle)? {
            Ok(()) => {
                println!("accepted: {} certificate for {}", bundle.certificate.kind(), bundle.property);
                0
            }
            Err(why) => {
                println!("rejected: {why}");
                1
            }
        });
    }
    let path = args.path.as_ref().expect("required unless --replay");
    let input = Input::load(path)?;
    let opts = AnalyzeOptions {
        props: select_props(&args.props, &input)?,
        fields: parse_fields(&args.fields)?,
        limit: args.search.limit(),
    };
    let report = analyze(input, &opts);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
    } else {
        print!("{}", report.to_text());
    }
    if let Some(dir) = &args.certs_out {
        let n = report.write_certificates(dir)?;
        eprintln!("wrote {n} certificate bundle(s) to {}", dir.display());
    }
    Ok(if report.has_capacity_error() {
        3
    } else if report.has_input_error() {
        2
    } else {
        0
    })
}

fn cmd_dualize(args: DualizeArgs) -> Result<u8, CliError> {
    let text = match Input::load(&args.path)? {
        Input::Complex(c) => match args.view {
            View::Dual => write_ideal(&dual_ideal(&c)?),
            View::Sr => write_ideal(&stanley_reisner_bridge(&c)?.0),
        },
        Input::Ideal(i) => {
            let view = match args.view {
                View::Dual => IdealView::Dual,
                View::Sr => IdealView::StanleyReisner,
            };
            write_complex(&complex_of_ideal(&i, view)?)
        }
        Input::Graph(_) => return Err(CliError::Input("dualize takes a .cx or .mi file".into())),
    };
    emit(&text, args.output.as_ref())?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    if args.vertices > 12 {
        return Err(CliError::Input("verify supports at most 12 vertices".into()));
    }
    let checks: Vec<Check> = if args.checks.trim() == "all" {
        Check::ALL.to_vec()
    } else {
        let mut out = Vec::new();
        for token in args.checks.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let c: Check = token.parse()?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    };
    let cfg = BatteryConfig {
        vertices: args.vertices,
        facets: args.facets,
        trials: args.trials,
        seed: args.seed,
        fields: parse_fields(&args.fields)?,
        limit: args.search.limit(),
    };
    let summaries = verify::run(&checks, &cfg);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&verify::to_json(&summaries, &cfg)).expect("serializable"));
    } else {
        print!("{}", verify::to_text(&summaries));
    }
    Ok(if summaries.iter().any(|s| s.violations() > 0) { 1 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Dualize(d) => cmd_dualize(d),
        Command::Verify(v) => cmd_verify(v),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
