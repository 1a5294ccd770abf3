use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use cohesion::experiments::{
    enumerate_study, real_study, render_reports, sample_study, ExperimentConfig, DEFAULT_SAMPLES,
};
use cohesion::game::{is_socially_cohesive, CheckOptions, Status, DEFAULT_EXACT_CAP};
use cohesion::graph::{parse_edge_list, write_edge_list};
use cohesion::heuristics::{ExperimentReport, Heuristic};
use cohesion::reduction::build_instance;
use cohesion::{CohesionError, Graph};

const EXIT_PARSE: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_OTHER: u8 = 5;
const EXIT_USAGE: u8 = 64;

/// Social cohesion in popularity games: exact checks, heuristics and
/// experiment runs.
#[derive(Parser, Debug)]
#[command(name = "cohesion-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Root seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Heuristics to run, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_value = "lm,ap")]
    methods: Vec<Heuristic>,
    /// Largest graph for which exhaustive search is attempted.
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Number of random graphs per size in `sample`.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Write the output here (CSV or edge list; a JSON mirror goes next to
    /// it with a `.json` extension) instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run only the quick tests in `check`.
    #[arg(long, global = true)]
    quick_only: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the network in an edge-list file is socially cohesive.
    /// Exit status: 0 cohesive, 1 not cohesive, 2 inconclusive.
    Check { path: PathBuf },
    /// Score the heuristics on every connected graph with `n` nodes.
    Enumerate {
        n: usize,
        /// Skip the exact core-stability check of heuristic structures.
        #[arg(long)]
        no_core_stability: bool,
    },
    /// Score the heuristics on uniform random graphs with `n` nodes.
    Sample {
        n: usize,
        /// Draw connected graphs only.
        #[arg(long)]
        connected_only: bool,
        #[arg(long)]
        no_core_stability: bool,
    },
    /// Run the heuristics on the largest component of a real network.
    Real {
        path: PathBuf,
        /// Dataset name for the report; defaults to the file stem.
        #[arg(long)]
        name: Option<String>,
    },
    /// Build the clique-reduction instance for the graph in `path` and `k`.
    Reduce {
        path: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Merge saved JSON reports into one CSV (or Markdown) table.
    Report {
        #[arg(required = true)]
        reports: Vec<PathBuf>,
        #[arg(long)]
        markdown: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<std::io::Error>().is_some() {
        return EXIT_PARSE;
    }
    match e.downcast_ref::<CohesionError>() {
        Some(CohesionError::Parse { .. } | CohesionError::SelfLoop { .. }) => EXIT_PARSE,
        Some(CohesionError::ExactCapExceeded { .. }) => EXIT_CAP,
        _ => EXIT_OTHER,
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn config(common: &Common, core_stability: bool, connected_only: bool) -> ExperimentConfig {
    ExperimentConfig {
        methods: common.methods.clone(),
        seed: common.seed,
        exact_cap: common.exact_cap,
        core_stability,
        connected_only,
    }
}

/// Writes `text` to `--out` (plus the JSON mirror) or prints it.
fn emit(common: &Common, text: &str, json: Option<&str>) -> Result<()> {
    match &common.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
            if let Some(json) = json {
                let mirror = path.with_extension("json");
                fs::write(&mirror, json)
                    .with_context(|| format!("cannot write {}", mirror.display()))?;
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_report(common: &Common, report: &ExperimentReport) -> Result<()> {
    emit(common, &report.to_csv(), Some(&report.to_json()))
}

fn run(cli: Cli) -> Result<u8> {
    let common = &cli.common;
    match &cli.command {
        Command::Check { path } => {
            let g = read_graph(path)?;
            let opts = CheckOptions {
                exact_cap: common.exact_cap,
                quick_only: common.quick_only,
            };
            let verdict = is_socially_cohesive(&g, &opts)?;
            println!("{}", serde_json::to_string_pretty(&verdict.to_json(&g))?);
            Ok(match verdict.status {
                Status::Cohesive => 0,
                Status::NotCohesive => 1,
                Status::Inconclusive => 2,
            })
        }
        Command::Enumerate {
            n,
            no_core_stability,
        } => {
            let report = enumerate_study(*n, &config(common, !no_core_stability, false))?;
            emit_report(common, &report)?;
            Ok(0)
        }
        Command::Sample {
            n,
            connected_only,
            no_core_stability,
        } => {
            let cfg = config(common, !no_core_stability, *connected_only);
            let report = sample_study(*n, common.samples, &cfg)?;
            emit_report(common, &report)?;
            Ok(0)
        }
        Command::Real { path, name } => {
            let g = read_graph(path)?;
            let name = name.clone().unwrap_or_else(|| {
                path.file_stem()
                    .map_or_else(|| "network".into(), |s| s.to_string_lossy().into_owned())
            });
            let report = real_study(&name, &g, &config(common, false, false))?;
            emit(common, &report.to_csv(), Some(&report.to_json()))?;
            Ok(0)
        }
        Command::Reduce { path, k } => {
            let g = read_graph(path)?;
            if *k <= 2 {
                return Err(
                    CohesionError::InvalidArgument("k must be greater than 2".into()).into(),
                );
            }
            let instance = build_instance(&g, *k)?;
            let sidecar = serde_json::to_string_pretty(&instance.sidecar_json())?;
            match &common.out {
                Some(_) => emit(common, &write_edge_list(&instance.h), Some(&sidecar))?,
                None => {
                    print!("{}", write_edge_list(&instance.h));
                    eprintln!("{sidecar}");
                }
            }
            Ok(0)
        }
        Command::Report { reports, markdown } => {
            let parsed = reports
                .iter()
                .map(|p| {
                    let text = fs::read_to_string(p)
                        .with_context(|| format!("cannot read {}", p.display()))?;
                    serde_json::from_str::<ExperimentReport>(&text)
                        .with_context(|| format!("{} is not a saved report", p.display()))
                })
                .collect::<Result<Vec<_>>>()?;
            emit(common, &render_reports(&parsed, *markdown), None)?;
            Ok(0)
        }
    }
}
