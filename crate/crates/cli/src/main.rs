// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `incolor`: analyze a graph's incidence-coloring bounds, compose colorings
//! across union / Cartesian product / join, or scan whole graph families.
//!
//! Exit codes: 0 success, 1 internal or integrity error, 2 input error.

mod scan;
mod source;

use clap::{Args, Parser, Subcommand, ValueEnum};
use incolor::bounds::{
    analyze, compose_cartesian_coloring, compose_join_coloring, compose_union_coloring,
    AnalyzeOptions, ComposeStrategy, ClassHypotheses, ExactMode, SolverLimitsOption,
};
use incolor::graphs::encode_graph6;
use incolor::incidence::{exact_chi_i, greedy_coloring, verify, ArcOrder, IncidenceColoring};
use incolor::{Error, SolverLimits};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "incolor", version, about = "Incidence coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report bounds (and the exact value when affordable) for one graph.
    Analyze(AnalyzeArgs),
    /// Compose two graphs and a valid coloring of the result.
    Compose(ComposeArgs),
    /// Evaluate a whole spec of graph families into a CSV or JSON table.
    Scan(ScanArgs),
    /// Check a serialized coloring against a graph.
    Check(CheckArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Family spec such as cycle:5 or random_gnp:8:0.4:7.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Path to a graph6 or edge-list file (format autodetected).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Declare the graph planar; planarity is never tested.
    #[arg(long)]
    planar: bool,
    /// Vertex ordering file for the restricted-degeneracy check.
    #[arg(long)]
    ordering: Option<PathBuf>,
    /// Force the exact solver even beyond the guard.
    #[arg(long, conflicts_with = "no_exact")]
    exact: bool,
    /// Report bounds only.
    #[arg(long = "no-exact")]
    no_exact: bool,
    /// Arc-count cap for the exact solvers.
    #[arg(long, default_value_t = SolverLimits::DEFAULT_MAX_ARCS)]
    guard: usize,
    /// Default seed for random families given without one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also export the graph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct ComposeArgs {
    /// Which construction to apply.
    #[arg(value_enum)]
    op: ComposeOp,
    /// First operand: family spec or file path.
    first: String,
    /// Second operand: family spec or file path.
    second: String,
    /// Color the operands with the exact solver (default).
    #[arg(long, conflicts_with = "no_exact")]
    exact: bool,
    /// Color the operands greedily instead of exactly.
    #[arg(long = "no-exact")]
    no_exact: bool,
    #[arg(long, default_value_t = SolverLimits::DEFAULT_MAX_ARCS)]
    guard: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also export the composed graph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComposeOp {
    Union,
    Cartesian,
    Join,
}

#[derive(Args)]
struct CheckArgs {
    /// Family spec such as cycle:5.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Path to a graph6 or edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Coloring file: a JSON array of {tail, head, color}.
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// JSON scan spec file.
    spec: PathBuf,
    /// Output format; overrides the spec file.
    #[arg(long, value_enum)]
    format: Option<scan::ScanFormat>,
    /// Output path; overrides the spec file. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Arc-count cap; overrides the spec file.
    #[arg(long)]
    guard: Option<usize>,
}

/// Errors mapped onto exit codes.
enum CliError {
    /// Exit 2: the input could not be used.
    Input(String),
    /// Exit 1: a solver or checker broke an internal contract.
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Compose(args) => cmd_compose(args),
        Command::Scan(args) => scan::cmd_scan(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn read_ordering(path: &Path) -> Result<Vec<usize>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| CliError::Input(format!("ordering token `{tok}` is not a vertex")))
        })
        .collect()
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let (label, graph) = source::resolve(args.family.as_deref(), args.input.as_deref(), args.seed)?;
    let limits = SolverLimits::new(args.guard);
    let exact = if args.no_exact {
        ExactMode::Skip
    } else if args.exact {
        ExactMode::Force
    } else {
        ExactMode::Auto
    };
    if exact == ExactMode::Auto && 2 * graph.edge_count() > limits.max_arcs {
        eprintln!(
            "warning: {} arcs exceed the guard {}; reporting bounds only (use --exact to force)",
            2 * graph.edge_count(),
            limits.max_arcs
        );
    }
    let ordering = match &args.ordering {
        Some(path) => Some(read_ordering(path)?),
        None => None,
    };
    let options = AnalyzeOptions {
        hypotheses: ClassHypotheses {
            planar: args.planar,
            ordering,
        },
        exact,
        limits: SolverLimitsOption(limits),
    };
    let (report, _) = analyze(&graph, &options)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    value["schema"] = json!(SCHEMA_VERSION);
    value["source"] = json!(label);
    if let Some(dot) = &args.dot {
        std::fs::write(dot, graph.to_dot())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", dot.display())))?;
    }
    emit(&args.out, &serde_json::to_string_pretty(&value).expect("json"))
}

fn cmd_check(args: CheckArgs) -> Result<(), CliError> {
    let (label, graph) = source::resolve(args.family.as_deref(), args.input.as_deref(), args.seed)?;
    let text = std::fs::read_to_string(&args.coloring)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.coloring.display())))?;
    let coloring = IncidenceColoring::from_json(&graph, &text)?;
    let verdict = verify(&graph, &coloring)?;
    let value = json!({
        "schema": SCHEMA_VERSION,
        "source": label,
        "palette": coloring.palette_size,
        "valid": verdict.valid,
        "violations": verdict.violations,
    });
    emit(&args.out, &serde_json::to_string_pretty(&value).expect("json"))
}

fn cmd_compose(args: ComposeArgs) -> Result<(), CliError> {
    let (label1, g1) = source::resolve_spec(&args.first, args.seed)?;
    let (label2, g2) = source::resolve_spec(&args.second, args.seed)?;
    let limits = SolverLimits::new(args.guard);

    let color = |g: &incolor::graphs::Graph| -> Result<IncidenceColoring, CliError> {
        if args.no_exact {
            Ok(greedy_coloring(g, ArcOrder::HeadDegreeDesc))
        } else {
            Ok(exact_chi_i(g, None, None, &limits)?.1)
        }
    };
    let c1 = color(&g1)?;
    let c2 = color(&g2)?;

    let composition = match args.op {
        ComposeOp::Union => compose_union_coloring(&g1, &c1, &g2, &c2)?,
        ComposeOp::Cartesian => compose_cartesian_coloring(&g1, &c1, &g2, &c2)?,
        ComposeOp::Join => compose_join_coloring(&g1, &c1, &g2, &c2, &limits)?,
    };
    let verdict = verify(&composition.graph, &composition.coloring)?;
    if !verdict.valid {
        return Err(CliError::Internal(format!(
            "composed coloring failed the checker with {} violations",
            verdict.violations.len()
        )));
    }

    let graph6 = encode_graph6(&composition.graph).ok();
    let strategy = match composition.strategy {
        ComposeStrategy::Direct => "direct",
        ComposeStrategy::JoinExact => "join-exact",
        ComposeStrategy::JoinCrossPalette => "join-cross-palette",
    };
    let value = json!({
        "schema": SCHEMA_VERSION,
        "op": match args.op {
            ComposeOp::Union => "union",
            ComposeOp::Cartesian => "cartesian",
            ComposeOp::Join => "join",
        },
        "inputs": [
            { "source": label1, "palette": c1.palette_size },
            { "source": label2, "palette": c2.palette_size },
        ],
        "n": composition.graph.vertex_count(),
        "m": composition.graph.edge_count(),
        "graph6": graph6,
        "palette": composition.coloring.palette_size,
        "valid": verdict.valid,
        "strategy": strategy,
        "coloring": composition.coloring.to_records(&composition.graph),
    });
    if let Some(dot) = &args.dot {
        std::fs::write(dot, composition.graph.to_dot())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", dot.display())))?;
    }
    emit(&args.out, &serde_json::to_string_pretty(&value).expect("json"))
}
