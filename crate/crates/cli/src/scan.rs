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

//! Batch scans: expand a spec of graph families into a deterministic
//! instance list, run the bound pipeline on each, and emit one row per
//! instance. Output is byte-identical across runs unless timings are
//! requested.

use crate::{emit, CliError, ScanArgs, SCHEMA_VERSION};
use clap::ValueEnum;
use incolor::bounds::{analyze, lower_bound_domination, AnalyzeOptions, ExactMode, SolverLimitsOption};
use incolor::graphs::GraphFamily;
use incolor::SolverLimits;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
    Json,
}

/// The scan spec file. Family specs may carry inclusive integer ranges
/// (`cycle:3..12`); random families without an explicit seed are
/// instantiated once per entry of `seeds`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSpec {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub families: Vec<String>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub guard: Option<usize>,
    #[serde(default = "default_true")]
    pub exact: bool,
    /// When true, fill the runtime_ms column (breaks byte-identical runs).
    #[serde(default)]
    pub timings: bool,
    #[serde(default)]
    pub format: Option<String>,
    #[serde(default)]
    pub out: Option<String>,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

fn default_true() -> bool {
    true
}

pub const CSV_HEADER: &str =
    "id,n,m,max_degree,gamma,st,chi_prime,lower_dom,constructive_upper,chi_i,sandwich_violation,runtime_ms,error";

#[derive(Debug, Default, Serialize)]
pub struct ScanRow {
    pub id: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub max_degree: Option<usize>,
    pub gamma: Option<usize>,
    pub st: Option<usize>,
    pub chi_prime: Option<usize>,
    pub lower_dom: Option<usize>,
    pub constructive_upper: Option<usize>,
    pub chi_i: Option<usize>,
    pub sandwich_violation: Option<bool>,
    pub runtime_ms: Option<u128>,
    pub error: Option<String>,
}

impl ScanRow {
    fn csv_line(&self) -> String {
        fn cell<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        let error = self
            .error
            .as_deref()
            .map(|e| {
                if e.contains(',') || e.contains('"') {
                    format!("\"{}\"", e.replace('"', "\"\""))
                } else {
                    e.to_string()
                }
            })
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.id,
            cell(&self.n),
            cell(&self.m),
            cell(&self.max_degree),
            cell(&self.gamma),
            cell(&self.st),
            cell(&self.chi_prime),
            cell(&self.lower_dom),
            cell(&self.constructive_upper),
            cell(&self.chi_i),
            cell(&self.sandwich_violation),
            cell(&self.runtime_ms),
            error
        )
    }
}

/// Expands inclusive integer ranges inside a family spec's arguments.
fn expand_ranges(spec: &str) -> Vec<String> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, r),
        None => return vec![spec.to_string()],
    };
    let args: Vec<&str> = rest.split(':').collect();
    let mut variants: Vec<Vec<String>> = vec![Vec::new()];
    for arg in &args {
        let values: Vec<String> = match arg.split_once("..") {
            Some((lo, hi)) => match (lo.parse::<usize>(), hi.parse::<usize>()) {
                (Ok(lo), Ok(hi)) if lo <= hi => (lo..=hi).map(|v| v.to_string()).collect(),
                _ => vec![arg.to_string()],
            },
            None => vec![arg.to_string()],
        };
        let mut next = Vec::new();
        for prefix in &variants {
            for value in &values {
                let mut row = prefix.clone();
                row.push(value.clone());
                next.push(row);
            }
        }
        variants = next;
    }
    variants
        .into_iter()
        .map(|args| format!("{name}:{}", args.join(":")))
        .collect()
}

fn is_random_without_seed(spec: &str) -> bool {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, r),
        None => return false,
    };
    matches!(name, "random_gnp" | "random_ktree") && rest.split(':').count() == 2
}

/// Deterministic instance list: families in listed order, ranges expanded
/// row-major, seeds innermost.
pub fn instances(spec: &ScanSpec) -> Result<Vec<GraphFamily>, CliError> {
    let mut out = Vec::new();
    for family in &spec.families {
        for concrete in expand_ranges(family) {
            if is_random_without_seed(&concrete) {
                for &seed in &spec.seeds {
                    out.push(GraphFamily::parse_with_seed(&concrete, seed)?);
                }
            } else {
                out.push(GraphFamily::parse(&concrete)?);
            }
        }
    }
    Ok(out)
}

fn run_instance(family: &GraphFamily, limits: SolverLimits, exact: bool, timings: bool) -> ScanRow {
    let mut row = ScanRow {
        id: family.id(),
        ..ScanRow::default()
    };
    let started = Instant::now();
    let graph = match family.generate() {
        Ok(g) => g,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.n = Some(graph.vertex_count());
    row.m = Some(graph.edge_count());
    row.max_degree = Some(graph.max_degree());

    let options = AnalyzeOptions {
        exact: if exact { ExactMode::Auto } else { ExactMode::Skip },
        limits: SolverLimitsOption(limits),
        ..AnalyzeOptions::default()
    };
    match analyze(&graph, &options) {
        Ok((_, parts)) => {
            row.gamma = parts.gamma;
            row.st = parts.star_arboricity;
            row.chi_prime = parts.chromatic_index;
            row.lower_dom = parts.gamma.map(|gamma| lower_bound_domination(&graph, gamma));
            row.constructive_upper = parts.constructive_palette;
            row.chi_i = parts.exact;
            row.sandwich_violation = match (row.lower_dom, parts.exact, parts.constructive_palette) {
                (Some(lo), Some(chi), Some(hi)) => Some(!(lo <= chi && chi <= hi)),
                _ => None,
            };
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    if timings {
        row.runtime_ms = Some(started.elapsed().as_millis());
    }
    row
}

pub fn cmd_scan(args: ScanArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.spec.display())))?;
    let spec: ScanSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.spec.display())))?;
    if spec.schema != SCHEMA_VERSION {
        return Err(CliError::Input(format!(
            "unsupported scan spec schema {} (expected {SCHEMA_VERSION})",
            spec.schema
        )));
    }
    let limits = SolverLimits::new(args.guard.or(spec.guard).unwrap_or(SolverLimits::DEFAULT_MAX_ARCS));
    let format = args.format.unwrap_or(match spec.format.as_deref() {
        Some("json") => ScanFormat::Json,
        Some("csv") | None => ScanFormat::Csv,
        Some(other) => {
            return Err(CliError::Input(format!(
                "unknown scan format `{other}` (expected csv or json)"
            )))
        }
    });
    let out = args
        .out
        .clone()
        .or_else(|| spec.out.as_ref().map(std::path::PathBuf::from));

    let rows: Vec<ScanRow> = instances(&spec)?
        .iter()
        .map(|family| run_instance(family, limits, spec.exact, spec.timings))
        .collect();

    let rendered = match format {
        ScanFormat::Csv => {
            let mut text = String::from(CSV_HEADER);
            text.push('\n');
            for row in &rows {
                let _ = writeln!(text, "{}", row.csv_line());
            }
            text
        }
        ScanFormat::Json => {
            let value = json!({ "schema": SCHEMA_VERSION, "rows": rows });
            serde_json::to_string_pretty(&value).expect("rows serialize")
        }
    };
    emit(&out, rendered.trim_end_matches('\n'))
}
