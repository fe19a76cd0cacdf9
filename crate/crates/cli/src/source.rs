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

//! Graph input resolution: family specs and graph files, with graph6 /
//! edge-list autodetection.

use crate::CliError;
use incolor::graphs::{parse_edge_list, parse_graph6, Graph, GraphFamily};
use std::path::Path;

/// Loads a graph file, picking the format by shape: a first line of two
/// integers is an edge list, anything else one graph6 word.
pub fn load_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let first_line = text.lines().next().unwrap_or("");
    let tokens: Vec<&str> = first_line.split_whitespace().collect();
    let looks_like_edge_list =
        tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok());
    let parsed = if looks_like_edge_list {
        parse_edge_list(&text)
    } else {
        parse_graph6(text.trim())
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Resolves `--family` / `--input` for `analyze`.
pub fn resolve(
    family: Option<&str>,
    input: Option<&Path>,
    seed: u64,
) -> Result<(String, Graph), CliError> {
    match (family, input) {
        (Some(spec), None) => resolve_spec(spec, seed),
        (None, Some(path)) => Ok((path.display().to_string(), load_graph_file(path)?)),
        (None, None) => Err(CliError::Input(
            "provide a graph via --family or --input".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap marks the flags as conflicting"),
    }
}

/// Resolves one positional operand: an existing file path wins, otherwise
/// the string must be a family spec.
pub fn resolve_spec(spec: &str, seed: u64) -> Result<(String, Graph), CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok((spec.to_string(), load_graph_file(path)?));
    }
    let family = GraphFamily::parse_with_seed(spec, seed).map_err(CliError::from)?;
    let graph = family.generate().map_err(CliError::from)?;
    Ok((family.id(), graph))
}
