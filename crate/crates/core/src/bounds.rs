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

//! Bounds on the incidence chromatic number and the composed colorings:
//! the constructive `chi_prime + st` upper bound, the domination-based lower
//! bound with its regular-graph form and necessary conditions, the named
//! per-class upper bounds, and aggregation into a [`BoundReport`].

mod compose;

pub use compose::{
    compose_cartesian_coloring, compose_join_coloring, compose_union_coloring, ComposeStrategy,
    Composition,
};

use crate::decomp::{
    self, chromatic_index_exact, edge_coloring_vizing, is_proper_edge_coloring,
    star_arboricity_exact, EdgeColoring, StarForestDecomposition,
};
use crate::graphs::{
    restricted_degeneracy, structure_report, Graph, StructureReport,
};
use crate::incidence::{self, arcs, verify, ArcColor, IncidenceColoring};
use crate::{Error, Result, SolverLimits};
use num_integer::Integer;
use serde::Serialize;

/// Builds the incidence coloring behind `chi_i <= chi_prime + st`.
///
/// Arcs into the center of each star take that part's color, one color per
/// part. The remaining arcs, exactly one per edge, inherit their edge's
/// color offset past the part colors. Part colors occupy
/// `0..parts`, edge colors `parts..parts + ec.palette_size`.
pub fn construct_star_edge_coloring(
    g: &Graph,
    sfd: &StarForestDecomposition,
    ec: &EdgeColoring,
) -> Result<IncidenceColoring> {
    // Validate the decomposition: parts are star forests partitioning E.
    let mut covering: Vec<(usize, usize)> = sfd.parts.concat();
    covering.sort_unstable();
    if covering != g.edges() {
        return Err(Error::InvalidInput(
            "decomposition parts do not partition the edge set".into(),
        ));
    }
    for part in &sfd.parts {
        if !decomp::is_star_forest(g, part) {
            return Err(Error::InvalidInput(
                "decomposition part is not a star forest".into(),
            ));
        }
    }
    if !is_proper_edge_coloring(g, ec) {
        return Err(Error::InvalidInput(
            "edge coloring is not proper or not total".into(),
        ));
    }

    let arc_list = arcs(g);
    let edge_ids: std::collections::HashMap<(usize, usize), usize> = g
        .edges()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let part_count = sfd.parts.len();
    let mut colors = vec![u16::MAX; arc_list.len()];
    for (part_color, part) in sfd.parts.iter().enumerate() {
        for comp in decomp::star_components(g.vertex_count(), part) {
            for (u, v) in comp.edges {
                let leaf = if u == comp.center { v } else { u };
                let into_center = incidence::Arc::new(leaf, comp.center);
                let out_of_center = into_center.reversed();
                let i = incidence::arc_index(&arc_list, into_center).expect("arc exists");
                colors[i] = part_color as u16;
                let j = incidence::arc_index(&arc_list, out_of_center).expect("arc exists");
                let edge = (u.min(v), u.max(v));
                let ec_color = ec.colors[edge_ids[&edge]];
                colors[j] = (part_count + ec_color) as u16;
            }
        }
    }
    debug_assert!(colors.iter().all(|&c| c != u16::MAX));
    let coloring = IncidenceColoring::new(colors, part_count + ec.palette_size);
    let verdict = verify(g, &coloring)?;
    if !verdict.valid {
        return Err(Error::Integrity(format!(
            "constructed coloring has {} conflicts",
            verdict.violations.len()
        )));
    }
    Ok(coloring)
}

/// Lower bound `ceil(2|E| / (|V| - gamma))`; zero for edgeless graphs.
pub fn lower_bound_domination(g: &Graph, gamma: usize) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let free = g.vertex_count() - gamma;
    (2 * g.edge_count()).div_ceil(free)
}

/// Exact rational `r|V| / (|V| - gamma)` for an `r`-regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalBound {
    pub numerator: usize,
    pub denominator: usize,
}

impl RationalBound {
    fn new(numerator: usize, denominator: usize) -> Self {
        let g = numerator.gcd(&denominator);
        if g == 0 {
            return Self {
                numerator,
                denominator,
            };
        }
        Self {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    pub fn ceil(&self) -> usize {
        self.numerator.div_ceil(self.denominator)
    }
}

/// Regular-graph form of the domination lower bound. By the handshake
/// identity its ceiling equals [`lower_bound_domination`].
pub fn regular_lower_bound(g: &Graph, gamma: usize) -> Result<(RationalBound, usize)> {
    let Some(r) = g.regular_degree() else {
        return Err(Error::InvalidInput(
            "regular lower bound needs a regular graph".into(),
        ));
    };
    if r == 0 {
        return Ok((RationalBound::new(0, 1), 0));
    }
    let n = g.vertex_count();
    let bound = RationalBound::new(r * n, n - gamma);
    let ceil = bound.ceil();
    Ok((bound, ceil))
}

/// Outcome of the two necessary conditions for an `r`-regular graph to be
/// `(r+1)`-incidence-colorable.
#[derive(Debug, Clone, Serialize)]
pub struct RegularNecVerdict {
    pub degree: usize,
    /// `r + 1` divides `|V|`.
    pub order_divisible: bool,
    /// For odd `r`: whether the chromatic index equals `r`. `None` when `r`
    /// is even (the condition is vacuous) or the exact solver was guarded.
    pub class_one: Option<bool>,
    pub conclusion: NecConclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NecConclusion {
    /// Some necessary condition fails, so `chi_i >= r + 2`.
    LowerBoundRaised,
    /// All checked conditions hold; nothing follows.
    Inconclusive,
}

impl RegularNecVerdict {
    /// Lower bound implied by the verdict: `r + 2` when raised.
    pub fn implied_lower(&self) -> Option<usize> {
        match self.conclusion {
            NecConclusion::LowerBoundRaised => Some(self.degree + 2),
            NecConclusion::Inconclusive => None,
        }
    }
}

/// Checks the necessary conditions on an `r`-regular graph (`r >= 1`).
/// Never concludes that `chi_i = r + 1`, only that it cannot be.
pub fn necessary_conditions_regular(
    g: &Graph,
    limits: &SolverLimits,
) -> Result<RegularNecVerdict> {
    let Some(r) = g.regular_degree() else {
        return Err(Error::InvalidInput(
            "necessary conditions apply to regular graphs only".into(),
        ));
    };
    if r == 0 {
        return Err(Error::InvalidInput(
            "necessary conditions need at least one edge".into(),
        ));
    }
    let order_divisible = g.vertex_count().is_multiple_of(r + 1);
    let class_one = if r % 2 == 1 {
        match chromatic_index_exact(g, limits) {
            Ok((chi_prime, _)) => Some(chi_prime == r),
            Err(Error::TooLarge { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let failed = !order_divisible || class_one == Some(false);
    Ok(RegularNecVerdict {
        degree: r,
        order_divisible,
        class_one,
        conclusion: if failed {
            NecConclusion::LowerBoundRaised
        } else {
            NecConclusion::Inconclusive
        },
    })
}

/// Caller-asserted or verified hypotheses for the per-class upper bounds.
#[derive(Debug, Clone, Default)]
pub struct ClassHypotheses {
    /// Planarity is declared by the caller, never tested.
    pub planar: bool,
    /// Ordering to check restricted degeneracy against; when absent the
    /// min-degree elimination ordering is used.
    pub ordering: Option<Vec<usize>>,
}

/// One named bound with an optional machine-readable note.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl BoundEntry {
    fn plain(name: &str, value: usize) -> Self {
        Self {
            name: name.to_string(),
            value,
            detail: None,
        }
    }

    fn with_detail(name: &str, value: usize, detail: serde_json::Value) -> Self {
        Self {
            name: name.to_string(),
            value,
            detail: Some(detail),
        }
    }
}

/// Upper bounds applicable to `g` under the supplied hypotheses: always the
/// `2 * max_degree` reference bound, plus the planar, restricted-degenerate,
/// and unicyclic-bipartite bounds when their hypotheses hold.
pub fn class_upper_bounds(
    g: &Graph,
    structure: &StructureReport,
    inputs: &ClassHypotheses,
) -> Result<Vec<BoundEntry>> {
    let mut out = Vec::new();
    let delta = structure.max_degree;
    if g.edge_count() == 0 {
        return Ok(out);
    }
    out.push(BoundEntry::with_detail(
        ic_names::UPPER_TWICE_DELTA,
        2 * delta,
        serde_json::json!({ "hypothesis": "any graph" }),
    ));
    if inputs.planar {
        let value = if delta == 6 { 12 } else { delta + 5 };
        out.push(BoundEntry::with_detail(
            ic_names::UPPER_PLANAR,
            value,
            serde_json::json!({
                "hypothesis": "planar (declared)",
                "max_degree": delta,
            }),
        ));
    }
    let ordering = match &inputs.ordering {
        Some(o) => o.clone(),
        None => structure.elimination_ordering.clone(),
    };
    if let Some(k) = restricted_degeneracy(g, &ordering)? {
        out.push(BoundEntry::with_detail(
            ic_names::UPPER_RESTRICTED_DEGENERATE,
            delta + k + 2,
            serde_json::json!({
                "hypothesis": "restricted k-degenerate (ordering verified)",
                "k": k,
            }),
        ));
    }
    if structure.unicyclic_bipartite {
        out.push(BoundEntry::with_detail(
            ic_names::UPPER_UNICYCLIC_BIPARTITE,
            delta + 2,
            serde_json::json!({ "hypothesis": "bipartite with at most one cycle" }),
        ));
    }
    Ok(out)
}

/// Stable bound names used in reports.
pub mod ic_names {
    pub const LOWER_DOMINATION: &str = "domination";
    pub const LOWER_REGULAR_FORM: &str = "regular-form";
    pub const LOWER_NECESSARY: &str = "necessary-conditions";
    pub const LOWER_TRIVIAL: &str = "max-degree-plus-one";
    pub const UPPER_STAR_EDGE: &str = "star-plus-edge";
    pub const UPPER_TWICE_DELTA: &str = "twice-max-degree";
    pub const UPPER_PLANAR: &str = "planar";
    pub const UPPER_RESTRICTED_DEGENERATE: &str = "restricted-degenerate";
    pub const UPPER_UNICYCLIC_BIPARTITE: &str = "unicyclic-bipartite";
}

/// Exact value plus its witness in serialized form.
#[derive(Debug, Clone, Serialize)]
pub struct ExactEntry {
    pub chi_i: usize,
    pub witness: Vec<ArcColor>,
}

/// Aggregated analysis of one graph. Lower bounds are sorted tightest
/// (largest) first, upper bounds tightest (smallest) first; ties break by
/// name.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub graph: StructureReport,
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nec: Option<RegularNecVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// How eagerly the analysis should run the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExactMode {
    /// Exact when the instance is within the guard.
    #[default]
    Auto,
    /// Exact regardless of the guard.
    Force,
    Skip,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub hypotheses: ClassHypotheses,
    pub exact: ExactMode,
    pub limits: SolverLimitsOption,
}

/// Wrapper so `AnalyzeOptions::default()` picks the default guard.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolverLimitsOption(pub SolverLimits);

/// Intermediate results the report is assembled from; exposed so callers
/// (the scan command, tests) can reuse the solved pieces.
#[derive(Debug, Clone)]
pub struct AnalysisParts {
    pub gamma: Option<usize>,
    pub dominating_set: Option<Vec<usize>>,
    pub star_arboricity: Option<usize>,
    pub chromatic_index: Option<usize>,
    /// Palette of the constructed coloring: star parts + edge colors.
    pub constructive_palette: Option<usize>,
    pub exact: Option<usize>,
}

/// Runs the full bound pipeline on one graph.
///
/// Guarded solvers that refuse an oversized instance degrade the report to
/// the remaining bounds, with a note; they never fail it. An exact value
/// outside the bound sandwich is an integrity error.
pub fn analyze(g: &Graph, options: &AnalyzeOptions) -> Result<(BoundReport, AnalysisParts)> {
    let limits = options.limits.0;
    let structure = structure_report(g);
    let mut notes = Vec::new();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut parts = AnalysisParts {
        gamma: None,
        dominating_set: None,
        star_arboricity: None,
        chromatic_index: None,
        constructive_palette: None,
        exact: None,
    };

    let has_edges = g.edge_count() > 0;
    if has_edges {
        lower.push(BoundEntry::plain(
            ic_names::LOWER_TRIVIAL,
            structure.max_degree + 1,
        ));
    }

    match decomp::domination_number_exact(g, &limits) {
        Ok((gamma, witness)) => {
            parts.gamma = Some(gamma);
            parts.dominating_set = Some(witness.vertices.clone());
            if has_edges {
                lower.push(BoundEntry::with_detail(
                    ic_names::LOWER_DOMINATION,
                    lower_bound_domination(g, gamma),
                    serde_json::json!({
                        "gamma": gamma,
                        "dominating_set": witness.vertices,
                    }),
                ));
                if g.regular_degree().is_some() {
                    let (rational, ceil) = regular_lower_bound(g, gamma)?;
                    lower.push(BoundEntry::with_detail(
                        ic_names::LOWER_REGULAR_FORM,
                        ceil,
                        serde_json::json!({
                            "numerator": rational.numerator,
                            "denominator": rational.denominator,
                        }),
                    ));
                }
            }
        }
        Err(e) if e.is_too_large() => notes.push(format!("domination bound skipped: {e}")),
        Err(e) => return Err(e),
    }

    let mut nec = None;
    if has_edges && structure.regular.is_some() {
        let verdict = necessary_conditions_regular(g, &limits)?;
        if let Some(value) = verdict.implied_lower() {
            lower.push(BoundEntry::with_detail(
                ic_names::LOWER_NECESSARY,
                value,
                serde_json::json!({
                    "order_divisible": verdict.order_divisible,
                    "class_one": verdict.class_one,
                }),
            ));
        }
        nec = Some(verdict);
    }

    // Constructive upper bound. The exact chromatic index is preferred;
    // outside the guard the constructive coloring stands in with its
    // `max_degree + 1` palette.
    if has_edges {
        let (ec, ec_source) = match chromatic_index_exact(g, &limits) {
            Ok((chi_prime, ec)) => {
                parts.chromatic_index = Some(chi_prime);
                (ec, "exact")
            }
            Err(e) if e.is_too_large() => {
                notes.push(format!("chromatic index via constructive coloring: {e}"));
                (edge_coloring_vizing(g), "constructive")
            }
            Err(e) => return Err(e),
        };
        match star_arboricity_exact(g, &limits) {
            Ok((st, sfd)) => {
                parts.star_arboricity = Some(st);
                let coloring = construct_star_edge_coloring(g, &sfd, &ec)?;
                parts.constructive_palette = Some(coloring.palette_size);
                upper.push(BoundEntry::with_detail(
                    ic_names::UPPER_STAR_EDGE,
                    coloring.palette_size,
                    serde_json::json!({
                        "star_arboricity": st,
                        "edge_colors": ec.palette_size,
                        "chromatic_index_source": ec_source,
                        "star_forests": sfd.parts,
                        "centers": sfd.centers,
                    }),
                ));
            }
            Err(e) if e.is_too_large() => {
                notes.push(format!("constructive upper bound skipped: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    upper.extend(class_upper_bounds(g, &structure, &options.hypotheses)?);

    let want_exact = match options.exact {
        ExactMode::Auto => 2 * g.edge_count() <= limits.max_arcs,
        ExactMode::Force => true,
        ExactMode::Skip => false,
    };
    let mut exact = None;
    if want_exact {
        let lower_hint = lower.iter().map(|b| b.value).max();
        let upper_hint = parts.constructive_palette;
        let solve_limits = match options.exact {
            ExactMode::Force => SolverLimits::new(limits.max_arcs.max(2 * g.edge_count())),
            _ => limits,
        };
        match incidence::exact_chi_i(g, lower_hint, upper_hint, &solve_limits) {
            Ok((chi, witness)) => {
                parts.exact = Some(chi);
                exact = Some(ExactEntry {
                    chi_i: chi,
                    witness: witness.to_records(g),
                });
            }
            Err(e) if e.is_too_large() => notes.push(format!("exact value skipped: {e}")),
            Err(e) => return Err(e),
        }
    }

    lower.sort_by(|a, b| b.value.cmp(&a.value).then(a.name.cmp(&b.name)));
    upper.sort_by(|a, b| a.value.cmp(&b.value).then(a.name.cmp(&b.name)));

    if let Some(chi) = parts.exact {
        for b in &lower {
            if b.value > chi {
                return Err(Error::Integrity(format!(
                    "lower bound {} = {} exceeds exact value {chi} (is a declared hypothesis false?)",
                    b.name, b.value
                )));
            }
        }
        for b in &upper {
            if b.value < chi {
                return Err(Error::Integrity(format!(
                    "upper bound {} = {} is below exact value {chi} (is a declared hypothesis false?)",
                    b.name, b.value
                )));
            }
        }
    }

    Ok((
        BoundReport {
            graph: structure,
            lower,
            upper,
            exact,
            nec,
            notes,
        },
        parts,
    ))
}
