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

//! Coloring composers: valid incidence colorings of `G1 u G2`, `G1 x G2`,
//! and `G1 v G2` assembled from colorings of the operands, within the
//! additive palette budgets those constructions admit.

use crate::graphs::{Graph, GraphFamily};
use crate::incidence::{arc_index, arcs, exact_chi_i, verify, Arc, IncidenceColoring};
use crate::{Error, Result, SolverLimits};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// A composed graph with its composed coloring.
#[derive(Debug, Clone)]
pub struct Composition {
    pub graph: Graph,
    pub coloring: IncidenceColoring,
    pub strategy: ComposeStrategy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeStrategy {
    /// Palette-offset relabeling (union, Cartesian product).
    Direct,
    /// Join solved exactly under the `m + n` cap.
    JoinExact,
    /// Join via shared operand palette plus `m + 2` fresh cross colors.
    JoinCrossPalette,
}

fn check_operand(g: &Graph, c: &IncidenceColoring, which: &str) -> Result<()> {
    let verdict = verify(g, c)?;
    if !verdict.valid {
        return Err(Error::InvalidInput(format!(
            "{which} operand coloring has {} conflicts",
            verdict.violations.len()
        )));
    }
    Ok(())
}

fn certify(graph: Graph, coloring: IncidenceColoring, strategy: ComposeStrategy) -> Result<Composition> {
    let verdict = verify(&graph, &coloring)?;
    if !verdict.valid {
        return Err(Error::Integrity(format!(
            "composed coloring has {} conflicts",
            verdict.violations.len()
        )));
    }
    Ok(Composition {
        graph,
        coloring,
        strategy,
    })
}

/// Colors the union with `c2`'s palette offset past `c1`'s; arcs of shared
/// edges keep `c1`'s colors. Palette: `p1 + p2`.
pub fn compose_union_coloring(
    g1: &Graph,
    c1: &IncidenceColoring,
    g2: &Graph,
    c2: &IncidenceColoring,
) -> Result<Composition> {
    check_operand(g1, c1, "first")?;
    check_operand(g2, c2, "second")?;
    let graph = g1.union(g2);
    let arcs1 = arcs(g1);
    let arcs2 = arcs(g2);
    let offset = c1.palette_size as u16;
    let colors: Vec<u16> = arcs(&graph)
        .iter()
        .map(|&a| {
            if g1.has_edge(a.tail, a.head) {
                c1.colors[arc_index(&arcs1, a).expect("arc of g1")]
            } else {
                offset + c2.colors[arc_index(&arcs2, a).expect("arc of g2")]
            }
        })
        .collect();
    let coloring = IncidenceColoring::new(colors, c1.palette_size + c2.palette_size);
    certify(graph, coloring, ComposeStrategy::Direct)
}

/// Colors the Cartesian product: each copy of `g1` inherits `c1` through
/// the flattening map, each copy of `g2` inherits `c2` offset by `p1`.
/// Palette: `p1 + p2`.
pub fn compose_cartesian_coloring(
    g1: &Graph,
    c1: &IncidenceColoring,
    g2: &Graph,
    c2: &IncidenceColoring,
) -> Result<Composition> {
    check_operand(g1, c1, "first")?;
    check_operand(g2, c2, "second")?;
    let graph = g1.cartesian_product(g2);
    let n2 = g2.vertex_count();
    let arcs1 = arcs(g1);
    let arcs2 = arcs(g2);
    let offset = c1.palette_size as u16;
    let colors: Vec<u16> = arcs(&graph)
        .iter()
        .map(|&a| {
            let (a1, b1) = (a.tail / n2, a.tail % n2);
            let (a2, b2) = (a.head / n2, a.head % n2);
            if b1 == b2 {
                c1.colors[arc_index(&arcs1, Arc::new(a1, a2)).expect("arc of g1")]
            } else {
                debug_assert_eq!(a1, a2);
                offset + c2.colors[arc_index(&arcs2, Arc::new(b1, b2)).expect("arc of g2")]
            }
        })
        .collect();
    let coloring = IncidenceColoring::new(colors, c1.palette_size + c2.palette_size);
    certify(graph, coloring, ComposeStrategy::Direct)
}

/// A valid coloring of the cross arcs of `K_{m,n}` (left side `0..m`, right
/// side `m..m+n`) with at most `m + 2` colors, by arc index. Solved once
/// per `(m, n)` and memoized; infeasibility at `m + 2` is an integrity
/// error, the cap is never widened.
type KmnCache = Mutex<HashMap<(usize, usize), Vec<u16>>>;

fn kmn_cross_coloring(m: usize, n: usize, limits: &SolverLimits) -> Result<Vec<u16>> {
    static CACHE: OnceLock<KmnCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(colors) = cache.lock().expect("cache lock").get(&(m, n)) {
        return Ok(colors.clone());
    }
    let kmn = GraphFamily::CompleteBipartite { m, n }.generate()?;
    let (_, witness) = exact_chi_i(&kmn, None, Some(m + 2), limits).map_err(|e| match e {
        Error::Integrity(_) => Error::Integrity(format!(
            "no (m+2)-coloring of the cross arcs of K_{{{m},{n}}} found"
        )),
        other => other,
    })?;
    let colors = witness.colors;
    cache
        .lock()
        .expect("cache lock")
        .insert((m, n), colors.clone());
    Ok(colors)
}

/// Colors the join `g1 v g2` (`|V(g1)| = m >= n = |V(g2)|`) by the cheaper
/// of two strategies: exact search capped at `m + n` colors, or a shared
/// operand palette plus `m + 2` fresh colors on the cross arcs (needs
/// `n >= 2`). Ties prefer the constructive branch.
pub fn compose_join_coloring(
    g1: &Graph,
    c1: &IncidenceColoring,
    g2: &Graph,
    c2: &IncidenceColoring,
    limits: &SolverLimits,
) -> Result<Composition> {
    check_operand(g1, c1, "first")?;
    check_operand(g2, c2, "second")?;
    let m = g1.vertex_count();
    let n = g2.vertex_count();
    if m < n {
        return Err(Error::InvalidInput(format!(
            "join composer expects |V(G1)| >= |V(G2)|, got {m} < {n}"
        )));
    }
    let graph = g1.join(g2);
    let exact_budget = m + n;
    let shared = c1.palette_size.max(c2.palette_size);
    let cross_budget = (n >= 2).then_some(shared + m + 2);
    let exact_feasible = 2 * graph.edge_count() <= limits.max_arcs;

    let use_cross =
        matches!(cross_budget, Some(b) if b <= exact_budget || !exact_feasible);
    if !use_cross && !exact_feasible {
        return Err(Error::TooLarge {
            size: 2 * graph.edge_count(),
            unit: "arcs",
            cap: limits.max_arcs,
        });
    }

    if use_cross {
        let cross = kmn_cross_coloring(m, n, limits)?;
        let kmn = GraphFamily::CompleteBipartite { m, n }.generate()?;
        let kmn_arcs = arcs(&kmn);
        let arcs1 = arcs(g1);
        let arcs2 = arcs(g2);
        let offset = shared as u16;
        let colors: Vec<u16> = arcs(&graph)
            .iter()
            .map(|&a| {
                let left = |v: usize| v < m;
                match (left(a.tail), left(a.head)) {
                    (true, true) => c1.colors[arc_index(&arcs1, a).expect("arc of g1")],
                    (false, false) => {
                        let inner = Arc::new(a.tail - m, a.head - m);
                        c2.colors[arc_index(&arcs2, inner).expect("arc of g2")]
                    }
                    _ => offset + cross[arc_index(&kmn_arcs, a).expect("cross arc")],
                }
            })
            .collect();
        let coloring = IncidenceColoring::new(colors, shared + m + 2);
        certify(graph, coloring, ComposeStrategy::JoinCrossPalette)
    } else {
        let (_, coloring) = exact_chi_i(&graph, None, Some(exact_budget), limits)?;
        certify(graph, coloring, ComposeStrategy::JoinExact)
    }
}
