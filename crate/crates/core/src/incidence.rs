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

//! The arc model of incidence coloring.
//!
//! Each edge `{u, v}` contributes the two opposite arcs `(u, v)` and
//! `(v, u)`. Arcs `(u, v)` and `(x, y)` conflict when `u = x`, `v = x`, or
//! `y = u`; a coloring is an incidence coloring when conflicting arcs never
//! share a color. Arcs are indexed by their position in the
//! `(tail, head)`-sorted arc list, which keeps serialized colorings stable.

mod exact;

pub use exact::{exact_chi_i, max_independent_arc_set};

use crate::graphs::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A directed arc of `D(G)`; `{tail, head}` is an edge of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    /// The opposite arc of the same edge.
    pub fn reversed(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// All `2|E|` arcs of `D(G)` sorted by `(tail, head)`.
pub fn arcs(g: &Graph) -> Vec<Arc> {
    let mut out = Vec::with_capacity(2 * g.edge_count());
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            out.push(Arc::new(u, v));
        }
    }
    out
}

/// Position of `a` in the sorted arc list, if `{tail, head}` is an edge.
pub fn arc_index(arcs: &[Arc], a: Arc) -> Option<usize> {
    arcs.binary_search(&a).ok()
}

/// Arc adjacency: `(u,v)` and `(x,y)` conflict when they share a tail or the
/// head of one is the tail of the other.
pub fn adjacent(a: Arc, b: Arc) -> bool {
    a != b && (a.tail == b.tail || a.head == b.tail || b.head == a.tail)
}

/// Conflict lists over arc indices, the structure every solver walks.
pub(crate) struct ArcConflicts {
    pub arcs: Vec<Arc>,
    pub neighbors: Vec<Vec<u32>>,
}

impl ArcConflicts {
    pub fn build(g: &Graph) -> Self {
        let arcs = arcs(g);
        // Arcs sorted by tail: per-vertex slices give O(degree) conflict
        // enumeration instead of the quadratic pairwise scan.
        let n = g.vertex_count();
        let mut out_start = vec![0usize; n + 1];
        for a in &arcs {
            out_start[a.tail + 1] += 1;
        }
        for v in 0..n {
            out_start[v + 1] += out_start[v];
        }
        let mut in_arcs: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (i, a) in arcs.iter().enumerate() {
            in_arcs[a.head].push(i as u32);
        }
        let mut neighbors = Vec::with_capacity(arcs.len());
        for (i, a) in arcs.iter().enumerate() {
            let mut list: Vec<u32> = Vec::new();
            // shared tail
            list.extend(out_start[a.tail] as u32..out_start[a.tail + 1] as u32);
            // head of self meets tail of other
            list.extend(out_start[a.head] as u32..out_start[a.head + 1] as u32);
            // head of other meets tail of self
            list.extend(in_arcs[a.tail].iter().copied());
            list.sort_unstable();
            list.dedup();
            list.retain(|&j| j != i as u32);
            neighbors.push(list);
        }
        Self { arcs, neighbors }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }
}

/// Total assignment of colors to the arcs of one graph, indexed by sorted
/// arc position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceColoring {
    pub colors: Vec<u16>,
    pub palette_size: usize,
}

impl IncidenceColoring {
    pub fn new(colors: Vec<u16>, palette_size: usize) -> Self {
        Self {
            colors,
            palette_size,
        }
    }

    pub fn empty() -> Self {
        Self {
            colors: Vec::new(),
            palette_size: 0,
        }
    }

    pub fn color_of(&self, arcs: &[Arc], a: Arc) -> Option<u16> {
        arc_index(arcs, a).map(|i| self.colors[i])
    }

    /// Colors on arcs entering `u`.
    pub fn colors_into(&self, g: &Graph, u: usize) -> BTreeSet<u16> {
        let arcs = arcs(g);
        arcs.iter()
            .zip(&self.colors)
            .filter(|(a, _)| a.head == u)
            .map(|(_, &c)| c)
            .collect()
    }

    /// Colors on arcs leaving `u`.
    pub fn colors_out_of(&self, g: &Graph, u: usize) -> BTreeSet<u16> {
        let arcs = arcs(g);
        arcs.iter()
            .zip(&self.colors)
            .filter(|(a, _)| a.tail == u)
            .map(|(_, &c)| c)
            .collect()
    }

    pub fn to_records(&self, g: &Graph) -> Vec<ArcColor> {
        arcs(g)
            .iter()
            .zip(&self.colors)
            .map(|(a, &c)| ArcColor {
                tail: a.tail,
                head: a.head,
                color: c,
            })
            .collect()
    }

    /// Rebuilds a coloring from serialized records; every arc of `g` must
    /// appear exactly once.
    pub fn from_records(g: &Graph, records: &[ArcColor]) -> Result<Self> {
        let arcs = arcs(g);
        let mut colors: Vec<Option<u16>> = vec![None; arcs.len()];
        for r in records {
            let a = Arc::new(r.tail, r.head);
            let i = arc_index(&arcs, a).ok_or_else(|| {
                Error::InvalidInput(format!("({}, {}) is not an arc of the graph", r.tail, r.head))
            })?;
            if colors[i].replace(r.color).is_some() {
                return Err(Error::InvalidInput(format!(
                    "arc ({}, {}) colored twice",
                    r.tail, r.head
                )));
            }
        }
        let missing = colors.iter().filter(|c| c.is_none()).count();
        if missing > 0 {
            return Err(Error::IncompleteColoring(format!(
                "{missing} of {} arcs uncolored",
                arcs.len()
            )));
        }
        let colors: Vec<u16> = colors.into_iter().map(Option::unwrap).collect();
        let palette_size = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Ok(Self {
            colors,
            palette_size,
        })
    }

    pub fn to_json(&self, g: &Graph) -> String {
        serde_json::to_string(&self.to_records(g)).expect("records serialize")
    }

    pub fn from_json(g: &Graph, json: &str) -> Result<Self> {
        let records: Vec<ArcColor> = serde_json::from_str(json)
            .map_err(|e| Error::InvalidInput(format!("coloring JSON: {e}")))?;
        Self::from_records(g, &records)
    }
}

/// One serialized arc color entry.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArcColor {
    pub tail: usize,
    pub head: usize,
    pub color: u16,
}

/// A conflicting same-colored arc pair.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub first: Arc,
    pub second: Arc,
    pub color: u16,
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.tail, self.head).serialize(s)
    }
}

/// Checker verdict; `valid` iff no two adjacent arcs share a color.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks a total coloring. Incomplete colorings (wrong arc count) and
/// colors outside the declared palette are rejected as errors rather than
/// reported as violations.
pub fn verify(g: &Graph, coloring: &IncidenceColoring) -> Result<Verdict> {
    let conflicts = ArcConflicts::build(g);
    if coloring.colors.len() != conflicts.len() {
        return Err(Error::IncompleteColoring(format!(
            "{} colors for {} arcs",
            coloring.colors.len(),
            conflicts.len()
        )));
    }
    if let Some(&c) = coloring.colors.iter().find(|&&c| (c as usize) >= coloring.palette_size) {
        return Err(Error::InvalidInput(format!(
            "color {c} outside palette of size {}",
            coloring.palette_size
        )));
    }
    let mut violations = Vec::new();
    for (i, list) in conflicts.neighbors.iter().enumerate() {
        for &j in list {
            let j = j as usize;
            if j > i && coloring.colors[i] == coloring.colors[j] {
                violations.push(Violation {
                    first: conflicts.arcs[i],
                    second: conflicts.arcs[j],
                    color: coloring.colors[i],
                });
            }
        }
    }
    Ok(Verdict {
        valid: violations.is_empty(),
        violations,
    })
}

/// Arc orderings for the greedy baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArcOrder {
    /// Sorted `(tail, head)` order.
    Natural,
    /// Arcs into high-degree vertices first, then `(tail, head)`.
    #[default]
    HeadDegreeDesc,
}

/// Lowest-free-color greedy over the chosen arc order. Deterministic; uses
/// at most `1 + max arc degree` colors.
pub fn greedy_coloring(g: &Graph, order: ArcOrder) -> IncidenceColoring {
    let conflicts = ArcConflicts::build(g);
    let mut idx: Vec<usize> = (0..conflicts.len()).collect();
    if order == ArcOrder::HeadDegreeDesc {
        idx.sort_by_key(|&i| {
            let a = conflicts.arcs[i];
            (std::cmp::Reverse(g.degree(a.head)), a.tail, a.head)
        });
    }
    let mut colors = vec![u16::MAX; conflicts.len()];
    let mut palette = 0usize;
    let mut forbidden = vec![false; 1];
    for &i in &idx {
        forbidden.clear();
        forbidden.resize(palette + 1, false);
        for &j in &conflicts.neighbors[i] {
            let c = colors[j as usize];
            if c != u16::MAX {
                forbidden[c as usize] = true;
            }
        }
        let c = forbidden.iter().position(|&f| !f).expect("free slot");
        colors[i] = c as u16;
        palette = palette.max(c + 1);
    }
    IncidenceColoring::new(colors, palette)
}
