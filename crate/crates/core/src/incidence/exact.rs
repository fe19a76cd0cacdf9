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

//! Certified exact search over the arc conflict structure: the incidence
//! chromatic number by iterative deepening on the palette size, and maximum
//! independent arc sets by branch and bound.

use super::{greedy_coloring, verify, Arc, ArcConflicts, ArcOrder, IncidenceColoring};
use crate::graphs::Graph;
use crate::{Error, Result, SolverLimits};

// Color masks are u128-backed; with the default 120-arc guard the palette
// can never reach this.
const MAX_COLORS: usize = 128;

/// Computes the incidence chromatic number with a witness coloring.
///
/// Hints are trusted caller knowledge: `lower_hint` must not exceed the true
/// value and `upper_hint` must be a proven upper bound. The search deepens
/// `k` from the best lower bound; the first feasible `k` is returned, so
/// `(k-1)`-infeasibility is certified by the exhausted previous iteration.
pub fn exact_chi_i(
    g: &Graph,
    lower_hint: Option<usize>,
    upper_hint: Option<usize>,
    limits: &SolverLimits,
) -> Result<(usize, IncidenceColoring)> {
    if g.edge_count() == 0 {
        return Ok((0, IncidenceColoring::empty()));
    }
    let arc_count = 2 * g.edge_count();
    if arc_count > limits.max_arcs {
        return Err(Error::TooLarge {
            size: arc_count,
            unit: "arcs",
            cap: limits.max_arcs,
        });
    }

    let conflicts = ArcConflicts::build(g);
    // The out-arcs of a maximum-degree vertex plus one arc into it form a
    // clique of size max_degree + 1.
    let trivial_lower = g.max_degree() + 1;
    let lower = trivial_lower.max(lower_hint.unwrap_or(0));

    let greedy = greedy_coloring(g, ArcOrder::HeadDegreeDesc);
    debug_assert!(verify(g, &greedy)?.valid);
    let greedy_palette = greedy.palette_size;
    if greedy_palette > MAX_COLORS {
        return Err(Error::TooLarge {
            size: greedy_palette,
            unit: "colors",
            cap: MAX_COLORS,
        });
    }
    let highest = upper_hint.unwrap_or(greedy_palette).min(greedy_palette);

    for k in lower..=highest {
        if k == greedy_palette {
            return Ok((k, greedy));
        }
        if let Some(colors) = search_k_coloring(g, &conflicts, k) {
            let coloring = IncidenceColoring::new(colors, k);
            let verdict = verify(g, &coloring)?;
            if !verdict.valid {
                return Err(Error::Integrity(format!(
                    "search produced an invalid {k}-coloring"
                )));
            }
            return Ok((k, coloring));
        }
    }
    // Only reachable when an upper hint below the greedy palette was wrong.
    Err(Error::Integrity(format!(
        "no coloring within hinted upper bound {highest}"
    )))
}

/// DSATUR-style backtracking for one fixed palette size.
///
/// Symmetry is broken two ways: the out-arcs of the first maximum-degree
/// vertex are pre-colored 0, 1, 2, ..., and a fresh color may only be the
/// next unopened index.
fn search_k_coloring(g: &Graph, conflicts: &ArcConflicts, k: usize) -> Option<Vec<u16>> {
    let delta = g.max_degree();
    if delta > k {
        // Those out-arcs are pairwise adjacent; k colors cannot work.
        return None;
    }
    let hub = (0..g.vertex_count())
        .find(|&u| g.degree(u) == delta)
        .expect("graph has edges");

    let mut state = SearchState {
        neighbors: &conflicts.neighbors,
        k,
        colors: vec![NO_COLOR; conflicts.len()],
        counts: vec![[0u16; MAX_COLORS]; conflicts.len()],
        masks: vec![0u128; conflicts.len()],
        opened: 0,
        uncolored: conflicts.len(),
    };

    for (offset, &v) in g.neighbors(hub).iter().enumerate() {
        let i = super::arc_index(&conflicts.arcs, Arc::new(hub, v)).expect("arc exists");
        state.assign(i, offset as u16);
        state.opened = offset + 1;
    }
    state.dfs().then(|| {
        state
            .colors
            .iter()
            .map(|&c| {
                debug_assert!(c != NO_COLOR);
                c
            })
            .collect()
    })
}

const NO_COLOR: u16 = u16::MAX;

struct SearchState<'a> {
    neighbors: &'a [Vec<u32>],
    k: usize,
    colors: Vec<u16>,
    /// counts[arc][color]: colored conflict neighbors with that color.
    counts: Vec<[u16; MAX_COLORS]>,
    /// Bit c set iff counts[arc][c] > 0.
    masks: Vec<u128>,
    opened: usize,
    uncolored: usize,
}

impl SearchState<'_> {
    fn assign(&mut self, i: usize, c: u16) {
        debug_assert_eq!(self.colors[i], NO_COLOR);
        self.colors[i] = c;
        self.uncolored -= 1;
        for &j in &self.neighbors[i] {
            let j = j as usize;
            self.counts[j][c as usize] += 1;
            self.masks[j] |= 1u128 << c;
        }
    }

    fn unassign(&mut self, i: usize, c: u16) {
        self.colors[i] = NO_COLOR;
        self.uncolored += 1;
        for &j in &self.neighbors[i] {
            let j = j as usize;
            self.counts[j][c as usize] -= 1;
            if self.counts[j][c as usize] == 0 {
                self.masks[j] &= !(1u128 << c);
            }
        }
    }

    /// Most-saturated uncolored arc; ties by uncolored conflict degree,
    /// then lowest index.
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for i in 0..self.colors.len() {
            if self.colors[i] != NO_COLOR {
                continue;
            }
            let sat = self.masks[i].count_ones() as usize;
            if best == usize::MAX || sat > best_key.0 {
                let open_deg = self.neighbors[i]
                    .iter()
                    .filter(|&&j| self.colors[j as usize] == NO_COLOR)
                    .count();
                best = i;
                best_key = (sat, open_deg);
            } else if sat == best_key.0 {
                let open_deg = self.neighbors[i]
                    .iter()
                    .filter(|&&j| self.colors[j as usize] == NO_COLOR)
                    .count();
                if open_deg > best_key.1 {
                    best = i;
                    best_key = (sat, open_deg);
                }
            }
        }
        best
    }

    fn dfs(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let i = self.pick();
        let limit = (self.opened + 1).min(self.k);
        let forbidden = self.masks[i];
        for c in 0..limit as u16 {
            if forbidden & (1u128 << c) != 0 {
                continue;
            }
            let prev_opened = self.opened;
            self.opened = self.opened.max(c as usize + 1);
            self.assign(i, c);
            if self.dfs() {
                return true;
            }
            self.unassign(i, c);
            self.opened = prev_opened;
        }
        false
    }
}

/// Maximum independent arc set by branch and bound over the conflict
/// structure, certified by exhaustion. Its size equals `|V| - gamma(G)`;
/// that identity is checked elsewhere, never assumed here.
pub fn max_independent_arc_set(g: &Graph, limits: &SolverLimits) -> Result<Vec<Arc>> {
    let arc_count = 2 * g.edge_count();
    let cap = limits.max_arcs.min(MAX_COLORS);
    if arc_count > cap {
        return Err(Error::TooLarge {
            size: arc_count,
            unit: "arcs",
            cap,
        });
    }
    if arc_count == 0 {
        return Ok(Vec::new());
    }
    let conflicts = ArcConflicts::build(g);
    let n = conflicts.len();
    let adj: Vec<u128> = conflicts
        .neighbors
        .iter()
        .map(|list| list.iter().fold(0u128, |m, &j| m | (1u128 << j)))
        .collect();

    // Greedy warm start: repeatedly take the candidate with fewest
    // remaining conflicts.
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut cand = full;
    let mut greedy_set = 0u128;
    let mut greedy_size = 0usize;
    while cand != 0 {
        let mut pick = usize::MAX;
        let mut pick_deg = usize::MAX;
        let mut bits = cand;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let deg = (adj[i] & cand).count_ones() as usize;
            if deg < pick_deg {
                pick = i;
                pick_deg = deg;
            }
        }
        greedy_set |= 1u128 << pick;
        greedy_size += 1;
        cand &= !(adj[pick] | (1u128 << pick));
    }

    let mut best = (greedy_size, greedy_set);
    branch_mis(&adj, full, 0, 0, &mut best);
    let (_, best_set) = best;
    Ok((0..n)
        .filter(|&i| best_set & (1u128 << i) != 0)
        .map(|i| conflicts.arcs[i])
        .collect())
}

fn branch_mis(adj: &[u128], cand: u128, chosen: u128, size: usize, best: &mut (usize, u128)) {
    if size + cand.count_ones() as usize <= best.0 {
        return;
    }
    if cand == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    // Branch on the candidate with the most remaining conflicts; including
    // it shrinks the candidate set fastest.
    let mut pivot = usize::MAX;
    let mut pivot_deg = usize::MAX;
    let mut bits = cand;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let deg = (adj[i] & cand).count_ones() as usize;
        if pivot == usize::MAX || deg > pivot_deg {
            pivot = i;
            pivot_deg = deg;
        }
    }
    let bit = 1u128 << pivot;
    branch_mis(adj, cand & !(adj[pivot] | bit), chosen | bit, size + 1, best);
    branch_mis(adj, cand & !bit, chosen, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphFamily;
    use crate::incidence::{adjacent, arcs};

    fn gen(spec: &str) -> Graph {
        GraphFamily::parse(spec).unwrap().generate().unwrap()
    }

    fn chi(spec: &str) -> usize {
        exact_chi_i(&gen(spec), None, None, &SolverLimits::default())
            .unwrap()
            .0
    }

    #[test]
    fn frozen_small_values() {
        assert_eq!(chi("cycle:5"), 4);
        assert_eq!(chi("cycle:6"), 3);
        assert_eq!(chi("complete:4"), 4);
        let edge = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(
            exact_chi_i(&edge, None, None, &SolverLimits::default()).unwrap().0,
            2
        );
        assert_eq!(chi("star:3"), 4);
    }

    #[test]
    fn witness_is_valid_and_tight() {
        let g = gen("cycle:7");
        let (chi, witness) = exact_chi_i(&g, None, None, &SolverLimits::default()).unwrap();
        assert_eq!(chi, 4);
        assert_eq!(witness.palette_size, 4);
        assert!(verify(&g, &witness).unwrap().valid);
    }

    #[test]
    fn hints_are_honored() {
        let g = gen("cycle:5");
        let (chi, _) = exact_chi_i(&g, Some(4), Some(4), &SolverLimits::default()).unwrap();
        assert_eq!(chi, 4);
    }

    #[test]
    fn guard_refuses_oversized_instances() {
        let g = gen("complete:12"); // 132 arcs
        let err = exact_chi_i(&g, None, None, &SolverLimits::default()).unwrap_err();
        assert!(err.is_too_large());
        let err = max_independent_arc_set(&g, &SolverLimits::default()).unwrap_err();
        assert!(err.is_too_large());
    }

    #[test]
    fn edgeless_graph_needs_no_colors() {
        let g = Graph::empty(4);
        let (chi, w) = exact_chi_i(&g, None, None, &SolverLimits::default()).unwrap();
        assert_eq!(chi, 0);
        assert!(w.colors.is_empty());
        assert!(max_independent_arc_set(&g, &SolverLimits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn independent_set_examples() {
        let limits = SolverLimits::default();
        // Star: all arcs into the hub.
        for k in 2..=5usize {
            let g = gen(&format!("star:{k}"));
            let set = max_independent_arc_set(&g, &limits).unwrap();
            assert_eq!(set.len(), k);
        }
        // C4: 4 - gamma = 2.
        let set = max_independent_arc_set(&gen("cycle:4"), &limits).unwrap();
        assert_eq!(set.len(), 2);
        // K_n: n - 1.
        for n in 2..=5usize {
            let set = max_independent_arc_set(&gen(&format!("complete:{n}")), &limits).unwrap();
            assert_eq!(set.len(), n - 1);
        }
    }

    #[test]
    fn independent_set_is_pairwise_nonadjacent() {
        for spec in ["cycle:6", "petersen", "grid:2:4", "random_gnp:7:0.5:2"] {
            let set = max_independent_arc_set(&gen(spec), &SolverLimits::default()).unwrap();
            for (i, &a) in set.iter().enumerate() {
                for &b in &set[i + 1..] {
                    assert!(!adjacent(a, b), "{spec}: {a:?} ~ {b:?}");
                }
            }
        }
    }

    #[test]
    fn mis_matches_exhaustive_enumeration_on_tiny_graphs() {
        for spec in ["cycle:4", "path:4", "complete:3", "star:3"] {
            let g = gen(spec);
            let arc_list = arcs(&g);
            let mut best = 0usize;
            for mask in 0u32..(1 << arc_list.len()) {
                let members: Vec<Arc> = (0..arc_list.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| arc_list[i])
                    .collect();
                let ok = members
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| members[i + 1..].iter().all(|&b| !adjacent(a, b)));
                if ok {
                    best = best.max(members.len());
                }
            }
            let found = max_independent_arc_set(&g, &SolverLimits::default()).unwrap();
            assert_eq!(found.len(), best, "{spec}");
        }
    }
}
