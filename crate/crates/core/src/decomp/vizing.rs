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

//! Proper edge colorings: the constructive fan/alternating-path procedure
//! with at most `max_degree + 1` colors, and the exact chromatic index by
//! deciding `max_degree`-colorability with backtracking.

use crate::graphs::Graph;
use crate::{Error, Result, SolverLimits};
use serde::Serialize;

/// Proper edge coloring, indexed by edge id (position in `g.edges()`).
/// Colors are normalized to `0..palette_size` with every color used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

/// Serialized form: one entry per edge.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EdgeColorRecord {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

impl EdgeColoring {
    pub fn to_records(&self, g: &Graph) -> Vec<EdgeColorRecord> {
        g.edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &color)| EdgeColorRecord { u, v, color })
            .collect()
    }
}

/// True when edges sharing a vertex always have distinct colors and the
/// coloring is total.
pub fn is_proper_edge_coloring(g: &Graph, ec: &EdgeColoring) -> bool {
    let edges = g.edges();
    if ec.colors.len() != edges.len() {
        return false;
    }
    if ec.colors.iter().any(|&c| c >= ec.palette_size) {
        return false;
    }
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (&(u, v), &c) in edges.iter().zip(&ec.colors) {
        for w in [u, v] {
            if seen[w].contains(&c) {
                return false;
            }
            seen[w].push(c);
        }
    }
    true
}

/// Remaps colors to `0..distinct` in order of first appearance.
fn normalize(colors: Vec<usize>) -> EdgeColoring {
    let mut map: Vec<Option<usize>> = vec![None; colors.iter().map(|c| c + 1).max().unwrap_or(0)];
    let mut next = 0usize;
    let colors = colors
        .into_iter()
        .map(|c| {
            *map[c].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect();
    EdgeColoring {
        colors,
        palette_size: next,
    }
}

/// Fan/alternating-path edge coloring with at most `max_degree + 1` colors.
///
/// Edges are inserted in sorted order. Each insertion builds one maximal fan
/// at the lower endpoint (neighbors scanned by index), inverts at most one
/// two-colored alternating path, then rotates a fan prefix.
pub fn edge_coloring_vizing(g: &Graph) -> EdgeColoring {
    let edges = g.edges();
    let n = g.vertex_count();
    let m = edges.len();
    if m == 0 {
        return EdgeColoring {
            colors: Vec::new(),
            palette_size: 0,
        };
    }
    let delta = g.max_degree();
    let palette = delta + 1;

    // edge_at[v][c] = id of the c-colored edge at v.
    let mut edge_at: Vec<Vec<Option<usize>>> = vec![vec![None; palette]; n];
    let mut color: Vec<Option<usize>> = vec![None; m];
    // edge id lookup per vertex.
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge id)
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u].push((v, id));
        incident[v].push((u, id));
    }
    for list in &mut incident {
        list.sort_unstable();
    }

    let free = |edge_at: &Vec<Vec<Option<usize>>>, v: usize| -> usize {
        (0..palette)
            .find(|&c| edge_at[v][c].is_none())
            .expect("degree <= max_degree leaves a free color")
    };
    let is_free =
        |edge_at: &Vec<Vec<Option<usize>>>, v: usize, c: usize| -> bool { edge_at[v][c].is_none() };

    for (e, &(u, v)) in edges.iter().enumerate() {
        // Maximal fan from v: each next edge's color is free at the
        // previous fan vertex.
        let mut fan = vec![v];
        let mut in_fan = vec![false; n];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = incident[u]
                .iter()
                .find(|&&(w, id)| {
                    !in_fan[w]
                        && color[id].is_some_and(|c| is_free(&edge_at, last, c))
                })
                .map(|&(w, _)| w);
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }

        let c = free(&edge_at, u);
        let d = free(&edge_at, *fan.last().unwrap());
        if !is_free(&edge_at, u, d) {
            // Invert the maximal (d, c)-path leaving u; u has no c-edge, so
            // the path is simple and frees d at u.
            let mut path = Vec::new();
            let mut cur = u;
            let mut want = d;
            while let Some(pe) = edge_at[cur][want] {
                path.push(pe);
                let (a, b) = edges[pe];
                cur = if a == cur { b } else { a };
                want = if want == d { c } else { d };
            }
            let mut touched = vec![u];
            for &pe in &path {
                let old = color[pe].unwrap();
                let new = if old == d { c } else { d };
                color[pe] = Some(new);
                let (a, b) = edges[pe];
                touched.push(a);
                touched.push(b);
            }
            touched.sort_unstable();
            touched.dedup();
            for &w in &touched {
                for slot in edge_at[w].iter_mut() {
                    *slot = None;
                }
                for &(_, id) in &incident[w] {
                    if let Some(cc) = color[id] {
                        edge_at[w][cc] = Some(id);
                    }
                }
            }
            // Truncate to the first fan prefix that is still a fan and ends
            // at a vertex with d free.
            let mut end = None;
            for (idx, &w) in fan.iter().enumerate() {
                if idx > 0 {
                    let col = color[edge_id(&incident, u, fan[idx])].unwrap();
                    if !is_free(&edge_at, fan[idx - 1], col) {
                        break;
                    }
                }
                if is_free(&edge_at, w, d) {
                    end = Some(idx);
                    break;
                }
            }
            let end = end.expect("fan rotation target exists");
            fan.truncate(end + 1);
        }

        // Rotate: shift each fan edge's color to the previous fan edge,
        // then color the last with d.
        for i in 0..fan.len() - 1 {
            let donor = edge_id(&incident, u, fan[i + 1]);
            let receiver = edge_id(&incident, u, fan[i]);
            let col = color[donor].unwrap();
            color[donor] = None;
            edge_at[u][col] = None;
            edge_at[fan[i + 1]][col] = None;
            color[receiver] = Some(col);
            edge_at[u][col] = Some(receiver);
            edge_at[fan[i]][col] = Some(receiver);
        }
        let last = *fan.last().unwrap();
        let le = edge_id(&incident, u, last);
        debug_assert!(le == e || fan.len() > 1);
        color[le] = Some(d);
        edge_at[u][d] = Some(le);
        edge_at[last][d] = Some(le);
    }

    let colors: Vec<usize> = color.into_iter().map(Option::unwrap).collect();
    normalize(colors)
}

fn edge_id(incident: &[Vec<(usize, usize)>], u: usize, w: usize) -> usize {
    incident[u]
        .iter()
        .find(|&&(x, _)| x == w)
        .map(|&(_, id)| id)
        .expect("edge exists")
}

/// Exact chromatic index: `max_degree`-colorability is decided by
/// exhaustive backtracking, otherwise the constructive coloring witnesses
/// `max_degree + 1`.
pub fn chromatic_index_exact(g: &Graph, limits: &SolverLimits) -> Result<(usize, EdgeColoring)> {
    let m = g.edge_count();
    if m == 0 {
        return Ok((
            0,
            EdgeColoring {
                colors: Vec::new(),
                palette_size: 0,
            },
        ));
    }
    if m > limits.max_edges() {
        return Err(Error::TooLarge {
            size: m,
            unit: "edges",
            cap: limits.max_edges(),
        });
    }
    let delta = g.max_degree();
    if delta >= 64 {
        // Color masks in the search are u64; unreachable under the default
        // edge guard.
        return Err(Error::TooLarge {
            size: delta,
            unit: "colors",
            cap: 63,
        });
    }
    if let Some(colors) = try_edge_coloring(g, delta) {
        let ec = normalize(colors);
        debug_assert!(is_proper_edge_coloring(g, &ec));
        return Ok((delta, ec));
    }
    let ec = edge_coloring_vizing(g);
    if ec.palette_size != delta + 1 {
        return Err(Error::Integrity(format!(
            "constructive coloring used {} colors after max_degree-colorability was refuted",
            ec.palette_size
        )));
    }
    Ok((delta + 1, ec))
}

/// Backtracking search for a proper edge coloring with `k` colors. The
/// edges at one maximum-degree vertex are pre-colored `0, 1, 2, ...`; the
/// search then always extends the edge with the fewest admissible colors.
fn try_edge_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    debug_assert!(k < 64, "caller guards the palette width");
    let edges = g.edges();
    let m = edges.len();
    let full: u64 = (1u64 << k) - 1;
    let mut used: Vec<u64> = vec![0; g.vertex_count()];
    let mut colors: Vec<Option<usize>> = vec![None; m];

    let delta = g.max_degree();
    if delta > k {
        return None;
    }
    let hub = (0..g.vertex_count()).find(|&u| g.degree(u) == delta)?;
    for (offset, id) in edges
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| u == hub || v == hub)
        .map(|(id, _)| id)
        .enumerate()
    {
        let (u, v) = edges[id];
        colors[id] = Some(offset);
        used[u] |= 1 << offset;
        used[v] |= 1 << offset;
    }

    fn dfs(
        edges: &[(usize, usize)],
        colors: &mut Vec<Option<usize>>,
        used: &mut Vec<u64>,
        full: u64,
    ) -> bool {
        // Most-constrained uncolored edge.
        let mut pick = None;
        let mut pick_avail = u32::MAX;
        for (id, &(u, v)) in edges.iter().enumerate() {
            if colors[id].is_some() {
                continue;
            }
            let avail = full & !(used[u] | used[v]);
            let count = avail.count_ones();
            if count == 0 {
                return false;
            }
            if count < pick_avail {
                pick = Some((id, avail));
                pick_avail = count;
            }
        }
        let Some((id, avail)) = pick else {
            return true;
        };
        let (u, v) = edges[id];
        let mut bits = avail;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            colors[id] = Some(c);
            used[u] |= 1 << c;
            used[v] |= 1 << c;
            if dfs(edges, colors, used, full) {
                return true;
            }
            colors[id] = None;
            used[u] &= !(1 << c);
            used[v] &= !(1 << c);
        }
        false
    }

    dfs(&edges, &mut colors, &mut used, full)
        .then(|| colors.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphFamily;

    fn gen(spec: &str) -> Graph {
        GraphFamily::parse(spec).unwrap().generate().unwrap()
    }

    #[test]
    fn vizing_stays_within_delta_plus_one() {
        for spec in [
            "cycle:6",
            "cycle:7",
            "complete:4",
            "complete:7",
            "complete_bipartite:4:4",
            "star:5",
            "petersen",
            "wheel:9",
            "grid:3:4",
            "random_gnp:10:0.5:1",
            "random_gnp:10:0.8:2",
        ] {
            let g = gen(spec);
            let ec = edge_coloring_vizing(&g);
            assert!(is_proper_edge_coloring(&g, &ec), "{spec}");
            assert!(
                ec.palette_size <= g.max_degree() + 1,
                "{spec}: {} > {} + 1",
                ec.palette_size,
                g.max_degree()
            );
        }
    }

    #[test]
    fn star_needs_exactly_its_degree() {
        let g = gen("star:5");
        let ec = edge_coloring_vizing(&g);
        assert!(is_proper_edge_coloring(&g, &ec));
        assert_eq!(ec.palette_size, 5);
    }

    #[test]
    fn chromatic_index_values() {
        let limits = SolverLimits::default();
        let (chi, ec) = chromatic_index_exact(&gen("cycle:5"), &limits).unwrap();
        assert_eq!(chi, 3);
        assert!(is_proper_edge_coloring(&gen("cycle:5"), &ec));

        let (chi, _) = chromatic_index_exact(&gen("cycle:6"), &limits).unwrap();
        assert_eq!(chi, 2);

        let (chi, _) = chromatic_index_exact(&gen("complete_bipartite:3:3"), &limits).unwrap();
        assert_eq!(chi, 3);

        let (chi, ec) = chromatic_index_exact(&gen("petersen"), &limits).unwrap();
        assert_eq!(chi, 4);
        assert_eq!(ec.palette_size, 4);

        // K4 is class 1, K5 class 2.
        assert_eq!(chromatic_index_exact(&gen("complete:4"), &limits).unwrap().0, 3);
        assert_eq!(chromatic_index_exact(&gen("complete:5"), &limits).unwrap().0, 5);
    }

    #[test]
    fn chromatic_index_is_delta_or_delta_plus_one() {
        let limits = SolverLimits::default();
        for seed in 0..10u64 {
            let g = GraphFamily::RandomGnp { n: 8, p: 0.5, seed }.generate().unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let (chi, ec) = chromatic_index_exact(&g, &limits).unwrap();
            assert!(is_proper_edge_coloring(&g, &ec));
            assert_eq!(ec.palette_size, chi);
            assert!(chi == g.max_degree() || chi == g.max_degree() + 1);
        }
    }

    #[test]
    fn guard_applies_to_edge_search() {
        let g = gen("complete:12");
        assert!(chromatic_index_exact(&g, &SolverLimits::default())
            .unwrap_err()
            .is_too_large());
    }

    #[test]
    fn empty_graph_has_chromatic_index_zero() {
        let g = Graph::empty(3);
        let (chi, ec) = chromatic_index_exact(&g, &SolverLimits::default()).unwrap();
        assert_eq!(chi, 0);
        assert_eq!(ec.palette_size, 0);
    }
}
