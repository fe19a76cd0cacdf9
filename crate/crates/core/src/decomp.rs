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

//! Exact solvers for the three bridge invariants: star arboricity,
//! chromatic index, and domination number, each returning a certified
//! witness.

mod vizing;

pub use vizing::{
    chromatic_index_exact, edge_coloring_vizing, is_proper_edge_coloring, EdgeColorRecord,
    EdgeColoring,
};

use crate::graphs::Graph;
use crate::{Error, Result, SolverLimits};
use serde::Serialize;

/// Partition of `E(G)` into star forests, with the chosen center of every
/// star component.
#[derive(Debug, Clone, Serialize)]
pub struct StarForestDecomposition {
    /// Edge subsets, each a star forest; together they partition `E(G)`.
    pub parts: Vec<Vec<(usize, usize)>>,
    /// Per part: one center per star component, sorted.
    pub centers: Vec<Vec<usize>>,
}

impl StarForestDecomposition {
    /// Builds the decomposition from raw parts, deriving centers.
    fn from_parts(g: &Graph, parts: Vec<Vec<(usize, usize)>>) -> Self {
        let centers = parts
            .iter()
            .map(|part| {
                let mut cs: Vec<usize> = star_components(g.vertex_count(), part)
                    .into_iter()
                    .map(|comp| comp.center)
                    .collect();
                cs.sort_unstable();
                cs
            })
            .collect();
        Self { parts, centers }
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

/// Dominating set witness.
#[derive(Debug, Clone, Serialize)]
pub struct DominatingSet {
    pub vertices: Vec<usize>,
}

impl DominatingSet {
    /// Every vertex outside the set has a neighbor inside.
    pub fn dominates(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return false;
            }
            inside[v] = true;
        }
        (0..g.vertex_count())
            .all(|u| inside[u] || g.neighbors(u).iter().any(|&w| inside[w]))
    }
}

/// One star component of an edge subset: its center and the leaf edges.
pub(crate) struct StarComponent {
    pub(crate) center: usize,
    pub(crate) edges: Vec<(usize, usize)>,
}

/// Splits `part` into connected components, assuming each is a star.
/// Centers: the unique vertex of degree >= 2, or the higher-indexed
/// endpoint of a lone edge.
pub(crate) fn star_components(n: usize, part: &[(usize, usize)]) -> Vec<StarComponent> {
    let mut deg = vec![0usize; n];
    for &(u, v) in part {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut by_center: std::collections::BTreeMap<usize, Vec<(usize, usize)>> =
        std::collections::BTreeMap::new();
    for &(u, v) in part {
        let center = if deg[u] >= 2 {
            u
        } else if deg[v] >= 2 {
            v
        } else {
            u.max(v)
        };
        by_center.entry(center).or_default().push((u, v));
    }
    by_center
        .into_iter()
        .map(|(center, edges)| StarComponent { center, edges })
        .collect()
}

/// True iff the subgraph formed by `part` is a star forest, i.e. every edge
/// has at most one endpoint of part-degree >= 2. That single-edge test is
/// equivalent to "acyclic with no path on four vertices".
pub fn is_star_forest(g: &Graph, part: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut deg = vec![0usize; n];
    for &(u, v) in part {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    part.iter().all(|&(u, v)| deg[u] < 2 || deg[v] < 2)
}

fn edge_guard(g: &Graph, limits: &SolverLimits) -> Result<()> {
    let m = g.edge_count();
    if m > limits.max_edges() {
        return Err(Error::TooLarge {
            size: m,
            unit: "edges",
            cap: limits.max_edges(),
        });
    }
    Ok(())
}

/// Exact star arboricity with a witness partition.
///
/// Branch and bound over part labels in descending edge-degree order, with
/// label symmetry breaking (an edge may only open the next new part),
/// star-forest feasibility pruning, forward checking, and a per-part
/// capacity of `|V| - gamma` edges. The search is seeded from the greedy
/// first-fit upper bound and the `ceil(|E| / (|V| - gamma))` lower bound.
pub fn star_arboricity_exact(
    g: &Graph,
    limits: &SolverLimits,
) -> Result<(usize, StarForestDecomposition)> {
    let m = g.edge_count();
    if m == 0 {
        return Ok((0, StarForestDecomposition::from_parts(g, Vec::new())));
    }
    edge_guard(g, limits)?;

    // gamma, exactly when affordable, else its classical lower bound: both
    // make |V| - gamma an upper bound on any star forest's size.
    let gamma = match domination_number_exact(g, limits) {
        Ok((gamma, _)) => gamma,
        Err(Error::TooLarge { .. }) => {
            g.vertex_count().div_ceil(g.max_degree() + 1)
        }
        Err(e) => return Err(e),
    };
    let capacity = g.vertex_count() - gamma;
    let lower = m.div_ceil(capacity).max(1);

    let mut order: Vec<(usize, usize)> = g.edges();
    order.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u) + g.degree(v)));

    // Greedy first-fit warm start.
    let greedy = greedy_star_partition(g, &order);
    let upper = greedy.len();
    if upper == lower {
        return Ok((upper, StarForestDecomposition::from_parts(g, greedy)));
    }
    for p in lower..upper {
        if let Some(parts) = try_star_partition(g, &order, p, capacity) {
            return Ok((p, StarForestDecomposition::from_parts(g, parts)));
        }
    }
    Ok((upper, StarForestDecomposition::from_parts(g, greedy)))
}

fn greedy_star_partition(g: &Graph, order: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut parts: Vec<Vec<(usize, usize)>> = Vec::new();
    for &e in order {
        let slot = parts.iter().position(|part| {
            let mut candidate = part.clone();
            candidate.push(e);
            is_star_forest(g, &candidate)
        });
        match slot {
            Some(i) => parts[i].push(e),
            None => parts.push(vec![e]),
        }
    }
    parts
}

struct StarSearch<'a> {
    order: &'a [(usize, usize)],
    p: usize,
    capacity: usize,
    /// deg[part][vertex] within that part.
    deg: Vec<Vec<usize>>,
    /// adj[part][vertex]: that vertex's part-neighbors.
    adj: Vec<Vec<Vec<usize>>>,
    sizes: Vec<usize>,
    label: Vec<usize>,
    opened: usize,
}

impl StarSearch<'_> {
    /// Adding (u, v) must keep every edge of the part with at most one
    /// endpoint of degree >= 2.
    fn fits(&self, part: usize, u: usize, v: usize) -> bool {
        if self.sizes[part] >= self.capacity {
            return false;
        }
        let du = self.deg[part][u] + 1;
        let dv = self.deg[part][v] + 1;
        if du >= 2 && dv >= 2 {
            return false;
        }
        if du >= 2 && self.adj[part][u].iter().any(|&w| self.deg[part][w] >= 2) {
            return false;
        }
        if dv >= 2 && self.adj[part][v].iter().any(|&w| self.deg[part][w] >= 2) {
            return false;
        }
        true
    }

    fn place(&mut self, part: usize, u: usize, v: usize) {
        self.deg[part][u] += 1;
        self.deg[part][v] += 1;
        self.adj[part][u].push(v);
        self.adj[part][v].push(u);
        self.sizes[part] += 1;
    }

    fn remove(&mut self, part: usize, u: usize, v: usize) {
        self.deg[part][u] -= 1;
        self.deg[part][v] -= 1;
        self.adj[part][u].pop();
        self.adj[part][v].pop();
        self.sizes[part] -= 1;
    }

    fn dfs(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        // Capacity: the remaining edges must fit into the remaining slack,
        // counting parts not yet opened.
        let remaining = self.order.len() - idx;
        let open_slack: usize = (0..self.opened)
            .map(|q| self.capacity - self.sizes[q])
            .sum();
        let slack = open_slack + (self.p - self.opened) * self.capacity;
        if remaining > slack {
            return false;
        }
        let (u, v) = self.order[idx];
        let limit = (self.opened + 1).min(self.p);
        for part in 0..limit {
            if !self.fits(part, u, v) {
                continue;
            }
            let prev_opened = self.opened;
            self.opened = self.opened.max(part + 1);
            self.place(part, u, v);
            self.label[idx] = part;
            // Forward check: every later edge still has some feasible part.
            let viable = ((idx + 1)..self.order.len()).all(|later| {
                let (x, y) = self.order[later];
                (0..(self.opened + 1).min(self.p)).any(|q| self.fits(q, x, y))
            });
            if viable && self.dfs(idx + 1) {
                return true;
            }
            self.label[idx] = usize::MAX;
            self.remove(part, u, v);
            self.opened = prev_opened;
        }
        false
    }
}

fn try_star_partition(
    g: &Graph,
    order: &[(usize, usize)],
    p: usize,
    capacity: usize,
) -> Option<Vec<Vec<(usize, usize)>>> {
    let n = g.vertex_count();
    let mut search = StarSearch {
        order,
        p,
        capacity,
        deg: vec![vec![0; n]; p],
        adj: vec![vec![Vec::new(); n]; p],
        sizes: vec![0; p],
        label: vec![usize::MAX; order.len()],
        opened: 0,
    };
    search.dfs(0).then(|| {
        let mut parts = vec![Vec::new(); search.opened];
        for (i, &e) in order.iter().enumerate() {
            parts[search.label[i]].push(e);
        }
        for part in &mut parts {
            part.sort_unstable();
        }
        parts
    })
}

/// Exact domination number, certified by searching sizes in ascending
/// order. Branches on the lowest-indexed undominated vertex; its closed
/// neighborhood lists the only useful picks.
pub fn domination_number_exact(
    g: &Graph,
    limits: &SolverLimits,
) -> Result<(usize, DominatingSet)> {
    let n = g.vertex_count();
    if n > limits.max_vertices() {
        return Err(Error::TooLarge {
            size: n,
            unit: "vertices",
            cap: limits.max_vertices(),
        });
    }
    if n == 0 {
        return Ok((0, DominatingSet { vertices: vec![] }));
    }
    let lower = n.div_ceil(g.max_degree() + 1);
    for s in lower..=n {
        let mut chosen = Vec::with_capacity(s);
        let mut dominated = vec![0usize; n];
        if dominate(g, s, &mut chosen, &mut dominated) {
            let witness = DominatingSet {
                vertices: chosen.clone(),
            };
            debug_assert!(witness.dominates(g));
            return Ok((s, witness));
        }
    }
    unreachable!("the whole vertex set dominates");
}

fn dominate(g: &Graph, remaining: usize, chosen: &mut Vec<usize>, dominated: &mut [usize]) -> bool {
    let first_open = dominated.iter().position(|&d| d == 0);
    let Some(v) = first_open else {
        return true;
    };
    if remaining == 0 {
        return false;
    }
    // Each pick dominates at most its closed neighborhood.
    let open = dominated.iter().filter(|&&d| d == 0).count();
    if open > remaining * (g.max_degree() + 1) {
        return false;
    }
    let mut candidates = vec![v];
    candidates.extend_from_slice(g.neighbors(v));
    candidates.sort_unstable();
    for c in candidates {
        chosen.push(c);
        dominated[c] += 1;
        for &w in g.neighbors(c) {
            dominated[w] += 1;
        }
        if dominate(g, remaining - 1, chosen, dominated) {
            return true;
        }
        dominated[c] -= 1;
        for &w in g.neighbors(c) {
            dominated[w] -= 1;
        }
        chosen.pop();
    }
    false
}

/// Size and witness of a maximum star forest: `|V| - gamma(G)` edges,
/// realized by pointing every non-dominator at a dominator.
pub fn max_star_forest_edges(
    g: &Graph,
    limits: &SolverLimits,
) -> Result<(usize, Vec<(usize, usize)>)> {
    let (gamma, dom) = domination_number_exact(g, limits)?;
    let n = g.vertex_count();
    let mut in_set = vec![false; n];
    for &v in &dom.vertices {
        in_set[v] = true;
    }
    let mut witness = Vec::with_capacity(n - gamma);
    for u in 0..n {
        if in_set[u] {
            continue;
        }
        let dominator = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&w| in_set[w])
            .expect("witness dominates");
        witness.push((u.min(dominator), u.max(dominator)));
    }
    witness.sort_unstable();
    debug_assert!(is_star_forest(g, &witness));
    Ok((n - gamma, witness))
}
