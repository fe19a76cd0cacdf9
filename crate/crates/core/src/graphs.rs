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

//! Simple undirected graphs on dense integer labels, the generators used as
//! test fixtures, and the union / Cartesian product / join constructions.

mod family;
mod graph6;

pub use family::GraphFamily;
pub use graph6::{encode_graph6, parse_graph6};

use crate::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt::Write as _;

/// Immutable labeled simple undirected graph. Vertices are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list. Self-loops, duplicate
    /// pairs (in either orientation), and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, adj, m })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, sorted. The position of an
    /// edge in this list is its stable edge id.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree of `G` if it is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == r).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    /// BFS 2-coloring test.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Union on a shared vertex universe. The smaller operand is padded with
    /// isolated vertices; an edge present in both operands is kept once, as
    /// `self`'s copy.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n.max(other.n);
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, v) in other.edges() {
            if !self.has_edge(u, v) {
                adj[u].push(v);
                adj[v].push(u);
                m += 1;
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, adj, m }
    }

    /// Cartesian product. Vertex `(a, b)` is flattened to `a * |V(other)| + b`;
    /// `(a,b) ~ (a',b')` iff the pairs agree in one coordinate and are
    /// adjacent in the other factor.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        let n = self.n * n2;
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for a in 0..self.n {
            for (b, b2) in other.edges() {
                let x = a * n2 + b;
                let y = a * n2 + b2;
                adj[x].push(y);
                adj[y].push(x);
                m += 1;
            }
        }
        for b in 0..n2 {
            for (a, a2) in self.edges() {
                let x = a * n2 + b;
                let y = a2 * n2 + b;
                adj[x].push(y);
                adj[y].push(x);
                m += 1;
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, adj, m }
    }

    /// Join: disjoint copies plus all cross edges. `self` keeps its labels,
    /// `other`'s shift up by `|V(self)|`.
    pub fn join(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let n = self.n + other.n;
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, v) in other.edges() {
            adj[u + offset].push(v + offset);
            adj[v + offset].push(u + offset);
            m += 1;
        }
        for u in 0..self.n {
            for v in 0..other.n {
                adj[u].push(v + offset);
                adj[v + offset].push(u);
                m += 1;
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, adj, m }
    }

    /// DOT text for rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for u in 0..self.n {
            let _ = writeln!(out, "  {u};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Structural facts consumed by the corollary bounds.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// `Some(r)` when every vertex has degree `r`.
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub components: usize,
    /// Cycle space dimension `|E| - |V| + components`.
    pub cycle_count: usize,
    /// Bipartite with at most one cycle.
    pub unicyclic_bipartite: bool,
    pub degeneracy: usize,
    /// Ordering with back-degree at most `degeneracy` (min-degree
    /// elimination, reversed).
    pub elimination_ordering: Vec<usize>,
}

/// Computes the structure flags used to dispatch upper-bound corollaries.
pub fn structure_report(g: &Graph) -> StructureReport {
    let components = g.component_count();
    let cycle_count = g.edge_count() + components - g.vertex_count();
    let bipartite = g.is_bipartite();
    let (degeneracy, elimination_ordering) = degeneracy_ordering(g);
    StructureReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        regular: g.regular_degree(),
        bipartite,
        components,
        cycle_count,
        unicyclic_bipartite: bipartite && cycle_count <= 1,
        degeneracy,
        elimination_ordering,
    }
}

/// Min-degree elimination. Returns the degeneracy together with an ordering
/// in which every vertex has at most that many earlier neighbors.
pub fn degeneracy_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| !removed[u])
            .min_by_key(|&u| (deg[u], u))
            .expect("vertex remains");
        degeneracy = degeneracy.max(deg[u]);
        removed[u] = true;
        order.push(u);
        for &v in g.neighbors(u) {
            if !removed[v] {
                deg[v] -= 1;
            }
        }
    }
    order.reverse();
    (degeneracy, order)
}

/// If `ordering` witnesses restricted degeneracy (every vertex's earlier
/// neighborhood is a clique), returns the max back-degree under it.
pub fn restricted_degeneracy(g: &Graph, ordering: &[usize]) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if ordering.len() != n {
        return Err(Error::InvalidInput(format!(
            "ordering has {} entries, expected {n}",
            ordering.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if pos[v] != usize::MAX {
            return Err(Error::InvalidInput(format!(
                "ordering repeats vertex {v}"
            )));
        }
        pos[v] = i;
    }
    let mut k = 0;
    for &v in ordering {
        let back: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        k = k.max(back.len());
        for (i, &a) in back.iter().enumerate() {
            for &b in &back[i + 1..] {
                if !g.has_edge(a, b) {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(k))
}

/// Parses the plain edge-list text format: first line `n m`, then `m` lines
/// `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::EdgeList(format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("invalid {what}")))
    };
    let n = next_usize("vertex count")?;
    let m = next_usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_usize("edge endpoint")?;
        let v = next_usize("edge endpoint")?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::EdgeList("trailing tokens after edge list".into()));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the plain edge-list text format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
