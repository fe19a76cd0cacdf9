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

//! Test-side oracles, independent of the library's solver paths.

#![allow(dead_code)] // not every test target uses every oracle

use incolor::graphs::{Graph, GraphFamily};
use incolor::incidence::{adjacent, arcs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Naive incidence chromatic number: backtracking over arcs in natural
/// order, trying every color, no symmetry breaking and no saturation
/// heuristics. Exhausts all k-colorings before concluding infeasibility.
pub fn naive_chi_i(g: &Graph) -> usize {
    let arc_list = arcs(g);
    let n = arc_list.len();
    if n == 0 {
        return 0;
    }
    let conflict: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| adjacent(arc_list[i], arc_list[j]))
                .collect()
        })
        .collect();

    fn extend(i: usize, k: usize, colors: &mut Vec<usize>, conflict: &[Vec<usize>]) -> bool {
        if i == colors.len() {
            return true;
        }
        for c in 0..k {
            if conflict[i].iter().all(|&j| colors[j] != c) {
                colors[i] = c;
                if extend(i + 1, k, colors, conflict) {
                    return true;
                }
            }
        }
        colors[i] = usize::MAX;
        false
    }

    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if extend(0, k, &mut colors, &conflict) {
            return k;
        }
    }
    unreachable!("coloring every arc differently always works")
}

/// All labeled graphs on `n` vertices whose edge set makes them connected.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Length of a shortest cycle, `None` for forests. BFS from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v && v != u {
                    let cycle = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(cycle, |b| b.min(cycle)));
                }
            }
        }
    }
    best
}

/// Deterministic random connected graph with 2..=8 vertices.
pub fn random_connected_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 + (seed as usize % 7);
    let p = 0.25 + 0.07 * (seed % 8) as f64;
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() && g.edge_count() > 0 {
            return g;
        }
    }
}

/// Deterministic random graph (possibly disconnected) with 1..=8 vertices.
pub fn random_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = 1 + (seed as usize % 8);
    let p = 0.15 + 0.08 * (seed % 9) as f64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// The fixture corpus: one instance per family, desk-scale.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut specs: Vec<String> = Vec::new();
    for n in 3..=10 {
        specs.push(format!("cycle:{n}"));
    }
    for n in [2usize, 4, 6] {
        specs.push(format!("path:{n}"));
    }
    for n in 2..=7 {
        specs.push(format!("complete:{n}"));
    }
    for (m, n) in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)] {
        specs.push(format!("complete_bipartite:{m}:{n}"));
    }
    for k in [1usize, 3, 5] {
        specs.push(format!("star:{k}"));
    }
    for rim in [3usize, 5, 7, 8, 9] {
        specs.push(format!("wheel:{rim}"));
    }
    specs.push("grid:2:3".into());
    specs.push("grid:3:3".into());
    for n in [3usize, 4, 5] {
        specs.push(format!("prism:{n}"));
    }
    specs.push("petersen".into());
    for seed in 0..3u64 {
        specs.push(format!("random_gnp:8:0.4:{seed}"));
        specs.push(format!("random_ktree:2:7:{seed}"));
    }
    specs.push("matching:10a".into());
    specs.push("matching:10b".into());
    specs.push("null:4".into());
    specs
        .into_iter()
        .map(|s| {
            let g = GraphFamily::parse(&s).unwrap().generate().unwrap();
            (s, g)
        })
        .collect()
}

/// Prints the acceptance line for one criterion and panics on failure.
pub fn report_criterion(number: usize, name: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {number:02} ({name}): {}{}",
        if ok { "PASS" } else { "FAIL" },
        if detail.is_empty() {
            String::new()
        } else {
            format!(" — {detail}")
        }
    );
    assert!(ok, "acceptance criterion {number} failed: {detail}");
}
