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

//! Deterministic graph generators, addressable by compact text specs such as
//! `cycle:5`, `random_gnp:8:0.4:7`, or `matching:10a`.

use super::Graph;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A named generator plus its parameters. Random families are pure functions
/// of their seed.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Star { leaves: usize },
    /// Hub plus a rim cycle of length `rim`; `rim + 1` vertices.
    Wheel { rim: usize },
    Grid { rows: usize, cols: usize },
    /// `C_n x K_2`.
    Prism { n: usize },
    Petersen,
    /// Edgeless graph.
    Null { n: usize },
    RandomGnp { n: usize, p: f64, seed: u64 },
    RandomKtree { k: usize, n: usize, seed: u64 },
    /// One of the two perfect matchings whose union is `C_n` (`n` even).
    Matching { n: usize, second: bool },
}

impl GraphFamily {
    /// Parses a `name:args` spec. Integer arguments are `:`-separated;
    /// `matching` takes the compact form `<n>a` / `<n>b`. Random families
    /// accept an optional trailing seed argument, defaulting to
    /// `default_seed`.
    pub fn parse_with_seed(spec: &str, default_seed: u64) -> Result<Self> {
        let err = |reason: &str| Error::InvalidFamily {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (name, rest) = match spec.split_once(':') {
            Some((name, rest)) => (name, rest),
            None => (spec, ""),
        };
        let args: Vec<&str> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(':').collect()
        };
        let want = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(&format!("expected {k} argument(s), got {}", args.len())))
            }
        };
        let int = |s: &str| -> Result<usize> {
            s.parse::<usize>()
                .map_err(|_| err(&format!("`{s}` is not an integer")))
        };
        match name {
            "cycle" => {
                want(1)?;
                Ok(Self::Cycle { n: int(args[0])? })
            }
            "path" => {
                want(1)?;
                Ok(Self::Path { n: int(args[0])? })
            }
            "complete" => {
                want(1)?;
                Ok(Self::Complete { n: int(args[0])? })
            }
            "complete_bipartite" => {
                want(2)?;
                Ok(Self::CompleteBipartite {
                    m: int(args[0])?,
                    n: int(args[1])?,
                })
            }
            "star" => {
                want(1)?;
                Ok(Self::Star {
                    leaves: int(args[0])?,
                })
            }
            "wheel" => {
                want(1)?;
                Ok(Self::Wheel { rim: int(args[0])? })
            }
            "grid" => {
                want(2)?;
                Ok(Self::Grid {
                    rows: int(args[0])?,
                    cols: int(args[1])?,
                })
            }
            "prism" => {
                want(1)?;
                Ok(Self::Prism { n: int(args[0])? })
            }
            "petersen" => {
                want(0)?;
                Ok(Self::Petersen)
            }
            "null" => {
                want(1)?;
                Ok(Self::Null { n: int(args[0])? })
            }
            "random_gnp" => {
                if args.len() != 2 && args.len() != 3 {
                    return Err(err("expected n:p or n:p:seed"));
                }
                let p: f64 = args[1]
                    .parse()
                    .map_err(|_| err("probability is not a number"))?;
                let seed = if args.len() == 3 {
                    args[2].parse().map_err(|_| err("seed is not an integer"))?
                } else {
                    default_seed
                };
                Ok(Self::RandomGnp {
                    n: int(args[0])?,
                    p,
                    seed,
                })
            }
            "random_ktree" => {
                if args.len() != 2 && args.len() != 3 {
                    return Err(err("expected k:n or k:n:seed"));
                }
                let seed = if args.len() == 3 {
                    args[2].parse().map_err(|_| err("seed is not an integer"))?
                } else {
                    default_seed
                };
                Ok(Self::RandomKtree {
                    k: int(args[0])?,
                    n: int(args[1])?,
                    seed,
                })
            }
            "matching" | "matching_pair" => {
                want(1)?;
                let arg = args[0];
                let (digits, which) = arg.split_at(arg.len().saturating_sub(1));
                let second = match which {
                    "a" => false,
                    "b" => true,
                    _ => return Err(err("matching spec must end in `a` or `b`")),
                };
                Ok(Self::Matching {
                    n: int(digits)?,
                    second,
                })
            }
            _ => Err(err("unknown family")),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::parse_with_seed(spec, 0)
    }

    /// Canonical spec string; parsing it reproduces the instance exactly.
    pub fn id(&self) -> String {
        match self {
            Self::Cycle { n } => format!("cycle:{n}"),
            Self::Path { n } => format!("path:{n}"),
            Self::Complete { n } => format!("complete:{n}"),
            Self::CompleteBipartite { m, n } => format!("complete_bipartite:{m}:{n}"),
            Self::Star { leaves } => format!("star:{leaves}"),
            Self::Wheel { rim } => format!("wheel:{rim}"),
            Self::Grid { rows, cols } => format!("grid:{rows}:{cols}"),
            Self::Prism { n } => format!("prism:{n}"),
            Self::Petersen => "petersen".to_string(),
            Self::Null { n } => format!("null:{n}"),
            Self::RandomGnp { n, p, seed } => format!("random_gnp:{n}:{p}:{seed}"),
            Self::RandomKtree { k, n, seed } => format!("random_ktree:{k}:{n}:{seed}"),
            Self::Matching { n, second } => {
                format!("matching:{n}{}", if *second { "b" } else { "a" })
            }
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        let range_err = |reason: String| Error::InvalidFamily {
            spec: self.id(),
            reason,
        };
        match *self {
            Self::Cycle { n } => {
                if n < 3 {
                    return Err(range_err("cycle needs n >= 3".into()));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(n, &edges)
            }
            Self::Path { n } => {
                if n < 1 {
                    return Err(range_err("path needs n >= 1".into()));
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(n, &edges)
            }
            Self::Complete { n } => {
                if n < 1 {
                    return Err(range_err("complete needs n >= 1".into()));
                }
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edge_list(n, &edges)
            }
            Self::CompleteBipartite { m, n } => {
                if m < n || n < 1 {
                    return Err(range_err("complete_bipartite needs m >= n >= 1".into()));
                }
                let mut edges = Vec::new();
                for u in 0..m {
                    for v in 0..n {
                        edges.push((u, m + v));
                    }
                }
                Graph::from_edge_list(m + n, &edges)
            }
            Self::Star { leaves } => {
                if leaves < 1 {
                    return Err(range_err("star needs at least one leaf".into()));
                }
                let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
                Graph::from_edge_list(leaves + 1, &edges)
            }
            Self::Wheel { rim } => {
                if rim < 3 {
                    return Err(range_err("wheel needs a rim of length >= 3".into()));
                }
                let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
                for i in 1..=rim {
                    edges.push((i, if i == rim { 1 } else { i + 1 }));
                }
                Graph::from_edge_list(rim + 1, &edges)
            }
            Self::Grid { rows, cols } => {
                if rows < 1 || cols < 1 {
                    return Err(range_err("grid needs rows, cols >= 1".into()));
                }
                let mut edges = Vec::new();
                for r in 0..rows {
                    for c in 0..cols {
                        if c + 1 < cols {
                            edges.push((r * cols + c, r * cols + c + 1));
                        }
                        if r + 1 < rows {
                            edges.push((r * cols + c, (r + 1) * cols + c));
                        }
                    }
                }
                Graph::from_edge_list(rows * cols, &edges)
            }
            Self::Prism { n } => {
                if n < 3 {
                    return Err(range_err("prism needs n >= 3".into()));
                }
                let cn = Self::Cycle { n }.generate()?;
                let k2 = Self::Complete { n: 2 }.generate()?;
                Ok(cn.cartesian_product(&k2))
            }
            Self::Petersen => {
                // Kneser graph K(5,2): the ten 2-subsets of {0..4},
                // adjacent when disjoint.
                let mut pairs = Vec::new();
                for a in 0..5usize {
                    for b in a + 1..5 {
                        pairs.push((a, b));
                    }
                }
                let mut edges = Vec::new();
                for i in 0..pairs.len() {
                    for j in i + 1..pairs.len() {
                        let (a, b) = pairs[i];
                        let (c, d) = pairs[j];
                        if a != c && a != d && b != c && b != d {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::from_edge_list(10, &edges)
            }
            Self::Null { n } => {
                if n < 1 {
                    return Err(range_err("null needs n >= 1".into()));
                }
                Ok(Graph::empty(n))
            }
            Self::RandomGnp { n, p, seed } => {
                if n < 1 {
                    return Err(range_err("random_gnp needs n >= 1".into()));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(range_err("probability must lie in [0, 1]".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen::<f64>() < p {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edge_list(n, &edges)
            }
            Self::RandomKtree { k, n, seed } => {
                if k < 1 || n < k + 1 {
                    return Err(range_err("random_ktree needs k >= 1 and n >= k + 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                // Base (k+1)-clique; each later vertex attaches to a random
                // existing k-clique. Vertex labels follow construction order,
                // so the identity ordering is restricted k-degenerate.
                let mut cliques: Vec<Vec<usize>> = Vec::new();
                for a in 0..=k {
                    for b in a + 1..=k {
                        edges.push((a, b));
                    }
                }
                for drop in 0..=k {
                    let clique: Vec<usize> = (0..=k).filter(|&x| x != drop).collect();
                    cliques.push(clique);
                }
                for v in k + 1..n {
                    let base = cliques[rng.gen_range(0..cliques.len())].clone();
                    for &u in &base {
                        edges.push((u, v));
                    }
                    for drop in 0..base.len() {
                        let mut clique: Vec<usize> = base
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &u)| u)
                            .collect();
                        clique.push(v);
                        cliques.push(clique);
                    }
                    cliques.push(base);
                }
                Graph::from_edge_list(n, &edges)
            }
            Self::Matching { n, second } => {
                if n < 4 || n % 2 != 0 {
                    return Err(range_err("matching needs an even n >= 4".into()));
                }
                let edges: Vec<_> = if second {
                    (0..n / 2)
                        .map(|i| (2 * i + 1, (2 * i + 2) % n))
                        .collect()
                } else {
                    (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect()
                };
                Graph::from_edge_list(n, &edges)
            }
        }
    }
}
