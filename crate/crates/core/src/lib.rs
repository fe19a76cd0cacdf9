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

//! Incidence coloring toolkit.
//!
//! Every edge `{u, v}` of a simple graph splits into the two opposite arcs
//! `uv` and `vu`; an incidence coloring assigns colors to arcs so that no two
//! adjacent arcs share one. This crate provides the arc model and checker, a
//! certified exact solver for the incidence chromatic number, exact solvers
//! for the three companion invariants (star arboricity, chromatic index,
//! domination number), the constructive `chi_prime + st` upper bound with its
//! domination lower bound, and coloring composers for graph unions, Cartesian
//! products, and joins.
//!
//! All exact searches are desk-scale and refuse instances beyond a
//! configurable guard instead of running unbounded.

pub mod bounds;
pub mod decomp;
mod error;
pub mod graphs;
pub mod incidence;

pub use error::{Error, Result};

/// Caps for the exact solvers.
///
/// `max_arcs` bounds the arc count `2|E|` accepted by arc-level searches;
/// edge-level searches derive their edge cap from it and the domination
/// solver accepts up to `max_arcs / 2` vertices. Beyond the guard, solvers
/// return [`Error::TooLarge`] so callers can fall back to bounds-only
/// reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub max_arcs: usize,
}

impl SolverLimits {
    pub const DEFAULT_MAX_ARCS: usize = 120;

    pub fn new(max_arcs: usize) -> Self {
        Self { max_arcs }
    }

    /// Edge cap for solvers that branch over edges.
    pub fn max_edges(&self) -> usize {
        self.max_arcs / 2
    }

    /// Vertex cap for the domination solver.
    pub fn max_vertices(&self) -> usize {
        self.max_arcs / 2
    }
}

impl Default for SolverLimits {
    fn default() -> Self {
        Self {
            max_arcs: Self::DEFAULT_MAX_ARCS,
        }
    }
}
