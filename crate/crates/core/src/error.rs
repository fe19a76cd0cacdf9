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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("instance too large for exact search: {size} {unit} exceeds cap {cap}")]
    TooLarge {
        size: usize,
        unit: &'static str,
        cap: usize,
    },

    #[error("coloring is incomplete: {0}")]
    IncompleteColoring(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A constructed object failed its own certificate check. This signals a
    /// bug (or a violated caller contract), never a data condition.
    #[error("integrity failure: {0}")]
    Integrity(String),
}

impl Error {
    pub fn is_too_large(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
