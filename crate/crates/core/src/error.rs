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

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {len} vertices")]
    VertexOutOfRange { vertex: Vertex, len: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("anchor set meets {0} components of the kept subgraph, expected exactly one")]
    AmbiguousAnchor(usize),
    #[error("no such edge")]
    UnknownEdge,
    #[error("input too large for brute force ({len} > {limit} vertices)")]
    TooLarge { len: usize, limit: usize },
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParameters(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
