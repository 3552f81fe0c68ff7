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

//! Maximum common connected induced subgraphs of outerplanar graphs under the
//! block-and-bridge preserving (BBP) constraint.
//!
//! The crate is `no_std` and only needs `alloc`. It contains
//!
//! * [`graph`] and [`bctree`]: labeled graphs, connectivity, biconnected
//!   decomposition and block-cut trees,
//! * [`embed`]: outerplanarity testing and the unique embedding of a
//!   biconnected outerplanar graph (outer cycle, inner faces, weak dual tree),
//! * [`matching`]: maximum weight bipartite matching,
//! * [`mcis2`]: maximum common biconnected induced subgraphs of two
//!   biconnected outerplanar graphs in `O(|G||H|)` time, including the
//!   enumeration of all maximum solutions,
//! * [`bbp`]: the full BBP-MCIS solver for outerplanar graphs,
//! * [`oracle`]: brute force references and an independent validity checker,
//! * [`generator`]: seeded random outerplanar graphs with controlled size,
//!   edge/vertex ratio and block size.
//!
//! ```
//! use bbp_mcis_core::{bbp_mcis, GraphBuilder, Label, WeightFn};
//!
//! let mut b = GraphBuilder::new(3, Label(0));
//! b.add_edge(0, 1, Label(0)).unwrap();
//! b.add_edge(1, 2, Label(0)).unwrap();
//! b.add_edge(0, 2, Label(0)).unwrap();
//! let triangle = b.build();
//!
//! let iso = bbp_mcis(&triangle, &triangle, &WeightFn::uniform()).unwrap();
//! assert_eq!(iso.weight, 6.0);
//! ```
#![no_std]

extern crate alloc;

pub mod bbp;
pub mod bctree;
pub mod embed;
mod error;
pub mod generator;
pub mod graph;
mod label;
pub mod matching;
pub mod mcis2;
pub mod oracle;
mod weight;

pub use bbp::{bbp_mcis, BbpSolver, Isomorphism};
pub use bctree::{build_bc_tree, decompose, BNode, BNodeKind, BcTree, Decomposition};
pub use embed::{embed_block, is_outerplanar, FaceSlot, OuterplanarEmbedding};
pub use error::Error;
pub use graph::{cc_of, connected_components, EdgeId, GraphBuilder, LabeledGraph, Vertex};
pub use label::{Label, LabelInterner};
pub use weight::{Score, ScoreRule, WeightFn};

pub type Result<T, E = Error> = core::result::Result<T, E>;
