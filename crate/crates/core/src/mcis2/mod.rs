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

//! Maximum common biconnected induced subgraphs (2-MCIS) of two biconnected
//! outerplanar graphs.
//!
//! An edge-to-edge seed together with a [`MappingType`] determines a unique
//! maximal common biconnected induced subgraph isomorphism, obtained by
//! extending the seed face by face along the weak dual trees
//! ([`Mcis2::maximal_iso`]). Forbidden vertex and edge pairs are removed by
//! splitting the maximal isomorphism into biconnected pieces of
//! non-negative weight ([`Mcis2::split_iso`]). The table [`TableD`] records,
//! per `(edge in G, edge in H, type)`, the weight of the piece containing
//! that edge mapping, so every maximal isomorphism is expanded once and the
//! total work is `O(|G||H|)`.

mod extend;
mod split;
mod table;

use alloc::vec::Vec;

use crate::embed::{FaceSlot, OuterplanarEmbedding};
use crate::graph::{EdgeId, LabeledGraph, Vertex};
use crate::{Label, Result, WeightFn};

pub use extend::MaximalIso;
pub use table::{Cell, TableD};

/// How a seed edge `uv` with faces `(A, B)` is laid onto `u'v'` with faces
/// `(A', B')`.
///
/// | t | endpoints         | faces            |
/// |---|-------------------|------------------|
/// | 1 | u->u', v->v'      | A->A', B->B'     |
/// | 2 | u->v', v->u'      | A->A', B->B'     |
/// | 3 | u->u', v->v'      | A->B', B->A'     |
/// | 4 | u->v', v->u'      | A->B', B->A'     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MappingType {
    pub endpoint_swap: bool,
    pub face_swap: bool,
}

impl MappingType {
    pub const ALL: [MappingType; 4] = [
        MappingType { endpoint_swap: false, face_swap: false },
        MappingType { endpoint_swap: true, face_swap: false },
        MappingType { endpoint_swap: false, face_swap: true },
        MappingType { endpoint_swap: true, face_swap: true },
    ];

    /// Type number in `1..=4`.
    pub fn number(self) -> u8 {
        1 + u8::from(self.endpoint_swap) + 2 * u8::from(self.face_swap)
    }

    pub fn from_number(t: u8) -> Option<MappingType> {
        (1..=4).contains(&t).then(|| MappingType::ALL[usize::from(t - 1)])
    }

    pub(crate) fn index(self) -> usize {
        usize::from(self.number() - 1)
    }
}

/// A biconnected outerplanar block together with its labels.
#[derive(Debug, Clone)]
pub struct EmbeddedBlock {
    pub emb: OuterplanarEmbedding,
    /// Label per local vertex.
    pub vertex_labels: Vec<Label>,
    /// Label per local edge.
    pub edge_labels: Vec<Label>,
}

impl EmbeddedBlock {
    /// The block of `g` formed by the edges `block`.
    pub fn new(g: &LabeledGraph, block: &[EdgeId]) -> Result<Self> {
        let emb = crate::embed::embed_block(g, block)?;
        let vertex_labels = emb.vertices.iter().map(|&v| g.label(v)).collect();
        let edge_labels = emb.edge_ids.iter().map(|&e| g.edge_label(e)).collect();
        Ok(EmbeddedBlock { emb, vertex_labels, edge_labels })
    }

    /// A whole biconnected outerplanar graph.
    pub fn of_graph(g: &LabeledGraph) -> Result<Self> {
        let all: Vec<EdgeId> = (0..g.edge_count()).collect();
        Self::new(g, &all)
    }

    pub fn vertex_count(&self) -> usize {
        self.emb.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.emb.edge_count()
    }

    /// Global id of a local vertex.
    pub fn global(&self, v: usize) -> Vertex {
        self.emb.vertices[v]
    }
}

/// A common biconnected induced subgraph isomorphism between two blocks,
/// in local vertex and edge ids.
#[derive(Debug, Clone, PartialEq)]
pub struct BiconIso {
    /// `(vertex of G, vertex of H)`, sorted.
    pub vertex_map: Vec<(usize, usize)>,
    /// `(edge of G, edge of H, type)`, sorted.
    pub mapped_edges: Vec<(usize, usize, MappingType)>,
    pub weight: f64,
}

impl BiconIso {
    pub fn image(&self, v: usize) -> Option<usize> {
        self.vertex_map.binary_search_by_key(&v, |&(x, _)| x).ok().map(|i| self.vertex_map[i].1)
    }

    pub fn maps(&self, v: usize, w: usize) -> bool {
        self.image(v) == Some(w)
    }

    /// The biconnected pieces left after deleting the G vertex `x` (the piece
    /// itself if `x` is not mapped).
    pub fn without_vertex(&self, g: &EmbeddedBlock, h: &EmbeddedBlock, w: &WeightFn, x: usize) -> Vec<BiconIso> {
        split::remove_vertex(g, h, w, self, x)
    }

    /// The map in global vertex ids.
    pub fn to_global(&self, g: &EmbeddedBlock, h: &EmbeddedBlock) -> Vec<(Vertex, Vertex)> {
        let mut m: Vec<_> = self.vertex_map.iter().map(|&(x, y)| (g.global(x), h.global(y))).collect();
        m.sort_unstable();
        m
    }
}

/// Operation counters of one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Mcis2Stats {
    /// Seeds expanded into a maximal isomorphism.
    pub expansions: usize,
    /// Table cells written.
    pub cells_written: usize,
    /// Writes into an already defined cell (0 in a correct run).
    pub rewrites: usize,
    /// Vertex mapping steps performed while walking face boundaries.
    pub face_steps: usize,
}

/// Result of one full table run.
#[derive(Debug, Clone)]
pub struct Mcis2Run {
    pub table: TableD,
    /// Every split piece in discovery order (seed `(e, f, t)` ascending).
    pub pieces: Vec<BiconIso>,
    pub stats: Mcis2Stats,
}

impl Mcis2Run {
    /// Largest entry of the table, 0 when no cell holds a weight.
    pub fn max_weight(&self) -> f64 {
        self.table.max_weight().unwrap_or(0.0)
    }
}

/// 2-MCIS engine for one pair of blocks.
pub struct Mcis2<'a> {
    pub g: &'a EmbeddedBlock,
    pub h: &'a EmbeddedBlock,
    pub w: &'a WeightFn,
    ext: extend::Extender,
}

impl<'a> Mcis2<'a> {
    pub fn new(g: &'a EmbeddedBlock, h: &'a EmbeddedBlock, w: &'a WeightFn) -> Self {
        Mcis2 { g, h, w, ext: extend::Extender::new(g, h) }
    }

    /// True iff some face slot paired by `t` maps an inner face onto an
    /// inner face with the same boundary length.
    pub fn type_valid(&self, eg: usize, eh: usize, t: MappingType) -> bool {
        type_valid(&self.g.emb, &self.h.emb, eg, eh, t)
    }

    /// The unique maximal isomorphism mapping `eg` onto `eh` with type `t`,
    /// or `None` when `t` is not valid for the pair. Weights are ignored.
    pub fn maximal_iso(&mut self, eg: usize, eh: usize, t: MappingType) -> Option<MaximalIso> {
        self.ext.run(self.g, self.h, eg, eh, t)
    }

    /// Splits a maximal isomorphism at forbidden pairs into biconnected
    /// pieces of non-negative weight. `excluded` is a local vertex of G that
    /// is treated as forbidden as well.
    pub fn split_iso(&self, phi: &MaximalIso, excluded: Option<usize>) -> Vec<BiconIso> {
        split::split(self.g, self.h, self.w, phi, excluded)
    }

    /// One pass of the table algorithm. `on_split` sees the pieces of every
    /// expanded maximal isomorphism right after splitting.
    pub fn run_with(&mut self, mut on_split: impl FnMut(&[BiconIso])) -> Mcis2Run {
        let (mg, mh) = (self.g.edge_count(), self.h.edge_count());
        let mut table = TableD::new(mg, mh);
        let mut pieces = Vec::new();
        let mut stats = Mcis2Stats::default();
        for eg in 0..mg {
            for eh in 0..mh {
                for t in MappingType::ALL {
                    if table.get(eg, eh, t) != Cell::Undefined || !self.type_valid(eg, eh, t) {
                        continue;
                    }
                    let phi = self.ext.run(self.g, self.h, eg, eh, t).expect("valid type");
                    stats.expansions += 1;
                    stats.face_steps += phi.face_steps;
                    let split = split::split_detailed(self.g, self.h, self.w, &phi, None);
                    on_split(&split.pieces);
                    for (i, &(e, f, ty)) in phi.mapped_edges.iter().enumerate() {
                        let cell = match split.piece_of_edge[i] {
                            u32::MAX => Cell::NegInf,
                            p => Cell::Weight(split.pieces[p as usize].weight),
                        };
                        if table.set(e, f, ty, cell) {
                            stats.rewrites += 1;
                        }
                        stats.cells_written += 1;
                    }
                    debug_assert_ne!(table.get(eg, eh, t), Cell::Undefined);
                    pieces.extend(split.pieces);
                }
            }
        }
        Mcis2Run { table, pieces, stats }
    }

    pub fn run(&mut self) -> Mcis2Run {
        self.run_with(|_| {})
    }
}

pub(crate) fn type_valid(
    g: &OuterplanarEmbedding,
    h: &OuterplanarEmbedding,
    eg: usize,
    eh: usize,
    t: MappingType,
) -> bool {
    (0..2).any(|s| {
        let a = g.edge_faces[eg][s];
        let b = h.edge_faces[eh][s ^ usize::from(t.face_swap)];
        matches!((a, b), (FaceSlot::Inner(x), FaceSlot::Inner(y)) if g.faces[x].len() == h.faces[y].len())
    })
}

/// Weight of a 2-MCIS of two blocks and a witness (the piece with the
/// smallest seed among the maximum ones). With `fixed = Some((v, w))` (local
/// ids) only pieces mapping `v` onto `w` compete. Returns `(0, None)` when
/// there is no common biconnected subgraph.
pub fn mcis2_weight(
    g: &EmbeddedBlock,
    h: &EmbeddedBlock,
    w: &WeightFn,
    fixed: Option<(usize, usize)>,
) -> (f64, Option<BiconIso>) {
    let run = Mcis2::new(g, h, w).run();
    let table_max = run.max_weight();
    let mut best: Option<BiconIso> = None;
    for p in run.pieces {
        if let Some((v, x)) = fixed {
            if !p.maps(v, x) {
                continue;
            }
        }
        if best.as_ref().is_none_or(|b| p.weight > b.weight) {
            best = Some(p);
        }
    }
    if fixed.is_none() {
        debug_assert_eq!(best.as_ref().map_or(0.0, |b| b.weight), table_max);
    }
    (best.as_ref().map_or(0.0, |b| b.weight), best)
}

/// Calls `emit` for every maximum common biconnected induced subgraph
/// isomorphism, each exactly once.
///
/// The first pass computes the maximum weight, the second repeats the table
/// algorithm and emits each piece of maximum weight as soon as it is split
/// off.
pub fn mcis2_enumerate(g: &EmbeddedBlock, h: &EmbeddedBlock, w: &WeightFn, mut emit: impl FnMut(&BiconIso)) {
    let first = Mcis2::new(g, h, w).run();
    if first.pieces.is_empty() {
        return;
    }
    let max = first.max_weight();
    Mcis2::new(g, h, w).run_with(|pieces| {
        for p in pieces.iter().filter(|p| p.weight == max) {
            emit(p);
        }
    });
}

/// Collecting form of [`mcis2_enumerate`].
pub fn mcis2_enumerate_all(g: &EmbeddedBlock, h: &EmbeddedBlock, w: &WeightFn) -> Vec<BiconIso> {
    let mut out = Vec::new();
    mcis2_enumerate(g, h, w, |p| out.push(p.clone()));
    out
}
