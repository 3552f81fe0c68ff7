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

//! Face-by-face extension of an edge seed along the weak dual trees.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{EmbeddedBlock, MappingType};
use crate::embed::{FaceSlot, OuterplanarEmbedding};

const NONE: u32 = u32::MAX;

/// A maximal common biconnected induced subgraph isomorphism, before
/// splitting. Local ids throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximalIso {
    /// `(vertex of G, vertex of H)`, sorted.
    pub vertex_map: Vec<(usize, usize)>,
    /// `(edge of G, edge of H, type)` in discovery order; the seed is first.
    pub mapped_edges: Vec<(usize, usize, MappingType)>,
    /// `(inner face of G, inner face of H)` in discovery order.
    pub face_pairs: Vec<(usize, usize)>,
    /// For each mapped edge, indices into `face_pairs` of its mapped faces.
    pub(crate) edge_face_pairs: Vec<[u32; 2]>,
    pub(crate) face_steps: usize,
}

impl MaximalIso {
    /// Mapped faces (indices into `face_pairs`) incident to the `i`-th
    /// mapped edge.
    pub fn faces_of_mapped_edge(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edge_face_pairs[i].iter().filter(|&&f| f != NONE).map(|&f| f as usize)
    }
}

/// One face pair waiting to be walked: the faces are entered through a mapped
/// edge `(ga, gb) -> (ha, hb)` sitting at boundary position `pg` / `ph`.
struct Entry {
    gf: usize,
    hf: usize,
    pg: usize,
    ph: usize,
    ga: usize,
    ha: usize,
}

/// Reusable scratch state, reset through touched lists so that a run costs
/// time proportional to its output.
pub(super) struct Extender {
    g2h: Vec<u32>,
    h2g: Vec<u32>,
    gface: Vec<u32>,
    hface: Vec<bool>,
    gedge: Vec<u32>,
    touched_gv: Vec<usize>,
    touched_hv: Vec<usize>,
    touched_gf: Vec<usize>,
    touched_hf: Vec<usize>,
    touched_ge: Vec<usize>,
    walk_g: Vec<usize>,
    walk_h: Vec<usize>,
    queue: VecDeque<Entry>,
}

/// Slot (0 or 1) of inner face `f` at edge `e`.
fn slot_of(emb: &OuterplanarEmbedding, e: usize, f: usize) -> usize {
    if emb.edge_faces[e][0] == FaceSlot::Inner(f) {
        0
    } else {
        debug_assert_eq!(emb.edge_faces[e][1], FaceSlot::Inner(f));
        1
    }
}

/// Boundary of face `f` starting at `a`, which is an endpoint of the edge at
/// position `p`, walking away from that edge. Returns the vertices in walk
/// order into `out` and the traversed edges (edge `i` joins `out[i]` and
/// `out[i + 1]`, the last one closes the cycle) into `edges`.
fn walk(emb: &OuterplanarEmbedding, f: usize, p: usize, a: usize, out: &mut Vec<usize>, edges: &mut Vec<usize>) {
    let face = &emb.faces[f];
    let fe = &emb.face_edges[f];
    let len = face.len();
    out.clear();
    edges.clear();
    if face[p] == a {
        for i in 0..len {
            out.push(face[(p + len - i) % len]);
            edges.push(fe[(p + 2 * len - i - 1) % len]);
        }
    } else {
        debug_assert_eq!(face[(p + 1) % len], a);
        for i in 0..len {
            out.push(face[(p + 1 + i) % len]);
            edges.push(fe[(p + 1 + i) % len]);
        }
    }
}

impl Extender {
    pub(super) fn new(g: &EmbeddedBlock, h: &EmbeddedBlock) -> Self {
        Extender {
            g2h: vec![NONE; g.vertex_count()],
            h2g: vec![NONE; h.vertex_count()],
            gface: vec![NONE; g.emb.faces.len()],
            hface: vec![false; h.emb.faces.len()],
            gedge: vec![NONE; g.edge_count()],
            touched_gv: Vec::new(),
            touched_hv: Vec::new(),
            touched_gf: Vec::new(),
            touched_hf: Vec::new(),
            touched_ge: Vec::new(),
            walk_g: Vec::new(),
            walk_h: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn map_vertex(&mut self, x: usize, y: usize) {
        self.g2h[x] = y as u32;
        self.h2g[y] = x as u32;
        self.touched_gv.push(x);
        self.touched_hv.push(y);
    }

    fn claim_faces(&mut self, gf: usize, hf: usize, phi: &mut MaximalIso) {
        self.gface[gf] = phi.face_pairs.len() as u32;
        self.hface[hf] = true;
        self.touched_gf.push(gf);
        self.touched_hf.push(hf);
        phi.face_pairs.push((gf, hf));
    }

    fn reset(&mut self) {
        for v in self.touched_gv.drain(..) {
            self.g2h[v] = NONE;
        }
        for v in self.touched_hv.drain(..) {
            self.h2g[v] = NONE;
        }
        for f in self.touched_gf.drain(..) {
            self.gface[f] = NONE;
        }
        for f in self.touched_hf.drain(..) {
            self.hface[f] = false;
        }
        for e in self.touched_ge.drain(..) {
            self.gedge[e] = NONE;
        }
        self.queue.clear();
    }

    pub(super) fn run(
        &mut self,
        g: &EmbeddedBlock,
        h: &EmbeddedBlock,
        eg: usize,
        eh: usize,
        t: MappingType,
    ) -> Option<MaximalIso> {
        let (ge, he) = (&g.emb, &h.emb);
        if !super::type_valid(ge, he, eg, eh, t) {
            return None;
        }
        let mut phi = MaximalIso {
            vertex_map: Vec::new(),
            mapped_edges: Vec::new(),
            face_pairs: Vec::new(),
            edge_face_pairs: Vec::new(),
            face_steps: 0,
        };
        let (u, v) = ge.edges[eg];
        let (x, y) = he.edges[eh];
        let (fu, fv) = if t.endpoint_swap { (y, x) } else { (x, y) };
        self.map_vertex(u, fu);
        self.map_vertex(v, fv);
        self.gedge[eg] = 0;
        self.touched_ge.push(eg);
        phi.mapped_edges.push((eg, eh, t));
        phi.edge_face_pairs.push([NONE, NONE]);

        for s in 0..2 {
            let hs = s ^ usize::from(t.face_swap);
            if let (FaceSlot::Inner(gf), FaceSlot::Inner(hf)) = (ge.edge_faces[eg][s], he.edge_faces[eh][hs]) {
                if ge.faces[gf].len() == he.faces[hf].len() {
                    self.enqueue(ge, he, gf, hf, eg, eh, s, hs, u, fu, &mut phi);
                }
            }
        }

        while let Some(en) = self.queue.pop_front() {
            self.walk_face(g, h, en, &mut phi);
        }

        phi.vertex_map = self.touched_gv.iter().map(|&x| (x, self.g2h[x] as usize)).collect();
        phi.vertex_map.sort_unstable();
        #[cfg(debug_assertions)]
        debug_check_induced(ge, he, &phi);
        self.reset();
        Some(phi)
    }

    /// Claims the face pair on slots `gs` / `hs` of the mapped edges `eg` /
    /// `eh` and queues it, entering at the mapped endpoint pair `ga -> ha`.
    #[allow(clippy::too_many_arguments)]
    fn enqueue(
        &mut self,
        ge: &OuterplanarEmbedding,
        he: &OuterplanarEmbedding,
        gf: usize,
        hf: usize,
        eg: usize,
        eh: usize,
        gs: usize,
        hs: usize,
        ga: usize,
        ha: usize,
        phi: &mut MaximalIso,
    ) {
        let idx = phi.face_pairs.len() as u32;
        self.claim_faces(gf, hf, phi);
        let slot = &mut phi.edge_face_pairs[self.gedge[eg] as usize];
        if slot[0] == NONE {
            slot[0] = idx;
        } else {
            slot[1] = idx;
        }
        let pg = ge.edge_face_pos[eg][gs];
        let ph = he.edge_face_pos[eh][hs];
        self.queue.push_back(Entry { gf, hf, pg, ph, ga, ha });
    }

    fn walk_face(&mut self, g: &EmbeddedBlock, h: &EmbeddedBlock, en: Entry, phi: &mut MaximalIso) {
        let (ge, he) = (&g.emb, &h.emb);
        let mut wg = core::mem::take(&mut self.walk_g);
        let mut wh = core::mem::take(&mut self.walk_h);
        let mut eg_walk = Vec::new();
        let mut eh_walk = Vec::new();
        walk(ge, en.gf, en.pg, en.ga, &mut wg, &mut eg_walk);
        walk(he, en.hf, en.ph, en.ha, &mut wh, &mut eh_walk);
        let len = wg.len();
        debug_assert_eq!(len, wh.len());
        // The entry edge's endpoints are the first and last walk vertices.
        for i in 1..len - 1 {
            let (x, y) = (wg[i], wh[i]);
            debug_assert!(self.g2h[x] == NONE && self.h2g[y] == NONE, "face vertex mapped twice");
            self.map_vertex(x, y);
            phi.face_steps += 1;
        }
        for i in 0..len {
            let (e, f) = (eg_walk[i], eh_walk[i]);
            let gs = slot_of(ge, e, en.gf);
            let hs = slot_of(he, f, en.hf);
            let k = self.gedge[e];
            if k == NONE {
                let (a, _) = ge.edges[e];
                let t = MappingType { endpoint_swap: self.g2h[a] as usize != he.edges[f].0, face_swap: gs != hs };
                self.gedge[e] = phi.mapped_edges.len() as u32;
                self.touched_ge.push(e);
                phi.mapped_edges.push((e, f, t));
                phi.edge_face_pairs.push([self.gface[en.gf], NONE]);
            } else {
                debug_assert_eq!(phi.mapped_edges[k as usize].1, f);
                continue;
            }
            // Cross to the faces on the other side of this edge pair.
            if let (FaceSlot::Inner(gf2), FaceSlot::Inner(hf2)) = (ge.edge_faces[e][1 - gs], he.edge_faces[f][1 - hs]) {
                if ge.faces[gf2].len() == he.faces[hf2].len() && self.gface[gf2] == NONE && !self.hface[hf2] {
                    self.enqueue(ge, he, gf2, hf2, e, f, 1 - gs, 1 - hs, wg[i], wh[i], phi);
                }
            }
        }
        self.walk_g = wg;
        self.walk_h = wh;
    }
}

#[cfg(debug_assertions)]
fn debug_check_induced(ge: &OuterplanarEmbedding, he: &OuterplanarEmbedding, phi: &MaximalIso) {
    let image = |x: usize| phi.vertex_map.binary_search_by_key(&x, |m| m.0).ok().map(|i| phi.vertex_map[i].1);
    let mut count = 0;
    for &(x, y) in &phi.vertex_map {
        for &(z, _) in ge.adjacency(x) {
            if let Some(zy) = image(z) {
                debug_assert!(he.edge_index(y, zy).is_some(), "extension is not induced");
                count += 1;
            }
        }
    }
    debug_assert_eq!(count, 2 * phi.mapped_edges.len(), "mapped edge set is not induced");
    let mut inv: Vec<(usize, usize)> = phi.vertex_map.iter().map(|&(x, y)| (y, x)).collect();
    inv.sort_unstable();
    let in_image = |y: usize| inv.binary_search_by_key(&y, |m| m.0).is_ok();
    let h_count: usize = inv.iter().map(|&(y, _)| he.adjacency(y).iter().filter(|&&(z, _)| in_image(z)).count()).sum();
    debug_assert_eq!(h_count, count, "image is not induced");
}
