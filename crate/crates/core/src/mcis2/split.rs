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

//! Splitting a maximal isomorphism at forbidden pairs.

use alloc::vec;
use alloc::vec::Vec;

use super::{BiconIso, EmbeddedBlock, MaximalIso};
use crate::bctree::biconnected_components;
use crate::WeightFn;

const NONE: u32 = u32::MAX;

pub(super) struct Split {
    pub pieces: Vec<BiconIso>,
    /// Piece index per entry of `phi.mapped_edges`, `NONE` if unmapped.
    pub piece_of_edge: Vec<u32>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(super) fn split(
    g: &EmbeddedBlock,
    h: &EmbeddedBlock,
    w: &WeightFn,
    phi: &MaximalIso,
    excluded: Option<usize>,
) -> Vec<BiconIso> {
    split_detailed(g, h, w, phi, excluded).pieces
}

pub(super) fn split_detailed(
    g: &EmbeddedBlock,
    h: &EmbeddedBlock,
    w: &WeightFn,
    phi: &MaximalIso,
    excluded: Option<usize>,
) -> Split {
    let vscore: Vec<Option<f64>> =
        phi.vertex_map
            .iter()
            .map(|&(x, y)| {
                if Some(x) == excluded {
                    None
                } else {
                    w.vertex_score(g.vertex_labels[x], h.vertex_labels[y]).value()
                }
            })
            .collect();
    let escore: Vec<Option<f64>> =
        phi.mapped_edges.iter().map(|&(e, f, _)| w.edge_score(g.edge_labels[e], h.edge_labels[f]).value()).collect();
    let vidx = |x: usize| phi.vertex_map.binary_search_by_key(&x, |m| m.0).expect("mapped vertex");

    if vscore.iter().all(Option::is_some) && escore.iter().all(Option::is_some) {
        let weight = vscore.iter().chain(&escore).map(|s| s.unwrap_or(0.0)).sum();
        let mut mapped_edges = phi.mapped_edges.clone();
        mapped_edges.sort_unstable();
        let piece = BiconIso { vertex_map: phi.vertex_map.clone(), mapped_edges, weight };
        return Split { pieces: vec![piece], piece_of_edge: vec![0; phi.mapped_edges.len()] };
    }

    // Group faces across allowed shared chords.
    let nf = phi.face_pairs.len();
    let mut parent: Vec<usize> = (0..nf).collect();
    for (i, s) in escore.iter().enumerate() {
        let [a, b] = phi.edge_face_pairs[i];
        if s.is_some() && a != NONE && b != NONE {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            parent[ra] = rb;
        }
    }
    let mut group_of_face = vec![NONE; nf];
    let mut groups = 0u32;
    for f in 0..nf {
        let r = find(&mut parent, f);
        if group_of_face[r] == NONE {
            group_of_face[r] = groups;
            groups += 1;
        }
        group_of_face[f] = group_of_face[r];
    }
    // Per group: its vertices (indices into vertex_map) and edges (indices
    // into mapped_edges), forbidden ones dropped.
    let mut gverts: Vec<Vec<usize>> = vec![Vec::new(); groups as usize];
    let mut gedges: Vec<Vec<usize>> = vec![Vec::new(); groups as usize];
    for (fi, &(gf, _)) in phi.face_pairs.iter().enumerate() {
        let grp = group_of_face[fi] as usize;
        for &x in &g.emb.faces[gf] {
            let i = vidx(x);
            if vscore[i].is_some() {
                gverts[grp].push(i);
            }
        }
    }
    for (i, &(e, _, _)) in phi.mapped_edges.iter().enumerate() {
        if escore[i].is_none() {
            continue;
        }
        let (a, b) = g.emb.edges[e];
        if vscore[vidx(a)].is_none() || vscore[vidx(b)].is_none() {
            continue;
        }
        let [fa, fb] = phi.edge_face_pairs[i];
        let ga = group_of_face[fa as usize];
        gedges[ga as usize].push(i);
        if fb != NONE && group_of_face[fb as usize] != ga {
            gedges[group_of_face[fb as usize] as usize].push(i);
        }
    }

    let mut pieces = Vec::new();
    let mut piece_of_edge = vec![NONE; phi.mapped_edges.len()];
    for (verts, edges) in gverts.iter_mut().zip(&gedges) {
        verts.sort_unstable();
        verts.dedup();
        let local = |i: usize| verts.binary_search(&i).expect("group vertex");
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
        for (k, &i) in edges.iter().enumerate() {
            let (e, _, _) = phi.mapped_edges[i];
            let (a, b) = g.emb.edges[e];
            let (la, lb) = (local(vidx(a)), local(vidx(b)));
            adj[la].push((lb, k));
            adj[lb].push((la, k));
        }
        let (comps, _) = biconnected_components(adj.len(), |v| adj[v].as_slice(), edges.len());
        for comp in comps.into_iter().filter(|c| c.len() >= 2) {
            let pid = pieces.len() as u32;
            let mut vm = Vec::new();
            let mut me = Vec::with_capacity(comp.len());
            let mut weight = 0.0;
            for &k in &comp {
                let i = edges[k];
                let (e, _, _) = phi.mapped_edges[i];
                me.push(phi.mapped_edges[i]);
                weight += escore[i].unwrap_or(0.0);
                piece_of_edge[i] = pid;
                let (a, b) = g.emb.edges[e];
                vm.push(vidx(a));
                vm.push(vidx(b));
            }
            vm.sort_unstable();
            vm.dedup();
            weight += vm.iter().map(|&i| vscore[i].unwrap_or(0.0)).sum::<f64>();
            me.sort_unstable();
            pieces.push(BiconIso {
                vertex_map: vm.into_iter().map(|i| phi.vertex_map[i]).collect(),
                mapped_edges: me,
                weight,
            });
        }
    }
    Split { pieces, piece_of_edge }
}

/// Blocks of `piece` after deleting the G vertex `x`, as pieces.
pub(super) fn remove_vertex(
    g: &EmbeddedBlock,
    h: &EmbeddedBlock,
    w: &WeightFn,
    piece: &BiconIso,
    x: usize,
) -> Vec<BiconIso> {
    if piece.image(x).is_none() {
        return vec![piece.clone()];
    }
    let verts: Vec<(usize, usize)> = piece.vertex_map.iter().copied().filter(|m| m.0 != x).collect();
    let local = |v: usize| verts.binary_search_by_key(&v, |m| m.0).expect("piece vertex");
    let edges: Vec<(usize, usize, super::MappingType)> = piece
        .mapped_edges
        .iter()
        .copied()
        .filter(|&(e, _, _)| {
            let (a, b) = g.emb.edges[e];
            a != x && b != x
        })
        .collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
    for (k, &(e, _, _)) in edges.iter().enumerate() {
        let (a, b) = g.emb.edges[e];
        let (la, lb) = (local(a), local(b));
        adj[la].push((lb, k));
        adj[lb].push((la, k));
    }
    let (comps, _) = biconnected_components(adj.len(), |v| adj[v].as_slice(), edges.len());
    let mut out = Vec::new();
    for comp in comps.into_iter().filter(|c| c.len() >= 2) {
        let mut me: Vec<_> = comp.iter().map(|&k| edges[k]).collect();
        me.sort_unstable();
        let mut vm: Vec<(usize, usize)> = Vec::with_capacity(me.len());
        for &(e, _, _) in &me {
            let (a, b) = g.emb.edges[e];
            vm.push(verts[local(a)]);
            vm.push(verts[local(b)]);
        }
        vm.sort_unstable();
        vm.dedup();
        let score = |s: crate::Score| s.value().expect("pieces map no forbidden pair");
        let weight =
            vm.iter().map(|&(a, b)| score(w.vertex_score(g.vertex_labels[a], h.vertex_labels[b]))).sum::<f64>()
                + me.iter().map(|&(e, f, _)| score(w.edge_score(g.edge_labels[e], h.edge_labels[f]))).sum::<f64>();
        out.push(BiconIso { vertex_map: vm, mapped_edges: me, weight });
    }
    out
}
