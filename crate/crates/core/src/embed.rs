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

//! Outerplanarity testing and the embedding of biconnected outerplanar
//! graphs.
//!
//! A biconnected outerplanar graph has a unique outerplanar embedding up to
//! reflection. Its outer face is a Hamiltonian cycle and every other edge is
//! a chord that splits the disk into inner faces. Every edge borders exactly
//! two faces: a chord two inner faces, a hull edge one inner face and the
//! outer face. The inner faces adjacent through chords form a tree, the weak
//! dual.

use alloc::vec;
use alloc::vec::Vec;

use crate::bctree::{biconnected_components, decompose_any};
use crate::graph::{EdgeId, LabeledGraph, Vertex};
use crate::{Error, Result};

/// One of the two faces incident to an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceSlot {
    Inner(usize),
    Outer,
}

impl FaceSlot {
    pub fn inner(self) -> Option<usize> {
        match self {
            FaceSlot::Inner(f) => Some(f),
            FaceSlot::Outer => None,
        }
    }
}

/// Embedding of one biconnected outerplanar block.
///
/// Vertices and edges are renumbered locally. Local vertex `i` is the `i`-th
/// smallest vertex of the block, so local order agrees with global order.
/// Edges are stored with the smaller local endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    /// Global vertex id per local vertex, ascending.
    pub vertices: Vec<Vertex>,
    /// Local endpoints per local edge.
    pub edges: Vec<(usize, usize)>,
    /// Global edge id per local edge.
    pub edge_ids: Vec<EdgeId>,
    /// Hamiltonian outer cycle, starting at local vertex 0 and continuing
    /// with its smaller cycle neighbor.
    pub outer_cycle: Vec<usize>,
    /// Inner face boundaries as cyclic local vertex sequences, each starting
    /// at its smallest vertex. Faces are sorted by (length, sorted vertices).
    pub faces: Vec<Vec<usize>>,
    /// `face_edges[f][i]` joins `faces[f][i]` and `faces[f][i + 1]`.
    pub face_edges: Vec<Vec<usize>>,
    /// Canonical face pair per edge: the inner face with the smaller key in
    /// slot 0, `Outer` always in slot 1.
    pub edge_faces: Vec<[FaceSlot; 2]>,
    /// Position of the edge in the boundary of the face in the matching slot
    /// (meaningless for `Outer`).
    pub edge_face_pos: Vec<[usize; 2]>,
    /// Weak dual tree: `(face, face, shared chord)`.
    pub dual_tree: Vec<(usize, usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl OuterplanarEmbedding {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn local_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Sorted `(local neighbor, local edge)` pairs.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let adj = self.adjacency.get(u)?;
        adj.binary_search_by_key(&v, |&(x, _)| x).ok().map(|i| adj[i].1)
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Boundary length of an inner slot, `None` for the outer face.
    pub fn slot_len(&self, slot: FaceSlot) -> Option<usize> {
        slot.inner().map(|f| self.faces[f].len())
    }

    pub fn is_chord(&self, e: usize) -> bool {
        self.edge_faces[e][1] != FaceSlot::Outer
    }

    /// Canonical `(A, B)` face pair of the edge between the global vertices
    /// `u` and `v`.
    pub fn canonical_face_pair(&self, u: Vertex, v: Vertex) -> Result<(FaceSlot, FaceSlot)> {
        let (lu, lv) = match (self.local_of(u), self.local_of(v)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::UnknownEdge),
        };
        let e = self.edge_index(lu, lv).ok_or(Error::UnknownEdge)?;
        let [a, b] = self.edge_faces[e];
        Ok((a, b))
    }

    /// Embedding of a whole biconnected outerplanar graph.
    pub fn of_graph(g: &LabeledGraph) -> Result<Self> {
        let all: Vec<EdgeId> = (0..g.edge_count()).collect();
        embed_block(g, &all)
    }
}

/// Embeds the biconnected subgraph of `g` formed by the edges `block`.
pub fn embed_block(g: &LabeledGraph, block: &[EdgeId]) -> Result<OuterplanarEmbedding> {
    let mut vertices: Vec<Vertex> = block
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let k = vertices.len();
    if k < 3 {
        return Err(Error::NotBiconnected);
    }
    let local = |v: Vertex| vertices.binary_search(&v).unwrap();
    let mut edge_ids = block.to_vec();
    edge_ids.sort_unstable();
    let edges: Vec<(usize, usize)> = edge_ids
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (local(u), local(v))
        })
        .collect();
    let mut adjacency = vec![Vec::new(); k];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adjacency[u].push((v, i));
        adjacency[v].push((u, i));
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    let (comps, _) = biconnected_components(adjacency.len(), |v| adjacency[v].as_slice(), edges.len());
    if comps.len() != 1 || adjacency.iter().any(|a| a.len() < 2) {
        return Err(Error::NotBiconnected);
    }
    if edges.len() > 2 * k - 3 {
        return Err(Error::NotOuterplanar);
    }

    let cycle = hamiltonian_outer_cycle(&adjacency)?;
    let mut pos = vec![0; k];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    check_chords_nested(&edges, &pos, k)?;

    // rotation at v: neighbors by cyclic offset along the outer cycle
    let offset = |from: usize, to: usize| (pos[to] + k - pos[from]) % k;
    let rotation: Vec<Vec<(usize, usize)>> = (0..k)
        .map(|v| {
            let mut r = adjacency[v].clone();
            r.sort_unstable_by_key(|&(u, _)| offset(v, u));
            r
        })
        .collect();

    // Trace inner faces. A directed edge a->b bounds the inner face on its
    // left; the next vertex is the neighbor of b with the largest offset
    // below that of a. Forward hull edges and both directions of chords are
    // exactly the inner darts.
    let mut used = vec![[false; 2]; edges.len()];
    let dir = |e: usize, from: usize| usize::from(edges[e].0 != from);
    let mut raw_faces: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for i in 0..k {
        let a = cycle[i];
        let b = cycle[(i + 1) % k];
        let mut darts: Vec<(usize, usize)> = vec![(a, b)];
        for &(u, _) in &adjacency[a] {
            if u != b && u != cycle[(i + k - 1) % k] {
                darts.push((a, u));
            }
        }
        for (s, t) in darts {
            let e0 = edge_of(&adjacency, s, t);
            if used[e0][dir(e0, s)] {
                continue;
            }
            let mut fv = Vec::new();
            let mut fe = Vec::new();
            let (mut x, mut y) = (s, t);
            loop {
                let e = edge_of(&adjacency, x, y);
                if used[e][dir(e, x)] {
                    break;
                }
                used[e][dir(e, x)] = true;
                fv.push(x);
                fe.push(e);
                let rot = &rotation[y];
                let ox = offset(y, x);
                let idx = rot.partition_point(|&(u, _)| offset(y, u) < ox);
                debug_assert!(idx > 0);
                let next = rot[idx - 1].0;
                x = y;
                y = next;
            }
            raw_faces.push((fv, fe));
        }
    }

    // canonical rotation and order of faces
    // (length, sorted vertices, rotated vertices, rotated edges)
    type Keyed = (usize, Vec<usize>, Vec<usize>, Vec<usize>);
    let mut faces_keyed: Vec<Keyed> = raw_faces
        .into_iter()
        .map(|(fv, fe)| {
            let start = (0..fv.len()).min_by_key(|&i| fv[i]).unwrap();
            let mut v2 = fv.clone();
            v2.rotate_left(start);
            let mut e2 = fe;
            e2.rotate_left(start);
            let mut sorted = v2.clone();
            sorted.sort_unstable();
            (v2.len(), sorted, v2, e2)
        })
        .collect();
    faces_keyed.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut faces = Vec::with_capacity(faces_keyed.len());
    let mut face_edges = Vec::with_capacity(faces_keyed.len());
    for (_, _, fv, fe) in faces_keyed {
        faces.push(fv);
        face_edges.push(fe);
    }

    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges.len()];
    for (f, fe) in face_edges.iter().enumerate() {
        for (p, &e) in fe.iter().enumerate() {
            incident[e].push((f, p));
        }
    }
    let mut edge_faces = Vec::with_capacity(edges.len());
    let mut edge_face_pos = Vec::with_capacity(edges.len());
    let mut dual_tree = Vec::new();
    for (e, inc) in incident.iter_mut().enumerate() {
        inc.sort_unstable();
        match inc.as_slice() {
            [(f, p)] => {
                edge_faces.push([FaceSlot::Inner(*f), FaceSlot::Outer]);
                edge_face_pos.push([*p, 0]);
            }
            [(f1, p1), (f2, p2)] => {
                edge_faces.push([FaceSlot::Inner(*f1), FaceSlot::Inner(*f2)]);
                edge_face_pos.push([*p1, *p2]);
                dual_tree.push((*f1, *f2, e));
            }
            _ => return Err(Error::NotOuterplanar),
        }
    }

    let start = 0;
    let mut outer_cycle = cycle;
    let s = outer_cycle.iter().position(|&v| v == start).unwrap();
    outer_cycle.rotate_left(s);
    if outer_cycle[1] > outer_cycle[k - 1] {
        outer_cycle[1..].reverse();
    }

    Ok(OuterplanarEmbedding {
        vertices,
        edges,
        edge_ids,
        outer_cycle,
        faces,
        face_edges,
        edge_faces,
        edge_face_pos,
        dual_tree,
        adjacency,
    })
}

fn edge_of(adj: &[Vec<(usize, usize)>], u: usize, v: usize) -> usize {
    let a = &adj[u];
    a[a.binary_search_by_key(&v, |&(x, _)| x).unwrap()].1
}

/// Hamiltonian cycle of a biconnected graph that is outerplanar, found by
/// removing degree-2 vertices (closing the gap with a virtual edge) down to a
/// triangle and re-inserting them in reverse order.
fn hamiltonian_outer_cycle(adj: &[Vec<(usize, usize)>]) -> Result<Vec<usize>> {
    let k = adj.len();
    // Neighbor lists stay short in outerplanar graphs, so plain vectors beat
    // hashing here; the whole pass is within the O(k^2) embedding budget.
    let mut nbr: Vec<Vec<usize>> = adj.iter().map(|a| a.iter().map(|&(u, _)| u).collect()).collect();
    let mut alive = vec![true; k];
    let mut remaining = k;
    let mut stack: Vec<usize> = (0..k).rev().filter(|&v| nbr[v].len() == 2).collect();
    let mut removed = Vec::with_capacity(k);
    while remaining > 3 {
        let v = loop {
            match stack.pop() {
                Some(v) if alive[v] && nbr[v].len() == 2 => break v,
                Some(_) => continue,
                None => return Err(Error::NotOuterplanar),
            }
        };
        let (x, y) = (nbr[v][0].min(nbr[v][1]), nbr[v][0].max(nbr[v][1]));
        alive[v] = false;
        remaining -= 1;
        nbr[v].clear();
        nbr[x].retain(|&u| u != v);
        nbr[y].retain(|&u| u != v);
        if !nbr[x].contains(&y) {
            nbr[x].push(y);
            nbr[y].push(x);
        }
        for z in [y, x] {
            if nbr[z].len() == 2 {
                stack.push(z);
            }
        }
        removed.push((v, x, y));
    }
    let rest: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    let (a, b, c) = (rest[0], rest[1], rest[2]);
    if !(nbr[a].contains(&b) && nbr[b].contains(&c) && nbr[a].contains(&c)) {
        return Err(Error::NotOuterplanar);
    }
    let mut next = vec![usize::MAX; k];
    next[a] = b;
    next[b] = c;
    next[c] = a;
    for &(v, x, y) in removed.iter().rev() {
        if next[x] == y {
            next[x] = v;
            next[v] = y;
        } else if next[y] == x {
            next[y] = v;
            next[v] = x;
        } else {
            return Err(Error::NotOuterplanar);
        }
    }
    let mut cycle = Vec::with_capacity(k);
    let mut v = 0;
    for _ in 0..k {
        cycle.push(v);
        v = next[v];
    }
    if v != 0 {
        return Err(Error::NotOuterplanar);
    }
    for i in 0..k {
        let (u, w) = (cycle[i], cycle[(i + 1) % k]);
        if adj[u].binary_search_by_key(&w, |&(x, _)| x).is_err() {
            return Err(Error::NotOuterplanar);
        }
    }
    Ok(cycle)
}

/// Chords, as intervals over cycle positions, must be laminar.
fn check_chords_nested(edges: &[(usize, usize)], pos: &[usize], k: usize) -> Result<()> {
    let mut intervals: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .filter(|&(i, j)| j - i != 1 && !(i == 0 && j == k - 1))
        .collect();
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (i, j) in intervals {
        while let Some(&(_, tj)) = stack.last() {
            if tj <= i {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&(_, tj)) = stack.last() {
            if j > tj {
                return Err(Error::NotOuterplanar);
            }
        }
        stack.push((i, j));
    }
    Ok(())
}

/// True iff every block of every component of `g` is outerplanar.
pub fn is_outerplanar(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    if n >= 2 && g.edge_count() > 2 * n - 3 {
        return false;
    }
    let d = decompose_any(g);
    d.blocks.iter().all(|b| embed_block(g, b).is_ok())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::tests::graph;

    /// Eight vertices; the chord 0-6 borders a quadrilateral {0,1,2,6} and
    /// the triangle {0,6,4}. Vertex ids: 0=u, 6=v.
    pub(crate) fn faces_graph() -> LabeledGraph {
        graph(8, &[(0, 1), (1, 2), (0, 3), (0, 4), (3, 5), (4, 5), (0, 6), (2, 6), (4, 6), (1, 7), (2, 7)])
    }

    fn sorted(v: &[usize]) -> Vec<usize> {
        let mut s = v.to_vec();
        s.sort_unstable();
        s
    }

    #[test]
    fn small_non_outerplanar() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!is_outerplanar(&k4));
        assert_eq!(OuterplanarEmbedding::of_graph(&k4), Err(Error::NotOuterplanar));
        let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(!is_outerplanar(&k23));
        assert_eq!(OuterplanarEmbedding::of_graph(&k23), Err(Error::NotOuterplanar));
    }

    #[test]
    fn fig_graph_is_outerplanar() {
        assert!(is_outerplanar(&crate::bctree::tests::fig_graph()));
        assert!(is_outerplanar(&faces_graph()));
    }

    #[test]
    fn triangle_embedding() {
        let t = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let emb = OuterplanarEmbedding::of_graph(&t).unwrap();
        assert_eq!(emb.outer_cycle, vec![0, 1, 2]);
        assert_eq!(emb.faces, vec![vec![0, 1, 2]]);
        assert!(emb.dual_tree.is_empty());
        for e in 0..3 {
            assert_eq!(emb.edge_faces[e], [FaceSlot::Inner(0), FaceSlot::Outer]);
        }
    }

    #[test]
    fn square_with_chord() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        let emb = OuterplanarEmbedding::of_graph(&g).unwrap();
        assert_eq!(emb.faces.len(), 2);
        assert!(emb.faces.iter().all(|f| f.len() == 3));
        assert_eq!(emb.dual_tree.len(), 1);
        let chord = emb.edge_index(0, 2).unwrap();
        assert_eq!(emb.dual_tree[0].2, chord);
        assert_eq!(emb.edge_faces[chord], [FaceSlot::Inner(0), FaceSlot::Inner(1)]);
        // slot 0 holds the face with the smaller sorted vertex list
        assert_eq!(sorted(&emb.faces[0]), vec![0, 1, 2]);
    }

    #[test]
    fn two_faces_of_the_chord_uv() {
        let g = faces_graph();
        let emb = OuterplanarEmbedding::of_graph(&g).unwrap();
        assert_eq!(emb.faces.len(), g.edge_count() - g.vertex_count() + 1);
        let (a, b) = emb.canonical_face_pair(0, 6).unwrap();
        let fa = sorted(&emb.faces[a.inner().unwrap()]);
        let fb = sorted(&emb.faces[b.inner().unwrap()]);
        assert_eq!(fa, vec![0, 4, 6]);
        assert_eq!(fb, vec![0, 1, 2, 6]);
        // a hull edge has its inner face first and the outer face second
        let (h1, h2) = emb.canonical_face_pair(3, 5).unwrap();
        assert_eq!(sorted(&emb.faces[h1.inner().unwrap()]), vec![0, 3, 4, 5]);
        assert_eq!(h2, FaceSlot::Outer);
        assert_eq!(emb.canonical_face_pair(3, 6), Err(Error::UnknownEdge));
    }

    pub(crate) fn check_invariants(emb: &OuterplanarEmbedding) {
        let k = emb.vertex_count();
        let m = emb.edge_count();
        assert_eq!(emb.faces.len(), m - k + 1);
        assert_eq!(emb.outer_cycle.len(), k);
        assert_eq!(emb.dual_tree.len(), emb.faces.len() - 1);
        // dual is connected (with |F|-1 edges this makes it a tree)
        let mut seen = vec![false; emb.faces.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for &(a, b, _) in &emb.dual_tree {
                for (x, y) in [(a, b), (b, a)] {
                    if x == f && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
        // chords in two face boundaries, hull edges in one
        let mut count = vec![0; m];
        for fe in &emb.face_edges {
            for &e in fe {
                count[e] += 1;
            }
        }
        for (e, &c) in count.iter().enumerate() {
            assert_eq!(c, if emb.is_chord(e) { 2 } else { 1 });
        }
        // each face boundary is an induced cycle
        for f in &emb.faces {
            for (i, &x) in f.iter().enumerate() {
                for (j, &y) in f.iter().enumerate() {
                    let adjacent = (i + 1) % f.len() == j || (j + 1) % f.len() == i;
                    if i != j {
                        assert_eq!(emb.edge_index(x, y).is_some(), adjacent);
                    }
                }
            }
        }
        for (e, slots) in emb.edge_faces.iter().enumerate() {
            for (s, slot) in slots.iter().enumerate() {
                if let FaceSlot::Inner(f) = slot {
                    assert_eq!(emb.face_edges[*f][emb.edge_face_pos[e][s]], e);
                }
            }
        }
    }

    #[test]
    fn embedding_is_deterministic_and_mirror_consistent() {
        let g = faces_graph();
        let a = OuterplanarEmbedding::of_graph(&g).unwrap();
        let b = OuterplanarEmbedding::of_graph(&g).unwrap();
        assert_eq!(a, b);
        check_invariants(&a);
        // same graph with edges inserted in reverse order
        let rev: Vec<(usize, usize)> = g.edges().iter().rev().copied().collect();
        let g2 = graph(8, &rev);
        let c = OuterplanarEmbedding::of_graph(&g2).unwrap();
        let sets = |e: &OuterplanarEmbedding| {
            let mut s: Vec<Vec<usize>> = e.faces.iter().map(|f| sorted(f)).collect();
            s.sort();
            s
        };
        assert_eq!(sets(&a), sets(&c));
        assert_eq!(a.outer_cycle, c.outer_cycle);
    }

    #[test]
    fn non_biconnected_block_is_rejected() {
        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(OuterplanarEmbedding::of_graph(&bowtie), Err(Error::NotBiconnected));
        assert!(is_outerplanar(&bowtie));
    }
}
