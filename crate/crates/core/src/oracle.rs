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

//! Independent reference implementations for verification.
//!
//! Everything here works directly from the definitions: a validity checker
//! for isomorphisms and exhaustive searches for small inputs. Nothing is
//! shared with the fast solvers except the plain graph type and the
//! biconnected decomposition.

use alloc::vec;
use alloc::vec::Vec;

use crate::bctree::decompose_any;
use crate::graph::{LabeledGraph, Vertex};
use crate::{Error, Result, WeightFn};

/// Largest input accepted by [`brute_bbp_mcis`].
pub const BRUTE_BBP_LIMIT: usize = 10;
/// Largest input accepted by [`brute_2mcis`].
pub const BRUTE_2MCIS_LIMIT: usize = 8;

/// Outcome of [`check_iso`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckReport {
    /// Every vertex appears at most once on each side and all ids exist.
    pub injective: bool,
    /// `uv` is an edge of G iff `phi(u)phi(v)` is an edge of H.
    pub induced: bool,
    /// `G[dom(phi)]` is connected (the empty map counts as connected).
    pub connected: bool,
    /// Both `G[dom(phi)]` and `H[img(phi)]` are block and bridge preserving.
    pub bbp: bool,
    /// Total weight, `-inf` if a forbidden pair is mapped.
    pub weight: f64,
}

impl CheckReport {
    /// An admissible solution of the BBP problem.
    pub fn admissible(&self) -> bool {
        self.injective && self.induced && self.connected && self.bbp && self.weight.is_finite()
    }
}

/// Checks `G[s]` against the two block and bridge preservation conditions:
/// every bridge of `G[s]` is a bridge of G, and edges of different blocks of
/// `G[s]` lie in different blocks of G.
pub fn is_bbp_subgraph(g: &LabeledGraph, s: &[Vertex]) -> bool {
    let whole = decompose_any(g);
    let mut bnode_of_edge = vec![usize::MAX; g.edge_count()];
    let mut is_bridge = vec![false; g.edge_count()];
    for (i, b) in whole.blocks.iter().enumerate() {
        for &e in b {
            bnode_of_edge[e] = i;
        }
    }
    for (i, &e) in whole.bridges.iter().enumerate() {
        bnode_of_edge[e] = whole.blocks.len() + i;
        is_bridge[e] = true;
    }
    let (sub, orig) = g.induced_subgraph(s);
    let orig_edge = |e: usize| {
        let (u, v) = sub.endpoints(e);
        g.edge_between(orig[u], orig[v]).expect("induced edge")
    };
    let part = decompose_any(&sub);
    if part.bridges.iter().any(|&e| !is_bridge[orig_edge(e)]) {
        return false;
    }
    // owner[B] = block of G[s] that uses G's B-node B
    let mut owner = vec![usize::MAX; whole.blocks.len() + whole.bridges.len()];
    for (i, blk) in part.blocks.iter().enumerate() {
        for &e in blk {
            let b = bnode_of_edge[orig_edge(e)];
            if owner[b] == usize::MAX {
                owner[b] = i;
            } else if owner[b] != i {
                return false;
            }
        }
    }
    true
}

/// Tests `phi` (pairs `(vertex of G, vertex of H)`) literally against the
/// definitions and recomputes its weight.
pub fn check_iso(g: &LabeledGraph, h: &LabeledGraph, phi: &[(Vertex, Vertex)], w: &WeightFn) -> CheckReport {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    let mut fwd = vec![usize::MAX; n];
    let mut used = vec![false; m];
    let mut injective = true;
    for &(x, y) in phi {
        if x >= n || y >= m || fwd[x] != usize::MAX || used[y] {
            injective = false;
            break;
        }
        fwd[x] = y;
        used[y] = true;
    }
    if !injective {
        return CheckReport { injective, induced: false, connected: false, bbp: false, weight: f64::NEG_INFINITY };
    }
    let mut weight = 0.0;
    let mut forbidden = false;
    for &(x, y) in phi {
        match w.vertex_score(g.label(x), h.label(y)).value() {
            Some(s) => weight += s,
            None => forbidden = true,
        }
    }
    let mut induced = true;
    for (i, &(x1, y1)) in phi.iter().enumerate() {
        for &(x2, y2) in &phi[i + 1..] {
            match (g.edge_between(x1, x2), h.edge_between(y1, y2)) {
                (Some(e), Some(f)) => match w.edge_score(g.edge_label(e), h.edge_label(f)).value() {
                    Some(s) => weight += s,
                    None => forbidden = true,
                },
                (None, None) => {}
                _ => induced = false,
            }
        }
    }
    let dom: Vec<Vertex> = phi.iter().map(|p| p.0).collect();
    let img: Vec<Vertex> = phi.iter().map(|p| p.1).collect();
    let connected = g.induced_subgraph(&dom).0.is_connected();
    let bbp = is_bbp_subgraph(g, &dom) && is_bbp_subgraph(h, &img);
    CheckReport { injective, induced, connected, bbp, weight: if forbidden { f64::NEG_INFINITY } else { weight } }
}

fn adjacency_masks(g: &LabeledGraph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).fold(0u32, |m, u| m | (1 << u))).collect()
}

fn mask_connected(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] & mask;
        }
        if grown == seen {
            return seen == mask;
        }
        seen = grown;
    }
}

fn mask_vertices(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

/// BFS order of `G[mask]` from its smallest vertex, with the parent of every
/// vertex but the first.
fn bfs_order(adj: &[u32], mask: u32) -> (Vec<usize>, Vec<usize>) {
    let start = mask.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut parent = vec![usize::MAX];
    let mut seen = 1u32 << start;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let mut nb = adj[v] & mask & !seen;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << u;
            order.push(u);
            parent.push(v);
        }
        i += 1;
    }
    (order, parent)
}

/// Backtracking over induced embeddings of `G[order]` into H that map no
/// forbidden pair; each vertex after the first is placed next to the image
/// of its parent.
struct Embedder<'a> {
    g: &'a LabeledGraph,
    h: &'a LabeledGraph,
    w: &'a WeightFn,
    order: Vec<usize>,
    parent: Vec<usize>,
    img: Vec<usize>,
    used: Vec<bool>,
}

impl Embedder<'_> {
    fn run(&mut self, k: usize, weight: f64, leaf: &mut impl FnMut(&[usize], &[usize], f64)) {
        if k == self.order.len() {
            leaf(&self.order, &self.img, weight);
            return;
        }
        let x = self.order[k];
        let candidates: Vec<usize> = if k == 0 {
            (0..self.h.vertex_count()).collect()
        } else {
            let p = self.order.iter().position(|&v| v == self.parent[k]).expect("parent placed");
            self.h.neighbors(self.img[p]).collect()
        };
        'cand: for y in candidates {
            if self.used[y] {
                continue;
            }
            let Some(mut wt) = self.w.vertex_score(self.g.label(x), self.h.label(y)).value() else {
                continue;
            };
            for j in 0..k {
                match (self.g.edge_between(x, self.order[j]), self.h.edge_between(y, self.img[j])) {
                    (Some(e), Some(f)) => match self.w.edge_score(self.g.edge_label(e), self.h.edge_label(f)).value() {
                        Some(s) => wt += s,
                        None => continue 'cand,
                    },
                    (None, None) => {}
                    _ => continue 'cand,
                }
            }
            self.used[y] = true;
            self.img.push(y);
            self.run(k + 1, weight + wt, leaf);
            self.img.pop();
            self.used[y] = false;
        }
    }
}

/// Maximum weight and all maximum witnesses (sorted vertex maps).
pub type Witnesses = (f64, Vec<Vec<(Vertex, Vertex)>>);

fn search(
    g: &LabeledGraph,
    h: &LabeledGraph,
    w: &WeightFn,
    keep_subset: impl Fn(u32) -> bool,
    keep_image: impl Fn(u32) -> bool,
) -> Witnesses {
    let adj = adjacency_masks(g);
    let mut best = f64::NEG_INFINITY;
    let mut witnesses: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    for mask in 1u32..(1u32 << g.vertex_count()) {
        if !mask_connected(&adj, mask) || !keep_subset(mask) {
            continue;
        }
        let (order, parent) = bfs_order(&adj, mask);
        let mut e = Embedder { g, h, w, order, parent, img: Vec::new(), used: vec![false; h.vertex_count()] };
        e.run(0, 0.0, &mut |order, img, weight| {
            if weight < best {
                return;
            }
            let image = img.iter().fold(0u32, |m, &y| m | (1 << y));
            if !keep_image(image) {
                return;
            }
            if weight > best {
                best = weight;
                witnesses.clear();
            }
            let mut map: Vec<(Vertex, Vertex)> = order.iter().copied().zip(img.iter().copied()).collect();
            map.sort_unstable();
            witnesses.push(map);
        });
    }
    witnesses.sort();
    (best, witnesses)
}

/// Exhaustive maximum BBP common connected induced subgraph isomorphism.
/// When nothing can be mapped the result is weight 0 with the empty map as
/// the only witness.
pub fn brute_bbp_mcis(g: &LabeledGraph, h: &LabeledGraph, w: &WeightFn) -> Result<Witnesses> {
    for len in [g.vertex_count(), h.vertex_count()] {
        if len > BRUTE_BBP_LIMIT {
            return Err(Error::TooLarge { len, limit: BRUTE_BBP_LIMIT });
        }
    }
    let mut h_ok: Vec<Option<bool>> = vec![None; 1 << h.vertex_count()];
    let h_ok = core::cell::RefCell::new(&mut h_ok);
    let (best, witnesses) = search(
        g,
        h,
        w,
        |mask| is_bbp_subgraph(g, &mask_vertices(mask)),
        |image| *h_ok.borrow_mut()[image as usize].get_or_insert_with(|| is_bbp_subgraph(h, &mask_vertices(image))),
    );
    if witnesses.is_empty() {
        return Ok((0.0, vec![Vec::new()]));
    }
    Ok((best, witnesses))
}

/// Exhaustive maximum common biconnected induced subgraph isomorphism.
/// Returns `(0, [])` when there is none.
pub fn brute_2mcis(g: &LabeledGraph, h: &LabeledGraph, w: &WeightFn) -> Result<Witnesses> {
    for len in [g.vertex_count(), h.vertex_count()] {
        if len > BRUTE_2MCIS_LIMIT {
            return Err(Error::TooLarge { len, limit: BRUTE_2MCIS_LIMIT });
        }
    }
    let biconnected = |mask: u32| {
        let s = mask_vertices(mask);
        if s.len() < 3 {
            return false;
        }
        let d = decompose_any(&g.induced_subgraph(&s).0);
        d.blocks.len() == 1 && d.bridges.is_empty()
    };
    let (best, witnesses) = search(g, h, w, biconnected, |_| true);
    if witnesses.is_empty() {
        return Ok((0.0, Vec::new()));
    }
    Ok((best, witnesses))
}
