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

//! Maximum common connected induced subgraphs under the block and bridge
//! preserving (BBP) constraint.
//!
//! The BC-tree of G is rooted at its first B-node. Every BBP isomorphism
//! either maps an edge of some B-node `b` (and nothing of `b`'s parent
//! B-node except possibly the cutvertex linking them is excluded), or maps a
//! single vertex of `b`, or lives strictly below `b`. Extensions only ever
//! grow away from the root, so the value of "map at least one edge of `b`
//! into `b̄` with the parent cutvertex of `b` fixed to `c̄`" depends on
//! `(b, b̄, c̄)` alone. These values are filled bottom-up; at every pair of
//! mapped cutvertices the children are combined by a maximum weight
//! bipartite matching. Block pairs use the split pieces of the 2-MCIS
//! engine as candidates.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use hashbrown::HashMap;

use crate::bctree::{build_bc_tree, BcTree};
use crate::graph::{connected_components, LabeledGraph, Vertex};
use crate::matching::Hungarian;
use crate::mcis2::{BiconIso, EmbeddedBlock, Mcis2};
use crate::{is_outerplanar, Error, Result, WeightFn};

/// A common induced subgraph isomorphism with its weight.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Isomorphism {
    /// `(vertex of G, vertex of H)`, sorted.
    pub vertex_map: Vec<(Vertex, Vertex)>,
    pub weight: f64,
}

impl Isomorphism {
    pub fn empty() -> Self {
        Isomorphism::default()
    }

    pub fn len(&self) -> usize {
        self.vertex_map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_map.is_empty()
    }

    pub fn image(&self, v: Vertex) -> Option<Vertex> {
        self.vertex_map.binary_search_by_key(&v, |m| m.0).ok().map(|i| self.vertex_map[i].1)
    }
}

/// A maximum BBP common connected induced subgraph isomorphism between two
/// outerplanar graphs.
///
/// Disconnected inputs are handled by solving every pair of connected
/// components; ties go to the pair with the smallest component indices
/// (components ordered by their smallest vertex). The result is the empty
/// map with weight 0 when no pair can be mapped.
pub fn bbp_mcis(g: &LabeledGraph, h: &LabeledGraph, w: &WeightFn) -> Result<Isomorphism> {
    if g.vertex_count() > 0 && h.vertex_count() > 0 && g.is_connected() && h.is_connected() {
        // Solver construction embeds every block and rejects
        // non-outerplanar ones itself.
        return Ok(BbpSolver::new(g, h, w)?.solve());
    }
    if !is_outerplanar(g) || !is_outerplanar(h) {
        return Err(Error::NotOuterplanar);
    }
    let gc = connected_components(g);
    let hc = connected_components(h);
    let hsubs: Vec<(LabeledGraph, Vec<Vertex>)> = hc.iter().map(|c| h.induced_subgraph(c)).collect();
    let mut best = Isomorphism::empty();
    for c in &gc {
        let (gs, gmap) = g.induced_subgraph(c);
        for (hs, hmap) in &hsubs {
            let iso = BbpSolver::new(&gs, hs, w)?.solve();
            if iso.weight > best.weight {
                let mut vertex_map: Vec<_> = iso.vertex_map.iter().map(|&(x, y)| (gmap[x], hmap[y])).collect();
                vertex_map.sort_unstable();
                best = Isomorphism { vertex_map, weight: iso.weight };
            }
        }
    }
    Ok(best)
}

type BId = usize;

/// Chosen mapping inside one B-node pair.
#[derive(Debug, Clone)]
enum Local {
    /// Index into the pieces of the block pair.
    Piece(usize),
    /// The two vertex pairs of a bridge pair.
    Bridge([(Vertex, Vertex); 2]),
}

#[derive(Debug, Clone)]
struct EdgeEntry {
    value: f64,
    local: Local,
}

/// Buffers reused by every matching of one solver.
#[derive(Debug, Default)]
struct Scratch {
    hungarian: Hungarian,
    candidates: Vec<(usize, usize, f64)>,
    pairs: Vec<(usize, usize)>,
    left: Vec<BId>,
    right: Vec<BId>,
}

#[derive(Debug, Clone)]
struct Piece {
    /// Global ids, sorted.
    map: Vec<(Vertex, Vertex)>,
    weight: f64,
    local: BiconIso,
}

/// Best candidate of one family, ready to be expanded.
#[derive(Debug, Clone)]
enum Seed {
    /// Mapped pairs inside `(b, b̄)`; extensions at every mapped cutvertex
    /// pair except `entry`.
    Mapped { b: BId, bb: BId, map: Vec<(Vertex, Vertex)>, entry: Option<Vertex> },
    /// A single vertex pair of `b`, extended below the vertex.
    Single { b: BId, v: Vertex, vv: Vertex },
}

/// Endpoint pairs of a bridge mapped onto a bridge, and the weight.
type BridgeMap = ([(Vertex, Vertex); 2], f64);

/// Solver for two connected outerplanar graphs.
///
/// Construction runs the bottom-up phase; the query methods then answer the
/// individual subproblems of the recursion. B-node ids are those of
/// [`BcTree::b_nodes`].
pub struct BbpSolver<'a> {
    g: &'a LabeledGraph,
    h: &'a LabeledGraph,
    w: &'a WeightFn,
    tg: BcTree,
    th: BcTree,
    gblocks: Vec<Option<EmbeddedBlock>>,
    hblocks: Vec<Option<EmbeddedBlock>>,
    parent_cut: Vec<Option<Vertex>>,
    preorder: Vec<BId>,
    subtree_end: Vec<usize>,
    rank: Vec<usize>,
    pieces: HashMap<(BId, BId), Vec<Piece>>,
    edges: HashMap<(BId, BId, Vertex), EdgeEntry>,
    /// Matching values only; the matched pairs are recomputed when a
    /// solution is reconstructed.
    gains: HashMap<(BId, BId, Vertex, Vertex), f64>,
    scratch: RefCell<Scratch>,
}

impl<'a> BbpSolver<'a> {
    /// Fails unless both graphs are connected and outerplanar.
    pub fn new(g: &'a LabeledGraph, h: &'a LabeledGraph, w: &'a WeightFn) -> Result<Self> {
        let tg = build_bc_tree(g)?;
        let th = build_bc_tree(h)?;
        let embed = |gr: &LabeledGraph, t: &BcTree| -> Result<Vec<Option<EmbeddedBlock>>> {
            t.b_nodes
                .iter()
                .map(|b| if b.is_block() { EmbeddedBlock::new(gr, &b.edges).map(Some) } else { Ok(None) })
                .collect()
        };
        let gblocks = embed(g, &tg)?;
        let hblocks = embed(h, &th)?;
        let nb = tg.b_nodes.len();
        let mut s = BbpSolver {
            g,
            h,
            w,
            tg,
            th,
            gblocks,
            hblocks,
            parent_cut: vec![None; nb],
            preorder: Vec::with_capacity(nb),
            subtree_end: vec![0; nb],
            rank: vec![0; nb],
            pieces: HashMap::new(),
            edges: HashMap::new(),
            gains: HashMap::new(),
            scratch: RefCell::default(),
        };
        if nb > 0 {
            s.root_tree();
            s.fill();
        }
        Ok(s)
    }

    pub fn g_tree(&self) -> &BcTree {
        &self.tg
    }

    pub fn h_tree(&self) -> &BcTree {
        &self.th
    }

    /// The root B-node of G, `None` if G is a single vertex.
    pub fn root(&self) -> Option<BId> {
        self.preorder.first().copied()
    }

    /// Cutvertex shared with the parent B-node; `None` for the root.
    pub fn parent_cut(&self, b: BId) -> Option<Vertex> {
        self.parent_cut[b]
    }

    fn root_tree(&mut self) {
        let mut seen = vec![false; self.tg.b_nodes.len()];
        // (node, phase): phase 1 closes the subtree
        let mut stack = vec![(0usize, false)];
        seen[0] = true;
        while let Some((b, closing)) = stack.pop() {
            if closing {
                self.subtree_end[b] = self.preorder.len();
                continue;
            }
            self.rank[b] = self.preorder.len();
            self.preorder.push(b);
            stack.push((b, true));
            let mut kids = Vec::new();
            for &c in &self.tg.b_nodes[b].vertices {
                if Some(c) == self.parent_cut[b] {
                    continue;
                }
                for k in self.tg.neighbors_via(b, c) {
                    if !seen[k] {
                        seen[k] = true;
                        self.parent_cut[k] = Some(c);
                        kids.push(k);
                    }
                }
            }
            for &k in kids.iter().rev() {
                stack.push((k, false));
            }
        }
    }

    fn vscore(&self, v: Vertex, vv: Vertex) -> Option<f64> {
        self.w.vertex_score(self.g.label(v), self.h.label(vv)).value()
    }

    fn same_kind(&self, b: BId, bb: BId) -> bool {
        self.tg.b_nodes[b].kind == self.th.b_nodes[bb].kind
    }

    fn both_cut(&self, c: Vertex, cc: Vertex) -> bool {
        self.tg.is_cutvertex(c) && self.th.is_cutvertex(cc)
    }

    /// The two orientations of a bridge pair, with their weight, if no
    /// forbidden pair is involved.
    fn bridge_maps(&self, b: BId, bb: BId) -> [Option<BridgeMap>; 2] {
        let e = self.tg.b_nodes[b].edges[0];
        let f = self.th.b_nodes[bb].edges[0];
        let es = self.w.edge_score(self.g.edge_label(e), self.h.edge_label(f)).value();
        let (x, y) = self.g.endpoints(e);
        let (p, q) = self.h.endpoints(f);
        [[(x, p), (y, q)], [(x, q), (y, p)]]
            .map(|[(a, aa), (b2, bb2)]| Some(([(a, aa), (b2, bb2)], self.vscore(a, aa)? + self.vscore(b2, bb2)? + es?)))
    }

    fn ensure_pieces(&mut self, b: BId, bb: BId) {
        if self.pieces.contains_key(&(b, bb)) {
            return;
        }
        let (eg, eh) = (self.gblocks[b].as_ref().expect("block"), self.hblocks[bb].as_ref().expect("block"));
        let run = Mcis2::new(eg, eh, self.w).run();
        let list =
            run.pieces.into_iter().map(|p| Piece { map: p.to_global(eg, eh), weight: p.weight, local: p }).collect();
        self.pieces.insert((b, bb), list);
    }

    /// Gain of extending a mapped cutvertex pair `c -> cc` of `(b, bb)` into
    /// the B-nodes below `c` and the other B-nodes at `cc`.
    fn ensure_gain(&mut self, b: BId, bb: BId, c: Vertex, cc: Vertex) {
        let key = (b, bb, c, cc);
        if !self.gains.contains_key(&key) {
            let value = self.gain_matching(b, bb, c, cc, None);
            self.gains.insert(key, value);
        }
    }

    fn gain_matching(&self, b: BId, bb: BId, c: Vertex, cc: Vertex, pairs: Option<&mut Vec<(BId, BId)>>) -> f64 {
        let base = self.vscore(c, cc).unwrap_or(0.0);
        let (mut left, mut right) = {
            let mut sc = self.scratch.borrow_mut();
            (core::mem::take(&mut sc.left), core::mem::take(&mut sc.right))
        };
        left.clear();
        left.extend(self.tg.neighbors_via(b, c));
        right.clear();
        right.extend(self.th.neighbors_via(bb, cc));
        let value = self.matching(&left, &right, cc, base, pairs);
        let mut sc = self.scratch.borrow_mut();
        (sc.left, sc.right) = (left, right);
        value
    }

    /// Maximum weight matching of child edge values (minus the shared
    /// cutvertex score) between `left` and `right`.
    fn matching(&self, left: &[BId], right: &[BId], cc: Vertex, base: f64, pairs: Option<&mut Vec<(BId, BId)>>) -> f64 {
        let mut guard = self.scratch.borrow_mut();
        let Scratch { hungarian, candidates, pairs: idx, .. } = &mut *guard;
        candidates.clear();
        for (i, &bk) in left.iter().enumerate() {
            for (j, &bl) in right.iter().enumerate() {
                if let Some(e) = self.edges.get(&(bk, bl, cc)) {
                    candidates.push((i, j, (e.value - base).max(0.0)));
                }
            }
        }
        if candidates.is_empty() {
            return 0.0;
        }
        idx.clear();
        // With one B-node on either side a matching is a single edge; this
        // is by far the common case at cutvertices of molecules.
        let value = if left.len() == 1 || right.len() == 1 {
            let &(i, j, x) = candidates.iter().fold(&candidates[0], |a, c| if c.2 > a.2 { c } else { a });
            idx.push((i, j));
            x
        } else {
            hungarian.solve(left.len(), right.len(), candidates, Some(idx))
        };
        if let Some(out) = pairs {
            out.extend(idx.iter().map(|&(i, j)| (left[i], right[j])));
        }
        value
    }

    fn gain(&self, b: BId, bb: BId, c: Vertex, cc: Vertex) -> f64 {
        self.gains.get(&(b, bb, c, cc)).copied().unwrap_or(0.0)
    }

    fn extension(&self, b: BId, bb: BId, map: &[(Vertex, Vertex)], entry: Option<Vertex>) -> f64 {
        map.iter()
            .filter(|&&(c, cc)| Some(c) != entry && self.both_cut(c, cc))
            .map(|&(c, cc)| self.gain(b, bb, c, cc))
            .sum()
    }

    /// Bottom-up phase: every gain any candidate may need and every
    /// entry-fixed edge value.
    fn fill(&mut self) {
        for i in (0..self.preorder.len()).rev() {
            let b = self.preorder[i];
            let entry = self.parent_cut[b];
            for bb in 0..self.th.b_nodes.len() {
                if !self.same_kind(b, bb) {
                    continue;
                }
                if self.tg.b_nodes[b].is_block() {
                    self.fill_block_pair(b, bb, entry);
                } else {
                    self.fill_bridge_pair(b, bb, entry);
                }
            }
        }
    }

    fn fill_block_pair(&mut self, b: BId, bb: BId, entry: Option<Vertex>) {
        self.ensure_pieces(b, bb);
        let mut need = Vec::new();
        for p in &self.pieces[&(b, bb)] {
            for &(c, cc) in &p.map {
                if Some(c) != entry && self.both_cut(c, cc) {
                    need.push((c, cc));
                }
            }
        }
        need.sort_unstable();
        need.dedup();
        for (c, cc) in need {
            self.ensure_gain(b, bb, c, cc);
        }
        let Some(c) = entry else { return };
        let mut best: HashMap<Vertex, EdgeEntry> = HashMap::new();
        for (idx, p) in self.pieces[&(b, bb)].iter().enumerate() {
            let Ok(pos) = p.map.binary_search_by_key(&c, |m| m.0) else { continue };
            let cc = p.map[pos].1;
            let value = p.weight + self.extension(b, bb, &p.map, Some(c));
            match best.get(&cc) {
                Some(e) if e.value >= value => {}
                _ => {
                    best.insert(cc, EdgeEntry { value, local: Local::Piece(idx) });
                }
            }
        }
        for (cc, e) in best {
            self.edges.insert((b, bb, cc), e);
        }
    }

    fn fill_bridge_pair(&mut self, b: BId, bb: BId, entry: Option<Vertex>) {
        for (map, _) in self.bridge_maps(b, bb).into_iter().flatten() {
            for (c, cc) in map {
                if Some(c) != entry && self.both_cut(c, cc) {
                    self.ensure_gain(b, bb, c, cc);
                }
            }
        }
        let Some(c) = entry else { return };
        for (map, weight) in self.bridge_maps(b, bb).into_iter().flatten() {
            let map = if map[0].0 == c { map } else { [map[1], map[0]] };
            let value = weight + self.extension(b, bb, &map, Some(c));
            self.edges.insert((b, bb, map[0].1), EdgeEntry { value, local: Local::Bridge(map) });
        }
    }

    fn local_map(&self, b: BId, bb: BId, local: &Local) -> Vec<(Vertex, Vertex)> {
        match local {
            Local::Piece(i) => self.pieces[&(b, bb)][*i].map.clone(),
            Local::Bridge(m) => m.to_vec(),
        }
    }

    fn check_b(&self, b: BId, bb: Option<BId>) -> Result<()> {
        if b >= self.tg.b_nodes.len() || bb.is_some_and(|x| x >= self.th.b_nodes.len()) {
            return Err(Error::InvalidArgument("unknown B-node"));
        }
        Ok(())
    }

    /// Best isomorphism mapping at least one edge of `b` into `bb`.
    ///
    /// With `fixed = None` the vertices of the parent B-node of `b` are
    /// excluded and the extension goes into the whole subtree of `b`. With
    /// `fixed = Some((c, cc))`, `c` must be the parent cutvertex of `b` and is
    /// mapped onto `cc`.
    pub fn bbp_edge(&self, b: BId, bb: BId, fixed: Option<(Vertex, Vertex)>) -> Result<Isomorphism> {
        self.check_b(b, Some(bb))?;
        if let Some((c, cc)) = fixed {
            if self.parent_cut[b] != Some(c) {
                return Err(Error::InvalidArgument("the fixed vertex must be the parent cutvertex of the B-node"));
            }
            return Ok(match self.edges.get(&(b, bb, cc)) {
                Some(e) => {
                    self.expand(Seed::Mapped { b, bb, map: self.local_map(b, bb, &e.local), entry: Some(c) }, e.value)
                }
                None => Isomorphism::empty(),
            });
        }
        Ok(match self.best_edge_unfixed(b, bb) {
            Some((value, seed)) => self.expand(seed, value),
            None => Isomorphism::empty(),
        })
    }

    fn best_edge_unfixed(&self, b: BId, bb: BId) -> Option<(f64, Seed)> {
        if !self.same_kind(b, bb) {
            return None;
        }
        let excluded = self.parent_cut[b];
        let mut best: Option<(f64, Seed)> = None;
        let mut offer = |value: f64, map: &[(Vertex, Vertex)]| {
            if best.as_ref().is_none_or(|(v, _)| value > *v) {
                best = Some((value, Seed::Mapped { b, bb, map: map.to_vec(), entry: None }));
            }
        };
        if self.tg.b_nodes[b].is_block() {
            let (eg, eh) = (self.gblocks[b].as_ref()?, self.hblocks[bb].as_ref()?);
            let lx = excluded.and_then(|c| eg.emb.local_of(c));
            for p in &self.pieces[&(b, bb)] {
                match lx {
                    Some(x) if p.local.image(x).is_some() => {
                        for sp in p.local.without_vertex(eg, eh, self.w, x) {
                            let map = sp.to_global(eg, eh);
                            let value = sp.weight + self.extension(b, bb, &map, None);
                            offer(value, &map);
                        }
                    }
                    _ => offer(p.weight + self.extension(b, bb, &p.map, None), &p.map),
                }
            }
        } else if excluded.is_none() {
            for (map, weight) in self.bridge_maps(b, bb).into_iter().flatten() {
                let mut map = map;
                map.sort_unstable();
                let value = weight + self.extension(b, bb, &map, None);
                offer(value, &map);
            }
        }
        best
    }

    /// Best isomorphism mapping exactly the vertex `v` of `b` (not in the
    /// parent B-node) onto `vv`, extended below `v` only.
    pub fn bbp_single_vertex(&self, b: BId, v: Vertex, vv: Vertex) -> Result<Isomorphism> {
        self.check_b(b, None)?;
        if !self.tg.b_nodes[b].contains(v) || Some(v) == self.parent_cut[b] || vv >= self.h.vertex_count() {
            return Err(Error::InvalidArgument("vertex outside the B-node's component"));
        }
        Ok(match self.single(b, v, vv, None) {
            Some(value) => self.expand(Seed::Single { b, v, vv }, value),
            None => Isomorphism::empty(),
        })
    }

    /// Value of mapping `v` onto `vv` and extending below `v`; the matched
    /// B-node pairs go to `ext` when requested.
    fn single(&self, b: BId, v: Vertex, vv: Vertex, ext: Option<&mut Vec<(BId, BId)>>) -> Option<f64> {
        let base = self.vscore(v, vv)?;
        if !self.tg.is_cutvertex(v) {
            return Some(base);
        }
        let hb = self.th.bnodes_of(vv);
        if self.th.is_cutvertex(vv) {
            let mut children = core::mem::take(&mut self.scratch.borrow_mut().left);
            children.clear();
            children.extend(self.tg.neighbors_via(b, v));
            let value = self.matching(&children, hb, vv, base, ext);
            self.scratch.borrow_mut().left = children;
            return Some(base + value);
        }
        let mut best: (f64, Option<(BId, BId)>) = (base, None);
        if let [bb] = hb {
            for bk in self.tg.neighbors_via(b, v) {
                if let Some(e) = self.edges.get(&(bk, *bb, vv)) {
                    if e.value > best.0 {
                        best = (e.value, Some((bk, *bb)));
                    }
                }
            }
        }
        if let (Some(out), Some(pair)) = (ext, best.1) {
            out.push(pair);
        }
        Some(best.0)
    }

    /// Best isomorphism within the component of `b` after removing the
    /// parent B-node's vertices (the whole graph for the root).
    pub fn set_sx(&self, b: BId) -> Result<Isomorphism> {
        self.check_b(b, None)?;
        let mut best: Option<(f64, Seed)> = None;
        for &x in &self.preorder[self.rank[b]..self.subtree_end[b]] {
            let mut offer = |cand: Option<(f64, Seed)>| {
                if let Some((value, seed)) = cand {
                    if value > best.as_ref().map_or(0.0, |(v, _)| *v) {
                        best = Some((value, seed));
                    }
                }
            };
            for bb in 0..self.th.b_nodes.len() {
                offer(self.best_edge_unfixed(x, bb));
            }
            for &v in &self.tg.b_nodes[x].vertices {
                if Some(v) == self.parent_cut[x] {
                    continue;
                }
                for vv in 0..self.h.vertex_count() {
                    offer(self.single(x, v, vv, None).map(|value| (value, Seed::Single { b: x, v, vv })));
                }
            }
        }
        Ok(match best {
            Some((value, seed)) => self.expand(seed, value),
            None => Isomorphism::empty(),
        })
    }

    /// A maximum BBP isomorphism between the two connected graphs; empty when
    /// no mapping has positive weight.
    pub fn solve(&self) -> Isomorphism {
        match self.root() {
            Some(r) => self.set_sx(r).expect("root exists"),
            None => {
                // G is a single vertex
                let mut best = Isomorphism::empty();
                for vv in 0..self.h.vertex_count() {
                    if let Some(s) = self.vscore(0, vv) {
                        if s > best.weight {
                            best = Isomorphism { vertex_map: vec![(0, vv)], weight: s };
                        }
                    }
                }
                best
            }
        }
    }

    fn expand(&self, seed: Seed, value: f64) -> Isomorphism {
        let mut out: Vec<(Vertex, Vertex)> = Vec::new();
        let mut stack: Vec<(BId, BId, Vertex)> = Vec::new();
        let push_mapped =
            |b: BId, bb: BId, map: &[(Vertex, Vertex)], entry: Option<Vertex>, out: &mut Vec<_>, stack: &mut Vec<_>| {
                out.extend_from_slice(map);
                for &(c, cc) in map {
                    if Some(c) == entry || !self.both_cut(c, cc) {
                        continue;
                    }
                    if self.gains.contains_key(&(b, bb, c, cc)) {
                        let mut matched = Vec::new();
                        self.gain_matching(b, bb, c, cc, Some(&mut matched));
                        stack.extend(matched.into_iter().map(|(bk, bl)| (bk, bl, cc)));
                    }
                }
            };
        match seed {
            Seed::Mapped { b, bb, map, entry } => push_mapped(b, bb, &map, entry, &mut out, &mut stack),
            Seed::Single { b, v, vv } => {
                out.push((v, vv));
                let mut matched = Vec::new();
                self.single(b, v, vv, Some(&mut matched));
                stack.extend(matched.into_iter().map(|(bk, bl)| (bk, bl, vv)));
            }
        }
        while let Some((b, bb, cc)) = stack.pop() {
            let e = &self.edges[&(b, bb, cc)];
            let map = self.local_map(b, bb, &e.local);
            push_mapped(b, bb, &map, self.parent_cut[b], &mut out, &mut stack);
        }
        out.sort_unstable();
        out.dedup();
        Isomorphism { vertex_map: out, weight: value }
    }
}

#[cfg(test)]
mod tests;
