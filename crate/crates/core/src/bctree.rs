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

//! Biconnected decomposition and block-cut trees.
//!
//! Blocks have at least three vertices. An edge that lies in no block is a
//! bridge. Blocks and bridges are the B-nodes of the BC-tree, cutvertices
//! its C-nodes.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, LabeledGraph, Vertex};
use crate::{Error, Result};

const UNSET: usize = usize::MAX;

/// Edge sets of the biconnected components (blocks and bridges) of the graph
/// given by `adj`, plus a cutvertex flag per vertex.
///
/// `adj(v)` lists `(neighbor, edge id)` pairs and `edge_count` bounds the
/// edge ids. Isolated vertices belong to no component. Single depth-first
/// traversal with low points; iterative so deep paths do not overflow the
/// stack.
pub(crate) fn biconnected_components<'a>(
    n: usize,
    adj: impl Fn(usize) -> &'a [(usize, usize)],
    edge_count: usize,
) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut disc = vec![UNSET; n];
    let mut low = vec![UNSET; n];
    let mut is_cut = vec![false; n];
    let mut edge_seen = vec![false; edge_count];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut comps = Vec::new();
    // (vertex, parent edge, next adjacency index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != UNSET || adj(root).is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        frames.push((root, UNSET, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent_edge, idx) = *top;
            let nbrs = adj(v);
            if idx < nbrs.len() {
                top.2 += 1;
                let (u, e) = nbrs[idx];
                if e == parent_edge || edge_seen[e] {
                    continue;
                }
                edge_seen[e] = true;
                edge_stack.push(e);
                if disc[u] == UNSET {
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((u, e, 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    for c in &mut comps {
        c.sort_unstable();
    }
    comps.sort_unstable_by_key(|c| c[0]);
    (comps, is_cut)
}

/// Blocks, bridges and cutvertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Edge sets of the blocks, each sorted.
    pub blocks: Vec<Vec<EdgeId>>,
    pub bridges: Vec<EdgeId>,
    pub cutvertices: Vec<Vertex>,
}

pub fn decompose(g: &LabeledGraph) -> Result<Decomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(decompose_any(g))
}

pub(crate) fn decompose_any(g: &LabeledGraph) -> Decomposition {
    let (comps, is_cut) = biconnected_components(g.vertex_count(), |v| g.adjacency(v), g.edge_count());
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();
    for c in comps {
        if c.len() == 1 {
            bridges.push(c[0]);
        } else {
            blocks.push(c);
        }
    }
    let cutvertices = (0..g.vertex_count()).filter(|&v| is_cut[v]).collect();
    Decomposition { blocks, bridges, cutvertices }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BNodeKind {
    Block,
    Bridge,
}

/// A block or a bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BNode {
    pub kind: BNodeKind,
    /// Sorted vertex ids.
    pub vertices: Vec<Vertex>,
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
}

impl BNode {
    pub fn is_block(&self) -> bool {
        self.kind == BNodeKind::Block
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Block-cut tree of a connected graph.
///
/// B-node `b` and C-node `c` are adjacent iff the cutvertex of `c` lies in
/// `b`.
#[derive(Debug, Clone)]
pub struct BcTree {
    pub b_nodes: Vec<BNode>,
    /// Cutvertices, sorted.
    pub c_nodes: Vec<Vertex>,
    /// `(b-node index, c-node index)` pairs.
    pub tree_edges: Vec<(usize, usize)>,
    /// Largest number of B-nodes sharing one cutvertex (0 without cutvertices).
    pub max_c_degree: usize,
    vertex_bnodes: Vec<Vec<usize>>,
    edge_bnode: Vec<usize>,
    is_cut: Vec<bool>,
}

impl BcTree {
    /// B-nodes containing `v`, ascending.
    pub fn bnodes_of(&self, v: Vertex) -> &[usize] {
        &self.vertex_bnodes[v]
    }

    pub fn bnode_of_edge(&self, e: EdgeId) -> usize {
        self.edge_bnode[e]
    }

    pub fn is_cutvertex(&self, v: Vertex) -> bool {
        self.is_cut[v]
    }

    /// B-nodes `b'` with a path `b c b'` in the tree.
    pub fn neighbors_via(&self, b: usize, c: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.vertex_bnodes[c].iter().copied().filter(move |&x| x != b)
    }
}

pub fn build_bc_tree(g: &LabeledGraph) -> Result<BcTree> {
    let d = decompose(g)?;
    Ok(bc_tree_from(g, d))
}

pub(crate) fn bc_tree_from(g: &LabeledGraph, d: Decomposition) -> BcTree {
    let n = g.vertex_count();
    let mut b_nodes = Vec::with_capacity(d.blocks.len() + d.bridges.len());
    for edges in d.blocks {
        b_nodes.push(BNode { kind: BNodeKind::Block, vertices: Vec::new(), edges });
    }
    for e in d.bridges {
        b_nodes.push(BNode { kind: BNodeKind::Bridge, vertices: Vec::new(), edges: vec![e] });
    }
    b_nodes.sort_unstable_by_key(|b| b.edges[0]);
    let mut edge_bnode = vec![UNSET; g.edge_count()];
    let mut vertex_bnodes = vec![Vec::new(); n];
    let mut mark = vec![UNSET; n];
    for (i, b) in b_nodes.iter_mut().enumerate() {
        for &e in &b.edges {
            edge_bnode[e] = i;
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                if mark[x] != i {
                    mark[x] = i;
                    b.vertices.push(x);
                    vertex_bnodes[x].push(i);
                }
            }
        }
        b.vertices.sort_unstable();
    }
    let mut is_cut = vec![false; n];
    let mut c_nodes = Vec::new();
    let mut tree_edges = Vec::new();
    let mut max_c_degree = 0;
    for v in 0..n {
        if vertex_bnodes[v].len() >= 2 {
            is_cut[v] = true;
            let ci = c_nodes.len();
            c_nodes.push(v);
            max_c_degree = max_c_degree.max(vertex_bnodes[v].len());
            for &b in &vertex_bnodes[v] {
                tree_edges.push((b, ci));
            }
        }
    }
    tree_edges.sort_unstable();
    BcTree { b_nodes, c_nodes, tree_edges, max_c_degree, vertex_bnodes, edge_bnode, is_cut }
}
