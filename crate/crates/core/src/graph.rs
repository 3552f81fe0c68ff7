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

//! Simple undirected labeled graphs and connectivity queries.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Label, Result};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;
/// Dense edge id in `0..m`.
pub type EdgeId = usize;

/// Simple undirected graph with interned vertex and edge labels.
///
/// Adjacency lists are sorted by neighbor id and store the id of the
/// connecting edge. Edges are stored with their smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_labels: Vec<Label>,
    edges: Vec<(Vertex, Vertex)>,
    edge_labels: Vec<Label>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl LabeledGraph {
    /// Graph without vertices.
    pub fn empty() -> Self {
        GraphBuilder::new(0, Label(0)).build()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn edge_label(&self, e: EdgeId) -> Label {
        self.edge_labels[e]
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted `(neighbor, edge)` pairs of `v`.
    pub fn adjacency(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let adj = self.adjacency.get(u)?;
        adj.binary_search_by_key(&v, |&(x, _)| x).ok().map(|i| adj[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }

    /// Subgraph induced by `vertices` (in the given order). Returns the new
    /// graph and, for each new vertex id, the original vertex.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (LabeledGraph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut b = GraphBuilder::with_labels(vertices.iter().map(|&v| self.label(v)).collect());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                b.add_edge(local[u], local[v], self.edge_labels[e])
                    .expect("induced subgraph of a simple graph is simple");
            }
        }
        (b.build(), vertices.to_vec())
    }
}

/// Incremental construction of a [`LabeledGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    vertex_labels: Vec<Label>,
    edges: Vec<(Vertex, Vertex)>,
    edge_labels: Vec<Label>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl GraphBuilder {
    /// `n` vertices, all labeled `label`.
    pub fn new(n: usize, label: Label) -> Self {
        Self::with_labels(vec![label; n])
    }

    pub fn with_labels(vertex_labels: Vec<Label>) -> Self {
        let n = vertex_labels.len();
        GraphBuilder { vertex_labels, edges: Vec::new(), edge_labels: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    pub fn add_vertex(&mut self, label: Label) -> Vertex {
        self.vertex_labels.push(label);
        self.adjacency.push(Vec::new());
        self.vertex_labels.len() - 1
    }

    pub fn set_label(&mut self, v: Vertex, label: Label) {
        self.vertex_labels[v] = label;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, label: Label) -> Result<EdgeId> {
        let n = self.vertex_labels.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, len: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.adjacency[a].iter().any(|&(x, _)| x == b) {
            return Err(Error::DuplicateEdge(a, b));
        }
        let id = self.edges.len();
        self.edges.push((a, b));
        self.edge_labels.push(label);
        self.adjacency[a].push((b, id));
        self.adjacency[b].push((a, id));
        Ok(id)
    }

    pub fn build(mut self) -> LabeledGraph {
        for adj in &mut self.adjacency {
            adj.sort_unstable();
        }
        LabeledGraph {
            vertex_labels: self.vertex_labels,
            edges: self.edges,
            edge_labels: self.edge_labels,
            adjacency: self.adjacency,
        }
    }
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn connected_components(g: &LabeledGraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The connected component of `g[keep]` that contains vertices of `anchor`.
///
/// Fails when no component or more than one component of `g[keep]` meets
/// `anchor`.
pub fn cc_of(g: &LabeledGraph, keep: &[Vertex], anchor: &[Vertex]) -> Result<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut kept = vec![false; n];
    for &v in keep {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, len: n });
        }
        kept[v] = true;
    }
    // component id per kept vertex
    let mut comp = vec![usize::MAX; n];
    let mut hit: Vec<usize> = Vec::new();
    let mut result = Vec::new();
    let mut stack = Vec::new();
    let mut next_id = 0;
    for &a in anchor {
        if a >= n {
            return Err(Error::VertexOutOfRange { vertex: a, len: n });
        }
        if !kept[a] {
            continue;
        }
        if comp[a] != usize::MAX {
            continue;
        }
        let id = next_id;
        next_id += 1;
        hit.push(id);
        comp[a] = id;
        stack.push(a);
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in g.neighbors(v) {
                if kept[u] && comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        if id == 0 {
            result = members;
        }
    }
    if hit.len() != 1 {
        return Err(Error::AmbiguousAnchor(hit.len()));
    }
    result.sort_unstable();
    Ok(result)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn graph(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        let mut b = GraphBuilder::new(n, Label(0));
        for &(u, v) in edges {
            b.add_edge(u, v, Label(0)).unwrap();
        }
        b.build()
    }

    #[test]
    fn builder_rejects_loops_duplicates_and_range() {
        let mut b = GraphBuilder::new(3, Label(0));
        b.add_edge(0, 1, Label(0)).unwrap();
        assert_eq!(b.add_edge(1, 0, Label(0)), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(b.add_edge(2, 2, Label(0)), Err(Error::SelfLoop(2)));
        assert_eq!(b.add_edge(0, 3, Label(0)), Err(Error::VertexOutOfRange { vertex: 3, len: 3 }));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = graph(4, &[(3, 0), (0, 1), (2, 0), (1, 2)]);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), [1, 2, 3]);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_between(u, v), Some(e));
            assert_eq!(g.edge_between(v, u), Some(e));
        }
        assert_eq!(g.edge_between(1, 3), None);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(connected_components(&g), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(connected_components(&LabeledGraph::empty()).is_empty());
    }

    #[test]
    fn cc_of_whole_and_ambiguous() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let all: Vec<_> = (0..5).collect();
        assert_eq!(cc_of(&g, &all, &[3]).unwrap(), all);
        // removing 2 splits the path; anchoring on both halves is ambiguous
        assert_eq!(cc_of(&g, &[0, 1, 3, 4], &[0, 4]), Err(Error::AmbiguousAnchor(2)));
        assert_eq!(cc_of(&g, &[0, 1, 3, 4], &[2]), Err(Error::AmbiguousAnchor(0)));
        assert_eq!(cc_of(&g, &[0, 1, 3, 4], &[1, 2]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let mut b = GraphBuilder::with_labels(vec![Label(1), Label(2), Label(3)]);
        b.add_edge(0, 1, Label(7)).unwrap();
        b.add_edge(1, 2, Label(8)).unwrap();
        let g = b.build();
        let (s, map) = g.induced_subgraph(&[2, 1]);
        assert_eq!(map, vec![2, 1]);
        assert_eq!(s.label(0), Label(3));
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.edge_label(0), Label(8));
    }
}
