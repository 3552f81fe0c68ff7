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

use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::bctree::tests::fig_graph;
use crate::graph::tests::graph;
use crate::oracle::{brute_bbp_mcis, check_iso};
use crate::{GraphBuilder, Label};

fn triangle() -> LabeledGraph {
    graph(3, &[(0, 1), (1, 2), (0, 2)])
}

fn labeled(vl: &[u32], edges: &[(usize, usize)]) -> LabeledGraph {
    let mut b = GraphBuilder::with_labels(vl.iter().map(|&l| Label(l)).collect());
    for &(u, v) in edges {
        b.add_edge(u, v, Label(0)).unwrap();
    }
    b.build()
}

fn bnode(t: &BcTree, vs: &[usize]) -> usize {
    t.b_nodes.iter().position(|b| b.vertices == vs).unwrap()
}

fn assert_admissible(g: &LabeledGraph, h: &LabeledGraph, w: &WeightFn, iso: &Isomorphism) {
    let r = check_iso(g, h, &iso.vertex_map, w);
    assert!(r.admissible(), "{r:?} {iso:?}");
    assert_eq!(r.weight, iso.weight);
}

#[test]
fn small_examples() {
    let w = WeightFn::uniform();
    let tri = triangle();
    assert_eq!(bbp_mcis(&tri, &tri, &w).unwrap().weight, 6.0);
    let p3 = graph(3, &[(0, 1), (1, 2)]);
    let iso = bbp_mcis(&p3, &tri, &w).unwrap();
    assert_eq!(iso.weight, 1.0);
    assert_eq!(iso.len(), 1);
    assert_eq!(bbp_mcis(&p3, &tri, &w).unwrap().weight, brute_bbp_mcis(&p3, &tri, &w).unwrap().0);
}

#[test]
fn figure_graph_maps_onto_itself() {
    let g = fig_graph();
    for w in [WeightFn::uniform(), WeightFn::label_equality()] {
        let iso = bbp_mcis(&g, &g, &w).unwrap();
        assert_eq!(iso.weight, 31.0);
        assert_eq!(iso.len(), 13);
        assert_admissible(&g, &g, &w, &iso);
    }
}

#[test]
fn single_vertex_pattern() {
    let g = GraphBuilder::new(1, Label(2)).build();
    let h = labeled(&[0, 2, 1], &[(0, 1), (1, 2)]);
    let w = WeightFn::label_equality();
    let iso = bbp_mcis(&g, &h, &w).unwrap();
    assert_eq!(iso.vertex_map, vec![(0, 1)]);
    assert_eq!(iso.weight, 1.0);
    // and as the target
    let iso = bbp_mcis(&h, &g, &w).unwrap();
    assert_eq!(iso.vertex_map, vec![(1, 0)]);
}

#[test]
fn incompatible_labels_give_the_empty_map() {
    let g = labeled(&[0, 0, 0], &[(0, 1), (1, 2), (0, 2)]);
    let h = labeled(&[1, 1], &[(0, 1)]);
    let iso = bbp_mcis(&g, &h, &WeightFn::label_equality()).unwrap();
    assert!(iso.is_empty());
    assert_eq!(iso.weight, 0.0);
}

#[test]
fn non_outerplanar_input_is_rejected() {
    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert_eq!(bbp_mcis(&k4, &triangle(), &WeightFn::uniform()), Err(Error::NotOuterplanar));
    assert_eq!(bbp_mcis(&triangle(), &k4, &WeightFn::uniform()), Err(Error::NotOuterplanar));
}

#[test]
fn block_and_bridge_never_pair() {
    let g = fig_graph();
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let t = s.g_tree();
    let (bridge, block) = (bnode(t, &[7, 10]), bnode(t, &[7, 8, 9]));
    assert!(s.bbp_edge(bridge, block, None).unwrap().is_empty());
    assert!(s.bbp_edge(block, bridge, None).unwrap().is_empty());
}

#[test]
fn identical_bridges() {
    let g = graph(2, &[(0, 1)]);
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let iso = s.bbp_edge(0, 0, None).unwrap();
    assert_eq!(iso.weight, 3.0);
    assert_eq!(iso.len(), 2);
}

#[test]
fn edge_in_the_middle_block_extends_to_everything() {
    let g = fig_graph();
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let t = s.g_tree();
    let b2 = bnode(t, &[3, 4, 5, 6, 7]);
    if s.parent_cut(b2).is_none() {
        let iso = s.bbp_edge(b2, b2, None).unwrap();
        assert_eq!(iso.weight, 31.0);
    }
    // b2 is reached through vertex 3 from the root block {0,1,2,3}
    assert_eq!(s.parent_cut(b2), Some(3));
    let iso = s.bbp_edge(b2, b2, Some((3, 3))).unwrap();
    // everything except the root block's private vertices 0, 1, 2
    assert_eq!(iso.len(), 10);
    assert_eq!(iso.weight, 10.0 + 13.0);
    assert_admissible(&g, &g, &w, &iso);
    // with the parent excluded, vertex 3 is not mapped and b2 minus 3 is a path
    let iso = s.bbp_edge(b2, b2, None).unwrap();
    assert!(iso.image(3).is_none());
    assert_admissible(&g, &g, &w, &iso);
}

#[test]
fn fixed_vertex_must_be_the_parent_cutvertex() {
    let g = fig_graph();
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let b2 = bnode(s.g_tree(), &[3, 4, 5, 6, 7]);
    assert!(matches!(s.bbp_edge(b2, b2, Some((7, 7))), Err(Error::InvalidArgument(_))));
}

#[test]
fn set_sx_on_the_root_is_the_solution() {
    let g = fig_graph();
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let root = s.root().unwrap();
    assert_eq!(s.set_sx(root).unwrap(), s.solve());
    // below b4 (the bridge 7-10) only the triangle 10-11-12 is left
    let b4 = bnode(s.g_tree(), &[7, 10]);
    let iso = s.set_sx(b4).unwrap();
    assert_eq!(iso.weight, 6.0);
    assert!(iso.vertex_map.iter().all(|m| m.0 >= 10));
}

#[test]
fn single_vertex_family() {
    let g = fig_graph();
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&g, &g, &w).unwrap();
    let t = s.g_tree();
    let b4 = bnode(t, &[7, 10]);
    // 10 is not a cutvertex-free vertex: it extends into the triangle below;
    // onto 11 (no cutvertex in H) the only partner is H's triangle
    let iso = s.bbp_single_vertex(b4, 10, 11).unwrap();
    assert_eq!(iso.weight, 6.0);
    assert_eq!(iso.image(10), Some(11));
    assert_admissible(&g, &g, &w, &iso);
    // onto the cutvertex 10 of H: the triangle pairs with the triangle
    let iso = s.bbp_single_vertex(b4, 10, 10).unwrap();
    assert_eq!(iso.weight, 6.0);
    // a vertex that is no cutvertex stays alone
    let b5 = bnode(t, &[10, 11, 12]);
    let iso = s.bbp_single_vertex(b5, 11, 3).unwrap();
    assert_eq!(iso.vertex_map, vec![(11, 3)]);
    assert_eq!(iso.weight, 1.0);
    // the parent cutvertex is outside the family
    assert!(s.bbp_single_vertex(b5, 10, 3).is_err());
}

#[test]
fn two_sided_expansion_at_cutvertices() {
    // three triangles sharing vertex 2, in both graphs
    let flower = graph(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (2, 5), (5, 6), (2, 6)]);
    let w = WeightFn::uniform();
    let s = BbpSolver::new(&flower, &flower, &w).unwrap();
    let root = s.root().unwrap();
    // the two child triangles go onto two of the three triangles at 2
    let iso = s.bbp_single_vertex(root, 2, 2).unwrap();
    assert_eq!(iso.weight, 11.0);
    assert_eq!(iso.len(), 5);
    assert_admissible(&flower, &flower, &w, &iso);
    assert_eq!(s.solve().weight, 16.0);
}

#[test]
fn disconnected_inputs_pair_components() {
    let w = WeightFn::uniform();
    // triangle + isolated vertex vs path + triangle
    let g = graph(4, &[(1, 2), (2, 3), (1, 3)]);
    let h = graph(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]);
    let iso = bbp_mcis(&g, &h, &w).unwrap();
    assert_eq!(iso.weight, 6.0);
    assert_eq!(iso.vertex_map.iter().map(|m| m.0).collect::<Vec<_>>(), vec![1, 2, 3]);
    assert!(iso.vertex_map.iter().all(|m| m.1 >= 2));
    let empty = LabeledGraph::empty();
    assert!(bbp_mcis(&empty, &h, &w).unwrap().is_empty());
}

#[test]
fn matches_oracle_on_fixed_examples() {
    let w = WeightFn::uniform();
    let cases = [
        (graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]), graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        (
            graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]),
            graph(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (3, 4)]),
        ),
        (graph(4, &[(0, 1), (0, 2), (0, 3)]), graph(5, &[(0, 1), (1, 2), (1, 3), (3, 4)])),
    ];
    for (g, h) in cases {
        let iso = bbp_mcis(&g, &h, &w).unwrap();
        assert_eq!(iso.weight, brute_bbp_mcis(&g, &h, &w).unwrap().0);
        assert_admissible(&g, &h, &w, &iso);
    }
}
