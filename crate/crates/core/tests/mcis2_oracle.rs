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

//! 2-MCIS against exhaustive search on small random blocks.

use bbp_mcis_core::generator::gen_biconnected;
use bbp_mcis_core::mcis2::{mcis2_enumerate_all, mcis2_weight, EmbeddedBlock, MappingType, Mcis2};
use bbp_mcis_core::oracle::{brute_2mcis, check_iso};
use bbp_mcis_core::{decompose, LabeledGraph, WeightFn};

fn random_block(seed: u64, max_n: usize) -> LabeledGraph {
    let n = 3 + (seed as usize * 7 + 3) % (max_n - 2);
    let chords = (seed as usize / 3) % (n - 2);
    gen_biconnected(n, chords, 2, seed).unwrap()
}

fn biconnected(g: &LabeledGraph, s: &[usize]) -> bool {
    let (sub, _) = g.induced_subgraph(s);
    let d = decompose(&sub).unwrap();
    d.blocks.len() == 1 && d.bridges.is_empty()
}

#[test]
fn weight_and_witness_set_match_brute_force() {
    for seed in 0..300u64 {
        let g = random_block(seed, 7);
        let h = random_block(seed + 10_000, 7);
        let (bg, bh) = (EmbeddedBlock::of_graph(&g).unwrap(), EmbeddedBlock::of_graph(&h).unwrap());
        for w in [WeightFn::uniform(), WeightFn::label_equality()] {
            let (bw, mut wits) = brute_2mcis(&g, &h, &w).unwrap();
            let (weight, best) = mcis2_weight(&bg, &bh, &w, None);
            assert_eq!(weight, bw, "seed {seed}");
            assert_eq!(best.is_some(), !wits.is_empty(), "seed {seed}");
            let mut got: Vec<Vec<(usize, usize)>> =
                mcis2_enumerate_all(&bg, &bh, &w).iter().map(|p| p.to_global(&bg, &bh)).collect();
            got.sort();
            wits.sort();
            let n = got.len();
            got.dedup();
            assert_eq!(got.len(), n, "duplicate emission, seed {seed}");
            assert_eq!(got, wits, "seed {seed}");
        }
    }
}

#[test]
fn every_piece_is_a_biconnected_induced_isomorphism() {
    for seed in 0..200u64 {
        let g = random_block(seed, 9);
        let h = random_block(seed + 777, 9);
        let (bg, bh) = (EmbeddedBlock::of_graph(&g).unwrap(), EmbeddedBlock::of_graph(&h).unwrap());
        let w = WeightFn::label_equality();
        for p in Mcis2::new(&bg, &bh, &w).run().pieces {
            let map = p.to_global(&bg, &bh);
            let r = check_iso(&g, &h, &map, &w);
            assert!(r.injective && r.induced && r.connected, "seed {seed}");
            assert_eq!(r.weight, p.weight, "seed {seed}");
            let dom: Vec<usize> = map.iter().map(|m| m.0).collect();
            let img: Vec<usize> = map.iter().map(|m| m.1).collect();
            assert!(biconnected(&g, &dom) && biconnected(&h, &img), "seed {seed}");
        }
    }
}

#[test]
fn maximal_isomorphisms_are_unique_per_member_seed() {
    for seed in 0..200u64 {
        let g = random_block(seed, 12);
        let h = random_block(seed + 31, 12);
        let (bg, bh) = (EmbeddedBlock::of_graph(&g).unwrap(), EmbeddedBlock::of_graph(&h).unwrap());
        let w = WeightFn::uniform();
        let mut m = Mcis2::new(&bg, &bh, &w);
        for e in 0..bg.edge_count() {
            for f in 0..bh.edge_count() {
                for t in MappingType::ALL {
                    let Some(phi) = m.maximal_iso(e, f, t) else { continue };
                    assert_eq!(m.maximal_iso(e, f, t).as_ref(), Some(&phi));
                    let mut edges = phi.mapped_edges.clone();
                    edges.sort_unstable();
                    for &(e2, f2, t2) in &phi.mapped_edges {
                        let again = m.maximal_iso(e2, f2, t2).expect("member seed is valid");
                        assert_eq!(again.vertex_map, phi.vertex_map);
                        let mut edges2 = again.mapped_edges.clone();
                        edges2.sort_unstable();
                        assert_eq!(edges2, edges);
                    }
                }
            }
        }
        let run = m.run();
        assert_eq!(run.stats.rewrites, 0, "seed {seed}");
        assert_eq!(run.stats.cells_written, run.table.defined(), "seed {seed}");
    }
}

#[test]
fn symmetric_under_swapping_inputs() {
    for seed in 0..100u64 {
        let g = random_block(seed, 10);
        let h = random_block(seed + 5, 10);
        let (bg, bh) = (EmbeddedBlock::of_graph(&g).unwrap(), EmbeddedBlock::of_graph(&h).unwrap());
        let w = WeightFn::label_equality();
        assert_eq!(mcis2_weight(&bg, &bh, &w, None).0, mcis2_weight(&bh, &bg, &w.transpose(), None).0);
    }
}
