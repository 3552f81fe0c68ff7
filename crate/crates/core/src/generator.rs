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

//! Seeded random connected outerplanar graphs.
//!
//! A graph is assembled as a random tree of B-nodes: blocks (a cycle plus a
//! random subset of the diagonals of a random triangulation, hence always
//! outerplanar) and bridges, each attached at a uniformly chosen vertex of
//! the part built so far. The number of blocks, their sizes and the number
//! of chords are chosen so that the edge count and the block sizes hit the
//! requested averages.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphBuilder, LabeledGraph};
use crate::{Error, Label, Result};

/// Parameters of [`gen_outerplanar`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    /// Number of vertices.
    pub n: usize,
    /// Target `|E| / |V|`.
    pub ratio: f64,
    /// Target mean number of vertices per block (bridges not counted).
    pub avg_block: f64,
    /// Vertex labels are drawn uniformly from `0..labels`.
    pub labels: u32,
    /// Edge labels are drawn uniformly from `0..edge_labels`.
    pub edge_labels: u32,
}

impl GenParams {
    pub fn new(n: usize, ratio: f64, avg_block: f64, labels: u32) -> Self {
        GenParams { n, ratio, avg_block, labels, edge_labels: 1 }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1"));
        }
        if !(self.ratio > 0.0 && self.ratio < 2.0) {
            return Err(Error::InvalidArgument("ratio must lie in (0, 2)"));
        }
        if !self.avg_block.is_finite() || self.avg_block < 2.0 {
            return Err(Error::InvalidArgument("average block size must be at least 2"));
        }
        if self.labels == 0 || self.edge_labels == 0 {
            return Err(Error::InvalidArgument("label alphabets must be non-empty"));
        }
        Ok(())
    }
}

fn stochastic_round(rng: &mut ChaCha8Rng, x: f64) -> usize {
    let f = libm_floor(x);
    let frac = x - f;
    f as usize + usize::from(frac > 0.0 && rng.random_bool(frac))
}

fn libm_floor(x: f64) -> f64 {
    // no_std: truncation equals floor for the non-negative inputs used here
    debug_assert!(x >= 0.0);
    (x as u64) as f64
}

/// Diagonals of a random triangulation of the polygon `0..s`.
fn triangulation(rng: &mut ChaCha8Rng, s: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(s.saturating_sub(3));
    let mut stack = vec![(0, s - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let k = rng.random_range(lo + 1..hi);
        if k - lo >= 2 {
            out.push((lo, k));
        }
        if hi - k >= 2 {
            out.push((k, hi));
        }
        stack.push((lo, k));
        stack.push((k, hi));
    }
    out.retain(|&(a, b)| !(a == 0 && b == s - 1));
    out
}

/// Edges of a biconnected outerplanar graph on the cycle `0..s` with
/// `chords` random non-crossing chords, in cycle-position coordinates.
fn block_edges(rng: &mut ChaCha8Rng, s: usize, chords: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..s).map(|i| (i, (i + 1) % s)).collect();
    let mut diag = triangulation(rng, s);
    diag.shuffle(rng);
    edges.extend(diag.into_iter().take(chords));
    edges
}

/// Block sizes and chord counts for the targets; the remaining vertices are
/// attached through bridges.
struct Plan {
    blocks: Vec<(usize, usize)>,
    bridges: usize,
}

fn plan(rng: &mut ChaCha8Rng, p: &GenParams) -> Result<Plan> {
    let n = p.n;
    if (n as f64) * p.ratio < (n - 1) as f64 {
        return Err(Error::InfeasibleParameters("ratio too small for a connected graph"));
    }
    let max_m = if n < 3 { n - 1 } else { 2 * n - 3 };
    let m = stochastic_round(rng, n as f64 * p.ratio).clamp(n - 1, max_m);
    let cyclomatic = m - (n - 1);
    if cyclomatic == 0 {
        return Ok(Plan { blocks: Vec::new(), bridges: n - 1 });
    }
    let per_block = (p.avg_block - 1.0).max(2.0);
    let fit = libm_floor((n - 1) as f64 / per_block) as usize;
    let mut k = cyclomatic.min(fit).max(1);
    let base = libm_floor(p.avg_block) as usize;
    let frac = p.avg_block - base as f64;
    let mut sizes: Vec<usize> =
        (0..k).map(|_| (base + usize::from(frac > 0.0 && rng.random_bool(frac))).max(3)).collect();
    // shrink until the blocks fit into n vertices
    while sizes.iter().map(|s| s - 1).sum::<usize>() > n - 1 {
        match sizes.iter_mut().filter(|s| **s > 3).max() {
            Some(s) => *s -= 1,
            None => {
                sizes.pop();
                k -= 1;
            }
        }
    }
    if k == 0 {
        return Err(Error::InfeasibleParameters("no block fits"));
    }
    let mut bridges = n - 1 - sizes.iter().map(|s| s - 1).sum::<usize>();
    let mut chords = cyclomatic - k;
    let mut capacity: usize = sizes.iter().map(|s| s - 3).sum();
    while chords > capacity && bridges > 0 {
        let i = rng.random_range(0..k);
        sizes[i] += 1;
        bridges -= 1;
        capacity += 1;
    }
    // merging two blocks frees two chord slots and costs one
    while chords > capacity && k > 1 {
        let last = sizes.pop().expect("k > 1");
        let i = rng.random_range(0..k - 1);
        sizes[i] += last - 1;
        k -= 1;
        chords += 1;
        capacity += 2;
    }
    if chords > capacity {
        return Err(Error::InfeasibleParameters("too many edges for the block sizes"));
    }
    let mut slots: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| core::iter::repeat_n(i, s - 3)).collect();
    slots.shuffle(rng);
    let mut per = vec![0; k];
    for &i in &slots[..chords] {
        per[i] += 1;
    }
    Ok(Plan { blocks: sizes.into_iter().zip(per).collect(), bridges })
}

/// A random connected outerplanar graph. The same parameters and seed give
/// the same graph.
pub fn gen_outerplanar(p: &GenParams, seed: u64) -> Result<LabeledGraph> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plan = plan(&mut rng, p)?;
    // B-nodes as (size, chords); bridges are (2, 0)
    let mut parts: Vec<(usize, usize)> = plan.blocks;
    parts.extend(core::iter::repeat_n((2, 0), plan.bridges));
    parts.shuffle(&mut rng);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut count = 1;
    for (s, chords) in parts {
        let anchor = rng.random_range(0..count);
        let mut ids: Vec<usize> = (count..count + s - 1).collect();
        ids.insert(rng.random_range(0..s), anchor);
        count += s - 1;
        if s == 2 {
            edges.push((ids[0], ids[1]));
        } else {
            edges.extend(block_edges(&mut rng, s, chords).into_iter().map(|(a, b)| (ids[a], ids[b])));
        }
    }
    debug_assert_eq!(count, p.n);
    Ok(relabel(&mut rng, p.n, &edges, p.labels, p.edge_labels))
}

/// Random vertex numbering and labels.
fn relabel(rng: &mut ChaCha8Rng, n: usize, edges: &[(usize, usize)], labels: u32, edge_labels: u32) -> LabeledGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut b = GraphBuilder::with_labels((0..n).map(|_| Label(rng.random_range(0..labels))).collect());
    for &(u, v) in edges {
        b.add_edge(perm[u], perm[v], Label(rng.random_range(0..edge_labels))).expect("generated edges are simple");
    }
    b.build()
}

/// A random biconnected outerplanar graph on `n >= 3` vertices with
/// `chords <= n - 3` chords.
pub fn gen_biconnected(n: usize, chords: usize, labels: u32, seed: u64) -> Result<LabeledGraph> {
    if n < 3 || chords > n - 3 || labels == 0 {
        return Err(Error::InvalidArgument("need n >= 3, chords <= n - 3 and labels >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = block_edges(&mut rng, n, chords);
    Ok(relabel(&mut rng, n, &edges, labels, 1))
}
