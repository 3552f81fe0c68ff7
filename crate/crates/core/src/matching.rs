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

//! Maximum weight bipartite matching (Hungarian method).

use alloc::vec::Vec;

use crate::{Error, Result};

/// Bipartite graph with non-negative edge weights between `left` and
/// `right` handles. A missing pair is a missing edge, a stored weight of 0
/// is an edge that contributes nothing.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteWeightedGraph<L, R> {
    pub left: Vec<L>,
    pub right: Vec<R>,
    edges: Vec<(usize, usize, f64)>,
}

/// Matched `(left index, right index)` pairs, sorted, and their total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub total: f64,
}

impl<L, R> BipartiteWeightedGraph<L, R> {
    pub fn new(left: Vec<L>, right: Vec<R>) -> Self {
        BipartiteWeightedGraph { left, right, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, l: usize, r: usize, weight: f64) -> Result<()> {
        if l >= self.left.len() || r >= self.right.len() {
            return Err(Error::InvalidArgument("matching edge endpoint out of range"));
        }
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(Error::InvalidArgument("matching weights must be finite and non-negative"));
        }
        if let Some(e) = self.edges.iter_mut().find(|e| e.0 == l && e.1 == r) {
            e.2 = weight;
        } else {
            self.edges.push((l, r, weight));
        }
        Ok(())
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn weight(&self, l: usize, r: usize) -> Option<f64> {
        self.edges.iter().find(|e| e.0 == l && e.1 == r).map(|e| e.2)
    }
}

/// Maximum weight matching.
///
/// Runs the Hungarian method with the smaller side as rows, so a `k x l`
/// instance with `k <= l` costs `O(k^2 l)`. Absent pairs are treated as
/// weight 0 during the search and dropped from the result; since weights are
/// non-negative this does not change the optimum.
pub fn max_weight_matching<L, R>(bg: &BipartiteWeightedGraph<L, R>) -> Matching {
    let mut pairs = Vec::new();
    let total = Hungarian::default().solve(bg.left.len(), bg.right.len(), &bg.edges, Some(&mut pairs));
    Matching { pairs, total }
}

/// Buffers of the Hungarian method, kept between calls so that the many
/// tiny instances of the BBP recursion do not allocate.
#[derive(Debug, Default)]
pub(crate) struct Hungarian {
    cost: Vec<f64>,
    present: Vec<bool>,
    u: Vec<f64>,
    v: Vec<f64>,
    p: Vec<usize>,
    way: Vec<usize>,
    minv: Vec<f64>,
    used: Vec<bool>,
}

fn reset<T: Clone>(buf: &mut Vec<T>, len: usize, value: T) {
    buf.clear();
    buf.resize(len, value);
}

impl Hungarian {
    /// Maximum weight matching of `edges` (`(left, right, weight)`, weights
    /// non-negative) between `nl` left and `nr` right vertices. Matched
    /// pairs are written to `pairs` in sorted order when requested.
    pub(crate) fn solve(
        &mut self,
        nl: usize,
        nr: usize,
        edges: &[(usize, usize, f64)],
        pairs: Option<&mut Vec<(usize, usize)>>,
    ) -> f64 {
        if let Some(out) = pairs.as_deref() {
            debug_assert!(out.is_empty());
        }
        if edges.is_empty() || nl == 0 || nr == 0 {
            return 0.0;
        }
        let transpose = nl > nr;
        let (rows, cols) = if transpose { (nr, nl) } else { (nl, nr) };
        reset(&mut self.present, rows * cols, false);
        reset(&mut self.cost, rows * cols, 0.0);
        for &(l, r, w) in edges {
            let (i, j) = if transpose { (r, l) } else { (l, r) };
            self.present[i * cols + j] = true;
            self.cost[i * cols + j] = -w;
        }
        self.min_assignment(rows, cols);
        let mut total = 0.0;
        let mut out = pairs;
        for j in 1..=cols {
            let i = self.p[j];
            if i == 0 || !self.present[(i - 1) * cols + (j - 1)] {
                continue;
            }
            total -= self.cost[(i - 1) * cols + (j - 1)];
            if let Some(out) = out.as_deref_mut() {
                out.push(if transpose { (j - 1, i - 1) } else { (i - 1, j - 1) });
            }
        }
        if let Some(out) = out {
            out.sort_unstable();
        }
        total
    }

    /// Minimum cost assignment of every row to a distinct column,
    /// `rows <= cols`; afterwards `p[j]` is the (1-based) row of column `j`.
    fn min_assignment(&mut self, rows: usize, cols: usize) {
        debug_assert!(rows <= cols);
        let inf = f64::INFINITY;
        reset(&mut self.u, rows + 1, 0.0);
        reset(&mut self.v, cols + 1, 0.0);
        reset(&mut self.p, cols + 1, 0);
        reset(&mut self.way, cols + 1, 0);
        let Hungarian { cost, u, v, p, way, minv, used, .. } = self;
        for i in 1..=rows {
            p[0] = i;
            let mut j0 = 0;
            reset(minv, cols + 1, inf);
            reset(used, cols + 1, false);
            loop {
                used[j0] = true;
                let i0 = p[j0];
                let mut delta = inf;
                let mut j1 = 0;
                for j in 1..=cols {
                    if !used[j] {
                        let cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
                        if cur < minv[j] {
                            minv[j] = cur;
                            way[j] = j0;
                        }
                        if minv[j] < delta {
                            delta = minv[j];
                            j1 = j;
                        }
                    }
                }
                for j in 0..=cols {
                    if used[j] {
                        u[p[j]] += delta;
                        v[j] -= delta;
                    } else {
                        minv[j] -= delta;
                    }
                }
                j0 = j1;
                if p[j0] == 0 {
                    break;
                }
            }
            loop {
                let j1 = way[j0];
                p[j0] = p[j1];
                j0 = j1;
                if j0 == 0 {
                    break;
                }
            }
        }
    }
}
