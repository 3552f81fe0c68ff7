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

//! Result records, the unit of output of `compare`, `batch` and `check`.

use std::fmt::Write as _;

use bbp_mcis_core::oracle::check_iso;
use bbp_mcis_core::{LabeledGraph, Vertex, WeightFn};
use serde::{Deserialize, Serialize};

/// Relative tolerance when comparing a reported weight with the checker's
/// recomputation; sums of non-integer scores depend on summation order.
const WEIGHT_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Connected BBP-MCIS of the whole graphs.
    #[serde(rename = "bbp")]
    Bbp,
    /// One maximum common biconnected subgraph of two blocks.
    #[serde(rename = "2mcis")]
    Biconnected,
}

/// Verdicts of the independent checker on a reported map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckFlags {
    pub injective: bool,
    pub induced: bool,
    pub connected: bool,
    pub bbp: bool,
    pub weight_consistent: bool,
}

impl CheckFlags {
    pub fn all(&self) -> bool {
        self.injective && self.induced && self.connected && self.bbp && self.weight_consistent
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRecord {
    pub g: String,
    pub h: String,
    pub mode: Mode,
    pub weight: f64,
    /// `[vertex of G, vertex of H]`, sorted by the G vertex.
    pub vertex_map: Vec<[Vertex; 2]>,
    /// Number of G edges between mapped vertices.
    pub mapped_edges: usize,
    pub elapsed_us: u64,
    pub check: CheckFlags,
}

impl ResultRecord {
    /// Builds a record and runs the checker on it.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        ids: (&str, &str),
        mode: Mode,
        g: &LabeledGraph,
        h: &LabeledGraph,
        w: &WeightFn,
        map: &[(Vertex, Vertex)],
        weight: f64,
        elapsed_us: u64,
    ) -> Self {
        let report = check_iso(g, h, map, w);
        let mut vertex_map: Vec<[Vertex; 2]> = map.iter().map(|&(a, b)| [a, b]).collect();
        vertex_map.sort_unstable();
        let mut in_domain = vec![false; g.vertex_count()];
        for &(a, _) in map {
            if let Some(slot) = in_domain.get_mut(a) {
                *slot = true;
            }
        }
        let mapped_edges = g.edges().iter().filter(|&&(u, v)| in_domain[u] && in_domain[v]).count();
        let weight_consistent =
            report.weight.is_finite() && (report.weight - weight).abs() <= WEIGHT_RTOL * weight.abs().max(1.0);
        ResultRecord {
            g: ids.0.to_owned(),
            h: ids.1.to_owned(),
            mode,
            weight,
            vertex_map,
            mapped_edges,
            elapsed_us,
            check: CheckFlags {
                injective: report.injective,
                induced: report.induced,
                connected: report.connected,
                bbp: report.bbp,
                weight_consistent,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// Two-line human readable form.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} weight {} vertices {} edges {} time {}us check {}\n",
            self.g,
            self.h,
            match self.mode {
                Mode::Bbp => "bbp",
                Mode::Biconnected => "2mcis",
            },
            self.weight,
            self.vertex_map.len(),
            self.mapped_edges,
            self.elapsed_us,
            if self.check.all() { "ok" } else { "FAILED" },
        );
        if self.vertex_map.is_empty() {
            out.push_str("  empty map\n");
        } else {
            out.push(' ');
            for [a, b] in &self.vertex_map {
                let _ = write!(out, " {a}->{b}");
            }
            out.push('\n');
        }
        out
    }
}
