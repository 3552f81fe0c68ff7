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

//! Runtime benchmark on generated graph pairs.
//!
//! Every configuration `(n, ratio, block size)` is measured on `reps`
//! independently generated pairs; only the solver call is timed.

use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use bbp_mcis_core::generator::{gen_outerplanar, GenParams};
use bbp_mcis_core::{bbp_mcis, decompose, LabeledGraph, WeightFn};
use serde::Serialize;

use crate::error::{CliError, CliResult};

const WARMUP: Duration = Duration::from_millis(100);
const WARMUP_MIN_RUNS: usize = 3;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub ratios: Vec<f64>,
    pub block_sizes: Vec<f64>,
    pub labels: u32,
    pub reps: usize,
    /// Number of round-robin passes the reps are split into; 1 measures
    /// each configuration in one go.
    pub rounds: usize,
    pub seed: u64,
    pub weights: WeightFn,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub ratio: f64,
    pub block_size: f64,
    pub reps: usize,
    pub mean_ms: f64,
    pub sd_ms: f64,
    pub min_ms: f64,
    pub max_ms: f64,
    /// Measured `|E|/|V|` over all generated graphs of the row.
    pub actual_ratio: f64,
    /// Measured mean vertices per block over all generated graphs.
    pub actual_block_size: f64,
    pub mean_weight: f64,
}

fn block_stats(g: &LabeledGraph) -> (usize, usize) {
    let d = decompose(g).expect("generated graphs are connected");
    let mut seen = vec![usize::MAX; g.vertex_count()];
    let mut total = 0;
    for (i, block) in d.blocks.iter().enumerate() {
        for &e in block {
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                if seen[x] != i {
                    seen[x] = i;
                    total += 1;
                }
            }
        }
    }
    (d.blocks.len(), total)
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = if xs.len() > 1 { xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0) } else { 0.0 };
    (mean, var.sqrt())
}

/// One configuration: its pairs, generated up front, and the samples so far.
struct Config {
    params: GenParams,
    warmup: (LabeledGraph, LabeledGraph),
    pairs: Vec<(LabeledGraph, LabeledGraph)>,
    times: Vec<f64>,
    weight: f64,
}

impl Config {
    fn new(cfg: &BenchConfig, params: GenParams, seed: u64) -> CliResult<Self> {
        let generate =
            |s: u64| gen_outerplanar(&params, s).map_err(|e| CliError::Usage(format!("cannot generate graphs: {e}")));
        let warmup = (generate(seed.wrapping_sub(2))?, generate(seed.wrapping_sub(1))?);
        let pairs = (0..cfg.reps as u64)
            .map(|r| Ok((generate(seed.wrapping_add(2 * r))?, generate(seed.wrapping_add(2 * r + 1))?)))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Config { params, warmup, pairs, times: Vec::with_capacity(cfg.reps), weight: 0.0 })
    }

    /// Untimed runs, so heap growth and clock ramp-up do not land in the
    /// first samples.
    fn warm_up(&self, w: &WeightFn) {
        let (g, h) = &self.warmup;
        let start = Instant::now();
        for i in 0.. {
            if i >= WARMUP_MIN_RUNS && start.elapsed() >= WARMUP {
                break;
            }
            let _ = black_box(bbp_mcis(black_box(g), black_box(h), w));
        }
    }

    fn time(&mut self, reps: std::ops::Range<usize>, w: &WeightFn) {
        for (g, h) in &self.pairs[reps] {
            let start = Instant::now();
            let iso = black_box(bbp_mcis(black_box(g), black_box(h), w)).expect("generated graphs are outerplanar");
            self.times.push(start.elapsed().as_secs_f64() * 1e3);
            self.weight += iso.weight;
        }
    }

    fn row(&self) -> BenchRow {
        let (mut vertices, mut edges, mut blocks, mut block_vertices) = (0, 0, 0, 0);
        for x in self.pairs.iter().flat_map(|(g, h)| [g, h]) {
            vertices += x.vertex_count();
            edges += x.edge_count();
            let (b, bv) = block_stats(x);
            blocks += b;
            block_vertices += bv;
        }
        let (mean_ms, sd_ms) = mean_sd(&self.times);
        BenchRow {
            n: self.params.n,
            ratio: self.params.ratio,
            block_size: self.params.avg_block,
            reps: self.times.len(),
            mean_ms,
            sd_ms,
            min_ms: self.times.iter().copied().fold(f64::INFINITY, f64::min),
            max_ms: self.times.iter().copied().fold(0.0, f64::max),
            actual_ratio: edges as f64 / vertices as f64,
            actual_block_size: if blocks == 0 { 0.0 } else { block_vertices as f64 / blocks as f64 },
            mean_weight: self.weight / self.times.len() as f64,
        }
    }
}

/// Runs every configuration in the order sizes, ratios, block sizes (sizes
/// vary slowest). The reps of each configuration are split into
/// `cfg.rounds` consecutive chunks that are timed round-robin across
/// configurations, so a slow phase of the machine is shared by all rows
/// instead of skewing one. The pairs timed do not depend on `rounds`.
/// `progress` receives each row as soon as it is complete.
pub fn run(cfg: &BenchConfig, mut progress: impl FnMut(&BenchRow)) -> CliResult<Vec<BenchRow>> {
    if cfg.reps == 0 || cfg.sizes.is_empty() || cfg.ratios.is_empty() || cfg.block_sizes.is_empty() {
        return Err(CliError::Usage("bench needs at least one size, ratio, block size and rep".into()));
    }
    if cfg.rounds == 0 || cfg.rounds > cfg.reps {
        return Err(CliError::Usage("rounds must lie between 1 and reps".into()));
    }
    let mut configs = Vec::new();
    for &n in &cfg.sizes {
        for &ratio in &cfg.ratios {
            for &bs in &cfg.block_sizes {
                let mut params = GenParams::new(n, ratio, bs, cfg.labels.max(1));
                params.edge_labels = 1;
                // Distinct configurations draw from disjoint seed ranges.
                let config_seed = cfg.seed.wrapping_add((configs.len() as u64) << 32);
                configs.push(Config::new(cfg, params, config_seed)?);
            }
        }
    }
    let mut rows = Vec::with_capacity(configs.len());
    for round in 0..cfg.rounds {
        let chunk = round * cfg.reps / cfg.rounds..(round + 1) * cfg.reps / cfg.rounds;
        for c in &mut configs {
            if round == 0 {
                c.warm_up(&cfg.weights);
            }
            c.time(chunk.clone(), &cfg.weights);
            if round + 1 == cfg.rounds {
                let row = c.row();
                progress(&row);
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

pub fn write_csv(rows: &[BenchRow], out: impl Write) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Write(e.into()))?;
    }
    w.flush()?;
    Ok(())
}
