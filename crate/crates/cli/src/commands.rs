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

//! The subcommands, independent of argument parsing. Output goes to the
//! given writer; diagnostics that do not abort a command go to stderr.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bbp_mcis_core::generator::{gen_outerplanar, GenParams};
use bbp_mcis_core::mcis2::{mcis2_enumerate_all, EmbeddedBlock};
use bbp_mcis_core::oracle::{brute_bbp_mcis, BRUTE_BBP_LIMIT};
use bbp_mcis_core::{bbp_mcis, is_outerplanar, Error, LabelInterner, LabeledGraph, WeightFn};
use rayon::prelude::*;

use crate::bench::{self, BenchConfig, BenchRow};
use crate::error::{CliError, CliResult};
use crate::format::{numeric_names, write_graph};
use crate::input::{load_graph, WeightArg};
use crate::record::{Mode, ResultRecord};

fn id(path: &Path) -> String {
    path.display().to_string()
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros().try_into().unwrap_or(u64::MAX)
}

fn emit(out: &mut dyn Write, record: &ResultRecord, json: bool) -> CliResult<()> {
    if json {
        writeln!(out, "{}", record.to_json())?;
    } else {
        write!(out, "{}", record.to_text())?;
    }
    Ok(())
}

fn require_outerplanar(g: &LabeledGraph, name: &str) -> CliResult<()> {
    if is_outerplanar(g) {
        Ok(())
    } else {
        Err(CliError::Rejected { context: name.to_owned(), source: Error::NotOuterplanar })
    }
}

/// Runs the solver on one pair; the timer covers the solver call only.
pub fn solve_pair(ids: (&str, &str), g: &LabeledGraph, h: &LabeledGraph, w: &WeightFn) -> CliResult<ResultRecord> {
    require_outerplanar(g, ids.0)?;
    require_outerplanar(h, ids.1)?;
    let start = Instant::now();
    let iso = bbp_mcis(g, h, w)
        .map_err(|source| CliError::Rejected { context: format!("{} vs {}", ids.0, ids.1), source })?;
    let elapsed = micros(start);
    Ok(ResultRecord::new(ids, Mode::Bbp, g, h, w, &iso.vertex_map, iso.weight, elapsed))
}

/// All maximum common biconnected subgraphs of two blocks, one record each.
/// Every record carries the time of the whole enumeration.
pub fn enumerate_pair(
    ids: (&str, &str),
    g: &LabeledGraph,
    h: &LabeledGraph,
    w: &WeightFn,
) -> CliResult<Vec<ResultRecord>> {
    let block = |x: &LabeledGraph, name: &str| {
        EmbeddedBlock::of_graph(x).map_err(|source| CliError::Rejected { context: name.to_owned(), source })
    };
    let (bg, bh) = (block(g, ids.0)?, block(h, ids.1)?);
    let start = Instant::now();
    let pieces = mcis2_enumerate_all(&bg, &bh, w);
    let elapsed = micros(start);
    Ok(pieces
        .iter()
        .map(|p| ResultRecord::new(ids, Mode::Biconnected, g, h, w, &p.to_global(&bg, &bh), p.weight, elapsed))
        .collect())
}

pub fn compare(
    a: &Path,
    b: &Path,
    weights: &WeightArg,
    enumerate: bool,
    json: bool,
    out: &mut dyn Write,
) -> CliResult<()> {
    let mut names = LabelInterner::new();
    let g = load_graph(a, &mut names)?;
    let h = load_graph(b, &mut names)?;
    let w = weights.resolve(&mut names)?;
    let (ia, ib) = (id(a), id(b));
    if enumerate {
        let records = enumerate_pair((&ia, &ib), &g, &h, &w)?;
        if records.is_empty() && !json {
            writeln!(out, "{ia} {ib} 2mcis weight 0\n  no common biconnected subgraph")?;
        }
        for r in &records {
            emit(out, r, json)?;
        }
    } else {
        emit(out, &solve_pair((&ia, &ib), &g, &h, &w)?, json)?;
    }
    Ok(())
}

/// Reads `A<TAB>B` lines; relative paths are taken relative to the list.
fn read_pairs(list: &Path) -> CliResult<Vec<(usize, PathBuf, PathBuf)>> {
    let text = fs::read_to_string(list).map_err(|source| CliError::Read { path: list.to_owned(), source })?;
    let base = list.parent().unwrap_or(Path::new(""));
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = if line.contains('\t') {
            line.split('\t').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        let [x, y] = fields[..] else {
            return Err(CliError::Parse {
                path: list.to_owned(),
                source: crate::format::ParseError::new(i + 1, "expected two paths separated by a tab"),
            });
        };
        pairs.push((i + 1, base.join(x), base.join(y)));
    }
    Ok(pairs)
}

pub fn batch(list: &Path, weights: &WeightArg, json: bool, jobs: usize, out: &mut dyn Write) -> CliResult<()> {
    let pairs = read_pairs(list)?;
    // Each distinct file is parsed once and shared by all workers.
    let mut names = LabelInterner::new();
    let mut index: HashMap<PathBuf, usize> = HashMap::new();
    let mut graphs = Vec::new();
    for (_, x, y) in &pairs {
        for p in [x, y] {
            if !index.contains_key(p) {
                graphs.push(load_graph(p, &mut names)?);
                index.insert(p.clone(), graphs.len() - 1);
            }
        }
    }
    let w = weights.resolve(&mut names)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let results: Vec<CliResult<ResultRecord>> = pool.install(|| {
        pairs
            .par_iter()
            .map(|(_, x, y)| solve_pair((&id(x), &id(y)), &graphs[index[x]], &graphs[index[y]], &w))
            .collect()
    });

    let mut first_error = None;
    for ((line, _, _), result) in pairs.iter().zip(results) {
        match result {
            Ok(r) => emit(out, &r, json)?,
            Err(e) => {
                eprintln!("{}:{line}: {e}", list.display());
                first_error.get_or_insert(e);
            }
        }
    }
    first_error.map_or(Ok(()), Err)
}

pub struct GenArgs {
    pub params: GenParams,
    pub seed: u64,
    pub count: usize,
    pub out_dir: PathBuf,
}

/// Writes `count` graphs with seeds `seed, seed + 1, ...` and prints their
/// paths.
pub fn generate(args: &GenArgs, out: &mut dyn Write) -> CliResult<()> {
    fs::create_dir_all(&args.out_dir).map_err(CliError::Write)?;
    let names = numeric_names(args.params.labels.max(args.params.edge_labels));
    for i in 0..args.count as u64 {
        let seed = args.seed.wrapping_add(i);
        let g = gen_outerplanar(&args.params, seed).map_err(|e| CliError::Usage(e.to_string()))?;
        let path = args.out_dir.join(format!("n{}_s{seed}.graph", args.params.n));
        fs::write(&path, write_graph(&g, &names)).map_err(CliError::Write)?;
        writeln!(out, "{}", path.display())?;
    }
    Ok(())
}

/// Solver against brute force when both graphs are small enough, otherwise
/// solver against the checker alone.
pub fn check(a: &Path, b: &Path, weights: &WeightArg, out: &mut dyn Write) -> CliResult<()> {
    let mut names = LabelInterner::new();
    let g = load_graph(a, &mut names)?;
    let h = load_graph(b, &mut names)?;
    let w = weights.resolve(&mut names)?;
    let (ia, ib) = (id(a), id(b));
    let record = solve_pair((&ia, &ib), &g, &h, &w)?;
    write!(out, "{}", record.to_text())?;
    let mut problems = Vec::new();
    if !record.check.all() {
        problems.push(format!("checker rejects the solution: {:?}", record.check));
    }
    if g.vertex_count() <= BRUTE_BBP_LIMIT && h.vertex_count() <= BRUTE_BBP_LIMIT {
        let (brute, _) =
            brute_bbp_mcis(&g, &h, &w).map_err(|source| CliError::Rejected { context: ia.clone(), source })?;
        writeln!(out, "oracle weight {brute}")?;
        if brute != record.weight {
            problems.push(format!("solver weight {} differs from oracle weight {brute}", record.weight));
        }
    } else {
        writeln!(out, "oracle skipped: more than {BRUTE_BBP_LIMIT} vertices")?;
    }
    if problems.is_empty() {
        writeln!(out, "agree")?;
        Ok(())
    } else {
        Err(CliError::Mismatch(problems.join("; ")))
    }
}

pub fn run_bench(cfg: &BenchConfig, csv: Option<&Path>, out: &mut dyn Write) -> CliResult<Vec<BenchRow>> {
    writeln!(out, "{:>6} {:>6} {:>6} {:>22} {:>8}", "n", "ratio", "bs", "mean ± sd (ms)", "factor")?;
    let mut prev: Option<f64> = None;
    let mut failed = None;
    let rows = bench::run(cfg, |r| {
        let factor = prev.map_or(String::from("-"), |p| format!("{:.2}", r.mean_ms / p));
        prev = Some(r.mean_ms);
        let line = format!(
            "{:>6} {:>6.2} {:>6.1} {:>22} {:>8}",
            r.n,
            r.ratio,
            r.block_size,
            format!("{:.4} ± {:.4}", r.mean_ms, r.sd_ms),
            factor
        );
        if let Err(e) = writeln!(out, "{line}") {
            failed.get_or_insert(e);
        }
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    if let Some(path) = csv {
        let file = fs::File::create(path).map_err(CliError::Write)?;
        bench::write_csv(&rows, file)?;
    }
    Ok(rows)
}
