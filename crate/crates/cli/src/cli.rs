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

//! Argument parsing and dispatch for the `bbp-mcis` binary.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use bbp_mcis_core::generator::GenParams;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::bench::BenchConfig;
use crate::commands::{self, GenArgs};
use crate::error::{CliError, CliResult};
use crate::input::WeightArg;

#[derive(Debug, Parser)]
#[command(name = "bbp-mcis", version, about = "Maximum common BBP subgraphs of outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two graphs.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// `uniform`, `label-eq` or a weight table file.
        #[arg(long, default_value = "label-eq")]
        weights: WeightArg,
        /// Both inputs must be blocks; emit every maximum common
        /// biconnected subgraph instead of the BBP solution.
        #[arg(long)]
        enumerate_2mcis: bool,
        /// One JSON record per line.
        #[arg(long)]
        json: bool,
    },
    /// Compare every pair listed in a two-column TSV file.
    Batch {
        pairs: PathBuf,
        #[arg(long, default_value = "label-eq")]
        weights: WeightArg,
        #[arg(long)]
        json: bool,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Write random connected outerplanar graphs.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.24)]
        ratio: f64,
        #[arg(long, default_value_t = 8.0)]
        block_size: f64,
        #[arg(long, default_value_t = 1)]
        labels: u32,
        #[arg(long, default_value_t = 1)]
        edge_labels: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the solver on generated pairs, one row per configuration.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80,160")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1.24")]
        ratio: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "8")]
        block_size: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        labels: u32,
        #[arg(long, default_value = "uniform")]
        weights: WeightArg,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        /// Split the reps into this many passes over all configurations.
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare the solver with brute force (up to 10 vertices per graph)
    /// and the independent checker.
    Check {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "label-eq")]
        weights: WeightArg,
    },
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Compare { a, b, weights, enumerate_2mcis, json } => {
            commands::compare(&a, &b, &weights, enumerate_2mcis, json, out)
        }
        Command::Batch { pairs, weights, json, jobs } => commands::batch(&pairs, &weights, json, jobs, out),
        Command::Gen { n, ratio, block_size, labels, edge_labels, seed, count, out: dir } => {
            let mut params = GenParams::new(n, ratio, block_size, labels);
            params.edge_labels = edge_labels;
            commands::generate(&GenArgs { params, seed, count, out_dir: dir }, out)
        }
        Command::Bench { sizes, ratio, block_size, labels, weights, reps, rounds, seed, csv } => {
            let weights = match weights {
                WeightArg::File(_) => return Err(CliError::Usage("bench takes `uniform` or `label-eq`".into())),
                preset => preset.resolve(&mut Default::default())?,
            };
            let cfg =
                BenchConfig { sizes, ratios: ratio, block_sizes: block_size, labels, reps, rounds, seed, weights };
            commands::run_bench(&cfg, csv.as_deref(), out).map(drop)
        }
        Command::Check { a, b, weights } => commands::check(&a, &b, &weights, out),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run(std::env::args_os(), &mut out);
    if out.flush().is_err() && code == 0 {
        return 74;
    }
    code
}
