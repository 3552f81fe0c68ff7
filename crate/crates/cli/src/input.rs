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

//! Loading graphs and weight functions from disk.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use bbp_mcis_core::{LabelInterner, LabeledGraph, WeightFn};

use crate::error::{CliError, CliResult};
use crate::format::parse_graph;
use crate::molfile::parse_molfile;
use crate::weights::parse_weights;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

/// Reads a graph; `.mol` and `.sdf` files go through the molfile reader,
/// everything else through the text format.
pub fn load_graph(path: &Path, names: &mut LabelInterner) -> CliResult<LabeledGraph> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    let parsed = match ext.as_deref() {
        Some("mol" | "sdf") => parse_molfile(&text, names),
        _ => parse_graph(&text, names),
    };
    parsed.map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

/// Value of `--weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightArg {
    Uniform,
    LabelEq,
    File(PathBuf),
}

impl FromStr for WeightArg {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "uniform" => WeightArg::Uniform,
            "label-eq" => WeightArg::LabelEq,
            path => WeightArg::File(PathBuf::from(path)),
        })
    }
}

impl WeightArg {
    /// Builds the weight function. Table files must be resolved after the
    /// graphs so that both share `names`.
    pub fn resolve(&self, names: &mut LabelInterner) -> CliResult<WeightFn> {
        match self {
            WeightArg::Uniform => Ok(WeightFn::uniform()),
            WeightArg::LabelEq => Ok(WeightFn::label_equality()),
            WeightArg::File(path) => {
                let text = read(path)?;
                parse_weights(&text, names).map_err(|source| CliError::Parse { path: path.clone(), source })
            }
        }
    }
}
