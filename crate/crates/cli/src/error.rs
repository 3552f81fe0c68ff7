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

use std::io;
use std::path::PathBuf;

use crate::format::ParseError;

/// Everything a command can fail with. Each variant maps to one exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("{context}: {source}")]
    Rejected { context: String, source: bbp_mcis_core::Error },
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    /// 0 success, 1 mismatch, 2 input rejected by the solver (not
    /// outerplanar, not biconnected for 2-MCIS enumeration), 64 usage,
    /// 65 malformed input, 66 unreadable input, 74 output failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Rejected { .. } => 2,
            CliError::Usage(_) => 64,
            CliError::Parse { .. } => 65,
            CliError::Read { .. } => 66,
            CliError::Write(_) => 74,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
