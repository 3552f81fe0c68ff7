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

//! File formats, result records, benchmark harness and the command line
//! front end of `bbp-mcis-core`.

pub mod bench;
pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod input;
pub mod molfile;
pub mod record;
pub mod weights;

pub use error::{CliError, CliResult};
pub use format::{parse_graph, write_graph, ParseError};
pub use molfile::parse_molfile;
pub use record::ResultRecord;
