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

//! Weight selection: the two presets or a score table file.
//!
//! ```text
//! # kind  label-in-A  label-in-B  score
//! v C C 1
//! v C N 0.5
//! e 1 1 1
//! e 1 2 x
//! ```
//!
//! `x` marks a forbidden pair. Pairs that are not listed are forbidden.
//! Entries are directed: `v C N` does not cover `v N C`.

use std::collections::hash_map::{Entry, HashMap};

use bbp_mcis_core::{Label, LabelInterner, Score, ScoreRule, WeightFn};

use crate::format::ParseError;

pub fn parse_weights(text: &str, names: &mut LabelInterner) -> Result<WeightFn, ParseError> {
    let mut vertex: HashMap<(Label, Label), Score> = HashMap::new();
    let mut edge = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [kind, a, b, score] = toks[..] else {
            return Err(ParseError::new(line, "expected `<v|e> <label> <label> <score|x>`"));
        };
        let score = match score {
            "x" => Score::Forbidden,
            s => s.parse::<f64>().ok().and_then(|x| Score::try_value(x).ok()).ok_or_else(|| {
                ParseError::new(line, format!("bad score `{s}`, expected a non-negative number or `x`"))
            })?,
        };
        let table = match kind {
            "v" => &mut vertex,
            "e" => &mut edge,
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        };
        match table.entry((names.intern(a), names.intern(b))) {
            Entry::Occupied(_) => return Err(ParseError::new(line, format!("pair {a} {b} listed twice"))),
            Entry::Vacant(slot) => {
                slot.insert(score);
            }
        }
    }
    let rule =
        |entries: HashMap<_, _>| ScoreRule::Table { entries: entries.into_iter().collect(), default: Score::Forbidden };
    Ok(WeightFn { vertex: rule(vertex), edge: rule(edge) })
}
