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

//! Plain text graph format.
//!
//! ```text
//! # comment
//! g <n> <m>
//! v <id> <label>
//! e <u> <v> <label>
//! ```
//!
//! The `g` line comes first. Vertex ids are `0..n`, each declared exactly
//! once; vertex and edge lines may appear in any order after the header.

use std::fmt::Write as _;

use bbp_mcis_core::{GraphBuilder, Label, LabelInterner, LabeledGraph};

/// First problem found in a text input, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError { line, msg: msg.into() }
    }
}

fn number(tok: Option<&str>, what: &str, line: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| ParseError::new(line, format!("bad {what} `{tok}`")))
}

fn label(tok: Option<&str>, line: usize) -> Result<&str, ParseError> {
    tok.ok_or_else(|| ParseError::new(line, "missing label"))
}

/// Parses one graph. Labels are interned in `names`, which must be shared by
/// every graph (and weight table) taking part in a comparison.
pub fn parse_graph(text: &str, names: &mut LabelInterner) -> Result<LabeledGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut labels: Vec<Option<Label>> = Vec::new();
    let mut edges: Vec<(usize, usize, Label, usize)> = Vec::new();
    let mut last = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kind = toks.next().unwrap_or_default();
        match (kind, header) {
            ("g", None) => {
                let n = number(toks.next(), "vertex count", line)?;
                let m = number(toks.next(), "edge count", line)?;
                header = Some((n, m));
                labels = vec![None; n];
            }
            ("g", Some(_)) => return Err(ParseError::new(line, "second `g` line")),
            (_, None) => return Err(ParseError::new(line, "expected `g <n> <m>` before any other line")),
            ("v", Some((n, _))) => {
                let id = number(toks.next(), "vertex id", line)?;
                if id >= n {
                    return Err(ParseError::new(line, format!("vertex id {id} out of range 0..{n}")));
                }
                if labels[id].is_some() {
                    return Err(ParseError::new(line, format!("vertex {id} declared twice")));
                }
                labels[id] = Some(names.intern(label(toks.next(), line)?));
            }
            ("e", Some((n, _))) => {
                let u = number(toks.next(), "endpoint", line)?;
                let v = number(toks.next(), "endpoint", line)?;
                for x in [u, v] {
                    if x >= n {
                        return Err(ParseError::new(line, format!("vertex id {x} out of range 0..{n}")));
                    }
                }
                edges.push((u, v, names.intern(label(toks.next(), line)?), line));
            }
            (other, Some(_)) => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(ParseError::new(line, format!("unexpected token `{extra}`")));
        }
    }

    let (n, m) = header.ok_or_else(|| ParseError::new(last.max(1), "missing `g <n> <m>` line"))?;
    if let Some(v) = labels.iter().position(Option::is_none) {
        return Err(ParseError::new(last, format!("expected {n} vertex lines, vertex {v} is missing")));
    }
    if edges.len() != m {
        return Err(ParseError::new(last, format!("expected {m} edge lines, found {}", edges.len())));
    }
    let mut builder = GraphBuilder::with_labels(labels.into_iter().flatten().collect());
    for (u, v, l, line) in edges {
        builder.add_edge(u, v, l).map_err(|e| ParseError::new(line, e.to_string()))?;
    }
    Ok(builder.build())
}

/// Writes `g` in the text format. Labels without a name in `names` are
/// written as their numeric token.
pub fn write_graph(g: &LabeledGraph, names: &LabelInterner) -> String {
    let name = |l: Label| names.name(l).map_or_else(|| l.0.to_string(), str::to_owned);
    let mut out = String::new();
    let _ = writeln!(out, "g {} {}", g.vertex_count(), g.edge_count());
    for (v, &l) in g.vertex_labels().iter().enumerate() {
        let _ = writeln!(out, "v {v} {}", name(l));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "e {u} {v} {}", name(g.edge_label(e)));
    }
    out
}

/// Interner whose label `i` is named `i`, for graphs built with numeric
/// labels (such as generator output).
pub fn numeric_names(count: u32) -> LabelInterner {
    let mut names = LabelInterner::new();
    for i in 0..count {
        names.intern(&i.to_string());
    }
    names
}
