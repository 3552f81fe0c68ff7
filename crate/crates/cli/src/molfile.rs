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

//! Minimal MOL V2000 reader: header, counts line, atom block and bond block.
//!
//! Atoms become vertices labeled by element symbol, bonds become edges
//! labeled by the bond type digit (`1`, `2`, `3`, `4` for aromatic, ...).
//! Hydrogens are kept exactly as written. Properties (`M  ...`) and any
//! further SDF records are ignored.

use bbp_mcis_core::{GraphBuilder, LabelInterner, LabeledGraph};

use crate::format::ParseError;

fn column(line: &str, from: usize, to: usize) -> &str {
    line.get(from..to.min(line.len())).unwrap_or("").trim()
}

fn field(line: &str, from: usize, to: usize, what: &str, lineno: usize) -> Result<usize, ParseError> {
    let tok = column(line, from, to);
    tok.parse().map_err(|_| ParseError::new(lineno, format!("bad {what} `{tok}`")))
}

pub fn parse_molfile(text: &str, names: &mut LabelInterner) -> Result<LabeledGraph, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let counts = *lines.get(3).ok_or_else(|| ParseError::new(lines.len().max(1), "missing counts line"))?;
    if counts.contains("V3000") {
        return Err(ParseError::new(4, "V3000 molfiles are not supported"));
    }
    let atoms = field(counts, 0, 3, "atom count", 4)?;
    let bonds = field(counts, 3, 6, "bond count", 4)?;
    if lines.len() < 4 + atoms + bonds {
        return Err(ParseError::new(lines.len(), format!("expected {atoms} atom and {bonds} bond lines")));
    }

    let mut builder = GraphBuilder::with_labels(Vec::with_capacity(atoms));
    for (i, line) in lines[4..4 + atoms].iter().enumerate() {
        // Fixed layout puts the symbol in columns 32-34; fall back to the
        // fourth token for sloppily aligned files.
        let symbol = match column(line, 31, 34) {
            s if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphabetic() || c == '*') => s,
            _ => line.split_whitespace().nth(3).unwrap_or(""),
        };
        if symbol.is_empty() {
            return Err(ParseError::new(5 + i, "missing atom symbol"));
        }
        builder.add_vertex(names.intern(symbol));
    }
    for (i, line) in lines[4 + atoms..4 + atoms + bonds].iter().enumerate() {
        let lineno = 5 + atoms + i;
        let a = field(line, 0, 3, "atom index", lineno)?;
        let b = field(line, 3, 6, "atom index", lineno)?;
        let order = column(line, 6, 9);
        if !matches!(order, "1" | "2" | "3" | "4" | "5" | "6" | "7" | "8") {
            return Err(ParseError::new(lineno, format!("bad bond type `{order}`")));
        }
        if a == 0 || b == 0 || a > atoms || b > atoms {
            return Err(ParseError::new(lineno, format!("atom index out of range 1..={atoms}")));
        }
        builder.add_edge(a - 1, b - 1, names.intern(order)).map_err(|e| ParseError::new(lineno, e.to_string()))?;
    }
    Ok(builder.build())
}
