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

use alloc::vec;
use alloc::vec::Vec;

use super::MappingType;

/// Entry of [`TableD`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Undefined,
    /// Weight of the split piece that maps this edge pair with this type.
    Weight(f64),
    /// The pair belongs to a maximal isomorphism but to none of its pieces.
    NegInf,
}

/// The table `D(e, f, t)` over edges of G, edges of H and mapping types.
#[derive(Debug, Clone)]
pub struct TableD {
    cols: usize,
    cells: Vec<Cell>,
}

impl TableD {
    pub fn new(edges_g: usize, edges_h: usize) -> Self {
        TableD { cols: edges_h, cells: vec![Cell::Undefined; edges_g * edges_h * 4] }
    }

    fn at(&self, e: usize, f: usize, t: MappingType) -> usize {
        (e * self.cols + f) * 4 + t.index()
    }

    pub fn get(&self, e: usize, f: usize, t: MappingType) -> Cell {
        self.cells[self.at(e, f, t)]
    }

    /// Writes a cell; returns `true` if it was already defined.
    pub fn set(&mut self, e: usize, f: usize, t: MappingType, c: Cell) -> bool {
        let i = self.at(e, f, t);
        let was = self.cells[i] != Cell::Undefined;
        self.cells[i] = c;
        was
    }

    pub fn defined(&self) -> usize {
        self.cells.iter().filter(|c| **c != Cell::Undefined).count()
    }

    /// Largest weight entry, `None` if no cell holds a weight.
    pub fn max_weight(&self) -> Option<f64> {
        self.cells
            .iter()
            .filter_map(|c| match c {
                Cell::Weight(w) => Some(*w),
                _ => None,
            })
            .reduce(f64::max)
    }
}
