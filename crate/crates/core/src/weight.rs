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

use hashbrown::HashMap;

use crate::{Error, Label, Result};

/// Score of mapping one vertex (edge) onto another.
///
/// `Forbidden` stands for a pair that no admissible isomorphism may map. It
/// is never folded into arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Score {
    Value(f64),
    Forbidden,
}

impl Score {
    /// Non-negative finite score.
    pub fn try_value(x: f64) -> Result<Score> {
        if x.is_finite() && x >= 0.0 {
            Ok(Score::Value(x))
        } else {
            Err(Error::InvalidArgument("scores must be finite and non-negative"))
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Score::Value(x) => Some(x),
            Score::Forbidden => None,
        }
    }

    pub fn is_forbidden(self) -> bool {
        matches!(self, Score::Forbidden)
    }
}

/// Scoring rule for one kind of pair (vertices or edges).
#[derive(Debug, Clone, PartialEq)]
pub enum ScoreRule {
    /// Every pair scores the constant.
    Constant(f64),
    /// Equal labels score the constant, different labels are forbidden.
    Equality(f64),
    /// Explicit table keyed by `(label in G, label in H)`.
    Table { entries: HashMap<(Label, Label), Score>, default: Score },
}

impl ScoreRule {
    pub fn score(&self, a: Label, b: Label) -> Score {
        match self {
            ScoreRule::Constant(x) => Score::Value(*x),
            ScoreRule::Equality(x) => {
                if a == b {
                    Score::Value(*x)
                } else {
                    Score::Forbidden
                }
            }
            ScoreRule::Table { entries, default } => *entries.get(&(a, b)).unwrap_or(default),
        }
    }

    fn transpose(&self) -> ScoreRule {
        match self {
            ScoreRule::Table { entries, default } => ScoreRule::Table {
                entries: entries.iter().map(|(&(a, b), &s)| ((b, a), s)).collect(),
                default: *default,
            },
            other => other.clone(),
        }
    }
}

/// Weight function on vertex pairs and edge pairs, looked up by label.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFn {
    pub vertex: ScoreRule,
    pub edge: ScoreRule,
}

impl WeightFn {
    /// Every vertex and edge pair scores 1.
    pub fn uniform() -> Self {
        WeightFn { vertex: ScoreRule::Constant(1.0), edge: ScoreRule::Constant(1.0) }
    }

    /// Pairs with equal labels score 1, all others are forbidden.
    pub fn label_equality() -> Self {
        WeightFn { vertex: ScoreRule::Equality(1.0), edge: ScoreRule::Equality(1.0) }
    }

    pub fn vertex_score(&self, a: Label, b: Label) -> Score {
        self.vertex.score(a, b)
    }

    pub fn edge_score(&self, a: Label, b: Label) -> Score {
        self.edge.score(a, b)
    }

    /// The same function with the roles of the two graphs exchanged.
    pub fn transpose(&self) -> WeightFn {
        WeightFn { vertex: self.vertex.transpose(), edge: self.edge.transpose() }
    }
}
