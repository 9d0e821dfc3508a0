//! Linguistic rating scales: ordered term-code → D-IFV mappings.
//!
//! Group assessments arrive as linguistic codes (`EH`, `VH`, …, `EL`); a
//! [`LinguisticScale`] resolves each code to its [`Difv`], complementing the
//! value when the rated criterion is a cost.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::difv::Difv;

/// Errors produced by scale construction and lookup.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScaleError {
    /// A term code appearing more than once in the definition.
    #[error("duplicate linguistic term `{0}`")]
    DuplicateTerm(String),
    /// A scale with no terms at all.
    #[error("a linguistic scale must define at least one term")]
    Empty,
    /// Lookup of a code the scale does not define.
    #[error("unknown linguistic term `{0}`")]
    UnknownTerm(String),
}

/// Ordered mapping from linguistic term codes to D-IFVs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IndexMap<String, Difv>", into = "IndexMap<String, Difv>")]
pub struct LinguisticScale {
    terms: IndexMap<String, Difv>,
}

impl LinguisticScale {
    /// The standard nine-term scale from "Extremely High" down to
    /// "Extremely Low": `⟨(0.9,0.1);0.9⟩`, `⟨(0.8,0.2);0.8⟩`, …,
    /// `⟨(0.1,0.9);0.1⟩`.
    pub fn standard() -> Self {
        let step = |level: f64| {
            Difv::new(level, 1.0 - level, level).expect("standard scale entries are valid")
        };
        let codes = ["EH", "VH", "H", "MH", "M", "ML", "L", "VL", "EL"];
        let terms = codes
            .iter()
            .enumerate()
            .map(|(i, code)| (code.to_string(), step(0.9 - 0.1 * i as f64)))
            .collect();
        Self { terms }
    }

    /// Builds a scale from `(code, value)` pairs, rejecting duplicate codes
    /// and empty scales. Order is preserved.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, Difv)>) -> Result<Self, ScaleError> {
        let mut terms = IndexMap::new();
        for (code, value) in pairs {
            if terms.insert(code.clone(), value).is_some() {
                return Err(ScaleError::DuplicateTerm(code));
            }
        }
        if terms.is_empty() {
            return Err(ScaleError::Empty);
        }
        Ok(Self { terms })
    }

    /// Returns a copy of this scale with the given terms replaced or added.
    pub fn with_overrides(
        &self,
        overrides: impl IntoIterator<Item = (String, Difv)>,
    ) -> Self {
        let mut terms = self.terms.clone();
        for (code, value) in overrides {
            terms.insert(code, value);
        }
        Self { terms }
    }

    /// The value mapped to `code`.
    pub fn lookup(&self, code: &str) -> Result<Difv, ScaleError> {
        self.terms
            .get(code)
            .copied()
            .ok_or_else(|| ScaleError::UnknownTerm(code.to_string()))
    }

    /// Resolves a code for a rated cell: the mapped value, complemented when
    /// the criterion is a cost.
    pub fn resolve(&self, code: &str, is_cost: bool) -> Result<Difv, ScaleError> {
        let value = self.lookup(code)?;
        Ok(if is_cost { value.complement() } else { value })
    }

    /// Iterates terms in definition order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, Difv)> {
        self.terms.iter().map(|(code, value)| (code.as_str(), *value))
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the scale has no terms (never true for constructed scales).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Default for LinguisticScale {
    fn default() -> Self {
        Self::standard()
    }
}

impl TryFrom<IndexMap<String, Difv>> for LinguisticScale {
    type Error = ScaleError;

    fn try_from(terms: IndexMap<String, Difv>) -> Result<Self, Self::Error> {
        if terms.is_empty() {
            return Err(ScaleError::Empty);
        }
        Ok(Self { terms })
    }
}

impl From<LinguisticScale> for IndexMap<String, Difv> {
    fn from(scale: LinguisticScale) -> Self {
        scale.terms
    }
}
