//! Disc intuitionistic fuzzy sets: element-wise collections of D-IFVs with
//! the pointwise subset, equality, and complement relations.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::difv::Difv;

/// Errors produced by set-level relations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DifsError {
    /// The same element identifier used twice during construction.
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    /// Subset/equality queried between sets over different element domains.
    #[error("mismatched element domains: `{0}` is present in only one set")]
    MismatchedDomains(String),
}

/// A disc intuitionistic fuzzy set: a mapping from element identifiers to
/// D-IFVs. Order of insertion is preserved for reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Difs {
    elements: IndexMap<String, Difv>,
}

impl Difs {
    /// Builds a set from `(element, value)` pairs, rejecting duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, Difv)>) -> Result<Self, DifsError> {
        let mut elements = IndexMap::new();
        for (id, value) in pairs {
            if elements.insert(id.clone(), value).is_some() {
                return Err(DifsError::DuplicateElement(id));
            }
        }
        Ok(Self { elements })
    }

    /// The value assigned to `element`, if any.
    pub fn get(&self, element: &str) -> Option<Difv> {
        self.elements.get(element).copied()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Whether the set has no elements.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Iterates `(element, value)` pairs in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Difv)> {
        self.elements.iter().map(|(id, value)| (id.as_str(), *value))
    }

    /// Ensures both sets cover exactly the same elements.
    fn check_same_domain(&self, other: &Difs) -> Result<(), DifsError> {
        for id in self.elements.keys() {
            if !other.elements.contains_key(id) {
                return Err(DifsError::MismatchedDomains(id.clone()));
            }
        }
        for id in other.elements.keys() {
            if !self.elements.contains_key(id) {
                return Err(DifsError::MismatchedDomains(id.clone()));
            }
        }
        Ok(())
    }

    /// Pointwise subset: for every element, `μ_a ≤ μ_b`, `ν_a ≥ ν_b`, and
    /// `r_a ≤ r_b`. Errors when the element domains differ.
    pub fn is_subset_of(&self, other: &Difs) -> Result<bool, DifsError> {
        self.check_same_domain(other)?;
        Ok(self.elements.iter().all(|(id, a)| {
            let b = other.elements[id];
            a.mu() <= b.mu() && a.nu() >= b.nu() && a.r() <= b.r()
        }))
    }

    /// Set equality as mutual subset inclusion.
    pub fn set_equal(&self, other: &Difs) -> Result<bool, DifsError> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Pointwise complement: swaps `μ`/`ν` per element, keeps radii.
    pub fn complement(&self) -> Difs {
        Difs {
            elements: self
                .elements
                .iter()
                .map(|(id, value)| (id.clone(), value.complement()))
                .collect(),
        }
    }
}
