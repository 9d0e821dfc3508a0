//! Fuzzy measures (capacities) over criteria index sets, including the
//! λ-measure construction from criterion weights.
//!
//! A fuzzy measure assigns a value in `[0, 1]` to every subset of criteria,
//! with `τ(∅) = 0`, `τ(full) = 1`, and monotonicity under inclusion. The
//! λ-measure family additionally satisfies
//! `τ(A ∪ B) = τ(A) + τ(B) + λ·τ(A)·τ(B)` for disjoint `A`, `B`, which lets a
//! single interaction index λ express synergy (λ > 0) or redundancy (λ < 0)
//! between criteria. Storage is dense over all `2^k` subsets, which keeps
//! Choquet-integral bookkeeping trivial for the small `k` typical of
//! decision problems.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported criterion count; dense `2^k` storage is intentional and
/// only sensible for small problems.
pub const MAX_CRITERIA: usize = 24;

/// Tolerance on `|Σ weights − 1|` when accepting weight vectors.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Tolerance on the boundary conditions `τ(∅) = 0` and `τ(full) = 1`.
pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

/// Slack allowed before flagging a monotonicity violation.
pub const MONOTONICITY_SLACK: f64 = 1e-12;

/// Errors produced by measure construction and queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    /// More criteria than dense storage supports.
    #[error("at most {MAX_CRITERIA} criteria are supported, got {0}")]
    TooManyCriteria(usize),
    /// No criteria at all.
    #[error("at least one criterion weight is required")]
    EmptyWeights,
    /// λ below the admissible half-line.
    #[error("interaction index lambda must be finite and >= -1, got {0}")]
    InvalidLambda(f64),
    /// λ exactly −1 makes the construction base `1 + λ` degenerate.
    #[error("interaction index lambda = -1 is degenerate and not supported")]
    DegenerateLambda,
    /// A weight outside `[0, 1]`.
    #[error("weight {index} must lie in [0, 1], got {value}")]
    WeightOutOfRange { index: usize, value: f64 },
    /// Weights that do not sum to 1 within tolerance.
    #[error("weights must sum to 1 (within {WEIGHT_SUM_TOLERANCE:e}), got {0}")]
    WeightSumMismatch(f64),
    /// Weights that cannot be renormalized (non-positive total).
    #[error("weights cannot be renormalized: their sum {0} is not positive")]
    NonPositiveWeightSum(f64),
    /// A subset mentioning a criterion index outside `[0, k)`.
    #[error("subset index {index} is out of range for {k} criteria")]
    SubsetOutOfRange { index: usize, k: usize },
    /// Dense value table of the wrong length.
    #[error("a measure over {k} criteria needs {expected} values, got {found}")]
    WrongValueCount { k: usize, expected: usize, found: usize },
    /// A non-finite stored value.
    #[error("measure values must be finite, got {value} for subset mask {mask:#b}")]
    NonFiniteValue { mask: u32, value: f64 },
    /// Named-serialization round-trip problems.
    #[error("named measure table: {0}")]
    BadNamedTable(String),
}

/// A subset of criterion indices `{0, …, k−1}`, encoded as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CriterionSubset(u32);

impl CriterionSubset {
    /// The empty subset.
    pub const EMPTY: CriterionSubset = CriterionSubset(0);

    /// The full set over `k` criteria.
    pub fn full(k: usize) -> Result<Self, MeasureError> {
        if k > MAX_CRITERIA {
            return Err(MeasureError::TooManyCriteria(k));
        }
        Ok(CriterionSubset(((1u64 << k) - 1) as u32))
    }

    /// Builds a subset from explicit indices (duplicates are harmless).
    pub fn from_indices(indices: &[usize]) -> Result<Self, MeasureError> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= MAX_CRITERIA {
                return Err(MeasureError::SubsetOutOfRange {
                    index: i,
                    k: MAX_CRITERIA,
                });
            }
            bits |= 1 << i;
        }
        Ok(CriterionSubset(bits))
    }

    /// Whether index `i` is a member.
    pub fn contains(self, i: usize) -> bool {
        i < MAX_CRITERIA && self.0 & (1 << i) != 0
    }

    /// This subset with index `i` added.
    pub fn with(self, i: usize) -> Self {
        CriterionSubset(self.0 | (1 << i))
    }

    /// This subset with index `i` removed.
    pub fn without(self, i: usize) -> Self {
        CriterionSubset(self.0 & !(1 << i))
    }

    /// Member indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..MAX_CRITERIA).filter(|&i| self.contains(i)).collect()
    }

    /// Number of members.
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether this is the empty subset.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether every member of `self` is also in `other`.
    pub fn is_subset_of(self, other: CriterionSubset) -> bool {
        self.0 & !other.0 == 0
    }

    fn mask(self) -> u32 {
        self.0
    }
}

/// Parameters for the λ-measure construction: an interaction index and a
/// normalized criterion weight vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaParams {
    lambda: f64,
    weights: Vec<f64>,
}

impl LambdaParams {
    /// Validates `λ ≥ −1`, every weight in `[0, 1]`, and `Σ weights = 1`
    /// within [`WEIGHT_SUM_TOLERANCE`].
    pub fn new(lambda: f64, weights: Vec<f64>) -> Result<Self, MeasureError> {
        if !lambda.is_finite() || lambda < -1.0 {
            return Err(MeasureError::InvalidLambda(lambda));
        }
        check_weights(&weights)?;
        Ok(Self { lambda, weights })
    }

    /// The interaction index.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The weight vector.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

fn check_weights(weights: &[f64]) -> Result<(), MeasureError> {
    if weights.is_empty() {
        return Err(MeasureError::EmptyWeights);
    }
    if weights.len() > MAX_CRITERIA {
        return Err(MeasureError::TooManyCriteria(weights.len()));
    }
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(MeasureError::WeightOutOfRange { index, value });
        }
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(MeasureError::WeightSumMismatch(sum));
    }
    Ok(())
}

/// Scales non-negative weights so they sum to exactly 1. Intended for
/// explicit opt-in (for example a CLI `--renormalize` flag); the default
/// everywhere else is strict rejection, because silent renormalization masks
/// data errors.
pub fn renormalize_weights(weights: &[f64]) -> Result<Vec<f64>, MeasureError> {
    if weights.is_empty() {
        return Err(MeasureError::EmptyWeights);
    }
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(MeasureError::WeightOutOfRange { index, value });
        }
    }
    let sum: f64 = weights.iter().sum();
    if sum <= 0.0 {
        return Err(MeasureError::NonPositiveWeightSum(sum));
    }
    Ok(weights.iter().map(|w| w / sum).collect())
}

/// A reported defect found by [`FuzzyMeasure::validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum MeasureViolation {
    /// `τ(∅)` differs from 0 beyond tolerance.
    EmptySetNotZero { value: f64 },
    /// `τ(full)` differs from 1 beyond tolerance.
    FullSetNotOne { value: f64 },
    /// `τ` decreases along an inclusion `A ⊂ A ∪ {i}`.
    NonMonotone {
        subset: CriterionSubset,
        superset: CriterionSubset,
        subset_value: f64,
        superset_value: f64,
    },
}

/// A fuzzy measure over `k` criteria, stored densely: `values[mask]` is
/// `τ(subset-with-that-bitmask)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyMeasure {
    k: usize,
    values: Vec<f64>,
}

impl FuzzyMeasure {
    /// Builds the λ-measure: singleton densities
    /// `g_i = ((1+λ)^{w_i} − 1)/λ` (or `g_i = w_i` in the additive limit
    /// λ = 0), extended to arbitrary subsets by
    /// `τ(A) = (∏_{i∈A}(1 + λ·g_i) − 1)/λ`. Satisfies
    /// `τ(A∪B) = τ(A) + τ(B) + λ·τ(A)·τ(B)` on disjoint subsets and
    /// `τ(full) = 1` whenever the weights sum to 1.
    pub fn from_lambda(params: &LambdaParams) -> Result<Self, MeasureError> {
        let lambda = params.lambda();
        if lambda == -1.0 {
            return Err(MeasureError::DegenerateLambda);
        }
        if lambda == 0.0 {
            return Self::additive(params.weights());
        }
        let k = params.weights().len();
        let densities: Vec<f64> = params
            .weights()
            .iter()
            .map(|&w| ((1.0 + lambda).powf(w) - 1.0) / lambda)
            .collect();
        let size = 1usize << k;
        let mut values: Vec<f64> = (0..size)
            .map(|mask| {
                let product: f64 = (0..k)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| 1.0 + lambda * densities[i])
                    .product();
                (product - 1.0) / lambda
            })
            .collect();
        // The formula yields τ(full) = 1 up to rounding; pin it exactly so
        // Choquet exponents sum to exactly 1.
        values[size - 1] = 1.0;
        Ok(Self { k, values })
    }

    /// Builds the additive measure `τ(A) = Σ_{i∈A} w_i`.
    pub fn additive(weights: &[f64]) -> Result<Self, MeasureError> {
        check_weights(weights)?;
        let k = weights.len();
        let size = 1usize << k;
        let mut values: Vec<f64> = (0..size)
            .map(|mask| {
                (0..k)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| weights[i])
                    .sum()
            })
            .collect();
        values[size - 1] = 1.0;
        Ok(Self { k, values })
    }

    /// Wraps an explicit dense value table (index = subset bitmask). The
    /// table is checked for length and finiteness only; use
    /// [`FuzzyMeasure::validate`] for boundary and monotonicity checks.
    pub fn from_values(k: usize, values: Vec<f64>) -> Result<Self, MeasureError> {
        if k == 0 {
            return Err(MeasureError::EmptyWeights);
        }
        if k > MAX_CRITERIA {
            return Err(MeasureError::TooManyCriteria(k));
        }
        let expected = 1usize << k;
        if values.len() != expected {
            return Err(MeasureError::WrongValueCount {
                k,
                expected,
                found: values.len(),
            });
        }
        for (mask, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(MeasureError::NonFiniteValue {
                    mask: mask as u32,
                    value,
                });
            }
        }
        Ok(Self { k, values })
    }

    /// Number of criteria.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `τ` of a subset.
    pub fn value(&self, subset: CriterionSubset) -> Result<f64, MeasureError> {
        let full = CriterionSubset::full(self.k)?;
        if !subset.is_subset_of(full) {
            let index = subset
                .indices()
                .into_iter()
                .find(|&i| i >= self.k)
                .unwrap_or(self.k);
            return Err(MeasureError::SubsetOutOfRange { index, k: self.k });
        }
        Ok(self.values[subset.mask() as usize])
    }

    /// Checks the boundary conditions and monotonicity along every
    /// single-element inclusion (which implies monotonicity along all
    /// inclusions). Violations are data, not errors.
    pub fn validate(&self) -> Vec<MeasureViolation> {
        let mut violations = Vec::new();
        let size = 1usize << self.k;
        if self.values[0].abs() > BOUNDARY_TOLERANCE {
            violations.push(MeasureViolation::EmptySetNotZero {
                value: self.values[0],
            });
        }
        if (self.values[size - 1] - 1.0).abs() > BOUNDARY_TOLERANCE {
            violations.push(MeasureViolation::FullSetNotOne {
                value: self.values[size - 1],
            });
        }
        for mask in 0..size {
            for i in 0..self.k {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let bigger = mask | (1 << i);
                if self.values[mask] > self.values[bigger] + MONOTONICITY_SLACK {
                    violations.push(MeasureViolation::NonMonotone {
                        subset: CriterionSubset(mask as u32),
                        superset: CriterionSubset(bigger as u32),
                        subset_value: self.values[mask],
                        superset_value: self.values[bigger],
                    });
                }
            }
        }
        violations
    }

    /// Renders the measure as an ordered `subset descriptor → τ` table. The
    /// descriptor is the comma-joined list of criterion names (in index
    /// order); the empty subset is rendered as `∅`. Subsets are emitted by
    /// ascending cardinality, then ascending bitmask, which matches how such
    /// tables are usually published.
    pub fn named_values(&self, names: &[String]) -> Result<IndexMap<String, f64>, MeasureError> {
        if names.len() != self.k {
            return Err(MeasureError::BadNamedTable(format!(
                "expected {} criterion names, got {}",
                self.k,
                names.len()
            )));
        }
        let size = 1usize << self.k;
        let mut masks: Vec<usize> = (0..size).collect();
        masks.sort_by_key(|&mask| (mask.count_ones(), mask));
        let mut table = IndexMap::with_capacity(size);
        for mask in masks {
            table.insert(subset_key(mask, names), self.values[mask]);
        }
        Ok(table)
    }

    /// Rebuilds a measure from a named table produced by
    /// [`FuzzyMeasure::named_values`] with the same criterion names.
    pub fn from_named_values(
        names: &[String],
        table: &IndexMap<String, f64>,
    ) -> Result<Self, MeasureError> {
        let k = names.len();
        if k == 0 {
            return Err(MeasureError::EmptyWeights);
        }
        if k > MAX_CRITERIA {
            return Err(MeasureError::TooManyCriteria(k));
        }
        let size = 1usize << k;
        if table.len() != size {
            return Err(MeasureError::BadNamedTable(format!(
                "expected {size} subset entries, got {}",
                table.len()
            )));
        }
        let mut values = vec![f64::NAN; size];
        for (key, &value) in table {
            let mask = parse_subset_key(key, names)?;
            if !values[mask].is_nan() {
                return Err(MeasureError::BadNamedTable(format!(
                    "subset `{key}` listed more than once"
                )));
            }
            values[mask] = value;
        }
        Self::from_values(k, values)
    }
}

fn subset_key(mask: usize, names: &[String]) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    let members: Vec<&str> = names
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, name)| name.as_str())
        .collect();
    members.join(",")
}

fn parse_subset_key(key: &str, names: &[String]) -> Result<usize, MeasureError> {
    if key == "∅" || key.is_empty() {
        return Ok(0);
    }
    let mut mask = 0usize;
    for part in key.split(',') {
        let part = part.trim();
        let index = names
            .iter()
            .position(|name| name == part)
            .ok_or_else(|| MeasureError::BadNamedTable(format!("unknown criterion `{part}`")))?;
        mask |= 1 << index;
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const REFERENCE_WEIGHTS: [f64; 4] = [0.326, 0.258, 0.232, 0.184];

    fn reference_measure() -> FuzzyMeasure {
        let params = LambdaParams::new(0.5, REFERENCE_WEIGHTS.to_vec()).unwrap();
        FuzzyMeasure::from_lambda(&params).unwrap()
    }

    fn subset(indices: &[usize]) -> CriterionSubset {
        CriterionSubset::from_indices(indices).unwrap()
    }

    // ---- λ-measure construction -------------------------------------------

    #[test]
    fn lambda_measure_reproduces_reference_table() {
        let m = reference_measure();
        let expected: [(&[usize], f64); 16] = [
            (&[], 0.0),
            (&[0], 0.282631),
            (&[1], 0.220555),
            (&[2], 0.197269),
            (&[3], 0.154918),
            (&[0, 1], 0.534354),
            (&[0, 2], 0.507777),
            (&[0, 3], 0.459442),
            (&[1, 2], 0.439578),
            (&[1, 3], 0.392557),
            (&[2, 3], 0.367467),
            (&[0, 1, 2], 0.784329),
            (&[0, 1, 3], 0.730663),
            (&[0, 2, 3], 0.702027),
            (&[1, 2, 3], 0.628546),
            (&[0, 1, 2, 3], 1.0),
        ];
        for (indices, tau) in expected {
            assert_abs_diff_eq!(m.value(subset(indices)).unwrap(), tau, epsilon = 1e-5);
        }
    }

    #[test]
    fn lambda_zero_is_additive() {
        let params = LambdaParams::new(0.0, vec![0.5, 0.3, 0.2]).unwrap();
        let m = FuzzyMeasure::from_lambda(&params).unwrap();
        assert_abs_diff_eq!(m.value(subset(&[0, 2])).unwrap(), 0.7, epsilon = 1e-12);
        assert_abs_diff_eq!(m.value(subset(&[1])).unwrap(), 0.3, epsilon = 1e-12);
    }

    #[test]
    fn lambda_identity_holds_on_disjoint_subsets() {
        let m = reference_measure();
        let lambda = 0.5;
        let a = subset(&[0, 2]);
        let b = subset(&[1, 3]);
        let union = subset(&[0, 1, 2, 3]);
        let (ta, tb, tu) = (
            m.value(a).unwrap(),
            m.value(b).unwrap(),
            m.value(union).unwrap(),
        );
        assert_abs_diff_eq!(tu, ta + tb + lambda * ta * tb, epsilon = 1e-10);
    }

    #[test]
    fn degenerate_and_invalid_lambda_rejected() {
        assert_eq!(
            FuzzyMeasure::from_lambda(&LambdaParams::new(-1.0, vec![0.5, 0.5]).unwrap()),
            Err(MeasureError::DegenerateLambda)
        );
        assert!(matches!(
            LambdaParams::new(-1.5, vec![0.5, 0.5]),
            Err(MeasureError::InvalidLambda(_))
        ));
    }

    #[test]
    fn weight_constraints_enforced() {
        assert!(matches!(
            LambdaParams::new(0.5, vec![0.6, 0.6]),
            Err(MeasureError::WeightSumMismatch(_))
        ));
        assert!(matches!(
            LambdaParams::new(0.5, vec![1.2, -0.2]),
            Err(MeasureError::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            LambdaParams::new(0.5, vec![]),
            Err(MeasureError::EmptyWeights)
        ));
        assert!(matches!(
            LambdaParams::new(0.5, vec![1.0 / 30.0; 30]),
            Err(MeasureError::TooManyCriteria(30))
        ));
    }

    #[test]
    fn renormalize_scales_to_unit_sum() {
        let scaled = renormalize_weights(&[2.0, 1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(scaled.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(scaled[0], 0.5, epsilon = 1e-15);
        assert!(matches!(
            renormalize_weights(&[0.0, 0.0]),
            Err(MeasureError::NonPositiveWeightSum(_))
        ));
    }

    // ---- queries -----------------------------------------------------------

    #[test]
    fn value_lookup_and_range_checks() {
        let m = reference_measure();
        assert_eq!(m.value(CriterionSubset::EMPTY).unwrap(), 0.0);
        assert_abs_diff_eq!(m.value(subset(&[0, 2])).unwrap(), 0.507777, epsilon = 1e-5);
        assert!(matches!(
            m.value(subset(&[4])),
            Err(MeasureError::SubsetOutOfRange { index: 4, k: 4 })
        ));
    }

    #[test]
    fn additive_singletons_are_weights() {
        let m = FuzzyMeasure::additive(&[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(m.value(subset(&[0])).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(m.value(subset(&[0, 1])).unwrap(), 1.0, epsilon = 1e-12);
        let single = FuzzyMeasure::additive(&[1.0]).unwrap();
        assert_abs_diff_eq!(single.value(subset(&[0])).unwrap(), 1.0, epsilon = 1e-12);
        // Sum of the first two reference weights.
        let m4 = FuzzyMeasure::additive(&REFERENCE_WEIGHTS).unwrap();
        assert_abs_diff_eq!(m4.value(subset(&[0, 1])).unwrap(), 0.584, epsilon = 1e-12);
    }

    // ---- validation ----------------------------------------------------------

    #[test]
    fn reference_measure_validates_clean() {
        assert!(reference_measure().validate().is_empty());
    }

    #[test]
    fn violations_are_reported_with_subsets() {
        // τ({0}) = 0.6 > τ({0,1}) = 0.5 plus a bad upper boundary.
        let m = FuzzyMeasure::from_values(2, vec![0.0, 0.6, 0.2, 0.5]).unwrap();
        let violations = m.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, MeasureViolation::FullSetNotOne { .. })));
        assert!(violations.iter().any(|v| matches!(
            v,
            MeasureViolation::NonMonotone { subset, superset, .. }
                if subset.indices() == vec![0] && superset.indices() == vec![0, 1]
        )));
    }

    #[test]
    fn boundary_violation_detected() {
        let m = FuzzyMeasure::from_values(1, vec![0.0, 0.9]).unwrap();
        let violations = m.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            violations[0],
            MeasureViolation::FullSetNotOne { value } if (value - 0.9).abs() < 1e-12
        ));
    }

    // ---- named serialization ---------------------------------------------------

    #[test]
    fn named_table_round_trips() {
        let names: Vec<String> = ["T1", "T2", "T3", "T4"].iter().map(|s| s.to_string()).collect();
        let m = reference_measure();
        let table = m.named_values(&names).unwrap();
        assert_eq!(table.len(), 16);
        assert_eq!(table.get_index(0).unwrap().0, "∅");
        assert!(table.contains_key("T1,T3"));
        let rebuilt = FuzzyMeasure::from_named_values(&names, &table).unwrap();
        assert_eq!(rebuilt, m);
    }

    #[test]
    fn named_table_rejects_unknown_names() {
        let names: Vec<String> = ["A", "B"].iter().map(|s| s.to_string()).collect();
        let mut table = FuzzyMeasure::additive(&[0.5, 0.5])
            .unwrap()
            .named_values(&names)
            .unwrap();
        let value = table.shift_remove("A,B").unwrap();
        table.insert("A,C".to_string(), value);
        assert!(matches!(
            FuzzyMeasure::from_named_values(&names, &table),
            Err(MeasureError::BadNamedTable(_))
        ));
    }
}
