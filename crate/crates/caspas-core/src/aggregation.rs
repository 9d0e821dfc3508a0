//! Aggregation operators over collections of disc intuitionistic fuzzy
//! values: weighted averaging/geometric operators with explicit weight
//! vectors, and their Choquet-integral counterparts driven by a fuzzy
//! measure.
//!
//! The Choquet operators generalize the weighted ones: they sort the inputs
//! (ascending by the score-based order), derive one exponent per position
//! from measure differences of "survivor" sets, and then apply the same
//! closed forms the weighted operators use. When the measure is additive the
//! exponents collapse to the underlying weights and the Choquet operators
//! coincide with the weighted ones.

use crate::difv::{Difv, Family, ScoreParams, MAX_RADIUS};
use crate::measure::{CriterionSubset, FuzzyMeasure, MeasureError, WEIGHT_SUM_TOLERANCE};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced by aggregation operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AggregationError {
    /// No values to aggregate.
    #[error("cannot aggregate an empty collection of values")]
    EmptyInput,
    /// Weight vector length differs from the number of values.
    #[error("expected {expected} weights, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    /// A weight outside `[0, 1]`.
    #[error("weight {index} must lie in [0, 1], got {value}")]
    WeightOutOfRange { index: usize, value: f64 },
    /// Weights that do not sum to 1 within tolerance.
    #[error("weights must sum to 1 (within {WEIGHT_SUM_TOLERANCE:e}), got {0}")]
    WeightSumMismatch(f64),
    /// Measure arity differs from the number of values.
    #[error("measure is over {measure_k} criteria but {values} values were given")]
    MeasureArityMismatch { measure_k: usize, values: usize },
    /// Propagated measure defect.
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

/// A validated convex weight vector: entries in `[0, 1]` summing to 1 within
/// [`WEIGHT_SUM_TOLERANCE`]. Weights are used exactly as given; no silent
/// renormalization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validates and wraps a weight vector.
    pub fn new(weights: Vec<f64>) -> Result<Self, AggregationError> {
        if weights.is_empty() {
            return Err(AggregationError::EmptyInput);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(AggregationError::WeightOutOfRange { index, value });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(AggregationError::WeightSumMismatch(sum));
        }
        Ok(Self(weights))
    }

    /// Uniform weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self, AggregationError> {
        if n == 0 {
            return Err(AggregationError::EmptyInput);
        }
        Ok(Self(vec![1.0 / n as f64; n]))
    }

    /// The underlying slice.
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Number of weights.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false for a constructed vector (kept for API symmetry).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = AggregationError;
    fn try_from(weights: Vec<f64>) -> Result<Self, Self::Error> {
        WeightVector::new(weights)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Vec<f64> {
        w.0
    }
}

fn check_lengths(values: &[Difv], weights: usize) -> Result<(), AggregationError> {
    if values.is_empty() {
        return Err(AggregationError::EmptyInput);
    }
    if values.len() != weights {
        return Err(AggregationError::LengthMismatch {
            expected: values.len(),
            found: weights,
        });
    }
    Ok(())
}

/// Core of the averaging operator: each value contributes
/// `(1−μ_k)^{w_k}` to the membership complement product and `ν_k^{w_k}` to
/// the non-membership product. `0^0` factors (zero weight on a zero base)
/// drop out, matching the convention that zero-weight inputs are ignored.
fn weighted_average(values: &[Difv], weights: &[f64], family: Family) -> Difv {
    let mut mu_complement = 1.0f64;
    let mut nu_product = 1.0f64;
    for (v, &w) in values.iter().zip(weights) {
        mu_complement *= (1.0 - v.mu()).powf(w);
        nu_product *= v.nu().powf(w);
    }
    let r = match family {
        Family::Q => values
            .iter()
            .zip(weights)
            .map(|(v, &w)| (v.r() / MAX_RADIUS).powf(w))
            .product::<f64>()
            * MAX_RADIUS,
        Family::P => {
            MAX_RADIUS
                - values
                    .iter()
                    .zip(weights)
                    .map(|(v, &w)| (1.0 - v.r() / MAX_RADIUS).powf(w))
                    .product::<f64>()
                    * MAX_RADIUS
        }
    };
    Difv::from_closed(1.0 - mu_complement, nu_product, r)
}

/// Core of the geometric operator: dual of [`weighted_average`], with the
/// roles of membership and non-membership swapped.
fn weighted_geometric(values: &[Difv], weights: &[f64], family: Family) -> Difv {
    let mut mu_product = 1.0f64;
    let mut nu_complement = 1.0f64;
    for (v, &w) in values.iter().zip(weights) {
        mu_product *= v.mu().powf(w);
        nu_complement *= (1.0 - v.nu()).powf(w);
    }
    let r = match family {
        Family::Q => values
            .iter()
            .zip(weights)
            .map(|(v, &w)| (v.r() / MAX_RADIUS).powf(w))
            .product::<f64>()
            * MAX_RADIUS,
        Family::P => {
            MAX_RADIUS
                - values
                    .iter()
                    .zip(weights)
                    .map(|(v, &w)| (1.0 - v.r() / MAX_RADIUS).powf(w))
                    .product::<f64>()
                    * MAX_RADIUS
        }
    };
    Difv::from_closed(mu_product, 1.0 - nu_complement, r)
}

/// Weighted averaging operator (arithmetic flavor). Equivalent to
/// `⊕_k (w_k ⊙ a_k)` in the chosen radius family.
pub fn difwao(
    values: &[Difv],
    weights: &WeightVector,
    family: Family,
) -> Result<Difv, AggregationError> {
    check_lengths(values, weights.len())?;
    Ok(weighted_average(values, weights.as_slice(), family))
}

/// Weighted geometric operator. Equivalent to `⊗_k (a_k ^ w_k)` in the
/// chosen radius family.
pub fn difwgo(
    values: &[Difv],
    weights: &WeightVector,
    family: Family,
) -> Result<Difv, AggregationError> {
    check_lengths(values, weights.len())?;
    Ok(weighted_geometric(values, weights.as_slice(), family))
}

/// The sorted-position plan a Choquet integral uses: which original input
/// sits at each ascending-order position, and the measure-difference
/// exponent applied there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChoquetWeights {
    /// Original input indices in ascending score order (ties broken by the
    /// original index, so the plan is deterministic).
    pub sorted: Vec<usize>,
    /// `c_(k) = τ(F_(k)) − τ(F_(k+1))` where `F_(k)` is the set of original
    /// indices occupying sorted positions `k..m` ("survivors"). Non-negative
    /// for a monotone measure and summing to `τ(full) = 1`.
    pub exponents: Vec<f64>,
}

/// Computes the sorted order and measure-difference exponents shared by both
/// Choquet operators.
pub fn choquet_weights(
    values: &[Difv],
    measure: &FuzzyMeasure,
    params: ScoreParams,
) -> Result<ChoquetWeights, AggregationError> {
    if values.is_empty() {
        return Err(AggregationError::EmptyInput);
    }
    if measure.k() != values.len() {
        return Err(AggregationError::MeasureArityMismatch {
            measure_k: measure.k(),
            values: values.len(),
        });
    }
    let mut sorted: Vec<usize> = (0..values.len()).collect();
    sorted.sort_by(|&a, &b| values[a].compare(values[b], params).then(a.cmp(&b)));
    let mut exponents = Vec::with_capacity(values.len());
    // survivors = original indices at sorted positions k..m.
    let mut survivors = CriterionSubset::from_indices(&sorted)?;
    for (position, &original) in sorted.iter().enumerate() {
        let after = survivors.without(original);
        let tau_now = measure.value(survivors)?;
        let tau_after = if position + 1 == sorted.len() {
            0.0
        } else {
            measure.value(after)?
        };
        exponents.push(tau_now - tau_after);
        survivors = after;
    }
    Ok(ChoquetWeights { sorted, exponents })
}

/// Choquet-integral averaging operator: sorts ascending, derives exponents
/// from the measure, then applies the averaging closed form in sorted order.
pub fn difcaio(
    values: &[Difv],
    measure: &FuzzyMeasure,
    params: ScoreParams,
    family: Family,
) -> Result<Difv, AggregationError> {
    let plan = choquet_weights(values, measure, params)?;
    let ordered: Vec<Difv> = plan.sorted.iter().map(|&i| values[i]).collect();
    Ok(weighted_average(&ordered, &plan.exponents, family))
}

/// Choquet-integral geometric operator: same plan as [`difcaio`], geometric
/// closed form.
pub fn difcgio(
    values: &[Difv],
    measure: &FuzzyMeasure,
    params: ScoreParams,
    family: Family,
) -> Result<Difv, AggregationError> {
    let plan = choquet_weights(values, measure, params)?;
    let ordered: Vec<Difv> = plan.sorted.iter().map(|&i| values[i]).collect();
    Ok(weighted_geometric(&ordered, &plan.exponents, family))
}
