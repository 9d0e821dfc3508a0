//! Comparator methods that share the CASPAS front half (normalization,
//! expert aggregation, criteria weighting) but aggregate the decision matrix
//! differently:
//!
//! - [`run_weighted`] — weighted sum model (WSM) and weighted product model
//!   (WPM) per alternative, blended into a significance degree exactly like
//!   the main procedure but with plain weight vectors instead of a fuzzy
//!   measure.
//! - [`run_topsis`] — closeness to ideal/anti-ideal points under a
//!   Minkowski-type distance on disc intuitionistic fuzzy values.

use crate::aggregation::{difwao, difwgo, AggregationError, WeightVector};
use crate::difv::{Difv, Family, MAX_RADIUS};
use crate::pipeline::{
    prepare_inputs, rank, significance_degree, AlternativeOutcome, CaspasConfig, DecisionProblem,
    PipelineError, Provenance, RankEntry, RankingResult,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors specific to the TOPSIS comparator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TopsisError {
    #[error("distance order beta must be at least 1, got {0}")]
    BetaOutOfRange(u32),
}

/// Parameters of the TOPSIS distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TopsisParamsParts")]
pub struct TopsisParams {
    beta: u32,
}

#[derive(Deserialize)]
struct TopsisParamsParts {
    beta: u32,
}

impl TryFrom<TopsisParamsParts> for TopsisParams {
    type Error = TopsisError;
    fn try_from(parts: TopsisParamsParts) -> Result<Self, Self::Error> {
        TopsisParams::new(parts.beta)
    }
}

impl TopsisParams {
    /// Requires `beta >= 1`.
    pub fn new(beta: u32) -> Result<Self, TopsisError> {
        if beta < 1 {
            return Err(TopsisError::BetaOutOfRange(beta));
        }
        Ok(Self { beta })
    }

    /// The Minkowski order.
    pub fn beta(&self) -> u32 {
        self.beta
    }
}

impl Default for TopsisParams {
    fn default() -> Self {
        Self { beta: 3 }
    }
}

/// Weighted-sum aggregate of each row (one value per alternative).
pub fn wsm(
    matrix: &[Vec<Difv>],
    weights: &WeightVector,
    family: Family,
) -> Result<Vec<Difv>, AggregationError> {
    matrix.iter().map(|row| difwao(row, weights, family)).collect()
}

/// Weighted-product aggregate of each row (one value per alternative).
pub fn wpm(
    matrix: &[Vec<Difv>],
    weights: &WeightVector,
    family: Family,
) -> Result<Vec<Difv>, AggregationError> {
    matrix.iter().map(|row| difwgo(row, weights, family)).collect()
}

/// Runs the WSM/WPM comparator: the front half of the main procedure, then
/// weighted sum and product aggregates per alternative, then the same
/// ε-blend and ranking. The fuzzy-measure parameters of `config` (`lambda`)
/// play no role here; `provenance.measure` is `None`.
pub fn run_weighted(
    problem: &DecisionProblem,
    config: &CaspasConfig,
) -> Result<RankingResult, PipelineError> {
    let prepared = prepare_inputs(problem, config)?;
    let weights = WeightVector::new(prepared.criteria_weights.clone()).map_err(|source| {
        PipelineError::Aggregation {
            stage: "validating derived criteria weights",
            source,
        }
    })?;
    let sum_models = wsm(&prepared.matrix, &weights, config.family).map_err(|source| {
        PipelineError::Aggregation {
            stage: "computing the weighted sum model",
            source,
        }
    })?;
    let product_models = wpm(&prepared.matrix, &weights, config.family).map_err(|source| {
        PipelineError::Aggregation {
            stage: "computing the weighted product model",
            source,
        }
    })?;
    let significance: Vec<Difv> = sum_models
        .iter()
        .zip(&product_models)
        .map(|(&s, &p)| significance_degree(s, p, config.epsilon, config.family))
        .collect::<Result<_, _>>()?;
    let outcomes: Vec<AlternativeOutcome> = problem
        .alternatives()
        .iter()
        .enumerate()
        .map(|(i, name)| AlternativeOutcome {
            alternative: name.clone(),
            sum_model: sum_models[i],
            product_model: product_models[i],
            significance: significance[i],
            score: significance[i].score(prepared.params),
            accuracy: significance[i].accuracy(prepared.params),
        })
        .collect();
    let ranking = rank(problem.alternatives(), &significance, prepared.params);
    Ok(RankingResult {
        outcomes,
        ranking,
        provenance: Provenance {
            config: *config,
            alternatives: problem.alternatives().to_vec(),
            criteria: problem.criterion_names(),
            expert_weights: problem.expert_weights().to_vec(),
            criteria_weights: prepared.criteria_weights,
            measure: None,
            aggregated_importance: prepared.aggregated_importance,
            aggregated_matrix: prepared.matrix,
            normalized: prepared.normalized,
        },
    })
}

/// Minkowski-type distance between two disc intuitionistic fuzzy values:
///
/// `d(a, b) = ½ · { (1/√2)·|Δr| + [ ½(|Δμ|^β + |Δν|^β) ]^(1/β) }`
///
/// Symmetric, non-negative, zero exactly on equal values, and bounded by 1.
pub fn minkowski_distance(a: Difv, b: Difv, params: TopsisParams) -> f64 {
    let beta = params.beta() as f64;
    let radius_part = (a.r() - b.r()).abs() / MAX_RADIUS;
    let degree_part = (0.5
        * ((a.mu() - b.mu()).abs().powf(beta) + (a.nu() - b.nu()).abs().powf(beta)))
    .powf(1.0 / beta);
    0.5 * (radius_part + degree_part)
}

/// One alternative's TOPSIS artifacts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosenessEntry {
    pub alternative: String,
    /// Weighted-product aggregate of the alternative's row.
    pub aggregate: Difv,
    pub distance_ideal: f64,
    pub distance_anti_ideal: f64,
    /// `d¬ / (d* + d¬)`; `None` when both distances are zero (every
    /// alternative coincides with both reference points), in which case all
    /// alternatives tie.
    pub closeness: Option<f64>,
}

/// Outcome of the TOPSIS comparator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosenessResult {
    pub entries: Vec<ClosenessEntry>,
    /// Alternatives ordered by descending closeness; exact ties keep problem
    /// order and are flagged.
    pub ranking: Vec<RankEntry>,
    pub ideal: Difv,
    pub anti_ideal: Difv,
    pub beta: u32,
    pub provenance: Provenance,
}

impl ClosenessResult {
    /// Alternative names in ranked order.
    pub fn ranked_names(&self) -> Vec<String> {
        self.ranking.iter().map(|e| e.alternative.clone()).collect()
    }
}

/// One alternative's raw TOPSIS numbers: distance to the ideal point,
/// distance to the anti-ideal point, and relative closeness (`None` when
/// both distances vanish).
pub type DistanceRow = (f64, f64, Option<f64>);

/// Core TOPSIS computation over an already-aggregated per-alternative vector:
/// ideal point ⟨max μ, min ν; max r⟩, anti-ideal ⟨min μ, max ν; max r⟩ (both
/// reference points take the largest observed radius), Minkowski distances,
/// and relative closeness.
pub fn cif_topsis(
    aggregates: &[Difv],
    params: TopsisParams,
) -> Result<(Difv, Difv, Vec<DistanceRow>), AggregationError> {
    if aggregates.is_empty() {
        return Err(AggregationError::EmptyInput);
    }
    let fold = |init: f64, f: fn(f64, f64) -> f64, pick: fn(&Difv) -> f64| {
        aggregates.iter().fold(init, |acc, v| f(acc, pick(v)))
    };
    let max_mu = fold(f64::NEG_INFINITY, f64::max, |v| v.mu());
    let min_mu = fold(f64::INFINITY, f64::min, |v| v.mu());
    let max_nu = fold(f64::NEG_INFINITY, f64::max, |v| v.nu());
    let min_nu = fold(f64::INFINITY, f64::min, |v| v.nu());
    let max_r = fold(f64::NEG_INFINITY, f64::max, |v| v.r());
    let ideal = Difv::from_closed(max_mu, min_nu, max_r);
    let anti_ideal = Difv::from_closed(min_mu, max_nu, max_r);
    let rows = aggregates
        .iter()
        .map(|&v| {
            let d_ideal = minkowski_distance(v, ideal, params);
            let d_anti = minkowski_distance(v, anti_ideal, params);
            let denominator = d_ideal + d_anti;
            let closeness = if denominator > 0.0 {
                Some(d_anti / denominator)
            } else {
                None
            };
            (d_ideal, d_anti, closeness)
        })
        .collect();
    Ok((ideal, anti_ideal, rows))
}

/// Runs the TOPSIS comparator: front half of the main procedure, rows
/// aggregated with the weighted product operator, then closeness ranking.
pub fn run_topsis(
    problem: &DecisionProblem,
    config: &CaspasConfig,
    params: TopsisParams,
) -> Result<ClosenessResult, PipelineError> {
    let prepared = prepare_inputs(problem, config)?;
    let weights = WeightVector::new(prepared.criteria_weights.clone()).map_err(|source| {
        PipelineError::Aggregation {
            stage: "validating derived criteria weights",
            source,
        }
    })?;
    let aggregates = wpm(&prepared.matrix, &weights, config.family).map_err(|source| {
        PipelineError::Aggregation {
            stage: "aggregating alternative rows",
            source,
        }
    })?;
    let (ideal, anti_ideal, rows) =
        cif_topsis(&aggregates, params).map_err(|source| PipelineError::Aggregation {
            stage: "computing closeness coefficients",
            source,
        })?;
    let entries: Vec<ClosenessEntry> = problem
        .alternatives()
        .iter()
        .enumerate()
        .map(|(i, name)| ClosenessEntry {
            alternative: name.clone(),
            aggregate: aggregates[i],
            distance_ideal: rows[i].0,
            distance_anti_ideal: rows[i].1,
            closeness: rows[i].2,
        })
        .collect();
    let ranking = rank_by_closeness(&entries);
    Ok(ClosenessResult {
        entries,
        ranking,
        ideal,
        anti_ideal,
        beta: params.beta(),
        provenance: Provenance {
            config: *config,
            alternatives: problem.alternatives().to_vec(),
            criteria: problem.criterion_names(),
            expert_weights: problem.expert_weights().to_vec(),
            criteria_weights: prepared.criteria_weights,
            measure: None,
            aggregated_importance: prepared.aggregated_importance,
            aggregated_matrix: prepared.matrix,
            normalized: prepared.normalized,
        },
    })
}

fn rank_by_closeness(entries: &[ClosenessEntry]) -> Vec<RankEntry> {
    let key = |e: &ClosenessEntry| e.closeness;
    let mut order: Vec<usize> = (0..entries.len()).collect();
    // A `None` closeness only arises when every alternative coincides with
    // both reference points, i.e. everything ties; treat it as equal to
    // everything (which it then is).
    order.sort_by(|&a, &b| {
        key(&entries[b])
            .partial_cmp(&key(&entries[a]))
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    order
        .iter()
        .enumerate()
        .map(|(position, &index)| RankEntry {
            alternative: entries[index].alternative.clone(),
            score: entries[index].closeness.unwrap_or(f64::NAN),
            accuracy: entries[index].closeness.unwrap_or(f64::NAN),
            tied_with_previous: position > 0
                && key(&entries[index]) == key(&entries[order[position - 1]]),
        })
        .collect()
}
