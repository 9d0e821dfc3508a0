//! The CASPAS group-decision procedure: from linguistic expert assessments to
//! a ranked list of alternatives.
//!
//! The stages, each also exposed as a standalone function:
//!
//! 1. [`normalize`] — resolve linguistic codes against the scale and
//!    complement cost-criterion cells so every cell reads "bigger is better".
//! 2. [`aggregate_experts`] — collapse the expert dimension with a weighted
//!    operator (arithmetic by default).
//! 3. [`derive_criteria_weights`] — turn aggregated criterion-importance
//!    values into normalized weights via their scores.
//! 4. A λ-measure built from those weights captures criteria interaction.
//! 5. [`compute_csm`] / [`compute_cpm`] — per-alternative Choquet-integral
//!    averaging (sum model) and geometric (product model) aggregates.
//! 6. [`significance_degree`] — blend the two models with a coefficient ε.
//! 7. [`rank`] — order alternatives by score, then accuracy.

use crate::aggregation::{
    difcaio, difcgio, difwao, difwgo, AggregationError, WeightVector,
};
use crate::difv::{Difv, Family, ScoreParams};
use crate::measure::{FuzzyMeasure, LambdaParams, MeasureError};
use crate::scale::{LinguisticScale, ScaleError};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use thiserror::Error;

/// Whether a criterion rewards larger assessments (benefit) or smaller ones
/// (cost). Cost cells are complemented during normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    Benefit,
    Cost,
}

impl CriterionKind {
    /// True for cost criteria.
    pub fn is_cost(self) -> bool {
        matches!(self, CriterionKind::Cost)
    }
}

/// A named criterion with its optimization direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub kind: CriterionKind,
}

impl CriterionSpec {
    pub fn new(name: impl Into<String>, kind: CriterionKind) -> Self {
        Self {
            name: name.into(),
            kind,
        }
    }
}

/// Errors detected while building or reshaping a decision problem.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    /// A required collection is empty.
    #[error("decision problem needs at least one {0}")]
    Empty(&'static str),
    /// Two entities share a name.
    #[error("duplicate {what} name `{name}`")]
    Duplicate { what: &'static str, name: String },
    /// Expert weight vector length differs from the expert count.
    #[error("expected {expected} expert weights, got {found}")]
    ExpertWeightCount { expected: usize, found: usize },
    /// Expert weights fail convexity checks.
    #[error("expert weights: {0}")]
    ExpertWeights(AggregationError),
    /// A table has the wrong dimensions.
    #[error("{context}: expected {expected} {what}, got {found}")]
    Shape {
        context: String,
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// A linguistic code not present in the scale.
    #[error("{context}: {source}")]
    Term { context: String, source: ScaleError },
    /// An alternative name that does not exist in the problem.
    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),
    /// Restriction produced too small a problem to rank.
    #[error("a sub-problem needs at least two alternatives, got {0}")]
    TooFewAlternatives(usize),
}

/// A complete group-decision problem: alternatives assessed linguistically by
/// weighted experts against benefit/cost criteria, plus per-expert opinions
/// on how important each criterion is.
///
/// All shape and vocabulary validation happens in [`DecisionProblem::new`],
/// so downstream stages can resolve codes infallibly.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    experts: Vec<String>,
    expert_weights: Vec<f64>,
    /// `assessments[e][a][c]`: expert `e`'s linguistic code for alternative
    /// `a` under criterion `c`.
    assessments: Vec<Vec<Vec<String>>>,
    /// `importance[e][c]`: expert `e`'s linguistic code for the importance of
    /// criterion `c`.
    importance: Vec<Vec<String>>,
    scale: LinguisticScale,
}

fn check_unique<'a>(
    names: impl Iterator<Item = &'a str>,
    what: &'static str,
) -> Result<(), ProblemError> {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name) {
            return Err(ProblemError::Duplicate {
                what,
                name: name.to_string(),
            });
        }
    }
    Ok(())
}

impl DecisionProblem {
    /// Validates names, shapes, expert weights, and every linguistic code.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        experts: Vec<String>,
        expert_weights: Vec<f64>,
        assessments: Vec<Vec<Vec<String>>>,
        importance: Vec<Vec<String>>,
        scale: LinguisticScale,
    ) -> Result<Self, ProblemError> {
        if alternatives.is_empty() {
            return Err(ProblemError::Empty("alternative"));
        }
        if criteria.is_empty() {
            return Err(ProblemError::Empty("criterion"));
        }
        if experts.is_empty() {
            return Err(ProblemError::Empty("expert"));
        }
        check_unique(alternatives.iter().map(String::as_str), "alternative")?;
        check_unique(criteria.iter().map(|c| c.name.as_str()), "criterion")?;
        check_unique(experts.iter().map(String::as_str), "expert")?;
        if expert_weights.len() != experts.len() {
            return Err(ProblemError::ExpertWeightCount {
                expected: experts.len(),
                found: expert_weights.len(),
            });
        }
        WeightVector::new(expert_weights.clone()).map_err(ProblemError::ExpertWeights)?;
        if assessments.len() != experts.len() {
            return Err(ProblemError::Shape {
                context: "assessment table".to_string(),
                what: "expert blocks",
                expected: experts.len(),
                found: assessments.len(),
            });
        }
        for (e, block) in assessments.iter().enumerate() {
            if block.len() != alternatives.len() {
                return Err(ProblemError::Shape {
                    context: format!("assessments of expert `{}`", experts[e]),
                    what: "alternative rows",
                    expected: alternatives.len(),
                    found: block.len(),
                });
            }
            for (a, row) in block.iter().enumerate() {
                if row.len() != criteria.len() {
                    return Err(ProblemError::Shape {
                        context: format!(
                            "assessments of expert `{}` for alternative `{}`",
                            experts[e], alternatives[a]
                        ),
                        what: "criterion cells",
                        expected: criteria.len(),
                        found: row.len(),
                    });
                }
                for (c, code) in row.iter().enumerate() {
                    scale.lookup(code).map_err(|source| ProblemError::Term {
                        context: format!(
                            "assessment by expert `{}` of alternative `{}` under criterion `{}`",
                            experts[e], alternatives[a], criteria[c].name
                        ),
                        source,
                    })?;
                }
            }
        }
        if importance.len() != experts.len() {
            return Err(ProblemError::Shape {
                context: "criterion importance table".to_string(),
                what: "expert rows",
                expected: experts.len(),
                found: importance.len(),
            });
        }
        for (e, row) in importance.iter().enumerate() {
            if row.len() != criteria.len() {
                return Err(ProblemError::Shape {
                    context: format!("criterion importance from expert `{}`", experts[e]),
                    what: "criterion cells",
                    expected: criteria.len(),
                    found: row.len(),
                });
            }
            for (c, code) in row.iter().enumerate() {
                scale.lookup(code).map_err(|source| ProblemError::Term {
                    context: format!(
                        "importance of criterion `{}` according to expert `{}`",
                        criteria[c].name, experts[e]
                    ),
                    source,
                })?;
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            experts,
            expert_weights,
            assessments,
            importance,
            scale,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    /// Criterion names in problem order.
    pub fn criterion_names(&self) -> Vec<String> {
        self.criteria.iter().map(|c| c.name.clone()).collect()
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    pub fn expert_weights(&self) -> &[f64] {
        &self.expert_weights
    }

    pub fn scale(&self) -> &LinguisticScale {
        &self.scale
    }

    /// Raw linguistic assessment codes, `[expert][alternative][criterion]`.
    pub fn assessment_codes(&self) -> &[Vec<Vec<String>>] {
        &self.assessments
    }

    /// Raw linguistic importance codes, `[expert][criterion]`.
    pub fn importance_codes(&self) -> &[Vec<String>] {
        &self.importance
    }

    /// Importance codes resolved to values, `[expert][criterion]`. Importance
    /// is an opinion about the criterion itself, so it is never complemented.
    pub fn importance_values(&self) -> Vec<Vec<Difv>> {
        self.importance
            .iter()
            .map(|row| {
                row.iter()
                    .map(|code| self.scale.lookup(code).expect("validated at construction"))
                    .collect()
            })
            .collect()
    }

    /// A sub-problem over the named alternatives. Problem order is preserved
    /// regardless of the order of `keep`; at least two alternatives must
    /// remain so ranking stays meaningful.
    pub fn restrict(&self, keep: &[String]) -> Result<Self, ProblemError> {
        for name in keep {
            if !self.alternatives.contains(name) {
                return Err(ProblemError::UnknownAlternative(name.clone()));
            }
        }
        let selected: Vec<usize> = self
            .alternatives
            .iter()
            .enumerate()
            .filter(|(_, name)| keep.contains(name))
            .map(|(i, _)| i)
            .collect();
        if selected.len() < 2 {
            return Err(ProblemError::TooFewAlternatives(selected.len()));
        }
        Ok(Self {
            alternatives: selected
                .iter()
                .map(|&i| self.alternatives[i].clone())
                .collect(),
            criteria: self.criteria.clone(),
            experts: self.experts.clone(),
            expert_weights: self.expert_weights.clone(),
            assessments: self
                .assessments
                .iter()
                .map(|block| selected.iter().map(|&i| block[i].clone()).collect())
                .collect(),
            importance: self.importance.clone(),
            scale: self.scale.clone(),
        })
    }

    /// The same problem with one alternative's assessments swapped out.
    /// `replacement[e][c]` gives the new code from expert `e` under criterion
    /// `c`; codes are validated against the scale.
    pub fn replace_assessments(
        &self,
        alternative: &str,
        replacement: &[Vec<String>],
    ) -> Result<Self, ProblemError> {
        let index = self
            .alternatives
            .iter()
            .position(|name| name == alternative)
            .ok_or_else(|| ProblemError::UnknownAlternative(alternative.to_string()))?;
        if replacement.len() != self.experts.len() {
            return Err(ProblemError::Shape {
                context: format!("replacement assessments for `{alternative}`"),
                what: "expert rows",
                expected: self.experts.len(),
                found: replacement.len(),
            });
        }
        for (e, row) in replacement.iter().enumerate() {
            if row.len() != self.criteria.len() {
                return Err(ProblemError::Shape {
                    context: format!(
                        "replacement assessments for `{alternative}` from expert `{}`",
                        self.experts[e]
                    ),
                    what: "criterion cells",
                    expected: self.criteria.len(),
                    found: row.len(),
                });
            }
            for (c, code) in row.iter().enumerate() {
                self.scale.lookup(code).map_err(|source| ProblemError::Term {
                    context: format!(
                        "replacement assessment by expert `{}` of `{alternative}` under criterion `{}`",
                        self.experts[e], self.criteria[c].name
                    ),
                    source,
                })?;
            }
        }
        let mut problem = self.clone();
        for (e, row) in replacement.iter().enumerate() {
            problem.assessments[e][index] = row.clone();
        }
        Ok(problem)
    }
}

/// Which weighted operator collapses the expert dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpertAggregator {
    #[default]
    Arithmetic,
    Geometric,
}

/// Configuration errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("blend coefficient epsilon must lie in [0, 1], got {0}")]
    EpsilonOutOfRange(f64),
    #[error("score attitude parameter xi must lie in [0, 1], got {0}")]
    XiOutOfRange(f64),
    #[error("interaction index lambda must be finite and > -1, got {0}")]
    LambdaOutOfRange(f64),
}

/// Tunable parameters of the procedure.
///
/// `epsilon` blends the sum and product models in the significance degree
/// (1 = sum model only, 0 = product model only). `xi` sets the attitude of
/// the score function (weight on membership evidence versus disc radius) and
/// is used consistently for criteria weighting, Choquet sorting, and final
/// ranking. `lambda` is the criteria-interaction index of the fuzzy measure.
/// `family` selects the radius arithmetic for the Choquet and blending
/// stages. `expert_aggregator` picks the operator that collapses experts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CaspasConfig {
    pub epsilon: f64,
    pub xi: f64,
    pub lambda: f64,
    pub family: Family,
    pub expert_aggregator: ExpertAggregator,
}

impl Default for CaspasConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.3,
            xi: 0.8,
            lambda: 0.5,
            family: Family::Q,
            expert_aggregator: ExpertAggregator::Arithmetic,
        }
    }
}

impl CaspasConfig {
    /// Checks every parameter range.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !self.epsilon.is_finite() || !(0.0..=1.0).contains(&self.epsilon) {
            return Err(ConfigError::EpsilonOutOfRange(self.epsilon));
        }
        if !self.xi.is_finite() || !(0.0..=1.0).contains(&self.xi) {
            return Err(ConfigError::XiOutOfRange(self.xi));
        }
        if !self.lambda.is_finite() || self.lambda <= -1.0 {
            return Err(ConfigError::LambdaOutOfRange(self.lambda));
        }
        Ok(())
    }

    /// The score parameters implied by `xi`.
    pub fn score_params(&self) -> Result<ScoreParams, ConfigError> {
        ScoreParams::new(self.xi).map_err(|_| ConfigError::XiOutOfRange(self.xi))
    }
}

/// Errors from running the procedure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("invalid decision problem: {0}")]
    Problem(#[from] ProblemError),
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("while {stage}: {source}")]
    Aggregation {
        stage: &'static str,
        source: AggregationError,
    },
    #[error("while {stage}: {source}")]
    Measure {
        stage: &'static str,
        source: MeasureError,
    },
    #[error("aggregated criteria importance has zero total score; weights are undefined")]
    DegenerateImportance,
}

/// Resolves every assessment code and complements cost-criterion cells, so
/// all values read "bigger is better". Returns `[expert][alternative][criterion]`.
pub fn normalize(problem: &DecisionProblem) -> Vec<Vec<Vec<Difv>>> {
    problem
        .assessment_codes()
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(problem.criteria())
                        .map(|(code, criterion)| {
                            problem
                                .scale()
                                .resolve(code, criterion.kind.is_cost())
                                .expect("validated at construction")
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn aggregate_cell(
    column: &[Difv],
    weights: &WeightVector,
    aggregator: ExpertAggregator,
) -> Result<Difv, AggregationError> {
    // The expert stage always combines radii multiplicatively (Q family);
    // the configured radius family takes effect from the Choquet stage on.
    match aggregator {
        ExpertAggregator::Arithmetic => difwao(column, weights, Family::Q),
        ExpertAggregator::Geometric => difwgo(column, weights, Family::Q),
    }
}

/// Collapses the expert dimension of a normalized assessment cube into an
/// `[alternative][criterion]` matrix.
pub fn aggregate_experts(
    cube: &[Vec<Vec<Difv>>],
    weights: &WeightVector,
    aggregator: ExpertAggregator,
) -> Result<Vec<Vec<Difv>>, AggregationError> {
    if cube.is_empty() || cube[0].is_empty() {
        return Err(AggregationError::EmptyInput);
    }
    let alternatives = cube[0].len();
    let criteria = cube[0][0].len();
    let mut matrix = Vec::with_capacity(alternatives);
    for a in 0..alternatives {
        let mut row = Vec::with_capacity(criteria);
        for c in 0..criteria {
            let column: Vec<Difv> = cube.iter().map(|block| block[a][c]).collect();
            row.push(aggregate_cell(&column, weights, aggregator)?);
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// Collapses the expert dimension of the `[expert][criterion]` importance
/// table into one value per criterion.
pub fn aggregate_importance(
    importance: &[Vec<Difv>],
    weights: &WeightVector,
    aggregator: ExpertAggregator,
) -> Result<Vec<Difv>, AggregationError> {
    if importance.is_empty() || importance[0].is_empty() {
        return Err(AggregationError::EmptyInput);
    }
    let criteria = importance[0].len();
    (0..criteria)
        .map(|c| {
            let column: Vec<Difv> = importance.iter().map(|row| row[c]).collect();
            aggregate_cell(&column, weights, aggregator)
        })
        .collect()
}

/// Normalizes the scores of the aggregated importance values into criterion
/// weights: `ω_j = S_j / Σ_k S_k`.
pub fn derive_criteria_weights(
    importance: &[Difv],
    params: ScoreParams,
) -> Result<Vec<f64>, PipelineError> {
    if importance.is_empty() {
        return Err(PipelineError::Aggregation {
            stage: "deriving criteria weights",
            source: AggregationError::EmptyInput,
        });
    }
    let scores: Vec<f64> = importance.iter().map(|v| v.score(params)).collect();
    let total: f64 = scores.iter().sum();
    if total <= 0.0 {
        return Err(PipelineError::DegenerateImportance);
    }
    Ok(scores.iter().map(|s| s / total).collect())
}

/// Per-alternative Choquet-integral averaging aggregate (the "sum model").
pub fn compute_csm(
    matrix: &[Vec<Difv>],
    measure: &FuzzyMeasure,
    params: ScoreParams,
    family: Family,
) -> Result<Vec<Difv>, AggregationError> {
    matrix
        .iter()
        .map(|row| difcaio(row, measure, params, family))
        .collect()
}

/// Per-alternative Choquet-integral geometric aggregate (the "product model").
pub fn compute_cpm(
    matrix: &[Vec<Difv>],
    measure: &FuzzyMeasure,
    params: ScoreParams,
    family: Family,
) -> Result<Vec<Difv>, AggregationError> {
    matrix
        .iter()
        .map(|row| difcgio(row, measure, params, family))
        .collect()
}

/// Blends sum and product models: `SD = (ε ⊙ CSM) ⊕ ((1−ε) ⊙ CPM)`.
///
/// The boundaries bypass the blend entirely (`ε = 0` returns the product
/// model, `ε = 1` the sum model) rather than evaluating a degenerate scalar
/// multiple.
pub fn significance_degree(
    sum_model: Difv,
    product_model: Difv,
    epsilon: f64,
    family: Family,
) -> Result<Difv, ConfigError> {
    if !epsilon.is_finite() || !(0.0..=1.0).contains(&epsilon) {
        return Err(ConfigError::EpsilonOutOfRange(epsilon));
    }
    if epsilon == 0.0 {
        return Ok(product_model);
    }
    if epsilon == 1.0 {
        return Ok(sum_model);
    }
    let weighted_sum = sum_model
        .scalar(epsilon, family)
        .expect("epsilon is strictly inside (0, 1)");
    let weighted_product = product_model
        .scalar(1.0 - epsilon, family)
        .expect("1 - epsilon is strictly inside (0, 1)");
    Ok(weighted_sum.oplus(weighted_product, family))
}

/// One row of a ranking: the alternative, its significance score and
/// accuracy, and whether it ties the entry above it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub alternative: String,
    pub score: f64,
    pub accuracy: f64,
    pub tied_with_previous: bool,
}

/// Orders alternatives by descending significance (score, then accuracy).
/// Exact ties keep problem order and are flagged, never broken arbitrarily.
pub fn rank(alternatives: &[String], significance: &[Difv], params: ScoreParams) -> Vec<RankEntry> {
    debug_assert_eq!(alternatives.len(), significance.len());
    let mut order: Vec<usize> = (0..alternatives.len()).collect();
    order.sort_by(|&a, &b| {
        significance[b]
            .compare(significance[a], params)
            .then(a.cmp(&b))
    });
    let mut entries = Vec::with_capacity(order.len());
    for (position, &index) in order.iter().enumerate() {
        let tied_with_previous = position > 0
            && significance[index].compare(significance[order[position - 1]], params)
                == Ordering::Equal;
        entries.push(RankEntry {
            alternative: alternatives[index].clone(),
            score: significance[index].score(params),
            accuracy: significance[index].accuracy(params),
            tied_with_previous,
        });
    }
    entries
}

/// Everything the front half of the procedure produces before any
/// measure-dependent aggregation: the normalized cube, the expert-aggregated
/// decision matrix, the aggregated importance values, and the criterion
/// weights derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct PreparedInputs {
    pub params: ScoreParams,
    pub normalized: Vec<Vec<Vec<Difv>>>,
    pub matrix: Vec<Vec<Difv>>,
    pub aggregated_importance: Vec<Difv>,
    pub criteria_weights: Vec<f64>,
}

/// Runs stages 1–3 (normalize, aggregate experts, derive weights). Shared by
/// the main procedure and the comparator methods, which diverge only in how
/// they aggregate the decision matrix.
pub fn prepare_inputs(
    problem: &DecisionProblem,
    config: &CaspasConfig,
) -> Result<PreparedInputs, PipelineError> {
    config.validate()?;
    let params = config.score_params()?;
    let weights = WeightVector::new(problem.expert_weights().to_vec())
        .map_err(ProblemError::ExpertWeights)?;
    let normalized = normalize(problem);
    let matrix = aggregate_experts(&normalized, &weights, config.expert_aggregator).map_err(
        |source| PipelineError::Aggregation {
            stage: "aggregating expert assessments",
            source,
        },
    )?;
    let aggregated_importance =
        aggregate_importance(&problem.importance_values(), &weights, config.expert_aggregator)
            .map_err(|source| PipelineError::Aggregation {
                stage: "aggregating criterion importance",
                source,
            })?;
    let criteria_weights = derive_criteria_weights(&aggregated_importance, params)?;
    Ok(PreparedInputs {
        params,
        normalized,
        matrix,
        aggregated_importance,
        criteria_weights,
    })
}

/// Intermediate artifacts recorded alongside a ranking so results can be
/// audited and reproduced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub config: CaspasConfig,
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub expert_weights: Vec<f64>,
    pub criteria_weights: Vec<f64>,
    /// The λ-measure as a named subset table; absent for methods that use
    /// plain weight vectors instead of a fuzzy measure.
    pub measure: Option<IndexMap<String, f64>>,
    pub aggregated_importance: Vec<Difv>,
    /// Expert-aggregated decision matrix, `[alternative][criterion]`.
    pub aggregated_matrix: Vec<Vec<Difv>>,
    /// Normalized assessments, `[expert][alternative][criterion]`.
    pub normalized: Vec<Vec<Vec<Difv>>>,
}

/// Per-alternative artifacts of a full run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlternativeOutcome {
    pub alternative: String,
    /// Choquet averaging aggregate (or weighted-sum aggregate for WSM/WPM).
    pub sum_model: Difv,
    /// Choquet geometric aggregate (or weighted-product aggregate).
    pub product_model: Difv,
    /// The ε-blend of the two models.
    pub significance: Difv,
    pub score: f64,
    pub accuracy: f64,
}

/// Outcome of a run: per-alternative artifacts in problem order, the sorted
/// ranking, and provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingResult {
    pub outcomes: Vec<AlternativeOutcome>,
    pub ranking: Vec<RankEntry>,
    pub provenance: Provenance,
}

impl RankingResult {
    /// Alternative names in ranked order (ties keep problem order).
    pub fn ranked_names(&self) -> Vec<String> {
        self.ranking.iter().map(|e| e.alternative.clone()).collect()
    }

    /// The top-ranked alternative.
    pub fn best(&self) -> &str {
        &self.ranking[0].alternative
    }

    /// The outcome row for a named alternative, if present.
    pub fn outcome(&self, alternative: &str) -> Option<&AlternativeOutcome> {
        self.outcomes.iter().find(|o| o.alternative == alternative)
    }
}

/// Runs the full procedure and ranks the alternatives.
pub fn run_caspas(
    problem: &DecisionProblem,
    config: &CaspasConfig,
) -> Result<RankingResult, PipelineError> {
    let prepared = prepare_inputs(problem, config)?;
    let lambda_params = LambdaParams::new(config.lambda, prepared.criteria_weights.clone())
        .map_err(|source| PipelineError::Measure {
            stage: "building the lambda measure",
            source,
        })?;
    let measure = FuzzyMeasure::from_lambda(&lambda_params).map_err(|source| {
        PipelineError::Measure {
            stage: "building the lambda measure",
            source,
        }
    })?;
    let csm = compute_csm(&prepared.matrix, &measure, prepared.params, config.family).map_err(
        |source| PipelineError::Aggregation {
            stage: "computing the sum model",
            source,
        },
    )?;
    let cpm = compute_cpm(&prepared.matrix, &measure, prepared.params, config.family).map_err(
        |source| PipelineError::Aggregation {
            stage: "computing the product model",
            source,
        },
    )?;
    let significance: Vec<Difv> = csm
        .iter()
        .zip(&cpm)
        .map(|(&s, &p)| significance_degree(s, p, config.epsilon, config.family))
        .collect::<Result<_, _>>()?;
    let outcomes: Vec<AlternativeOutcome> = problem
        .alternatives()
        .iter()
        .enumerate()
        .map(|(i, name)| AlternativeOutcome {
            alternative: name.clone(),
            sum_model: csm[i],
            product_model: cpm[i],
            significance: significance[i],
            score: significance[i].score(prepared.params),
            accuracy: significance[i].accuracy(prepared.params),
        })
        .collect();
    let ranking = rank(problem.alternatives(), &significance, prepared.params);
    let measure_table = measure
        .named_values(&problem.criterion_names())
        .map_err(|source| PipelineError::Measure {
            stage: "rendering the lambda measure",
            source,
        })?;
    Ok(RankingResult {
        outcomes,
        ranking,
        provenance: Provenance {
            config: *config,
            alternatives: problem.alternatives().to_vec(),
            criteria: problem.criterion_names(),
            expert_weights: problem.expert_weights().to_vec(),
            criteria_weights: prepared.criteria_weights,
            measure: Some(measure_table),
            aggregated_importance: prepared.aggregated_importance,
            aggregated_matrix: prepared.matrix,
            normalized: prepared.normalized,
        },
    })
}
