//! Decision analysis with disc intuitionistic fuzzy values (D-IFVs): triples
//! ⟨(μ, ν); r⟩ pairing intuitionistic membership/non-membership degrees with
//! a disc radius that captures assessment imprecision.
//!
//! The crate provides, bottom-up:
//!
//! - [`difv`]: the value type, its algebra (⊕, ⊗, scalar multiple, power in
//!   two radius families), score/accuracy ranking, and linguistic-scale
//!   support ([`scale`], [`difs`]).
//! - [`measure`]: fuzzy measures over criteria, including the λ-measure
//!   construction from criterion weights.
//! - [`aggregation`]: weighted averaging/geometric operators and their
//!   Choquet-integral generalizations, which account for criteria
//!   interaction through the fuzzy measure.

pub mod aggregation;
pub mod analysis;
pub mod comparators;
pub mod difs;
pub mod difv;
pub mod measure;
pub mod pipeline;
pub mod scale;

pub use aggregation::{
    choquet_weights, difcaio, difcgio, difwao, difwgo, AggregationError, ChoquetWeights,
    WeightVector,
};
pub use analysis::{
    leave_one_out_subsets, sweep, validity_condition1, validity_conditions_2_3, AnalysisError,
    Condition1Report, Conditions23Report, MergedEntry, PairTally, ReplacementAssessments,
    SubProblemOutcome, SweepAxis, SweepPoint, SweepReport, SweepSegment,
};
pub use comparators::{
    cif_topsis, minkowski_distance, run_topsis, run_weighted, wpm, wsm, ClosenessEntry,
    ClosenessResult, DistanceRow, TopsisError, TopsisParams,
};
pub use difs::{Difs, DifsError};
pub use difv::{Difv, DifvError, Family, ScoreParams, MAX_RADIUS};
pub use measure::{
    renormalize_weights, CriterionSubset, FuzzyMeasure, LambdaParams, MeasureError,
    MeasureViolation, MAX_CRITERIA,
};
pub use pipeline::{
    prepare_inputs, run_caspas, AlternativeOutcome, CaspasConfig, ConfigError, CriterionKind,
    CriterionSpec, DecisionProblem, ExpertAggregator, PipelineError, PreparedInputs, ProblemError,
    Provenance, RankEntry, RankingResult,
};
pub use scale::{LinguisticScale, ScaleError};
