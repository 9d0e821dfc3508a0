//! On-disk JSON descriptions of decision problems and replacement tables.

use std::fs;
use std::path::Path;

use caspas_core::{
    CriterionKind, CriterionSpec, DecisionProblem, Difv, LinguisticScale, ReplacementAssessments,
};
use indexmap::IndexMap;
use serde::Deserialize;

use crate::error::CliError;

/// One criterion: a name and whether larger assessments are better
/// (`benefit`) or worse (`cost`).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionEntry {
    pub name: String,
    pub kind: CriterionKind,
}

/// One expert and their voting weight; weights must sum to one.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpertEntry {
    pub name: String,
    pub weight: f64,
}

/// The JSON schema of a problem file.
///
/// `assessments` maps expert name → alternative name → one linguistic code
/// per criterion, in the declared criterion order. `importance` maps expert
/// name → one code per criterion. `scale` optionally replaces or extends the
/// standard nine-term scale with `code → {mu, nu, r}` entries.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionEntry>,
    pub experts: Vec<ExpertEntry>,
    pub assessments: IndexMap<String, IndexMap<String, Vec<String>>>,
    pub importance: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub scale: Option<IndexMap<String, Difv>>,
}

impl ProblemFile {
    /// Reorders the keyed maps into the positional layout the engine uses
    /// and runs full validation.
    pub fn into_problem(self) -> Result<DecisionProblem, CliError> {
        let expert_names: Vec<&str> = self.experts.iter().map(|e| e.name.as_str()).collect();
        for key in self.assessments.keys() {
            if !expert_names.contains(&key.as_str()) {
                return Err(CliError::Schema(format!(
                    "assessments mention undeclared expert `{key}`"
                )));
            }
        }
        for key in self.importance.keys() {
            if !expert_names.contains(&key.as_str()) {
                return Err(CliError::Schema(format!(
                    "importance mentions undeclared expert `{key}`"
                )));
            }
        }

        let mut assessments = Vec::with_capacity(self.experts.len());
        let mut importance = Vec::with_capacity(self.experts.len());
        for expert in &expert_names {
            let per_alternative = self.assessments.get(*expert).ok_or_else(|| {
                CliError::Schema(format!("assessments are missing expert `{expert}`"))
            })?;
            for key in per_alternative.keys() {
                if !self.alternatives.contains(key) {
                    return Err(CliError::Schema(format!(
                        "expert `{expert}` assesses undeclared alternative `{key}`"
                    )));
                }
            }
            let rows = self
                .alternatives
                .iter()
                .map(|alternative| {
                    per_alternative.get(alternative).cloned().ok_or_else(|| {
                        CliError::Schema(format!(
                            "expert `{expert}` has no assessments for alternative `{alternative}`"
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            assessments.push(rows);
            importance.push(self.importance.get(*expert).cloned().ok_or_else(|| {
                CliError::Schema(format!("importance is missing expert `{expert}`"))
            })?);
        }

        let scale = match self.scale {
            None => LinguisticScale::standard(),
            Some(overrides) => LinguisticScale::standard().with_overrides(overrides),
        };
        let (experts, expert_weights) = self
            .experts
            .into_iter()
            .map(|e| (e.name, e.weight))
            .unzip();
        let criteria = self
            .criteria
            .into_iter()
            .map(|c| CriterionSpec::new(c.name, c.kind))
            .collect();
        DecisionProblem::new(
            self.alternatives,
            criteria,
            experts,
            expert_weights,
            assessments,
            importance,
            scale,
        )
        .map_err(CliError::from)
    }
}

/// Replacement assessments for one alternative: expert name → one code per
/// criterion.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReplacementFile {
    pub alternative: String,
    pub assessments: IndexMap<String, Vec<String>>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads and validates a problem file.
pub fn load_problem(path: &Path) -> Result<DecisionProblem, CliError> {
    read_json::<ProblemFile>(path)?.into_problem()
}

/// Loads a replacement file and reorders its expert map to the problem's
/// expert order.
pub fn load_replacement(
    path: &Path,
    problem: &DecisionProblem,
) -> Result<ReplacementAssessments, CliError> {
    let file: ReplacementFile = read_json(path)?;
    for key in file.assessments.keys() {
        if !problem.experts().contains(key) {
            return Err(CliError::Schema(format!(
                "replacement mentions undeclared expert `{key}`"
            )));
        }
    }
    let assessments = problem
        .experts()
        .iter()
        .map(|expert| {
            file.assessments.get(expert).cloned().ok_or_else(|| {
                CliError::Schema(format!("replacement is missing expert `{expert}`"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ReplacementAssessments {
        alternative: file.alternative,
        assessments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_json() -> serde_json::Value {
        serde_json::json!({
            "alternatives": ["A", "B"],
            "criteria": [
                {"name": "quality", "kind": "benefit"},
                {"name": "price", "kind": "cost"}
            ],
            "experts": [
                {"name": "E1", "weight": 0.6},
                {"name": "E2", "weight": 0.4}
            ],
            "assessments": {
                "E1": {"A": ["H", "M"], "B": ["L", "VH"]},
                "E2": {"A": ["MH", "ML"], "B": ["M", "H"]}
            },
            "importance": {
                "E1": ["H", "M"],
                "E2": ["MH", "ML"]
            }
        })
    }

    fn parse(value: serde_json::Value) -> Result<DecisionProblem, CliError> {
        serde_json::from_value::<ProblemFile>(value)
            .map_err(CliError::Encode)
            .and_then(ProblemFile::into_problem)
    }

    #[test]
    fn minimal_problem_loads() {
        let problem = parse(minimal_json()).unwrap();
        assert_eq!(problem.alternatives(), ["A", "B"]);
        assert_eq!(problem.experts(), ["E1", "E2"]);
        assert_eq!(problem.assessment_codes()[1][0][1], "ML");
    }

    #[test]
    fn missing_expert_in_assessments_is_a_schema_error() {
        let mut json = minimal_json();
        json["assessments"].as_object_mut().unwrap().remove("E2");
        let error = parse(json).unwrap_err();
        assert!(matches!(error, CliError::Schema(ref m) if m.contains("missing expert `E2`")));
    }

    #[test]
    fn unknown_alternative_in_assessments_is_a_schema_error() {
        let mut json = minimal_json();
        json["assessments"]["E1"]["C"] = serde_json::json!(["H", "M"]);
        let error = parse(json).unwrap_err();
        assert!(matches!(error, CliError::Schema(ref m) if m.contains("undeclared alternative")));
    }

    #[test]
    fn unknown_code_is_a_problem_error() {
        let mut json = minimal_json();
        json["assessments"]["E1"]["A"][0] = serde_json::json!("NOPE");
        let error = parse(json).unwrap_err();
        assert!(matches!(error, CliError::Problem(_)));
    }

    #[test]
    fn scale_overrides_are_applied() {
        let mut json = minimal_json();
        json["scale"] = serde_json::json!({"H": {"mu": 0.75, "nu": 0.2, "r": 0.7}});
        let problem = parse(json).unwrap();
        let resolved = problem.scale().lookup("H").unwrap();
        assert_eq!(resolved.mu(), 0.75);
    }

    #[test]
    fn unknown_top_level_field_is_rejected() {
        let mut json = minimal_json();
        json["surprise"] = serde_json::json!(true);
        assert!(parse(json).is_err());
    }
}
