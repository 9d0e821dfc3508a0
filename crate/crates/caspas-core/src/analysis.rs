//! Sensitivity and validity analysis for the group-decision procedure.
//!
//! - [`sweep`] re-runs the full procedure across a grid of ε or ξ values (in
//!   both radius families) and reports where the ranking changes.
//! - [`validity_condition1`] replaces a non-optimal alternative with a worse
//!   one and checks that the best alternative is unaffected.
//! - [`validity_conditions_2_3`] decomposes the problem into sub-problems,
//!   checks that their rankings combine transitively (condition II), and
//!   that merging them by pairwise majority reproduces the full ranking
//!   (condition III).

use crate::difv::Family;
use crate::pipeline::{
    run_caspas, CaspasConfig, DecisionProblem, PipelineError, RankEntry, RankingResult,
};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Errors from analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error("sweep needs at least one grid value")]
    EmptyGrid,
    #[error("sweep grid values must be finite, got {0}")]
    BadGridValue(f64),
    #[error("replacement must target a non-best alternative, but `{0}` is ranked best")]
    ReplacementTargetsBest(String),
    #[error(
        "replacement assessments for `{alternative}` do not worsen it: \
         baseline score {baseline}, modified score {modified}"
    )]
    ReplacementNotWorse {
        alternative: String,
        baseline: f64,
        modified: f64,
    },
    #[error("conditions II/III need at least one sub-problem")]
    NoSubProblems,
}

/// Which configuration parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepAxis {
    Epsilon,
    Xi,
}

impl std::fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SweepAxis::Epsilon => "epsilon",
            SweepAxis::Xi => "xi",
        })
    }
}

/// Rankings at one grid value, in both radius families.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub value: f64,
    pub q_ranking: Vec<RankEntry>,
    pub p_ranking: Vec<RankEntry>,
}

/// A maximal run of consecutive grid values sharing one ranking order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSegment {
    pub start: f64,
    pub end: f64,
    pub ranking: Vec<String>,
}

/// Outcome of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub axis: SweepAxis,
    /// The configuration whose non-swept parameters were held fixed. Both
    /// radius families are always evaluated, whatever `base.family` says.
    pub base: CaspasConfig,
    pub points: Vec<SweepPoint>,
    pub q_segments: Vec<SweepSegment>,
    pub p_segments: Vec<SweepSegment>,
}

fn ranked_names(entries: &[RankEntry]) -> Vec<String> {
    entries.iter().map(|e| e.alternative.clone()).collect()
}

fn build_segments(
    points: &[SweepPoint],
    pick: impl Fn(&SweepPoint) -> &[RankEntry],
) -> Vec<SweepSegment> {
    let mut segments: Vec<SweepSegment> = Vec::new();
    for point in points {
        let names = ranked_names(pick(point));
        match segments.last_mut() {
            Some(last) if last.ranking == names => last.end = point.value,
            _ => segments.push(SweepSegment {
                start: point.value,
                end: point.value,
                ranking: names,
            }),
        }
    }
    segments
}

/// Re-runs the procedure at every grid value, varying one parameter and
/// evaluating both radius families each time.
pub fn sweep(
    problem: &DecisionProblem,
    base: &CaspasConfig,
    axis: SweepAxis,
    values: &[f64],
) -> Result<SweepReport, AnalysisError> {
    if values.is_empty() {
        return Err(AnalysisError::EmptyGrid);
    }
    if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(AnalysisError::BadGridValue(bad));
    }
    let mut points = Vec::with_capacity(values.len());
    for &value in values {
        let mut config = *base;
        match axis {
            SweepAxis::Epsilon => config.epsilon = value,
            SweepAxis::Xi => config.xi = value,
        }
        config.family = Family::Q;
        let q = run_caspas(problem, &config)?;
        config.family = Family::P;
        let p = run_caspas(problem, &config)?;
        points.push(SweepPoint {
            value,
            q_ranking: q.ranking,
            p_ranking: p.ranking,
        });
    }
    let q_segments = build_segments(&points, |p| &p.q_ranking);
    let p_segments = build_segments(&points, |p| &p.p_ranking);
    Ok(SweepReport {
        axis,
        base: *base,
        points,
        q_segments,
        p_segments,
    })
}

/// Substitute assessments for one alternative, `assessments[expert][criterion]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplacementAssessments {
    pub alternative: String,
    pub assessments: Vec<Vec<String>>,
}

/// Outcome of validity condition I.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition1Report {
    pub target: String,
    pub baseline_best: String,
    pub modified_best: String,
    /// The condition's verdict: the best alternative survived the swap.
    pub best_preserved: bool,
    pub target_baseline_score: f64,
    pub target_modified_score: f64,
    pub baseline: RankingResult,
    pub modified: RankingResult,
}

/// Condition I: replacing a non-optimal alternative with a worse one must
/// not change which alternative is best.
///
/// Two misuses are rejected rather than reported: targeting the alternative
/// that is already best (the condition is then undefined), and supplying a
/// replacement that does not actually lower the target's significance score.
pub fn validity_condition1(
    problem: &DecisionProblem,
    config: &CaspasConfig,
    replacement: &ReplacementAssessments,
) -> Result<Condition1Report, AnalysisError> {
    let baseline = run_caspas(problem, config)?;
    if baseline.best() == replacement.alternative {
        return Err(AnalysisError::ReplacementTargetsBest(
            replacement.alternative.clone(),
        ));
    }
    let modified_problem = problem
        .replace_assessments(&replacement.alternative, &replacement.assessments)
        .map_err(PipelineError::from)?;
    let modified = run_caspas(&modified_problem, config)?;
    let target_baseline_score = baseline
        .outcome(&replacement.alternative)
        .expect("target exists in baseline")
        .score;
    let target_modified_score = modified
        .outcome(&replacement.alternative)
        .expect("target exists in modified run")
        .score;
    if target_modified_score > target_baseline_score + 1e-12 {
        return Err(AnalysisError::ReplacementNotWorse {
            alternative: replacement.alternative.clone(),
            baseline: target_baseline_score,
            modified: target_modified_score,
        });
    }
    let baseline_best = baseline.best().to_string();
    let modified_best = modified.best().to_string();
    Ok(Condition1Report {
        target: replacement.alternative.clone(),
        best_preserved: baseline_best == modified_best,
        baseline_best,
        modified_best,
        target_baseline_score,
        target_modified_score,
        baseline,
        modified,
    })
}

/// Ranking of one sub-problem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubProblemOutcome {
    pub alternatives: Vec<String>,
    pub result: RankingResult,
}

/// Pairwise tally across sub-problems: in how many of them each alternative
/// of the pair ranked strictly above the other.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairTally {
    pub first: String,
    pub second: String,
    pub first_above: usize,
    pub second_above: usize,
}

/// One row of the merged (pairwise-majority) ranking.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MergedEntry {
    pub alternative: String,
    /// Opponents this alternative beats by pairwise majority.
    pub wins: usize,
    /// Opponents that beat it.
    pub losses: usize,
    /// `wins − losses`; the merged ranking sorts by this, descending.
    pub net_wins: i64,
    pub tied_with_previous: bool,
}

/// Outcome of validity conditions II and III.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conditions23Report {
    pub full: RankingResult,
    pub sub_problems: Vec<SubProblemOutcome>,
    /// Merged ranking by descending net pairwise wins. Equal tallies are
    /// reported as ties (problem order, flagged), never broken arbitrarily.
    pub merged: Vec<MergedEntry>,
    /// Condition II: the pairwise-majority relation is free of cycles.
    pub transitive: bool,
    /// Condition III: the merged order equals the full-problem order.
    pub merged_matches_full: bool,
    /// Pairs whose majority tally is tied.
    pub tied_pairs: Vec<PairTally>,
}

/// All subsets obtained by dropping one alternative, in problem order. With
/// `n` alternatives this yields `n` sub-problems of size `n − 1`.
pub fn leave_one_out_subsets(alternatives: &[String]) -> Vec<Vec<String>> {
    (0..alternatives.len())
        .map(|skip| {
            alternatives
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, name)| name.clone())
                .collect()
        })
        .collect()
}

/// Maps each alternative of a ranking to its tie level: entries in a tie
/// chain share a level, and `a` ranks strictly above `b` iff
/// `level(a) < level(b)`.
fn tie_levels(entries: &[RankEntry]) -> HashMap<&str, usize> {
    let mut levels = HashMap::with_capacity(entries.len());
    let mut level = 0usize;
    for (index, entry) in entries.iter().enumerate() {
        if index > 0 && !entry.tied_with_previous {
            level += 1;
        }
        levels.insert(entry.alternative.as_str(), level);
    }
    levels
}

fn is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indegree = vec![0usize; n];
    let mut adjacency = vec![Vec::new(); n];
    for &(from, to) in edges {
        adjacency[from].push(to);
        indegree[to] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut visited = 0usize;
    while let Some(node) = ready.pop() {
        visited += 1;
        for &next in &adjacency[node] {
            indegree[next] -= 1;
            if indegree[next] == 0 {
                ready.push(next);
            }
        }
    }
    visited == n
}

/// Conditions II and III: rank every sub-problem, combine the sub-rankings
/// by pairwise majority, check the combined relation for cycles, and compare
/// the merged order with the full-problem order.
pub fn validity_conditions_2_3(
    problem: &DecisionProblem,
    config: &CaspasConfig,
    subsets: &[Vec<String>],
) -> Result<Conditions23Report, AnalysisError> {
    if subsets.is_empty() {
        return Err(AnalysisError::NoSubProblems);
    }
    let full = run_caspas(problem, config)?;
    let mut sub_problems = Vec::with_capacity(subsets.len());
    for subset in subsets {
        let sub_problem = problem.restrict(subset).map_err(PipelineError::from)?;
        let result = run_caspas(&sub_problem, config)?;
        sub_problems.push(SubProblemOutcome {
            alternatives: sub_problem.alternatives().to_vec(),
            result,
        });
    }

    let names = problem.alternatives();
    let n = names.len();
    let level_maps: Vec<HashMap<&str, usize>> = sub_problems
        .iter()
        .map(|sp| tie_levels(&sp.result.ranking))
        .collect();

    // above[i][j]: sub-problems in which alternative i ranked strictly above j.
    let mut above = vec![vec![0usize; n]; n];
    for levels in &level_maps {
        for i in 0..n {
            for j in 0..n {
                if let (Some(&li), Some(&lj)) =
                    (levels.get(names[i].as_str()), levels.get(names[j].as_str()))
                {
                    if li < lj {
                        above[i][j] += 1;
                    }
                }
            }
        }
    }

    let mut wins = vec![0usize; n];
    let mut losses = vec![0usize; n];
    let mut edges = Vec::new();
    let mut tied_pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            use std::cmp::Ordering::*;
            match above[i][j].cmp(&above[j][i]) {
                Greater => {
                    wins[i] += 1;
                    losses[j] += 1;
                    edges.push((i, j));
                }
                Less => {
                    wins[j] += 1;
                    losses[i] += 1;
                    edges.push((j, i));
                }
                Equal => tied_pairs.push(PairTally {
                    first: names[i].clone(),
                    second: names[j].clone(),
                    first_above: above[i][j],
                    second_above: above[j][i],
                }),
            }
        }
    }
    let transitive = is_acyclic(n, &edges);

    let net = |i: usize| wins[i] as i64 - losses[i] as i64;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| net(b).cmp(&net(a)).then(a.cmp(&b)));
    let merged: Vec<MergedEntry> = order
        .iter()
        .enumerate()
        .map(|(position, &index)| MergedEntry {
            alternative: names[index].clone(),
            wins: wins[index],
            losses: losses[index],
            net_wins: net(index),
            tied_with_previous: position > 0 && net(index) == net(order[position - 1]),
        })
        .collect();

    let merged_names: Vec<&str> = merged.iter().map(|e| e.alternative.as_str()).collect();
    let full_names: Vec<&str> = full.ranking.iter().map(|e| e.alternative.as_str()).collect();
    let merged_matches_full = merged_names == full_names;

    Ok(Conditions23Report {
        full,
        sub_problems,
        merged,
        transitive,
        merged_matches_full,
        tied_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{CriterionKind, CriterionSpec};
    use crate::scale::LinguisticScale;

    /// Three alternatives with clear dominance A > B > C, two benefit
    /// criteria, two equally weighted experts.
    fn dominance_problem() -> DecisionProblem {
        let row = |code: &str| vec![code.to_string(), code.to_string()];
        DecisionProblem::new(
            vec!["A".into(), "B".into(), "C".into()],
            vec![
                CriterionSpec::new("C1", CriterionKind::Benefit),
                CriterionSpec::new("C2", CriterionKind::Benefit),
            ],
            vec!["E1".into(), "E2".into()],
            vec![0.5, 0.5],
            vec![
                vec![row("EH"), row("M"), row("L")],
                vec![row("VH"), row("MH"), row("VL")],
            ],
            vec![row("H"), row("MH")],
            LinguisticScale::standard(),
        )
        .unwrap()
    }

    #[test]
    fn sweep_covers_grid_and_groups_segments() {
        let problem = dominance_problem();
        let report = sweep(
            &problem,
            &CaspasConfig::default(),
            SweepAxis::Epsilon,
            &[0.1, 0.5, 0.9],
        )
        .unwrap();
        assert_eq!(report.points.len(), 3);
        // A dominance problem never changes order, so one segment per family
        // spanning the whole grid.
        assert_eq!(report.q_segments.len(), 1);
        assert_eq!(report.p_segments.len(), 1);
        assert_eq!(report.q_segments[0].start, 0.1);
        assert_eq!(report.q_segments[0].end, 0.9);
        assert_eq!(report.q_segments[0].ranking, ["A", "B", "C"]);
        for point in &report.points {
            assert_eq!(point.q_ranking.len(), 3);
            assert_eq!(point.p_ranking.len(), 3);
        }
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let problem = dominance_problem();
        assert!(matches!(
            sweep(&problem, &CaspasConfig::default(), SweepAxis::Xi, &[]),
            Err(AnalysisError::EmptyGrid)
        ));
        assert!(matches!(
            sweep(
                &problem,
                &CaspasConfig::default(),
                SweepAxis::Xi,
                &[0.1, f64::NAN]
            ),
            Err(AnalysisError::BadGridValue(_))
        ));
        // Out-of-range grid values surface as configuration errors.
        assert!(matches!(
            sweep(
                &problem,
                &CaspasConfig::default(),
                SweepAxis::Epsilon,
                &[1.5]
            ),
            Err(AnalysisError::Pipeline(PipelineError::Config(_)))
        ));
    }

    #[test]
    fn condition1_preserves_best_on_worsening_replacement() {
        let problem = dominance_problem();
        let replacement = ReplacementAssessments {
            alternative: "B".into(),
            assessments: vec![
                vec!["VL".into(), "EL".into()],
                vec!["EL".into(), "VL".into()],
            ],
        };
        let report =
            validity_condition1(&problem, &CaspasConfig::default(), &replacement).unwrap();
        assert_eq!(report.baseline_best, "A");
        assert_eq!(report.modified_best, "A");
        assert!(report.best_preserved);
        assert!(report.target_modified_score < report.target_baseline_score);
        // B falls behind C after the swap.
        assert_eq!(report.modified.ranking[2].alternative, "B");
    }

    #[test]
    fn condition1_rejects_targeting_the_best() {
        let problem = dominance_problem();
        let replacement = ReplacementAssessments {
            alternative: "A".into(),
            assessments: vec![
                vec!["VL".into(), "EL".into()],
                vec!["EL".into(), "VL".into()],
            ],
        };
        assert!(matches!(
            validity_condition1(&problem, &CaspasConfig::default(), &replacement),
            Err(AnalysisError::ReplacementTargetsBest(name)) if name == "A"
        ));
    }

    #[test]
    fn condition1_rejects_improving_replacement() {
        let problem = dominance_problem();
        let replacement = ReplacementAssessments {
            alternative: "C".into(),
            assessments: vec![
                vec!["EH".into(), "EH".into()],
                vec!["EH".into(), "EH".into()],
            ],
        };
        assert!(matches!(
            validity_condition1(&problem, &CaspasConfig::default(), &replacement),
            Err(AnalysisError::ReplacementNotWorse { .. })
        ));
    }

    #[test]
    fn leave_one_out_generates_all_drops() {
        let names: Vec<String> = ["A", "B", "C"].iter().map(|s| s.to_string()).collect();
        let subsets = leave_one_out_subsets(&names);
        assert_eq!(subsets.len(), 3);
        assert_eq!(subsets[0], ["B", "C"]);
        assert_eq!(subsets[1], ["A", "C"]);
        assert_eq!(subsets[2], ["A", "B"]);
    }

    #[test]
    fn conditions_2_3_hold_on_dominance_problem() {
        let problem = dominance_problem();
        let subsets = leave_one_out_subsets(problem.alternatives());
        let report =
            validity_conditions_2_3(&problem, &CaspasConfig::default(), &subsets).unwrap();
        assert_eq!(report.sub_problems.len(), 3);
        assert!(report.transitive);
        assert!(report.merged_matches_full);
        assert!(report.tied_pairs.is_empty());
        let merged: Vec<&str> = report.merged.iter().map(|e| e.alternative.as_str()).collect();
        assert_eq!(merged, ["A", "B", "C"]);
        assert_eq!(report.merged[0].net_wins, 2);
        assert_eq!(report.merged[2].net_wins, -2);
    }

    #[test]
    fn conditions_2_3_require_sub_problems() {
        let problem = dominance_problem();
        assert!(matches!(
            validity_conditions_2_3(&problem, &CaspasConfig::default(), &[]),
            Err(AnalysisError::NoSubProblems)
        ));
    }

    #[test]
    fn tie_levels_group_tied_entries() {
        let entries = vec![
            RankEntry {
                alternative: "A".into(),
                score: 0.9,
                accuracy: 0.9,
                tied_with_previous: false,
            },
            RankEntry {
                alternative: "B".into(),
                score: 0.9,
                accuracy: 0.9,
                tied_with_previous: true,
            },
            RankEntry {
                alternative: "C".into(),
                score: 0.5,
                accuracy: 0.5,
                tied_with_previous: false,
            },
        ];
        let levels = tie_levels(&entries);
        assert_eq!(levels["A"], levels["B"]);
        assert!(levels["A"] < levels["C"]);
    }
}
