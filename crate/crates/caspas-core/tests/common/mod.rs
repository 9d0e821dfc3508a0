//! Shared fixture: the bundled solar-panel selection problem (five panel
//! types, four criteria of which two are costs, three weighted experts).
#![allow(dead_code)]

use caspas_core::{CriterionKind, CriterionSpec, DecisionProblem, LinguisticScale};

fn codes(row: &[&str]) -> Vec<String> {
    row.iter().map(|s| s.to_string()).collect()
}

/// The reference group-decision problem used by the acceptance checks.
pub fn reference_problem() -> DecisionProblem {
    let alternatives = vec!["P1", "P2", "P3", "P4", "P5"]
        .into_iter()
        .map(String::from)
        .collect();
    let criteria = vec![
        CriterionSpec::new("T1", CriterionKind::Benefit),
        CriterionSpec::new("T2", CriterionKind::Cost),
        CriterionSpec::new("T3", CriterionKind::Benefit),
        CriterionSpec::new("T4", CriterionKind::Cost),
    ];
    let experts = vec!["E1", "E2", "E3"].into_iter().map(String::from).collect();
    let assessments = vec![
        vec![
            codes(&["EH", "MH", "EH", "M"]),
            codes(&["VH", "M", "VH", "M"]),
            codes(&["MH", "L", "ML", "ML"]),
            codes(&["VH", "MH", "H", "M"]),
            codes(&["H", "MH", "VH", "MH"]),
        ],
        vec![
            codes(&["VH", "H", "VH", "MH"]),
            codes(&["MH", "M", "H", "MH"]),
            codes(&["M", "M", "M", "ML"]),
            codes(&["VH", "MH", "VH", "M"]),
            codes(&["VH", "H", "VH", "M"]),
        ],
        vec![
            codes(&["EH", "VH", "H", "ML"]),
            codes(&["H", "ML", "MH", "M"]),
            codes(&["ML", "VL", "ML", "VL"]),
            codes(&["H", "H", "MH", "ML"]),
            codes(&["H", "VH", "H", "H"]),
        ],
    ];
    let importance = vec![
        codes(&["VH", "MH", "MH", "M"]),
        codes(&["H", "MH", "M", "ML"]),
        codes(&["M", "ML", "L", "VL"]),
    ];
    DecisionProblem::new(
        alternatives,
        criteria,
        experts,
        vec![0.4, 0.4, 0.2],
        assessments,
        importance,
        LinguisticScale::standard(),
    )
    .expect("reference problem is well-formed")
}

/// The deliberately worse assessments used to stress-test ranking validity
/// by substituting them for the third alternative, `[expert][criterion]`.
pub fn replacement_for_third() -> Vec<Vec<String>> {
    vec![
        codes(&["M", "L", "L", "ML"]),
        codes(&["ML", "M", "ML", "M"]),
        codes(&["L", "EL", "L", "VL"]),
    ]
}
