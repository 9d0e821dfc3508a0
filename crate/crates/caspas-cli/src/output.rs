//! Result rendering (pretty JSON at full precision, or flat CSV rounded to
//! six decimal places) and output-file handling.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use caspas_core::{ClosenessResult, RankingResult, SweepReport};
use clap::ValueEnum;
use indexmap::IndexMap;
use serde::Serialize;

use crate::error::CliError;

/// Environment variable naming a directory that relative `--out` paths are
/// resolved against.
pub const OUT_DIR_VAR: &str = "CASPAS_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON with full floating-point precision.
    Json,
    /// Flat table with numbers rounded to six decimal places.
    Csv,
}

pub fn render_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut rendered = serde_json::to_string_pretty(value)?;
    rendered.push('\n');
    Ok(rendered)
}

fn fmt6(value: f64) -> String {
    format!("{value:.6}")
}

fn finish(writer: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = writer
        .into_inner()
        .expect("writing to an in-memory buffer cannot fail");
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

/// `rank,alternative,score,accuracy,mu,nu,r` — one row per ranked
/// alternative, with the blended significance value's components.
pub fn ranking_csv(result: &RankingResult) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["rank", "alternative", "score", "accuracy", "mu", "nu", "r"])?;
    for (position, entry) in result.ranking.iter().enumerate() {
        let outcome = result
            .outcome(&entry.alternative)
            .expect("every ranked alternative has an outcome");
        writer.write_record([
            (position + 1).to_string(),
            entry.alternative.clone(),
            fmt6(entry.score),
            fmt6(entry.accuracy),
            fmt6(outcome.significance.mu()),
            fmt6(outcome.significance.nu()),
            fmt6(outcome.significance.r()),
        ])?;
    }
    finish(writer)
}

/// `rank,alternative,closeness,distance_ideal,distance_anti_ideal` — the
/// closeness field is empty in the degenerate all-tied case.
pub fn closeness_csv(result: &ClosenessResult) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "rank",
        "alternative",
        "closeness",
        "distance_ideal",
        "distance_anti_ideal",
    ])?;
    for (position, entry) in result.ranking.iter().enumerate() {
        let detail = result
            .entries
            .iter()
            .find(|e| e.alternative == entry.alternative)
            .expect("every ranked alternative has an entry");
        writer.write_record([
            (position + 1).to_string(),
            entry.alternative.clone(),
            detail.closeness.map(fmt6).unwrap_or_default(),
            fmt6(detail.distance_ideal),
            fmt6(detail.distance_anti_ideal),
        ])?;
    }
    finish(writer)
}

/// `axis,value,family,rank,alternative,score` — one row per alternative per
/// grid point per radius family.
pub fn sweep_csv(report: &SweepReport) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["axis", "value", "family", "rank", "alternative", "score"])?;
    let axis = report.axis.to_string();
    for point in &report.points {
        for (family, ranking) in [("q", &point.q_ranking), ("p", &point.p_ranking)] {
            for (position, entry) in ranking.iter().enumerate() {
                writer.write_record([
                    axis.clone(),
                    fmt6(point.value),
                    family.to_string(),
                    (position + 1).to_string(),
                    entry.alternative.clone(),
                    fmt6(entry.score),
                ])?;
            }
        }
    }
    finish(writer)
}

/// `subset,value` — one row per criteria subset, ascending cardinality.
pub fn measure_csv(values: &IndexMap<String, f64>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["subset", "value"])?;
    for (subset, value) in values {
        writer.write_record([subset.clone(), fmt6(*value)])?;
    }
    finish(writer)
}

/// Prints to stdout, or writes to `out`; a relative `out` is resolved
/// against [`OUT_DIR_VAR`] when that variable is set.
pub fn write_output(rendered: &str, out: Option<&Path>) -> Result<(), CliError> {
    let Some(path) = out else {
        print!("{rendered}");
        return Ok(());
    };
    let target: PathBuf = match env::var(OUT_DIR_VAR) {
        Ok(dir) if path.is_relative() && !dir.is_empty() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    };
    fs::write(&target, rendered).map_err(|source| CliError::Write {
        path: target,
        source,
    })
}
