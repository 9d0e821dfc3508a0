//! Argument surface and command dispatch.

use std::path::PathBuf;

use caspas_core::{
    leave_one_out_subsets, run_caspas, run_topsis, run_weighted, sweep, validity_condition1,
    validity_conditions_2_3, CaspasConfig, Condition1Report, Conditions23Report, ExpertAggregator,
    Family, FuzzyMeasure, LambdaParams, SweepAxis, TopsisParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::Serialize;

use crate::error::CliError;
use crate::output::{
    closeness_csv, measure_csv, ranking_csv, render_json, sweep_csv, write_output, Format,
};
use crate::problem::{load_problem, load_replacement};

/// Group decision analysis with disc intuitionistic fuzzy values.
#[derive(Debug, Parser)]
#[command(name = "caspas", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the alternatives with the Choquet-integral procedure.
    Solve(SolveArgs),
    /// Re-rank across a grid of epsilon or xi values, in both radius families.
    Sweep(SweepArgs),
    /// Rank with a comparator method: plain weighted operators, or TOPSIS.
    Compare(CompareArgs),
    /// Check ranking validity: worse-replacement and sub-problem consistency.
    Validate(ValidateArgs),
    /// Print the lambda-measure of every criteria subset.
    Measure(MeasureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Radii combine multiplicatively (never grow).
    Q,
    /// Radii combine by probabilistic sum (never shrink).
    P,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::Q => Family::Q,
            FamilyArg::P => Family::P,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpertArg {
    /// Weighted averaging of expert assessments.
    Arithmetic,
    /// Weighted geometric combination.
    Geometric,
}

impl From<ExpertArg> for ExpertAggregator {
    fn from(arg: ExpertArg) -> Self {
        match arg {
            ExpertArg::Arithmetic => ExpertAggregator::Arithmetic,
            ExpertArg::Geometric => ExpertAggregator::Geometric,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    Epsilon,
    Xi,
}

impl From<AxisArg> for SweepAxis {
    fn from(arg: AxisArg) -> Self {
        match arg {
            AxisArg::Epsilon => SweepAxis::Epsilon,
            AxisArg::Xi => SweepAxis::Xi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Weighted sum and product models blended like the main procedure.
    Wsmwpm,
    /// Closeness to ideal and anti-ideal reference points.
    Topsis,
}

/// Engine parameters shared by every analysis command.
#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// Weight of the sum model in the final blend (0 = product model only,
    /// 1 = sum model only).
    #[arg(long, default_value_t = 0.3)]
    pub epsilon: f64,
    /// Attitude weight in scores: the share given to membership versus
    /// radius information.
    #[arg(long, default_value_t = 0.8)]
    pub xi: f64,
    /// Interaction parameter of the lambda measure (> -1; 0 is additive).
    #[arg(long, default_value_t = 0.5)]
    pub lambda: f64,
    /// Radius family used from the Choquet stage on.
    #[arg(long, value_enum, default_value_t = FamilyArg::Q)]
    pub family: FamilyArg,
    /// How expert assessments are combined.
    #[arg(long, value_enum, default_value_t = ExpertArg::Arithmetic)]
    pub experts: ExpertArg,
}

impl ConfigArgs {
    pub fn to_config(&self) -> Result<CaspasConfig, CliError> {
        let config = CaspasConfig {
            epsilon: self.epsilon,
            xi: self.xi,
            lambda: self.lambda,
            family: self.family.into(),
            expert_aggregator: self.experts.into(),
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout; relative paths resolve against
    /// $CASPAS_OUT_DIR when it is set.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Problem description (JSON).
    pub problem: PathBuf,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Problem description (JSON).
    pub problem: PathBuf,
    /// Parameter to vary.
    #[arg(long, value_enum)]
    pub axis: AxisArg,
    /// Inclusive grid `start:end:step`, for example `0.1:0.9:0.1`.
    #[arg(long)]
    pub grid: String,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Problem description (JSON).
    pub problem: PathBuf,
    /// Comparator to run.
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// Minkowski exponent for TOPSIS distances (>= 1).
    #[arg(long, default_value_t = 3)]
    pub beta: u32,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Problem description (JSON).
    pub problem: PathBuf,
    /// JSON file with replacement assessments for one non-optimal
    /// alternative; enables the worse-replacement check.
    #[arg(long)]
    pub replacement: Option<PathBuf>,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Interaction parameter (> -1; 0 gives the additive measure).
    #[arg(long)]
    pub lambda: f64,
    /// Comma-separated criterion densities, e.g. `0.326,0.258,0.232,0.184`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<f64>,
    /// Comma-separated criterion names (default `C1,...,Ck`).
    #[arg(long, value_delimiter = ',')]
    pub names: Option<Vec<String>>,
    /// Scale the densities to sum to one before building the measure.
    #[arg(long)]
    pub renormalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Combined output of `validate`.
#[derive(Debug, Serialize)]
pub struct ValidateOutput {
    /// Worse-replacement check; present when `--replacement` was given.
    pub replacement: Option<Condition1Report>,
    /// Leave-one-out sub-problem consistency checks.
    pub sub_problems: Conditions23Report,
}

/// Output of `measure`.
#[derive(Debug, Serialize)]
pub struct MeasureOutput {
    pub lambda: f64,
    pub weights: Vec<f64>,
    pub values: IndexMap<String, f64>,
}

/// Parses `start:end:step` into an inclusive grid of parameter values.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Grid(text.to_string());
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let numbers: Vec<f64> = parts
        .iter()
        .map(|part| part.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let (start, end, step) = (numbers[0], numbers[1], numbers[2]);
    let in_range = |x: f64| x.is_finite() && (0.0..=1.0).contains(&x);
    if !in_range(start) || !in_range(end) || !step.is_finite() || step <= 0.0 || start > end {
        return Err(bad());
    }
    let count = ((end - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

/// Runs one parsed invocation end to end. Output is rendered fully before
/// anything is written, so failures never leave partial output behind.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let (rendered, output) = match cli.command {
        Command::Solve(args) => (cmd_solve(&args)?, args.output),
        Command::Sweep(args) => (cmd_sweep(&args)?, args.output),
        Command::Compare(args) => (cmd_compare(&args)?, args.output),
        Command::Validate(args) => (cmd_validate(&args)?, args.output),
        Command::Measure(args) => (cmd_measure(&args)?, args.output),
    };
    write_output(&rendered, output.out.as_deref())
}

fn cmd_solve(args: &SolveArgs) -> Result<String, CliError> {
    let problem = load_problem(&args.problem)?;
    let config = args.config.to_config()?;
    let result = run_caspas(&problem, &config)?;
    match args.output.format {
        Format::Json => render_json(&result),
        Format::Csv => ranking_csv(&result),
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<String, CliError> {
    let problem = load_problem(&args.problem)?;
    let config = args.config.to_config()?;
    let grid = parse_grid(&args.grid)?;
    let report = sweep(&problem, &config, args.axis.into(), &grid)?;
    match args.output.format {
        Format::Json => render_json(&report),
        Format::Csv => sweep_csv(&report),
    }
}

fn cmd_compare(args: &CompareArgs) -> Result<String, CliError> {
    let problem = load_problem(&args.problem)?;
    let config = args.config.to_config()?;
    match args.method {
        MethodArg::Wsmwpm => {
            let result = run_weighted(&problem, &config)?;
            match args.output.format {
                Format::Json => render_json(&result),
                Format::Csv => ranking_csv(&result),
            }
        }
        MethodArg::Topsis => {
            let params = TopsisParams::new(args.beta)?;
            let result = run_topsis(&problem, &config, params)?;
            match args.output.format {
                Format::Json => render_json(&result),
                Format::Csv => closeness_csv(&result),
            }
        }
    }
}

fn cmd_validate(args: &ValidateArgs) -> Result<String, CliError> {
    if args.output.format == Format::Csv {
        return Err(CliError::CsvUnavailable);
    }
    let problem = load_problem(&args.problem)?;
    let config = args.config.to_config()?;
    let replacement = args
        .replacement
        .as_deref()
        .map(|path| {
            let table = load_replacement(path, &problem)?;
            validity_condition1(&problem, &config, &table).map_err(CliError::from)
        })
        .transpose()?;
    let subsets = leave_one_out_subsets(problem.alternatives());
    let sub_problems = validity_conditions_2_3(&problem, &config, &subsets)?;
    render_json(&ValidateOutput {
        replacement,
        sub_problems,
    })
}

fn cmd_measure(args: &MeasureArgs) -> Result<String, CliError> {
    let weights = if args.renormalize {
        caspas_core::renormalize_weights(&args.weights)?
    } else {
        args.weights.clone()
    };
    let params = LambdaParams::new(args.lambda, weights.clone())?;
    let measure = FuzzyMeasure::from_lambda(&params)?;
    let names: Vec<String> = match &args.names {
        Some(names) => names.clone(),
        None => (1..=weights.len()).map(|i| format!("C{i}")).collect(),
    };
    let values = measure.named_values(&names)?;
    match args.output.format {
        Format::Json => render_json(&MeasureOutput {
            lambda: args.lambda,
            weights,
            values,
        }),
        Format::Csv => measure_csv(&values),
    }
}
