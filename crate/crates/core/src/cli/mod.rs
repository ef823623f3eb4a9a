//! Command-line front end: instance files, generation, solving with SVG
//! output, and fuzzing.

pub mod fuzz;
pub mod generate;
pub mod instance;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::assemble::{solve, CyclePair, CROSSING_BOUND};
use crate::error::{Error, Result};

use self::fuzz::{run_fuzz, FuzzConfig};
use self::generate::{generate, Shape};
use self::instance::InstanceFile;

pub const SEED_ENV: &str = "RB_CYCLES_SEED";

#[derive(Debug, Parser)]
#[command(name = "rb-cycles", version, about = "Red and blue spanning cycles with at most three crossings per edge")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random general-position instance.
    Generate {
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        n_red: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        n_blue: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Shape::Random)]
        shape: Shape,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve an instance and report crossings.
    Solve {
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Draw the pivot, blob hulls and jump edges in the SVG.
        #[arg(long)]
        trace: bool,
    },
    /// Solve and check many random instances.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Also compare with exhaustive enumeration on small instances.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
pub struct SolveReport<'a> {
    pub valid: bool,
    pub max_count: usize,
    #[serde(flatten)]
    pub pair: &'a CyclePair,
}

pub fn solve_report_json(pair: &CyclePair) -> String {
    let report = SolveReport { valid: pair.crossings.is_valid(CROSSING_BOUND), max_count: pair.crossings.max_count, pair };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes()).map_err(|e| Error::Input(format!("stdout: {e}")))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        1
    } else {
        2
    }
}

/// Runs a parsed command and returns the process exit code: 0 on success,
/// 1 for bad input, 2 for a failed internal check.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Generate { n_red, n_blue, seed, shape, output } => {
            generate(n_red as usize, n_blue as usize, seed, shape).and_then(|f| emit(output.as_deref(), &f.to_json())).map(|_| 0)
        }
        Command::Solve { input, svg, json, trace } => cmd_solve(&input, svg.as_deref(), json.as_deref(), trace),
        Command::Fuzz { trials, max_n, seed, oracle, json } => cmd_fuzz(FuzzConfig { trials, max_n, seed, oracle }, json.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_solve(input: &Path, svg_path: Option<&Path>, json: Option<&Path>, trace: bool) -> Result<i32> {
    let file = InstanceFile::load(input)?;
    let points = file.points();
    let pair = solve(&points)?;
    if let Some(p) = svg_path {
        write_file(p, &svg::render(&points, &pair, trace))?;
    }
    emit(json, &solve_report_json(&pair))?;
    if json.is_some() {
        println!("max crossings per edge: {}", pair.crossings.max_count);
    }
    Ok(if pair.crossings.is_valid(CROSSING_BOUND) { 0 } else { 2 })
}

fn cmd_fuzz(cfg: FuzzConfig, json: Option<&Path>) -> Result<i32> {
    let summary = run_fuzz(&cfg)?;
    let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    text.push('\n');
    emit(json, &text)?;
    if json.is_some() {
        println!("{} trials, {} failures", summary.trials, summary.failures.len());
    }
    Ok(if summary.ok() { 0 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_split_input_from_internal_errors() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 1);
        assert_eq!(exit_code(&Error::Input("x".into())), 1);
        assert_eq!(exit_code(&Error::InternalInvariantViolation("x".into())), 2);
        assert_eq!(exit_code(&Error::NonTermination(9)), 2);
    }

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from(["rb-cycles", "generate", "3", "4", "--seed", "7", "--shape", "contain"]).unwrap();
        assert!(matches!(cli.command, Command::Generate { n_red: 3, n_blue: 4, seed: 7, shape: Shape::Contain, .. }));
        assert!(Cli::try_parse_from(["rb-cycles", "generate", "2", "4"]).is_err());
    }
}
