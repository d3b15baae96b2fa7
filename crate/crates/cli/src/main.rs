mod calculus;
mod suites;
mod tables;
mod target;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hact_core::ncalg::PresentationError;
use hact_core::report::Report;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use target::Loaded;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "hact", version, about = "Verify Hopf algebroids and their covariant calculi")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites; exit status 1 on any failure.
    Verify(Common),
    /// Print generator tables.
    Table(Common),
    /// Build the calculus of a left ideal given by generators.
    Calculus {
        #[command(flatten)]
        common: Common,
        /// Ideal generators, each in the counit kernel.
        ideal: Vec<String>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    preset: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    /// Comma separated; all applicable suites when absent.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    checks: Option<Vec<Check>>,
    #[arg(long, value_enum)]
    what: Option<What>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Hopf,
    Tch,
    Takeuchi,
    Counit,
    Leibniz,
    Covariance,
    Fundamental,
    Galois,
    Kernel,
    Calculus,
    MaurerCartan,
    Roundtrip,
}

impl Check {
    pub fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Delta,
    Counit,
    Translation,
    D,
    MaurerCartan,
}

impl What {
    pub fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Report,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("{0} is not supported")]
    Unsupported(String),
    #[error("cannot parse {0}: {1}")]
    Parse(String, String),
    #[error("{0} has degree {1}, above --max-degree {2}")]
    Truncation(String, usize, usize),
    #[error(transparent)]
    Calculus(#[from] hact_core::calculus::CalculusError),
    #[error("table needs --what")]
    MissingWhat,
    #[error("cannot write {0}: {1}")]
    Io(PathBuf, std::io::Error),
}

fn load(c: &Common) -> Result<Loaded, CliError> {
    Ok(match (&c.preset, &c.file) {
        (_, Some(p)) => target::from_file(p)?,
        (Some(n), None) => target::from_preset(n)?,
        (None, None) => unreachable!("clap requires one of them"),
    })
}

fn all_checks() -> Vec<Check> {
    Check::value_variants().to_vec()
}

pub fn summary(reports: &[Report]) -> (usize, usize) {
    let checks = reports.iter().map(|r| r.entries.len()).sum();
    let fails = reports.iter().map(|r| r.failure_count()).sum();
    (checks, fails)
}

pub fn render_reports(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!("{}: {} checks, {} failures\n", r.suite, r.entries.len(), r.failure_count()));
        for e in r.failures() {
            s.push_str(&format!("  FAIL {} [{}]: {}\n", e.id, e.element, e.witness.as_deref().unwrap_or("")));
        }
        for n in &r.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        for a in &r.assumptions {
            s.push_str(&format!("  assumes: {a}\n"));
        }
    }
    let (checks, fails) = summary(reports);
    s.push_str(&format!("total: {checks} checks, {fails} failures\n"));
    s
}

fn emit(c: &Common, text: String) -> Result<(), CliError> {
    match &c.out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn verify(c: &Common) -> Result<bool, CliError> {
    let mut loaded = load(c)?;
    let degree = c.max_degree as usize;
    let checks = c.checks.clone().unwrap_or_else(all_checks);
    let reports = suites::run(&mut loaded, &checks, degree)?;
    let (n, fails) = summary(&reports);
    let text = match c.format {
        Format::Table => format!("{} ({}), max degree {degree}\n{}", loaded.name, loaded.target.kind(), render_reports(&reports)),
        Format::Report => pretty(json!({
            "command": "verify",
            "target": loaded.name,
            "kind": loaded.target.kind(),
            "max_degree": degree,
            "checks": n,
            "failures": fails,
            "suites": reports,
        })),
    };
    emit(c, text)?;
    Ok(fails == 0)
}

fn table(c: &Common) -> Result<bool, CliError> {
    let loaded = load(c)?;
    let what = c.what.ok_or(CliError::MissingWhat)?;
    let t = tables::table(&loaded.target, what, &[], c.max_degree as usize)?;
    let text = match c.format {
        Format::Table => t.text(),
        Format::Report => pretty(json!({"target": loaded.name, "table": t.json()})),
    };
    emit(c, text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Cmd::Verify(c) => verify(c),
        Cmd::Table(c) => table(c),
        Cmd::Calculus { common, ideal } => calculus::run(common, ideal),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
