//! `srconf`: build, check, search and classify strongly regular
//! configurations from the command line. Every verb prints a JSON
//! [`RunReport`].

pub mod claims;
mod report;
mod verbs;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

pub use report::{ClaimCheck, RunReport, Timing};

pub const VERBS: [&str; 12] = [
    "feasible-table",
    "construct",
    "verify",
    "classify",
    "sdds-check",
    "sdds-search",
    "iso",
    "aut",
    "selfdual",
    "dual",
    "spectrum",
    "reproduce",
];

#[derive(Debug, Parser)]
#[command(name = "srconf", version, about = "Strongly regular configurations")]
pub struct Cli {
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    None,
    ContainsIdentity,
}

/// Configuration arguments (`SOURCE`) are a file in the text or JSON
/// configuration format, or a construction such as `lp4:2:both`,
/// `triangle:7`, `moore:hoffman-singleton` or a JSON construction spec.
#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Feasibility table of primitive (v_k;lambda,mu) with v <= vmax.
    FeasibleTable {
        #[arg(long, default_value_t = 200)]
        vmax: u64,
        /// SRG exclusion list (`v d lambda mu  # tag` per line) instead of the built-in one.
        #[arg(long)]
        exclusions: Option<PathBuf>,
        #[arg(long, conflicts_with = "exclusions")]
        no_exclusions: bool,
        /// Print the aligned table instead of the report.
        #[arg(long)]
        text: bool,
    },
    /// Build a configuration.
    Construct {
        spec: String,
        /// Save the configuration.
        #[arg(long)]
        write: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FileFormat,
    },
    /// Validity, parameters, properness and antiflag spectrum.
    Verify { source: String },
    /// Configurations whose point graph is the given graph.
    Classify {
        /// graph6 or adjacency-matrix file (every graph in it), or a graph
        /// spec such as `paley:13` or `complement:petersen`.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        /// Stop after this many configurations per graph.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check a subset of a group for the SDDS property.
    SddsCheck {
        /// `z13`, `s5`, `q8 x q8`, `frobenius-31-5`, `file:cayley.txt`, ...
        #[arg(long)]
        group: String,
        /// Element names separated by `;`, e.g. `id;(1,2,4);(1,2,5)`.
        #[arg(long, required_unless_present = "indices")]
        set: Option<String>,
        /// Element indices separated by `,`.
        #[arg(long, conflicts_with = "set")]
        indices: Option<String>,
    },
    /// All SDDS of size k in a group.
    SddsSearch {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long, value_enum, default_value = "contains-identity")]
        normalization: NormalizationArg,
        /// Also check each development and group them up to isomorphism.
        #[arg(long)]
        develop: bool,
    },
    /// Whether two configurations are isomorphic.
    Iso { a: String, b: String },
    /// Automorphism group order.
    Aut { source: String },
    /// Whether a configuration is isomorphic to its dual.
    Selfdual { source: String },
    /// The dual configuration.
    Dual {
        source: String,
        #[arg(long)]
        write: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FileFormat,
    },
    /// Antiflag collinearity spectrum and geometry type.
    Spectrum { source: String },
    /// Recompute a published claim and compare.
    Reproduce {
        #[arg(required_unless_present = "list")]
        claim: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

/// What a verb hands back: inputs and results for the report, an optional
/// claim check, and optional text that replaces the JSON on stdout.
pub(crate) struct VerbOutput {
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    pub claim_check: Option<ClaimCheck>,
    pub text: Option<String>,
}

fn usage_error(e: clap::Error) -> Outcome {
    let mut stderr = e.render().to_string();
    if matches!(e.kind(), ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
        stderr.push_str(&format!("\nvalid verbs: {}\n", VERBS.join(", ")));
    }
    Outcome { code: 2, stdout: String::new(), stderr, report: None }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { code: 0, stdout: e.render().to_string(), stderr: String::new(), report: None };
        }
        Err(e) => return usage_error(e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n"), report: None },
    };
    let command = verbs::name(&cli.verb).to_string();
    let start = Instant::now();
    let result = pool.install(|| verbs::dispatch(&cli.verb));
    let wall_us = start.elapsed().as_micros() as u64;
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            return Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n"), report: None };
        }
    };
    let report = RunReport {
        command,
        inputs: out.inputs,
        timing: Timing { wall_us, threads: pool.current_num_threads() },
        results: out.results,
        claim_check: out.claim_check,
    };
    let code = match &report.claim_check {
        Some(c) if !c.matches => 1,
        _ => 0,
    };
    let json = report.to_json() + "\n";
    let mut stdout = out.text.unwrap_or_default();
    let mut stderr = String::new();
    match &cli.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                return Outcome { code: 1, stdout, stderr: format!("error: {e}\n"), report: Some(report) };
            }
        }
        None if stdout.is_empty() => stdout = json,
        None => {}
    }
    if code == 1 {
        stderr.push_str("claim check: mismatch\n");
    }
    Outcome { code, stdout, stderr, report: Some(report) }
}
