//! Command-line front end: identity suites, straightening, module
//! construction and verification, classification, all reported as JSON.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{confluence_suite, load_module, ConfluenceSummary};
pub use report::{Outcome, Report, Status, SCHEMA};

pub const DEFAULT_CAP: u32 = 8;
pub const DEFAULT_DEPTH: usize = 12;
pub const DEFAULT_TRIALS: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "qycli", version, about = "Exact computations with RTT-type quantum algebras and their modules")]
pub struct Cli {
    /// Omit the timing field so that repeated runs give byte-identical reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Yang-Baxter equation for the constant R-matrix.
    Ybe {
        #[arg(long)]
        n: usize,
    },
    /// Inversion and swap identities of the trigonometric R-matrix.
    TrigId {
        #[arg(long)]
        n: usize,
    },
    /// Rewrites an expression as a combination of ordered monomials.
    Straighten {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Random words straightened by two strategies, plus idempotence and linearity.
    Confluence {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_level: u32,
    },
    /// Linear independence of the images of ordered monomials under the
    /// comultiplication-type map into tensor powers.
    KappaCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        len: usize,
    },
    /// Builds modules and writes them in the module JSON format.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Evaluates the defining relations on a module file.
    Verify {
        #[arg(long)]
        module: PathBuf,
    },
    Classify(ClassifyArgs),
    /// q-spirals.
    Spiral {
        #[command(subcommand)]
        cmd: SpiralCmd,
    },
    /// Closed-form Drinfeld polynomials.
    Drinfeld {
        #[command(subcommand)]
        cmd: DrinfeldCmd,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    /// Irreducible U_q(gl_2)-module L(α, β).
    Gl2,
    /// Irreducible U'_q(sp_2)-module V(μ; μ').
    Uqsp2,
}

#[derive(Subcommand, Debug)]
pub enum ModuleCmd {
    Build {
        #[arg(long, value_enum)]
        kind: BuildKind,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mup: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Tensor {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Restriction of a quantum affine gl_2n module to the twisted q-Yangian.
    Restrict {
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluation module of a U_q(gl_N) or U'_q(sp_2) module.
    Eval {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifyKind {
    Gl2,
    #[value(name = "glN")]
    GlN,
    Sp2,
    Sp2n,
}

/// Tensor-product irreducibility and Drinfeld polynomials.
#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_enum)]
    pub kind: ClassifyKind,
    /// Pairs `α,β` separated by `;` (gl2, sp2).
    #[arg(long, allow_hyphen_values = true)]
    pub pairs: Option<String>,
    /// Non-increasing exponents `m_1,...,m_N` (glN).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Module file over the twisted q-Yangian (sp2n).
    #[arg(long)]
    pub module: Option<PathBuf>,
    /// Finite highest weight `μ_1,...,μ_n` (sp2n without a module).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mup: Option<String>,
    /// Degree bound for the rational reconstruction of highest weight series.
    #[arg(long, default_value_t = 3)]
    pub dmax: usize,
}

#[derive(Subcommand, Debug)]
pub enum SpiralCmd {
    /// General position of the q-spirals of two pairs.
    Gp {
        #[arg(long, allow_hyphen_values = true)]
        pair1: String,
        #[arg(long, allow_hyphen_values = true)]
        pair2: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum DrinfeldCmd {
    /// Evaluation modules over the twisted q-Yangian of sp_2n.
    EvalSp {
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

/// Exit code and the text for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    RunOutput { code: 0, stdout: text, stderr: String::new() }
                }
                _ => RunOutput { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let command: Vec<String> = argv.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let outcome = match commands::dispatch(&cli.cmd) {
        Ok(o) => o,
        Err(commands::CliError::Usage(msg)) => {
            return RunOutput {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {}\n\nFor more information, try '--help'.", msg),
            };
        }
        Err(commands::CliError::Fail(msg)) => Outcome {
            status: Status::Fail,
            result: serde_json::Value::Null,
            reason: Some(msg),
            witness: Some(serde_json::Value::Null),
            seed: None,
        },
    };
    let timing = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    let report = Report::new(command, outcome, timing);
    RunOutput { code: report.exit_code(), stdout: report.to_json_string(), stderr: String::new() }
}
