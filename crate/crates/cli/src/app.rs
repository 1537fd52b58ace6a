//! Argument definitions and command dispatch.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use hcstd::corpus::{example, DEFAULT_SEED, EXAMPLE_IDS};
use hcstd::par::par_map;
use hcstd::ring::{jacobian_ideal, IdealPresentation};
use hcstd::semistd::{hc_std, AlgorithmReport, HcStdConfig, PointOverride, SemiStdError};
use serde::Serialize;

use crate::report::{to_json, to_text, ReportJson};
use crate::session::{parse_session, Session};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hcstd", version, about = "Standard bases of zero-dimensional ideals in local rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a reduced standard basis.
    Std(Target),
    /// Print the highest corner of the leading ideal.
    Hc(Target),
    /// Print the vector-space dimension of the local algebra.
    Vdim(Target),
    /// Milnor number of a polynomial.
    Milnor(Target),
    /// Tjurina number of a polynomial.
    Tjurina(Target),
    /// Full report: basis, staircase, corner, dimensions, points tried.
    Run(Target),
    /// Time truncated against untruncated runs on built-in examples.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Session file (`-` for stdin).
    #[arg(conflicts_with = "example", required_unless_present = "example")]
    pub session: Option<PathBuf>,
    /// Use built-in example N instead of a session file.
    #[arg(long)]
    pub example: Option<u32>,
    /// Ideal to use (default: the last one declared).
    #[arg(long)]
    pub ideal: Option<String>,
    /// Polynomial for milnor/tjurina (default: the last one declared).
    #[arg(long)]
    pub poly: Option<String>,
    #[command(flatten)]
    pub opts: RunOpts,
}

#[derive(Args, Debug, Clone)]
pub struct RunOpts {
    /// Prime(s) for the probes, tried in order.
    #[arg(long, value_delimiter = ',')]
    pub prime: Vec<u32>,
    /// Parameter values for the first probe.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub point: Option<Vec<i64>>,
    /// Seed for choosing primes and points, and for examples 4 and 8.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Further points to try after a dimension mismatch.
    #[arg(long, default_value_t = 5)]
    pub max_retries: usize,
    /// Skip the probe and compute without its truncation bound.
    #[arg(long)]
    pub no_truncate: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Give up after this many seconds.
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Include wall-clock timings per phase.
    #[arg(long)]
    pub timings: bool,
}

impl RunOpts {
    pub fn config(&self) -> Result<HcStdConfig, String> {
        let timeout = match self.timeout {
            Some(t) if !(t > 0.0 && t.is_finite()) => return Err(format!("invalid timeout {t}")),
            t => t.map(Duration::from_secs_f64),
        };
        Ok(HcStdConfig {
            seed: self.seed,
            max_retries: self.max_retries,
            overrides: PointOverride {
                primes: self.prime.clone(),
                point: self.point.clone(),
            },
            no_truncate: self.no_truncate,
            timeout,
            ..HcStdConfig::default()
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    /// Examples to run.
    #[arg(long, value_delimiter = ',', default_values_t = EXAMPLE_IDS.to_vec())]
    pub examples: Vec<u32>,
    /// Per-run limit in seconds.
    #[arg(long, default_value_t = 1800.0)]
    pub timeout: f64,
    /// Seed for examples 4 and 8.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

/// Text for stdout and stderr plus the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
            code,
        }
    }
}

pub fn exit_code(e: &SemiStdError) -> i32 {
    match e {
        SemiStdError::NotZeroDimensional | SemiStdError::ExhaustedRetries(_) => EXIT_MATH,
        SemiStdError::Timeout => EXIT_TIMEOUT,
        SemiStdError::Config(_) | SemiStdError::Coeff(_) => EXIT_CONFIG,
    }
}

fn load_session(target: &Target) -> Result<Session, String> {
    if let Some(id) = target.example {
        let ex = example(id, target.opts.seed).ok_or_else(|| format!("no built-in example {id}"))?;
        return parse_session(&ex.session).map_err(|e| e.to_string());
    }
    let path = target.session.as_ref().expect("clap requires a session or an example");
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_session(&text).map_err(|e| match target.session.as_ref() {
        Some(p) if p.as_os_str() != "-" => format!("{}: {e}", p.display()),
        _ => e.to_string(),
    })
}

#[derive(Serialize)]
struct NumberJson {
    milnor: Option<u64>,
    tjurina: Option<u64>,
    report: ReportJson,
}

fn render(text: String) -> String {
    if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

fn run_target(cmd: &Command, target: &Target) -> Outcome {
    let session = match load_session(target) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_CONFIG, e),
    };
    let cfg = match target.opts.config() {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_CONFIG, e),
    };
    let ideal: IdealPresentation = match cmd {
        Command::Milnor(_) | Command::Tjurina(_) => {
            let f = match session.target_poly(target.poly.as_deref()) {
                Ok(f) => f,
                Err(e) => return Outcome::fail(EXIT_CONFIG, e),
            };
            if f.is_zero() {
                return Outcome::fail(EXIT_MATH, "the zero polynomial has no isolated singularity");
            }
            jacobian_ideal(f, &session.domain, matches!(cmd, Command::Tjurina(_)))
        }
        _ => match session.target_ideal(target.ideal.as_deref()) {
            Ok(i) => i.clone(),
            Err(e) => return Outcome::fail(EXIT_CONFIG, e),
        },
    };
    let report = match hc_std(&ideal, &cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit_code(&e), e.to_string()),
    };
    let opts = &target.opts;
    Outcome::ok(if opts.json {
        match cmd {
            Command::Milnor(_) | Command::Tjurina(_) => {
                let n = Some(report.d0);
                let tj = matches!(cmd, Command::Tjurina(_));
                json_line(&NumberJson {
                    milnor: (!tj).then_some(n).flatten(),
                    tjurina: tj.then_some(n).flatten(),
                    report: to_json(&report, opts.timings),
                })
            }
            _ => json_line(&to_json(&report, opts.timings)),
        }
    } else {
        render(text_for(cmd, &report, opts.timings))
    })
}

fn text_for(cmd: &Command, report: &AlgorithmReport, timings: bool) -> String {
    let names = report.ring.vars();
    match cmd {
        Command::Std(_) => report
            .basis
            .elements
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Command::Hc(_) => report.hc0.display(names),
        Command::Vdim(_) | Command::Milnor(_) | Command::Tjurina(_) => report.d0.to_string(),
        _ => to_text(report, timings),
    }
}

/// One benchmark row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub example: u32,
    pub truncated_ms: Option<f64>,
    pub untruncated_ms: Option<f64>,
}

impl BenchRow {
    pub fn csv(&self, timeout_ms: f64) -> String {
        let cell = |v: Option<f64>| v.map_or("TIMEOUT".to_string(), |x| format!("{x:.1}"));
        let speedup = match (self.truncated_ms, self.untruncated_ms) {
            (Some(t), Some(u)) => format!("{:.2}", u / t.max(1e-3)),
            // The untruncated run hit the limit: the ratio is at least this.
            (Some(t), None) => format!(">{:.2}", timeout_ms / t.max(1e-3)),
            _ => "-".to_string(),
        };
        format!(
            "{},{},{},{}",
            self.example,
            cell(self.truncated_ms),
            cell(self.untruncated_ms),
            speedup
        )
    }
}

fn timed(ideal: &IdealPresentation, cfg: &HcStdConfig) -> Result<Option<f64>, SemiStdError> {
    let start = Instant::now();
    match hc_std(ideal, cfg) {
        Ok(_) => Ok(Some(start.elapsed().as_secs_f64() * 1000.0)),
        Err(SemiStdError::Timeout) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs truncated and untruncated computations on each example. Examples
/// may run concurrently; rows come back in the requested order.
pub fn bench(args: &BenchArgs) -> Result<Vec<BenchRow>, String> {
    if !(args.timeout > 0.0 && args.timeout.is_finite()) {
        return Err(format!("invalid timeout {}", args.timeout));
    }
    let mut ideals = Vec::new();
    for &id in &args.examples {
        let ex = example(id, args.seed).ok_or_else(|| format!("no built-in example {id}"))?;
        ideals.push((id, ex.ideal));
    }
    let limit = Duration::from_secs_f64(args.timeout);
    let rows = par_map(&ideals, |(id, ideal)| -> Result<BenchRow, String> {
        let base = HcStdConfig {
            seed: args.seed,
            timeout: Some(limit),
            ..HcStdConfig::default()
        };
        let truncated_ms = timed(ideal, &base).map_err(|e| format!("example {id}: {e}"))?;
        let untruncated = HcStdConfig {
            no_truncate: true,
            ..base
        };
        let untruncated_ms = timed(ideal, &untruncated).map_err(|e| format!("example {id}: {e}"))?;
        Ok(BenchRow {
            example: *id,
            truncated_ms,
            untruncated_ms,
        })
    });
    rows.into_iter().collect()
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Bench(args) => match bench(args) {
            Ok(rows) => {
                let mut out = String::from("example,truncated_ms,untruncated_ms,speedup\n");
                for r in rows {
                    out.push_str(&r.csv(args.timeout * 1000.0));
                    out.push('\n');
                }
                Outcome::ok(out)
            }
            Err(e) => Outcome::fail(EXIT_CONFIG, e),
        },
        cmd @ (Command::Std(t)
        | Command::Hc(t)
        | Command::Vdim(t)
        | Command::Milnor(t)
        | Command::Tjurina(t)
        | Command::Run(t)) => run_target(cmd, t),
    }
}
