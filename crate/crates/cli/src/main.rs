use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzalg::numerics::TolerancePolicy;
use fuzzalg_cli::grid::{export_csv, resolve};
use fuzzalg_cli::suite::{self, SuiteConfig};
use fuzzalg_cli::{run_report, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use fuzzalg_dsl::{elaborate, parse_str, ExecOptions};

#[derive(Parser)]
#[command(name = "fuzzalg", version, about = "Check fuzzy operator scripts, export surfaces, run the reproduction suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks in a .fz script.
    Run {
        file: PathBuf,
        /// Comparison tolerance.
        #[arg(long)]
        eps: Option<f64>,
        /// Treat a failed sigma(e) = 1 condition as a failure of the run.
        #[arg(long)]
        strict_identity: bool,
    },
    /// Write an operator's values on an n x n grid as CSV.
    Grid {
        op: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Script whose definitions are searched before the built-ins.
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Run the built-in reproduction suite.
    #[command(name = "paper-suite")]
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        eps: Option<f64>,
    },
}

fn policy(eps: Option<f64>) -> Result<TolerancePolicy, String> {
    match eps {
        None => Ok(TolerancePolicy::default()),
        Some(e) => TolerancePolicy::with_eps(e).map_err(|e| e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Run { file, eps, strict_identity } => {
            let text = read(&file)?;
            let opts = ExecOptions { pol: policy(eps)?, strict_identity, ..ExecOptions::default() };
            let (report, ok) = run_report(&text, &opts).map_err(|e| format!("{}:{e}", file.display()))?;
            print!("{report}");
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Grid { op, n, out, script } => {
            let pol = TolerancePolicy::default();
            let checked = match &script {
                Some(path) => {
                    let text = read(path)?;
                    let program = parse_str(&text).map_err(|e| format!("{}:{e}", path.display()))?;
                    Some(elaborate(&program, &pol).map_err(|e| format!("{}:{e}", path.display()))?)
                }
                None => None,
            };
            let op = resolve(&op, checked.as_ref(), &pol).map_err(|e| e.to_string())?;
            let csv = export_csv(&op, n).map_err(|e| e.to_string())?;
            std::fs::write(&out, csv).map_err(|e| format!("{}: {e}", out.display()))?;
            println!("wrote {} rows to {}", n * n, out.display());
            Ok(EXIT_OK)
        }
        Command::Suite { seed, eps } => {
            let cfg = SuiteConfig { seed, pol: policy(eps)? };
            println!("# seed {seed}, eps {}", cfg.pol.eps_leq);
            let mut failed = 0;
            for id in 1..=suite::NAMES.len() {
                let c = suite::criterion(id, &cfg);
                println!("{c}");
                failed += usize::from(!c.passed);
            }
            println!("{} criteria, {failed} failed", suite::NAMES.len());
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code as u8)
}
