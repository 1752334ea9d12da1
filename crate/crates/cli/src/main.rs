use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use casson_cli::{
    brieskorn_report, canonical, run_suite, seifert_report, to_json_string, to_table, torsion_report, Backend, Format,
    GradingArg, RunConfig, EPS_ENV,
};
use clap::{Parser, Subcommand};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "sl2casson", version, about = "SL(2,R) Casson invariants and refined torsions of small 3-manifolds")]
struct Cli {
    /// Tolerance for rank decisions (float backend only).
    #[arg(long, global = true, env = EPS_ENV)]
    eps: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Backend::Float)]
    backend: Backend,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representations, λ and the graded invariant of the Seifert manifold M_{m,n}.
    Seifert {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = GradingArg::Cs24)]
        grading: GradingArg,
    },
    /// Count formula for the Brieskorn sphere Σ(m,p,q), optionally checking a representation.
    Brieskorn {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// JSON file with the generator images.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Torsion of a based cochain complex read from JSON.
    Torsion {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Run a named property suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    let seed = match cli.command {
        Command::Check { seed, .. } => seed,
        _ => 1,
    };
    let cfg = RunConfig::new(cli.eps, cli.backend, cli.output.clone(), seed, cli.format)?;
    let (report, ok): (Value, bool) = match &cli.command {
        Command::Seifert { m, n, grading } => (seifert_report(*m, *n, *grading, cfg.eps)?, true),
        Command::Brieskorn { m, p, q, rep } => {
            let text = rep.as_ref().map(read).transpose()?;
            (brieskorn_report(*m, *p, *q, text.as_deref(), cfg.eps)?, true)
        }
        Command::Torsion { complex } => (torsion_report(&read(complex)?, &cfg)?, true),
        Command::Check { suite, seed } => {
            let r = run_suite(suite, *seed, cfg.eps)?;
            (r.to_json(), r.all_passed())
        }
    };
    let report = canonical(&report);
    let text = match cfg.format {
        Format::Json => to_json_string(&report),
        Format::Table => to_table(&report),
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
