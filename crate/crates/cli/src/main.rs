use clap::{Parser, Subcommand};
use reductionlab_cli::{execute, registry, verify, CliError, Context, RunReport, ScenarioConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "reductionlab", version, about = "Run and verify reduction experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the available scenarios.
    List,
    /// Run one scenario and write its CSV table and JSON report.
    Run {
        scenario: String,
        /// Parameter override as `key=value`; may be repeated.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Run every scenario (or those matching the filter) with default parameters.
    Verify {
        #[arg(long)]
        filter: Option<String>,
    },
}

fn print_checks(report: &RunReport) {
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<36} residual {:.3e} tolerance {:.3e}", c.name, c.residual, c.tolerance);
    }
    for n in &report.notes {
        println!("note: {n}");
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let ctx = || Context::from_env().map_err(CliError::Config);
    match cli.command {
        Command::List => {
            for s in registry() {
                println!("{:<20} {:<14} {}", s.name, s.module, s.topic);
            }
            Ok(true)
        }
        Command::Run { scenario, params, out, config } => {
            let mut cfg = match config {
                Some(path) => ScenarioConfig::from_file(&path)?,
                None => ScenarioConfig::new(&scenario),
            };
            cfg.scenario = scenario;
            cfg.apply_assignments(&params)?;
            if let Some(dir) = out {
                cfg.output_dir = dir;
            }
            let ctx = ctx()?;
            let (report, artifacts) = execute(&cfg, &ctx)?;
            println!("{} (seed {}, {:.2}s)", report.scenario, report.seed, report.wall_clock_s);
            print_checks(&report);
            println!("wrote {} and {}", artifacts.csv.display(), artifacts.report.display());
            Ok(report.passed())
        }
        Command::Verify { filter } => {
            let report = verify(filter.as_deref(), &ctx()?)?;
            print!("{}", report.render());
            let failures = report.failures();
            if failures.is_empty() {
                println!("all checks passed");
            } else {
                println!("failed checks: {}", failures.join(", "));
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
