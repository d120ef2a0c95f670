//! `lingreg`: linguistic-survey fuzzy regression, end to end.

use clap::{Parser, Subcommand};
use lingreg_cli::config::RunConfig;
use lingreg_cli::survey::Survey;
use lingreg_cli::{demo, lpfile, pipeline, plot, report, CliError};
use lingreg_core::lp::{self, LpStatus};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Parser)]
#[command(
    name = "lingreg",
    about = "Turn linguistic survey data into fuzzy random variables, fit an \
             interval regression model, and evaluate it"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a survey file.
    Analyze {
        /// Survey file (comma-separated rows).
        survey: PathBuf,
        /// Run configuration (key = value text).
        #[arg(long)]
        config: PathBuf,
        /// Where to write the structured report.
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG plot of observed vs predicted intervals.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Omit the timestamp so identical inputs give identical reports.
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Run the bundled case study and diff it against the published values.
    DemoPaper {
        /// Also print the full analysis report.
        #[arg(long)]
        verbose: bool,
    },
    /// Solve a linear program from a text file (debug utility).
    LpSolve {
        /// Program file (minimize/kinds/row directives).
        file: PathBuf,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: 0,
        column: 0,
        message: format!("cannot read file: {e}"),
    })
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|e| CliError::Internal {
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            survey,
            config,
            out,
            plot: plot_path,
            no_timestamp,
        } => {
            let survey_text = read_file(&survey)?;
            let config_text = read_file(&config)?;
            let parsed_survey = Survey::parse(&survey.display().to_string(), &survey_text)?;
            let parsed_config = RunConfig::parse(&config.display().to_string(), &config_text)?;
            let outcome = pipeline::analyze(&parsed_survey, &parsed_config)?;
            let timestamp = if no_timestamp {
                None
            } else {
                Some(
                    SystemTime::now()
                        .duration_since(UNIX_EPOCH)
                        .map(|d| d.as_secs())
                        .unwrap_or(0),
                )
            };
            write_file(&out, &report::render(&outcome, timestamp))?;
            if let Some(p) = plot_path {
                write_file(&p, &plot::render(&outcome))?;
            }
            println!(
                "analyzed {} observations x {} inputs; objective {:.6}; report: {}",
                outcome.observations.len(),
                outcome.input_groups.len(),
                outcome.fit.objective,
                out.display()
            );
            Ok(())
        }
        Command::DemoPaper { verbose } => {
            let demo_report = demo::run()?;
            print!("{}", demo::render(&demo_report, verbose));
            Ok(())
        }
        Command::LpSolve { file } => {
            let text = read_file(&file)?;
            let program = lpfile::parse(&file.display().to_string(), &text)?;
            let solution = lp::solve(&program).map_err(|e| CliError::Internal {
                message: e.to_string(),
            })?;
            match solution.status {
                LpStatus::Optimal => {
                    println!("status = optimal");
                    println!("objective = {:.9}", solution.objective);
                    for (i, v) in solution.values.iter().enumerate() {
                        println!("x{} = {v:.9}", i + 1);
                    }
                }
                LpStatus::Infeasible => println!("status = infeasible"),
                LpStatus::Unbounded => println!("status = unbounded"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
