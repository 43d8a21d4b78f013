use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

mod output;
mod presets;
mod run;
mod scenario;

use output::Table;
use scenario::Scenario;

/// Spread complexity, quenches, Floquet driving and work statistics for free-fermion chains.
#[derive(Parser)]
#[command(name = "spread", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Compute {
    /// Override the number of Simpson intervals on [0, pi] (even)
    #[arg(long)]
    grid: Option<usize>,
    /// Worker threads (0 = all cores)
    #[arg(long, env = "SPREAD_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scenario file and write a CSV plus manifest
    Run {
        file: PathBuf,
        /// CSV path; defaults to `<name>.csv` in the current directory
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        compute: Compute,
    },
    /// Evaluate a built-in preset
    Preset {
        name: String,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Print the preset's scenario TOML instead of running it
        #[arg(long)]
        show: bool,
        #[command(flatten)]
        compute: Compute,
    },
    /// List built-in presets
    ListPresets,
}

fn prepare(mut scenarios: Vec<Scenario>, compute: &Compute) -> Result<Vec<Scenario>> {
    if let Some(n) = compute.grid {
        for s in &mut scenarios {
            s.grid_mut().intervals = n;
            s.validate().context("--grid")?;
        }
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(compute.threads)
        .build_global()
        .context("starting worker threads")?;
    Ok(scenarios)
}

fn evaluate_all(scenarios: &[Scenario]) -> Result<Vec<Table>> {
    scenarios
        .iter()
        .map(|s| {
            run::evaluate(s).with_context(|| format!("scenario `{}` ({})", s.name(), s.kind()))
        })
        .collect()
}

fn report(paths: Vec<PathBuf>) {
    for p in paths {
        println!("wrote {}", p.display());
    }
}

fn main_inner(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { file, out, compute } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let parsed =
                Scenario::parse(&text).with_context(|| format!("in {}", file.display()))?;
            let scenarios = prepare(vec![parsed], &compute)?;
            let tables = evaluate_all(&scenarios)?;
            let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.csv", scenarios[0].name())));
            let outputs: Vec<_> = tables
                .into_iter()
                .map(|t| (path.clone(), &scenarios[0], t))
                .collect();
            report(output::write_all(&outputs)?);
        }
        Command::Preset {
            name,
            out,
            show,
            compute,
        } => {
            let Some(preset) = presets::find(&name) else {
                bail!(
                    "unknown preset `{name}`; run `spread list-presets` to see the available names"
                );
            };
            if show {
                for (i, s) in preset.scenarios().iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", s.to_toml());
                }
                return Ok(());
            }
            let scenarios = prepare(preset.scenarios(), &compute)?;
            let tables = evaluate_all(&scenarios)?;
            let outputs: Vec<_> = scenarios
                .iter()
                .zip(tables)
                .map(|(s, t)| (out.join(format!("{}.csv", s.name())), s, t))
                .collect();
            report(output::write_all(&outputs)?);
        }
        Command::ListPresets => {
            let width = presets::PRESETS
                .iter()
                .map(|p| p.name.len())
                .max()
                .unwrap_or(0);
            for p in presets::PRESETS {
                println!("{:width$}  {}", p.name, p.description);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
