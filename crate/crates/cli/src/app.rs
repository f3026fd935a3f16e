use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::commands;
use crate::config::{ConfigSource, RunConfig, KEYS_HELP};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "geodesic", version, about = "Straightest discrete geodesics on a spacetime lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Run configuration (key = value lines).
    config: PathBuf,
    /// Override a config key; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Directory for output files (overrides `output_dir`).
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// Print nothing on success.
    #[arg(short, long)]
    quiet: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lattice run: trajectory table and apsides report.
    #[command(after_help = KEYS_HELP)]
    Run(RunArgs),
    /// Continuum geodesic from the same start, sampled on the lattice timeline.
    #[command(after_help = KEYS_HELP)]
    Reference(RunArgs),
    /// Both engines side by side with a per-step difference table.
    #[command(after_help = KEYS_HELP)]
    Compare(RunArgs),
    /// Apsides of an existing trajectory or reference table.
    Analyze {
        table: PathBuf,
        /// Mass parameter in cm; enables the theoretical-shift lines.
        #[arg(long)]
        m_cm: Option<f64>,
        /// Write `<stem>_apsides.txt` and `.csv` here.
        #[arg(long)]
        output_dir: Option<PathBuf>,
        #[arg(short, long)]
        quiet: bool,
    },
}

fn load(args: &RunArgs) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(&args.config)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", args.config.display())))?;
    let in_file = |source| CliError::Config { path: args.config.clone(), source };
    let mut src = ConfigSource::parse(&text).map_err(in_file)?;
    for pair in &args.set {
        src.set_pair(pair).map_err(in_file)?;
    }
    if let Some(dir) = &args.output_dir {
        src.set("output_dir", &dir.to_string_lossy()).map_err(in_file)?;
    }
    src.build().map_err(in_file)
}

fn report_files(err: &mut dyn Write, files: &[PathBuf]) {
    for f in files {
        let _ = writeln!(err, "wrote {}", f.display());
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let cfg = load(&args)?;
            let run = commands::cmd_run(&cfg)?;
            for v in &run.trajectory.velocity_violations {
                let _ = writeln!(
                    err,
                    "warning: step {} moves {} cells, beyond the light-cone bound of {}",
                    v.index, v.displacement, v.bound
                );
            }
            if !args.quiet {
                let _ = out.write_all(run.analysis.report.as_bytes());
                report_files(err, &run.files);
            }
        }
        Command::Reference(args) => {
            let cfg = load(&args)?;
            let run = commands::cmd_reference(&cfg)?;
            if !args.quiet {
                let _ = out.write_all(run.analysis.report.as_bytes());
                report_files(err, &run.files);
            }
        }
        Command::Compare(args) => {
            let cfg = load(&args)?;
            let cmp = commands::cmd_compare(&cfg)?;
            if !args.quiet {
                let _ = out.write_all(cmp.summary.as_bytes());
                report_files(err, &cmp.files);
            }
        }
        Command::Analyze { table, m_cm, output_dir, quiet } => {
            let done = commands::cmd_analyze(&table, m_cm, output_dir.as_deref().map(Path::new))?;
            if !quiet {
                let _ = out.write_all(done.analysis.report.as_bytes());
                report_files(err, &done.files);
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the exit code:
/// 0 on success, 1 for usage and config errors, 2 for runtime failures.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
