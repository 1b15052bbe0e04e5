//! `tritorus`: command-line access to the triangle torus.
//!
//! Every subcommand prints a report as `key: value` lines, or as JSON with
//! `--json`. Reports carry a `schema` tag (see [`report::SCHEMA`]) that is
//! bumped whenever keys change meaning.
//!
//! Exit status: 0 on success, 1 for usage and parse errors, 2 for domain
//! errors (angles that do not form a triangle, zero path velocity, …) and
//! I/O failures.

pub mod commands;
pub mod error;
pub mod input;
pub mod path;
pub mod plot;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::commands::PathArgs;
use crate::error::CliError;
use crate::input::AngleFormat;
use crate::plot::PlotOptions;

#[derive(Debug, Parser)]
#[command(
    name = "tritorus",
    version,
    about = "Triangle similarity classes on the torus"
)]
pub struct Cli {
    /// How angle arguments are written.
    #[arg(long, global = true, value_enum, default_value_t = AngleFormat::PiRational)]
    pub format: AngleFormat,
    /// Emit JSON instead of key: value lines.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of Monte Carlo samples (measure, plot).
    #[arg(long, global = true, default_value_t = 0)]
    pub samples: usize,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Three angles. Negative values such as `-1/3` are accepted as
/// positionals.
#[derive(Debug, Clone, clap::Args)]
pub struct Angles {
    #[arg(allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(allow_hyphen_values = true)]
    pub beta: String,
    #[arg(allow_hyphen_values = true)]
    pub gamma: String,
}

impl Angles {
    pub fn to_vec(&self) -> Vec<String> {
        vec![self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the triangle with interior angles ALPHA BETA GAMMA.
    Classify {
        #[command(flatten)]
        angles: Angles,
    },
    /// Map a triangle to its torus point.
    Map {
        #[command(flatten)]
        angles: Angles,
        /// Treat the three values as arguments on the circle and project
        /// them to relative arguments instead.
        #[arg(long)]
        relative: bool,
    },
    /// List every triangle mapped to the torus point (XI1, XI2).
    Invert {
        #[arg(allow_hyphen_values = true)]
        xi1: String,
        #[arg(allow_hyphen_values = true)]
        xi2: String,
    },
    /// Orbit of (XI1, XI2) under relabeling and reflection.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        xi1: String,
        #[arg(allow_hyphen_values = true)]
        xi2: String,
    },
    /// Analytic relative measures, plus Monte Carlo estimates with --samples.
    Measure,
    /// Follow a straight line from a starting triangle and report the loci
    /// it crosses.
    Path {
        #[command(flatten)]
        angles: Angles,
        /// Velocity (dξ₁/dt, dξ₂/dt).
        #[arg(long, num_args = 2, value_names = ["V1", "V2"], allow_negative_numbers = true, required = true)]
        velocity: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 0.01)]
        step_size: f64,
    },
    /// Draw the fundamental domain as SVG.
    Plot {
        /// Also draw the anti-isosceles and anti-right lines.
        #[arg(long)]
        anti: bool,
        /// Side of the square in pixels.
        #[arg(long, default_value_t = 600.0)]
        size: f64,
    },
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match &cli.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => 0,
                Err(e) => fail(&CliError::Io(e), stderr),
            },
            None => match stdout.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => fail(&CliError::Io(e), stderr),
            },
        },
        Err(e) => fail(&e, stderr),
    }
}

fn fail(e: &CliError, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {e}");
    e.exit_code()
}

/// Produces the full output text of a parsed command line.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let f = cli.format;
    let report = match &cli.command {
        Command::Classify { angles } => commands::classify_cmd(&angles.to_vec(), f)?,
        Command::Map { angles, relative } => commands::map_cmd(&angles.to_vec(), *relative, f)?,
        Command::Invert { xi1, xi2 } => commands::invert_cmd(xi1, xi2, f)?,
        Command::Orbit { xi1, xi2 } => commands::orbit_cmd(xi1, xi2, f)?,
        Command::Measure => commands::measure_cmd(cli.samples, cli.seed)?,
        Command::Path {
            angles,
            velocity,
            steps,
            step_size,
        } => commands::path_cmd(
            &PathArgs {
                angles: &angles.to_vec(),
                velocity: (velocity[0], velocity[1]),
                steps: *steps,
                step_size: *step_size,
            },
            f,
        )?,
        Command::Plot { anti, size } => {
            if !(size.is_finite() && *size > 0.0) {
                return Err(CliError::Usage("--size must be positive".into()));
            }
            let opts = PlotOptions {
                size: *size,
                anti: *anti,
                samples: cli.samples,
                seed: cli.seed,
                ..PlotOptions::default()
            };
            return Ok(commands::plot_cmd(&opts));
        }
    };
    Ok(report.render(cli.json))
}
