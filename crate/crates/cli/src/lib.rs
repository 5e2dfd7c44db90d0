//! The `nodal` command-line front end.

pub mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nodal_core::chessboard::{build_chessboard, summarize};
use nodal_core::classify;
use nodal_core::nodal::{
    count_with_options, sweep_theta, CountOptions, EigenfunctionParams, SweepOptions, Theta,
};
use nodal_core::spectrum::{enumerate_spectrum, SubspaceTag};
use nodal_core::{acceptance, Error};

use render::{ImageFormat, RenderKind, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nodal",
    version,
    about = "Nodal domains and Courant-sharp eigenvalues of the Neumann square"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    q: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List eigenvalues up to a bound with multiplicities and index ranges.
    Spectrum {
        #[arg(long)]
        lambda_max: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Classify one index.
    Classify {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Classify every index up to `--n-max`.
    Table {
        #[arg(long, default_value_t = 208)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Count nodal domains of one eigenfunction.
    Count {
        #[command(flatten)]
        pair: PairArgs,
        /// Mixing angle, decimal or symbolic such as `pi/4`.
        #[arg(long, default_value = "0")]
        theta: String,
        #[arg(long)]
        resolution: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Nodal count as a function of θ.
    Sweep {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 16)]
        samples: u32,
        #[arg(long)]
        resolution: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Exact outer-area bound from the sign chessboard.
    Chessboard {
        #[command(flatten)]
        pair: PairArgs,
        /// Use the board of the swapped eigenfunction.
        #[arg(long)]
        swapped: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Draw a figure as SVG (or PGM for nodal patterns).
    Render {
        #[arg(long, value_enum)]
        kind: RenderKind,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "0")]
        theta: String,
        #[arg(long, default_value_t = 512)]
        size: u32,
        #[arg(long)]
        resolution: Option<u32>,
        #[arg(long, value_enum, default_value = "svg")]
        format: ImageFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Run the acceptance checks and print one line per criterion.
    Verify,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(String),
    /// Already reported; just set the exit code.
    Silent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command against
/// the process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Silent) => EXIT_FAILURE,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "nodal: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "nodal: {msg}");
            EXIT_FAILURE
        }
    }
}

fn parse_theta(s: &str) -> Result<Theta, Failure> {
    Ok(s.parse::<Theta>()?)
}

/// Writes to `-o` if given, else to `out`.
fn emit(
    target: &Output,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), Failure>,
) -> Result<(), Failure> {
    match &target.output {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => {
            body(out)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> impl FnOnce(&mut dyn Write) -> Result<(), Failure> + '_ {
    move |w| {
        serde_json::to_writer_pretty(&mut *w, value)?;
        writeln!(w)?;
        Ok(())
    }
}

#[derive(Serialize)]
struct SpectrumCsvRow {
    lambda: u64,
    multiplicity: u32,
    n_lo: u32,
    n_hi: u32,
    pairs: String,
}

#[derive(Serialize)]
struct ProfileCsvRow {
    theta: f64,
    theta_tag: String,
    kind: String,
    count: u32,
    certified: bool,
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Spectrum {
            lambda_max,
            format,
            out: target,
        } => {
            let entries = enumerate_spectrum(lambda_max, SubspaceTag::Full);
            match format {
                Format::Json => emit(&target, out, json(&entries)),
                Format::Csv => emit(&target, out, |w| {
                    let mut cw = csv::Writer::from_writer(w);
                    for e in &entries {
                        cw.serialize(SpectrumCsvRow {
                            lambda: e.lambda,
                            multiplicity: e.multiplicity(),
                            n_lo: e.n_lo,
                            n_hi: e.n_hi,
                            pairs: e
                                .pairs
                                .iter()
                                .map(|p| p.to_string())
                                .collect::<Vec<_>>()
                                .join(" "),
                        })?;
                    }
                    cw.flush()?;
                    Ok(())
                }),
            }
        }
        Command::Classify { n, out: target } => {
            let verdict = classify::classify(n)?;
            emit(&target, out, json(&verdict))
        }
        Command::Table {
            n_max,
            format,
            out: target,
        } => {
            let rows = classify::generate_table(n_max)?;
            match format {
                Format::Json => emit(&target, out, json(&rows)),
                Format::Csv => emit(&target, out, |w| Ok(classify::write_csv(&rows, w)?)),
            }
        }
        Command::Count {
            pair,
            theta,
            resolution,
            out: target,
        } => {
            let params = EigenfunctionParams::new(pair.p, pair.q, parse_theta(&theta)?);
            let opts = match resolution {
                Some(r) => CountOptions::new(r),
                None => CountOptions::default_for(pair.p, pair.q),
            };
            let report = count_with_options(&params, &opts, None)?;
            emit(&target, out, json(&report))
        }
        Command::Sweep {
            pair,
            samples,
            resolution,
            format,
            out: target,
        } => {
            let report = sweep_theta(
                pair.p,
                pair.q,
                &SweepOptions {
                    samples,
                    resolution,
                },
            )?;
            match format {
                Format::Json => emit(&target, out, json(&report)),
                Format::Csv => emit(&target, out, |w| {
                    let mut cw = csv::Writer::from_writer(w);
                    for pt in &report.points {
                        cw.serialize(ProfileCsvRow {
                            theta: pt.theta,
                            theta_tag: pt
                                .theta_tag
                                .map(|t| t.as_str().to_string())
                                .unwrap_or_default(),
                            kind: format!("{:?}", pt.kind).to_uppercase(),
                            count: pt.count,
                            certified: pt.certified,
                        })?;
                    }
                    cw.flush()?;
                    Ok(())
                }),
            }
        }
        Command::Chessboard {
            pair,
            swapped,
            out: target,
        } => {
            let mut board = build_chessboard(pair.p, pair.q)?;
            if swapped {
                board = board.with_swap();
            }
            emit(&target, out, json(&summarize(&board)))
        }
        Command::Render {
            kind,
            pair,
            theta,
            size,
            resolution,
            format,
            out: target,
        } => {
            let spec = RenderSpec {
                kind,
                p: pair.p,
                q: pair.q,
                theta: parse_theta(&theta)?,
                size,
                resolution,
                format,
            };
            let bytes = render::render(&spec)?;
            emit(&target, out, |w| Ok(w.write_all(&bytes)?))
        }
        Command::Verify => {
            let mut all = true;
            for result in acceptance::run_all() {
                writeln!(out, "{}", result.summary_line())?;
                all &= result.passed();
            }
            out.flush()?;
            if all {
                Ok(())
            } else {
                Err(Failure::Silent)
            }
        }
    }
}
