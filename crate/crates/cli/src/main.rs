//! `colorful-assoc`: build and check colorful graph associahedra from JSON
//! graph specifications.

mod commands;
mod dot;
mod dump;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Format;

#[derive(Parser)]
#[command(
    name = "colorful-assoc",
    version,
    about = "Colorful graph associahedra: build, verify, cross-check, export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Palette override, comma-separated (e.g. `red,red,blue`).
    #[arg(long, global = true)]
    palette: Option<String>,

    /// Component index, or `all`.
    #[arg(long, global = true, default_value = "all")]
    component: String,

    /// Face limit per component.
    #[arg(long, global = true, env = "COLORFUL_ASSOC_MAX_FACES", default_value_t = colorful_assoc::DEFAULT_MAX_FACES)]
    max_faces: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// List the tubes of the graph with their inner/outer type.
    Tubes { input: PathBuf },
    /// Build components; print a summary line each, optionally write dumps.
    Build {
        input: PathBuf,
        /// Directory for `component-<i>.json` dumps.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the axiom suite and, for rank 3, the surface report.
    Verify { input: PathBuf },
    /// Compare against the classic, exchange-graph and product oracles.
    Oracle {
        input: PathBuf,
        /// Maximum number of faces given to the product check.
        #[arg(long, default_value_t = 500)]
        sample: usize,
    },
    /// Write a DOT graph of the 1-skeleton or Hasse diagram.
    Export {
        input: PathBuf,
        #[arg(long, conflicts_with = "hasse")]
        skeleton: bool,
        #[arg(long)]
        hasse: bool,
    },
}

enum Failure {
    Input(anyhow::Error),
    Guard(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        let guard = e.chain().any(|c| {
            c.downcast_ref::<colorful_assoc::Error>()
                .is_some_and(colorful_assoc::Error::is_resource)
        });
        if guard {
            Failure::Guard(e)
        } else {
            Failure::Input(e)
        }
    }
}

impl From<colorful_assoc::Error> for Failure {
    fn from(e: colorful_assoc::Error) -> Failure {
        anyhow::Error::from(e).into()
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let filter = commands::component_filter(&cli.component)?;
    let palette = cli.palette.as_deref();
    let load = |p: &PathBuf| commands::load_input(p, palette);
    let (text, ok) = match &cli.command {
        Command::Tubes { input } => (commands::tubes(&load(input)?, cli.format)?, true),
        Command::Build { input, out } => {
            let inp = load(input)?;
            let comps = commands::components(&inp, filter, cli.max_faces)?;
            (commands::build(&inp, &comps, out.as_deref(), cli.format)?, true)
        }
        Command::Verify { input } => {
            let inp = load(input)?;
            let comps = commands::components(&inp, filter, cli.max_faces)?;
            commands::verify(&comps)?
        }
        Command::Oracle { input, sample } => {
            let inp = load(input)?;
            let comps = commands::components(&inp, filter, cli.max_faces)?;
            commands::oracle(&inp, &comps, *sample)?
        }
        Command::Export {
            input,
            skeleton: _,
            hasse,
        } => {
            let inp = load(input)?;
            let comps = commands::components(&inp, filter, cli.max_faces)?;
            (commands::export(&inp, &comps, *hasse)?, true)
        }
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::Input(e.into()))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(4)
        }
    }
}
