use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use s2r_core::pipeline::{default_catalog, emit_reports, load_catalog, run_classification, Format};

#[derive(Parser)]
#[command(name = "s2r", version, about = "Classify free involutions on the closed S2xR manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every double cover in a catalog and write the report.
    Classify {
        /// Catalog file; the bundled catalog is used when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value = "csv", value_parser = clap::value_parser!(String))]
        format: String,
        #[arg(long)]
        out: PathBuf,
        /// Also compare computed cup cubes against the closed-form predictions.
        #[arg(long)]
        cross_check: bool,
        /// Only classify the named manifold.
        #[arg(long)]
        manifold: Option<String>,
    },
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Classify { catalog, format, out, cross_check, manifold } => {
            let format: Format = format.parse()?;
            let mut cat = match catalog {
                Some(path) => load_catalog(&path).map_err(|e| format!("{}: {e}", path.display()))?,
                None => default_catalog(),
            };
            for w in &cat.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(name) = manifold {
                cat = cat.restrict(&name).map_err(|e| e.to_string())?;
            }
            let report = run_classification(&cat, cross_check).map_err(|e| e.to_string())?;
            for path in emit_reports(&report, format, &out).map_err(|e| e.to_string())? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
