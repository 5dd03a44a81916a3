use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sporadic::cli::{self, Command, OutputFormat, RunConfig, TableKind};

#[derive(Parser)]
#[command(name = "sporadic", version, about = "Molien series and invariant-degree bounds for the sporadic groups")]
struct Args {
    /// Directory holding manifest.json, the tables and the group metadata.
    #[arg(long, env = cli::DATA_DIR_ENV, default_value = "data", global = true)]
    data_dir: PathBuf,

    /// Highest degree to compute.
    #[arg(long, default_value_t = cli::DEFAULT_DEGREE, global = true)]
    degree: usize,

    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Obj,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Figure2,
    Figure5,
    Figure6,
    Subquotient,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate character tables, models or metadata files.
    Ingest {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Invariant counts m_0..m_D for a group or table.
    Molien { group: String },
    /// Compare the matrix-enumeration and character routes on a model.
    Oracle { model: String },
    /// Dimension bounds, irreducibility and feasibility per group.
    Bounds { group: Option<String> },
    /// Run every check.
    Verify,
    /// Print a summary table.
    Tables {
        #[arg(value_enum)]
        which: Table,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Ingest { files } => Command::Ingest(files),
        Cmd::Molien { group } => Command::Molien(group),
        Cmd::Oracle { model } => Command::Oracle(model),
        Cmd::Bounds { group } => Command::Bounds(group),
        Cmd::Verify => Command::Verify,
        Cmd::Tables { which } => Command::Tables(match which {
            Table::Figure2 => TableKind::Figure2,
            Table::Figure5 => TableKind::Figure5,
            Table::Figure6 => TableKind::Figure6,
            Table::Subquotient => TableKind::Subquotient,
        }),
    };
    let config = RunConfig {
        data_dir: args.data_dir,
        command,
        degree_limit: args.degree,
        output_format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Obj => OutputFormat::Obj,
        },
        output_path: args.out,
    };
    let outcome = cli::run(&config);
    if let Some(e) = &outcome.error {
        eprintln!("{e}");
    }
    match &config.output_path {
        Some(path) if outcome.error.is_none() => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.status.code() as u8)
}
