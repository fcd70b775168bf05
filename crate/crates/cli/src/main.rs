use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matfield::algebra::{Bracket, Caps};
use matfield::FieldMode;
use matfield_cli::commands::{self, CheckPaperArgs};
use matfield_cli::{Format, WitnessKind};

#[derive(Parser)]
#[command(name = "matfield", version, about = "Exact closure and ring/field classification of matrix algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    ZeroDivisor,
    Noncommuting,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the algebra generated by a spec file under matrix multiplication.
    Classify {
        spec: PathBuf,
        /// Override the spec's coefficient field (Q, QI, Q_AS_R, QI_AS_C).
        #[arg(long, value_parser = parse_mode)]
        field: Option<FieldMode>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Close the generators under a bracket and print basis and structure constants.
    Closure {
        spec: PathBuf,
        /// mul, comm or anticomm (defaults to the spec's bracket).
        #[arg(long, value_parser = parse_bracket)]
        bracket: Option<Bracket>,
        #[arg(long, default_value_t = 64)]
        max_dim: usize,
        #[arg(long, default_value_t = 8)]
        max_rounds: usize,
    },
    /// Search for a zero-divisor or noncommuting witness.
    Witness {
        spec: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 500)]
        budget: usize,
    },
    /// Print the multiplication table of the generators (or of a basis of their span).
    Table {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Run the built-in claim catalog.
    CheckPaper {
        /// Comma-separated claim ids, e.g. CL-01,CL-05.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Comma-separated field modes; exact checks always run.
        #[arg(long, value_delimiter = ',', value_parser = parse_mode)]
        modes: Option<Vec<FieldMode>>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        /// Byte-compare the report against this file.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Include per-check timings (not reproducible; do not combine with --golden).
        #[arg(long)]
        timings: bool,
    },
}

fn parse_mode(s: &str) -> Result<FieldMode, String> {
    s.parse().map_err(|_| format!("unknown field mode {s:?} (expected Q, QI, Q_AS_R or QI_AS_C)"))
}

fn parse_bracket(s: &str) -> Result<Bracket, String> {
    s.parse()
}

fn out_format(f: OutFormat) -> Format {
    match f {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::default();
    let out = match cli.command {
        Command::Classify { spec, field, format } => commands::cmd_classify(&spec, field, out_format(format), &caps),
        Command::Closure { spec, bracket, max_dim, max_rounds } => commands::cmd_closure(&spec, bracket, max_dim, max_rounds),
        Command::Witness { spec, kind, budget } => {
            let kind = match kind {
                Kind::ZeroDivisor => WitnessKind::ZeroDivisor,
                Kind::Noncommuting => WitnessKind::Noncommuting,
            };
            commands::cmd_witness(&spec, kind, budget, &caps)
        }
        Command::Table { spec, format } => {
            let format = match format {
                TableFormat::Text => Format::Text,
                TableFormat::Csv => Format::Csv,
            };
            commands::cmd_table(&spec, format)
        }
        Command::CheckPaper { claims, modes, format, golden, timings } => {
            let args = CheckPaperArgs {
                claims: claims.map(|c| c.into_iter().collect::<BTreeSet<_>>()),
                modes: modes.map(|m| m.into_iter().collect::<BTreeSet<_>>()),
                format: out_format(format),
                golden: golden.as_deref(),
                timings,
            };
            commands::cmd_check_paper(&args, &caps)
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.text.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(out.status as u8)
}
