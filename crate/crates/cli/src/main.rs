use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gsym::{compute, list, table, Format};
use gsym_core::homotopy::Method;

#[derive(Parser)]
#[command(
    name = "gsym",
    version,
    about = "Rational homotopy ranks of generalised symmetric spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Theorem,
    Cartan,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Symmetric,
}

#[derive(Subcommand)]
enum Command {
    /// Ranks of one space, e.g. `SU(6)/Sp(3)`, `SO(2n+1)/SO(2n)(n=3)` or
    /// `g=A2; cat=1; torus=2; summands=[]`.
    Compute {
        space: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Every tabulated family up to the given ambient rank.
    Table {
        #[arg(value_enum, default_value = "symmetric")]
        kind: TableKind,
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Catalog families with parameter ranges.
    List,
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Compute {
            space,
            method,
            format: f,
        } => {
            let m = match method {
                MethodArg::Theorem => Method::Theorem,
                MethodArg::Cartan => Method::Cartan,
                MethodArg::Both => Method::Both,
            };
            compute(&space, m, format(f))
        }
        Command::Table {
            kind: TableKind::Symmetric,
            max_rank,
            format: f,
        } => table(max_rank, format(f)),
        Command::List => list(),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.status as u8)
}
