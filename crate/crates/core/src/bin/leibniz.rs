use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz::cli::{self, AlgebraSource, Command, Modulo, Sides, TensorSource};

/// Exact computations on finite-dimensional left Leibniz algebras over Q.
#[derive(Parser)]
#[command(name = "leibniz", version)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Algebra {
    /// Algebra file (TOML) or catalog name.
    algebra: String,
}

impl Algebra {
    fn source(&self) -> AlgebraSource {
        source(&self.algebra)
    }
}

fn source(s: &str) -> AlgebraSource {
    let p = PathBuf::from(s);
    if p.exists() || s.ends_with(".toml") {
        AlgebraSource::File(p)
    } else {
        AlgebraSource::Catalog(s.to_string())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuloArg {
    Zero,
    Leib,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the left Leibniz identity and list violations.
    Validate(Algebra),
    /// Leib(L), Z^l(L), Z(L) and the quotient L/Leib(L).
    Invariants(Algebra),
    /// Derivations and inner derivations.
    Derivations(Algebra),
    /// Left, right, full and Loday biderivation spaces, commuting maps.
    Biderivations(Algebra),
    /// Completeness in both senses, with obstructions.
    Completeness(Algebra),
    /// Factor a bilinear map through left or right multiplication.
    Factor {
        #[command(flatten)]
        algebra: Algebra,
        /// Bilinear map file, or one of bracket, zero, sec4_one_f, sec4_two_f.
        #[arg(long, default_value = "bracket")]
        tensor: String,
        #[arg(long, value_enum, default_value = "zero")]
        modulo: ModuloArg,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// Run the reproduction checks.
    VerifyPaper,
    /// Print a catalog algebra as a file, or list the catalog.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let command = match args.command {
        Cmd::Validate(a) => Command::Validate(a.source()),
        Cmd::Invariants(a) => Command::Invariants(a.source()),
        Cmd::Derivations(a) => Command::Derivations(a.source()),
        Cmd::Biderivations(a) => Command::Biderivations(a.source()),
        Cmd::Completeness(a) => Command::Completeness(a.source()),
        Cmd::Factor {
            algebra,
            tensor,
            modulo,
            side,
        } => Command::Factor {
            algebra: algebra.source(),
            tensor: if PathBuf::from(&tensor).exists() || tensor.ends_with(".toml") {
                TensorSource::File(tensor.into())
            } else {
                TensorSource::Named(tensor)
            },
            modulo: match modulo {
                ModuloArg::Zero => Modulo::Zero,
                ModuloArg::Leib => Modulo::Leib,
            },
            sides: match side {
                SideArg::Left => Sides::Left,
                SideArg::Right => Sides::Right,
                SideArg::Both => Sides::Both,
            },
        },
        Cmd::VerifyPaper => Command::VerifyPaper,
        Cmd::Catalog { name, list } => Command::Catalog(if list { None } else { name }),
    };
    match cli::run(&command) {
        Ok(report) => {
            let text = if args.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
