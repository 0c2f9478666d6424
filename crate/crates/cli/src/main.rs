use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semigap_cli::document::to_pretty_json;
use semigap_cli::selftest::selftest;
use semigap_cli::{parse_document, run, table, CliError, Kind, Method};

#[derive(Parser)]
#[command(name = "semigap", version, about = "Gaps, ideal complements and Apéry sets of affine semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem document; standard input when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Structured)]
    format: Format,
    /// Overrides the document's `method`.
    #[arg(long, global = true, value_enum)]
    method: Option<Method>,
    /// Overrides the document's `order`: lex, grlex or grevlex.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Add wall-clock times per stage to the result.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// C \ S, or N^d \ S without `sub`.
    Gaps,
    /// Cofiniteness test with its witnesses.
    Cofinite,
    /// S \ (X + S).
    Ideal,
    /// Ap(S, X), with X the extreme rays unless `ideal_base` is given.
    Apery,
    /// Hilbert basis of A x = 0, or minimal solutions of A x = b.
    Hilbert,
    /// All factorizations of an element.
    Factorize,
    /// Random instances through every cross-check.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Structured,
    Table,
}

fn kind_of(command: &Command) -> Option<Kind> {
    Some(match command {
        Command::Gaps => Kind::RelativeGaps,
        Command::Cofinite => Kind::CofiniteCheck,
        Command::Ideal => Kind::IdealComplement,
        Command::Apery => Kind::Apery,
        Command::Hilbert => Kind::Hilbert,
        Command::Factorize => Kind::Factorize,
        Command::Selftest { .. } => return None,
    })
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Malformed(format!("{}: {e}", p.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Malformed(e.to_string()))?;
        }
    }
    Ok(text)
}

fn solve(cli: &Cli, kind: Kind) -> Result<String, CliError> {
    let mut doc = parse_document(&read_input(&cli.input)?)?;
    match doc.kind {
        Some(k) if k != kind => {
            return Err(CliError::Malformed(format!("document kind {} does not match the subcommand", k.name())))
        }
        _ => doc.kind = Some(kind),
    }
    if cli.method.is_some() {
        doc.method = cli.method;
    }
    if cli.order.is_some() {
        doc.order = cli.order.clone();
    }
    let mut result = run(&doc)?;
    if !cli.timing {
        result.timing = None;
    }
    Ok(match cli.format {
        Format::Structured => to_pretty_json(&result),
        Format::Table => table::render(&result),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(kind) = kind_of(&cli.command) else {
        let Command::Selftest { seed, count } = cli.command else { unreachable!() };
        let report = selftest(seed, count);
        match cli.format {
            Format::Structured => print!("{}", to_pretty_json(&report)),
            Format::Table => {
                let c = &report.checks;
                println!("seed {seed}, {count} rounds");
                println!("semigroup pairs {}, ideals {}, apery sets {}", c.semigroup_pairs, c.ideals, c.apery_sets);
                for d in &report.disagreements {
                    println!("DISAGREEMENT {d}");
                }
            }
        }
        return if report.disagreements.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(4) };
    };
    match solve(&cli, kind) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("semigap: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
