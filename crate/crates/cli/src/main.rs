use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use kashaev_cli::{corpus, resolve, CliError, Input, ScanFormat};
use kashaev_core::algebra::Rational;

#[derive(Parser)]
#[command(name = "kashaev", version, about = "Kashaev's signature invariant of link diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Pair of adjacent regions to delete, as `rA,rB`.
    #[arg(long, global = true, value_parser = parse_pair)]
    pair: Option<(usize, usize)>,
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Diagram summary.
    Info {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Kashaev, Kauffman and Goeritz matrices as JSON.
    Matrices { input: String },
    /// Normalized Alexander polynomial.
    Alexander { input: String },
    /// Kashaev invariant at one point or along a scan of the circle.
    Signature {
        input: String,
        /// Evaluate at `x = p/q`.
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        at: Option<String>,
        /// Number of sample points on the circle.
        #[arg(long)]
        scan: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Check every identity, exiting 1 if any fails.
    Verify {
        input: Option<String>,
        /// Verify the bundled corpus.
        #[arg(long)]
        corpus: bool,
        /// Random rewrites per diagram.
        #[arg(long, default_value_t = 10)]
        fuzz: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected rA,rB")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Info { input, json } => kashaev_cli::info(&resolve(&input)?, json),
        Command::Matrices { input } => kashaev_cli::matrices(&resolve(&input)?, cli.pair),
        Command::Alexander { input } => kashaev_cli::alexander(&resolve(&input)?).map(|s| s + "\n"),
        Command::Signature { input, at, scan, format } => {
            let input = resolve(&input)?;
            match (at, scan) {
                (Some(x), _) => {
                    let x = Rational::from_str(x.trim()).map_err(|_| CliError::Usage(format!("not a rational: {x}")))?;
                    if format.csv {
                        return Err(CliError::Usage("--csv applies to --scan only".into()));
                    }
                    kashaev_cli::signature_at(&input, &x)
                }
                (None, Some(n)) => {
                    let f = if format.json { ScanFormat::Json } else { ScanFormat::Csv };
                    kashaev_cli::scan(&input, n, f)
                }
                (None, None) => Err(CliError::Usage("one of --at or --scan is required".into())),
            }
        }
        Command::Verify { input, corpus: use_corpus, fuzz, seed } => {
            let mut inputs: Vec<Input> = Vec::new();
            if use_corpus {
                for e in corpus() {
                    inputs.push(Input::from_entry(e)?);
                }
            }
            if let Some(i) = input {
                inputs.push(resolve(&i)?);
            }
            if inputs.is_empty() {
                return Err(CliError::Usage("verify needs an input or --corpus".into()));
            }
            let outcome = kashaev_cli::verify(&inputs, fuzz, seed)?;
            println!("{}", outcome.json);
            if outcome.failures.is_empty() {
                Ok(String::new())
            } else {
                Err(CliError::Failed(outcome.failures))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            if !out.is_empty() && !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
