mod family;

use std::fmt;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use latpuzzle_core::verify::{self, Suite, VerifyConfig};
use latpuzzle_core::Via;

use family::{Family, Params};

#[derive(Parser)]
#[command(
    name = "latpuzzle",
    version,
    about = "Move-minimizing puzzles solved by diamond-colored distributive lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a shortest move sequence between two objects.
    Solve {
        family: Family,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Route through the join (mountain) or the meet (valley).
        #[arg(long, value_enum, default_value_t = Pivot::Join)]
        via: Pivot,
        #[arg(long)]
        json: bool,
    },
    /// Run an invariant sweep.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Write a puzzle digraph or board in a fixed format.
    Export {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        format: Format,
        /// Tiling to draw with `--format text-board` for snakes.
        #[arg(long)]
        object: Option<String>,
    },
    /// List every object of a puzzle.
    Enumerate {
        family: Family,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pivot {
    Join,
    Meet,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    TextBoard,
    IsoTable,
}

/// Bad flag combinations; reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

struct VerifyFailed;

impl fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("verification failed")
    }
}

impl fmt::Debug for VerifyFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::error::Error for VerifyFailed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.chain().find_map(|e| e.downcast_ref::<latpuzzle_core::Error>()) {
        Some(latpuzzle_core::Error::Parse(_)) => 2,
        Some(latpuzzle_core::Error::InvalidObject(_)) => 3,
        _ => 1,
    }
}

fn params(family: Family, args: &ParamArgs) -> Result<Params> {
    match (family.needs_k(), args.k) {
        (true, None) => Err(Usage(format!("{} needs --k", family)).into()),
        (false, Some(_)) => Err(Usage(format!("{} takes no --k", family)).into()),
        (_, k) => Ok(Params { n: args.n, k }),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve { family, params: p, from, to, via, json } => {
            let p = params(family, &p)?;
            let via = match via {
                Pivot::Join => Via::Join,
                Pivot::Meet => Via::Meet,
            };
            let report = family::solve(family, p, &from, &to, via)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_text());
            }
        }
        Command::Verify { suite, max_n, samples, seed, json, inject_fault } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { max_n, samples, seed, fault: inject_fault };
            let report = verify::run(suite, cfg);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.checks {
                    match &c.counterexample {
                        None => println!("PASS {} {}", c.suite, c.name),
                        Some(why) => println!("FAIL {} {}: {}", c.suite, c.name, why),
                    }
                }
                for (suite, (pass, fail)) in verify::summary(&report) {
                    println!("{}: {} passed, {} failed", suite, pass, fail);
                }
            }
            if !report.passed() {
                return Err(VerifyFailed.into());
            }
        }
        Command::Export { family, params: p, format, object } => {
            let p = params(family, &p)?;
            let text = match format {
                Format::Dot => family::dot(family, p)?,
                Format::TextBoard => family::board(family, p, object.as_deref())?,
                Format::IsoTable => family::iso_table(family, p)?,
            };
            print!("{}", text);
        }
        Command::Enumerate { family, params: p, json } => {
            let p = params(family, &p)?;
            let objects = family::enumerate(family, p)?;
            if json {
                let value = serde_json::json!({
                    "family": family.to_string(),
                    "params": p,
                    "count": objects.len(),
                    "objects": objects,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                for o in &objects {
                    println!("{}", o);
                }
                println!("count {}", objects.len());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if err.downcast_ref::<VerifyFailed>().is_none() {
                eprintln!("error: {:#}", err);
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
