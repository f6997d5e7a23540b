use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coadqh_cli::suite::{run_all, summary_table, DEFAULT_SEED};
use coadqh_cli::{parse_tag, query, CliError};
use coadqh_linalg::parse_q;
use coadqh_presentations::{verify_big, verify_gw, verify_products, verify_small, verify_spectral_match, VerificationReport};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "coadqh", version, about = "Schubert calculus and quantum cohomology of coadjoint varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Variety {
    /// Type tag such as E6, F4, D5, or a family letter with --n.
    tag: String,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Root counts and the Schubert basis.
    Roots(Variety),
    /// Coset decomposition of a word, or the minimal coset representatives.
    Coset {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Product of classes; with --q, the quantum action of leading h's.
    Product {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        classes: String,
        #[arg(long)]
        q: Option<String>,
    },
    /// The class on the variety of lines through a point.
    Bar {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        class: String,
    },
    /// A degree-one invariant with a point insertion first.
    Gw {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        classes: String,
        #[arg(long, default_value_t = 1)]
        degree: u32,
    },
    /// Verification pipelines for one variety.
    Verify {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        small: bool,
        #[arg(long)]
        big: bool,
        #[arg(long)]
        spectral: bool,
        #[arg(long)]
        gw: bool,
        #[arg(long)]
        products: bool,
        /// Value of q for the spectral check.
        #[arg(long, default_value = "1")]
        q: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The full acceptance suite.
    Report {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print JSON instead of the summary table.
        #[arg(long)]
        json: bool,
    },
}

/// Output text and whether every check passed.
fn run(cmd: Command) -> Result<(String, bool), CliError> {
    let json = |v: Value| serde_json::to_string_pretty(&v).map_err(|e| CliError::Compute(e.to_string()));
    match cmd {
        Command::Roots(v) => Ok((json(query::roots(parse_tag(&v.tag, v.n)?)?)?, true)),
        Command::Coset { variety: v, word, max_len } => Ok((json(query::coset(parse_tag(&v.tag, v.n)?, word.as_deref(), max_len)?)?, true)),
        Command::Product { variety: v, classes, q } => {
            let t = parse_tag(&v.tag, v.n)?;
            let qv = q.map(|s| parse_q(&s).ok_or_else(|| CliError::Usage(format!("bad rational {s}")))).transpose()?;
            Ok((json(query::product(t, &classes, qv.as_ref())?)?, true))
        }
        Command::Bar { variety: v, class } => Ok((json(query::bar(parse_tag(&v.tag, v.n)?, &class)?)?, true)),
        Command::Gw { variety: v, classes, degree } => Ok((json(query::gw(parse_tag(&v.tag, v.n)?, &classes, degree)?)?, true)),
        Command::Verify { variety: v, small, big, spectral, gw, products, q, seed } => {
            let t = parse_tag(&v.tag, v.n)?;
            let qv = parse_q(&q).ok_or_else(|| CliError::Usage(format!("bad rational {q}")))?;
            let none = !(small || big || spectral || gw || products);
            let mut reports: Vec<VerificationReport> = Vec::new();
            if small || none {
                reports.push(verify_small(t, seed));
            }
            if big {
                reports.push(verify_big(t));
            }
            if spectral {
                reports.push(verify_spectral_match(t, &qv));
            }
            if gw {
                reports.push(verify_gw(t));
            }
            if products {
                reports.push(verify_products(t, None));
            }
            let ok = reports.iter().all(|r| r.passed() && !r.checks.is_empty());
            let text = serde_json::to_string_pretty(&reports).map_err(|e| CliError::Compute(e.to_string()))?;
            Ok((text, ok))
        }
        Command::Report { filter, seed, json: as_json } => {
            let r = run_all(filter.as_deref(), seed);
            if r.criteria.is_empty() {
                return Err(CliError::Usage(format!("no criterion matches {}", filter.unwrap_or_default())));
            }
            let text = if as_json { serde_json::to_string_pretty(&r).map_err(|e| CliError::Compute(e.to_string()))? } else { summary_table(&r) };
            Ok((text, r.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli.command) {
        Ok((text, ok)) => {
            let written = match &out {
                Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| e.to_string()),
                None => match writeln!(std::io::stdout().lock(), "{text}") {
                    Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.to_string()),
                    _ => Ok(()),
                },
            };
            if let Err(e) = written {
                eprintln!("{}", CliError::Usage(format!("cannot write output: {e}")).to_json());
                return ExitCode::from(2);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
