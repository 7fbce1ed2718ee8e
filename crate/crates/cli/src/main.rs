//! `gkod` command-line front end.
//!
//! Subcommands: graph, degpat, order, search, verify, odclass. Exit codes:
//! 0 = pass/success, 2 = verification failed, 3 = non-qualifying alpha,
//! 4 = resource limit (sieve/materialization/range), 5 = bad input.

mod output;

use clap::{Parser, Subcommand, ValueEnum};

use gkod::descriptors::{gk_of, order_of, parse_group_expr, pattern_of, GroupExpr};
use gkod::numtheory::{sieve, SievedRange};
use gkod::primegraph::{Family, MATERIALIZE_LIMIT};
use gkod::theorem::{
    check_candidate, od_class, required_sieve_limit, search_candidates, verify_main_theorem,
};
use gkod::Error;

use output::{GraphDoc, OdClassDoc, OrderDoc, SearchDoc};

const EXIT_FAIL: i32 = 2;
const EXIT_NON_QUALIFYING: i32 = 3;
const EXIT_RESOURCE: i32 = 4;
const EXIT_INPUT: i32 = 5;

#[derive(Parser)]
#[command(
    name = "gkod",
    version,
    about = "Prime graphs, degree patterns, and order/degree-pattern classes of alternating and symmetric groups"
)]
struct Cli {
    /// Output format (dot is valid only for the graph command)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Upper bound on the sieve size; each command sieves only as far as it
    /// actually needs
    #[arg(long, global = true, default_value_t = 20_000_000)]
    sieve_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Alt,
    Sym,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Alt => Family::Alt,
            FamilyArg::Sym => Family::Sym,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render the prime graph of a group expression
    Graph { expr: String },
    /// Render the degree pattern of a group expression
    Degpat { expr: String },
    /// Print the order of a group expression in factored form
    Order { expr: String },
    /// Scan alpha = 1..=N for primes p = 5^alpha - 6 with p+2, p+4 composite
    Search {
        #[arg(long)]
        max_alpha: u32,
    },
    /// Check the order and degree-pattern identities for a qualifying alpha
    Verify {
        #[arg(long)]
        alpha: u32,
    },
    /// List the same-OD class (lower-bound witnesses) for a qualifying alpha
    Odclass {
        #[arg(long)]
        alpha: u32,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match &err {
            Error::Parse(_) => EXIT_INPUT,
            Error::NonQualifying { .. } => EXIT_NON_QUALIFYING,
            Error::SieveTooSmall { .. }
            | Error::InvalidSieveLimit(_)
            | Error::GraphTooLarge { .. }
            | Error::ProductTooLarge { .. }
            | Error::PartitionTooLarge { .. }
            | Error::OracleRangeExceeded { .. }
            | Error::AlphaOutOfRange { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Graph { expr } => cmd_graph(&expr, cli.format, cli.sieve_limit),
        Command::Degpat { expr } => cmd_degpat(&expr, cli.format, cli.sieve_limit),
        Command::Order { expr } => cmd_order(&expr, cli.format, cli.sieve_limit),
        Command::Search { max_alpha } => cmd_search(max_alpha, cli.format),
        Command::Verify { alpha } => cmd_verify(alpha, cli.format, cli.sieve_limit),
        Command::Odclass { alpha, family } => {
            cmd_odclass(alpha, family.into(), cli.format, cli.sieve_limit)
        }
    }
}

/// Sieve exactly as far as needed, within the configured cap.
fn build_sieve(needed: u64, configured: u64) -> Result<SievedRange, Failure> {
    let needed = needed.max(2);
    if needed > configured {
        return Err(Error::SieveTooSmall {
            needed,
            limit: configured,
        }
        .into());
    }
    Ok(sieve(needed)?)
}

fn parse_expr(text: &str) -> Result<GroupExpr, Failure> {
    parse_group_expr(text).map_err(|e| Failure::from(Error::from(e)))
}

fn reject_dot(format: OutputFormat) -> Result<(), Failure> {
    if format == OutputFormat::Dot {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "dot output is only valid for the graph command".into(),
        });
    }
    Ok(())
}

fn cmd_graph(expr: &str, format: OutputFormat, sieve_cap: u64) -> Result<i32, Failure> {
    let e = parse_expr(expr)?;
    let needed = e.required_sieve_limit();
    if needed > MATERIALIZE_LIMIT {
        return Err(Error::GraphTooLarge {
            n: needed,
            threshold: MATERIALIZE_LIMIT,
        }
        .into());
    }
    let sieved = build_sieve(needed, sieve_cap)?;
    let graph = gk_of(&e, &sieved)?;
    match format {
        OutputFormat::Text => print!("{}", output::graph_text(&graph)),
        OutputFormat::Json => println!("{}", output::json(&GraphDoc::from_graph(&graph))),
        OutputFormat::Dot => print!("{}", output::dot(&graph)),
    }
    Ok(0)
}

fn cmd_degpat(expr: &str, format: OutputFormat, sieve_cap: u64) -> Result<i32, Failure> {
    reject_dot(format)?;
    let e = parse_expr(expr)?;
    let sieved = build_sieve(e.required_sieve_limit(), sieve_cap)?;
    let pattern = pattern_of(&e, &sieved)?;
    match format {
        OutputFormat::Text => print!("{}", output::pattern_text(&pattern)),
        OutputFormat::Json => println!("{}", output::json(&pattern)),
        OutputFormat::Dot => unreachable!(),
    }
    Ok(0)
}

fn cmd_order(expr: &str, format: OutputFormat, sieve_cap: u64) -> Result<i32, Failure> {
    reject_dot(format)?;
    let e = parse_expr(expr)?;
    let sieved = build_sieve(e.required_sieve_limit(), sieve_cap)?;
    let order = order_of(&e, &sieved)?;
    match format {
        OutputFormat::Text => println!("{order}"),
        OutputFormat::Json => println!("{}", output::json(&OrderDoc::from_order(&order))),
        OutputFormat::Dot => unreachable!(),
    }
    Ok(0)
}

fn cmd_search(max_alpha: u32, format: OutputFormat) -> Result<i32, Failure> {
    reject_dot(format)?;
    let candidates = search_candidates(max_alpha)?;
    match format {
        OutputFormat::Text => print!("{}", output::search_text(max_alpha, &candidates)),
        OutputFormat::Json => println!(
            "{}",
            output::json(&SearchDoc {
                max_alpha,
                candidates,
            })
        ),
        OutputFormat::Dot => unreachable!(),
    }
    Ok(0)
}

fn cmd_verify(alpha: u32, format: OutputFormat, sieve_cap: u64) -> Result<i32, Failure> {
    reject_dot(format)?;
    let witness = check_candidate(alpha)?;
    if !witness.qualifies {
        return Err(Error::NonQualifying {
            alpha,
            reason: witness.reason.unwrap_or_default(),
        }
        .into());
    }
    let sieved = build_sieve(required_sieve_limit(alpha)?, sieve_cap)?;
    let report = verify_main_theorem(alpha, &sieved)?;
    match format {
        OutputFormat::Text => print!("{}", output::verify_text(&report)),
        OutputFormat::Json => println!("{}", output::json(&report)),
        OutputFormat::Dot => unreachable!(),
    }
    Ok(if report.pass { 0 } else { EXIT_FAIL })
}

fn cmd_odclass(
    alpha: u32,
    family: Family,
    format: OutputFormat,
    sieve_cap: u64,
) -> Result<i32, Failure> {
    reject_dot(format)?;
    let witness = check_candidate(alpha)?;
    if !witness.qualifies {
        return Err(Error::NonQualifying {
            alpha,
            reason: witness.reason.unwrap_or_default(),
        }
        .into());
    }
    let sieved = build_sieve(required_sieve_limit(alpha)?, sieve_cap)?;
    let members = od_class(alpha, family, &sieved)?;
    match format {
        OutputFormat::Text => {
            for m in &members {
                println!("{m}");
            }
        }
        OutputFormat::Json => println!(
            "{}",
            output::json(&OdClassDoc {
                alpha,
                family,
                count: members.len() as u64,
                members: members.iter().map(|m| m.to_string()).collect(),
            })
        ),
        OutputFormat::Dot => unreachable!(),
    }
    Ok(0)
}
