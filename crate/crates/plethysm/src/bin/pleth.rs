//! Command-line front end: Schur expansions of plethysms, single
//! coefficients, multiplicity-freeness verdicts, witness certificates,
//! domino spin splits, and the small-pairs table.
//!
//! Partition arguments are separated by `/`, e.g. `pleth coeff 4,4 / 2 / 10,4,2`.

use clap::{Parser, Subcommand};
use plethysm::classifier::{is_multiplicity_free, witness};
use plethysm::domino::symmetric_square_split;
use plethysm::engine::{Engine, EngineConfig};
use plethysm::oracle::{Oracle, OracleConfig};
use plethysm::output::{self, OutputRecord, TableRow};
use plethysm::{Error, Partition, Result};

#[derive(Parser)]
#[command(
    name = "pleth",
    version,
    about = "plethysm coefficients of Schur functions"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Engine degree budget (default 24; env PLETH_MAX_DEGREE).
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Worker thread cap (env PLETH_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full Schur expansion of s_nu o s_mu: `expand NU / MU`.
    Expand {
        /// Cross-check against the power-sum oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Single coefficient: `coeff NU / MU / LAMBDA`.
    Coeff {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Multiplicity-freeness verdict: `mf NU / MU` (exit 0 = free, 1 = not).
    Mf {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Witness certificate for a pair that is not multiplicity-free.
    Witness {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Spin split of Dom(mu, .): s_2 o s_mu and s_1,1 o s_mu.
    Domino {
        /// Render one tableau of each spin.
        #[arg(long)]
        render: bool,
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// p(nu, mu) for all pairs with |nu| + |mu| <= SIZE (1s suppressed in text).
    Table { size: u32 },
}

fn split_partitions(args: &[String], expect: usize) -> Result<Vec<Partition>> {
    let joined = args.join(" ");
    let pieces: Vec<&str> = joined.split('/').map(str::trim).collect();
    if pieces.len() != expect {
        return Err(Error::Parse {
            input: joined.clone(),
            reason: format!("expected {expect} partitions separated by '/'"),
        });
    }
    pieces.iter().map(|s| Partition::parse(s)).collect()
}

fn env_u32(name: &str) -> Option<u32> {
    std::env::var(name).ok()?.parse().ok()
}

fn run(cli: Cli) -> Result<OutputRecord> {
    let max_degree = cli
        .max_degree
        .or_else(|| env_u32("PLETH_MAX_DEGREE"))
        .unwrap_or(plethysm::engine::DEFAULT_MAX_DEGREE);
    let threads = cli
        .threads
        .or_else(|| env_u32("PLETH_THREADS").map(|t| t as usize));
    if let Some(threads) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    }
    let engine = Engine::new(EngineConfig { max_degree });

    match cli.cmd {
        Cmd::Expand { oracle, args } => {
            let ps = split_partitions(&args, 2)?;
            let (nu, mu) = (&ps[0], &ps[1]);
            let x = engine.expand(nu, mu)?;
            let agrees = if oracle {
                let o = Oracle::new(OracleConfig {
                    max_degree: max_degree.max(plethysm::oracle::DEFAULT_ORACLE_MAX_DEGREE),
                });
                let other = o.plethysm_expand_powersum(nu, mu)?;
                Some(other == x.terms)
            } else {
                None
            };
            Ok(output::expand_record(nu, mu, &x, agrees))
        }
        Cmd::Coeff { args } => {
            let ps = split_partitions(&args, 3)?;
            let c = engine.coefficient(&ps[0], &ps[1], &ps[2])?;
            Ok(output::coeff_record(&ps[0], &ps[1], &ps[2], &c))
        }
        Cmd::Mf { args } => {
            let ps = split_partitions(&args, 2)?;
            Ok(output::mf_record(&is_multiplicity_free(&ps[0], &ps[1])))
        }
        Cmd::Witness { args } => {
            let ps = split_partitions(&args, 2)?;
            let cert = witness(&engine, &ps[0], &ps[1])?;
            Ok(output::witness_record(&cert))
        }
        Cmd::Domino { render, args } => {
            let ps = split_partitions(&args, 1)?;
            let mu = &ps[0];
            let (plus, minus) = symmetric_square_split(mu, max_degree)?;
            let renders = if render {
                let sample = |x: &plethysm::engine::SchurExpansion, spin: u8| {
                    x.keys_lex_desc().first().and_then(|alpha| {
                        plethysm::domino::enumerate_dom(mu, alpha.parts())
                            .ok()?
                            .into_iter()
                            .find(|t| t.spin() == spin)
                            .map(|t| t.render())
                    })
                };
                match (sample(&plus, 0), sample(&minus, 1)) {
                    (Some(a), Some(b)) => Some((a, b)),
                    _ => None,
                }
            } else {
                None
            };
            Ok(output::domino_record(mu, &plus, &minus, renders))
        }
        Cmd::Table { size } => {
            use rayon::prelude::*;
            let mut pairs = Vec::new();
            for n in 1..size {
                for m in 1..=(size - n) {
                    for nu in plethysm::partition::partitions_of(n) {
                        for mu in plethysm::partition::partitions_of(m) {
                            pairs.push((nu.clone(), mu));
                        }
                    }
                }
            }
            let rows: Result<Vec<TableRow>> = pairs
                .par_iter()
                .map(|(nu, mu)| {
                    Ok(TableRow {
                        nu: nu.clone(),
                        mu: mu.clone(),
                        max: engine.max_multiplicity(nu, mu)?,
                    })
                })
                .collect();
            Ok(output::table_record(size, &rows?))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(record) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&record.json).unwrap());
            } else {
                print!("{}", record.human);
            }
            std::process::exit(record.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
