//! `cantor`: command-line front end for cantor-core.
//!
//! Exit status: 0 for success or a true predicate, 1 for a false predicate,
//! 2 for any error.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use cantor_core::io::{parse_permutation, parse_prefix_code_map, serialize_prefix_code_map};
use cantor_core::random::{
    random_core, random_group_element, random_permutation_transducer, random_prefix_code_map, random_transducer,
};
use cantor_core::{
    classify_subgroup, compose, core_of, from_prefix_code_map, invert, is_bisynchronizing, is_in_gnr, minimize,
    order_in_on, outer_class_equal, parse, serialize, sync_level, twist_transducer, Alphabet, Error,
    EventuallyPeriodicPoint, Synchronization, Transducer, DEFAULT_ORDER_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};

const AFTER_HELP: &str = "\
Maps act on the right and compose left to right: `compose A B` is the map
x -> (x.A).B, that is, apply A first and then B.

Every FILE argument may be `-` to read standard input.";

#[derive(Parser)]
#[command(name = "cantor", version, about = "Transducers for homeomorphisms of Cantor spaces", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and check a document; prints each violation.
    Validate { file: PathBuf },
    /// Print the minimal transducer of the same map.
    Minimize { file: PathBuf },
    /// Print the canonical form of the minimal transducer.
    Canon { file: PathBuf },
    /// Evaluate on an eventually periodic point written `u | v`.
    Eval {
        file: PathBuf,
        point: String,
        /// Print only this many leading letters of the image.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Print the minimal transducer of A then B (left to right).
    Compose { a: PathBuf, b: PathBuf },
    /// Print the minimal transducer of the inverse map.
    Invert { file: PathBuf },
    /// Report the synchronizing level, core states, or a witness pair.
    Sync { file: PathBuf },
    /// Print the core as a core document.
    Core { file: PathBuf },
    /// Whether the map is given by a prefix-code map.
    Member { file: PathBuf },
    /// One-line subgroup summary of a bi-synchronizing map.
    Classify { file: PathBuf },
    /// Order of the outer class, searched up to the cap.
    Order {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: usize,
    },
    /// Whether two maps have strongly isomorphic cores.
    OuterEq { a: PathBuf, b: PathBuf },
    /// Build the transducer of a prefix-code map (`alphabet n= r=` then `u -> v` lines).
    MakePrefixMap { file: PathBuf },
    /// Build the transducer applying a digit permutation at every position.
    MakeTwist {
        /// Images of 0..n-1, e.g. `1 2 0` or `1,2,0`.
        permutation: String,
        #[arg(long)]
        r: u32,
    },
    /// Print a seeded random transducer or prefix-code map.
    Random {
        #[arg(long, value_enum, default_value_t = Kind::Transducer)]
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 4)]
        states: usize,
        #[arg(long, default_value_t = 2)]
        max_out: usize,
        /// Number of one-step expansions for prefix codes.
        #[arg(long, default_value_t = 3)]
        splits: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Any valid initial transducer.
    Transducer,
    /// A synchronous transducer permuting digits at each state.
    Permutation,
    /// A core transducer.
    Core,
    /// The minimal transducer of a random prefix-code map.
    Group,
    /// A random prefix-code map as text.
    PrefixMap,
}

fn read_text(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &PathBuf) -> Result<Transducer> {
    let text = read_text(path)?;
    parse(&text).with_context(|| format!("in {}", path.display()))
}

fn verdict(b: bool) -> ExitCode {
    println!("{b}");
    ExitCode::from(u8::from(!b))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => match parse(&read_text(&file)?) {
            Ok(_) => {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            }
            Err(e @ (Error::Document(_) | Error::Invalid(_))) => {
                println!("{e}");
                Ok(ExitCode::from(1))
            }
            Err(e) => Err(e.into()),
        },
        Command::Minimize { file } => {
            print!("{}", serialize(&minimize(&load(&file)?)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon { file } => {
            print!("{}", minimize(&load(&file)?)?.canonical_form()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { file, point, depth } => {
            let t = load(&file)?;
            let x: EventuallyPeriodicPoint = point.parse().context("reading the point")?;
            let y = t.eval_point(&x)?;
            match depth {
                Some(d) => println!("{}", y.prefix(d)),
                None => println!("{y}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose { a, b } => {
            print!("{}", serialize(&compose(&load(&a)?, &load(&b)?)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Invert { file } => {
            print!("{}", serialize(&invert(&load(&file)?)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sync { file } => {
            let t = load(&file)?;
            match sync_level(&t) {
                Synchronization::Level(m) => {
                    println!("level {m}");
                    let core = core_of(&t)?;
                    println!("core {}", core.names().join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                Synchronization::NotSynchronizing { pair, word } => {
                    println!("not synchronizing: {} {} return under {word}", t.name(pair.0), t.name(pair.1));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Core { file } => {
            print!("{}", serialize(&core_of(&load(&file)?)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { file } => Ok(verdict(is_in_gnr(&load(&file)?)?)),
        Command::Classify { file } => {
            let t = load(&file)?;
            if !is_bisynchronizing(&t)?.0 {
                println!("not bi-synchronizing");
                return Ok(ExitCode::from(1));
            }
            println!("{}", classify_subgroup(&t)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { file, cap } => {
            println!("{}", order_in_on(&load(&file)?, cap)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::OuterEq { a, b } => Ok(verdict(outer_class_equal(&load(&a)?, &load(&b)?)?)),
        Command::MakePrefixMap { file } => {
            let m = parse_prefix_code_map(&read_text(&file)?)?;
            print!("{}", serialize(&from_prefix_code_map(&m)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::MakeTwist { permutation, r } => {
            let sigma = parse_permutation(&permutation)?;
            let a = Alphabet::new(sigma.degree(), r)?;
            print!("{}", serialize(&twist_transducer(&sigma, a)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Random { kind, n, r, states, max_out, splits, seed } => {
            anyhow::ensure!(states >= 2 || matches!(kind, Kind::Core), "--states must be at least 2");
            anyhow::ensure!(states >= 1, "--states must be at least 1");
            let text = match kind {
                Kind::Core => serialize(&random_core(n, states, max_out, seed)?),
                kind => {
                    let a = Alphabet::new(n, r)?;
                    match kind {
                        Kind::Transducer => serialize(&random_transducer(a, states, max_out, seed)?),
                        Kind::Permutation => serialize(&random_permutation_transducer(a, states, seed)?),
                        Kind::Group => serialize(&random_group_element(a, splits, seed)?),
                        _ => serialize_prefix_code_map(&random_prefix_code_map(a, splits, seed)?),
                    }
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
