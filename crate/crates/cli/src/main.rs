//! Command-line front end over the sign-sequence library.
//!
//! Exit codes: 0 on success, 1 on domain errors (not separated, minus tail,
//! cofinality gap, underflow, too short), 2 on syntax errors.

use std::cmp::Ordering;
use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use surreal::oracle::{brute_min_separator, FlatSeq};
use surreal::{
    inf_star, sep, separates, separation_length, shortest_separator, shortest_separator_via_sep,
    sup_star, witness_set, Ordinal, ParseError, SepError, SignQuery, SignSeq, SurrealSet,
};

#[derive(Parser)]
#[command(name = "surreal", version, about = "Exact arithmetic of surreal sign sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two surreals; prints <, = or >
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the length of a surreal as an ordinal
    Len {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Print the initial segment of a surreal below an ordinal
    Restrict {
        #[arg(allow_hyphen_values = true)]
        a: String,
        gamma: String,
    },
    /// Print the sign of a surreal at a position, or "undefined"
    At {
        #[arg(allow_hyphen_values = true)]
        a: String,
        gamma: String,
    },
    /// Print sup* of a set
    Sup {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Print inf* of a set
    Inf {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Print the ordered separator sep(a, b)
    Sep {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print a surreal separating two sets
    Separate {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Sep)]
        method: Method,
    },
    /// Report whether a surreal separates two sets; prints true or false
    Check {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Print a set whose sup* is the given surreal
    Witness {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Naive reference computations
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Ordinal arithmetic
    Ord {
        #[command(subcommand)]
        command: OrdCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// sep(sup* S, inf* T)
    Sep,
    /// cut the padded prolongments at their first difference
    Hat,
    /// the longer of sup* S and inf* T
    Endpoint,
    /// exhaustive search over finite sign lists (finite sets only)
    Brute,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustively search for the shortest separator of two finite sets
    Bruteforce {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum OrdCommand {
    /// Ordinal sum a + b
    Add { a: String, b: String },
    /// The unique x with a + x = b
    Sub { a: String, b: String },
    /// Compare two ordinals; prints <, = or >
    Cmp { a: String, b: String },
}

enum CliError {
    Syntax(String),
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(m) | CliError::Domain(m) => write!(f, "{}", m),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> CliError {
        CliError::Syntax(e.to_string())
    }
}

impl From<SepError> for CliError {
    fn from(e: SepError) -> CliError {
        let mut message = e.to_string();
        if let SepError::NotSeparated {
            witness: Some((u, v)),
        } = &e
        {
            message.push_str(&format!(" (witness: {} >= {})", u, v));
        }
        CliError::Domain(message)
    }
}

fn parse_seq(text: &str) -> Result<SignSeq, CliError> {
    Ok(text.parse::<SignSeq>()?)
}

fn parse_ord(text: &str) -> Result<Ordinal, CliError> {
    Ok(text.parse::<Ordinal>()?)
}

/// Set arguments accept inline notation or `@file` with one item per line
/// and `#` comments.
fn parse_set(text: &str) -> Result<SurrealSet, CliError> {
    if let Some(path) = text.strip_prefix('@') {
        let contents = std::fs::read_to_string(path)
            .map_err(|e| CliError::Syntax(format!("cannot read {}: {}", path, e)))?;
        let mut set = SurrealSet::empty();
        for line in contents.lines() {
            let item = line.split('#').next().unwrap_or("").trim();
            if item.is_empty() {
                continue;
            }
            let parsed: SurrealSet = item.parse()?;
            set.elements.extend(parsed.elements);
            set.chains.extend(parsed.chains);
        }
        Ok(set)
    } else {
        Ok(text.parse::<SurrealSet>()?)
    }
}

fn order_symbol(ord: Ordering) -> &'static str {
    match ord {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn finite_flat_set(set: &SurrealSet, role: &str) -> Result<Vec<FlatSeq>, CliError> {
    if !set.chains.is_empty() {
        return Err(CliError::Domain(format!(
            "the brute-force method requires a finite {} set without chains",
            role
        )));
    }
    set.elements
        .iter()
        .map(|e| {
            FlatSeq::from_sign_seq(e).ok_or_else(|| {
                CliError::Domain(format!(
                    "the brute-force method requires finite {} elements",
                    role
                ))
            })
        })
        .collect()
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Cmp { a, b } => {
            let (a, b) = (parse_seq(&a)?, parse_seq(&b)?);
            Ok(order_symbol(a.cmp(&b)).to_string())
        }
        Command::Len { a } => Ok(parse_seq(&a)?.length().to_string()),
        Command::Restrict { a, gamma } => {
            let (a, gamma) = (parse_seq(&a)?, parse_ord(&gamma)?);
            Ok(a.restrict(&gamma).to_string())
        }
        Command::At { a, gamma } => {
            let (a, gamma) = (parse_seq(&a)?, parse_ord(&gamma)?);
            Ok(match a.value_at(&gamma) {
                SignQuery::Plus => "+".to_string(),
                SignQuery::Minus => "-".to_string(),
                SignQuery::Undefined => "undefined".to_string(),
            })
        }
        Command::Sup { set } => Ok(sup_star(&parse_set(&set)?).to_string()),
        Command::Inf { set } => Ok(inf_star(&parse_set(&set)?).to_string()),
        Command::Sep { a, b } => {
            let (a, b) = (parse_seq(&a)?, parse_seq(&b)?);
            Ok(sep(&a, &b).to_string())
        }
        Command::Separate {
            left,
            right,
            method,
        } => {
            let (s, t) = (parse_set(&left)?, parse_set(&right)?);
            let value = match method {
                Method::Sep => shortest_separator_via_sep(&s, &t)?,
                Method::Hat => shortest_separator(&s, &t)?,
                Method::Endpoint => surreal::endpoint_separator(&s, &t)?.1,
                Method::Brute => {
                    let flat_s = finite_flat_set(&s, "left")?;
                    let flat_t = finite_flat_set(&t, "right")?;
                    let eps = separation_length(&s, &t)
                        .as_finite()
                        .expect("finite sets have finite canonical bounds")
                        as usize;
                    brute_min_separator(&flat_s, &flat_t, eps)
                        .map_err(|e| CliError::Domain(e.to_string()))?
                        .to_sign_seq()
                }
            };
            Ok(value.to_string())
        }
        Command::Check { w, left, right } => {
            let w = parse_seq(&w)?;
            let (s, t) = (parse_set(&left)?, parse_set(&right)?);
            Ok(separates(&w, &s, &t).to_string())
        }
        Command::Witness { w } => {
            let w = parse_seq(&w)?;
            let set = witness_set(&w).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(set.to_string())
        }
        Command::Oracle {
            command: OracleCommand::Bruteforce { left, right, bound },
        } => {
            let flat_s = finite_flat_set(&parse_set(&left)?, "left")?;
            let flat_t = finite_flat_set(&parse_set(&right)?, "right")?;
            let w = brute_min_separator(&flat_s, &flat_t, bound)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(w.to_sign_seq().to_string())
        }
        Command::Ord { command } => match command {
            OrdCommand::Add { a, b } => Ok(parse_ord(&a)?.add(&parse_ord(&b)?).to_string()),
            OrdCommand::Sub { a, b } => {
                let (a, b) = (parse_ord(&a)?, parse_ord(&b)?);
                let diff = a
                    .left_sub(&b)
                    .map_err(|e| CliError::Domain(e.to_string()))?;
                Ok(diff.to_string())
            }
            OrdCommand::Cmp { a, b } => {
                let (a, b) = (parse_ord(&a)?, parse_ord(&b)?);
                Ok(order_symbol(a.cmp(&b)).to_string())
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            println!("{}", output);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err);
            match err {
                CliError::Domain(_) => ExitCode::from(1),
                CliError::Syntax(_) => ExitCode::from(2),
            }
        }
    }
}
