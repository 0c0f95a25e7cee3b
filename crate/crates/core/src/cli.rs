use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::algebra::{build, Algebra};
use crate::axioms::check_mv_axioms;
use crate::conrad;
use crate::error::Result;
use crate::filters::Filter;
use crate::localize;
use crate::parse;
use crate::spectrum::{self, SpectrumKind};
use crate::verify;

/// Exact computation on MV-algebra spectra: filters, counits, the Conrad
/// filter, localization at a prime, and a full verification suite.
#[derive(Parser, Debug)]
#[command(name = "mvalg", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse literals and print their normal forms
    Parse {
        /// Algebra description, e.g. "product[chain:2,lex:2]"
        algebra: String,
        /// Filter literal to parse in the algebra's context
        #[arg(long)]
        filter: Option<String>,
        /// Element literal to parse in the algebra's context
        #[arg(long)]
        element: Option<String>,
    },
    /// Check the MV-algebra axioms
    Axioms {
        algebra: String,
        /// Coordinate bound for symbolic algebras
        #[arg(long, default_value_t = 5)]
        window: u64,
    },
    /// Print the prime spectrum as nodes and covering edges
    Pspec {
        algebra: String,
        /// Restrict to primes comparable to this prime filter
        #[arg(long)]
        at: Option<String>,
        /// Write a Graphviz diagram to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List all counits in scope
    Counits {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: u64,
    },
    /// Print the Conrad filter
    Conrad { algebra: String },
    /// Print the localization filter ℓ(P)
    Ell {
        algebra: String,
        /// The prime filter P
        #[arg(long)]
        at: String,
    },
    /// Print the localization L/ℓ(P) and its spectrum isomorphism
    Localize {
        algebra: String,
        /// The prime filter P
        #[arg(long)]
        at: String,
    },
    /// Run the full verification suite
    Verify {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: u64,
    },
    /// List the built-in algebra catalog
    Catalog,
}

fn algebra(text: &str) -> Result<Algebra> {
    build(&parse::parse_algebra(text)?)
}

fn filter(text: &str, a: &Algebra) -> Result<Filter> {
    parse::parse_filter(text, a)
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Parse { algebra: at, filter: ft, element: et } => {
            let a = algebra(&at)?;
            println!("{a}");
            if let Some(ft) = ft {
                println!("{}", filter(&ft, &a)?);
            }
            if let Some(et) = et {
                println!("{}", parse::parse_element(&et, &a)?);
            }
            Ok(0)
        }
        Command::Axioms { algebra: at, window } => {
            let a = algebra(&at)?;
            let report = check_mv_axioms(&a, window);
            match report.failure {
                None => {
                    println!("PASS");
                    Ok(0)
                }
                Some(f) => {
                    let witness: Vec<String> = f.witness.iter().map(|e| e.to_string()).collect();
                    println!("FAIL {} at ({})", f.law, witness.join(", "));
                    Ok(1)
                }
            }
        }
        Command::Pspec { algebra: at, at: restrict, dot } => {
            let a = algebra(&at)?;
            let poset = match restrict {
                None => spectrum::spectrum(&a, SpectrumKind::Prime, None)?,
                Some(ft) => {
                    let f = filter(&ft, &a)?;
                    spectrum::spectrum(&a, SpectrumKind::Prime, Some(&f))?
                }
            };
            for name in poset.names() {
                println!("node {name}");
            }
            for (i, j) in poset.covers() {
                println!("edge {} {}", poset.names()[i], poset.names()[j]);
            }
            if let Some(path) = dot {
                std::fs::write(&path, poset.to_dot()).map_err(|e| {
                    crate::error::Error::Semantic(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(0)
        }
        Command::Counits { algebra: at, window } => {
            let a = algebra(&at)?;
            for c in conrad::counits(&a, window)? {
                println!("{c}");
            }
            Ok(0)
        }
        Command::Conrad { algebra: at } => {
            let a = algebra(&at)?;
            let n = conrad::conrad_filter(&a)?;
            if n.is_whole() {
                println!("whole (improper)");
            } else {
                println!("{n}");
            }
            Ok(0)
        }
        Command::Ell { algebra: at, at: ft } => {
            let a = algebra(&at)?;
            let p = filter(&ft, &a)?;
            println!("{}", localize::ell(&a, &p)?);
            Ok(0)
        }
        Command::Localize { algebra: at, at: ft } => {
            let a = algebra(&at)?;
            let p = filter(&ft, &a)?;
            let loc = localize::localize(&a, &p)?;
            println!("{}", loc.algebra());
            let iso = localize::spectrum_iso_check(&a, &p)?;
            for (i, &j) in iso.map.iter().enumerate() {
                println!("iso {} -> {}", iso.source.names()[i], iso.target.names()[j]);
            }
            Ok(0)
        }
        Command::Verify { algebra: at, window } => {
            let a = algebra(&at)?;
            let results = verify::run_all(&a, window);
            let mut all_pass = true;
            for r in &results {
                println!("{}", r.line());
                all_pass &= r.pass;
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Catalog => {
            for entry in verify::CATALOG {
                println!("{entry}");
            }
            Ok(0)
        }
    }
}

/// Entry point: returns the process exit code (0 pass, 1 check failure,
/// 2 usage/parse/semantic error).
pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
