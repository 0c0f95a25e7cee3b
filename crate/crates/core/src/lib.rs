//! Exact computation on MV-algebra spectra.
//!
//! The crate builds a catalog of MV-algebras — finite Łukasiewicz chains,
//! finite products, Chang's algebra, and lexicographic perfect algebras —
//! and computes their implication filters, prime spectra, counits, Conrad
//! filter, and localizations at primes, with every construction validated
//! against independent oracles. The `mvalg` binary exposes the same engine
//! on the command line.

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod conrad;
pub mod element;
pub mod error;
pub mod filters;
pub mod localize;
pub mod parse;
pub mod spectrum;
pub mod verify;

pub use algebra::{build, Algebra, AlgebraExpr, Op, OpResult, Shape};
pub use axioms::{check_mv_axioms, AxiomFailure, AxiomReport};
pub use conrad::{conrad_filter, counits, is_counit, CounitWitness};
pub use element::Element;
pub use error::{Error, Result};
pub use filters::{generate_filter, is_prime, Filter, FilterBody};
pub use localize::{ell, localize, quotient, Morphism, QuotientAlgebra};
pub use parse::{parse_algebra, parse_element, parse_filter};
pub use spectrum::{spectrum, stem, SpectrumKind, SpectrumPoset};
pub use verify::{run_all, CheckResult, CATALOG};
