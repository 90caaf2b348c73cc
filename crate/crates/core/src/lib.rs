//! Stanley decompositions and Stanley depth of critical monomial ideals.
//!
//! The crate works entirely with monomials of `S = K[x_1, ..., x_n]`:
//!
//! - [`monomial`] and [`parse`]: exponent vectors, minimal generators and
//!   the text/JSON input formats.
//! - [`hilbert`]: exact Hilbert series, Macaulay representations and the
//!   O-sequence test.
//! - [`lex`]: lexsegment ideals, `I^lex` and the critical-ideal test.
//! - [`critical`]: canonical critical ideals with their explicit Stanley
//!   decompositions of `I` and `S/I`, plus an exhaustive partition check.
//! - [`homological`]: Stanley depth by exact interval-partition search and
//!   depth from Koszul homology over a prime field.
//! - [`stanleyize`]: Stanley ideals with prescribed depth and Hilbert
//!   function for non-critical inputs.

pub mod config;
pub mod critical;
pub mod error;
pub mod hilbert;
pub mod homological;
pub mod lex;
pub mod monomial;
pub mod parse;
pub mod stanleyize;

pub use config::Limits;
pub use critical::{
    build_canonical, ideal_direct_sum, piece_contains, scaffold, sdepth_of_decomposition,
    stanley_decomposition, verify_partition, CanonicalCriticalSpec, DecompositionScaffold, Mode,
    PartitionCheck, StanleyDecomposition, StanleyPiece,
};
pub use error::{Error, ErrorKind, Result};
pub use hilbert::{
    hilbert_series_numerator, hilbert_values, is_o_sequence, macaulay_growth, macaulay_rep,
    HilbertData, MacaulayRep,
};
pub use homological::{betti_numbers, depth_ideal, depth_quotient, sdepth_oracle, BettiTable};
pub use lex::{is_critical, is_lexsegment, is_universal_lexsegment, lex_ideal_of, lex_segment, LexIdealResult};
pub use monomial::{lex_compare, minimal_generators, quotient, Monomial, MonomialIdeal};
pub use parse::{format_monomial, parse_ideal, parse_ideal_any, parse_ideal_json, parse_monomial, parse_spec};
pub use stanleyize::{difference_sequence, stanleyize, StanleyizeCertificate};
