//! Surreal numbers as transfinite sign sequences, with exact order
//! comparisons, canonical bounds for sets, and shortest separating elements.
//!
//! The building blocks are [`ordinal::Ordinal`] (Cantor normal form below
//! epsilon-zero), [`sign_seq::SignSeq`] (run-length encoded sign sequences),
//! and [`sets::SurrealSet`] (finite elements plus omega-indexed chains).
//! On top of those, [`separation`] computes bounding elements and the unique
//! shortest surreal between two separated sets, and [`oracle`] provides
//! deliberately naive reimplementations for differential testing.

pub mod ordinal;
pub mod oracle;
mod parse;
pub mod separation;
pub mod sets;
pub mod sign_seq;

pub use ordinal::{Classification, Ordinal, OrdinalError};
pub use parse::ParseError;
pub use separation::{
    endpoint_separator, is_strict_upper_bound, is_weak_upper_bound, prolonged_separator, sep,
    separates, separation_length, shortest_separator, shortest_separator_via_sep, Endpoint,
    SepError,
};
pub use sets::{
    all_greater_than, all_less_than, inf_star, length_bound, sample_elements, set_less, set_max,
    set_min, sup_star, witness_set, ChainSpec, SetError, SetMax, SurrealSet,
};
pub use sign_seq::{Sign, SignQuery, SignSeq};
