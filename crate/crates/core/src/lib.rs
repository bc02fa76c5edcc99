//! Exact L-space detection for small Seifert fibered spaces over the
//! sphere, and analysis of integer families obtained by twisting along a
//! seiferter.
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
mod error;
pub mod families;
pub mod lspace;
pub mod seifert;
pub mod twist;

pub use arith::{simplest_in_interval, sorted_triple, triple_lt, ExtRational, Rational, SortedTriple};
pub use error::Error;
pub use lspace::{
    decide, sufficient_conditions, third_slot_threshold, witness_search, FoliationWitness, LSpaceSet, LSpaceVerdict,
    Reason, ThirdSlotThreshold,
};
pub use seifert::{
    classify, euler_number, h1_order, mirror, normalize, normalize_finite, Base, Classification, H1Order, SeifertForm,
    Tag,
};
