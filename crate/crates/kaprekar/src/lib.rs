//! Kaprekar's transformation in arbitrary even bases.
//!
//! The transformation sorts the digits of an `n`-digit number (leading
//! zeros retained), subtracts the ascending arrangement from the descending
//! one, and repeats. Because digit order never matters, the natural state is
//! not a number but a *digit multiset* — here a [`KaprekarIndex`], the
//! vector of digit occurrence counts. This crate provides:
//!
//! - the transformation itself, computed two independent ways
//!   ([`kaprekar_step`] on indices via difference profiles, and
//!   [`kaprekar_step_subtraction`] on concrete digit strings),
//! - orbit walking and canonical cycle records ([`iterate_to_cycle`],
//!   [`CycleRecord`]),
//! - the binary-order function [`sigma`] and the digit-pair orbits behind
//!   symmetric cycle lengths ([`i_cycles`]),
//! - a complete taxonomy of fixed points and cycles in bases 4, 6 and 8
//!   ([`classify_fixed_point`], [`classify_cycle`], [`catalogue`]),
//! - closed-form counting of every class ([`enumeration`]),
//! - an exhaustive parallel survey oracle that walks the entire state space
//!   and checks the catalogue and counts against reality ([`oracle`]),
//! - the full case analysis of the base-4 succession map, with an
//!   exhaustive replay harness ([`base4`]).
//!
//! Digit counts are exact: everything is integer arithmetic, and every
//! catalogued object is re-verified by actually stepping it.
//!
//! ```
//! use kaprekar::{
//!     kaprekar_step, kaprekar_step_subtraction, BaseConfig, DigitString, KaprekarIndex,
//! };
//!
//! let base = BaseConfig::new(10)?;
//! let digits = DigitString::parse(base, "3524")?;
//! let difference = kaprekar_step_subtraction(&digits)?; // 5432 - 2345
//! assert_eq!(difference.to_string(), "3087");
//!
//! let next = kaprekar_step(&KaprekarIndex::from_digits(&digits))?;
//! assert_eq!(next, KaprekarIndex::from_digits(&difference));
//! # Ok::<(), kaprekar::Error>(())
//! ```

pub mod base;
pub mod base4;
pub mod catalogue;
pub mod classify;
pub mod digits;
pub mod enumeration;
pub mod error;
pub mod index;
pub mod oracle;
pub mod orbit;
pub mod sigma;
pub mod transform;

pub use base::BaseConfig;
pub use classify::{classify_cycle, classify_fixed_point, ClassKind, ClassLabel};
pub use digits::{compare_value, DigitString};
pub use error::{Error, Result};
pub use index::{digit_sum, KaprekarIndex};
pub use orbit::{
    canonicalize_cycle, cycle_length, iterate_to_cycle, CycleOrdering, CycleRecord, Trajectory,
};
pub use sigma::{i_cycles, sigma};
pub use transform::{difference_profile, kaprekar_step, kaprekar_step_subtraction};
