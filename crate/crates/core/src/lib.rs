//! Counting and bounding MSTD (more sums than differences) sets in finite
//! abelian groups.
//!
//! - [`group`]: cyclic-product groups, element orders, half-sets.
//! - [`sumset`]: subset bit vectors, sumsets, difference sets, integer lifts.
//! - [`enumerate`]: exhaustive parallel counts and histograms.
//! - [`forbiddance`]: forbiddance graphs and their component shapes.
//! - [`fib`]: exact independent-set counts.
//! - [`bounds`]: upper, lower and asymptotic expressions.
//! - [`verify`]: named property sweeps used by the CLI.

pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod fib;
pub mod forbiddance;
pub mod graph;
pub mod group;
pub mod interval;
pub mod sumset;
pub mod verify;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupSpec};
pub use sumset::SubsetMask;

/// Serializes big integers as decimal strings.
pub(crate) fn serde_decimal<S: serde::Serializer>(
    n: &num_bigint::BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}
