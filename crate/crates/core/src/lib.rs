//! Combinatorial machinery for small genuine representations of split
//! double covers: root systems at half-integral infinitesimal character,
//! Weyl group characters and truncated induction, nilpotent orbits, the
//! R_D diagram group, the Cayley counting argument and K-type tables.
//!
//! Everything is exact. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod ktypes;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod orbits;
pub mod params;
pub mod partition;
pub mod rd;
pub mod rootsys;
pub mod weyl;
pub mod weylrep;

pub use error::{Error, Result};
pub use rootsys::{CartanKind, CartanType, RootSystem, TypeId, Weight};

/// Exact rational scalar used for every coordinate.
pub type Q = num_rational::Ratio<i64>;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Shorthand for `n/d`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}
