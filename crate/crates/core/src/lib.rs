//! Exact combinatorics for the twofold metaplectic cover of `Sp_2n` over a
//! p-adic field with odd residue characteristic.
//!
//! Everything here manipulates parametrizing data: lattice vectors, square
//! classes, finitely supported Hecke elements, character tuples and
//! supersingular triples. The [`oracle`] module is the only place that touches
//! p-adic matrices; it recounts Satake coefficients for `SL_2` and `Sp_4` by
//! brute-force coset enumeration.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod characters;
pub mod classify;
pub mod cover;
mod error;
pub mod hecke;
pub mod oracle;
pub mod rootdata;
mod util;
pub mod weights;

pub use error::{Error, Result};
