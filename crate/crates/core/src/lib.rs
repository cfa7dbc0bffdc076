//! Exact region-matrix invariants of oriented link diagrams.
//!
//! The crate builds Kashaev's region-indexed matrix of a diagram and the
//! classical objects it is compared against: Kauffman's corner-label
//! matrix, Goeritz matrices with their Gordon-Litherland corrections, and
//! Seifert matrices of braid closures. Everything is computed over the
//! integers or the rationals, so signatures, ranks and determinants are
//! exact.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod diagram;
mod error;
pub mod invariants;
pub mod matrices;
pub mod seifert;

pub use error::{Error, Result};
