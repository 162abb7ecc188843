//! Rational homotopy ranks of generalised symmetric spaces `G/H`.
//!
//! Two independent routes are provided: a closed-form rule list over
//! exponent multisets ([`homotopy::ranks_via_theorem`]) and an explicit
//! Cartan algebra followed by Sullivan reduction
//! ([`homotopy::ranks_via_cartan`]). All arithmetic is exact.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cgda;
pub mod embedding;
pub mod error;
pub mod homotopy;
pub mod liedata;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
