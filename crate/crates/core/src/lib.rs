//! McEliece-type public-key encryption with arbitrary-weight error vectors.
//!
//! The crate is `no_std` (it needs `alloc`). It contains everything that is
//! pure computation:
//!
//! - [`gf2`]: bit-packed vectors and matrices over GF(2), Gaussian elimination,
//!   kernels and seeded random matrix generation.
//! - [`codes`]: linear codes with a cached information set, binary BCH codes,
//!   Gray-code weight enumeration and the Gilbert–Varshamov bound.
//! - [`classic`]: the original McEliece scheme with a complete syndrome-table
//!   decoder, used as the baseline.
//! - [`arberr`]: the masked scheme whose public key is `(G·M, Q·(G0+T)·M)` and
//!   whose error vectors may have any weight.
//! - [`attacks`]: information-set decoding, the direct brute-force attack and
//!   the syndrome-transform spectrum study.
//! - [`analysis`]: key-size and workfactor arithmetic.
//!
//! File formats, the command-line tool and parallel experiment runners live in
//! the `arbc` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod arberr;
pub mod attacks;
pub mod binom;
pub mod classic;
pub mod codes;
mod error;
pub mod gf2;
pub mod seed;

pub use error::{Error, Result};
