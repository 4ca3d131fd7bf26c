//! Quaternary locally repairable codes: constructions and verification.
//!
//! This crate builds every family of Singleton-optimal `(r, δ)` locally
//! repairable code over GF(4) with `δ > 2`, together with the machinery
//! needed to certify them at desk scale:
//!
//! * exact arithmetic in GF(4) and GF(256) ([`galois`]),
//! * dense linear algebra over GF(4) ([`linalg`]),
//! * linear codes with exhaustive distance and weight enumeration ([`codes`]),
//! * locality verification: the Singleton-type bound, repair-group discovery,
//!   chains of dual subcodes, residue codes, design checks and erasure repair
//!   ([`lrc`]),
//! * the explicit code constructions ([`constructions`]),
//! * a parameter catalog and text-format serialization ([`catalog`],
//!   [`textio`]); the `qlrc` binary exposes all of it on the command line.
//!
//! Everything is exact: no floating point, no probabilistic checks. Distance
//! claims are either established by full codeword enumeration (dimension
//! ≤ [`codes::DISTANCE_CAP`]) or by structural certificates that are
//! themselves checked exhaustively at the component level.

pub mod catalog;
pub mod codes;
pub mod constructions;
mod error;
pub mod galois;
pub mod linalg;
pub mod lrc;
pub mod textio;

pub use error::{Error, Result};
