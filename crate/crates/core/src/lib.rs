//! Interval pattern embedding and avoidance for Weyl groups of finite
//! crystallographic root systems.
//!
//! The crate is organized bottom-up:
//!
//! * [`roots`] builds exact rational realizations of root systems;
//! * [`weyl`] provides group elements (as permutations of roots with cached
//!   inversion sets), Bruhat order, intervals and interval isomorphism;
//! * [`kl`] computes Kazhdan–Lusztig polynomials;
//! * [`patterns`] enumerates subsystem embeddings and decides pattern and
//!   interval pattern embedding and avoidance;
//! * [`harness`] holds the exhaustive verification suites and the pieces the
//!   command-line tool is built from.

pub mod error;
pub mod harness;
pub mod kl;
pub mod patterns;
pub mod roots;
pub mod weyl;

pub use error::{Error, Result};
