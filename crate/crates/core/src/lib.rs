//! Tanner-graph analysis for hard-decision bit-flipping decoders.
//!
//! This crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`graph`]: Tanner graphs, plain graphs, girth and the structural transforms
//!   (reduced graph, γ-augmentation, edge-vertex incidence and its inverse).
//! * [`bounds`]: Moore bound, cage orders and the correction guarantees derived
//!   from them, in exact rational arithmetic.
//! * [`decode`]: parallel and serial bit flipping for LDPC codes, and the
//!   parallel flip-message decoder for generalized LDPC codes.
//! * [`expansion`]: exhaustive certification of subset expansion.
//! * [`trapping`]: trapping-set conditions, constructions, embeddings and
//!   critical numbers.
//! * [`peg`]: progressive-edge-growth construction with a hard girth target.
//! * [`qc`]: quasi-cyclic lifts and a girth-targeted exponent search.
//!
//! File formats, the sweep harness and the command-line tool live in the
//! `tanner` companion crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod combinations;
pub mod decode;
mod error;
pub mod expansion;
pub mod gf2;
pub mod graph;
pub mod peg;
pub mod qc;
pub mod trapping;

pub use error::{Error, Result};

/// Exact rational used by every bound and threshold.
pub type Rational = num_rational::Ratio<i128>;
