//! A workbench for minimum distances of classical and quantum CSS codes
//! over GF(2), built around the reductions that make distance computation
//! hard and the brute-force oracles that can still check them at desk
//! scale.
//!
//! The crate has three layers:
//!
//! * **Objects.** [`gf2`] provides bit-packed matrices and vectors with the
//!   handful of exact kernels everything else needs (reduced row echelon
//!   form, kernel bases, Kronecker products, systematic forms). [`codes`],
//!   [`graphs`], and [`css`] build classical codes, graphs (including
//!   polarity graphs of projective planes), and CSS quantum codes — notably
//!   the hypergraph product of two classical parity checks.
//!
//! * **Oracles.** [`distance`] computes exact minimum distances by two
//!   independent strategies — codeword enumeration over `2^k` combinations
//!   and weight-limited support search — for classical codes, CSS codes,
//!   and graph states. Results carry witnesses, and ties are broken by a
//!   fixed value order so every answer is deterministic, independent of
//!   thread count.
//!
//! * **Reductions.** [`reduce`] implements distance-preserving maps from
//!   classical minimum-distance instances to CSS codes, amplified-gap
//!   instances, (dual-)distance instances, and graph states. Each map
//!   returns a machine-checkable certificate: the claimed distance identity
//!   is recomputed on both sides by the oracles and the verdict recorded.
//!
//! The `qdist` binary exposes all of this on the command line; see the
//! crate README for the file formats and exit codes.

pub mod codes;
pub mod css;
pub mod distance;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod matio;
pub mod reduce;
pub mod report;
pub mod sweep;

pub mod cli;

pub use codes::{DecisionInstance, Gap, LinearCode};
pub use css::CssCode;
pub use distance::{DistanceResult, DistanceValue, Verdict};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec, ColPermutation};
pub use graphs::Graph;
pub use reduce::ReductionCertificate;
