//! Invariants of virtual knot diagrams over the Alexander biquandle.
//!
//! The crate computes the affine index polynomial, the Sawollek
//! (generalized Alexander) polynomial and its three-variable refinement
//! over exact integer Laurent-polynomial arithmetic, and ships the
//! machinery used to cross-check them against each other: Cheng
//! colorings, biquandle relation matrices, fraction-free determinants,
//! Reidemeister-move rewriting and seeded fuzz campaigns.
//!
//! Modules:
//! - [`laurent`]: sparse Laurent polynomials in `(G, s, t)` with exact
//!   division and unit normalization.
//! - [`diagram`]: abstract oriented virtual knot diagrams (classical
//!   crossings only), parser, validator and random generator.
//! - [`affine`]: Cheng colorings, crossing weights, affine index
//!   polynomial.
//! - [`biquandle`]: relation matrices, determinants, Sawollek and
//!   ASawollek polynomials, `G`-expansion and the circuit-weight oracle.
//! - [`moves`]: R1/R2 rewrites used as the invariance harness.
//! - [`batch`]: deterministic (optionally data-parallel) trial driver
//!   and the fuzz/search campaigns built on it.

pub mod affine;
pub mod batch;
pub mod biquandle;
pub mod diagram;
pub mod laurent;
pub mod moves;

pub use diagram::Diagram;
pub use laurent::{LaurentPoly, Monomial, Var};
