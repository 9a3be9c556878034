//! Generalized twisted Reed-Solomon (GTRS) codes over finite fields.
//!
//! - [`gf`]: arithmetic in GF(p^m), subgroups, cosets, square roots and subfields.
//! - [`linalg`]: dense matrices over a field (RREF, determinants, kernels, minors).
//! - [`codes`]: GTRS codes as evaluation codes, duals and monomial equivalences.
//! - [`verify`]: MDS, GRS-equivalence, self-orthogonality and LCD verdicts, each backed by an
//!   analytic predicate and an independent brute-force oracle.
//! - [`construct`]: recipes producing codes with guaranteed properties.

pub mod codes;
pub mod construct;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod verify;

pub use codes::{EvalPoint, GtrsSpec, LinearCode, TwistHook, TwistedPolynomial};
pub use error::{Error, Result};
pub use gf::{Fe, Field};
pub use linalg::Matrix;
