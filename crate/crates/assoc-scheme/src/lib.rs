//! Exact computation with commutative association schemes, organized around
//! the bivariate P- and Q-polynomial structure of type `(alpha, beta)`.
//!
//! The crate provides:
//!
//! - exact rational scalars, dense matrices and sparse bivariate
//!   polynomials ([`exact`]);
//! - the deg-lex and `(alpha, beta)` monomial orders with compatibility
//!   checks for polynomials and index domains ([`orders`]);
//! - vertex-level schemes with brute-force intersection numbers, plus
//!   algebra-level presentations by L-matrices ([`scheme`]);
//! - the `(alpha, beta)`-metric test, minimal-type computation, and the
//!   inductive construction of the polynomials `v_ij` with
//!   `A_ij = v_ij(A_10, A_01)` ([`bivariate`]);
//! - eigenmatrices, idempotents, Krein parameters, the cometric test,
//!   Wilson symmetry, orthogonality, and dual (subconstituent) matrices
//!   ([`spectra`]);
//! - constructors for the standard families: direct products,
//!   symmetrizations (ordered Hamming), non-binary Johnson schemes, the
//!   generalized 24-cell, symplectic isotropic 2-spaces, and attenuated
//!   spaces ([`constructors`]);
//! - closed-form polynomial families: Krawtchouk, Eberlein, q-binomials,
//!   q-Krawtchouk, q-Hahn, and bivariate Krawtchouk values
//!   ([`polyfam`]);
//! - a JSON interchange format for schemes, verdicts and spectra
//!   ([`json`]).
//!
//! Everything is exact: a test either holds bit-for-bit or fails with a
//! witness. No floating point is used anywhere.

pub mod bivariate;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod json;
pub mod orders;
pub mod polyfam;
pub mod scheme;
pub mod spectra;

pub use error::{Result, SchemeError};
