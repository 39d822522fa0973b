//! Computations in the forgotten monoid.
//!
//! The forgotten monoid is the quotient of the free monoid on an ordered
//! alphabet by the relations
//!
//! ```text
//! aba = baa, bab = bba      (a < b)
//! acb = bac, bca = cab      (a < b < c)
//! ```
//!
//! On permutations only the last two apply. This crate provides:
//!
//! - [`perm`]: permutations, words, compositions and their statistics.
//! - [`forgotten`]: classes of permutations, the `(n, inv, 1 before n)`
//!   invariant, canonical elements, the insertion algorithm and the
//!   Λ-word rewriting chain.
//! - [`words`] and [`ncpoly`]: the relations on words with repeated letters
//!   and the commutation of noncommutative elementary symmetric functions in
//!   the quotient.
//! - [`qsym`]: Gessel's fundamental quasi-symmetric functions, ribbon Schur
//!   functions, Foata's second fundamental transformation and the ribbon
//!   expansion of a class.
//! - [`verify`]: exhaustive verification suites driving all of the above.
//!
//! Polynomial types are generic over their coefficient ring (see
//! [`scalar::Ring`]); the aliases below fix arbitrary-precision integers.

pub mod error;
pub mod forgotten;
pub mod ncpoly;
pub mod perm;
pub mod qsym;
pub mod scalar;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use forgotten::{CanonicalForm, ClassKey, Family};
pub use perm::{Composition, Permutation, Word};
pub use qsym::{RibbonSum, SignPairing};
pub use scalar::Ring;

use num_bigint::BigInt;

/// Noncommutative polynomial with arbitrary-precision integer coefficients.
pub type NcPoly = ncpoly::NcPolynomial<BigInt>;

/// Noncommutative polynomial with machine-integer coefficients.
pub type NcPolyI64 = ncpoly::NcPolynomial<i64>;

/// Truncated commutative polynomial with arbitrary-precision coefficients.
pub type QsymPoly = qsym::TruncatedPolynomial<BigInt>;

/// Truncated commutative polynomial with machine-integer coefficients.
pub type QsymPolyI64 = qsym::TruncatedPolynomial<i64>;
