//! Exact computational algebra for finite-dimensional graded-commutative
//! rings: block (Peirce) decomposition into local rings, Koszul
//! twisted-complex calculus with nilpotence-based generation verdicts,
//! model quantum-cohomology rings in arbitrary characteristic, and
//! bounded-length homological invariants (Ext, Hochschild cohomology).
//!
//! All arithmetic is exact (rationals or F_{p^d}); every result is
//! deterministic for a given input.

pub mod error;
pub mod field;
pub mod linalg;
pub mod par;

pub mod algebra;
pub mod homology;
pub mod models;
pub mod tw;

pub use error::{Error, Result};
pub use field::{Field, Scalar, UniPoly};
