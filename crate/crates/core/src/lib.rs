//! Exact verification of identities and superidentities of
//! finite-dimensional nonassociative superalgebras.
//!
//! The crate is `no_std` (it needs `alloc`). Scalars live in `Q(eps)`,
//! polynomials are binary-tree monomials, and superalgebras are given by
//! sparse structure constants.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod lemmas;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod scalars;
pub mod tableaux;

pub use error::{Error, Result};
pub use scalars::{QEps, Rational};
