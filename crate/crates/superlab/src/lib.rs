//! Verification suites, identity checks and algebra I/O on top of
//! `superlab-core`.
//!
//! The suites are declared in `suites.toml` ([`manifest`]); each entry is
//! executed by [`checks::run`] and collected into a [`report::Report`].

pub mod algebra_json;
pub mod assoc_expr;
pub mod checks;
pub mod error;
pub mod manifest;
pub mod report;
pub mod source;
pub mod transfer;

pub use error::{Error, Result};
