//! Exact decision procedures for graded 2-absorbing and A-2-absorbing
//! submodules over small graded commutative rings.
//!
//! The crate builds G-graded rings and modules on carriers of the form
//! `Z_{d_1} x ... x Z_{d_k}`, decides the graded prime, 2-absorbing,
//! A-prime and A-2-absorbing predicates by deterministic witness search,
//! computes colons, saturations and localizations, and runs a property
//! suite over an enumerated corpus of instances.

mod error;

pub mod absorbing;
pub mod algebra_core;
pub mod harness;
pub mod lattice;
pub mod localization;
pub mod structures;

pub use error::{Error, Result};
