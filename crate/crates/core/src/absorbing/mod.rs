//! Multiplicative sets, saturation and the decision procedures for graded
//! prime, 2-absorbing, A-prime and A-2-absorbing submodules, with the
//! component, colon and stabilization characterizations.
//!
//! All searches run over `h(R)` and `h(M)` in canonical order, so every
//! returned witness or counterexample is the canonically first one.

mod characterizations;
mod multset;
mod predicates;

pub use characterizations::{
    check_component_ideal_condition, check_ideal_condition, colon_characterization, colon_quotient_2abs,
    stabilization_check, stabilization_check_with,
};
pub use multset::{mult_closure, nonzero_integers, saturate, units, MultSet};
pub use predicates::{
    is_graded_2_absorbing, is_graded_a_2_absorbing, is_graded_a_prime, is_graded_prime, is_prime_witness, is_witness,
    reproduces_violation,
};

/// Default largest exponent for [`stabilization_check`].
pub const DEFAULT_N_MAX: u32 = 8;
