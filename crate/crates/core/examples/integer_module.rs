//! Z x Z_6 over the integers, graded by Z with Z_6 in degree 1.
//! The zero submodule is not 2-absorbing, but it is A-2-absorbing for
//! A = Z \ {0}.
//!
//! cargo run --example integer_module

use std::sync::Arc;

use graded_absorbing::absorbing::{
    is_graded_2_absorbing, is_graded_a_2_absorbing, is_witness, nonzero_integers, reproduces_violation,
};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{colon_ring, GradedModule, GradedRing, GradedSubmodule};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::cyclic(0);
    let z = Arc::new(GradedRing::integers(&g));
    let degrees = [g.degree(&[0])?, g.degree(&[1])?];
    let m = Arc::new(GradedModule::cyclic_product(z.clone(), vec![0, 6], &degrees)?);
    let c = GradedSubmodule::zero(&m);
    let a = nonzero_integers(&z)?;

    println!("M = {}, C = {}, (C :_R M) = {}", m.name(), c, colon_ring(&c));

    let plain = is_graded_2_absorbing(&c);
    println!("2-absorbing: {plain}");
    if let Some(cx) = &plain.counterexample {
        println!("  first counterexample re-validates: {}", reproduces_violation(&c, None, cx));
    }

    let relative = is_graded_a_2_absorbing(&c, &a);
    println!("A-2-absorbing: {relative}");

    let six = is_witness(&z.element(&[6])?, &c, &a)?;
    println!("witness 6: {six}");
    Ok(())
}
