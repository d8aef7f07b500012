//! Rings and modules of fractions over finite rings.
//!
//! cargo run --example localization

use std::sync::Arc;

use graded_absorbing::absorbing::{is_graded_2_absorbing, mult_closure, units};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::localization::{localize_module, localize_ring, localize_submodule};
use graded_absorbing::structures::{generate_submodule, validate_graded_ring, GradedModule, GradedRing};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::trivial();
    let z12 = Arc::new(GradedRing::modular(12, &g)?);
    let a = mult_closure(&[z12.element(&[4])?], &z12)?;
    let local = localize_ring(&z12, &a)?;
    println!("A = {a}: {} classes, carrier {:?}", local.num_classes(), local.ring().carrier().orders());
    for cl in local.classes() {
        println!("  class {}: {}/{}", cl.class_id, cl.numerator, cl.denominator);
    }
    println!(
        "3/1 = 0/1: {}",
        local.class_id(&z12.element(&[3])?, z12.one())? == local.class_id(&z12.zero(), z12.one())?
    );
    println!("validator: {}", validate_graded_ring(local.ring()));

    // a nontrivially graded example: Z_3[Z_2] at its units
    let g2 = GradingGroup::cyclic(2);
    let r = Arc::new(GradedRing::group_algebra(3, &g2)?);
    let u = units(&r);
    let lr = localize_ring(&r, &u)?;
    println!("{} at {u}: {} classes, {}", r.name(), lr.num_classes(), lr.check_well_defined());

    // A^-1 C for C = 6 Z_12 over A = {1, 4}
    let m = Arc::new(GradedModule::ring_as_module(z12.clone()));
    let lm = localize_module(&m, &a)?;
    let c = generate_submodule(&[m.element(&[6])?], &m)?;
    let lc = localize_submodule(&c, &lm)?;
    println!("A^-1 {c} = {lc}, 2-absorbing: {}", is_graded_2_absorbing(&lc));
    Ok(())
}
