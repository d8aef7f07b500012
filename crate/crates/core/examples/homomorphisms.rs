//! Graded homomorphisms, images and preimages.
//!
//! cargo run --example homomorphisms

use std::sync::Arc;

use graded_absorbing::absorbing::{is_graded_a_2_absorbing, mult_closure};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{
    colon_ring, hom_image, hom_preimage, kernel, validate_graded_hom, GradedHomomorphism, GradedModule, GradedRing,
    GradedSubmodule,
};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::cyclic(0);
    let z = Arc::new(GradedRing::integers(&g));
    let one = g.degree(&[1])?;
    let m = Arc::new(GradedModule::cyclic_product(z.clone(), vec![0, 6], &[g.identity(), one.clone()])?);
    let n = Arc::new(GradedModule::cyclic_product(z.clone(), vec![6], &[one])?);

    // projection (x, y) -> y
    let f = GradedHomomorphism::new(m.clone(), n.clone(), vec![n.zero(), n.element(&[1])?])?;
    println!("projection: {}", validate_graded_hom(&f));
    println!("kernel = {}", kernel(&f));

    let a = mult_closure(&[z.element(&[-1])?], &z)?;
    let zero = GradedSubmodule::zero(&n);
    let pre = hom_preimage(&f, &zero)?;
    println!("f^-1(0) = {pre}, (f^-1(0) :_R M) = {}", colon_ring(&pre));
    println!("A = {a}");
    println!("0 in Z_6 A-2-absorbing: {}", is_graded_a_2_absorbing(&zero, &a));
    println!("f^-1(0) A-2-absorbing: {}", is_graded_a_2_absorbing(&pre, &a));
    println!("f(f^-1(0)) = {}", hom_image(&f, &pre)?);
    Ok(())
}
