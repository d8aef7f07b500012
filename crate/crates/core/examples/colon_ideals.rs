//! Colon ideals and colon submodules.
//!
//! cargo run --example colon_ideals

use std::sync::Arc;

use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{
    colon_module, colon_ring, generate_submodule, Divisor, GradedModule, GradedRing, GradedSubmodule,
};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::trivial();
    let z12 = Arc::new(GradedRing::modular(12, &g)?);
    let m = Arc::new(GradedModule::ring_as_module(z12.clone()));
    let c = generate_submodule(&[m.element(&[4])?], &m)?;
    println!("C = {c} = {:?}", c.elements().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("(C :_R M) = {}", colon_ring(&c));
    for x in [2, 3, 6] {
        let q = colon_module(&c, Divisor::Scalar(&z12.element(&[x])?))?;
        println!("(C :_M {x}) = {q}");
    }
    let i = generate_submodule(&[m.element(&[6])?], &m)?;
    println!("(C :_M {i}) = {}", colon_module(&c, Divisor::Ideal(&i))?);

    // over Z the colon of Z x {0} in Z x Z_6 is 6Z, computed exactly
    let gz = GradingGroup::cyclic(0);
    let z = Arc::new(GradedRing::integers(&gz));
    let mz = Arc::new(GradedModule::cyclic_product(z, vec![0, 6], &[gz.degree(&[0])?, gz.degree(&[1])?])?);
    let first = generate_submodule(&[mz.element(&[1, 0])?], &mz)?;
    println!("(Z x 0 :_Z Z x Z_6) = {}", colon_ring(&first));
    println!("(0 :_Z Z x Z_6) = {}", colon_ring(&GradedSubmodule::zero(&mz)));
    Ok(())
}
