//! Z_6 over the integers with A = {1, -1}: the zero submodule is
//! 2-absorbing and A-2-absorbing but neither prime nor A-prime.
//!
//! cargo run --example prime_contrast

use std::sync::Arc;

use graded_absorbing::absorbing::{
    is_graded_2_absorbing, is_graded_a_2_absorbing, is_graded_a_prime, is_graded_prime, units,
};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{GradedModule, GradedRing, GradedSubmodule};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::cyclic(2);
    let z = Arc::new(GradedRing::integers(&g));
    let m = Arc::new(GradedModule::cyclic_product(z.clone(), vec![6], &[g.identity()])?);
    let c = GradedSubmodule::zero(&m);
    let a = units(&z);
    println!("A = {a}");
    println!("prime:         {}", is_graded_prime(&c));
    println!("2-absorbing:   {}", is_graded_2_absorbing(&c));
    println!("A-prime:       {}", is_graded_a_prime(&c, &a));
    println!("A-2-absorbing: {}", is_graded_a_2_absorbing(&c, &a));
    Ok(())
}
