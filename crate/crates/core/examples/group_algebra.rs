//! A nontrivially graded ring: Z_2[Z_2] = Z_2 + Z_2 t with t in degree 1.
//!
//! cargo run --example group_algebra

use std::sync::Arc;

use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{
    enumerate_graded_submodules, homogeneous_components, is_graded_submodule, validate_graded_ring, GradedModule,
    GradedRing,
};

fn main() -> graded_absorbing::Result<()> {
    let g = GradingGroup::cyclic(2);
    let r = Arc::new(GradedRing::group_algebra(2, &g)?);
    println!("{}: {}", r.name(), validate_graded_ring(&r));
    println!("homogeneous: {:?}", r.homogeneous_elements().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let m = Arc::new(GradedModule::ring_as_module(r.clone()));

    let one_plus_t = r.element(&[1, 1])?;
    for (d, x) in homogeneous_components(&one_plus_t, &m)? {
        println!("component of 1 + t in degree {d}: {x}");
    }
    // {0, 1 + t} is an ideal but not a graded one
    println!("{{0, 1 + t}} graded: {}", is_graded_submodule(&[m.zero(), one_plus_t], &m)?);

    for c in enumerate_graded_submodules(&m, None, 64) {
        println!("graded ideal {c}");
    }
    Ok(())
}
