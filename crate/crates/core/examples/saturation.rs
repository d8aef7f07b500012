//! The saturation A* and its agreement with units of A^-1 R.
//!
//! cargo run --example saturation

use std::sync::Arc;

use graded_absorbing::absorbing::{mult_closure, saturate};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::localization::localize_ring;
use graded_absorbing::structures::GradedRing;

fn main() -> graded_absorbing::Result<()> {
    let z12 = Arc::new(GradedRing::modular(12, &GradingGroup::trivial())?);
    for gen in [1, 2, 3, 4, 5] {
        let a = mult_closure(&[z12.element(&[gen])?], &z12)?;
        let star = saturate(&a);
        let local = localize_ring(&z12, &a)?;
        let agree = z12.elements().iter().all(|x| star.contains(x) == local.is_unit_fraction(x).unwrap());
        println!("A = {a}\n  A* = {star}\n  A* = {{a : a/1 is a unit}}: {agree}");
    }
    Ok(())
}
