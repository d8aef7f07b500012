//! The equivalent forms of the A-2-absorbing condition on Z_12.
//!
//! cargo run --example characterizations

use std::sync::Arc;

use graded_absorbing::absorbing::{
    check_component_ideal_condition, colon_characterization, colon_quotient_2abs, is_graded_a_2_absorbing,
    mult_closure, stabilization_check, DEFAULT_N_MAX,
};
use graded_absorbing::algebra_core::GradingGroup;
use graded_absorbing::structures::{enumerate_graded_submodules, GradedModule, GradedRing};

fn main() -> graded_absorbing::Result<()> {
    let z12 = Arc::new(GradedRing::modular(12, &GradingGroup::trivial())?);
    let m = Arc::new(GradedModule::ring_as_module(z12.clone()));
    let a = mult_closure(&[z12.element(&[5])?], &z12)?;
    println!("A = {a}");
    println!("{:<6}{:<16}{:<16}{:<16}{:<16}stabilization", "C", "direct", "components", "colons", "quotient");
    for c in enumerate_graded_submodules(&m, None, 64) {
        let stab = match stabilization_check(&c, &a, DEFAULT_N_MAX) {
            Ok(o) => o.verdict.to_string(),
            Err(_) => "-".into(),
        };
        println!(
            "{:<6}{:<16}{:<16}{:<16}{:<16}{}",
            c.to_string(),
            is_graded_a_2_absorbing(&c, &a).verdict.to_string(),
            check_component_ideal_condition(&c, &a).verdict.to_string(),
            colon_characterization(&c, &a).verdict.to_string(),
            colon_quotient_2abs(&c, &a).verdict.to_string(),
            stab
        );
    }
    Ok(())
}
