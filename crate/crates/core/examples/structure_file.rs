//! Parse a structure file and query it.
//!
//! cargo run --example structure_file [FILE]

use graded_absorbing::absorbing::{is_graded_2_absorbing, is_graded_a_2_absorbing};
use graded_absorbing::harness::parse_spec;

const DEFAULT: &str = include_str!("../fixtures/ex2.toml");

fn main() -> graded_absorbing::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => DEFAULT.to_string(),
    };
    let spec = parse_spec(&text)?;
    println!("ring {}: {}", spec.ring.name(), spec.ring_check);
    println!("module {}: {}", spec.module.name(), spec.module_check);
    for (name, c) in &spec.submodules {
        println!("{name} = {c}: 2-absorbing {}", is_graded_2_absorbing(c));
        for (an, a) in &spec.multsets {
            println!("  {an} = {a}: A-2-absorbing {}", is_graded_a_2_absorbing(c, a));
        }
    }
    Ok(())
}
