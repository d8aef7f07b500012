//! Graded rings, graded modules, graded submodules and ideals, graded
//! homomorphisms, their validators and the colon operations.
//!
//! Every additive subgroup is stored as an integer lattice, so membership,
//! intersections, preimages and colons are exact even over infinite
//! carriers; only listings of elements are limited to the box.

mod grading;
mod hom;
mod module;
mod outcome;
mod ring;
mod subgroup;
mod submodule;
mod validate;

pub use grading::Grading;
pub use hom::{hom_image, hom_preimage, kernel, GradedHomomorphism};
pub use module::GradedModule;
pub use outcome::{CheckOutcome, Counterexample, Rejection, Verdict};
pub use ring::GradedRing;
pub use subgroup::{apply_linear, Subgroup};
pub use submodule::{
    colon_module, colon_ring, enumerate_graded_submodules, generate_submodule, homogeneous_components, ideal_component,
    intersect, is_graded_submodule, sum, Divisor, GradedSubmodule,
};
pub use validate::{validate_graded_hom, validate_graded_module, validate_graded_ring};

pub(crate) use submodule::{colon_by_scalar, colon_ring_group};
