use std::sync::Arc;

use super::module::GradedModule;
use super::subgroup::{apply_linear, Subgroup};
use super::submodule::{same_module, GradedSubmodule};
use crate::algebra_core::Element;
use crate::error::{structural, Result};

/// An additive map between graded modules over the same ring, given by the
/// images of the source's standard generators.
///
/// Construction checks that the map is well defined on the source carrier;
/// [`validate_graded_hom`](super::validate_graded_hom) checks linearity over
/// the ring and degree preservation.
#[derive(Clone, Debug)]
pub struct GradedHomomorphism {
    source: Arc<GradedModule>,
    target: Arc<GradedModule>,
    images: Vec<Element>,
}

impl GradedHomomorphism {
    pub fn new(source: Arc<GradedModule>, target: Arc<GradedModule>, images: Vec<Element>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(structural("source and target are modules over different rings"));
        }
        if images.len() != source.carrier().dim() {
            return Err(structural(format!(
                "{} images given for {} source generators",
                images.len(),
                source.carrier().dim()
            )));
        }
        for (img, &d) in images.iter().zip(source.carrier().orders()) {
            target.carrier().check(img)?;
            if d != 0 && !target.carrier().scale(d as i64, img).is_zero() {
                return Err(structural(format!("image {img} of a generator of order {d} has the wrong order")));
            }
        }
        Ok(GradedHomomorphism { source, target, images })
    }

    pub fn identity(module: &Arc<GradedModule>) -> Self {
        let images = (0..module.carrier().dim()).map(|j| module.carrier().basis(j)).collect();
        Self::new(module.clone(), module.clone(), images).expect("identity is well defined")
    }

    /// `m -> r m`; a graded endomorphism when `r` lies in `R_e`.
    pub fn scaling(module: &Arc<GradedModule>, r: &Element) -> Result<Self> {
        module.ring().carrier().check(r)?;
        Self::new(module.clone(), module.clone(), module.scaling_images(r))
    }

    pub fn source(&self) -> &Arc<GradedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedModule> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, x: &Element) -> Element {
        apply_linear(self.target.carrier(), &self.images, x)
    }

    pub fn is_surjective(&self) -> bool {
        Subgroup::full(self.source.carrier()).image(self.target.carrier(), &self.images).is_full()
    }
}

/// `f(C)`.
pub fn hom_image(f: &GradedHomomorphism, c: &GradedSubmodule) -> Result<GradedSubmodule> {
    if !same_module(c.module(), &f.source) {
        return Err(structural("submodule does not live in the source"));
    }
    let group = c.subgroup().image(f.target.carrier(), &f.images);
    Ok(GradedSubmodule::from_subgroup(&f.target, group))
}

/// `f^{-1}(C')`.
pub fn hom_preimage(f: &GradedHomomorphism, c: &GradedSubmodule) -> Result<GradedSubmodule> {
    if !same_module(c.module(), &f.target) {
        return Err(structural("submodule does not live in the target"));
    }
    let group = Subgroup::preimage(f.source.carrier(), &f.images, c.subgroup());
    Ok(GradedSubmodule::from_subgroup(&f.source, group))
}

/// `Ker f = f^{-1}(0)`.
pub fn kernel(f: &GradedHomomorphism) -> GradedSubmodule {
    hom_preimage(f, &GradedSubmodule::zero(&f.target)).expect("zero lives in the target")
}
