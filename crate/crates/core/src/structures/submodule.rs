use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::module::GradedModule;
use super::outcome::{CheckOutcome, Counterexample};
use super::subgroup::Subgroup;
use crate::algebra_core::{Degree, Element};
use crate::error::{precondition, structural, Error, Result};

/// A graded submodule `C` of a graded module. Graded ideals are graded
/// submodules of [`GradedModule::ring_as_module`].
///
/// The underlying subgroup is exact in both modes; over infinite carriers
/// only its listing is limited to the box.
#[derive(Clone)]
pub struct GradedSubmodule {
    module: Arc<GradedModule>,
    group: Subgroup,
}

impl PartialEq for GradedSubmodule {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && same_module(&self.module, &other.module)
    }
}

impl Eq for GradedSubmodule {}

impl fmt::Debug for GradedSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.group, self.module.name())
    }
}

impl fmt::Display for GradedSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return f.write_str("0");
        }
        let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

pub(crate) fn same_module(a: &Arc<GradedModule>, b: &Arc<GradedModule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GradedSubmodule {
    /// Wrap a subgroup already known to be a graded submodule.
    pub(crate) fn from_subgroup(module: &Arc<GradedModule>, group: Subgroup) -> Self {
        GradedSubmodule { module: module.clone(), group }
    }

    pub fn zero(module: &Arc<GradedModule>) -> Self {
        Self::from_subgroup(module, Subgroup::zero(module.carrier()))
    }

    pub fn full(module: &Arc<GradedModule>) -> Self {
        Self::from_subgroup(module, Subgroup::full(module.carrier()))
    }

    /// Validate an explicit candidate: in finite mode `elements` is the whole
    /// set, in bounded mode a generating set. Errors if it is not closed, or
    /// closed but not graded.
    pub fn from_elements(module: &Arc<GradedModule>, elements: &[Element]) -> Result<Self> {
        let outcome = is_graded_submodule(elements, module)?;
        if let Some(cx) = outcome.counterexample {
            return Err(Error::Validation { field: "submodule".into(), message: format!("not graded: {cx}") });
        }
        Ok(Self::from_subgroup(module, Subgroup::span(module.carrier(), elements)))
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.group
    }

    pub fn contains(&self, m: &Element) -> bool {
        self.group.contains(m)
    }

    /// Additive generators in canonical order.
    pub fn generators(&self) -> Vec<Element> {
        self.group.generators()
    }

    /// All elements, or those inside the box for infinite carriers.
    pub fn elements(&self) -> Vec<Element> {
        self.group.elements(self.module.bound())
    }

    /// True when the listing from [`elements`](Self::elements) is truncated.
    pub fn is_bounded(&self) -> bool {
        !self.module.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.group.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.group.is_full()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_full()
    }

    pub fn is_subset_of(&self, other: &GradedSubmodule) -> bool {
        self.group.is_subset_of(&other.group)
    }

    /// The component `C_h = C cap M_h`.
    pub fn component(&self, h: &Degree) -> Subgroup {
        self.group.intersect(&self.module.grading().component(h))
    }

    fn check_parent(&self, other: &GradedSubmodule) -> Result<()> {
        if same_module(&self.module, &other.module) {
            Ok(())
        } else {
            Err(structural("submodules of different modules"))
        }
    }
}

/// Unique decomposition `x = sum_h x_h`; zero parts are omitted.
pub fn homogeneous_components(x: &Element, module: &GradedModule) -> Result<BTreeMap<Degree, Element>> {
    module.carrier().check(x)?;
    module
        .grading()
        .decompose(x)
        .ok_or_else(|| precondition(format!("{x} has no decomposition; the module grading is invalid")))
}

/// Decide whether a candidate is a graded submodule.
///
/// Over a finite carrier `elements` is the full candidate set, which must be
/// closed under addition and the action. Over an infinite carrier it is a
/// generating set whose span must be closed under the action. `Fails`
/// carries the first element (in canonical order) with a component outside
/// the candidate.
pub fn is_graded_submodule(elements: &[Element], module: &GradedModule) -> Result<CheckOutcome> {
    let carrier = module.carrier();
    for x in elements {
        carrier.check(x)?;
    }
    let span = Subgroup::span(carrier, elements);
    let listed: BTreeSet<Element> = elements.iter().cloned().collect();
    if carrier.is_finite() {
        let closure = span.elements(module.bound());
        if let Some(missing) = closure.iter().find(|x| !x.is_zero() && !listed.contains(*x)) {
            return Err(structural(format!("candidate is not closed under addition: missing {missing}")));
        }
    }
    let rc = module.ring().carrier();
    for g in span.generators() {
        for i in 0..rc.dim() {
            let y = module.act(&rc.basis(i), &g);
            if !span.contains(&y) {
                return Err(structural(format!(
                    "candidate is not closed under the action: {} * {g} = {y}",
                    rc.basis(i)
                )));
            }
        }
    }
    let scan: Vec<Element> = if carrier.is_finite() { listed.into_iter().collect() } else { span.generators() };
    for x in &scan {
        for (degree, component) in homogeneous_components(x, module)? {
            if !span.contains(&component) {
                return Ok(CheckOutcome::fails(Counterexample::Component { element: x.clone(), degree, component }));
            }
        }
    }
    Ok(CheckOutcome::passed(carrier.is_finite(), module.bound(), None))
}

/// Smallest submodule containing homogeneous `gens`.
pub fn generate_submodule(gens: &[Element], module: &Arc<GradedModule>) -> Result<GradedSubmodule> {
    let rc = module.ring().carrier();
    let mut all = Vec::new();
    for g in gens {
        module.carrier().check(g)?;
        if !module.is_homogeneous(g) {
            return Err(precondition(format!("generator {g} is not homogeneous")));
        }
        all.push(g.clone());
        all.extend((0..rc.dim()).map(|i| module.act(&rc.basis(i), g)));
    }
    Ok(GradedSubmodule::from_subgroup(module, Subgroup::span(module.carrier(), &all)))
}

/// `C_1 cap C_2`.
pub fn intersect(c1: &GradedSubmodule, c2: &GradedSubmodule) -> Result<GradedSubmodule> {
    c1.check_parent(c2)?;
    Ok(GradedSubmodule::from_subgroup(&c1.module, c1.group.intersect(&c2.group)))
}

/// `C_1 + C_2`.
pub fn sum(c1: &GradedSubmodule, c2: &GradedSubmodule) -> Result<GradedSubmodule> {
    c1.check_parent(c2)?;
    Ok(GradedSubmodule::from_subgroup(&c1.module, c1.group.sum(&c2.group)))
}

/// `(C :_R M) = { r : r M subset C }`, a graded ideal of `R`.
pub fn colon_ring(c: &GradedSubmodule) -> GradedSubmodule {
    let ideal = c.module.colon_of(&c.group);
    let rm = Arc::new(GradedModule::ring_as_module(c.module.ring_arc().clone()));
    GradedSubmodule::from_subgroup(&rm, ideal)
}

/// `(C :_R M)` as a bare subgroup of the ring carrier.
pub(crate) fn colon_ring_group(c: &GradedSubmodule) -> Subgroup {
    c.module.colon_of(&c.group)
}

/// The divisor of a module colon.
#[derive(Clone, Copy, Debug)]
pub enum Divisor<'a> {
    Scalar(&'a Element),
    Ideal(&'a GradedSubmodule),
}

/// `(C :_M x) = { m : x m in C }`, without checking that `x` is homogeneous.
pub(crate) fn colon_by_scalar(c: &GradedSubmodule, x: &Element) -> Subgroup {
    let m = &c.module;
    Subgroup::preimage(m.carrier(), &m.scaling_images(x), &c.group)
}

/// `(C :_M x)` for a homogeneous scalar, or `(C :_M I)` for a graded ideal.
pub fn colon_module(c: &GradedSubmodule, divisor: Divisor<'_>) -> Result<GradedSubmodule> {
    let m = &c.module;
    let group = match divisor {
        Divisor::Scalar(x) => {
            m.ring().carrier().check(x)?;
            if !m.ring().is_homogeneous(x) {
                return Err(precondition(format!("divisor {x} is not homogeneous")));
            }
            colon_by_scalar(c, x)
        }
        Divisor::Ideal(ideal) => {
            if ideal.module.carrier() != m.ring().carrier() || ideal.module.ring() != m.ring() {
                return Err(structural("divisor is not an ideal of the module's ring"));
            }
            ideal.generators().iter().fold(Subgroup::full(m.carrier()), |acc, g| acc.intersect(&colon_by_scalar(c, g)))
        }
    };
    Ok(GradedSubmodule::from_subgroup(m, group))
}

/// `I_g = I cap R_g` for an ideal `I`.
pub fn ideal_component(ideal: &GradedSubmodule, g: &Degree) -> Subgroup {
    ideal.component(g)
}

/// Every graded submodule containing `base` (the zero submodule when
/// `None`), found as sums of cyclic submodules generated by homogeneous
/// elements, sorted by size and then by generators. Over an infinite
/// carrier only box generators are used. Stops after `cap` results.
// Subgroup hashes only its lattice; the member cache never affects it.
#[allow(clippy::mutable_key_type)]
pub fn enumerate_graded_submodules(
    module: &Arc<GradedModule>,
    base: Option<Subgroup>,
    cap: usize,
) -> Vec<GradedSubmodule> {
    let carrier = module.carrier();
    let rc = module.ring().carrier();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    let mut seen_cyclic = std::collections::HashSet::new();
    for m in module.homogeneous_elements() {
        let mut gens = vec![m.clone()];
        gens.extend((0..rc.dim()).map(|i| module.act(&rc.basis(i), m)));
        let s = Subgroup::span(carrier, &gens);
        if seen_cyclic.insert(s.clone()) {
            cyclic.push(s);
        }
    }
    let start = base.unwrap_or_else(|| Subgroup::zero(carrier));
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut found = vec![start];
    let mut next = 0;
    while next < found.len() && found.len() < cap {
        let s = found[next].clone();
        next += 1;
        for z in &cyclic {
            let t = s.sum(z);
            if seen.insert(t.clone()) {
                found.push(t);
                if found.len() >= cap {
                    break;
                }
            }
        }
    }
    let mut out: Vec<GradedSubmodule> = found.into_iter().map(|g| GradedSubmodule::from_subgroup(module, g)).collect();
    out.sort_by_cached_key(|c| (c.subgroup().order(), c.generators()));
    out
}
