//! Rings and modules of fractions `A^{-1}R`, `A^{-1}M` over finite carriers.
//!
//! Fractions are partitioned explicitly into classes. The class group is
//! then rewritten as a product of cyclic groups, which turns the
//! localization into an ordinary [`GradedRing`] or [`GradedModule`] that
//! the validators and predicates accept unchanged.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::absorbing::MultSet;
use crate::algebra_core::{deg_combine, deg_invert, Carrier, Degree, Element};
use crate::error::{structural, Error, Result};
use crate::lattice::present_finite_group;
use crate::structures::{CheckOutcome, Counterexample, GradedModule, GradedRing, GradedSubmodule, Grading, Subgroup};

/// One class of fractions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionClass {
    /// Canonically least representative `numerator / denominator`.
    pub numerator: Element,
    pub denominator: Element,
    pub class_id: usize,
    /// `deg(numerator) - deg(denominator)` for a homogeneous nonzero class.
    pub degree: Option<Degree>,
    /// Coordinates of the class in the concrete carrier.
    pub element: Element,
}

/// Partition of `carrier x A` under `(x, a) ~ (y, b)` iff `c (b x - a y) = 0`
/// for some `c in A`, with the induced addition.
struct Partition {
    reps: Vec<(Element, Element)>,
    class_of: HashMap<(Element, Element), usize>,
    add: Vec<Vec<usize>>,
    coords: Vec<Element>,
    carrier: Carrier,
    by_coords: HashMap<Element, usize>,
}

impl Partition {
    /// `scale(a, x)` is the action of the ring element `a` on `x`.
    fn new(
        elements: &[Element],
        a: &MultSet,
        zero: &Element,
        plus: impl Fn(&Element, &Element) -> Element,
        minus: impl Fn(&Element, &Element) -> Element,
        scale: impl Fn(&Element, &Element) -> Element,
    ) -> Result<Self> {
        let ring = a.ring();
        // A-torsion: differences that represent the zero fraction
        let torsion: HashSet<&Element> =
            elements.iter().filter(|x| a.elements().iter().any(|c| scale(c, x) == *zero)).collect();
        let mut reps: Vec<(Element, Element)> = Vec::new();
        let mut class_of = HashMap::new();
        for x in elements {
            for den in a.elements() {
                let id = reps
                    .iter()
                    .position(|(y, b)| torsion.contains(&minus(&scale(b, x), &scale(den, y))))
                    .unwrap_or_else(|| {
                        reps.push((x.clone(), den.clone()));
                        reps.len() - 1
                    });
                class_of.insert((x.clone(), den.clone()), id);
            }
        }
        let lookup = |x: Element, d: Element| -> Result<usize> {
            class_of
                .get(&(x, d.clone()))
                .copied()
                .ok_or_else(|| structural(format!("denominator {d} is not in A; the set is not closed")))
        };
        let mut add = vec![vec![0; reps.len()]; reps.len()];
        for (i, (x, a1)) in reps.iter().enumerate() {
            for (j, (y, b1)) in reps.iter().enumerate() {
                add[i][j] = lookup(plus(&scale(b1, x), &scale(a1, y)), ring.mul(a1, b1))?;
            }
        }
        let zero_id = class_of[&(zero.clone(), ring.one().clone())];
        let presentation = present_finite_group(reps.len(), zero_id, |i, j| add[i][j]);
        let carrier = Carrier::new(presentation.orders)?;
        let coords: Vec<Element> = presentation.coords.iter().map(|c| carrier.element(c)).collect::<Result<_>>()?;
        let by_coords = coords.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(Partition { reps, class_of, add, coords, carrier, by_coords })
    }

    fn id(&self, x: &Element, d: &Element) -> Result<usize> {
        self.class_of
            .get(&(x.clone(), d.clone()))
            .copied()
            .ok_or_else(|| structural(format!("{x}/{d} is not a fraction over this set")))
    }

    fn basis_ids(&self) -> Vec<usize> {
        (0..self.carrier.dim()).map(|i| self.by_coords[&self.carrier.basis(i)]).collect()
    }

    /// Degrees carried by each class: `deg x - deg d` over homogeneous
    /// nonzero representatives `x / d`.
    fn degrees(&self, grading: &Grading, a: &MultSet) -> Result<Vec<Vec<Degree>>> {
        let group = grading.group();
        let ring_grading = a.ring().grading();
        let mut out: Vec<Vec<Degree>> = vec![Vec::new(); self.reps.len()];
        for ((x, d), &id) in &self.class_of {
            if x.is_zero() || id == self.class_of_zero() {
                continue;
            }
            let (Some(dx), Some(dd)) = (grading.degree_of(x), ring_grading.degree_of(d)) else {
                continue;
            };
            let deg = deg_combine(group, &dx, &deg_invert(group, &dd)?)?;
            if !out[id].contains(&deg) {
                out[id].push(deg);
            }
        }
        for v in &mut out {
            v.sort();
        }
        Ok(out)
    }

    fn class_of_zero(&self) -> usize {
        self.by_coords[&self.carrier.zero()]
    }

    fn grading(&self, group: &crate::algebra_core::GradingGroup, degrees: &[Vec<Degree>]) -> Result<Grading> {
        let mut comps: BTreeMap<Degree, Vec<Element>> = BTreeMap::new();
        for (id, ds) in degrees.iter().enumerate() {
            for d in ds {
                comps.entry(d.clone()).or_default().push(self.coords[id].clone());
            }
        }
        Grading::new(group, &self.carrier, comps.into_iter().collect())
    }

    fn classes(&self, degrees: &[Vec<Degree>]) -> Vec<FractionClass> {
        self.reps
            .iter()
            .enumerate()
            .map(|(id, (x, d))| FractionClass {
                numerator: x.clone(),
                denominator: d.clone(),
                class_id: id,
                degree: degrees[id].first().cloned(),
                element: self.coords[id].clone(),
            })
            .collect()
    }
}

fn require_finite(finite: bool, what: &str) -> Result<()> {
    if finite {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("localization needs a finite {what}")))
    }
}

/// `A^{-1}R`.
pub struct LocalizedRing {
    base: Arc<GradedRing>,
    mult_set: MultSet,
    part: Partition,
    degrees: Vec<Vec<Degree>>,
    ring: Arc<GradedRing>,
}

/// Build `A^{-1}R` for a finite ring.
pub fn localize_ring(ring: &Arc<GradedRing>, a: &MultSet) -> Result<LocalizedRing> {
    require_finite(ring.is_finite(), "ring")?;
    if a.ring().as_ref() != ring.as_ref() {
        return Err(structural("multiplicative set belongs to another ring"));
    }
    let elements = ring.elements();
    let part = Partition::new(
        &elements,
        a,
        &ring.zero(),
        |x, y| ring.add(x, y),
        |x, y| ring.sub(x, y),
        |c, x| ring.mul(c, x),
    )?;
    let degrees = part.degrees(ring.grading(), a)?;
    let ids = part.basis_ids();
    let k = part.carrier.dim();
    let mut table = vec![vec![part.carrier.zero(); k]; k];
    for (i, &p) in ids.iter().enumerate() {
        for (j, &q) in ids.iter().enumerate() {
            let (x, a1) = &part.reps[p];
            let (y, b1) = &part.reps[q];
            table[i][j] = part.coords[part.id(&ring.mul(x, y), &ring.mul(a1, b1))?].clone();
        }
    }
    let one = part.coords[part.id(ring.one(), ring.one())?].clone();
    let grading = part.grading(ring.group(), &degrees)?;
    let local = GradedRing::from_table(format!("A^-1 {}", ring.name()), part.carrier.clone(), table, one, grading)?
        .with_bound(ring.bound());
    Ok(LocalizedRing { base: ring.clone(), mult_set: a.clone(), part, degrees, ring: Arc::new(local) })
}

impl LocalizedRing {
    pub fn base(&self) -> &Arc<GradedRing> {
        &self.base
    }

    pub fn mult_set(&self) -> &MultSet {
        &self.mult_set
    }

    /// The localization as a concrete graded ring.
    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn num_classes(&self) -> usize {
        self.part.reps.len()
    }

    pub fn classes(&self) -> Vec<FractionClass> {
        self.part.classes(&self.degrees)
    }

    pub fn class_id(&self, x: &Element, d: &Element) -> Result<usize> {
        self.part.id(x, d)
    }

    /// The concrete element representing `x / d`.
    pub fn fraction(&self, x: &Element, d: &Element) -> Result<Element> {
        Ok(self.part.coords[self.part.id(x, d)?].clone())
    }

    /// Whether `x / 1` is a unit.
    pub fn is_unit_fraction(&self, x: &Element) -> Result<bool> {
        let f = self.fraction(x, self.base.one())?;
        Ok(self.ring.is_unit(&f))
    }

    /// Sums and products computed from any pair of representatives agree
    /// with the class operations.
    pub fn check_well_defined(&self) -> CheckOutcome {
        let r = &self.base;
        let p = &self.part;
        let pairs: Vec<(&(Element, Element), usize)> = p.class_of.iter().map(|(k, &v)| (k, v)).collect();
        let mut pairs = pairs;
        pairs.sort();
        for ((x, a), i) in &pairs {
            for ((y, b), j) in &pairs {
                let den = r.mul(a, b);
                let sum = p.id(&r.add(&r.mul(b, x), &r.mul(a, y)), &den);
                let prod = p.id(&r.mul(x, y), &den);
                let ok_sum = matches!(sum, Ok(s) if s == p.add[*i][*j]);
                let ok_prod = matches!(prod, Ok(q) if p.coords[q]
                    == self.ring.mul(&p.coords[*i], &p.coords[*j]));
                if !ok_sum || !ok_prod {
                    return CheckOutcome::fails(Counterexample::Law {
                        law: if ok_sum { "product of classes" } else { "sum of classes" }.into(),
                        elements: vec![x.clone(), a.clone(), y.clone(), b.clone()],
                    });
                }
            }
        }
        CheckOutcome::holds(None)
    }
}

/// `A^{-1}M` over [`localize_ring`].
pub struct LocalizedModule {
    base: Arc<GradedModule>,
    ring: LocalizedRing,
    part: Partition,
    degrees: Vec<Vec<Degree>>,
    module: Arc<GradedModule>,
}

/// Build `A^{-1}M` for a finite module over a finite ring.
pub fn localize_module(module: &Arc<GradedModule>, a: &MultSet) -> Result<LocalizedModule> {
    require_finite(module.is_finite(), "module")?;
    let lring = localize_ring(module.ring_arc(), a)?;
    let elements = module.elements();
    let part = Partition::new(
        &elements,
        a,
        &module.zero(),
        |x, y| module.carrier().add(x, y),
        |x, y| module.carrier().sub(x, y),
        |c, x| module.act(c, x),
    )?;
    let degrees = part.degrees(module.grading(), a)?;
    let rids = lring.part.basis_ids();
    let mids = part.basis_ids();
    let ring = module.ring();
    let mut action = vec![vec![part.carrier.zero(); mids.len()]; rids.len()];
    for (i, &p) in rids.iter().enumerate() {
        for (j, &q) in mids.iter().enumerate() {
            let (x, a1) = &lring.part.reps[p];
            let (m, b1) = &part.reps[q];
            action[i][j] = part.coords[part.id(&module.act(x, m), &ring.mul(a1, b1))?].clone();
        }
    }
    let grading = part.grading(module.grading().group(), &degrees)?;
    let local = GradedModule::from_table(
        format!("A^-1 {}", module.name()),
        lring.ring.clone(),
        part.carrier.clone(),
        action,
        grading,
    )?;
    Ok(LocalizedModule { base: module.clone(), ring: lring, part, degrees, module: Arc::new(local) })
}

impl LocalizedModule {
    pub fn base(&self) -> &Arc<GradedModule> {
        &self.base
    }

    pub fn ring(&self) -> &LocalizedRing {
        &self.ring
    }

    /// The localization as a concrete graded module over
    /// [`LocalizedRing::ring`].
    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn num_classes(&self) -> usize {
        self.part.reps.len()
    }

    pub fn classes(&self) -> Vec<FractionClass> {
        self.part.classes(&self.degrees)
    }

    pub fn fraction(&self, m: &Element, d: &Element) -> Result<Element> {
        Ok(self.part.coords[self.part.id(m, d)?].clone())
    }

    /// Sums and the action computed from any representatives agree with the
    /// class operations.
    pub fn check_well_defined(&self) -> CheckOutcome {
        let ring_check = self.ring.check_well_defined();
        if ring_check.verdict == crate::structures::Verdict::Fails {
            return ring_check;
        }
        let (r, m) = (&self.ring.base, &self.base);
        let p = &self.part;
        let mut mpairs: Vec<(&(Element, Element), usize)> = p.class_of.iter().map(|(k, &v)| (k, v)).collect();
        mpairs.sort();
        let mut rpairs: Vec<(&(Element, Element), usize)> =
            self.ring.part.class_of.iter().map(|(k, &v)| (k, v)).collect();
        rpairs.sort();
        for ((x, a), i) in &mpairs {
            for ((y, b), j) in &mpairs {
                let s = p.id(&m.carrier().add(&m.act(b, x), &m.act(a, y)), &r.mul(a, b));
                if !matches!(s, Ok(s) if s == p.add[*i][*j]) {
                    return CheckOutcome::fails(Counterexample::Law {
                        law: "sum of classes".into(),
                        elements: vec![x.clone(), a.clone(), y.clone(), b.clone()],
                    });
                }
            }
            for ((t, b), k) in &rpairs {
                let q = p.id(&m.act(t, x), &r.mul(a, b));
                let expected = self.module.act(&self.ring.part.coords[*k], &p.coords[*i]);
                if !matches!(q, Ok(q) if p.coords[q] == expected) {
                    return CheckOutcome::fails(Counterexample::Law {
                        law: "action on classes".into(),
                        elements: vec![t.clone(), b.clone(), x.clone(), a.clone()],
                    });
                }
            }
        }
        CheckOutcome::holds(None)
    }
}

/// `A^{-1}C = { c / a : c in C, a in A }` inside `A^{-1}M`.
pub fn localize_submodule(c: &GradedSubmodule, local: &LocalizedModule) -> Result<GradedSubmodule> {
    if c.module().as_ref() != local.base.as_ref() {
        return Err(structural("submodule does not live in the localized module"));
    }
    let a = local.ring.mult_set();
    let mut gens = Vec::new();
    for x in c.elements() {
        for d in a.elements() {
            gens.push(local.fraction(&x, d)?);
        }
    }
    let group = Subgroup::span(local.module.carrier(), &gens);
    GradedSubmodule::from_elements(local.module(), &group.elements(local.module.bound()))
}
