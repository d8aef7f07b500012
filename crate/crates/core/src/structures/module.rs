use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use super::grading::Grading;
use super::ring::{bilinear, GradedRing};
use super::subgroup::Subgroup;
use crate::algebra_core::{enumerate_carrier, Carrier, Degree, Element, EnumerationBound};
use crate::error::{structural, Error, Result};

/// A graded module over a [`GradedRing`], with the action given by
/// structure constants: `action[i][j]` is the ring generator `i` acting on
/// the module generator `j`.
#[derive(Debug)]
pub struct GradedModule {
    name: String,
    ring: Arc<GradedRing>,
    carrier: Carrier,
    action: Vec<Vec<Element>>,
    grading: Grading,
    homogeneous: OnceLock<Vec<Element>>,
    annihilator: OnceLock<Subgroup>,
    exact: OnceLock<bool>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.carrier == other.carrier
            && self.action == other.action
            && self.grading == other.grading
    }
}

impl GradedModule {
    pub fn from_table(
        name: impl Into<String>,
        ring: Arc<GradedRing>,
        carrier: Carrier,
        action: Vec<Vec<Element>>,
        grading: Grading,
    ) -> Result<Self> {
        let (k, l) = (ring.carrier().dim(), carrier.dim());
        if action.len() != k || action.iter().any(|r| r.len() != l) {
            return Err(structural(format!("action table must be {k} x {l}")));
        }
        for x in action.iter().flatten() {
            carrier.check(x)?;
        }
        if grading.carrier() != &carrier {
            return Err(structural("grading lives on a different carrier"));
        }
        if grading.group() != ring.group() {
            return Err(structural("module and ring are graded by different groups"));
        }
        Ok(GradedModule {
            name: name.into(),
            ring,
            carrier,
            action,
            grading,
            homogeneous: OnceLock::new(),
            annihilator: OnceLock::new(),
            exact: OnceLock::new(),
        })
    }

    /// `R` as a module over itself, with the ring's grading.
    pub fn ring_as_module(ring: Arc<GradedRing>) -> Self {
        let name = ring.name().to_string();
        let carrier = ring.carrier().clone();
        let action = ring.table().to_vec();
        let grading = ring.grading().clone();
        Self::from_table(name, ring, carrier, action, grading).expect("a ring is a module over itself")
    }

    /// `Z_{k_1} x ... x Z_{k_l}` over `Z_n` or `Z` by integer scaling, with
    /// coordinate `j` placed in degree `degrees[j]`.
    ///
    /// Over `Z_n` every `k_j` must be finite and divide `n`.
    pub fn cyclic_product(ring: Arc<GradedRing>, orders: Vec<u64>, degrees: &[Degree]) -> Result<Self> {
        let rc = ring.carrier();
        let integer_like = rc.dim() == 1 && ring.table()[0][0] == rc.basis(0) && ring.one() == &rc.basis(0);
        if !integer_like {
            return Err(Error::Validation {
                field: "module.kind".into(),
                message: format!("cyclic_product needs an integer-like ring, not {}", ring.name()),
            });
        }
        let n = rc.orders()[0];
        for &k in &orders {
            let ok = if n == 0 { true } else { k != 0 && n.is_multiple_of(k) };
            if !ok {
                let order = if k == 0 { "Z".to_string() } else { k.to_string() };
                return Err(Error::Validation {
                    field: "module.orders".into(),
                    message: format!("Z_{n} cannot act on a cyclic factor of order {order}: it must divide {n}"),
                });
            }
        }
        let carrier = Carrier::new(orders)?;
        let action = vec![(0..carrier.dim()).map(|j| carrier.basis(j)).collect()];
        let grading = Grading::by_coordinate(ring.group(), &carrier, degrees)?;
        let parts: Vec<String> =
            carrier.orders().iter().map(|d| if *d == 0 { "Z".into() } else { format!("Z_{d}") }).collect();
        Self::from_table(parts.join(" x "), ring, carrier, action, grading)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn action_table(&self) -> &[Vec<Element>] {
        &self.action
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn bound(&self) -> EnumerationBound {
        self.ring.bound()
    }

    pub fn is_finite(&self) -> bool {
        self.carrier.is_finite()
    }

    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        self.carrier.element(coords)
    }

    pub fn zero(&self) -> Element {
        self.carrier.zero()
    }

    pub fn act(&self, r: &Element, m: &Element) -> Element {
        bilinear(&self.carrier, &self.action, r, m)
    }

    /// Module elements (all, or those in the box).
    pub fn elements(&self) -> Vec<Element> {
        enumerate_carrier(&self.carrier, self.bound())
    }

    /// `h(M)` in canonical order, zero included.
    pub fn homogeneous_elements(&self) -> &[Element] {
        self.homogeneous.get_or_init(|| self.grading.homogeneous_elements(self.bound()))
    }

    pub fn is_homogeneous(&self, m: &Element) -> bool {
        self.grading.is_homogeneous(m)
    }

    /// Images of the module generators under `m -> r m`.
    pub(crate) fn scaling_images(&self, r: &Element) -> Vec<Element> {
        (0..self.carrier.dim()).map(|j| self.act(r, &self.carrier.basis(j))).collect()
    }

    /// Images of the ring generators under `r -> r m`.
    pub(crate) fn orbit_images(&self, m: &Element) -> Vec<Element> {
        let rc = self.ring.carrier();
        (0..rc.dim()).map(|i| self.act(&rc.basis(i), m)).collect()
    }

    /// `ann(M) = (0 :_R M)`, as a subgroup of the ring carrier.
    pub fn annihilator(&self) -> &Subgroup {
        self.annihilator.get_or_init(|| self.colon_of(&Subgroup::zero(&self.carrier)))
    }

    /// `(C :_R M)` for an additive subgroup `C` of the module carrier.
    pub(crate) fn colon_of(&self, c: &Subgroup) -> Subgroup {
        let rc = self.ring.carrier();
        (0..self.carrier.dim()).fold(Subgroup::full(rc), |acc, j| {
            let images = self.orbit_images(&self.carrier.basis(j));
            acc.intersect(&Subgroup::preimage(rc, &images, c))
        })
    }

    /// Whether scanning the enumerated homogeneous elements decides every
    /// universally quantified condition exactly.
    ///
    /// Always true for finite rings. Over an infinite ring it holds when the
    /// module is finite and, for every ring component `R_g`, the box meets
    /// every class of `R_g` modulo `ann(M)`: conditions on `r m` and on
    /// `r s` modulo `(C :_R M)` only see `r` modulo `ann(M)`.
    pub fn scan_is_exact(&self) -> bool {
        *self.exact.get_or_init(|| {
            if self.ring.is_finite() {
                return self.is_finite();
            }
            if !self.is_finite() {
                return false;
            }
            let ann = self.annihilator();
            let Some(ann_index) = ann.lattice().determinant() else {
                return false;
            };
            self.ring.grading().components().iter().all(|(_, comp)| {
                let Some(sum_index) = comp.sum(ann).lattice().determinant() else {
                    return false;
                };
                let classes = ann_index / sum_index;
                let seen: HashSet<Element> =
                    comp.elements(self.bound()).iter().map(|x| ann.coset_representative(x)).collect();
                seen.len() as u128 == classes
            })
        })
    }
}
