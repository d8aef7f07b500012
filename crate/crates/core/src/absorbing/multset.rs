use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra_core::Element;
use crate::error::{precondition, Error, Result};
use crate::structures::GradedRing;

/// A multiplicatively closed set `A` of homogeneous elements containing 1.
///
/// Over an infinite ring the closure is truncated at the box and the set is
/// flagged as bounded.
#[derive(Clone, Debug)]
pub struct MultSet {
    ring: Arc<GradedRing>,
    elements: Vec<Element>,
    bounded: bool,
}

impl PartialEq for MultSet {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl fmt::Display for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", xs.join(", "))?;
        if self.bounded {
            write!(f, " (truncated at B = {})", self.ring.bound())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct MultSetView<'a> {
    elements: &'a [Element],
    bounded: bool,
    contains_zero: bool,
}

impl Serialize for MultSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultSetView { elements: &self.elements, bounded: self.bounded, contains_zero: self.has_zero() }.serialize(s)
    }
}

impl MultSet {
    fn build(ring: &Arc<GradedRing>, elements: impl IntoIterator<Item = Element>, bounded: bool) -> Self {
        let set: BTreeSet<Element> = elements.into_iter().collect();
        MultSet { ring: ring.clone(), elements: set.into_iter().collect(), bounded }
    }

    /// An explicit set; it must consist of homogeneous elements and be
    /// closed under products (products leaving the box are ignored). `1` is
    /// added.
    pub fn from_elements(ring: &Arc<GradedRing>, elements: &[Element]) -> Result<Self> {
        let mut set: BTreeSet<Element> = BTreeSet::new();
        set.insert(ring.one().clone());
        for x in elements {
            ring.carrier().check(x)?;
            if !ring.is_homogeneous(x) {
                return Err(precondition(format!("{x} is not homogeneous")));
            }
            set.insert(x.clone());
        }
        let mut bounded = false;
        for x in &set {
            for y in &set {
                let p = ring.mul(x, y);
                if !ring.carrier().in_box(&p, ring.bound()) {
                    bounded = true;
                } else if !set.contains(&p) {
                    return Err(Error::Validation {
                        field: "multset".into(),
                        message: format!("not multiplicatively closed: {x} * {y} = {p} is missing"),
                    });
                }
            }
        }
        Ok(Self::build(ring, set, bounded))
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the set was truncated at the box.
    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    /// Warning flag: `0 in A`, which makes every relative predicate not
    /// applicable.
    pub fn has_zero(&self) -> bool {
        self.elements.iter().any(|x| x.is_zero())
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn is_subset_of(&self, other: &MultSet) -> bool {
        self.elements.iter().all(|a| other.contains(a))
    }
}

/// The smallest multiplicatively closed set containing `gens` and 1,
/// truncated at the ring's box.
pub fn mult_closure(gens: &[Element], ring: &Arc<GradedRing>) -> Result<MultSet> {
    let mut set: BTreeSet<Element> = BTreeSet::new();
    set.insert(ring.one().clone());
    for g in gens {
        ring.carrier().check(g)?;
        if !ring.is_homogeneous(g) {
            return Err(precondition(format!("generator {g} is not homogeneous")));
        }
        set.insert(g.clone());
    }
    let mut bounded = false;
    loop {
        let mut fresh = Vec::new();
        for x in &set {
            for y in &set {
                let p = ring.mul(x, y);
                if set.contains(&p) {
                    continue;
                }
                if ring.carrier().in_box(&p, ring.bound()) {
                    fresh.push(p);
                } else {
                    bounded = true;
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    Ok(MultSet::build(ring, set, bounded))
}

/// The homogeneous units of `R`, searched within the box over an infinite
/// ring.
pub fn units(ring: &Arc<GradedRing>) -> MultSet {
    let all = ring.elements();
    let us = ring.homogeneous_elements().iter().filter(|x| all.iter().any(|y| &ring.mul(x, y) == ring.one())).cloned();
    MultSet::build(ring, us, !ring.is_finite())
}

/// `Z \ {0}` truncated at the box; only for the integers.
pub fn nonzero_integers(ring: &Arc<GradedRing>) -> Result<MultSet> {
    let c = ring.carrier();
    let is_z = c.orders() == [0] && ring.table()[0][0] == c.basis(0) && ring.one() == &c.basis(0);
    if !is_z {
        return Err(Error::Validation {
            field: "multset".into(),
            message: format!("nonzero_integers needs the ring of integers, not {}", ring.name()),
        });
    }
    let xs = ring.homogeneous_elements().iter().filter(|x| !x.is_zero()).cloned();
    Ok(MultSet::build(ring, xs, true))
}

/// `A* = { a in h(R) : b a t = b u for some t in h(R) and u, b in A }`,
/// the homogeneous elements that become units after inverting `A`.
pub fn saturate(a: &MultSet) -> MultSet {
    let ring = &a.ring;
    let hr = ring.homogeneous_elements();
    let targets: Vec<(Element, HashSet<Element>)> =
        a.elements.iter().map(|b| (b.clone(), a.elements.iter().map(|u| ring.mul(b, u)).collect())).collect();
    let star = hr.iter().filter(|x| {
        hr.iter().any(|t| {
            let xt = ring.mul(x, t);
            targets.iter().any(|(b, bu)| bu.contains(&ring.mul(b, &xt)))
        })
    });
    MultSet::build(ring, star.cloned(), a.bounded || !ring.is_finite())
}
