use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra_core::{enumerate_carrier, Carrier, Element, EnumerationBound};
use crate::lattice::{Lattice, Row};

/// An additive subgroup of a carrier, held as the lattice of its lifts.
///
/// The lattice always contains the carrier's relation lattice, so two
/// subgroups are equal exactly when their lattices are equal.
#[derive(Clone)]
pub struct Subgroup {
    carrier: Carrier,
    lattice: Lattice,
    members: Arc<OnceLock<HashSet<Element>>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.lattice == other.lattice
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.carrier.hash(state);
        self.lattice.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl Subgroup {
    fn from_lattice(carrier: &Carrier, lattice: Lattice) -> Self {
        Subgroup { carrier: carrier.clone(), lattice, members: Arc::new(OnceLock::new()) }
    }

    fn lift_with_relations<'a>(carrier: &Carrier, gens: impl IntoIterator<Item = &'a Element>) -> Vec<Row> {
        let mut rows: Vec<Row> = gens.into_iter().map(|g| g.coords().to_vec()).collect();
        rows.extend(carrier.relations());
        rows
    }

    /// Subgroup generated by `gens`.
    pub fn span<'a>(carrier: &Carrier, gens: impl IntoIterator<Item = &'a Element>) -> Self {
        let rows = Self::lift_with_relations(carrier, gens);
        Self::from_lattice(carrier, Lattice::span(carrier.dim(), &rows))
    }

    pub fn zero(carrier: &Carrier) -> Self {
        Self::span(carrier, [])
    }

    pub fn full(carrier: &Carrier) -> Self {
        let basis: Vec<Element> = (0..carrier.dim()).map(|i| carrier.basis(i)).collect();
        Self::span(carrier, &basis)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub(crate) fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn contains(&self, x: &Element) -> bool {
        if self.carrier.is_finite() {
            self.members().contains(x)
        } else {
            self.lattice.contains(x.coords())
        }
    }

    fn members(&self) -> &HashSet<Element> {
        self.members.get_or_init(|| {
            enumerate_carrier(&self.carrier, EnumerationBound::default())
                .into_iter()
                .filter(|x| self.lattice.contains(x.coords()))
                .collect()
        })
    }

    /// Nonzero generators read off the Hermite basis, in canonical order.
    pub fn generators(&self) -> Vec<Element> {
        let mut gens: Vec<Element> =
            self.lattice.basis().iter().map(|r| self.carrier.reduce(r.clone())).filter(|e| !e.is_zero()).collect();
        gens.sort();
        gens.dedup();
        gens
    }

    /// All elements (finite carrier) or the elements inside the box.
    pub fn elements(&self, bound: EnumerationBound) -> Vec<Element> {
        enumerate_carrier(&self.carrier, bound).into_iter().filter(|x| self.contains(x)).collect()
    }

    /// Number of elements, for finite carriers.
    pub fn order(&self) -> Option<u64> {
        let size = self.carrier.size()?;
        let index = self.lattice.determinant()? as u64;
        Some(size / index)
    }

    pub fn is_zero(&self) -> bool {
        self.generators().is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.lattice.is_full_rank() && self.lattice.determinant() == Some(1)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        other.lattice.contains_lattice(&self.lattice)
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Self::from_lattice(&self.carrier, self.lattice.intersect(&other.lattice))
    }

    pub fn sum(&self, other: &Subgroup) -> Subgroup {
        Self::from_lattice(&self.carrier, self.lattice.sum(&other.lattice))
    }

    /// `{ x in domain : f(x) in target }` for the additive map `f` sending
    /// the `i`-th standard generator of `domain` to `images[i]`.
    pub fn preimage(domain: &Carrier, images: &[Element], target: &Subgroup) -> Subgroup {
        let rows: Vec<Row> = images.iter().map(|e| e.coords().to_vec()).collect();
        let pre = Lattice::preimage(&rows, &target.lattice);
        let mut gens: Vec<Row> = pre.basis().to_vec();
        gens.extend(domain.relations());
        Self::from_lattice(domain, Lattice::span(domain.dim(), &gens))
    }

    /// Image of this subgroup under an additive map into `target`.
    pub fn image(&self, target: &Carrier, images: &[Element]) -> Subgroup {
        let gens: Vec<Element> = self.generators().iter().map(|g| apply_linear(target, images, g)).collect();
        Subgroup::span(target, &gens)
    }

    /// Canonical representative of the coset `x + self`.
    pub fn coset_representative(&self, x: &Element) -> Element {
        self.carrier.reduce(self.lattice.reduce(x.coords()))
    }
}

/// Evaluate the additive map given by the images of the standard generators.
pub fn apply_linear(target: &Carrier, images: &[Element], x: &Element) -> Element {
    let mut acc = vec![0i64; target.dim()];
    for (c, img) in x.coords().iter().zip(images) {
        if *c == 0 {
            continue;
        }
        for (a, v) in acc.iter_mut().zip(img.coords()) {
            *a += c * v;
        }
    }
    target.reduce(acc)
}
