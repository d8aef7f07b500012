use std::collections::BTreeMap;

use super::subgroup::Subgroup;
use crate::algebra_core::{Carrier, Degree, Element, EnumerationBound, GradingGroup};
use crate::error::{structural, Result};
use crate::lattice::{Row, RowSolver};

/// Assignment of component subgroups to degrees. Degrees that are not listed
/// carry the zero component.
#[derive(Clone, Debug)]
pub struct Grading {
    group: GradingGroup,
    carrier: Carrier,
    components: Vec<(Degree, Subgroup)>,
    solver: RowSolver,
    // component index and generator behind each solver row; `None` for relations
    rows: Vec<Option<(usize, Element)>>,
}

impl PartialEq for Grading {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.carrier == other.carrier && self.components == other.components
    }
}

impl Grading {
    /// Components given by generator lists. Repeated degrees are merged and
    /// zero components dropped.
    pub fn new(group: &GradingGroup, carrier: &Carrier, components: Vec<(Degree, Vec<Element>)>) -> Result<Self> {
        let mut merged: BTreeMap<Degree, Vec<Element>> = BTreeMap::new();
        for (d, gens) in components {
            if !group.contains(&d) {
                return Err(structural(format!("degree {d} is not in the grading group")));
            }
            for g in &gens {
                carrier.check(g)?;
            }
            merged.entry(d).or_default().extend(gens);
        }
        let components: Vec<(Degree, Subgroup)> = merged
            .into_iter()
            .map(|(d, gens)| (d, Subgroup::span(carrier, &gens)))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        let mut lifted: Vec<Row> = Vec::new();
        let mut rows = Vec::new();
        for (k, (_, s)) in components.iter().enumerate() {
            for g in s.generators() {
                lifted.push(g.coords().to_vec());
                rows.push(Some((k, g)));
            }
        }
        for r in carrier.relations() {
            lifted.push(r);
            rows.push(None);
        }
        let solver = RowSolver::new(&lifted, carrier.dim());
        Ok(Grading { group: group.clone(), carrier: carrier.clone(), components, solver, rows })
    }

    /// Everything in the identity degree.
    pub fn trivial(group: &GradingGroup, carrier: &Carrier) -> Self {
        let gens = (0..carrier.dim()).map(|i| carrier.basis(i)).collect();
        Grading::new(group, carrier, vec![(group.identity(), gens)]).expect("identity degree is valid")
    }

    /// Standard generator `i` placed in degree `degrees[i]`.
    pub fn by_coordinate(group: &GradingGroup, carrier: &Carrier, degrees: &[Degree]) -> Result<Self> {
        if degrees.len() != carrier.dim() {
            return Err(structural(format!(
                "{} coordinate degrees given for a carrier with {} coordinates",
                degrees.len(),
                carrier.dim()
            )));
        }
        let comps = degrees.iter().enumerate().map(|(i, d)| (d.clone(), vec![carrier.basis(i)])).collect();
        Grading::new(group, carrier, comps)
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Nonzero components in degree order.
    pub fn components(&self) -> &[(Degree, Subgroup)] {
        &self.components
    }

    pub fn support(&self) -> Vec<Degree> {
        self.components.iter().map(|(d, _)| d.clone()).collect()
    }

    /// The component of degree `g` (the zero subgroup off the support).
    pub fn component(&self, g: &Degree) -> Subgroup {
        self.components
            .iter()
            .find(|(d, _)| d == g)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| Subgroup::zero(&self.carrier))
    }

    /// Sum of all components.
    pub fn span(&self) -> Subgroup {
        self.components.iter().fold(Subgroup::zero(&self.carrier), |acc, (_, s)| acc.sum(s))
    }

    /// Some decomposition `x = sum_g x_g` with `x_g` in the component of
    /// degree `g`, zero parts omitted. Unique when the grading is a direct
    /// sum; `None` when `x` is outside the sum of the components.
    pub fn decompose(&self, x: &Element) -> Option<BTreeMap<Degree, Element>> {
        let coeffs = self.solver.solve(x.coords())?;
        let mut parts: Vec<Vec<i64>> = vec![vec![0; self.carrier.dim()]; self.components.len()];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            let Some((owner, g)) = row else { continue };
            for (p, v) in parts[*owner].iter_mut().zip(g.coords()) {
                *p += c * v;
            }
        }
        let mut out = BTreeMap::new();
        for (k, p) in parts.into_iter().enumerate() {
            let e = self.carrier.reduce(p);
            if !e.is_zero() {
                out.insert(self.components[k].0.clone(), e);
            }
        }
        Some(out)
    }

    /// Degree of a homogeneous element; zero is reported in the identity degree.
    pub fn degree_of(&self, x: &Element) -> Option<Degree> {
        if x.is_zero() {
            return Some(self.group.identity());
        }
        self.components.iter().find(|(_, s)| s.contains(x)).map(|(d, _)| d.clone())
    }

    pub fn is_homogeneous(&self, x: &Element) -> bool {
        self.degree_of(x).is_some()
    }

    /// `h(-)`: the union of the components (inside the box when a coordinate
    /// is infinite), zero included, in canonical order.
    pub fn homogeneous_elements(&self, bound: EnumerationBound) -> Vec<Element> {
        let mut all: Vec<Element> = vec![self.carrier.zero()];
        for (_, s) in &self.components {
            all.extend(s.elements(bound));
        }
        all.sort();
        all.dedup();
        all
    }
}
