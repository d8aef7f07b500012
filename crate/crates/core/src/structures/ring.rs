use std::sync::OnceLock;

use super::grading::Grading;
use crate::algebra_core::{enumerate_carrier, Carrier, Degree, Element, EnumerationBound, GradingGroup};
use crate::error::{structural, Error, Result};

/// A commutative ring on a product-of-cyclics carrier, with multiplication
/// given by structure constants on the standard generators, and a grading.
///
/// Construction does not validate the ring axioms; run
/// [`validate_graded_ring`](super::validate_graded_ring) for that.
#[derive(Debug)]
pub struct GradedRing {
    name: String,
    carrier: Carrier,
    table: Vec<Vec<Element>>,
    one: Element,
    grading: Grading,
    bound: EnumerationBound,
    homogeneous: OnceLock<Vec<Element>>,
}

impl Clone for GradedRing {
    fn clone(&self) -> Self {
        GradedRing {
            name: self.name.clone(),
            carrier: self.carrier.clone(),
            table: self.table.clone(),
            one: self.one.clone(),
            grading: self.grading.clone(),
            bound: self.bound,
            homogeneous: OnceLock::new(),
        }
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.table == other.table
            && self.one == other.one
            && self.grading == other.grading
            && self.bound == other.bound
    }
}

impl GradedRing {
    /// Generic constructor: `table[i][j]` is the product of standard
    /// generators `i` and `j`.
    pub fn from_table(
        name: impl Into<String>,
        carrier: Carrier,
        table: Vec<Vec<Element>>,
        one: Element,
        grading: Grading,
    ) -> Result<Self> {
        let k = carrier.dim();
        if table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(structural(format!("multiplication table must be {k} x {k}")));
        }
        for x in table.iter().flatten().chain([&one]) {
            carrier.check(x)?;
        }
        if grading.carrier() != &carrier {
            return Err(structural("grading lives on a different carrier"));
        }
        Ok(GradedRing {
            name: name.into(),
            carrier,
            table,
            one,
            grading,
            bound: EnumerationBound::default(),
            homogeneous: OnceLock::new(),
        })
    }

    fn cyclic_table(carrier: &Carrier) -> Vec<Vec<Element>> {
        vec![vec![carrier.basis(0)]]
    }

    /// `Z_n`, trivially graded (everything in the identity degree).
    pub fn modular(n: u64, group: &GradingGroup) -> Result<Self> {
        if n < 2 {
            return Err(Error::Validation {
                field: "ring.n".into(),
                message: format!("modulus {n} must be at least 2"),
            });
        }
        let carrier = Carrier::new(vec![n])?;
        let grading = Grading::trivial(group, &carrier);
        Self::from_table(format!("Z_{n}"), carrier.clone(), Self::cyclic_table(&carrier), carrier.basis(0), grading)
    }

    /// The integers, trivially graded. Always explored in bounded mode.
    pub fn integers(group: &GradingGroup) -> Self {
        let carrier = Carrier::new(vec![0]).expect("Z is a valid carrier");
        let grading = Grading::trivial(group, &carrier);
        Self::from_table("Z", carrier.clone(), Self::cyclic_table(&carrier), carrier.basis(0), grading)
            .expect("Z is well formed")
    }

    /// Group algebra `Z_n[G]` (or `Z[G]` for `n == 0`) over a finite grading
    /// group `G`, graded by `R_g = Z_n * g`. Coordinate `i` is the coefficient
    /// of the `i`-th element of `G` in canonical order.
    pub fn group_algebra(base: u64, group: &GradingGroup) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::Unsupported("group algebras need a finite grading group".into()));
        }
        let degrees = group.elements(EnumerationBound::default());
        let carrier = Carrier::new(vec![base; degrees.len()])?;
        let index = |d: &Degree| degrees.iter().position(|x| x == d).expect("closed under addition");
        let table = degrees
            .iter()
            .map(|g| {
                degrees
                    .iter()
                    .map(|h| {
                        let gh = crate::algebra_core::deg_combine(group, g, h).expect("same group");
                        carrier.basis(index(&gh))
                    })
                    .collect()
            })
            .collect();
        let grading = Grading::by_coordinate(group, &carrier, &degrees)?;
        let base_name = if base == 0 { "Z".to_string() } else { format!("Z_{base}") };
        let group_name: Vec<String> =
            group.orders().iter().map(|d| if *d == 0 { "Z".into() } else { format!("Z_{d}") }).collect();
        let name = format!("{base_name}[{}]", group_name.join("x"));
        Self::from_table(name, carrier.clone(), table, carrier.basis(index(&group.identity())), grading)
    }

    /// Direct product of rings graded by the same group; `(R x S)_g = R_g x S_g`.
    pub fn product(factors: &[&GradedRing]) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(structural("product of no rings"));
        };
        let group = first.group().clone();
        if factors.iter().any(|f| f.group() != &group) {
            return Err(structural("product factors use different grading groups"));
        }
        let orders: Vec<u64> = factors.iter().flat_map(|f| f.carrier.orders().to_vec()).collect();
        let carrier = Carrier::new(orders)?;
        let k = carrier.dim();
        let mut offsets = Vec::new();
        let mut off = 0;
        for f in factors {
            offsets.push(off);
            off += f.carrier.dim();
        }
        let embed = |fi: usize, x: &Element| {
            let mut c = vec![0; k];
            c[offsets[fi]..offsets[fi] + x.coords().len()].copy_from_slice(x.coords());
            carrier.reduce(c)
        };
        let mut table = vec![vec![carrier.zero(); k]; k];
        for (fi, f) in factors.iter().enumerate() {
            for i in 0..f.carrier.dim() {
                for j in 0..f.carrier.dim() {
                    table[offsets[fi] + i][offsets[fi] + j] = embed(fi, &f.table[i][j]);
                }
            }
        }
        let one = carrier.sum(&factors.iter().enumerate().map(|(fi, f)| embed(fi, &f.one)).collect::<Vec<_>>());
        let mut comps = Vec::new();
        for (fi, f) in factors.iter().enumerate() {
            for (d, s) in f.grading.components() {
                comps.push((d.clone(), s.generators().iter().map(|g| embed(fi, g)).collect()));
            }
        }
        let grading = Grading::new(&group, &carrier, comps)?;
        let name = factors.iter().map(|f| f.name.clone()).collect::<Vec<_>>().join(" x ");
        Self::from_table(name, carrier, table, one, grading)
    }

    /// Replace the grading with components given by generator lists.
    pub fn with_grading(mut self, components: Vec<(Degree, Vec<Element>)>) -> Result<Self> {
        self.grading = Grading::new(self.grading.group(), &self.carrier, components)?;
        self.homogeneous = OnceLock::new();
        Ok(self)
    }

    pub fn with_bound(mut self, bound: EnumerationBound) -> Self {
        self.bound = bound;
        self.homogeneous = OnceLock::new();
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn table(&self) -> &[Vec<Element>] {
        &self.table
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn group(&self) -> &GradingGroup {
        self.grading.group()
    }

    pub fn bound(&self) -> EnumerationBound {
        self.bound
    }

    pub fn is_finite(&self) -> bool {
        self.carrier.is_finite()
    }

    pub fn zero(&self) -> Element {
        self.carrier.zero()
    }

    pub fn one(&self) -> &Element {
        &self.one
    }

    /// Parse coordinates into a ring element.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        self.carrier.element(coords)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.carrier.add(x, y)
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.carrier.neg(x)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.carrier.sub(x, y)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        bilinear(&self.carrier, &self.table, x, y)
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        (0..n).fold(self.one.clone(), |acc, _| self.mul(&acc, x))
    }

    /// Elements of the carrier (all, or those in the box).
    pub fn elements(&self) -> Vec<Element> {
        enumerate_carrier(&self.carrier, self.bound)
    }

    /// `h(R)` in canonical order, zero included.
    pub fn homogeneous_elements(&self) -> &[Element] {
        self.homogeneous.get_or_init(|| self.grading.homogeneous_elements(self.bound))
    }

    pub fn is_homogeneous(&self, x: &Element) -> bool {
        self.grading.is_homogeneous(x)
    }

    pub fn is_unit(&self, x: &Element) -> bool {
        self.elements().iter().any(|y| self.mul(x, y) == self.one)
    }
}

/// `sum_{i,j} x_i y_j table[i][j]`, reduced.
pub(crate) fn bilinear(target: &Carrier, table: &[Vec<Element>], x: &Element, y: &Element) -> Element {
    let mut acc = vec![0i64; target.dim()];
    for (i, &xi) in x.coords().iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.coords().iter().enumerate() {
            if yj == 0 {
                continue;
            }
            let c = xi * yj;
            for (a, v) in acc.iter_mut().zip(table[i][j].coords()) {
                *a += c * v;
            }
        }
    }
    target.reduce(acc)
}
