use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{canonical_cmp, enumerate_box, format_coords, reduce_coords};
use crate::error::{structural, Error, Result};
use crate::lattice::Row;

/// Half-width `B` of the box `[-B, B]` used for every infinite coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EnumerationBound(u32);

impl EnumerationBound {
    pub fn new(b: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::Validation { field: "bound".into(), message: "bound must be at least 1".into() });
        }
        Ok(EnumerationBound(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for EnumerationBound {
    fn default() -> Self {
        EnumerationBound(10)
    }
}

impl fmt::Display for EnumerationBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The additive group `Z_{d_1} x ... x Z_{d_k}` underlying a ring or module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Carrier {
    orders: Vec<u64>,
}

/// A carrier element; finite coordinates are reduced into `[0, d)`.
///
/// The derived ordering is the canonical order: coordinates compared
/// lexicographically, each by absolute value with positive values first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Element(Vec<i64>);

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", format_coords(&self.0))
        }
    }
}

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl Carrier {
    /// Orders `d_i >= 2` for finite factors, `0` for infinite ones.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.contains(&1) {
            return Err(Error::Validation {
                field: "carrier.orders".into(),
                message: "cyclic factor of order 1; drop it or use 0 for Z".into(),
            });
        }
        Ok(Carrier { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn dim(&self) -> usize {
        self.orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&d| d != 0)
    }

    /// Number of elements of a finite carrier.
    pub fn size(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.orders.iter().product())
        } else {
            None
        }
    }

    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(structural(format!(
                "element {coords:?} has {} coordinates, carrier {:?} has {}",
                coords.len(),
                self.orders,
                self.dim()
            )));
        }
        Ok(self.reduce(coords.to_vec()))
    }

    pub(crate) fn reduce(&self, mut coords: Vec<i64>) -> Element {
        reduce_coords(&self.orders, &mut coords);
        Element(coords)
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.0.len() == self.dim() && x.0.iter().zip(&self.orders).all(|(&c, &d)| d == 0 || (0..d as i64).contains(&c))
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(structural(format!("element {x} does not belong to carrier {:?}", self.orders)))
        }
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.dim()])
    }

    /// The `i`-th standard generator.
    pub fn basis(&self, i: usize) -> Element {
        let mut c = vec![0; self.dim()];
        c[i] = 1;
        self.reduce(c)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.reduce(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.reduce(x.0.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.reduce(x.0.iter().zip(&y.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64, x: &Element) -> Element {
        self.reduce(x.0.iter().map(|a| k * a).collect())
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Element {
        xs.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// True when every infinite coordinate lies in `[-B, B]`.
    pub fn in_box(&self, x: &Element, bound: EnumerationBound) -> bool {
        x.0.iter().zip(&self.orders).all(|(&c, &d)| d != 0 || c.unsigned_abs() <= bound.get() as u64)
    }

    /// Relation rows `d_i e_i` for the finite factors.
    pub(crate) fn relations(&self) -> Vec<Row> {
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let mut r = vec![0; self.dim()];
                r[i] = d as i64;
                r
            })
            .collect()
    }
}

/// Every element (finite carrier) or every element of the box, in
/// canonical order.
pub fn enumerate_carrier(carrier: &Carrier, bound: EnumerationBound) -> Vec<Element> {
    enumerate_box(&carrier.orders, bound.get()).into_iter().map(Element).collect()
}

/// Canonical order of two elements of the same carrier.
pub fn canonical_compare(carrier: &Carrier, x: &Element, y: &Element) -> Result<Ordering> {
    carrier.check(x)?;
    carrier.check(y)?;
    Ok(x.cmp(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u32) -> EnumerationBound {
        EnumerationBound::new(n).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let z2 = Carrier::new(vec![2]).unwrap();
        let e: Vec<_> = enumerate_carrier(&z2, b(5)).iter().map(|x| x.coords()[0]).collect();
        assert_eq!(e, vec![0, 1]);

        let z = Carrier::new(vec![0]).unwrap();
        let e: Vec<_> = enumerate_carrier(&z, b(2)).iter().map(|x| x.coords()[0]).collect();
        assert_eq!(e, vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn enumerate_mixed_product_matches_lexicographic_oracle() {
        let c = Carrier::new(vec![0, 6]).unwrap();
        let got = enumerate_carrier(&c, b(1));
        // oracle: product of the coordinate sequences, first coordinate outermost
        let mut oracle = Vec::new();
        for x in [0, 1, -1] {
            for y in 0..6 {
                oracle.push(vec![x, y]);
            }
        }
        assert_eq!(got.len(), 18);
        let got: Vec<Vec<i64>> = got.iter().map(|e| e.coords().to_vec()).collect();
        assert_eq!(got, oracle);
        assert_eq!(&got[..3], &[vec![0, 0], vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn compare_examples() {
        let z = Carrier::new(vec![0]).unwrap();
        let e = |v: i64| z.element(&[v]).unwrap();
        assert_eq!(canonical_compare(&z, &e(2), &e(-2)).unwrap(), Ordering::Less);
        assert_eq!(canonical_compare(&z, &e(2), &e(6)).unwrap(), Ordering::Less);

        let m = Carrier::new(vec![0, 6]).unwrap();
        let x = m.element(&[0, 3]).unwrap();
        let y = m.element(&[1, 0]).unwrap();
        assert_eq!(canonical_compare(&m, &x, &y).unwrap(), Ordering::Less);
        assert!(canonical_compare(&z, &x, &y).is_err());
    }

    #[test]
    fn arithmetic_reduces_finite_coordinates() {
        let m = Carrier::new(vec![0, 6]).unwrap();
        let x = m.element(&[5, 4]).unwrap();
        assert_eq!(m.add(&x, &x).coords(), &[10, 2]);
        assert_eq!(m.neg(&x).coords(), &[-5, 2]);
        assert_eq!(m.scale(3, &x).coords(), &[15, 0]);
        assert_eq!(m.element(&[0, -1]).unwrap().coords(), &[0, 5]);
    }
}
