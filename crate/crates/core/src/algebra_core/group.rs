use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{canonical_cmp, enumerate_box, format_coords, reduce_coords, EnumerationBound};
use crate::error::{structural, Error, Result};

/// A finitely generated abelian grading group, written additively.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradingGroup {
    orders: Vec<u64>,
}

/// An element of a [`GradingGroup`]. Finite coordinates are reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Degree(Vec<i64>);

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", format_coords(&self.0))
        }
    }
}

impl Degree {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl GradingGroup {
    /// Orders `d_i >= 2` for finite factors, `0` for infinite ones.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(d) = orders.iter().find(|&&d| d == 1) {
            return Err(Error::Validation {
                field: "group.orders".into(),
                message: format!("cyclic factor of order {d}; use 0 for Z or an order >= 2"),
            });
        }
        Ok(GradingGroup { orders })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GradingGroup { orders: Vec::new() }
    }

    /// `Z_n` for `n >= 2`, or `Z` for `n == 0`.
    pub fn cyclic(n: u64) -> Self {
        GradingGroup::new(vec![n]).expect("cyclic order must be 0 or at least 2")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&d| d != 0)
    }

    pub fn identity(&self) -> Degree {
        Degree(vec![0; self.orders.len()])
    }

    pub fn degree(&self, coords: &[i64]) -> Result<Degree> {
        if coords.len() != self.orders.len() {
            return Err(structural(format!(
                "degree {coords:?} has {} coordinates, grading group has {} factors",
                coords.len(),
                self.orders.len()
            )));
        }
        let mut c = coords.to_vec();
        reduce_coords(&self.orders, &mut c);
        Ok(Degree(c))
    }

    pub fn contains(&self, g: &Degree) -> bool {
        g.0.len() == self.orders.len()
            && g.0.iter().zip(&self.orders).all(|(&x, &d)| d == 0 || (0..d as i64).contains(&x))
    }

    fn check(&self, g: &Degree) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(structural(format!("degree {g} does not belong to grading group {:?}", self.orders)))
        }
    }

    /// All degrees (finite group) or the degrees in the box.
    pub fn elements(&self, bound: EnumerationBound) -> Vec<Degree> {
        enumerate_box(&self.orders, bound.get()).into_iter().map(Degree).collect()
    }
}

/// Sum of two degrees.
pub fn deg_combine(group: &GradingGroup, g: &Degree, h: &Degree) -> Result<Degree> {
    group.check(g)?;
    group.check(h)?;
    let sum: Vec<i64> = g.0.iter().zip(&h.0).map(|(a, b)| a + b).collect();
    group.degree(&sum)
}

/// Inverse degree.
pub fn deg_invert(group: &GradingGroup, g: &Degree) -> Result<Degree> {
    group.check(g)?;
    let neg: Vec<i64> = g.0.iter().map(|a| -a).collect();
    group.degree(&neg)
}
