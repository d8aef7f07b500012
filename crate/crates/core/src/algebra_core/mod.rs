//! Grading groups, carriers, elements and the canonical enumeration order.
//!
//! Both grading groups and ring/module carriers are finitely generated
//! abelian groups presented as products of cyclic factors `Z_{d_1} x ... x
//! Z_{d_k}`, with `d_i = 0` standing for an infinite cyclic factor. Infinite
//! factors are explored inside the symmetric box `[-B, B]`.

mod carrier;
mod group;

pub use carrier::{canonical_compare, enumerate_carrier, Carrier, Element, EnumerationBound};
pub use group::{deg_combine, deg_invert, Degree, GradingGroup};

use std::cmp::Ordering;

/// Per-coordinate canonical order: by absolute value, positive before
/// negative, lexicographic across coordinates. Finite coordinates are stored
/// reduced into `[0, d)`, so for them this is plain numeric order.
pub(crate) fn canonical_cmp(a: &[i64], b: &[i64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.unsigned_abs().cmp(&y.unsigned_abs()).then_with(|| (*x < 0).cmp(&(*y < 0)));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// Canonically sorted integers of one coordinate: `0..d`, or `0, 1, -1, ...,
/// B, -B` for an infinite factor.
pub(crate) fn coordinate_range(order: u64, bound: u32) -> Vec<i64> {
    if order == 0 {
        let mut v = vec![0];
        for k in 1..=bound as i64 {
            v.push(k);
            v.push(-k);
        }
        v
    } else {
        (0..order as i64).collect()
    }
}

/// Cartesian product of the coordinate ranges, first coordinate outermost.
pub(crate) fn enumerate_box(orders: &[u64], bound: u32) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &d in orders {
        let range = coordinate_range(d, bound);
        let mut next = Vec::with_capacity(out.len() * range.len());
        for prefix in &out {
            for &v in &range {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn reduce_coords(orders: &[u64], coords: &mut [i64]) {
    for (c, &d) in coords.iter_mut().zip(orders) {
        if d != 0 {
            *c = c.rem_euclid(d as i64);
        }
    }
}

pub(crate) fn format_coords(coords: &[i64]) -> String {
    if coords.len() == 1 {
        coords[0].to_string()
    } else {
        let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}
