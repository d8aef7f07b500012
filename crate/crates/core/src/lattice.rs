//! Integer lattice arithmetic.
//!
//! Every subgroup of a product of cyclic groups `Z_{d_1} x ... x Z_{d_k}` is
//! carried as a lattice `L` in `Z^k` that contains the relation lattice
//! `d_1 Z x ... x d_k Z`. Membership, sums, intersections and preimages are
//! then exact integer computations, independent of any enumeration bound.
//!
//! Internally all arithmetic runs in `i128`; values are returned as `i64`.

use std::fmt;

/// A row vector of integers.
pub type Row = Vec<i64>;

type Wide = Vec<i128>;

fn widen(v: &[i64]) -> Wide {
    v.iter().map(|&x| x as i128).collect()
}

fn narrow(v: &[i128]) -> Row {
    v.iter().map(|&x| i64::try_from(x).expect("lattice entry exceeds i64 range")).collect()
}

fn sub_scaled(target: &mut [i128], source: &[i128], q: i128) {
    if q == 0 {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Row echelon form together with the unimodular transform that produced it.
///
/// `transform * input == rows`. Rows `rank..` of `rows` are zero and the
/// matching rows of `transform` span the integer relations among the input
/// rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Row>,
    pub transform: Vec<Row>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Integer relations among the input rows.
    pub fn relations(&self) -> &[Row] {
        &self.transform[self.rank()..]
    }
}

/// Hermite normal form by rows: pivots positive, entries above a pivot
/// reduced into `[0, pivot)`.
pub fn echelon(input: &[Row], ncols: usize) -> Echelon {
    let n = input.len();
    let mut h: Vec<Wide> = input
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length mismatch");
            widen(r)
        })
        .collect();
    let mut t: Vec<Wide> = (0..n)
        .map(|i| {
            let mut r = vec![0i128; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..ncols {
        if pr == n {
            break;
        }
        let mut found = false;
        loop {
            let best = (pr..n).filter(|&r| h[r][col] != 0).min_by_key(|&r| (h[r][col].abs(), r));
            let Some(b) = best else { break };
            found = true;
            h.swap(pr, b);
            t.swap(pr, b);
            let p = h[pr][col];
            let mut clean = true;
            for r in pr + 1..n {
                if h[r][col] != 0 {
                    let q = h[r][col] / p;
                    let (hp, hr) = split_pair(&mut h, pr, r);
                    sub_scaled(hr, hp, q);
                    let (tp, tr) = split_pair(&mut t, pr, r);
                    sub_scaled(tr, tp, q);
                    if h[r][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[pr][col] < 0 {
            h[pr].iter_mut().for_each(|x| *x = -*x);
            t[pr].iter_mut().for_each(|x| *x = -*x);
        }
        let p = h[pr][col];
        for r in 0..pr {
            let q = h[r][col].div_euclid(p);
            let (hp, hr) = split_pair(&mut h, pr, r);
            sub_scaled(hr, hp, q);
            let (tp, tr) = split_pair(&mut t, pr, r);
            sub_scaled(tr, tp, q);
        }
        pivots.push(col);
        pr += 1;
    }
    Echelon { rows: h.iter().map(|r| narrow(r)).collect(), transform: t.iter().map(|r| narrow(r)).collect(), pivots }
}

/// Borrow row `a` immutably and row `b` mutably.
fn split_pair(m: &mut [Wide], a: usize, b: usize) -> (&[i128], &mut [i128]) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = m.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// A sublattice of `Z^dim` in Hermite normal form. Equal lattices have equal
/// bases, so derived equality is lattice equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Row>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice{:?}", self.basis)
    }
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(dim: usize, gens: &[Row]) -> Self {
        Lattice::from_echelon(dim, &echelon(gens, dim))
    }

    fn from_echelon(dim: usize, e: &Echelon) -> Self {
        let rank = e.rank();
        Lattice { dim, basis: e.rows[..rank].to_vec(), pivots: e.pivots.clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }

    /// Index of the lattice in `Z^dim`, or `None` when the lattice is not of
    /// full rank.
    pub fn determinant(&self) -> Option<u128> {
        if !self.is_full_rank() {
            return None;
        }
        Some(self.basis.iter().zip(&self.pivots).map(|(r, &c)| r[c] as u128).product())
    }

    /// Canonical representative of the coset `v + L`.
    pub fn reduce(&self, v: &[i64]) -> Row {
        assert_eq!(v.len(), self.dim);
        let mut w = widen(v);
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let p = row[c] as i128;
            let q = w[c].div_euclid(p);
            sub_scaled(&mut w, &widen(row), q);
        }
        narrow(&w)
    }

    /// Coefficients of `v` over the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[i64]) -> Option<Row> {
        assert_eq!(v.len(), self.dim);
        let mut w = widen(v);
        let mut coeffs = Vec::with_capacity(self.basis.len());
        let mut next = 0;
        for col in 0..self.dim {
            if next < self.pivots.len() && self.pivots[next] == col {
                let row = &self.basis[next];
                let p = row[col] as i128;
                if w[col] % p != 0 {
                    return None;
                }
                let q = w[col] / p;
                sub_scaled(&mut w, &widen(row), q);
                coeffs.push(i64::try_from(q).expect("coefficient overflow"));
                next += 1;
            } else if w[col] != 0 {
                return None;
            }
        }
        Some(coeffs)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let gens: Vec<Row> = self.basis.iter().chain(&other.basis).cloned().collect();
        Lattice::span(self.dim, &gens)
    }

    /// `{ x in Z^k : sum_i x_i * images[i] in target }` where `k = images.len()`.
    pub fn preimage(images: &[Row], target: &Lattice) -> Lattice {
        let k = images.len();
        let mut rows: Vec<Row> = images.to_vec();
        rows.extend(target.basis.iter().cloned());
        let e = echelon(&rows, target.dim);
        let gens: Vec<Row> = e.relations().iter().map(|r| r[..k].to_vec()).collect();
        Lattice::span(k, &gens)
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let coeffs = Lattice::preimage(&self.basis, other);
        let gens: Vec<Row> = coeffs.basis.iter().map(|c| combine(c, &self.basis, self.dim)).collect();
        Lattice::span(self.dim, &gens)
    }
}

/// Solves `v = sum_i c_i * rows[i]` for a fixed list of rows.
#[derive(Debug, Clone)]
pub struct RowSolver {
    nrows: usize,
    transform: Vec<Row>,
    span: Lattice,
}

impl RowSolver {
    pub fn new(rows: &[Row], ncols: usize) -> Self {
        let e = echelon(rows, ncols);
        let span = Lattice::from_echelon(ncols, &e);
        let transform = e.transform[..e.rank()].to_vec();
        RowSolver { nrows: rows.len(), transform, span }
    }

    pub fn span(&self) -> &Lattice {
        &self.span
    }

    /// Some coefficient vector `c` with `sum_i c_i rows[i] == v`.
    pub fn solve(&self, v: &[i64]) -> Option<Row> {
        let u = self.span.coordinates(v)?;
        Some(combine(&u, &self.transform, self.nrows))
    }
}

/// `sum_i coeffs[i] * rows[i]`.
pub fn combine(coeffs: &[i64], rows: &[Row], dim: usize) -> Row {
    let mut acc = vec![0i128; dim];
    for (c, r) in coeffs.iter().zip(rows) {
        if *c == 0 {
            continue;
        }
        for (a, x) in acc.iter_mut().zip(r) {
            *a += (*c as i128) * (*x as i128);
        }
    }
    narrow(&acc)
}

/// Diagonal form of a relation matrix under unimodular column changes.
///
/// With `y = x * q`, the row space of the relations becomes
/// `diag[0] Z x diag[1] Z x ...`; a zero entry is an infinite cyclic factor.
#[derive(Debug, Clone)]
pub struct Diagonal {
    pub diag: Vec<i64>,
    pub q: Vec<Row>,
}

pub fn diagonalize(relations: &[Row], n: usize) -> Diagonal {
    let m = relations.len();
    let mut a: Vec<Wide> = relations.iter().map(|r| widen(r)).collect();
    let mut q: Vec<Wide> = (0..n)
        .map(|i| {
            let mut r = vec![0i128; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut diag = vec![0i64; n];
    let swap_cols = |mat: &mut Vec<Wide>, i: usize, j: usize| {
        for r in mat.iter_mut() {
            r.swap(i, j);
        }
    };
    for t in 0..m.min(n) {
        let mut found = false;
        loop {
            let mut best: Option<(i128, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(b, _, _)| x.abs() < b) {
                        best = Some((x.abs(), i, j));
                    }
                }
            }
            let Some((_, bi, bj)) = best else { break };
            found = true;
            a.swap(t, bi);
            swap_cols(&mut a, t, bj);
            swap_cols(&mut q, t, bj);
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let f = a[i][t] / p;
                    let (at, ai) = split_pair(&mut a, t, i);
                    sub_scaled(ai, at, f);
                    if a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let f = a[t][j] / p;
                    for r in a.iter_mut() {
                        r[j] -= f * r[t];
                    }
                    for r in q.iter_mut() {
                        r[j] -= f * r[t];
                    }
                    if a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            break;
        }
        if a[t][t] < 0 {
            for r in a.iter_mut() {
                r[t] = -r[t];
            }
            for r in q.iter_mut() {
                r[t] = -r[t];
            }
        }
        diag[t] = i64::try_from(a[t][t]).expect("diagonal entry overflow");
    }
    Diagonal { diag, q: q.iter().map(|r| narrow(r)).collect() }
}

/// A finite abelian group, given by an addition table on element ids,
/// rewritten as a product of cyclic groups.
#[derive(Debug, Clone)]
pub struct FinitePresentation {
    /// Orders of the cyclic factors (all at least 2).
    pub orders: Vec<u64>,
    /// Coordinates of every element id in the cyclic factors.
    pub coords: Vec<Row>,
}

/// Present the group on ids `0..n` with identity `zero` and addition `add`.
/// Generators are taken greedily in id order.
pub fn present_finite_group(n: usize, zero: usize, add: impl Fn(usize, usize) -> usize) -> FinitePresentation {
    let mut gen_coords: Vec<Option<Row>> = vec![None; n];
    gen_coords[zero] = Some(Vec::new());
    let mut members = vec![zero];
    let mut relations: Vec<Row> = Vec::new();
    let mut ngens = 0usize;
    for x in 0..n {
        if gen_coords[x].is_some() {
            continue;
        }
        let k = ngens;
        ngens += 1;
        // multiples of x until one falls into the current subgroup
        let mut steps = vec![x];
        let mut y = x;
        loop {
            y = add(y, x);
            if gen_coords[y].is_some() {
                break;
            }
            steps.push(y);
        }
        let order = steps.len() as i64 + 1;
        let mut rel = gen_coords[y].clone().unwrap();
        rel.resize(k + 1, 0);
        rel.iter_mut().for_each(|c| *c = -*c);
        rel[k] += order;
        relations.push(rel);
        let old = members.clone();
        for h in old {
            let base = gen_coords[h].clone().unwrap();
            let mut z = h;
            for j in 1..order {
                z = add(z, x);
                let mut c = base.clone();
                c.resize(k + 1, 0);
                c[k] = j;
                debug_assert!(gen_coords[z].is_none());
                gen_coords[z] = Some(c);
                members.push(z);
            }
        }
    }
    for r in relations.iter_mut() {
        r.resize(ngens, 0);
    }
    let d = diagonalize(&relations, ngens);
    let keep: Vec<usize> = (0..ngens).filter(|&i| d.diag[i] != 1).collect();
    let orders = keep.iter().map(|&i| d.diag[i] as u64).collect();
    let coords = gen_coords
        .into_iter()
        .map(|c| {
            let mut c = c.expect("every element reached");
            c.resize(ngens, 0);
            let y = combine(&c, &d.q, ngens);
            keep.iter().map(|&i| y[i].rem_euclid(d.diag[i])).collect()
        })
        .collect();
    FinitePresentation { orders, coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_of_multiples() {
        let l = Lattice::span(1, &[vec![4], vec![12]]);
        assert_eq!(l.basis(), &[vec![4]]);
        assert!(l.contains(&[8]));
        assert!(!l.contains(&[6]));
        assert_eq!(l.reduce(&[-3]), vec![1]);
    }

    #[test]
    fn echelon_transform_reproduces_rows() {
        let input = vec![vec![2, 4, 6], vec![3, 1, 0], vec![5, 5, 6]];
        let e = echelon(&input, 3);
        for (t, h) in e.transform.iter().zip(&e.rows) {
            assert_eq!(&combine(t, &input, 3), h);
        }
        // third row is the sum of the first two
        assert_eq!(e.rank(), 2);
        let rel = &e.relations()[0];
        assert_eq!(combine(rel, &input, 3), vec![0, 0, 0]);
    }

    #[test]
    fn intersection_of_multiples() {
        let a = Lattice::span(1, &[vec![4]]);
        let b = Lattice::span(1, &[vec![6]]);
        assert_eq!(a.intersect(&b), Lattice::span(1, &[vec![12]]));
        assert_eq!(a.sum(&b), Lattice::span(1, &[vec![2]]));
    }

    #[test]
    fn preimage_under_scaling() {
        // {x : 2x in 6Z} = 3Z
        let target = Lattice::span(1, &[vec![6]]);
        assert_eq!(Lattice::preimage(&[vec![2]], &target), Lattice::span(1, &[vec![3]]));
        // {x : 0 in anything} = Z
        assert_eq!(Lattice::preimage(&[vec![0]], &target), Lattice::span(1, &[vec![1]]));
    }

    #[test]
    fn solver_recovers_combination() {
        let rows = vec![vec![2, 0], vec![0, 3], vec![1, 1]];
        let s = RowSolver::new(&rows, 2);
        let v = vec![5, -4];
        let c = s.solve(&v).unwrap();
        assert_eq!(combine(&c, &rows, 2), v);
        let only_even = RowSolver::new(&[vec![2]], 1);
        assert!(only_even.solve(&[3]).is_none());
    }

    #[test]
    fn determinant_counts_cosets() {
        let l = Lattice::span(2, &[vec![2, 0], vec![0, 6]]);
        assert_eq!(l.determinant(), Some(12));
        assert_eq!(Lattice::span(2, &[vec![1, 0]]).determinant(), None);
    }

    #[test]
    fn diagonalize_z2_times_z6_relations() {
        // Z^2 / <(2,0),(0,6)> has order 12; the diagonal product must match.
        let d = diagonalize(&[vec![2, 0], vec![0, 6]], 2);
        let prod: i64 = d.diag.iter().product();
        assert_eq!(prod, 12);
    }

    #[test]
    fn present_cyclic_and_klein() {
        // Z_6 under addition
        let p = present_finite_group(6, 0, |a, b| (a + b) % 6);
        assert_eq!(p.orders.iter().product::<u64>(), 6);
        // Klein four group as xor
        let k = present_finite_group(4, 0, |a, b| a ^ b);
        assert_eq!(k.orders, vec![2, 2]);
        let mut seen: Vec<Row> = k.coords.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }
}
