use crate::algebra_core::Element;
use crate::error::{precondition, Result};
use crate::structures::{
    colon_ring_group, CheckOutcome, Counterexample, GradedModule, GradedRing, GradedSubmodule, Rejection, Subgroup,
};

use super::multset::MultSet;

/// Everything a scan over homogeneous tuples needs about `C`.
pub(crate) struct Scan<'a> {
    pub c: &'a GradedSubmodule,
    pub module: &'a GradedModule,
    pub ring: &'a GradedRing,
    /// `(C :_R M)`
    pub colon: Subgroup,
    pub hr: &'a [Element],
    pub hm: &'a [Element],
    pub exact: bool,
}

impl<'a> Scan<'a> {
    pub fn new(c: &'a GradedSubmodule) -> Self {
        let module = c.module().as_ref();
        Scan {
            c,
            module,
            ring: module.ring(),
            colon: colon_ring_group(c),
            hr: module.ring().homogeneous_elements(),
            hm: module.homogeneous_elements(),
            exact: module.scan_is_exact(),
        }
    }

    pub fn passed(&self, witness: Option<Element>) -> CheckOutcome {
        CheckOutcome::passed(self.exact, self.module.bound(), witness)
    }

    pub fn failed(&self, cx: Counterexample) -> CheckOutcome {
        let bound = (!self.exact).then(|| self.module.bound());
        CheckOutcome::fails(cx).with_bound(bound)
    }

    /// `NotApplicable` when `0 in A` or `(C :_R M)` meets `A`.
    pub fn relative_precondition(&self, a: &MultSet) -> Option<CheckOutcome> {
        if a.has_zero() {
            return Some(CheckOutcome::not_applicable("0 lies in A"));
        }
        a.elements()
            .iter()
            .find(|x| self.colon.contains(x))
            .map(|x| CheckOutcome::not_applicable(format!("(C :_R M) meets A at {x}")))
    }

    /// `in_c[i][j]`: whether `x r_i m_j` lies in `C`.
    fn scaled_products(&self, x: &Element) -> Vec<Vec<bool>> {
        self.hr
            .iter()
            .map(|r| {
                let xr = self.ring.mul(x, r);
                self.hm.iter().map(|m| self.c.contains(&self.module.act(&xr, m))).collect()
            })
            .collect()
    }

    /// First `(r, m)` with `r m in C`, `a r` outside `(C :_R M)` and `a m`
    /// outside `C`; `a = None` is the plain prime condition.
    pub fn prime_violation(&self, a: Option<&Element>) -> Option<Counterexample> {
        let one = self.ring.one().clone();
        let a = a.unwrap_or(&one);
        for r in self.hr {
            if self.colon.contains(&self.ring.mul(a, r)) {
                continue;
            }
            for m in self.hm {
                if self.c.contains(&self.module.act(r, m)) && !self.c.contains(&self.module.act(a, m)) {
                    return Some(Counterexample::Pair { r: r.clone(), m: m.clone() });
                }
            }
        }
        None
    }

    /// First `(r, s, m)` with `r s m in C` while none of `a r s in (C :_R
    /// M)`, `a r m in C`, `a s m in C` holds; `a = None` is the plain
    /// 2-absorbing condition.
    pub fn triple_violation(&self, a: Option<&Element>) -> Option<Counterexample> {
        let one = self.ring.one().clone();
        let a = a.unwrap_or(&one);
        let arm = self.scaled_products(a);
        for (i, r) in self.hr.iter().enumerate() {
            // symmetric in r and s, so the first violation has s at or after r
            for (j, s) in self.hr.iter().enumerate().skip(i) {
                let rs = self.ring.mul(r, s);
                if self.colon.contains(&self.ring.mul(a, &rs)) {
                    continue;
                }
                for (k, m) in self.hm.iter().enumerate() {
                    if !arm[i][k] && !arm[j][k] && self.c.contains(&self.module.act(&rs, m)) {
                        return Some(Counterexample::Triple { r: r.clone(), s: s.clone(), m: m.clone() });
                    }
                }
            }
        }
        None
    }

    /// Try every element of `A` in canonical order.
    pub fn search(&self, a: &MultSet, mut violation: impl FnMut(&Element) -> Option<Counterexample>) -> CheckOutcome {
        let mut rejected = Vec::new();
        for w in a.elements() {
            match violation(w) {
                None => return self.passed(Some(w.clone())),
                Some(cx) => rejected.push(Rejection { witness: w.clone(), counterexample: cx }),
            }
        }
        let Some(first) = rejected.first() else {
            return CheckOutcome::not_applicable("A is empty");
        };
        let mut out = self.failed(first.counterexample.clone());
        out.rejected = rejected;
        if a.is_bounded() {
            out = out.with_reason("no witness among the enumerated elements of A");
        }
        out
    }
}

/// Graded prime: `r m in C` forces `m in C` or `r in (C :_R M)`.
pub fn is_graded_prime(c: &GradedSubmodule) -> CheckOutcome {
    if c.is_full() {
        return CheckOutcome::not_applicable("not proper");
    }
    let scan = Scan::new(c);
    match scan.prime_violation(None) {
        Some(cx) => scan.failed(cx),
        None => scan.passed(None),
    }
}

/// Graded 2-absorbing: `r s m in C` forces `r m in C`, `s m in C` or
/// `r s in (C :_R M)`.
pub fn is_graded_2_absorbing(c: &GradedSubmodule) -> CheckOutcome {
    if c.is_full() {
        return CheckOutcome::not_applicable("not proper");
    }
    let scan = Scan::new(c);
    match scan.triple_violation(None) {
        Some(cx) => scan.failed(cx),
        None => scan.passed(None),
    }
}

/// Graded A-prime, with the canonically first fixed witness in `A`.
pub fn is_graded_a_prime(c: &GradedSubmodule, a: &MultSet) -> CheckOutcome {
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return na;
    }
    scan.search(a, |w| scan.prime_violation(Some(w)))
}

/// Graded A-2-absorbing: some fixed `a in A` such that `r s m in C` forces
/// `a r s in (C :_R M)`, `a r m in C` or `a s m in C`. Returns the
/// canonically first such `a`.
pub fn is_graded_a_2_absorbing(c: &GradedSubmodule, a: &MultSet) -> CheckOutcome {
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return na;
    }
    scan.search(a, |w| scan.triple_violation(Some(w)))
}

/// Test one candidate witness against the A-2-absorbing condition.
pub fn is_witness(w: &Element, c: &GradedSubmodule, a: &MultSet) -> Result<CheckOutcome> {
    if !a.contains(w) {
        return Err(precondition(format!("{w} is not in A")));
    }
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return Ok(na);
    }
    Ok(match scan.triple_violation(Some(w)) {
        Some(cx) => scan.failed(cx),
        None => scan.passed(Some(w.clone())),
    })
}

/// Test one candidate witness against the A-prime condition.
pub fn is_prime_witness(w: &Element, c: &GradedSubmodule, a: &MultSet) -> Result<CheckOutcome> {
    if !a.contains(w) {
        return Err(precondition(format!("{w} is not in A")));
    }
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return Ok(na);
    }
    Ok(match scan.prime_violation(Some(w)) {
        Some(cx) => scan.failed(cx),
        None => scan.passed(Some(w.clone())),
    })
}

/// Whether a reported pair or triple really violates the condition it was
/// reported for: the plain condition when `w` is `None`, the relative one
/// with fixed element `w` otherwise.
pub fn reproduces_violation(c: &GradedSubmodule, w: Option<&Element>, cx: &Counterexample) -> bool {
    let m = c.module();
    let ring = m.ring();
    let colon = colon_ring_group(c);
    let one = ring.one().clone();
    let a = w.unwrap_or(&one);
    let homogeneous = |x: &Element| ring.is_homogeneous(x);
    match cx {
        Counterexample::Pair { r, m: x } => {
            homogeneous(r)
                && m.is_homogeneous(x)
                && c.contains(&m.act(r, x))
                && !colon.contains(&ring.mul(a, r))
                && !c.contains(&m.act(a, x))
        }
        Counterexample::Triple { r, s, m: x } => {
            let rs = ring.mul(r, s);
            homogeneous(r)
                && homogeneous(s)
                && m.is_homogeneous(x)
                && c.contains(&m.act(&rs, x))
                && !colon.contains(&ring.mul(a, &rs))
                && !c.contains(&m.act(&ring.mul(a, r), x))
                && !c.contains(&m.act(&ring.mul(a, s), x))
        }
        _ => false,
    }
}
