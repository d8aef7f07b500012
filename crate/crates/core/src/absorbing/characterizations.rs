use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra_core::{Degree, Element};
use crate::error::{precondition, Result};
use crate::structures::{
    colon_by_scalar, colon_module, enumerate_graded_submodules, CheckOutcome, Counterexample, Divisor, GradedModule,
    GradedSubmodule, Subgroup, Verdict,
};

use super::multset::MultSet;
use super::predicates::{is_graded_2_absorbing, is_graded_a_2_absorbing, Scan};

/// Upper limit on enumerated ideals or submodules per structure.
const ENUMERATION_CAP: usize = 4096;

/// A nonzero homogeneous component: its degree and additive generators.
struct Piece {
    owner: Vec<Element>,
    degree: Degree,
    gens: Vec<Element>,
}

fn pieces(subs: &[Subgroup], grading: &crate::structures::Grading) -> Vec<Piece> {
    let mut out = Vec::new();
    for s in subs {
        for (d, comp) in grading.components() {
            let part = s.intersect(comp);
            if !part.is_zero() {
                out.push(Piece { owner: s.generators(), degree: d.clone(), gens: part.generators() });
            }
        }
    }
    out
}

/// Ideals and submodules quantified over by the component condition, and
/// whether the enumeration is complete.
fn quantified(module: &Arc<GradedModule>) -> (Vec<Subgroup>, Vec<Subgroup>, bool) {
    let ring_module = Arc::new(GradedModule::ring_as_module(module.ring_arc().clone()));
    if module.ring().is_finite() && module.is_finite() {
        let ideals = enumerate_graded_submodules(&ring_module, None, ENUMERATION_CAP);
        let subs = enumerate_graded_submodules(module, None, ENUMERATION_CAP);
        return (
            ideals.iter().map(|i| i.subgroup().clone()).collect(),
            subs.iter().map(|k| k.subgroup().clone()).collect(),
            true,
        );
    }
    if module.scan_is_exact() {
        // Ideals only matter modulo ann(M); the ideals containing it are
        // sums of ann(M) and principal ideals of box elements.
        let ann = module.annihilator().clone();
        let ideals = enumerate_graded_submodules(&ring_module, Some(ann), ENUMERATION_CAP);
        let subs = enumerate_graded_submodules(module, None, ENUMERATION_CAP);
        return (
            ideals.iter().map(|i| i.subgroup().clone()).collect(),
            subs.iter().map(|k| k.subgroup().clone()).collect(),
            true,
        );
    }
    let rc = module.ring().carrier();
    let principal = |gens: Vec<Element>, carrier| Subgroup::span(carrier, &gens);
    let ideals = module
        .ring()
        .homogeneous_elements()
        .iter()
        .map(|r| principal((0..rc.dim()).map(|i| module.ring().mul(&rc.basis(i), r)).collect(), rc))
        .collect();
    let subs = module
        .homogeneous_elements()
        .iter()
        .map(|m| principal((0..rc.dim()).map(|i| module.act(&rc.basis(i), m)).collect(), module.carrier()))
        .collect();
    (ideals, subs, false)
}

fn all_in(target: &Subgroup, xs: impl IntoIterator<Item = Element>) -> bool {
    xs.into_iter().all(|x| target.contains(&x))
}

/// Shared body of the component conditions. `third` is the set that
/// `a I_g J_h` must land in.
fn component_condition(
    c: &GradedSubmodule,
    a: &MultSet,
    ideal_pieces: &[Piece],
    sub_pieces: &[Piece],
    third: &Subgroup,
    exact: bool,
    scan: &Scan<'_>,
) -> CheckOutcome {
    let module = c.module();
    let ring = module.ring();
    // I_g J_h K_lambda subset C, independent of the witness
    let mut product_in: Vec<Vec<Vec<bool>>> = Vec::with_capacity(ideal_pieces.len());
    for i in ideal_pieces {
        let mut by_j = Vec::with_capacity(ideal_pieces.len());
        for j in ideal_pieces {
            let ij: Vec<Element> = i.gens.iter().flat_map(|x| j.gens.iter().map(move |y| ring.mul(x, y))).collect();
            by_j.push(
                sub_pieces
                    .iter()
                    .map(|k| all_in(c.subgroup(), ij.iter().flat_map(|p| k.gens.iter().map(move |z| module.act(p, z)))))
                    .collect(),
            );
        }
        product_in.push(by_j);
    }
    let bound = module.bound();
    let mut first_failure = None;
    for w in a.elements() {
        let ik: Vec<Vec<bool>> = ideal_pieces
            .iter()
            .map(|i| {
                let wi: Vec<Element> = i.gens.iter().map(|x| ring.mul(w, x)).collect();
                sub_pieces
                    .iter()
                    .map(|k| all_in(c.subgroup(), wi.iter().flat_map(|p| k.gens.iter().map(move |z| module.act(p, z)))))
                    .collect()
            })
            .collect();
        let ij: Vec<Vec<bool>> = ideal_pieces
            .iter()
            .map(|i| {
                let wi: Vec<Element> = i.gens.iter().map(|x| ring.mul(w, x)).collect();
                ideal_pieces
                    .iter()
                    .map(|j| all_in(third, wi.iter().flat_map(|p| j.gens.iter().map(move |y| ring.mul(p, y)))))
                    .collect()
            })
            .collect();
        let mut violation = None;
        'search: for (x, i) in ideal_pieces.iter().enumerate() {
            for (y, j) in ideal_pieces.iter().enumerate() {
                for (z, k) in sub_pieces.iter().enumerate() {
                    if product_in[x][y][z] && !ik[x][z] && !ik[y][z] && !ij[x][y] {
                        violation = Some(Counterexample::Components {
                            i: i.owner.clone(),
                            j: j.owner.clone(),
                            k: k.owner.clone(),
                            g: i.degree.clone(),
                            h: j.degree.clone(),
                            lambda: k.degree.clone(),
                        });
                        break 'search;
                    }
                }
            }
        }
        match violation {
            None => return CheckOutcome::passed(exact, bound, Some(w.clone())),
            Some(cx) => {
                if first_failure.is_none() {
                    first_failure = Some(cx);
                }
            }
        }
    }
    match first_failure {
        Some(cx) => scan.failed(cx),
        None => CheckOutcome::not_applicable("A is empty"),
    }
}

/// Component form: a fixed `a in A` such that for all graded ideals `I`,
/// `J`, graded submodules `K` and degrees `g, h, lambda`,
/// `I_g J_h K_lambda subset C` forces `a I_g K_lambda subset C`,
/// `a J_h K_lambda subset C` or `a I_g J_h subset (C :_R M)`.
///
/// The quantification is complete for finite modules; otherwise it runs
/// over principal ideals and cyclic submodules of box elements and the
/// verdict is bounded.
pub fn check_component_ideal_condition(c: &GradedSubmodule, a: &MultSet) -> CheckOutcome {
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return na;
    }
    let module = c.module();
    let (ideals, subs, complete) = quantified(module);
    let ip = pieces(&ideals, module.ring().grading());
    let kp = pieces(&subs, module.grading());
    component_condition(c, a, &ip, &kp, &scan.colon, complete && scan.exact, &scan)
}

/// The ideal form of the component condition for an ideal `P` of `R`: a
/// fixed `a in A` such that `I_g J_h L_lambda subset P` forces
/// `a I_g L_lambda subset P`, `a J_h L_lambda subset P` or
/// `a I_g J_h subset P`, over graded ideals `I, J, L`.
pub fn check_ideal_condition(p: &GradedSubmodule, a: &MultSet) -> Result<CheckOutcome> {
    let module = p.module();
    let ring = module.ring();
    if module.carrier() != ring.carrier() || module.action_table() != ring.table() {
        return Err(precondition("the submodule is not an ideal of its ring"));
    }
    let scan = Scan::new(p);
    if let Some(na) = scan.relative_precondition(a) {
        return Ok(na);
    }
    let (ideals, _, complete) = quantified(module);
    let ip = pieces(&ideals, ring.grading());
    Ok(component_condition(p, a, &ip, &ip, p.subgroup(), complete && scan.exact, &scan))
}

/// Colon form: a fixed `a in A` such that for all homogeneous `r, s`,
/// `(C :_M a^2 r s)` equals `(C :_M a^2 r)` or `(C :_M a^2 s)`, or
/// `(C :_M a^3 r s) = M`.
pub fn colon_characterization(c: &GradedSubmodule, a: &MultSet) -> CheckOutcome {
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return na;
    }
    let ring = scan.ring;
    let mut cache: HashMap<Element, Subgroup> = HashMap::new();
    let mut colon =
        |x: &Element| -> Subgroup { cache.entry(x.clone()).or_insert_with(|| colon_by_scalar(c, x)).clone() };
    scan.search(a, |w| {
        let w2 = ring.mul(w, w);
        let w3 = ring.mul(&w2, w);
        for (i, r) in scan.hr.iter().enumerate() {
            let w2r = ring.mul(&w2, r);
            for s in scan.hr.iter().skip(i) {
                if scan.colon.contains(&ring.mul(&w3, &ring.mul(r, s))) {
                    continue;
                }
                let both = colon(&ring.mul(&w2r, s));
                if both != colon(&w2r) && both != colon(&ring.mul(&w2, s)) {
                    return Some(Counterexample::Scalars { r: r.clone(), s: s.clone() });
                }
            }
        }
        None
    })
}

/// Check `(C :_M a^3) = (C :_M a^n)` and `(C :_R a^3 M) = (C :_R a^n M)`
/// for `3 <= n <= n_max`, with `a` the witness found by
/// [`is_graded_a_2_absorbing`].
pub fn stabilization_check(c: &GradedSubmodule, a: &MultSet, n_max: u32) -> Result<CheckOutcome> {
    let found = is_graded_a_2_absorbing(c, a);
    match (found.verdict, found.witness) {
        (Verdict::Holds | Verdict::BoundedHolds, Some(w)) => Ok(stabilization_check_with(c, &w, n_max)),
        _ => Err(precondition(format!("C is not A-2-absorbing ({})", found.verdict))),
    }
}

/// [`stabilization_check`] for a given element `a`.
pub fn stabilization_check_with(c: &GradedSubmodule, w: &Element, n_max: u32) -> CheckOutcome {
    let scan = Scan::new(c);
    let ring = scan.ring;
    let rc = ring.carrier();
    let ring_colon = |x: &Element| {
        let images: Vec<Element> = (0..rc.dim()).map(|i| ring.mul(&rc.basis(i), x)).collect();
        Subgroup::preimage(rc, &images, &scan.colon)
    };
    let w3 = ring.pow(w, 3);
    let (m3, r3) = (colon_by_scalar(c, &w3), ring_colon(&w3));
    for n in 4..=n_max {
        let wn = ring.pow(w, n);
        if colon_by_scalar(c, &wn) != m3 {
            return scan.failed(Counterexample::Exponent { n, detail: "(C :_M a^3) != (C :_M a^n)".into() });
        }
        if ring_colon(&wn) != r3 {
            return scan.failed(Counterexample::Exponent { n, detail: "(C :_R a^3 M) != (C :_R a^n M)".into() });
        }
    }
    scan.passed(Some(w.clone()))
}

/// Colon-quotient form: some `a in A` with `(C :_M a)` graded 2-absorbing.
pub fn colon_quotient_2abs(c: &GradedSubmodule, a: &MultSet) -> CheckOutcome {
    let scan = Scan::new(c);
    if let Some(na) = scan.relative_precondition(a) {
        return na;
    }
    scan.search(a, |w| {
        let quotient = colon_module(c, Divisor::Scalar(w)).expect("elements of A are homogeneous");
        is_graded_2_absorbing(&quotient).counterexample
    })
}
