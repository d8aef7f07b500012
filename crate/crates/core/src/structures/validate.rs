use super::grading::Grading;
use super::hom::GradedHomomorphism;
use super::module::GradedModule;
use super::outcome::{CheckOutcome, Counterexample};
use super::ring::GradedRing;
use super::subgroup::Subgroup;
use crate::algebra_core::{deg_combine, Carrier, Element, EnumerationBound};

// Laws are decided exactly on standard generators (multiplication and the
// action are bilinear, so distributivity holds by construction). When a law
// fails, the enumeration is scanned for the canonically first violation and
// the generators are reported only if the box holds none.

fn law(name: &str, elements: Vec<Element>) -> Counterexample {
    Counterexample::Law { law: name.to_string(), elements }
}

fn first_single(xs: &[Element], bad: impl Fn(&Element) -> bool) -> Option<Vec<Element>> {
    xs.iter().find(|x| bad(x)).map(|x| vec![x.clone()])
}

fn first_pair(xs: &[Element], ys: &[Element], bad: impl Fn(&Element, &Element) -> bool) -> Option<Vec<Element>> {
    for x in xs {
        for y in ys {
            if bad(x, y) {
                return Some(vec![x.clone(), y.clone()]);
            }
        }
    }
    None
}

fn first_triple(
    xs: &[Element],
    ys: &[Element],
    zs: &[Element],
    bad: impl Fn(&Element, &Element, &Element) -> bool,
) -> Option<Vec<Element>> {
    for x in xs {
        for y in ys {
            for z in zs {
                if bad(x, y, z) {
                    return Some(vec![x.clone(), y.clone(), z.clone()]);
                }
            }
        }
    }
    None
}

fn basis(c: &Carrier) -> Vec<Element> {
    (0..c.dim()).map(|i| c.basis(i)).collect()
}

/// Direct-sum check for a grading: the components span the carrier and
/// each meets the sum of the others only in zero.
fn check_direct_sum(grading: &Grading, bound: EnumerationBound) -> Option<Counterexample> {
    let carrier = grading.carrier();
    let elements = crate::algebra_core::enumerate_carrier(carrier, bound);
    let span = grading.span();
    if !span.is_full() {
        let x = elements
            .iter()
            .find(|x| !span.contains(x))
            .cloned()
            .or_else(|| basis(carrier).into_iter().find(|x| !span.contains(x)))
            .expect("a proper subgroup misses a generator");
        return Some(Counterexample::Element { element: x, detail: "no decomposition into components".into() });
    }
    let comps = grading.components();
    for (k, (d, s)) in comps.iter().enumerate() {
        let others = comps
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .fold(Subgroup::zero(carrier), |acc, (_, (_, t))| acc.sum(t));
        let overlap = s.intersect(&others);
        if !overlap.is_zero() {
            let x = overlap
                .elements(bound)
                .into_iter()
                .find(|x| !x.is_zero())
                .unwrap_or_else(|| overlap.generators()[0].clone());
            return Some(Counterexample::Element {
                element: x,
                detail: format!("lies in the degree {d} component and in the sum of the others"),
            });
        }
    }
    None
}

/// Check the graded ring axioms: well-defined multiplication, direct sum,
/// `1 in R_e`, commutativity, associativity, identity and
/// `R_g R_h subset R_{g+h}`.
pub fn validate_graded_ring(r: &GradedRing) -> CheckOutcome {
    match ring_violation(r) {
        Some(cx) => CheckOutcome::fails(cx),
        None => CheckOutcome::passed(r.is_finite(), r.bound(), None),
    }
}

fn ring_violation(r: &GradedRing) -> Option<Counterexample> {
    let c = r.carrier();
    let gens = basis(c);
    let table = r.table();
    for (i, &d) in c.orders().iter().enumerate() {
        if d == 0 {
            continue;
        }
        for j in 0..c.dim() {
            if !c.scale(d as i64, &table[i][j]).is_zero() || !c.scale(d as i64, &table[j][i]).is_zero() {
                return Some(law(
                    "multiplication respects the carrier relations",
                    vec![gens[i].clone(), gens[j].clone()],
                ));
            }
        }
    }
    if let Some(cx) = check_direct_sum(r.grading(), r.bound()) {
        return Some(cx);
    }
    let e = r.group().identity();
    if !r.grading().component(&e).contains(r.one()) {
        return Some(Counterexample::Element { element: r.one().clone(), detail: "identity is not in R_e".into() });
    }
    let xs = r.elements();
    let comm = |x: &Element, y: &Element| r.mul(x, y) != r.mul(y, x);
    if first_pair(&gens, &gens, comm).is_some() {
        let w = first_pair(&xs, &xs, comm).or_else(|| first_pair(&gens, &gens, comm)).unwrap();
        return Some(law("commutativity", w));
    }
    let assoc = |x: &Element, y: &Element, z: &Element| r.mul(&r.mul(x, y), z) != r.mul(x, &r.mul(y, z));
    if first_triple(&gens, &gens, &gens, assoc).is_some() {
        let w = first_triple(&xs, &xs, &xs, assoc).or_else(|| first_triple(&gens, &gens, &gens, assoc)).unwrap();
        return Some(law("associativity", w));
    }
    let unit = |x: &Element| &r.mul(r.one(), x) != x;
    if first_single(&gens, unit).is_some() {
        let w = first_single(&xs, unit).or_else(|| first_single(&gens, unit)).unwrap();
        return Some(law("identity", w));
    }
    let grading = r.grading();
    let bad = |x: &Element, y: &Element| {
        let (Some(g), Some(h)) = (grading.degree_of(x), grading.degree_of(y)) else {
            return false;
        };
        let gh = deg_combine(r.group(), &g, &h).expect("same group");
        !grading.component(&gh).contains(&r.mul(x, y))
    };
    let comp_gens: Vec<Element> = grading.components().iter().flat_map(|(_, s)| s.generators()).collect();
    if first_pair(&comp_gens, &comp_gens, bad).is_some() {
        let hr = r.homogeneous_elements();
        let w = first_pair(hr, hr, bad).or_else(|| first_pair(&comp_gens, &comp_gens, bad)).unwrap();
        return Some(law("R_g R_h subset R_gh", w));
    }
    None
}

/// Check the graded module axioms (the ring is assumed valid): well-defined
/// action, direct sum, `1 m = m`, `(rs) m = r (s m)` and
/// `R_g M_h subset M_{g+h}`.
pub fn validate_graded_module(m: &GradedModule) -> CheckOutcome {
    match module_violation(m) {
        Some(cx) => CheckOutcome::fails(cx),
        None => CheckOutcome::passed(m.scan_is_exact(), m.bound(), None),
    }
}

fn module_violation(m: &GradedModule) -> Option<Counterexample> {
    let r = m.ring();
    let (rc, mc) = (r.carrier(), m.carrier());
    let (rgens, mgens) = (basis(rc), basis(mc));
    let action = m.action_table();
    for i in 0..rc.dim() {
        for j in 0..mc.dim() {
            let di = rc.orders()[i];
            let dj = mc.orders()[j];
            let bad_i = di != 0 && !mc.scale(di as i64, &action[i][j]).is_zero();
            let bad_j = dj != 0 && !mc.scale(dj as i64, &action[i][j]).is_zero();
            if bad_i || bad_j {
                return Some(law("action respects the carrier relations", vec![rgens[i].clone(), mgens[j].clone()]));
            }
        }
    }
    if let Some(cx) = check_direct_sum(m.grading(), m.bound()) {
        return Some(cx);
    }
    let rs = r.elements();
    let ms = m.elements();
    let unit = |x: &Element| &m.act(r.one(), x) != x;
    if first_single(&mgens, unit).is_some() {
        let w = first_single(&ms, unit).or_else(|| first_single(&mgens, unit)).unwrap();
        return Some(law("identity", w));
    }
    let assoc = |a: &Element, b: &Element, x: &Element| m.act(&r.mul(a, b), x) != m.act(a, &m.act(b, x));
    if first_triple(&rgens, &rgens, &mgens, assoc).is_some() {
        let w = first_triple(&rs, &rs, &ms, assoc).or_else(|| first_triple(&rgens, &rgens, &mgens, assoc)).unwrap();
        return Some(law("(rs)m = r(sm)", w));
    }
    let (rg, mg) = (r.grading(), m.grading());
    let bad = |a: &Element, x: &Element| {
        let (Some(g), Some(h)) = (rg.degree_of(a), mg.degree_of(x)) else {
            return false;
        };
        let gh = deg_combine(r.group(), &g, &h).expect("same group");
        !mg.component(&gh).contains(&m.act(a, x))
    };
    let rcomp: Vec<Element> = rg.components().iter().flat_map(|(_, s)| s.generators()).collect();
    let mcomp: Vec<Element> = mg.components().iter().flat_map(|(_, s)| s.generators()).collect();
    if first_pair(&rcomp, &mcomp, bad).is_some() {
        let w = first_pair(r.homogeneous_elements(), m.homogeneous_elements(), bad)
            .or_else(|| first_pair(&rcomp, &mcomp, bad))
            .unwrap();
        return Some(law("R_g M_h subset M_gh", w));
    }
    None
}

/// Check `f(r m) = r f(m)` and `f(M_g) subset M'_g`. Additivity holds by
/// construction.
pub fn validate_graded_hom(f: &GradedHomomorphism) -> CheckOutcome {
    let (src, tgt) = (f.source(), f.target());
    let rc = src.ring().carrier();
    let (rgens, mgens) = (basis(rc), basis(src.carrier()));
    let linear = |a: &Element, x: &Element| f.apply(&src.act(a, x)) != tgt.act(a, &f.apply(x));
    if first_pair(&rgens, &mgens, linear).is_some() {
        let w = first_pair(&src.ring().elements(), &src.elements(), linear)
            .or_else(|| first_pair(&rgens, &mgens, linear))
            .unwrap();
        return CheckOutcome::fails(law("f(r m) = r f(m)", w));
    }
    let bad = |x: &Element| match src.grading().degree_of(x) {
        Some(d) => !tgt.grading().component(&d).contains(&f.apply(x)),
        None => false,
    };
    let comp: Vec<Element> = src.grading().components().iter().flat_map(|(_, s)| s.generators()).collect();
    if first_single(&comp, bad).is_some() {
        let w = first_single(src.homogeneous_elements(), bad).or_else(|| first_single(&comp, bad)).unwrap();
        return CheckOutcome::fails(law("f(M_g) subset M'_g", w));
    }
    CheckOutcome::passed(src.scan_is_exact() && tgt.scan_is_exact(), src.bound(), None)
}
