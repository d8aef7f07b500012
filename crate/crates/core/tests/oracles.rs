//! Golden values checked against small brute-force oracles written with
//! plain integer arithmetic, independent of the library's lattice code.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use graded_absorbing::absorbing::*;
use graded_absorbing::algebra_core::*;
use graded_absorbing::localization::*;
use graded_absorbing::structures::*;

// Shared builders.

fn zn(n: u64) -> Arc<GradedRing> {
    Arc::new(GradedRing::modular(n, &GradingGroup::cyclic(2)).unwrap())
}

fn zn_self(n: u64) -> (Arc<GradedRing>, Arc<GradedModule>) {
    let r = zn(n);
    let m = Arc::new(GradedModule::ring_as_module(r.clone()));
    (r, m)
}

fn el(r: &GradedRing, x: i64) -> Element {
    r.element(&[x]).unwrap()
}

fn mel(m: &GradedModule, xs: &[i64]) -> Element {
    m.element(xs).unwrap()
}

fn firsts(xs: &[Element]) -> Vec<i64> {
    xs.iter().map(|x| x.coords()[0]).collect()
}

/// `Z x Z_6` over `Z` graded by `Z`, with `M_0 = Z x 0` and `M_1 = 0 x Z_6`.
fn ex1() -> (Arc<GradedRing>, Arc<GradedModule>) {
    let g = GradingGroup::cyclic(0);
    let z = Arc::new(GradedRing::integers(&g));
    let degs = [g.degree(&[0]).unwrap(), g.degree(&[1]).unwrap()];
    let m = Arc::new(GradedModule::cyclic_product(z.clone(), vec![0, 6], &degs).unwrap());
    (z, m)
}

/// `Z_6` over `Z` graded by `Z_2`, all of it in degree 0.
fn ex2() -> (Arc<GradedRing>, Arc<GradedModule>) {
    let g = GradingGroup::cyclic(2);
    let z = Arc::new(GradedRing::integers(&g));
    let m = Arc::new(GradedModule::cyclic_product(z.clone(), vec![6], &[g.identity()]).unwrap());
    (z, m)
}

/// Integers in `[-b, b]` in canonical order: by absolute value, positive first.
fn z_box(b: i64) -> Vec<i64> {
    let mut v = vec![0];
    for k in 1..=b {
        v.push(k);
        v.push(-k);
    }
    v
}

fn modp(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

// Oracles over Z_n as a module over itself, with C a set of residues.

fn colon_zn(c: &BTreeSet<i64>, n: i64) -> BTreeSet<i64> {
    (0..n).filter(|&r| (0..n).all(|m| c.contains(&modp(r * m, n)))).collect()
}

fn ideals_zn(n: i64) -> Vec<BTreeSet<i64>> {
    (1..=n).filter(|d| n % d == 0).map(|d| (0..n).filter(|x| x % d == 0).collect()).collect()
}

fn first_a2abs_witness(c: &BTreeSet<i64>, a_set: &[i64], n: i64) -> Option<i64> {
    let colon = colon_zn(c, n);
    a_set.iter().copied().find(|&a| {
        (0..n).all(|r| {
            (0..n).all(|s| {
                (0..n).all(|m| {
                    !c.contains(&modp(r * s * m, n))
                        || colon.contains(&modp(a * r * s, n))
                        || c.contains(&modp(a * r * m, n))
                        || c.contains(&modp(a * s * m, n))
                })
            })
        })
    })
}

fn first_2abs_violation(c: &BTreeSet<i64>, n: i64) -> Option<(i64, i64, i64)> {
    let colon = colon_zn(c, n);
    for r in 0..n {
        for s in 0..n {
            for m in 0..n {
                if c.contains(&modp(r * s * m, n))
                    && !colon.contains(&modp(r * s, n))
                    && !c.contains(&modp(r * m, n))
                    && !c.contains(&modp(s * m, n))
                {
                    return Some((r, s, m));
                }
            }
        }
    }
    None
}

/// Number of classes of `Z_n x A` under `(x, a) ~ (y, b)` iff `c (b x - a y) = 0`.
fn fraction_classes(n: i64, a_set: &[i64]) -> Vec<Vec<(i64, i64)>> {
    let equiv = |(x, a): (i64, i64), (y, b): (i64, i64)| a_set.iter().any(|&c| modp(c * (b * x - a * y), n) == 0);
    let mut classes: Vec<Vec<(i64, i64)>> = Vec::new();
    for x in 0..n {
        for &a in a_set {
            match classes.iter_mut().find(|cl| equiv(cl[0], (x, a))) {
                Some(cl) => cl.push((x, a)),
                None => classes.push(vec![(x, a)]),
            }
        }
    }
    classes
}

// Carriers and degrees.

#[test]
fn enumeration_of_z_times_z6() {
    let c = Carrier::new(vec![0, 6]).unwrap();
    let got = enumerate_carrier(&c, EnumerationBound::new(1).unwrap());
    let oracle: Vec<Vec<i64>> = z_box(1).into_iter().flat_map(|x| (0..6).map(move |y| vec![x, y])).collect();
    assert_eq!(got.iter().map(|e| e.coords().to_vec()).collect::<Vec<_>>(), oracle);
    assert_eq!(got.len(), 18);
    assert_eq!(got[..3].iter().map(|e| e.coords().to_vec()).collect::<Vec<_>>(), [[0, 0], [0, 1], [0, 2]]);
}

#[test]
fn enumeration_of_z_and_z2() {
    let z = Carrier::new(vec![0]).unwrap();
    let got = enumerate_carrier(&z, EnumerationBound::new(2).unwrap());
    assert_eq!(firsts(&got), [0, 1, -1, 2, -2]);
    let z2 = Carrier::new(vec![2]).unwrap();
    assert_eq!(firsts(&enumerate_carrier(&z2, EnumerationBound::default())), [0, 1]);
}

#[test]
fn canonical_order_examples() {
    let z = Carrier::new(vec![0]).unwrap();
    let e = |x| z.element(&[x]).unwrap();
    assert_eq!(canonical_compare(&z, &e(2), &e(-2)).unwrap(), Ordering::Less);
    assert_eq!(canonical_compare(&z, &e(2), &e(6)).unwrap(), Ordering::Less);
    let zz6 = Carrier::new(vec![0, 6]).unwrap();
    let a = zz6.element(&[0, 3]).unwrap();
    let b = zz6.element(&[1, 0]).unwrap();
    assert_eq!(canonical_compare(&zz6, &a, &b).unwrap(), Ordering::Less);
    assert!(canonical_compare(&z, &e(1), &a).is_err());
}

#[test]
fn degree_arithmetic_examples() {
    let z2 = GradingGroup::cyclic(2);
    let one = z2.degree(&[1]).unwrap();
    assert_eq!(deg_combine(&z2, &one, &one).unwrap(), z2.identity());
    assert_eq!(deg_invert(&z2, &one).unwrap(), one);
    let z = GradingGroup::cyclic(0);
    let d = |x| z.degree(&[x]).unwrap();
    assert_eq!(deg_combine(&z, &d(0), &d(1)).unwrap(), d(1));
    assert_eq!(deg_invert(&z, &d(3)).unwrap(), d(-3));
    let g = GradingGroup::new(vec![2, 0]).unwrap();
    let x = g.degree(&[1, 2]).unwrap();
    let y = g.degree(&[1, -2]).unwrap();
    assert_eq!(deg_combine(&g, &x, &y).unwrap(), g.identity());
    assert_eq!(deg_invert(&g, &g.degree(&[1, -4]).unwrap()).unwrap(), g.degree(&[1, 4]).unwrap());
    assert!(deg_combine(&z, &d(1), &x).is_err());
}

// Graded rings and modules.

#[test]
fn group_algebra_z2_z2_is_graded() {
    let g = GradingGroup::cyclic(2);
    let r = GradedRing::group_algebra(2, &g).unwrap();
    // Oracle: (a + b t)(c + d t) = (ac + bd) + (ad + bc) t over Z_2, with
    // R_0 = {0, 1} and R_1 = {0, t}; check every homogeneous product.
    let deg = |(a, b): (i64, i64)| match (a, b) {
        (0, 0) => None,
        (_, 0) => Some(0),
        (0, _) => Some(1),
        _ => unreachable!(),
    };
    let hom = [(0, 0), (1, 0), (0, 1)];
    for &x in &hom {
        for &y in &hom {
            let p = ((x.0 * y.0 + x.1 * y.1) % 2, (x.0 * y.1 + x.1 * y.0) % 2);
            if let (Some(gx), Some(gy), Some(gp)) = (deg(x), deg(y), deg(p)) {
                assert_eq!((gx + gy) % 2, gp);
            }
            let lib = r.mul(&r.element(&[x.0, x.1]).unwrap(), &r.element(&[y.0, y.1]).unwrap());
            assert_eq!(lib.coords(), [p.0, p.1]);
        }
    }
    assert_eq!(validate_graded_ring(&r).verdict, Verdict::Holds);
}

#[test]
fn z12_with_two_overlapping_components_is_rejected() {
    let g = GradingGroup::cyclic(2);
    let base = GradedRing::modular(12, &g).unwrap();
    let e = |x| base.element(&[x]).unwrap();
    let r = base.clone().with_grading(vec![(g.identity(), vec![e(2)]), (g.degree(&[1]).unwrap(), vec![e(6)])]).unwrap();
    // Oracle: no r0 in 2Z_12 and r1 in {0, 6} sum to 1.
    assert!(!(0..12).step_by(2).any(|r0| [0, 6].iter().any(|r1| (r0 + r1) % 12 == 1)));
    assert_eq!(validate_graded_ring(&r).verdict, Verdict::Fails);
}

#[test]
fn trivially_graded_z12_is_valid() {
    assert_eq!(validate_graded_ring(&zn(12)).verdict, Verdict::Holds);
}

#[test]
fn module_validation_examples() {
    let (_, m1) = ex1();
    let out = validate_graded_module(&m1);
    assert_eq!(out.verdict, Verdict::BoundedHolds);
    assert_eq!(out.bound, Some(EnumerationBound::new(10).unwrap()));
    let (_, m2) = ex2();
    assert!(validate_graded_module(&m2).verdict.passed());
    let (_, m3) = zn_self(12);
    assert_eq!(validate_graded_module(&m3).verdict, Verdict::Holds);
}

#[test]
fn homogeneous_components_examples() {
    let g = GradingGroup::cyclic(2);
    let r = Arc::new(GradedRing::group_algebra(2, &g).unwrap());
    let m = GradedModule::ring_as_module(r.clone());
    let parts = homogeneous_components(&m.element(&[1, 1]).unwrap(), &m).unwrap();
    let want = [(g.identity(), m.element(&[1, 0]).unwrap()), (g.degree(&[1]).unwrap(), m.element(&[0, 1]).unwrap())];
    assert_eq!(parts.into_iter().collect::<Vec<_>>(), want);
    assert!(homogeneous_components(&m.zero(), &m).unwrap().is_empty());

    let (_, m1) = ex1();
    let z = GradingGroup::cyclic(0);
    let parts = homogeneous_components(&mel(&m1, &[5, 4]), &m1).unwrap();
    let want = [(z.degree(&[0]).unwrap(), mel(&m1, &[5, 0])), (z.degree(&[1]).unwrap(), mel(&m1, &[0, 4]))];
    assert_eq!(parts.into_iter().collect::<Vec<_>>(), want);
}

#[test]
fn ideal_generated_by_one_plus_t_is_not_graded() {
    let g = GradingGroup::cyclic(2);
    let r = Arc::new(GradedRing::group_algebra(2, &g).unwrap());
    let m = GradedModule::ring_as_module(r);
    let c = [m.element(&[0, 0]).unwrap(), m.element(&[1, 1]).unwrap()];
    let out = is_graded_submodule(&c, &m).unwrap();
    assert_eq!(out.verdict, Verdict::Fails);
    match out.counterexample.unwrap() {
        Counterexample::Component { element, .. } => assert_eq!(element, c[1]),
        other => panic!("unexpected counterexample {other:?}"),
    }
}

#[test]
fn generated_submodules() {
    let (r, m) = zn_self(12);
    let four = generate_submodule(&[el(&r, 4)], &m).unwrap();
    let oracle: Vec<i64> = (0..12).filter(|x| x % 4 == 0).collect();
    assert_eq!(firsts(&four.elements()), oracle);
    assert!(generate_submodule(&[], &m).unwrap().is_zero());

    let (_, m1) = ex1();
    let d = generate_submodule(&[mel(&m1, &[0, 1])], &m1).unwrap();
    for x in enumerate_carrier(m1.carrier(), m1.bound()) {
        assert_eq!(d.contains(&x), x.coords()[0] == 0, "{x}");
    }
    assert!(generate_submodule(&[mel(&m1, &[1, 1])], &m1).is_err());
}

#[test]
fn intersections_in_z12() {
    let (r, m) = zn_self(12);
    let span = |x| generate_submodule(&[el(&r, x)], &m).unwrap();
    let set = |d: i64| (0..12).filter(|x| x % d == 0).collect::<BTreeSet<i64>>();
    for (a, b) in [(4, 6), (2, 3), (4, 4)] {
        let got = intersect(&span(a), &span(b)).unwrap();
        let oracle: Vec<i64> = set(a).intersection(&set(b)).copied().collect();
        assert_eq!(firsts(&got.elements()), oracle);
        assert!(is_graded_submodule(&got.elements(), &m).unwrap().verdict.passed());
    }
    let other = zn_self(6).1;
    assert!(intersect(&span(4), &GradedSubmodule::zero(&other)).is_err());
}

#[test]
fn ring_colons() {
    let (z, m1) = ex1();
    let col = colon_ring(&GradedSubmodule::zero(&m1));
    assert!(col.is_zero());

    let (_, m2) = ex2();
    let col = colon_ring(&GradedSubmodule::zero(&m2));
    // Oracle: r kills Z_6 iff 6 | r.
    let oracle: Vec<i64> = z_box(10).into_iter().filter(|r| r % 6 == 0).collect();
    assert_eq!(firsts(&col.elements()), oracle);
    assert_eq!(oracle, [0, 6, -6]);
    assert!(col.is_bounded());
    assert!(colon_ring(&GradedSubmodule::full(&m2)).is_full());
    assert!(colon_ring(&GradedSubmodule::full(&m1)).elements().contains(&el(&z, 7)));
}

#[test]
fn module_colons() {
    let (z, m2) = ex2();
    let zero = GradedSubmodule::zero(&m2);
    let two = colon_module(&zero, Divisor::Scalar(&el(&z, 2))).unwrap();
    let oracle: Vec<i64> = (0..6).filter(|y| (2 * y) % 6 == 0).collect();
    assert_eq!(firsts(&two.elements()), oracle);
    assert!(colon_module(&zero, Divisor::Scalar(&el(&z, 6))).unwrap().is_full());
    assert_eq!(colon_module(&zero, Divisor::Scalar(&el(&z, 1))).unwrap(), zero);
}

#[test]
fn ideal_components() {
    let g = GradingGroup::cyclic(2);
    let (r, m) = zn_self(12);
    let i = generate_submodule(&[el(&r, 4)], &m).unwrap();
    assert_eq!(ideal_component(&i, &g.identity()), *i.subgroup());
    assert!(ideal_component(&i, &g.degree(&[1]).unwrap()).is_zero());

    let ga = Arc::new(GradedRing::group_algebra(2, &g).unwrap());
    let gm = Arc::new(GradedModule::ring_as_module(ga));
    let t = gm.element(&[0, 1]).unwrap();
    let it = generate_submodule(std::slice::from_ref(&t), &gm).unwrap();
    // Oracle: (0, t) and t * t = 1 generate everything, so I_1 = R_1 = {0, t}.
    let comp = ideal_component(&it, &g.degree(&[1]).unwrap());
    assert_eq!(comp.elements(EnumerationBound::default()), [gm.zero(), t]);
}

#[test]
fn projection_kernel_and_preimage() {
    let (z, m1) = ex1();
    let g = GradingGroup::cyclic(0);
    let target = Arc::new(GradedModule::cyclic_product(z, vec![6], &[g.degree(&[1]).unwrap()]).unwrap());
    let f = GradedHomomorphism::new(m1.clone(), target.clone(), vec![mel(&target, &[0]), mel(&target, &[1])]).unwrap();
    assert!(validate_graded_hom(&f).verdict.passed());
    let k = kernel(&f);
    let pre = hom_preimage(&f, &GradedSubmodule::zero(&target)).unwrap();
    assert_eq!(k, pre);
    for x in enumerate_carrier(m1.carrier(), m1.bound()) {
        assert_eq!(k.contains(&x), x.coords()[1] == 0, "{x}");
    }
    // The preimage of zero has colon 6Z, disjoint from the units.
    let col = colon_ring(&pre);
    assert_eq!(firsts(&col.elements()), z_box(10).into_iter().filter(|r| r % 6 == 0).collect::<Vec<_>>());
    let u = units(m1.ring_arc());
    assert_eq!(is_graded_a_2_absorbing(&pre, &u).verdict, Verdict::BoundedHolds);
    let id = GradedHomomorphism::identity(&m1);
    let c = generate_submodule(&[mel(&m1, &[0, 2])], &m1).unwrap();
    assert_eq!(hom_image(&id, &c).unwrap(), c);
    assert_eq!(hom_preimage(&id, &c).unwrap(), c);
}

// Multiplicative sets and saturation.

#[test]
fn closures() {
    let r = zn(12);
    assert_eq!(firsts(mult_closure(&[], &r).unwrap().elements()), [1]);
    // Oracle: iterate products to a fixpoint.
    let mut s: BTreeSet<i64> = [1, 4].into();
    loop {
        let next: BTreeSet<i64> = s.iter().flat_map(|x| s.iter().map(move |y| x * y % 12)).chain(s.clone()).collect();
        if next == s {
            break;
        }
        s = next;
    }
    assert_eq!(firsts(mult_closure(&[el(&r, 4)], &r).unwrap().elements()), s.into_iter().collect::<Vec<_>>());

    let (z, _) = ex1();
    let six = mult_closure(&[el(&z, 6)], &z).unwrap();
    assert_eq!(firsts(six.elements()), [1, 6]);
    assert!(six.is_bounded());
}

#[test]
fn saturations_in_z12() {
    let r = zn(12);
    let star = |a: &[i64]| -> Vec<i64> {
        (0..12)
            .filter(|&x| (0..12).any(|t| a.iter().any(|&u| a.iter().any(|&b| (b * x * t - b * u) % 12 == 0))))
            .collect()
    };
    let trivial = mult_closure(&[], &r).unwrap();
    assert_eq!(firsts(saturate(&trivial).elements()), star(&[1]));
    assert_eq!(star(&[1]), [1, 5, 7, 11]);

    let four = mult_closure(&[el(&r, 4)], &r).unwrap();
    let s = saturate(&four);
    assert_eq!(firsts(s.elements()), star(&[1, 4]));
    assert_eq!(star(&[1, 4]), [1, 2, 4, 5, 7, 8, 10, 11]);
    assert_eq!(saturate(&s), s);
}

// Predicates.

#[test]
fn prime_examples() {
    let (z, m2) = ex2();
    let zero = GradedSubmodule::zero(&m2);
    let out = is_graded_prime(&zero);
    assert_eq!(out.verdict, Verdict::Fails);
    let expected = Counterexample::Pair { r: el(&z, 2), m: mel(&m2, &[3]) };
    assert!(reproduces_violation(&zero, None, &expected));
    assert!(reproduces_violation(&zero, None, out.counterexample.as_ref().unwrap()));
    assert_eq!(out.counterexample, Some(expected));

    assert_eq!(is_graded_prime(&GradedSubmodule::full(&m2)).verdict, Verdict::NotApplicable);
    let even = generate_submodule(&[mel(&m2, &[2])], &m2).unwrap();
    // Oracle: r m in 2Z_6 forces m in 2Z_6 or r even, and even r kill Z_6/2Z_6.
    let even_set: BTreeSet<i64> = [0, 2, 4].into();
    let prime = z_box(10).into_iter().all(|r| {
        (0..6).all(|m| {
            !even_set.contains(&modp(r * m, 6))
                || even_set.contains(&m)
                || (0..6).all(|y| even_set.contains(&modp(r * y, 6)))
        })
    });
    assert!(prime);
    assert!(is_graded_prime(&even).verdict.passed());
}

#[test]
fn two_absorbing_first_counterexample_over_z_times_z6() {
    let (_, m1) = ex1();
    let zero = GradedSubmodule::zero(&m1);
    // Oracle: scan homogeneous (r, s, m) in canonical order. The colon is
    // {0} because r (1, 0) = 0 forces r = 0.
    let hm: Vec<(i64, i64)> =
        z_box(10).into_iter().flat_map(|x| (0..6).map(move |y| (x, y))).filter(|&(x, y)| x == 0 || y == 0).collect();
    let kills = |r: i64, (x, y): (i64, i64)| r * x == 0 && modp(r * y, 6) == 0;
    let mut oracle = None;
    'scan: for r in z_box(10) {
        for s in z_box(10) {
            for &m in &hm {
                if kills(r * s, m) && r * s != 0 && !kills(r, m) && !kills(s, m) {
                    oracle = Some((r, s, m));
                    break 'scan;
                }
            }
        }
    }
    assert_eq!(oracle, Some((2, 3, (0, 1))));
    let out = is_graded_2_absorbing(&zero);
    assert_eq!(out.verdict, Verdict::Fails);
    let cx = out.counterexample.unwrap();
    let z = m1.ring();
    assert_eq!(cx, Counterexample::Triple { r: el(z, 2), s: el(z, 3), m: mel(&m1, &[0, 1]) });
    assert!(reproduces_violation(&zero, None, &cx));
}

#[test]
fn two_absorbing_examples() {
    let (_, m2) = ex2();
    assert!(is_graded_2_absorbing(&GradedSubmodule::zero(&m2)).verdict.passed());

    let (r, m) = zn_self(12);
    let zero: BTreeSet<i64> = [0].into();
    assert_eq!(first_2abs_violation(&zero, 12), Some((2, 2, 3)));
    let out = is_graded_2_absorbing(&GradedSubmodule::zero(&m));
    assert_eq!(out.counterexample, Some(Counterexample::Triple { r: el(&r, 2), s: el(&r, 2), m: el(&r, 3) }));
}

#[test]
fn a_two_absorbing_over_z_times_z6() {
    let (z, m1) = ex1();
    let zero = GradedSubmodule::zero(&m1);
    let a = nonzero_integers(&z).unwrap();
    // Oracle: the first a in canonical order whose condition holds on the box.
    let hm: Vec<(i64, i64)> =
        z_box(10).into_iter().flat_map(|x| (0..6).map(move |y| (x, y))).filter(|&(x, y)| x == 0 || y == 0).collect();
    let kills = |r: i64, (x, y): (i64, i64)| r * x == 0 && modp(r * y, 6) == 0;
    let works = |a: i64| {
        z_box(10).into_iter().all(|r| {
            z_box(10)
                .into_iter()
                .all(|s| hm.iter().all(|&m| !kills(r * s, m) || a * r * s == 0 || kills(a * r, m) || kills(a * s, m)))
        })
    };
    let first = z_box(10).into_iter().filter(|&a| a != 0).find(|&a| works(a));
    assert_eq!(first, Some(2));
    assert!(works(6));
    assert!(!works(1));

    let out = is_graded_a_2_absorbing(&zero, &a);
    assert_eq!(out.verdict, Verdict::BoundedHolds);
    assert_eq!(out.witness, Some(el(&z, 2)));
    assert_eq!(is_witness(&el(&z, 6), &zero, &a).unwrap().verdict, Verdict::BoundedHolds);
    let one = is_witness(&el(&z, 1), &zero, &a).unwrap();
    assert_eq!(one.verdict, Verdict::Fails);
    assert_eq!(one.counterexample, Some(Counterexample::Triple { r: el(&z, 2), s: el(&z, 3), m: mel(&m1, &[0, 1]) }));
    assert!(is_witness(&el(&z, 0), &zero, &a).is_err());
}

#[test]
fn a_relative_examples_over_z6() {
    let (z, m2) = ex2();
    let zero = GradedSubmodule::zero(&m2);
    let u = units(&z);
    assert_eq!(firsts(u.elements()), [1, -1]);
    assert_eq!(is_graded_a_prime(&zero, &u).verdict, Verdict::Fails);
    let out = is_graded_a_2_absorbing(&zero, &u);
    assert!(out.verdict.passed());
    assert_eq!(out.witness, Some(el(&z, 1)));
    assert!(is_witness(&el(&z, 1), &zero, &u).unwrap().verdict.passed());

    let trivial = mult_closure(&[], &z).unwrap();
    let even = generate_submodule(&[mel(&m2, &[2])], &m2).unwrap();
    let ap = is_graded_a_prime(&even, &trivial);
    assert!(ap.verdict.passed());
    assert_eq!(ap.witness, Some(el(&z, 1)));
    assert_eq!(is_graded_a_prime(&GradedSubmodule::full(&m2), &u).verdict, Verdict::NotApplicable);
    assert_eq!(is_graded_a_2_absorbing(&GradedSubmodule::full(&m2), &u).verdict, Verdict::NotApplicable);
}

#[test]
fn a_two_absorbing_zero_ideal_of_z12() {
    let (r, m) = zn_self(12);
    let zero = GradedSubmodule::zero(&m);
    let a = mult_closure(&[el(&r, 4)], &r).unwrap();
    let oracle = first_a2abs_witness(&[0].into(), &[1, 4], 12);
    assert_eq!(oracle, Some(4));
    let out = is_graded_a_2_absorbing(&zero, &a);
    assert_eq!(out.verdict, Verdict::Holds);
    assert_eq!(out.witness, Some(el(&r, 4)));
    assert!(is_witness(&el(&r, 1), &zero, &a).unwrap().verdict == Verdict::Fails);
}

#[test]
fn component_condition_zero_ideal_of_z12() {
    let (r, m) = zn_self(12);
    let zero = GradedSubmodule::zero(&m);
    let a = mult_closure(&[el(&r, 4)], &r).unwrap();
    // Oracle: quantify over the ideals dZ_12 directly. The grading is
    // trivial, so only the identity components can be nonzero.
    let ideals = ideals_zn(12);
    let prod = |x: &BTreeSet<i64>, y: &BTreeSet<i64>| -> BTreeSet<i64> {
        x.iter().flat_map(|a| y.iter().map(move |b| a * b % 12)).collect()
    };
    let scaled = |a: i64, x: &BTreeSet<i64>| -> BTreeSet<i64> { x.iter().map(|v| a * v % 12).collect() };
    let zero_set: BTreeSet<i64> = [0].into();
    let inside = |x: &BTreeSet<i64>| x.is_subset(&zero_set);
    let works = |a: i64| {
        ideals.iter().all(|i| {
            ideals.iter().all(|j| {
                ideals.iter().all(|k| {
                    !inside(&prod(&prod(i, j), k))
                        || inside(&scaled(a, &prod(i, k)))
                        || inside(&scaled(a, &prod(j, k)))
                        || inside(&scaled(a, &prod(i, j)))
                })
            })
        })
    };
    assert_eq!(ideals.len(), 6);
    assert!(!works(1));
    assert!(works(4));
    let out = check_component_ideal_condition(&zero, &a);
    assert_eq!(out.verdict, Verdict::Holds);
    assert_eq!(out.witness, Some(el(&r, 4)));

    let (z, m2) = ex2();
    assert!(check_component_ideal_condition(&GradedSubmodule::zero(&m2), &units(&z)).verdict.passed());
    assert_eq!(check_component_ideal_condition(&GradedSubmodule::full(&m), &a).verdict, Verdict::NotApplicable);
}

#[test]
fn colon_characterization_examples() {
    let (r, m) = zn_self(12);
    let zero = GradedSubmodule::zero(&m);
    let colon_of = |x: i64| -> BTreeSet<i64> { (0..12).filter(|m| (x * m) % 12 == 0).collect() };
    let all: BTreeSet<i64> = (0..12).collect();
    // Oracle with a = 1: the first (r, s) where all three equalities fail.
    let first = (0..12)
        .flat_map(|r| (0..12).map(move |s| (r, s)))
        .find(|&(r, s)| colon_of(r * s) != colon_of(r) && colon_of(r * s) != colon_of(s) && colon_of(r * s) != all);
    assert_eq!(first, Some((2, 2)));
    assert_eq!(colon_of(4), [0, 3, 6, 9].into());
    assert_eq!(colon_of(2), [0, 6].into());

    let trivial = mult_closure(&[], &r).unwrap();
    let out = colon_characterization(&zero, &trivial);
    assert_eq!(out.verdict, Verdict::Fails);
    assert_eq!(out.counterexample, Some(Counterexample::Scalars { r: el(&r, 2), s: el(&r, 2) }));

    let four = mult_closure(&[el(&r, 4)], &r).unwrap();
    assert_eq!(colon_characterization(&zero, &four).verdict, Verdict::Holds);

    let (z, m2) = ex2();
    let out = colon_characterization(&GradedSubmodule::zero(&m2), &mult_closure(&[], &z).unwrap());
    assert!(out.verdict.passed());
    assert_eq!(out.witness, Some(el(&z, 1)));
}

#[test]
fn stabilization_examples() {
    let (r, m) = zn_self(12);
    let zero = GradedSubmodule::zero(&m);
    let four = mult_closure(&[el(&r, 4)], &r).unwrap();
    // Oracle: 4^n = 4 mod 12 for every n >= 1.
    assert!((1..=8).all(|n| 4i64.pow(n) % 12 == 4));
    assert_eq!(stabilization_check(&zero, &four, DEFAULT_N_MAX).unwrap().verdict, Verdict::Holds);
    assert_eq!(stabilization_check_with(&zero, &el(&r, 1), DEFAULT_N_MAX).verdict, Verdict::Holds);
    let trivial = mult_closure(&[], &r).unwrap();
    assert!(stabilization_check(&zero, &trivial, DEFAULT_N_MAX).is_err());

    let (z, m1) = ex1();
    let zero1 = GradedSubmodule::zero(&m1);
    let out = stabilization_check_with(&zero1, &el(&z, 6), DEFAULT_N_MAX);
    assert_eq!(out.verdict, Verdict::BoundedHolds);
    let six_cubed = colon_module(&zero1, Divisor::Scalar(&el(&z, 216))).unwrap();
    for x in enumerate_carrier(m1.carrier(), m1.bound()) {
        assert_eq!(six_cubed.contains(&x), x.coords()[0] == 0, "{x}");
    }
}

#[test]
fn colon_quotient_examples() {
    let (r, m) = zn_self(12);
    let zero = GradedSubmodule::zero(&m);
    let four = mult_closure(&[el(&r, 4)], &r).unwrap();
    let three: BTreeSet<i64> = [0, 3, 6, 9].into();
    assert_eq!(first_2abs_violation(&three, 12), None);
    let q = colon_module(&zero, Divisor::Scalar(&el(&r, 4))).unwrap();
    assert_eq!(firsts(&q.elements()), three.iter().copied().collect::<Vec<_>>());
    let out = colon_quotient_2abs(&zero, &four);
    assert_eq!(out.verdict, Verdict::Holds);
    assert_eq!(out.witness, Some(el(&r, 4)));
    assert_eq!(colon_quotient_2abs(&GradedSubmodule::full(&m), &four).verdict, Verdict::NotApplicable);

    let (z, m2) = ex2();
    let out = colon_quotient_2abs(&GradedSubmodule::zero(&m2), &units(&z));
    assert!(out.verdict.passed());
    assert_eq!(out.witness, Some(el(&z, 1)));
}

// Localization.

#[test]
fn localizing_z12_at_four_gives_three_classes() {
    let r = zn(12);
    let a = mult_closure(&[el(&r, 4)], &r).unwrap();
    let oracle = fraction_classes(12, &[1, 4]);
    assert_eq!(oracle.len(), 3);
    let l = localize_ring(&r, &a).unwrap();
    assert_eq!(l.num_classes(), oracle.len());
    assert_eq!(l.class_id(&el(&r, 3), &el(&r, 1)).unwrap(), l.class_id(&el(&r, 0), &el(&r, 1)).unwrap());
    assert!(l.check_well_defined().verdict.passed());
    assert!(validate_graded_ring(l.ring()).verdict.passed());
    // Every class representative is the first member in canonical order.
    for (cl, lib) in oracle.iter().zip(l.classes()) {
        assert_eq!((lib.numerator.coords()[0], lib.denominator.coords()[0]), cl[0]);
    }
}

#[test]
fn localizing_at_one_changes_nothing() {
    let r = zn(12);
    let l = localize_ring(&r, &mult_closure(&[], &r).unwrap()).unwrap();
    assert_eq!(l.num_classes(), 12);
    for x in r.elements() {
        for y in r.elements() {
            let p = l.ring().mul(&l.fraction(&x, r.one()).unwrap(), &l.fraction(&y, r.one()).unwrap());
            assert_eq!(p, l.fraction(&r.mul(&x, &y), r.one()).unwrap());
        }
    }
}

#[test]
fn localizing_z6_at_four() {
    let (r, m) = zn_self(6);
    let a = mult_closure(&[el(&r, 4)], &r).unwrap();
    let lm = localize_module(&m, &a).unwrap();
    assert_eq!(lm.num_classes(), fraction_classes(6, &[1, 4]).len());
    assert_eq!(lm.num_classes(), 3);
    assert_eq!(lm.fraction(&el(&r, 3), r.one()).unwrap(), lm.fraction(&el(&r, 0), r.one()).unwrap());
    assert!(lm.check_well_defined().verdict.passed());
    assert!(validate_graded_module(lm.module()).verdict.passed());
}

#[test]
fn localized_group_algebra_keeps_its_grading() {
    let g = GradingGroup::cyclic(2);
    let r = Arc::new(GradedRing::group_algebra(2, &g).unwrap());
    let m = Arc::new(GradedModule::ring_as_module(r.clone()));
    let lm = localize_module(&m, &mult_closure(&[], &r).unwrap()).unwrap();
    assert_eq!(lm.num_classes(), 4);
    let t = lm.fraction(&r.element(&[0, 1]).unwrap(), r.one()).unwrap();
    let one = lm.fraction(r.one(), r.one()).unwrap();
    assert_eq!(lm.module().grading().degree_of(&t), Some(g.degree(&[1]).unwrap()));
    assert_eq!(lm.module().grading().degree_of(&one), Some(g.identity()));
    assert!(validate_graded_module(lm.module()).verdict.passed());
}

#[test]
fn localized_zero_submodule_absorbs_torsion() {
    let (r, m) = zn_self(12);
    let a = mult_closure(&[el(&r, 4)], &r).unwrap();
    let lm = localize_module(&m, &a).unwrap();
    let lc = localize_submodule(&GradedSubmodule::zero(&m), &lm).unwrap();
    // Oracle: x/1 is zero iff b x = 0 for some b in A.
    for x in 0..12 {
        let killed = [1, 4].iter().any(|b| b * x % 12 == 0);
        assert_eq!(lc.contains(&lm.fraction(&el(&r, x), r.one()).unwrap()), killed, "{x}");
    }
    assert!(lc.is_zero());
    assert!(localize_submodule(&GradedSubmodule::full(&m), &lm).unwrap().is_full());
}

#[test]
fn saturation_matches_units_of_fractions() {
    for n in [4, 6, 8, 9, 12] {
        let r = zn(n);
        for gens in [vec![], vec![2], vec![3], vec![4], vec![5]] {
            let gens: Vec<Element> = gens.into_iter().map(|x| el(&r, x)).collect();
            let a = mult_closure(&gens, &r).unwrap();
            let star = saturate(&a);
            let l = localize_ring(&r, &a).unwrap();
            for x in r.elements() {
                assert_eq!(star.contains(&x), l.is_unit_fraction(&x).unwrap(), "Z_{n} {a} {x}");
            }
        }
    }
}

#[test]
fn infinite_carriers_are_not_localized() {
    let (z, m1) = ex1();
    let a = mult_closure(&[], &z).unwrap();
    assert!(localize_ring(&z, &a).is_err());
    assert!(localize_module(&m1, &a).is_err());
}
