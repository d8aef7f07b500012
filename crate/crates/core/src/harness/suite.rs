//! The theorem suite: every property is a proven implication or
//! equivalence, so a counterexample means an implementation bug.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::corpus::{Corpus, Instance};
use crate::absorbing::{
    check_component_ideal_condition, check_ideal_condition, colon_characterization, colon_quotient_2abs,
    is_graded_2_absorbing, is_graded_a_2_absorbing, is_graded_a_prime, is_graded_prime, saturate,
    stabilization_check_with, MultSet, DEFAULT_N_MAX,
};
use crate::error::{Error, Result};
use crate::localization::{localize_module, localize_ring, localize_submodule};
use crate::structures::{
    colon_ring, hom_image, hom_preimage, intersect, kernel, validate_graded_module, validate_graded_ring, CheckOutcome,
    GradedModule, GradedSubmodule, Verdict,
};

/// The checked properties, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P12,
    Hierarchy,
    TrivialA,
    Localization,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::P1,
        Property::P2,
        Property::P3,
        Property::P4,
        Property::P5,
        Property::P6,
        Property::P7,
        Property::P8,
        Property::P9,
        Property::P10,
        Property::P11,
        Property::P12,
        Property::Hierarchy,
        Property::TrivialA,
        Property::Localization,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Property::P1 => "P1",
            Property::P2 => "P2",
            Property::P3 => "P3",
            Property::P4 => "P4",
            Property::P5 => "P5",
            Property::P6 => "P6",
            Property::P7 => "P7",
            Property::P8 => "P8",
            Property::P9 => "P9",
            Property::P10 => "P10",
            Property::P11 => "P11",
            Property::P12 => "P12",
            Property::Hierarchy => "hierarchy",
            Property::TrivialA => "trivial_a",
            Property::Localization => "localization",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Property::P1 => "A-2-absorbing persists to larger multiplicative sets",
            Property::P2 => "A and its saturation give the same verdict",
            Property::P3 => "A^-1 C is 2-absorbing in A^-1 M",
            Property::P4 => "component-ideal condition agrees with the element search",
            Property::P5 => "ideal form of the component condition agrees",
            Property::P6 => "(C :_R M) is an A-2-absorbing ideal",
            Property::P7 => "colon characterization agrees",
            Property::P8 => "witness colons stabilize",
            Property::P9 => "colon-quotient test agrees",
            Property::P10 => "preimages under graded maps stay A-2-absorbing",
            Property::P11 => "images under epimorphisms stay A-2-absorbing",
            Property::P12 => "intersection of two A-prime submodules is A-2-absorbing",
            Property::Hierarchy => "prime => 2-absorbing => A-2-absorbing and prime => A-prime => A-2-absorbing",
            Property::TrivialA => "with A = {1} the A-relative verdict is the plain one",
            Property::Localization => "localizations validate and A* is the set of a with a/1 a unit",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.key())
    }
}

/// Counts for one property; the last four sum to `instances_tested`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyCounts {
    pub instances_tested: usize,
    pub holds: usize,
    pub bounded: usize,
    pub not_applicable: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCounterexample {
    pub property: Property,
    pub instance: usize,
    pub description: String,
    pub detail: String,
}

/// Instances that are reported but not counted against a property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoggedInstance {
    pub property: Property,
    pub instance: usize,
    pub description: String,
    pub note: String,
}

/// Per-property counts in report order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyTable(pub Vec<(Property, PropertyCounts)>);

impl PropertyTable {
    pub fn get(&self, p: Property) -> PropertyCounts {
        self.0.iter().find(|(q, _)| *q == p).map(|(_, c)| *c).unwrap_or_default()
    }
}

impl Serialize for PropertyTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (p, c) in &self.0 {
            m.serialize_entry(p.key(), c)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub corpus_fingerprint: String,
    pub instances: usize,
    pub skipped: usize,
    pub evaluations: usize,
    pub property_counts: PropertyTable,
    pub counterexamples: Vec<SuiteCounterexample>,
    pub logged: Vec<LoggedInstance>,
    /// The only field that may differ between runs.
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn total_counterexamples(&self) -> usize {
        self.counterexamples.len()
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// JSON without the timing field, for comparing runs.
    pub fn to_json_without_timing(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("report is an object").remove("wall_time_ms");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("corpus fingerprint {}\n", self.corpus_fingerprint));
        out.push_str(&format!(
            "{} instances, {} skipped, {} evaluations, {} ms\n\n",
            self.instances, self.skipped, self.evaluations, self.wall_time_ms
        ));
        out.push_str(&format!(
            "{:<13}{:>7}{:>7}{:>9}{:>6}{:>9}  description\n",
            "property", "tested", "holds", "bounded", "n/a", "failed"
        ));
        for (p, c) in &self.property_counts.0 {
            out.push_str(&format!(
                "{:<13}{:>7}{:>7}{:>9}{:>6}{:>9}  {}\n",
                p.key(),
                c.instances_tested,
                c.holds,
                c.bounded,
                c.not_applicable,
                c.counterexamples,
                p.description()
            ));
        }
        if !self.logged.is_empty() {
            out.push_str(&format!("\n{} logged instances:\n", self.logged.len()));
            for l in &self.logged {
                out.push_str(&format!("  {} #{} {}: {}\n", l.property, l.instance, l.description, l.note));
            }
        }
        if self.counterexamples.is_empty() {
            out.push_str("\nno counterexamples\n");
        } else {
            out.push_str(&format!("\n{} counterexamples:\n", self.counterexamples.len()));
            for c in &self.counterexamples {
                out.push_str(&format!("  {} #{} {}: {}\n", c.property, c.instance, c.description, c.detail));
            }
        }
        out
    }
}

/// Result of one evaluation of one property.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Eval {
    Holds,
    Bounded,
    NotApplicable,
    Counterexample(String),
}

fn bounded(outcomes: &[&CheckOutcome]) -> bool {
    outcomes.iter().any(|o| o.bound.is_some())
}

fn pass(outcomes: &[&CheckOutcome]) -> Eval {
    if bounded(outcomes) {
        Eval::Bounded
    } else {
        Eval::Holds
    }
}

/// `premise => conclusion passes`.
fn implication(premise: bool, conclusion: &CheckOutcome, context: &[&CheckOutcome], what: &str) -> Eval {
    if !premise {
        return Eval::NotApplicable;
    }
    if conclusion.verdict.passed() {
        let mut all = context.to_vec();
        all.push(conclusion);
        pass(&all)
    } else {
        Eval::Counterexample(format!("{what}: {conclusion}"))
    }
}

/// Two routes to the same verdict.
fn agreement(main: &CheckOutcome, other: &CheckOutcome, what: &str) -> Eval {
    let (a, b) = (main.verdict.class(), other.verdict.class());
    if a == Verdict::NotApplicable && b == Verdict::NotApplicable {
        Eval::NotApplicable
    } else if a == b {
        pass(&[main, other])
    } else {
        Eval::Counterexample(format!("direct search gives {main}; {what} gives {other}"))
    }
}

fn is_ring_module(m: &GradedModule) -> bool {
    m.carrier() == m.ring().carrier() && m.action_table() == m.ring().table() && m.grading() == m.ring().grading()
}

struct InstanceResult {
    evals: Vec<(Property, Eval)>,
    logged: Vec<(Property, String)>,
}

/// Evaluate every property on one instance.
fn evaluate(corpus: &Corpus, inst: &Instance) -> InstanceResult {
    let mut evals: Vec<(Property, Eval)> = Vec::new();
    let mut logged = Vec::new();
    let cm = corpus.module_of(inst);
    let c = corpus.submodule_of(inst);
    let a = corpus.multset_of(inst);
    let module = &cm.module;

    if a.has_zero() {
        for p in Property::ALL {
            evals.push((p, Eval::NotApplicable));
        }
        return InstanceResult { evals, logged };
    }

    let main = is_graded_a_2_absorbing(c, a);
    let holds = main.verdict.passed();

    // P1: A subset A2 with (C : M) disjoint from A2
    let mut any = false;
    for a2 in &cm.multsets {
        if a2.elements() == a.elements() || !a.is_subset_of(a2) {
            continue;
        }
        any = true;
        let out = is_graded_a_2_absorbing(c, a2);
        let premise = holds && out.verdict != Verdict::NotApplicable;
        evals.push((Property::P1, implication(premise, &out, &[&main], &format!("with A2 = {a2}"))));
    }
    if !any {
        evals.push((Property::P1, Eval::NotApplicable));
    }

    // P2
    let sat = saturate(a);
    evals.push((Property::P2, agreement(&main, &is_graded_a_2_absorbing(c, &sat), &format!("A* = {sat}"))));

    // P3
    evals.push((Property::P3, localization_transfer(c, a, holds, &mut logged)));

    // P4, P7, P9
    evals.push((Property::P4, agreement(&main, &check_component_ideal_condition(c, a), "component condition")));
    evals.push((Property::P7, agreement(&main, &colon_characterization(c, a), "colon characterization")));
    evals.push((Property::P9, agreement(&main, &colon_quotient_2abs(c, a), "colon quotient")));

    // P5
    let p5 = if is_ring_module(module) {
        match check_ideal_condition(c, a) {
            Ok(out) => agreement(&main, &out, "ideal condition"),
            Err(e) => Eval::Counterexample(format!("ideal condition errored: {e}")),
        }
    } else {
        Eval::NotApplicable
    };
    evals.push((Property::P5, p5));

    // P6
    let colon = colon_ring(c);
    let p6 = is_graded_a_2_absorbing(&colon, a);
    evals.push((Property::P6, implication(holds, &p6, &[&main], &format!("(C :_R M) = {colon}"))));

    // P8
    let p8 = match (&main.witness, holds) {
        (Some(w), true) => {
            let out = stabilization_check_with(c, w, DEFAULT_N_MAX);
            implication(true, &out, &[&main], &format!("witness {w}"))
        }
        _ => Eval::NotApplicable,
    };
    evals.push((Property::P8, p8));

    // P10: endomorphisms f, C' = C, preimage f^-1(C)
    let mut any = false;
    for f in &cm.homs {
        any = true;
        let eval = match hom_preimage(f, c) {
            Ok(pre) => {
                let out = is_graded_a_2_absorbing(&pre, a);
                let premise = holds && out.verdict != Verdict::NotApplicable;
                implication(
                    premise,
                    &out,
                    &[&main],
                    &format!(
                        "preimage {pre} under m -> {} m",
                        f.images().first().map(|x| x.to_string()).unwrap_or_default()
                    ),
                )
            }
            Err(e) => Eval::Counterexample(format!("preimage errored: {e}")),
        };
        evals.push((Property::P10, eval));
    }
    if !any {
        evals.push((Property::P10, Eval::NotApplicable));
    }

    // P11: epimorphisms with kernel inside C
    let mut any = false;
    for f in &cm.homs {
        any = true;
        let premise = holds && f.is_surjective() && kernel(f).is_subset_of(c);
        if !premise {
            evals.push((Property::P11, Eval::NotApplicable));
            continue;
        }
        let eval = match hom_image(f, c) {
            Ok(img) => implication(true, &is_graded_a_2_absorbing(&img, a), &[&main], &format!("image {img}")),
            Err(e) => Eval::Counterexample(format!("image errored: {e}")),
        };
        evals.push((Property::P11, eval));
    }
    if !any {
        evals.push((Property::P11, Eval::NotApplicable));
    }

    // P12
    let a_prime = is_graded_a_prime(c, a);
    let mut any = false;
    for (j, c2) in cm.submodules.iter().enumerate() {
        if j == inst.submodule {
            continue;
        }
        any = true;
        if !a_prime.verdict.passed() {
            evals.push((Property::P12, Eval::NotApplicable));
            continue;
        }
        let other = is_graded_a_prime(c2, a);
        if !other.verdict.passed() {
            evals.push((Property::P12, Eval::NotApplicable));
            continue;
        }
        let eval = match intersect(c, c2) {
            Ok(both) => implication(
                true,
                &is_graded_a_2_absorbing(&both, a),
                &[&a_prime, &other],
                &format!("C2 = {c2}, intersection {both}"),
            ),
            Err(e) => Eval::Counterexample(format!("intersection errored: {e}")),
        };
        evals.push((Property::P12, eval));
    }
    if !any {
        evals.push((Property::P12, Eval::NotApplicable));
    }

    // hierarchy
    let prime = is_graded_prime(c);
    let two = is_graded_2_absorbing(c);
    evals
        .push((Property::Hierarchy, implication(prime.verdict.passed(), &two, &[&prime], "prime but not 2-absorbing")));
    evals.push((
        Property::Hierarchy,
        implication(
            prime.verdict.passed() && a_prime.verdict != Verdict::NotApplicable,
            &a_prime,
            &[&prime],
            "prime but not A-prime",
        ),
    ));
    evals.push((
        Property::Hierarchy,
        implication(a_prime.verdict.passed(), &main, &[&a_prime], "A-prime but not A-2-absorbing"),
    ));
    evals.push((
        Property::Hierarchy,
        implication(
            two.verdict.passed() && main.verdict != Verdict::NotApplicable,
            &main,
            &[&two],
            "2-absorbing but not A-2-absorbing",
        ),
    ));

    // trivial A
    let trivial = a.len() == 1;
    let ta = if trivial { agreement(&two, &main, "A = {1}") } else { Eval::NotApplicable };
    evals.push((Property::TrivialA, ta));

    // localization soundness
    evals.push((Property::Localization, localization_soundness(module, a)));

    InstanceResult { evals, logged }
}

fn localization_transfer(c: &GradedSubmodule, a: &MultSet, holds: bool, logged: &mut Vec<(Property, String)>) -> Eval {
    if !holds || !c.module().is_finite() || !c.module().ring().is_finite() {
        return Eval::NotApplicable;
    }
    let local = match localize_module(c.module(), a) {
        Ok(l) => l,
        Err(e) => return Eval::Counterexample(format!("localization errored: {e}")),
    };
    let lc = match localize_submodule(c, &local) {
        Ok(x) => x,
        Err(e) => return Eval::Counterexample(format!("localized submodule errored: {e}")),
    };
    if lc.is_full() {
        logged.push((Property::P3, format!("A^-1 C = A^-1 M ({} classes)", local.num_classes())));
        return Eval::NotApplicable;
    }
    let out = is_graded_2_absorbing(&lc);
    implication(true, &out, &[], &format!("A^-1 C = {lc} in {} classes", local.num_classes()))
}

/// Localizations of finite structures validate and the saturation equals
/// the set of elements that become units.
fn localization_soundness(module: &std::sync::Arc<GradedModule>, a: &MultSet) -> Eval {
    let ring = module.ring_arc();
    if !ring.is_finite() || !module.is_finite() {
        return Eval::NotApplicable;
    }
    match localization_problem(module, a) {
        Ok(None) => Eval::Holds,
        Ok(Some(why)) => Eval::Counterexample(why),
        Err(e) => Eval::Counterexample(format!("localization errored: {e}")),
    }
}

fn localization_problem(module: &std::sync::Arc<GradedModule>, a: &MultSet) -> Result<Option<String>> {
    let ring = module.ring_arc();
    let lr = localize_ring(ring, a)?;
    let lm = localize_module(module, a)?;
    let checks = [
        ("ring well-definedness", lr.check_well_defined()),
        ("ring validation", validate_graded_ring(lr.ring())),
        ("module well-definedness", lm.check_well_defined()),
        ("module validation", validate_graded_module(lm.module())),
    ];
    for (what, out) in checks {
        if !out.verdict.passed() {
            return Ok(Some(format!("{what}: {out}")));
        }
    }
    let sat = saturate(a);
    for x in ring.homogeneous_elements() {
        let unit = lr.is_unit_fraction(x)?;
        if sat.contains(x) != unit {
            return Ok(Some(format!("{x} in A* is {}, {x}/1 unit is {unit}", sat.contains(x))));
        }
    }
    Ok(None)
}

/// Evaluate every instance on a pool of `jobs` threads and merge in
/// instance order.
pub fn run_theorem_suite(corpus: &Corpus, jobs: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let results: Vec<InstanceResult> =
        pool.install(|| corpus.instances.par_iter().map(|i| evaluate(corpus, i)).collect());

    let mut counts: Vec<(Property, PropertyCounts)> =
        Property::ALL.iter().map(|&p| (p, PropertyCounts::default())).collect();
    let mut counterexamples = Vec::new();
    let mut logged = Vec::new();
    let mut evaluations = 0;
    for (idx, (inst, r)) in corpus.instances.iter().zip(results).enumerate() {
        for (p, e) in r.evals {
            evaluations += 1;
            let slot = &mut counts.iter_mut().find(|(q, _)| *q == p).expect("listed property").1;
            slot.instances_tested += 1;
            match e {
                Eval::Holds => slot.holds += 1,
                Eval::Bounded => slot.bounded += 1,
                Eval::NotApplicable => slot.not_applicable += 1,
                Eval::Counterexample(detail) => {
                    slot.counterexamples += 1;
                    counterexamples.push(SuiteCounterexample {
                        property: p,
                        instance: idx,
                        description: corpus.describe(inst),
                        detail,
                    });
                }
            }
        }
        for (p, note) in r.logged {
            logged.push(LoggedInstance { property: p, instance: idx, description: corpus.describe(inst), note });
        }
    }
    Ok(SuiteReport {
        corpus_fingerprint: corpus.fingerprint.clone(),
        instances: corpus.instances.len(),
        skipped: corpus.skipped,
        evaluations,
        property_counts: PropertyTable(counts),
        counterexamples,
        logged,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
