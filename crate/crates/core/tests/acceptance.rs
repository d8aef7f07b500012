//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use graded_absorbing::absorbing::*;
use graded_absorbing::harness::*;
use graded_absorbing::localization::*;
use graded_absorbing::structures::*;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, serde_json::Value) {
    let out = cli_dispatch(std::iter::once("gradabs").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.code, v)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

/// Z x Z_6 over Z: the 2-absorbing check fails on the zero submodule, the
/// A-relative check holds for A = nonzero integers, and 6 is a witness.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let path = fixture("ex1.toml");
    let spec = parse_spec(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let c = spec.submodule("C").map_err(|e| e.to_string())?;
    let a = spec.multset("A").map_err(|e| e.to_string())?;
    let (r, m) = (&spec.ring, &spec.module);
    let el = |x| r.element(&[x]).unwrap();

    let out = is_graded_2_absorbing(c);
    ensure(out.verdict == Verdict::Fails, format!("two-absorbing gave {}", out.verdict))?;
    let cx = out.counterexample.clone().ok_or("no counterexample")?;
    ensure(reproduces_violation(c, None, &cx), "counterexample does not re-validate")?;
    let expected = Counterexample::Triple { r: el(2), s: el(3), m: m.element(&[0, 1]).unwrap() };
    ensure(reproduces_violation(c, None, &expected), "(2, 3, (0,1)) rejected by the re-validator")?;
    ensure(cx == expected, format!("canonical triple changed: {cx}"))?;

    let (code, v) =
        cli(&["check", &path, "--predicate", "two-absorbing", "--submodule", "C", "--bound", "10", "--format", "json"]);
    ensure(code == 1 && v["revalidated"] == true, format!("cli two-absorbing exit {code}"))?;

    let a2 = is_graded_a_2_absorbing(c, a);
    ensure(a2.verdict == Verdict::BoundedHolds, format!("a-two-absorbing gave {}", a2.verdict))?;
    let w6 = is_witness(&el(6), c, a).map_err(|e| e.to_string())?;
    ensure(w6.verdict == Verdict::BoundedHolds, format!("witness 6 gave {}", w6.verdict))?;
    let base =
        ["check", &path, "--predicate", "a-two-absorbing", "--submodule", "C", "--multset", "A", "--bound", "10"];
    let (code, v) = cli(&[&base[..], &["--format", "json"]].concat());
    ensure(code == 0 && v["verdict"] == "bounded_holds", format!("cli a-two-absorbing exit {code}"))?;
    let (code, v) = cli(&[&base[..], &["--witness", "6", "--format", "json"]].concat());
    ensure(code == 0 && v["verdict"] == "bounded_holds", format!("cli --witness 6 exit {code}"))?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("counterexample {cx}, canonical witness {}, witness 6 accepted", a2.witness.unwrap()))
}

/// Z_6 over Z with A the units: not prime, 2-absorbing, A-2-absorbing,
/// not A-prime.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let path = fixture("ex2.toml");
    let spec = parse_spec(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let c = spec.submodule("C").map_err(|e| e.to_string())?;
    let a = spec.multset("A").map_err(|e| e.to_string())?;
    let (r, m) = (&spec.ring, &spec.module);

    let prime = is_graded_prime(c);
    ensure(prime.verdict == Verdict::Fails, format!("prime gave {}", prime.verdict))?;
    let expected = Counterexample::Pair { r: r.element(&[2]).unwrap(), m: m.element(&[3]).unwrap() };
    ensure(reproduces_violation(c, None, &expected), "(2, 3) rejected by the re-validator")?;
    ensure(
        reproduces_violation(c, None, prime.counterexample.as_ref().ok_or("no pair")?),
        "pair does not re-validate",
    )?;
    let two = is_graded_2_absorbing(c);
    ensure(two.verdict == Verdict::Holds, format!("two-absorbing gave {}", two.verdict))?;
    let a2 = is_graded_a_2_absorbing(c, a);
    ensure(a2.verdict == Verdict::Holds, format!("a-two-absorbing gave {}", a2.verdict))?;
    let ap = is_graded_a_prime(c, a);
    ensure(ap.verdict == Verdict::Fails, format!("a-prime gave {}", ap.verdict))?;

    let expect = [
        ("prime", 1, "fails"),
        ("two-absorbing", 0, "holds"),
        ("a-two-absorbing", 0, "holds"),
        ("a-prime", 1, "fails"),
    ];
    for (pred, want_code, want) in expect {
        let (code, v) =
            cli(&["check", &path, "--predicate", pred, "--submodule", "C", "--multset", "A", "--format", "json"]);
        ensure(code == want_code && v["verdict"] == want, format!("cli {pred}: exit {code}, {}", v["verdict"]))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "prime fails at {}, 2-absorbing holds, A-2-absorbing holds with witness {}, A-prime fails",
        expected,
        a2.witness.unwrap()
    ))
}

fn standard_corpus() -> Result<Corpus, String> {
    let spec = CorpusSpec::standard();
    let corpus = enumerate_corpus(&spec).map_err(|e| e.to_string())?;
    let names: Vec<&str> = corpus.modules.iter().map(|m| m.module.name()).collect();
    ensure(corpus.modules.len() == 7 && corpus.skipped == 0, format!("unexpected corpus members {names:?}"))?;
    Ok(corpus)
}

/// Every property over the standard corpus, single-threaded.
fn criterion_3(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let report = run_theorem_suite(corpus, 1).map_err(|e| e.to_string())?;
    ensure(report.evaluations >= 200, format!("only {} evaluations", report.evaluations))?;
    ensure(
        report.total_counterexamples() == 0,
        format!("{} counterexamples, first: {:?}", report.total_counterexamples(), report.counterexamples.first()),
    )?;
    for (p, counts) in report.property_counts.0.iter() {
        let sum = counts.holds + counts.bounded + counts.not_applicable + counts.counterexamples;
        ensure(sum == counts.instances_tested, format!("{} counts do not add up", p.key()))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} instances, {} evaluations, 0 counterexamples over {} properties",
        report.instances,
        report.evaluations,
        report.property_counts.0.len()
    ))
}

/// The element search and the three characterizations agree on every instance.
fn criterion_4(corpus: &Corpus) -> Outcome {
    let mut decided = 0;
    for inst in &corpus.instances {
        let c = corpus.submodule_of(inst);
        let a = corpus.multset_of(inst);
        let direct = is_graded_a_2_absorbing(c, a).verdict.class();
        let routes = [
            ("component-ideal", check_component_ideal_condition(c, a)),
            ("colon-char", colon_characterization(c, a)),
            ("colon-quotient", colon_quotient_2abs(c, a)),
        ];
        for (name, out) in routes {
            ensure(
                out.verdict.class() == direct,
                format!("{name} gave {} vs {direct} on {}", out.verdict, corpus.describe(inst)),
            )?;
            if let Some(w) = out.witness.as_ref().filter(|_| name != "colon-char") {
                ensure(
                    is_witness(w, c, a).map_err(|e| e.to_string())?.verdict.passed(),
                    format!("{name} witness {w} rejected"),
                )?;
            }
        }
        if direct != Verdict::NotApplicable {
            decided += 1;
        }
    }
    Ok(format!(
        "4 routes agree on {} of {} instances ({decided} decided)",
        corpus.instances.len(),
        corpus.instances.len()
    ))
}

/// Localizations of every corpus ring and module at every corpus set.
fn criterion_5(corpus: &Corpus) -> Outcome {
    let mut pairs = 0;
    let mut checked = 0;
    for cm in &corpus.modules {
        let ring = cm.module.ring_arc();
        for a in &cm.multsets {
            let l = localize_ring(ring, a).map_err(|e| e.to_string())?;
            let lm = localize_module(&cm.module, a).map_err(|e| e.to_string())?;
            let what = format!("{} at {a}", cm.module.name());
            ensure(l.check_well_defined().verdict.passed(), format!("ring operations not well defined for {what}"))?;
            ensure(validate_graded_ring(l.ring()).verdict.passed(), format!("A^-1 R invalid for {what}"))?;
            ensure(lm.check_well_defined().verdict.passed(), format!("action not well defined for {what}"))?;
            ensure(validate_graded_module(lm.module()).verdict.passed(), format!("A^-1 M invalid for {what}"))?;
            let star = saturate(a);
            for x in ring.homogeneous_elements() {
                let unit = l.is_unit_fraction(x).map_err(|e| e.to_string())?;
                ensure(
                    star.contains(x) == unit,
                    format!("{x} in A* is {} but x/1 unit is {unit} for {what}", star.contains(x)),
                )?;
                checked += 1;
            }
            for c in &cm.submodules {
                let lc = localize_submodule(c, &lm).map_err(|e| e.to_string())?;
                let graded = is_graded_submodule(&lc.elements(), lm.module()).map_err(|e| e.to_string())?;
                ensure(graded.verdict.passed(), format!("A^-1 C not graded for {what}"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} localizations validated, {checked} saturation checks agree"))
}

/// `verify --jobs 1` and `verify --jobs 8` give the same JSON apart from timing.
fn criterion_6() -> Outcome {
    let corpus = fixture("corpus.toml");
    let mut reports = Vec::new();
    for jobs in ["1", "8"] {
        let (code, mut v) = cli(&["verify", "--corpus", &corpus, "--jobs", jobs, "--format", "json"]);
        ensure(code == 0, format!("verify --jobs {jobs} exit {code}"))?;
        let obj = v.as_object_mut().ok_or("report is not an object")?;
        obj.remove("wall_time_ms").ok_or("no wall_time_ms field")?;
        reports.push(serde_json::to_string(&v).map_err(|e| e.to_string())?);
    }
    ensure(reports[0] == reports[1], "reports differ")?;
    Ok(format!("identical {}-byte reports", reports[0].len()))
}

fn main() -> ExitCode {
    let corpus = standard_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 Z x Z_6 example", Box::new(criterion_1)),
        ("2 Z_6 contrast example", Box::new(criterion_2)),
        ("3 theorem suite", Box::new(|| criterion_3(corpus.as_ref().map_err(Clone::clone)?))),
        ("4 route agreement", Box::new(|| criterion_4(corpus.as_ref().map_err(Clone::clone)?))),
        ("5 localization soundness", Box::new(|| criterion_5(corpus.as_ref().map_err(Clone::clone)?))),
        ("6 determinism", Box::new(criterion_6)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS criterion {name} ({ms} ms): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({ms} ms): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
