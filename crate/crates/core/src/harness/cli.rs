//! Command-line front end. [`cli_dispatch`] does all the work so that the
//! binary stays a thin wrapper and tests can drive it in-process.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::corpus::{enumerate_corpus, Corpus, CorpusSpec};
use super::format::{parse_spec_with_bound, StructureSpec};
use super::suite::run_theorem_suite;
use crate::absorbing::{
    check_component_ideal_condition, colon_characterization, colon_quotient_2abs, is_graded_2_absorbing,
    is_graded_a_2_absorbing, is_graded_a_prime, is_graded_prime, is_prime_witness, is_witness, reproduces_violation,
    saturate,
};
use crate::algebra_core::{Carrier, Element, EnumerationBound};
use crate::error::{Error, Result};
use crate::localization::{localize_module, localize_ring, localize_submodule};
use crate::structures::{colon_module, colon_ring, CheckOutcome, Divisor, GradedSubmodule, Verdict};

/// Exit code for input, parse and validation errors.
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gradabs",
    version,
    about = "Decide graded absorbing-type conditions on finite and bounded structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    Prime,
    TwoAbsorbing,
    APrime,
    ATwoAbsorbing,
    ColonChar,
    ComponentIdeal,
    ColonQuotient,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Prime => "prime",
            Predicate::TwoAbsorbing => "two-absorbing",
            Predicate::APrime => "a-prime",
            Predicate::ATwoAbsorbing => "a-two-absorbing",
            Predicate::ColonChar => "colon-char",
            Predicate::ComponentIdeal => "component-ideal",
            Predicate::ColonQuotient => "colon-quotient",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a structure file and run the graded validators.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide one predicate for a named submodule.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long)]
        submodule: String,
        #[arg(long)]
        multset: Option<String>,
        /// Box half-width for infinite coordinates; overrides the file.
        #[arg(long)]
        bound: Option<u32>,
        /// Test this fixed element instead of searching A.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// (C :_R M), or (C :_M x) / (C :_M I) with a divisor.
    Colon {
        file: PathBuf,
        #[arg(long)]
        submodule: String,
        #[arg(long, conflicts_with = "ideal")]
        divisor: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The saturation A* of a multiplicative set.
    Saturate {
        file: PathBuf,
        #[arg(long)]
        multset: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fraction classes of A^-1 R and A^-1 M, and A^-1 C on request.
    Localize {
        file: PathBuf,
        #[arg(long)]
        multset: String,
        #[arg(long)]
        submodule: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the theorem suite on a structure file, a corpus file, or the
    /// standard corpus when neither is given.
    Verify {
        #[arg(conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CliOutput { code, stdout, stderr: String::new() }
    }

    fn error(msg: String) -> Self {
        CliOutput { code: EXIT_ERROR, stdout: String::new(), stderr: msg }
    }
}

/// Run the command line `argv` (program name first).
pub fn cli_dispatch<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { CliOutput::error(text) } else { CliOutput::ok(0, text) };
        }
    };
    match run(cli.command) {
        Ok(out) => out,
        Err(e) => CliOutput::error(format!("error: {e}\n")),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        location: Some(path.display().to_string()),
        message: format!("cannot read file: {e}"),
    })
}

fn load(path: &Path, bound: Option<u32>) -> Result<StructureSpec> {
    let bound = bound.map(EnumerationBound::new).transpose()?;
    parse_spec_with_bound(&read(path)?, bound)
}

/// Parse `6`, `(0,1)`, `0,1` or `(0, -1)` as an element of `carrier`.
pub fn parse_element(text: &str, carrier: &Carrier) -> Result<Element> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<i64> = inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse { location: Some(format!("element {text:?}")), message: e.to_string() })
        })
        .collect::<Result<_>>()?;
    carrier.element(&coords)
}

fn render(format: Format, text: String, value: serde_json::Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json value serializes") + "\n",
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds | Verdict::BoundedHolds => 0,
        Verdict::Fails => 1,
        Verdict::NotApplicable => 2,
    }
}

fn list(xs: &[Element]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn run(cmd: Command) -> Result<CliOutput> {
    match cmd {
        Command::Validate { file, format } => {
            let spec = load(&file, None)?;
            let mut t = String::new();
            t.push_str(&format!("ring {}: {}\n", spec.ring.name(), spec.ring_check));
            t.push_str(&format!("module {}: {}\n", spec.module.name(), spec.module_check));
            for (n, c) in &spec.submodules {
                t.push_str(&format!("submodule {n} = {c}\n"));
            }
            for (n, i) in &spec.ideals {
                t.push_str(&format!("ideal {n} = {i}\n"));
            }
            for (n, a) in &spec.multsets {
                t.push_str(&format!("multset {n} = {a}\n"));
                if a.has_zero() {
                    t.push_str(&format!("warning: {n} contains 0, so every A-relative predicate is not applicable\n"));
                }
            }
            let v = json!({
                "ring": { "name": spec.ring.name(), "orders": spec.ring.carrier().orders(), "check": spec.ring_check },
                "module": { "name": spec.module.name(), "orders": spec.module.carrier().orders(), "check": spec.module_check },
                "submodules": spec.submodules.iter().map(|(n, c)| (n.clone(), json!(c.generators()))).collect::<serde_json::Map<_, _>>(),
                "ideals": spec.ideals.iter().map(|(n, c)| (n.clone(), json!(c.generators()))).collect::<serde_json::Map<_, _>>(),
                "multsets": spec.multsets.iter().map(|(n, a)| (n.clone(), json!(a))).collect::<serde_json::Map<_, _>>(),
                "bound": spec.bound,
            });
            Ok(CliOutput::ok(0, render(format, t, v)))
        }
        Command::Check { file, predicate, submodule, multset, bound, witness, format } => {
            let spec = load(&file, bound)?;
            let c = spec.submodule(&submodule)?;
            let a = multset.as_deref().map(|n| spec.multset(n)).transpose()?;
            let needs_a = matches!(
                predicate,
                Predicate::APrime
                    | Predicate::ATwoAbsorbing
                    | Predicate::ColonChar
                    | Predicate::ComponentIdeal
                    | Predicate::ColonQuotient
            );
            if needs_a && a.is_none() {
                return Err(Error::Validation {
                    field: "--multset".into(),
                    message: format!("{} needs a multiplicative set", predicate.name()),
                });
            }
            let w = witness.as_deref().map(|s| parse_element(s, spec.ring.carrier())).transpose()?;
            if w.is_some() && !matches!(predicate, Predicate::APrime | Predicate::ATwoAbsorbing) {
                return Err(Error::Validation {
                    field: "--witness".into(),
                    message: "a witness applies only to a-prime and a-two-absorbing".into(),
                });
            }
            let out = match (predicate, a, &w) {
                (Predicate::Prime, _, _) => is_graded_prime(c),
                (Predicate::TwoAbsorbing, _, _) => is_graded_2_absorbing(c),
                (Predicate::APrime, Some(a), Some(w)) => is_prime_witness(w, c, a)?,
                (Predicate::APrime, Some(a), None) => is_graded_a_prime(c, a),
                (Predicate::ATwoAbsorbing, Some(a), Some(w)) => is_witness(w, c, a)?,
                (Predicate::ATwoAbsorbing, Some(a), None) => is_graded_a_2_absorbing(c, a),
                (Predicate::ColonChar, Some(a), _) => colon_characterization(c, a),
                (Predicate::ComponentIdeal, Some(a), _) => check_component_ideal_condition(c, a),
                (Predicate::ColonQuotient, Some(a), _) => colon_quotient_2abs(c, a),
                _ => unreachable!("multiplicative set checked above"),
            };
            let revalidated = revalidate(predicate, c, w.as_ref(), &out);
            let mut t = format!("{} on {submodule} = {c} in {}\n", predicate.name(), spec.module.name());
            if a.is_some_and(|a| a.has_zero()) {
                t.push_str("warning: the multiplicative set contains 0\n");
            }
            t.push_str(&format!("verdict: {}\n", out.verdict));
            if let Some(b) = out.bound {
                t.push_str(&format!("bound: {b}\n"));
            }
            if let Some(x) = &out.witness {
                t.push_str(&format!("witness: {x}\n"));
            }
            if let Some(cx) = &out.counterexample {
                t.push_str(&format!("counterexample: {cx}\n"));
            }
            if let Some(ok) = revalidated {
                t.push_str(&format!("revalidated: {}\n", if ok { "yes" } else { "NO" }));
            }
            if !out.rejected.is_empty() {
                t.push_str(&format!("rejected witnesses: {}\n", out.rejected.len()));
                for r in &out.rejected {
                    t.push_str(&format!("  {}: {}\n", r.witness, r.counterexample));
                }
            }
            if let Some(r) = &out.reason {
                t.push_str(&format!("reason: {r}\n"));
            }
            let mut v = serde_json::to_value(&out).expect("outcome serializes");
            let obj = v.as_object_mut().expect("outcome is an object");
            obj.insert("predicate".into(), json!(predicate.name()));
            obj.insert("submodule".into(), json!(submodule));
            if let Some(ok) = revalidated {
                obj.insert("revalidated".into(), json!(ok));
            }
            Ok(CliOutput::ok(verdict_code(out.verdict), render(format, t, v)))
        }
        Command::Colon { file, submodule, divisor, ideal, format } => {
            let spec = load(&file, None)?;
            let c = spec.submodule(&submodule)?;
            let (label, result): (String, GradedSubmodule) = match (divisor, ideal) {
                (Some(d), _) => {
                    let x = parse_element(&d, spec.ring.carrier())?;
                    (format!("({submodule} :_M {x})"), colon_module(c, Divisor::Scalar(&x))?)
                }
                (None, Some(i)) => {
                    let ideal = spec.ideal(&i)?;
                    (format!("({submodule} :_M {i})"), colon_module(c, Divisor::Ideal(ideal))?)
                }
                (None, None) => (format!("({submodule} :_R M)"), colon_ring(c)),
            };
            let mut t = format!("{label} = {result}\n");
            let elements = (!result.is_bounded()).then(|| result.elements());
            if let Some(els) = &elements {
                t.push_str(&format!("elements: {{{}}}\n", list(els)));
            }
            let v = json!({ "colon": label, "generators": result.generators(), "elements": elements });
            Ok(CliOutput::ok(0, render(format, t, v)))
        }
        Command::Saturate { file, multset, format } => {
            let spec = load(&file, None)?;
            let a = spec.multset(&multset)?;
            let s = saturate(a);
            let t = format!("{multset} = {a}\n{multset}* = {s}\n");
            let v = json!({ "multset": a, "saturation": s });
            Ok(CliOutput::ok(0, render(format, t, v)))
        }
        Command::Localize { file, multset, submodule, format } => {
            let spec = load(&file, None)?;
            let a = spec.multset(&multset)?;
            let lr = localize_ring(&spec.ring, a)?;
            let lm = localize_module(&spec.module, a)?;
            let mut t = format!(
                "A^-1 R: {} classes, carrier {:?}\nA^-1 M: {} classes, carrier {:?}\n",
                lr.num_classes(),
                lr.ring().carrier().orders(),
                lm.num_classes(),
                lm.module().carrier().orders()
            );
            for cl in lr.classes() {
                let deg = cl.degree.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "-".into());
                t.push_str(&format!(
                    "  ring class {}: {}/{} degree {deg}\n",
                    cl.class_id, cl.numerator, cl.denominator
                ));
            }
            for cl in lm.classes() {
                let deg = cl.degree.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "-".into());
                t.push_str(&format!(
                    "  module class {}: {}/{} degree {deg}\n",
                    cl.class_id, cl.numerator, cl.denominator
                ));
            }
            let mut v = json!({
                "ring_classes": lr.classes(),
                "ring_orders": lr.ring().carrier().orders(),
                "module_classes": lm.classes(),
                "module_orders": lm.module().carrier().orders(),
            });
            if let Some(name) = submodule {
                let c = spec.submodule(&name)?;
                let lc = localize_submodule(c, &lm)?;
                t.push_str(&format!("A^-1 {name} = {lc}{}\n", if lc.is_full() { " (all of A^-1 M)" } else { "" }));
                v["submodule"] = json!({ "name": name, "generators": lc.generators(), "full": lc.is_full() });
            }
            Ok(CliOutput::ok(0, render(format, t, v)))
        }
        Command::Verify { file, corpus, jobs, format } => {
            let corpus = match (file, corpus) {
                (Some(f), _) => Corpus::from_structure(&load(&f, None)?)?,
                (None, Some(p)) => enumerate_corpus(&CorpusSpec::from_toml(&read(&p)?)?)?,
                (None, None) => enumerate_corpus(&CorpusSpec::standard())?,
            };
            if corpus.instances.is_empty() {
                return Err(Error::Validation { field: "corpus".into(), message: "no instances to verify".into() });
            }
            let report = run_theorem_suite(&corpus, jobs)?;
            let code = if report.is_clean() { 0 } else { 1 };
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            };
            Ok(CliOutput::ok(code, text))
        }
    }
}

/// Feed a Fails back through the violation checker.
fn revalidate(p: Predicate, c: &GradedSubmodule, w: Option<&Element>, out: &CheckOutcome) -> Option<bool> {
    if out.verdict != Verdict::Fails {
        return None;
    }
    let cx = out.counterexample.as_ref()?;
    match p {
        Predicate::Prime | Predicate::TwoAbsorbing => Some(reproduces_violation(c, None, cx)),
        Predicate::APrime | Predicate::ATwoAbsorbing => match w {
            Some(w) => Some(reproduces_violation(c, Some(w), cx)),
            None => Some(
                !out.rejected.is_empty()
                    && out.rejected.iter().all(|r| reproduces_violation(c, Some(&r.witness), &r.counterexample)),
            ),
        },
        _ => None,
    }
}
