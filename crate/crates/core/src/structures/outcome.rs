use std::fmt;

use serde::Serialize;

use crate::algebra_core::{Degree, Element, EnumerationBound};

/// The four possible answers of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    BoundedHolds,
    Fails,
    NotApplicable,
}

impl Verdict {
    /// Holds or BoundedHolds.
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::BoundedHolds)
    }

    /// Collapse BoundedHolds into Holds, for comparing verdicts of
    /// equivalent checks.
    pub fn class(self) -> Verdict {
        if self == Verdict::BoundedHolds {
            Verdict::Holds
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "Holds",
            Verdict::BoundedHolds => "BoundedHolds",
            Verdict::Fails => "Fails",
            Verdict::NotApplicable => "NotApplicable",
        };
        f.write_str(s)
    }
}

/// The data that certifies a `Fails` verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// A single offending element.
    Element { element: Element, detail: String },
    /// An element whose homogeneous component escapes the candidate.
    Component { element: Element, degree: Degree, component: Element },
    /// `(r, m)` with `r m in C`, violating a prime-type condition.
    Pair { r: Element, m: Element },
    /// `(r, s, m)` with `r s m in C`, violating an absorbing condition.
    Triple { r: Element, s: Element, m: Element },
    /// A pair of scalars violating the colon characterization.
    Scalars { r: Element, s: Element },
    /// Generators of `I_g`, `J_h`, `K_lambda` violating the component condition.
    Components { i: Vec<Element>, j: Vec<Element>, k: Vec<Element>, g: Degree, h: Degree, lambda: Degree },
    /// The first exponent at which colons stop agreeing.
    Exponent { n: u32, detail: String },
    /// A ring, module or homomorphism law failing on the listed elements.
    Law { law: String, elements: Vec<Element> },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[Element]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            Counterexample::Element { element, detail } => write!(f, "{element}: {detail}"),
            Counterexample::Component { element, degree, component } => {
                write!(f, "{element} has component {component} of degree {degree} outside the candidate")
            }
            Counterexample::Pair { r, m } => write!(f, "({r}, {m})"),
            Counterexample::Triple { r, s, m } => write!(f, "({r}, {s}, {m})"),
            Counterexample::Scalars { r, s } => write!(f, "r = {r}, s = {s}"),
            Counterexample::Components { i, j, k, g, h, lambda } => {
                write!(f, "I_{g} = <{}>, J_{h} = <{}>, K_{lambda} = <{}>", list(i), list(j), list(k))
            }
            Counterexample::Exponent { n, detail } => write!(f, "n = {n}: {detail}"),
            Counterexample::Law { law, elements } => {
                write!(f, "{law} fails at ({})", list(elements))
            }
        }
    }
}

/// A witness candidate that was tried and rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub witness: Element,
    pub counterexample: Counterexample,
}

/// Result of a predicate or validator.
///
/// `Holds` never carries a bound and `BoundedHolds` always does; `Fails`
/// always carries a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    pub witness: Option<Element>,
    pub counterexample: Option<Counterexample>,
    pub bound: Option<EnumerationBound>,
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<Rejection>,
}

impl CheckOutcome {
    pub fn holds(witness: Option<Element>) -> Self {
        CheckOutcome {
            verdict: Verdict::Holds,
            witness,
            counterexample: None,
            bound: None,
            reason: None,
            rejected: Vec::new(),
        }
    }

    pub fn bounded_holds(bound: EnumerationBound, witness: Option<Element>) -> Self {
        CheckOutcome { verdict: Verdict::BoundedHolds, bound: Some(bound), ..Self::holds(witness) }
    }

    /// Holds when `exact`, BoundedHolds at `bound` otherwise.
    pub fn passed(exact: bool, bound: EnumerationBound, witness: Option<Element>) -> Self {
        if exact {
            Self::holds(witness)
        } else {
            Self::bounded_holds(bound, witness)
        }
    }

    pub fn fails(counterexample: Counterexample) -> Self {
        CheckOutcome { verdict: Verdict::Fails, counterexample: Some(counterexample), ..Self::holds(None) }
    }

    pub fn not_applicable(reason: impl Into<String>) -> Self {
        CheckOutcome { verdict: Verdict::NotApplicable, reason: Some(reason.into()), ..Self::holds(None) }
    }

    pub fn with_bound(mut self, bound: Option<EnumerationBound>) -> Self {
        if self.verdict != Verdict::Holds {
            self.bound = bound;
        }
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(b) = self.bound {
            write!(f, " (B = {b})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ", witness {w}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, ", counterexample {c}")?;
        }
        if let Some(r) = &self.reason {
            write!(f, " [{r}]")?;
        }
        Ok(())
    }
}
