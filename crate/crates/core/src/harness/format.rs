//! The TOML structure format. `docs/FORMAT.md` holds the grammar.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use toml::Spanned;

use crate::absorbing::{mult_closure, nonzero_integers, units, MultSet};
use crate::algebra_core::{Carrier, Degree, Element, EnumerationBound, GradingGroup};
use crate::error::{Error, Result};
use crate::structures::{
    generate_submodule, validate_graded_module, validate_graded_ring, CheckOutcome, GradedModule, GradedRing,
    GradedSubmodule, Grading, Verdict,
};

/// Version accepted in the optional top-level `format` key.
pub const FORMAT_VERSION: u32 = 1;

/// A parsed and validated structure file.
#[derive(Clone, Debug)]
pub struct StructureSpec {
    pub group: GradingGroup,
    pub bound: EnumerationBound,
    pub ring: Arc<GradedRing>,
    pub module: Arc<GradedModule>,
    pub submodules: BTreeMap<String, GradedSubmodule>,
    pub ideals: BTreeMap<String, GradedSubmodule>,
    pub multsets: BTreeMap<String, MultSet>,
    pub ring_check: CheckOutcome,
    pub module_check: CheckOutcome,
}

impl StructureSpec {
    pub fn submodule(&self, name: &str) -> Result<&GradedSubmodule> {
        lookup(&self.submodules, "submodule", name)
    }

    pub fn ideal(&self, name: &str) -> Result<&GradedSubmodule> {
        lookup(&self.ideals, "ideal", name)
    }

    pub fn multset(&self, name: &str) -> Result<&MultSet> {
        lookup(&self.multsets, "multset", name)
    }
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| {
        let known: Vec<&str> = map.keys().map(String::as_str).collect();
        Error::Validation {
            field: format!("{kind}s.{name}"),
            message: format!("no {kind} named {name:?} (known: {})", known.join(", ")),
        }
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawElem {
    Int(i64),
    List(Vec<i64>),
}

impl RawElem {
    fn coords(&self) -> Vec<i64> {
        match self {
            RawElem::Int(x) => vec![*x],
            RawElem::List(v) => v.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    degree: RawElem,
    gens: Vec<RawElem>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    orders: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawRing {
    Modular {
        n: u64,
        grading: Option<Vec<RawComponent>>,
        component_assignment: Option<Vec<RawElem>>,
    },
    Integers {
        grading: Option<Vec<RawComponent>>,
        component_assignment: Option<Vec<RawElem>>,
    },
    GroupAlgebra {
        base: u64,
    },
    Product {
        factors: Vec<RawRing>,
        grading: Option<Vec<RawComponent>>,
        component_assignment: Option<Vec<RawElem>>,
    },
    Table {
        orders: Vec<u64>,
        table: Vec<Vec<RawElem>>,
        one: RawElem,
        grading: Option<Vec<RawComponent>>,
        component_assignment: Option<Vec<RawElem>>,
    },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawModule {
    Ring,
    CyclicProduct {
        orders: Vec<u64>,
        component_assignment: Option<Vec<RawElem>>,
    },
    Table {
        orders: Vec<u64>,
        action: Vec<Vec<RawElem>>,
        grading: Option<Vec<RawComponent>>,
        component_assignment: Option<Vec<RawElem>>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSub {
    Named(String),
    Gens { gens: Vec<RawElem> },
    Elements { elements: Vec<RawElem> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMultSet {
    Named { named: String },
    Gens { gens: Vec<RawElem> },
    Elements { elements: Vec<RawElem> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    format: Option<u32>,
    bound: Option<u32>,
    group: RawGroup,
    ring: Spanned<RawRing>,
    module: Option<Spanned<RawModule>>,
    #[serde(default)]
    submodules: BTreeMap<String, Spanned<RawSub>>,
    #[serde(default)]
    ideals: BTreeMap<String, Spanned<RawSub>>,
    #[serde(default)]
    multsets: BTreeMap<String, Spanned<RawMultSet>>,
}

/// `line L, column C` of a byte offset.
fn position(text: &str, offset: usize) -> String {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    format!("line {line}, column {col}")
}

/// Attaches a source position to errors raised while building a section.
struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn at<T>(&self, field: &str, offset: usize, r: Result<T>) -> Result<T> {
        r.map_err(|e| {
            let message = match e {
                Error::Validation { field: inner, message } if inner != field => format!("{inner}: {message}"),
                Error::Validation { message, .. } => message,
                other => other.to_string(),
            };
            Error::Validation { field: format!("{field} ({})", position(self.text, offset)), message }
        })
    }
}

/// Parse and validate a structure file with the bound it declares.
pub fn parse_spec(text: &str) -> Result<StructureSpec> {
    parse_spec_with_bound(text, None)
}

/// Parse and validate, overriding the declared bound when `bound` is given.
pub fn parse_spec_with_bound(text: &str, bound: Option<EnumerationBound>) -> Result<StructureSpec> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| Error::Parse {
        location: e.span().map(|s| position(text, s.start)),
        message: e.message().trim().to_string(),
    })?;
    let loc = Locator { text };
    if let Some(v) = raw.format {
        if v != FORMAT_VERSION {
            return Err(Error::Validation {
                field: "format".into(),
                message: format!("unsupported format version {v}; this build reads version {FORMAT_VERSION}"),
            });
        }
    }
    let bound = match bound {
        Some(b) => b,
        None => raw.bound.map(EnumerationBound::new).transpose()?.unwrap_or_default(),
    };
    let group = GradingGroup::new(raw.group.orders)?;

    let ring_at = raw.ring.span().start;
    let ring = loc.at("ring", ring_at, build_ring(raw.ring.get_ref(), &group))?.with_bound(bound);
    let ring_check = validate_graded_ring(&ring);
    if ring_check.verdict == Verdict::Fails {
        return Err(Error::Validation {
            field: format!("ring ({})", position(text, ring_at)),
            message: format!("not a graded ring: {ring_check}"),
        });
    }
    let ring = Arc::new(ring);

    let (module, module_at) = match &raw.module {
        None => (GradedModule::ring_as_module(ring.clone()), ring_at),
        Some(m) => {
            let at = m.span().start;
            (loc.at("module", at, build_module(m.get_ref(), &ring))?, at)
        }
    };
    let module_check = validate_graded_module(&module);
    if module_check.verdict == Verdict::Fails {
        return Err(Error::Validation {
            field: format!("module ({})", position(text, module_at)),
            message: format!("not a graded module: {module_check}"),
        });
    }
    let module = Arc::new(module);

    let mut submodules = BTreeMap::new();
    for (name, raw) in &raw.submodules {
        let field = format!("submodules.{name}");
        let c = loc.at(&field, raw.span().start, build_submodule(raw.get_ref(), &module))?;
        submodules.insert(name.clone(), c);
    }
    let mut ideals = BTreeMap::new();
    if !raw.ideals.is_empty() {
        let as_module = Arc::new(GradedModule::ring_as_module(ring.clone()));
        for (name, raw) in &raw.ideals {
            let field = format!("ideals.{name}");
            let i = loc.at(&field, raw.span().start, build_submodule(raw.get_ref(), &as_module))?;
            ideals.insert(name.clone(), i);
        }
    }
    let mut multsets = BTreeMap::new();
    for (name, raw) in &raw.multsets {
        let field = format!("multsets.{name}");
        let a = loc.at(&field, raw.span().start, build_multset(raw.get_ref(), &ring))?;
        multsets.insert(name.clone(), a);
    }
    Ok(StructureSpec { group, bound, ring, module, submodules, ideals, multsets, ring_check, module_check })
}

fn elements(carrier: &Carrier, raw: &[RawElem]) -> Result<Vec<Element>> {
    raw.iter().map(|x| carrier.element(&x.coords())).collect()
}

fn grading(
    group: &GradingGroup,
    carrier: &Carrier,
    components: Option<&Vec<RawComponent>>,
    assignment: Option<&Vec<RawElem>>,
) -> Result<Option<Grading>> {
    match (components, assignment) {
        (Some(_), Some(_)) => Err(Error::Validation {
            field: "grading".into(),
            message: "give either grading or component_assignment, not both".into(),
        }),
        (Some(comps), None) => {
            let mut out = Vec::new();
            for c in comps {
                out.push((group.degree(&c.degree.coords())?, elements(carrier, &c.gens)?));
            }
            Ok(Some(Grading::new(group, carrier, out)?))
        }
        (None, Some(assign)) => {
            let degrees: Vec<Degree> = assign.iter().map(|d| group.degree(&d.coords())).collect::<Result<_>>()?;
            Ok(Some(Grading::by_coordinate(group, carrier, &degrees)?))
        }
        (None, None) => Ok(None),
    }
}

fn regrade(ring: GradedRing, g: Option<Grading>) -> Result<GradedRing> {
    match g {
        None => Ok(ring),
        Some(g) => {
            let comps = g.components().iter().map(|(d, s)| (d.clone(), s.generators())).collect();
            ring.with_grading(comps)
        }
    }
}

fn build_ring(raw: &RawRing, group: &GradingGroup) -> Result<GradedRing> {
    match raw {
        RawRing::Modular { n, grading: gr, component_assignment: ca } => {
            let r = GradedRing::modular(*n, group)?;
            let g = grading(group, r.carrier(), gr.as_ref(), ca.as_ref())?;
            regrade(r, g)
        }
        RawRing::Integers { grading: gr, component_assignment: ca } => {
            let r = GradedRing::integers(group);
            let g = grading(group, r.carrier(), gr.as_ref(), ca.as_ref())?;
            regrade(r, g)
        }
        RawRing::GroupAlgebra { base } => GradedRing::group_algebra(*base, group),
        RawRing::Product { factors, grading: gr, component_assignment: ca } => {
            let built: Vec<GradedRing> = factors.iter().map(|f| build_ring(f, group)).collect::<Result<_>>()?;
            let refs: Vec<&GradedRing> = built.iter().collect();
            let r = GradedRing::product(&refs)?;
            let g = grading(group, r.carrier(), gr.as_ref(), ca.as_ref())?;
            regrade(r, g)
        }
        RawRing::Table { orders, table, one, grading: gr, component_assignment: ca } => {
            let carrier = Carrier::new(orders.clone())?;
            let rows: Vec<Vec<Element>> = table.iter().map(|r| elements(&carrier, r)).collect::<Result<_>>()?;
            let one = carrier.element(&one.coords())?;
            let g = grading(group, &carrier, gr.as_ref(), ca.as_ref())?
                .unwrap_or_else(|| Grading::trivial(group, &carrier));
            GradedRing::from_table("R", carrier, rows, one, g)
        }
    }
}

fn build_module(raw: &RawModule, ring: &Arc<GradedRing>) -> Result<GradedModule> {
    let group = ring.group();
    match raw {
        RawModule::Ring => Ok(GradedModule::ring_as_module(ring.clone())),
        RawModule::CyclicProduct { orders, component_assignment } => {
            let degrees: Vec<Degree> = match component_assignment {
                None => vec![group.identity(); orders.len()],
                Some(a) => a.iter().map(|d| group.degree(&d.coords())).collect::<Result<_>>()?,
            };
            GradedModule::cyclic_product(ring.clone(), orders.clone(), &degrees)
        }
        RawModule::Table { orders, action, grading: gr, component_assignment: ca } => {
            let carrier = Carrier::new(orders.clone())?;
            let rows: Vec<Vec<Element>> = action.iter().map(|r| elements(&carrier, r)).collect::<Result<_>>()?;
            let g = grading(group, &carrier, gr.as_ref(), ca.as_ref())?
                .unwrap_or_else(|| Grading::trivial(group, &carrier));
            GradedModule::from_table("M", ring.clone(), carrier, rows, g)
        }
    }
}

fn build_submodule(raw: &RawSub, module: &Arc<GradedModule>) -> Result<GradedSubmodule> {
    match raw {
        RawSub::Named(n) if n == "zero" => Ok(GradedSubmodule::zero(module)),
        RawSub::Named(n) if n == "full" => Ok(GradedSubmodule::full(module)),
        RawSub::Named(n) => Err(Error::Validation {
            field: "submodule".into(),
            message: format!(
                "unknown constructor {n:?}; use \"zero\", \"full\", {{ gens = [...] }} or {{ elements = [...] }}"
            ),
        }),
        RawSub::Gens { gens } => generate_submodule(&elements(module.carrier(), gens)?, module),
        RawSub::Elements { elements: els } => GradedSubmodule::from_elements(module, &elements(module.carrier(), els)?),
    }
}

fn build_multset(raw: &RawMultSet, ring: &Arc<GradedRing>) -> Result<MultSet> {
    match raw {
        RawMultSet::Named { named } => match named.as_str() {
            "units" => Ok(units(ring)),
            "nonzero_integers" => nonzero_integers(ring),
            other => Err(Error::Validation {
                field: "multset".into(),
                message: format!("unknown constructor {other:?}; use \"units\" or \"nonzero_integers\""),
            }),
        },
        RawMultSet::Gens { gens } => mult_closure(&elements(ring.carrier(), gens)?, ring),
        RawMultSet::Elements { elements: els } => MultSet::from_elements(ring, &elements(ring.carrier(), els)?),
    }
}
