//! Deterministic enumeration of small instances `(M, C, A)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::format::StructureSpec;
use crate::absorbing::{mult_closure, units, MultSet};
use crate::algebra_core::{Degree, Element, GradingGroup};
use crate::error::{Error, Result};
use crate::structures::{enumerate_graded_submodules, GradedHomomorphism, GradedModule, GradedRing, GradedSubmodule};

fn default_max_carrier() -> u64 {
    64
}

fn default_max_multsets() -> usize {
    64
}

fn default_max_submodules() -> usize {
    256
}

fn yes() -> bool {
    true
}

/// What to enumerate. Every family member becomes one module; its
/// instances are all (submodule, multiplicative set) pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    #[serde(default)]
    pub families: Vec<Family>,
    /// Rings or modules with more elements than this are skipped.
    #[serde(default = "default_max_carrier")]
    pub max_carrier: u64,
    /// At most this many multiplicative sets per ring.
    #[serde(default = "default_max_multsets")]
    pub max_multsets: usize,
    /// At most this many submodules per module.
    #[serde(default = "default_max_submodules")]
    pub max_submodules: usize,
    /// All graded submodules, or only `0` and `M`.
    #[serde(default = "yes")]
    pub all_submodules: bool,
    /// Closures of every homogeneous singleton, or only `{1}` and the units.
    #[serde(default = "yes")]
    pub all_closures: bool,
}

/// A family of rings, each taken as a module over itself unless stated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    /// `Z_n` for each modulus, trivially graded by `group`.
    Modular {
        moduli: Vec<u64>,
        #[serde(default)]
        group: Vec<u64>,
    },
    /// `Z_n[G]` for each base `n`.
    GroupAlgebra { bases: Vec<u64>, group: Vec<u64> },
    /// `Z_{k_1} x ... x Z_{k_l}` over `Z_n`, coordinate `j` in degree
    /// `degrees[j]` (identity when omitted).
    CyclicProduct {
        modulus: u64,
        orders: Vec<u64>,
        #[serde(default)]
        group: Vec<u64>,
        #[serde(default)]
        degrees: Vec<Vec<i64>>,
    },
}

impl CorpusSpec {
    /// `Z_n` for n in {4, 6, 8, 9, 12}, `Z_2[Z_2]` and `Z_3[Z_2]`, each a
    /// module over itself, with all graded submodules and all singleton
    /// closures plus `{1}` and the units.
    pub fn standard() -> Self {
        CorpusSpec {
            families: vec![
                Family::Modular { moduli: vec![4, 6, 8, 9, 12], group: vec![] },
                Family::GroupAlgebra { bases: vec![2, 3], group: vec![2] },
            ],
            max_carrier: default_max_carrier(),
            max_multsets: default_max_multsets(),
            max_submodules: default_max_submodules(),
            all_submodules: true,
            all_closures: true,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: CorpusSpec = toml::from_str(text).map_err(|e| Error::Parse {
            location: e.span().map(|s| {
                let line = text[..s.start.min(text.len())].matches('\n').count() + 1;
                format!("line {line}")
            }),
            message: e.message().trim().to_string(),
        })?;
        if spec.max_carrier == 0 || spec.max_multsets == 0 || spec.max_submodules == 0 {
            return Err(Error::Validation { field: "caps".into(), message: "caps must be positive".into() });
        }
        Ok(spec)
    }
}

/// One module of the corpus with everything quantified over it.
#[derive(Clone, Debug)]
pub struct CorpusModule {
    pub module: Arc<GradedModule>,
    pub submodules: Vec<GradedSubmodule>,
    pub multsets: Vec<MultSet>,
    /// Graded endomorphisms `m -> r m` for `r` in the identity component.
    pub homs: Vec<GradedHomomorphism>,
}

/// Indices into [`Corpus::modules`] and the module's lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub module: usize,
    pub submodule: usize,
    pub multset: usize,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub modules: Vec<CorpusModule>,
    pub instances: Vec<Instance>,
    /// Family members dropped by the caps.
    pub skipped: usize,
    /// SHA-256 of the canonical description of every module and instance.
    pub fingerprint: String,
}

impl Corpus {
    pub fn module_of(&self, i: &Instance) -> &CorpusModule {
        &self.modules[i.module]
    }

    pub fn submodule_of(&self, i: &Instance) -> &GradedSubmodule {
        &self.modules[i.module].submodules[i.submodule]
    }

    pub fn multset_of(&self, i: &Instance) -> &MultSet {
        &self.modules[i.module].multsets[i.multset]
    }

    /// `name: C = ..., A = ...`.
    pub fn describe(&self, i: &Instance) -> String {
        let m = self.module_of(i);
        format!("{}: C = {}, A = {}", m.module.name(), self.submodule_of(i), self.multset_of(i))
    }

    /// The instances of a parsed structure file: its module, its named
    /// submodules and its named multiplicative sets.
    pub fn from_structure(spec: &StructureSpec) -> Result<Self> {
        let submodules: Vec<GradedSubmodule> = spec.submodules.values().cloned().collect();
        let multsets: Vec<MultSet> = spec.multsets.values().cloned().collect();
        let homs = scalings(&spec.module)?;
        Ok(Corpus::assemble(vec![CorpusModule { module: spec.module.clone(), submodules, multsets, homs }], 0))
    }

    fn assemble(modules: Vec<CorpusModule>, skipped: usize) -> Self {
        let mut instances = Vec::new();
        for (mi, m) in modules.iter().enumerate() {
            for si in 0..m.submodules.len() {
                for ai in 0..m.multsets.len() {
                    instances.push(Instance { module: mi, submodule: si, multset: ai });
                }
            }
        }
        let fingerprint = fingerprint(&modules, &instances);
        Corpus { modules, instances, skipped, fingerprint }
    }
}

/// Enumerate the corpus described by `spec`.
pub fn enumerate_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    let mut modules = Vec::new();
    let mut skipped = 0;
    for family in &spec.families {
        for module in family_modules(family)? {
            let size = module.carrier().size().zip(module.ring().carrier().size());
            match size {
                Some((m, r)) if m <= spec.max_carrier && r <= spec.max_carrier => {}
                _ => {
                    skipped += 1;
                    continue;
                }
            }
            let module = Arc::new(module);
            let submodules = if spec.all_submodules {
                enumerate_graded_submodules(&module, None, spec.max_submodules)
            } else {
                let mut both = vec![GradedSubmodule::zero(&module)];
                if !module.carrier().orders().is_empty() {
                    both.push(GradedSubmodule::full(&module));
                }
                both
            };
            let multsets = ring_multsets(module.ring_arc(), spec.all_closures, spec.max_multsets)?;
            let homs = scalings(&module)?;
            modules.push(CorpusModule { module, submodules, multsets, homs });
        }
    }
    Ok(Corpus::assemble(modules, skipped))
}

fn family_modules(family: &Family) -> Result<Vec<GradedModule>> {
    match family {
        Family::Modular { moduli, group } => {
            let g = GradingGroup::new(group.clone())?;
            moduli.iter().map(|&n| Ok(GradedModule::ring_as_module(Arc::new(GradedRing::modular(n, &g)?)))).collect()
        }
        Family::GroupAlgebra { bases, group } => {
            let g = GradingGroup::new(group.clone())?;
            bases
                .iter()
                .map(|&n| Ok(GradedModule::ring_as_module(Arc::new(GradedRing::group_algebra(n, &g)?))))
                .collect()
        }
        Family::CyclicProduct { modulus, orders, group, degrees } => {
            let g = GradingGroup::new(group.clone())?;
            let ring = Arc::new(GradedRing::modular(*modulus, &g)?);
            let degs: Vec<Degree> = if degrees.is_empty() {
                vec![g.identity(); orders.len()]
            } else {
                degrees.iter().map(|d| g.degree(d)).collect::<Result<_>>()?
            };
            Ok(vec![GradedModule::cyclic_product(ring, orders.clone(), &degs)?])
        }
    }
}

/// `{1}`, the units, then the closure of each homogeneous element in
/// canonical order, without repeats.
pub fn ring_multsets(ring: &Arc<GradedRing>, all_closures: bool, cap: usize) -> Result<Vec<MultSet>> {
    let mut out: Vec<MultSet> = Vec::new();
    let push = |a: MultSet, out: &mut Vec<MultSet>| {
        if out.len() < cap && !out.iter().any(|b| b.elements() == a.elements()) {
            out.push(a);
        }
    };
    push(mult_closure(&[], ring)?, &mut out);
    push(units(ring), &mut out);
    if all_closures {
        for x in ring.homogeneous_elements() {
            push(mult_closure(std::slice::from_ref(x), ring)?, &mut out);
        }
    }
    Ok(out)
}

/// Scaling endomorphisms by the identity component of the ring.
fn scalings(module: &Arc<GradedModule>) -> Result<Vec<GradedHomomorphism>> {
    let ring = module.ring();
    let e = ring.group().identity();
    let rs: Vec<Element> = ring
        .homogeneous_elements()
        .iter()
        .filter(|r| ring.grading().degree_of(r) == Some(e.clone()))
        .cloned()
        .collect();
    rs.iter().map(|r| GradedHomomorphism::scaling(module, r)).collect()
}

#[derive(Serialize)]
struct ModuleView<'a> {
    name: &'a str,
    group: &'a [u64],
    ring_orders: &'a [u64],
    ring_table: &'a [Vec<Element>],
    ring_one: &'a Element,
    ring_grading: Vec<(Degree, Vec<Element>)>,
    orders: &'a [u64],
    action: &'a [Vec<Element>],
    grading: Vec<(Degree, Vec<Element>)>,
    submodules: Vec<Vec<Element>>,
    multsets: Vec<&'a [Element]>,
    homs: Vec<&'a [Element]>,
}

fn fingerprint(modules: &[CorpusModule], instances: &[Instance]) -> String {
    let components = |g: &crate::structures::Grading| -> Vec<(Degree, Vec<Element>)> {
        g.components().iter().map(|(d, s)| (d.clone(), s.generators())).collect()
    };
    let mut h = Sha256::new();
    for m in modules {
        let r = m.module.ring();
        let view = ModuleView {
            name: m.module.name(),
            group: r.group().orders(),
            ring_orders: r.carrier().orders(),
            ring_table: r.table(),
            ring_one: r.one(),
            ring_grading: components(r.grading()),
            orders: m.module.carrier().orders(),
            action: m.module.action_table(),
            grading: components(m.module.grading()),
            submodules: m.submodules.iter().map(|c| c.generators()).collect(),
            multsets: m.multsets.iter().map(|a| a.elements()).collect(),
            homs: m.homs.iter().map(|f| f.images()).collect(),
        };
        h.update(serde_json::to_vec(&view).expect("plain data serializes"));
        h.update(b"\n");
    }
    h.update(serde_json::to_vec(instances).expect("plain data serializes"));
    hex::encode(h.finalize())
}
