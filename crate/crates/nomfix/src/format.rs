//! JSON encodings of the core types.
//!
//! Every type has a serde mirror (`*Json`) with `to_*`/`from_*` converters.
//! Emitting always produces canonical data (sorted sets, canonical
//! elements), so parsing an emitted file and emitting it again is the
//! identity on bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use nomfix_core::nomauto::Transitions;
use nomfix_core::termgraph::Group;
use nomfix_core::{
    Abstraction, Atom, AtomSet, BindingSignature, CoordGroup, DistinctFsFun, Element, FsFun,
    GroupSpec, NestedFsFun, NomDfa, Node, OpSpec, OrbitDescriptor, OrbitFiniteSet, Perm, Quadruple,
    Source, TargetExpr, TermGraph, Value,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::Error;

fn model(e: nomfix_core::Error) -> Error {
    Error::Model(e)
}

fn atoms(xs: &[u32]) -> Vec<Atom> {
    xs.iter().copied().map(Atom).collect()
}

fn ids(xs: &[Atom]) -> Vec<u32> {
    xs.iter().map(|a| a.0).collect()
}

/// Serialises with two-space indentation and a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON mirrors always serialise");
    s.push('\n');
    s
}

pub fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(Error::Json)
}

// Permutations and atom sets.

pub fn perm_to_json(p: &Perm) -> Vec<[u32; 2]> {
    p.pairs().map(|(a, b)| [a.0, b.0]).collect()
}

pub fn perm_from_json(pairs: &[[u32; 2]]) -> Result<Perm, Error> {
    Perm::from_pairs(pairs.iter().map(|&[a, b]| (Atom(a), Atom(b))))
        .ok_or_else(|| Error::Invalid("pairs do not form a permutation".into()))
}

pub fn atom_set_to_json(s: &AtomSet) -> Vec<u32> {
    s.iter().map(|a| a.0).collect()
}

// Orbit-finite sets.

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitJson {
    pub name: String,
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSetJson {
    pub orbits: Vec<OrbitJson>,
}

pub fn orbits_from_json(orbits: &[OrbitJson]) -> Result<Arc<OrbitFiniteSet>, Error> {
    let descriptors = orbits
        .iter()
        .map(|o| {
            CoordGroup::new(o.degree, o.generators.clone())
                .map(|g| OrbitDescriptor::new(o.name.clone(), g))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(model)?;
    OrbitFiniteSet::new(descriptors).map_err(model)
}

pub fn orbits_to_json(set: &OrbitFiniteSet) -> Vec<OrbitJson> {
    set.orbits()
        .iter()
        .map(|o| OrbitJson {
            name: o.name.clone(),
            degree: o.degree(),
            generators: o.symmetry.generators().to_vec(),
        })
        .collect()
}

pub fn orbit_set_from_json(j: &OrbitSetJson) -> Result<Arc<OrbitFiniteSet>, Error> {
    orbits_from_json(&j.orbits)
}

pub fn orbit_set_to_json(set: &OrbitFiniteSet) -> OrbitSetJson {
    OrbitSetJson {
        orbits: orbits_to_json(set),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub orbit: String,
    pub registers: Vec<u32>,
}

pub fn element_from_json(set: &Arc<OrbitFiniteSet>, j: &ElementJson) -> Result<Element, Error> {
    set.element(&j.orbit, atoms(&j.registers)).map_err(model)
}

pub fn element_to_json(e: &Element) -> ElementJson {
    ElementJson {
        orbit: e.orbit_name().to_string(),
        registers: ids(e.registers()),
    }
}

// Values, abstractions and functions.
//
// A value is an integer (atom), a string (label), an array (tuple), or an
// object: {"binder","body"} for abstractions, {"a","d","keys","vals"} for
// functions, {"orbit","registers"} for elements of the set in scope.

pub fn value_to_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Atom(a) => json!(a.0),
        Value::Label(l) => json!(l),
        Value::Tuple(xs) => serde_json::Value::Array(xs.iter().map(value_to_json).collect()),
        Value::Elem(e) => serde_json::to_value(element_to_json(e)).expect("plain struct"),
        Value::Abs(a) => json!({ "binder": a.binder().0, "body": value_to_json(a.body()) }),
        Value::Fun(f) => fs_fun_to_json(f),
    }
}

pub fn fs_fun_to_json(f: &FsFun<Value>) -> serde_json::Value {
    json!({
        "a": f.default_atom().0,
        "d": value_to_json(f.default_value()),
        "keys": ids(f.keys()),
        "vals": f.values().iter().map(value_to_json).collect::<Vec<_>>(),
    })
}

pub fn abstraction_to_json(a: &Abstraction<Value>) -> serde_json::Value {
    value_to_json(&Value::from(a.clone()))
}

fn object_keys(map: &serde_json::Map<String, serde_json::Value>) -> BTreeSet<&str> {
    map.keys().map(String::as_str).collect()
}

fn atom_from_json(v: &serde_json::Value) -> Result<Atom, Error> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .map(Atom)
        .ok_or_else(|| Error::Invalid(format!("expected an atom, found {v}")))
}

/// Decodes a value; `set` resolves element objects.
pub fn value_from_json(v: &serde_json::Value, set: Option<&Arc<OrbitFiniteSet>>) -> Result<Value, Error> {
    use serde_json::Value as J;
    match v {
        J::Number(_) => atom_from_json(v).map(Value::Atom),
        J::String(s) => Ok(Value::Label(s.clone())),
        J::Array(xs) => xs
            .iter()
            .map(|x| value_from_json(x, set))
            .collect::<Result<_, _>>()
            .map(Value::Tuple),
        J::Object(map) => {
            let keys = object_keys(map);
            if keys == BTreeSet::from(["binder", "body"]) {
                let binder = atom_from_json(&map["binder"])?;
                let body = value_from_json(&map["body"], set)?;
                Ok(Value::from(Abstraction::new(binder, body)))
            } else if keys == BTreeSet::from(["a", "d", "keys", "vals"]) {
                fs_fun_from_json(v, set).map(Value::from)
            } else if keys == BTreeSet::from(["orbit", "registers"]) {
                let set = set.ok_or_else(|| {
                    Error::Invalid("element value without an orbit-finite set in scope".into())
                })?;
                let e: ElementJson = serde_json::from_value(v.clone()).map_err(Error::Json)?;
                element_from_json(set, &e).map(Value::Elem)
            } else {
                Err(Error::Invalid(format!("unrecognised value object with keys {keys:?}")))
            }
        }
        other => Err(Error::Invalid(format!("unsupported value {other}"))),
    }
}

pub fn fs_fun_from_json(
    v: &serde_json::Value,
    set: Option<&Arc<OrbitFiniteSet>>,
) -> Result<FsFun<Value>, Error> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Invalid("a function must be an object".into()))?;
    let field = |k: &str| {
        map.get(k)
            .ok_or_else(|| Error::Invalid(format!("function object lacks `{k}`")))
    };
    let a = atom_from_json(field("a")?)?;
    let d = value_from_json(field("d")?, set)?;
    let keys = field("keys")?
        .as_array()
        .ok_or_else(|| Error::Invalid("`keys` must be an array".into()))?
        .iter()
        .map(atom_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    let vals = field("vals")?
        .as_array()
        .ok_or_else(|| Error::Invalid("`vals` must be an array".into()))?
        .iter()
        .map(|x| value_from_json(x, set))
        .collect::<Result<Vec<_>, _>>()?;
    let q = Quadruple::new(a, d, keys, vals).map_err(model)?;
    Ok(FsFun::from_quadruple(q))
}

/// A function out of `V^{n≠}`: the nested function object plus `"arity"`.
/// Arity 0 carries its plain value under `"value"`.
pub fn distinct_fun_to_json(f: &DistinctFsFun) -> serde_json::Value {
    let root = f.inner().root();
    match (f.arity(), root) {
        (n, Value::Fun(g)) if n > 0 => {
            let mut obj = fs_fun_to_json(g);
            obj["arity"] = json!(n);
            obj
        }
        _ => json!({ "arity": 0, "value": value_to_json(root) }),
    }
}

pub fn distinct_fun_from_json(
    v: &serde_json::Value,
    set: Option<&Arc<OrbitFiniteSet>>,
) -> Result<DistinctFsFun, Error> {
    let mut map = v
        .as_object()
        .cloned()
        .ok_or_else(|| Error::Invalid("a function must be an object".into()))?;
    let arity = map
        .remove("arity")
        .and_then(|n| n.as_u64())
        .ok_or_else(|| Error::Invalid("missing `arity`".into()))? as usize;
    let root = if arity == 0 {
        value_from_json(
            map.get("value")
                .ok_or_else(|| Error::Invalid("arity-0 function lacks `value`".into()))?,
            set,
        )?
    } else {
        Value::from(fs_fun_from_json(&serde_json::Value::Object(map), set)?)
    };
    let nested = NestedFsFun::new(arity, root).map_err(model)?;
    Ok(DistinctFsFun::restrict(nested))
}

// Signatures and term graphs.

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecJson {
    pub bound: usize,
    pub children: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpJson {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub atoms: usize,
    pub groups: Vec<GroupSpecJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureJson {
    pub ops: Vec<OpJson>,
}

pub fn signature_from_json(j: &SignatureJson) -> Result<BindingSignature, Error> {
    let ops = j
        .ops
        .iter()
        .map(|o| {
            OpSpec::new(
                o.name.clone(),
                o.atoms,
                o.groups
                    .iter()
                    .map(|g| GroupSpec {
                        bound: g.bound,
                        children: g.children,
                    })
                    .collect(),
            )
            .with_labels(o.labels.clone())
        })
        .collect();
    BindingSignature::new(ops).map_err(model)
}

pub fn signature_to_json(sig: &BindingSignature) -> SignatureJson {
    SignatureJson {
        ops: sig
            .ops()
            .iter()
            .map(|o| OpJson {
                name: o.name.clone(),
                labels: o.labels.clone(),
                atoms: o.atoms,
                groups: o
                    .groups
                    .iter()
                    .map(|g| GroupSpecJson {
                        bound: g.bound,
                        children: g.children,
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// Signatures that graph files may refer to by name.
pub fn builtin_signature(name: &str) -> Option<BindingSignature> {
    match name {
        "lambda" => Some(BindingSignature::lambda()),
        _ => None,
    }
}

/// A graph's signature: a builtin name or an inline signature.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SigRef {
    Named(String),
    Inline(SignatureJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub bound_atoms: Vec<u32>,
    pub children: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeJson {
    pub op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub atoms: Vec<u32>,
    #[serde(default)]
    pub groups: Vec<GroupJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub sig: SigRef,
    pub states: BTreeMap<String, NodeJson>,
}

/// Decodes a graph and checks it; violations are reported together.
pub fn graph_from_json(j: &GraphJson) -> Result<TermGraph, Error> {
    let sig = match &j.sig {
        SigRef::Named(name) => builtin_signature(name)
            .ok_or_else(|| Error::Invalid(format!("unknown signature `{name}`")))?,
        SigRef::Inline(s) => signature_from_json(s)?,
    };
    let states = j
        .states
        .iter()
        .map(|(name, n)| {
            let node = Node {
                op: n.op.clone(),
                label: n.label.clone(),
                atoms: atoms(&n.atoms),
                groups: n
                    .groups
                    .iter()
                    .map(|g| Group {
                        bound_atoms: atoms(&g.bound_atoms),
                        children: g.children.clone(),
                    })
                    .collect(),
            };
            (name.clone(), node)
        })
        .collect();
    let graph = TermGraph::new(Arc::new(sig), states);
    let violations = graph.validate();
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Error::Invalid(lines.join("; ")));
    }
    Ok(graph)
}

pub fn graph_to_json(g: &TermGraph) -> GraphJson {
    let sig = if **g.signature() == BindingSignature::lambda() {
        SigRef::Named("lambda".into())
    } else {
        SigRef::Inline(signature_to_json(g.signature()))
    };
    let states = g
        .states()
        .iter()
        .map(|(name, n)| {
            let node = NodeJson {
                op: n.op.clone(),
                label: n.label.clone(),
                atoms: ids(&n.atoms),
                groups: n
                    .groups
                    .iter()
                    .map(|gr| GroupJson {
                        bound_atoms: ids(&gr.bound_atoms),
                        children: gr.children.clone(),
                    })
                    .collect(),
            };
            (name.clone(), node)
        })
        .collect();
    GraphJson { sig, states }
}

// Automata.

/// A register source: an index, or the string `"input"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SourceJson {
    Reg(usize),
    Named(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetJson {
    pub orbit: String,
    pub sources: Vec<SourceJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionsJson {
    #[serde(default)]
    pub equal: BTreeMap<String, TargetJson>,
    pub fresh: TargetJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonJson {
    pub orbits: Vec<OrbitJson>,
    pub initial: String,
    pub accepting: Vec<String>,
    pub delta: BTreeMap<String, TransitionsJson>,
}

fn target_from_json(t: &TargetJson) -> Result<TargetExpr, Error> {
    let sources = t
        .sources
        .iter()
        .map(|s| match s {
            SourceJson::Reg(i) => Ok(Source::Reg(*i)),
            SourceJson::Named(n) if n == "input" => Ok(Source::Input),
            SourceJson::Named(n) => Err(Error::Invalid(format!("unknown register source `{n}`"))),
        })
        .collect::<Result<_, _>>()?;
    Ok(TargetExpr::new(t.orbit.clone(), sources))
}

fn target_to_json(t: &TargetExpr) -> TargetJson {
    TargetJson {
        orbit: t.orbit.clone(),
        sources: t
            .sources
            .iter()
            .map(|s| match s {
                Source::Reg(i) => SourceJson::Reg(*i),
                Source::Input => SourceJson::Named("input".into()),
            })
            .collect(),
    }
}

pub fn automaton_from_json(j: &AutomatonJson) -> Result<NomDfa, Error> {
    let states = orbits_from_json(&j.orbits)?;
    let mut delta = BTreeMap::new();
    for (orbit, t) in &j.delta {
        let mut equal = BTreeMap::new();
        for (reg, target) in &t.equal {
            let reg: usize = reg
                .parse()
                .map_err(|_| Error::Invalid(format!("orbit `{orbit}`: bad register index `{reg}`")))?;
            equal.insert(reg, target_from_json(target)?);
        }
        let fresh = target_from_json(&t.fresh)?;
        delta.insert(orbit.clone(), Transitions { equal, fresh });
    }
    let accepting: BTreeSet<String> = j.accepting.iter().cloned().collect();
    NomDfa::new(states, &j.initial, &accepting, delta).map_err(model)
}

pub fn automaton_to_json(d: &NomDfa) -> AutomatonJson {
    AutomatonJson {
        orbits: orbits_to_json(d.states()),
        initial: d.initial_name().to_string(),
        accepting: d.accepting_names().into_iter().collect(),
        delta: d
            .transitions()
            .iter()
            .map(|(orbit, t)| {
                let equal = t
                    .equal
                    .iter()
                    .map(|(j, target)| (j.to_string(), target_to_json(target)))
                    .collect();
                let fresh = target_to_json(&t.fresh);
                (orbit.clone(), TransitionsJson { equal, fresh })
            })
            .collect(),
    }
}
