//! Seeded random instances shared by the integration suites.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use nomfix_core::nomauto::Transitions;
use nomfix_core::termgraph::Group;
use nomfix_core::{
    Atom, AtomSet, BindingSignature, Node, NomDfa, OrbitDescriptor, OrbitFiniteSet, Perm, Source,
    TargetExpr, TermGraph, Value,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn atom(rng: &mut StdRng, below: u32) -> Atom {
    Atom(rng.gen_range(0..below))
}

pub fn atom_set(rng: &mut StdRng, max_len: usize, below: u32) -> AtomSet {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| atom(rng, below)).collect()
}

pub fn distinct_atoms(rng: &mut StdRng, n: usize, below: u32) -> Vec<Atom> {
    let mut pool: Vec<Atom> = (0..below).map(Atom).collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}

/// A permutation moving at most `max_moved` atoms below `below`.
pub fn perm(rng: &mut StdRng, max_moved: usize, below: u32) -> Perm {
    let k = rng.gen_range(0..=max_moved.min(below as usize));
    let domain = distinct_atoms(rng, k, below);
    let mut image = domain.clone();
    image.shuffle(rng);
    Perm::from_pairs(domain.into_iter().zip(image)).expect("shuffle is a bijection")
}

/// A permutation fixing every atom of `fixed`.
pub fn perm_fixing(rng: &mut StdRng, fixed: &AtomSet, below: u32) -> Perm {
    let mut free: Vec<Atom> = (0..below).map(Atom).filter(|a| !fixed.contains(a)).collect();
    free.shuffle(rng);
    let k = rng.gen_range(0..=free.len());
    let domain: Vec<Atom> = free[..k].to_vec();
    let mut image = domain.clone();
    image.shuffle(rng);
    Perm::from_pairs(domain.into_iter().zip(image)).expect("shuffle is a bijection")
}

/// A small value: atoms, labels and short tuples of them.
pub fn plain_value(rng: &mut StdRng, below: u32, depth: usize) -> Value {
    match rng.gen_range(0..if depth == 0 { 2 } else { 3 }) {
        0 => Value::Atom(atom(rng, below)),
        1 => Value::Label(["x", "y"][rng.gen_range(0..2)].into()),
        _ => {
            let n = rng.gen_range(0..=3);
            Value::Tuple((0..n).map(|_| plain_value(rng, below, depth - 1)).collect())
        }
    }
}

fn state(i: usize) -> String {
    format!("s{i}")
}

/// A λ-signature graph; the start state is `s0`.
pub fn lambda_graph(rng: &mut StdRng, max_states: usize, atoms: u32) -> TermGraph {
    let n = rng.gen_range(1..=max_states);
    let mut states = BTreeMap::new();
    for i in 0..n {
        let child = |rng: &mut StdRng| state(rng.gen_range(0..n));
        let node = match rng.gen_range(0..3) {
            0 => Node::new(
                "lam",
                vec![],
                vec![Group {
                    bound_atoms: vec![atom(rng, atoms)],
                    children: vec![child(rng)],
                }],
            ),
            1 => Node::new(
                "app",
                vec![],
                vec![Group {
                    bound_atoms: vec![],
                    children: vec![child(rng), child(rng)],
                }],
            ),
            _ => Node::new("var", vec![atom(rng, atoms)], vec![]),
        };
        states.insert(state(i), node);
    }
    TermGraph::new(Arc::new(BindingSignature::lambda()), states)
}

/// Renames the binder of one random `lam` node.
pub fn rename_one_binder(rng: &mut StdRng, g: &TermGraph, atoms: u32) -> TermGraph {
    let mut states = g.states().clone();
    let lams: Vec<String> = states
        .iter()
        .filter(|(_, n)| n.op == "lam")
        .map(|(k, _)| k.clone())
        .collect();
    if let Some(k) = lams.choose(rng) {
        let node = states.get_mut(k).unwrap();
        node.groups[0].bound_atoms[0] = atom(rng, atoms);
    }
    TermGraph::new(Arc::clone(g.signature()), states)
}

/// Duplicates every state, wiring children randomly to either copy; the
/// result denotes the same raw trees.
pub fn unroll(rng: &mut StdRng, g: &TermGraph) -> TermGraph {
    let mut states = BTreeMap::new();
    for (k, n) in g.states() {
        for copy in ["", "'"] {
            let mut n = n.clone();
            for gr in &mut n.groups {
                for c in &mut gr.children {
                    if rng.gen_bool(0.5) {
                        c.push('\'');
                    }
                }
            }
            states.insert(format!("{k}{copy}"), n);
        }
    }
    TermGraph::new(Arc::clone(g.signature()), states)
}

pub fn strong_set(degrees: &[(String, usize)]) -> Arc<OrbitFiniteSet> {
    OrbitFiniteSet::new(
        degrees
            .iter()
            .map(|(n, d)| OrbitDescriptor::distinct_tuples(n.clone(), *d).unwrap())
            .collect(),
    )
    .unwrap()
}

fn target(rng: &mut StdRng, orbits: &[(String, usize)], pool: &[Source]) -> TargetExpr {
    loop {
        let (name, degree) = orbits.choose(rng).unwrap();
        if *degree <= pool.len() {
            let mut p = pool.to_vec();
            p.shuffle(rng);
            p.truncate(*degree);
            return TargetExpr::new(name.clone(), p);
        }
    }
}

fn orbit_list(d: &NomDfa) -> Vec<(String, usize)> {
    d.states().orbits().iter().map(|o| (o.name.clone(), o.degree())).collect()
}

/// An automaton with orbits `q0..`; `q0` has degree 0 and is initial.
pub fn automaton(rng: &mut StdRng, max_orbits: usize, max_degree: usize) -> NomDfa {
    let k = rng.gen_range(1..=max_orbits);
    let degrees: Vec<usize> = (0..k)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..=max_degree) })
        .collect();
    let names: Vec<(String, usize)> = degrees.iter().enumerate().map(|(i, &d)| (format!("q{i}"), d)).collect();
    let mut delta = BTreeMap::new();
    for (name, n) in &names {
        let regs: Vec<Source> = (0..*n).map(Source::Reg).collect();
        let equal = (0..*n).map(|j| (j, target(rng, &names, &regs))).collect();
        let mut with_input = regs.clone();
        with_input.push(Source::Input);
        let fresh = target(rng, &names, &with_input);
        delta.insert(name.clone(), Transitions { equal, fresh });
    }
    let accepting: BTreeSet<String> = (0..k).filter(|_| rng.gen_bool(0.5)).map(|i| format!("q{i}")).collect();
    NomDfa::new(strong_set(&names), "q0", &accepting, delta).expect("generated automata are valid")
}

/// The same automaton with its orbits renamed and listed in another order.
pub fn renamed(rng: &mut StdRng, d: &NomDfa) -> NomDfa {
    let rename = |s: &str| format!("r_{s}");
    let mut orbits: Vec<(String, usize)> = orbit_list(d).into_iter().map(|(n, k)| (rename(&n), k)).collect();
    orbits.shuffle(rng);
    let target = |t: &TargetExpr| TargetExpr::new(rename(&t.orbit), t.sources.clone());
    let delta = d
        .transitions()
        .iter()
        .map(|(k, t)| {
            let equal = t.equal.iter().map(|(j, e)| (*j, target(e))).collect();
            (rename(k), Transitions { equal, fresh: target(&t.fresh) })
        })
        .collect();
    let accepting = d.accepting_names().iter().map(|s| rename(s)).collect();
    NomDfa::new(strong_set(&orbits), &rename(d.initial_name()), &accepting, delta).unwrap()
}

/// Redirects one transition at random.
pub fn mutate(rng: &mut StdRng, d: &NomDfa) -> NomDfa {
    let orbits = orbit_list(d);
    let mut delta = d.transitions().clone();
    let keys: Vec<String> = delta.keys().cloned().collect();
    let key = keys.choose(rng).unwrap().clone();
    let n = d.states().orbits()[d.states().orbit_index(&key).unwrap()].degree();
    let t = delta.get_mut(&key).unwrap();
    let regs: Vec<Source> = (0..n).map(Source::Reg).collect();
    if n > 0 && rng.gen_bool(0.5) {
        let j = rng.gen_range(0..n);
        t.equal.insert(j, target(rng, &orbits, &regs));
    } else {
        let mut with_input = regs;
        with_input.push(Source::Input);
        t.fresh = target(rng, &orbits, &with_input);
    }
    NomDfa::new(Arc::clone(d.states()), d.initial_name(), &d.accepting_names(), delta).unwrap()
}

/// All words of exactly `len` letters over atoms `0..pool`.
pub fn words(len: usize, pool: u32) -> Vec<Vec<Atom>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..pool).map(move |a| {
                    let mut w = w.clone();
                    w.push(Atom(a));
                    w
                })
            })
            .collect();
    }
    out
}
