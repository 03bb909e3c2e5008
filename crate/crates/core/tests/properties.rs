//! Cross-module invariants over random instances.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use nomfix_core::nomauto::Transitions;
use nomfix_core::termgraph::{alpha_bisim, raw_bisim, Group};
use nomfix_core::{
    Atom, AtomSet, BindingSignature, CoordGroup, FsFun, Node, NomDfa, Nominal, OrbitDescriptor,
    OrbitFiniteSet, Perm, Quadruple, Source, TargetExpr, TermGraph, Value,
};
use proptest::prelude::*;
use proptest::sample::Index;

fn arb_perm(below: u32) -> impl Strategy<Value = Perm> {
    prop::collection::vec((0..below, 0..below), 0..6).prop_map(|ts| {
        let ts: Vec<(Atom, Atom)> = ts.into_iter().map(|(a, b)| (Atom(a), Atom(b))).collect();
        Perm::from_transpositions(&ts)
    })
}

fn arb_element() -> impl Strategy<Value = nomfix_core::Element> {
    (0usize..=3, 0u8..3)
        .prop_flat_map(|(degree, kind)| {
            let regs = Just((0..10u32).collect::<Vec<_>>()).prop_shuffle();
            (Just(degree), Just(kind), regs)
        })
        .prop_map(|(degree, kind, regs)| {
            let group = match kind {
                0 => CoordGroup::trivial(degree),
                1 => CoordGroup::full(degree),
                _ => CoordGroup::cyclic(degree),
            }
            .unwrap();
            let set = OrbitFiniteSet::new(vec![OrbitDescriptor::new("o", group)]).unwrap();
            set.element("o", regs[..degree].iter().map(|&a| Atom(a)).collect()).unwrap()
        })
}

fn arb_value() -> impl Strategy<Value = Value> {
    let leaf = prop_oneof![(0u32..6).prop_map(Value::atom), Just(Value::Label("x".into()))];
    leaf.prop_recursive(2, 8, 3, |inner| prop::collection::vec(inner, 0..3).prop_map(Value::Tuple))
}

fn arb_quadruple() -> impl Strategy<Value = Quadruple<Value>> {
    (0u32..8, arb_value(), prop::collection::btree_map(0u32..8, arb_value(), 0..4)).prop_map(|(a, d, table)| {
        let (keys, vals): (Vec<Atom>, Vec<Value>) = table.into_iter().map(|(k, v)| (Atom(k), v)).unzip();
        Quadruple::new(Atom(a), d, keys, vals).unwrap()
    })
}

/// A λ-graph with states `s0..`: each entry picks an operation, an atom
/// and two children.
fn arb_graph() -> impl Strategy<Value = TermGraph> {
    (1usize..=4)
        .prop_flat_map(|n| prop::collection::vec((0u8..3, 0u32..4, 0..n, 0..n), n))
        .prop_map(|specs| {
            let states = specs
                .into_iter()
                .enumerate()
                .map(|(i, (op, x, c1, c2))| {
                    let node = match op {
                        0 => Node::new("lam", vec![], vec![Group { bound_atoms: vec![Atom(x)], children: vec![format!("s{c1}")] }]),
                        1 => Node::new("app", vec![], vec![Group { bound_atoms: vec![], children: vec![format!("s{c1}"), format!("s{c2}")] }]),
                        _ => Node::new("var", vec![Atom(x)], vec![]),
                    };
                    (format!("s{i}"), node)
                })
                .collect();
            TermGraph::new(Arc::new(BindingSignature::lambda()), states)
        })
}

/// An automaton with orbits `q0..` of degree ≤ 2, built from a stream of
/// choices.
fn arb_automaton() -> impl Strategy<Value = NomDfa> {
    (prop::collection::vec(0usize..=2, 0..3), prop::collection::vec(any::<Index>(), 40), prop::collection::vec(any::<bool>(), 3))
        .prop_map(|(rest, choices, acc)| {
            let mut degrees = vec![0];
            degrees.extend(rest);
            let names: Vec<String> = (0..degrees.len()).map(|i| format!("q{i}")).collect();
            let mut stream = choices.into_iter().cycle();
            let mut pick = |pool: &[Source]| {
                let fitting: Vec<usize> = (0..degrees.len()).filter(|&o| degrees[o] <= pool.len()).collect();
                let o = fitting[stream.next().unwrap().index(fitting.len())];
                let mut p = pool.to_vec();
                let mut sources = Vec::new();
                for _ in 0..degrees[o] {
                    sources.push(p.remove(stream.next().unwrap().index(p.len())));
                }
                TargetExpr::new(names[o].clone(), sources)
            };
            let mut delta = BTreeMap::new();
            for (i, &n) in degrees.iter().enumerate() {
                let regs: Vec<Source> = (0..n).map(Source::Reg).collect();
                let equal = (0..n).map(|j| (j, pick(&regs))).collect();
                let mut with_input = regs.clone();
                with_input.push(Source::Input);
                delta.insert(names[i].clone(), Transitions { equal, fresh: pick(&with_input) });
            }
            let accepting: BTreeSet<String> = names.iter().zip(acc).filter(|x| x.1).map(|x| x.0.clone()).collect();
            let set = OrbitFiniteSet::new(
                names.iter().zip(&degrees).map(|(n, &d)| OrbitDescriptor::distinct_tuples(n.clone(), d).unwrap()).collect(),
            )
            .unwrap();
            NomDfa::new(set, "q0", &accepting, delta).unwrap()
        })
}

fn image(p: &Perm, s: &AtomSet) -> AtomSet {
    s.iter().map(|&a| p.apply(a)).collect()
}

proptest! {
    #[test]
    fn element_action_laws(e in arb_element(), f in arb_perm(10), g in arb_perm(10)) {
        prop_assert_eq!(e.act(&Perm::identity()), e.clone());
        prop_assert_eq!(e.act(&g).act(&f), e.act(&f.compose(&g)));
        prop_assert_eq!(e.act(&f).support(), image(&f, &e.support()));
        prop_assert_eq!(e.act(&f).support().len(), e.support().len());
    }

    #[test]
    fn agreeing_on_the_support_is_enough(e in arb_element(), f in arb_perm(10), g in arb_perm(10)) {
        let agree = e.support().iter().all(|&a| f.apply(a) == g.apply(a));
        if agree {
            prop_assert_eq!(e.act(&f), e.act(&g));
        }
        let h = f.restrict(&e.support());
        prop_assert_eq!(e.act(&h), e.act(&f));
    }

    #[test]
    fn bar_q_is_equivariant(q in arb_quadruple(), p in arb_perm(10), b in 0u32..12) {
        let b = Atom(b);
        prop_assert_eq!(q.act(&p).apply(p.apply(b)), q.apply(b).act(&p));
        let f = FsFun::from_quadruple(q.clone());
        prop_assert_eq!(f.act(&p).apply(p.apply(b)), f.apply(b).act(&p));
    }

    #[test]
    fn canonical_form_is_exact_and_idempotent(q in arb_quadruple(), b in 0u32..14) {
        let f = FsFun::from_quadruple(q.clone());
        prop_assert_eq!(f.apply(Atom(b)), q.apply(Atom(b)));
        prop_assert_eq!(FsFun::from_quadruple(f.quadruple().clone()), f.clone());
        let keys: AtomSet = f.keys().iter().copied().collect();
        prop_assert_eq!(keys, nomfix_core::min_support(&Value::from(f.clone()), &q.mentioned_atoms()));
    }

    #[test]
    fn bisimilarities_are_equivalences(g1 in arb_graph(), g2 in arb_graph(), g3 in arb_graph()) {
        let s = "s0";
        for bisim in [raw_bisim, alpha_bisim] {
            prop_assert!(bisim(&g1, s, &g1, s).unwrap());
            let (a, b, c) = (bisim(&g1, s, &g2, s).unwrap(), bisim(&g2, s, &g3, s).unwrap(), bisim(&g1, s, &g3, s).unwrap());
            prop_assert_eq!(a, bisim(&g2, s, &g1, s).unwrap());
            prop_assert!(!(a && b) || c);
        }
    }

    #[test]
    fn unfolding_extends_truncation(g in arb_graph(), k in 0usize..6) {
        let deeper = g.unfold("s0", k + 1).unwrap();
        prop_assert_eq!(deeper.truncate(k), g.unfold("s0", k).unwrap());
    }

    #[test]
    fn free_atoms_stabilise(g in arb_graph()) {
        let reach = g.reachable("s0").unwrap();
        let free = g.free_atoms("s0").unwrap();
        let mentioned: AtomSet = reach.iter().flat_map(|s| g.node(s).unwrap().atoms.clone()).collect();
        prop_assert!(free.is_subset(&mentioned));
        prop_assert_eq!(g.unfold("s0", reach.len()).unwrap().free_atoms(), free.clone());
        prop_assert_eq!(g.unfold("s0", reach.len() + 2).unwrap().free_atoms(), free);
    }

    #[test]
    fn runs_are_equivariant(d in arb_automaton(), word in prop::collection::vec(0u32..5, 0..6), p in arb_perm(8)) {
        let w: Vec<Atom> = word.iter().map(|&a| Atom(a)).collect();
        let moved: Vec<Atom> = w.iter().map(|&a| p.apply(a)).collect();
        prop_assert_eq!(d.accepts(&w), d.accepts(&moved));
        let mut e = d.initial();
        for &b in &w {
            let next = d.step(&e, b).unwrap();
            prop_assert_eq!(d.step(&e.act(&p), p.apply(b)).unwrap(), next.act(&p));
            e = next;
        }
    }

    #[test]
    fn equivalence_matches_brute_force(d1 in arb_automaton(), d2 in arb_automaton()) {
        let (len, pool) = nomfix_core::nomauto::sound_brute_bounds(&d1, &d2);
        let symbolic = nomfix_core::nomauto::counterexample(&d1, &d2);
        prop_assert_eq!(symbolic.is_none(), nomfix_core::nomauto::brute_equiv(&d1, &d2, len, pool));
        if let Some(w) = symbolic {
            prop_assert_ne!(d1.accepts(&w), d2.accepts(&w));
        }
    }
}
