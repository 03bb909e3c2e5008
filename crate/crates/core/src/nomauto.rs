//! Deterministic nominal automata over the atom alphabet.
//!
//! States form a strong orbit-finite set: a state is an orbit together with
//! a tuple of distinct atoms held in registers. On input `b`, a state with
//! registers `r` takes its `equal` transition for index `j` when `b = r[j]`
//! and its `fresh` transition otherwise. Targets are assembled from
//! register indices and the input only, so no concrete atom ever appears
//! in a transition table and every run is equivariant.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::nomset::{Element, OrbitFiniteSet};
use crate::perm::{fresh, Atom};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    Reg(usize),
    Input,
}

/// Target orbit and where each of its registers comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetExpr {
    pub orbit: String,
    pub sources: Vec<Source>,
}

impl TargetExpr {
    pub fn new(orbit: impl Into<String>, sources: Vec<Source>) -> Self {
        TargetExpr {
            orbit: orbit.into(),
            sources,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transitions {
    /// Keyed by register index; one entry per register.
    pub equal: BTreeMap<usize, TargetExpr>,
    pub fresh: TargetExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Target {
    orbit: usize,
    sources: Vec<Source>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Compiled {
    equal: Vec<Target>,
    fresh: Target,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NomDfa {
    states: Arc<OrbitFiniteSet>,
    initial: usize,
    accepting: Vec<bool>,
    delta: BTreeMap<String, Transitions>,
    compiled: Vec<Compiled>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidAutomaton(msg)
}

impl NomDfa {
    pub fn new(
        states: Arc<OrbitFiniteSet>,
        initial: &str,
        accepting: &BTreeSet<String>,
        delta: BTreeMap<String, Transitions>,
    ) -> Result<Self> {
        if !states.is_strong() {
            return Err(invalid("state orbits must have trivial symmetry".into()));
        }
        let initial_idx = states
            .orbit_index(initial)
            .ok_or_else(|| Error::UnknownOrbit(initial.into()))?;
        if states.orbits()[initial_idx].degree() != 0 {
            return Err(invalid(alloc::format!("initial orbit `{initial}` must have degree 0")));
        }
        let mut accepting_flags = alloc::vec![false; states.orbits().len()];
        for name in accepting {
            let i = states
                .orbit_index(name)
                .ok_or_else(|| Error::UnknownOrbit(name.clone()))?;
            accepting_flags[i] = true;
        }
        for name in delta.keys() {
            if states.orbit_index(name).is_none() {
                return Err(Error::UnknownOrbit(name.clone()));
            }
        }

        let mut compiled = Vec::with_capacity(states.orbits().len());
        for orbit in states.orbits() {
            let degree = orbit.degree();
            let t = delta
                .get(&orbit.name)
                .ok_or_else(|| invalid(alloc::format!("orbit `{}` has no transitions", orbit.name)))?;
            if let Some(&j) = t.equal.keys().find(|&&j| j >= degree) {
                return Err(invalid(alloc::format!(
                    "orbit `{}`: equal case for register {j}, but degree is {degree}",
                    orbit.name
                )));
            }
            let mut equal = Vec::with_capacity(degree);
            for j in 0..degree {
                let expr = t.equal.get(&j).ok_or_else(|| {
                    invalid(alloc::format!("orbit `{}`: no equal case for register {j}", orbit.name))
                })?;
                equal.push(resolve_target(&states, &orbit.name, degree, expr, Some(j))?);
            }
            let fresh = resolve_target(&states, &orbit.name, degree, &t.fresh, None)?;
            compiled.push(Compiled { equal, fresh });
        }

        Ok(NomDfa {
            states,
            initial: initial_idx,
            accepting: accepting_flags,
            delta,
            compiled,
        })
    }

    pub fn states(&self) -> &Arc<OrbitFiniteSet> {
        &self.states
    }

    pub fn initial_name(&self) -> &str {
        &self.states.orbits()[self.initial].name
    }

    pub fn accepting_names(&self) -> BTreeSet<String> {
        self.states
            .orbits()
            .iter()
            .zip(&self.accepting)
            .filter(|(_, &acc)| acc)
            .map(|(o, _)| o.name.clone())
            .collect()
    }

    pub fn transitions(&self) -> &BTreeMap<String, Transitions> {
        &self.delta
    }

    pub fn initial(&self) -> Element {
        Element::from_index(&self.states, self.initial, Vec::new()).expect("degree-0 orbit")
    }

    pub fn is_accepting(&self, e: &Element) -> bool {
        self.accepting[e.orbit_index()]
    }

    fn step_raw(&self, orbit: usize, regs: &[Atom], b: Atom) -> (usize, Vec<Atom>) {
        let c = &self.compiled[orbit];
        let target = match regs.iter().position(|&r| r == b) {
            Some(j) => &c.equal[j],
            None => &c.fresh,
        };
        let next = target
            .sources
            .iter()
            .map(|s| match *s {
                Source::Reg(i) => regs[i],
                Source::Input => b,
            })
            .collect();
        (target.orbit, next)
    }

    pub fn step(&self, e: &Element, b: Atom) -> Result<Element> {
        if !(Arc::ptr_eq(e.set(), &self.states) || **e.set() == *self.states) {
            return Err(Error::SetMismatch);
        }
        let (orbit, regs) = self.step_raw(e.orbit_index(), e.registers(), b);
        Element::from_index(&self.states, orbit, regs)
    }

    pub fn accepts(&self, word: &[Atom]) -> bool {
        let (mut orbit, mut regs) = (self.initial, Vec::new());
        for &b in word {
            (orbit, regs) = self.step_raw(orbit, &regs, b);
        }
        self.accepting[orbit]
    }

    fn max_degree(&self) -> usize {
        self.states.orbits().iter().map(|o| o.degree()).max().unwrap_or(0)
    }
}

fn resolve_target(
    states: &OrbitFiniteSet,
    source_orbit: &str,
    degree: usize,
    expr: &TargetExpr,
    equal_to: Option<usize>,
) -> Result<Target> {
    let orbit = states
        .orbit_index(&expr.orbit)
        .ok_or_else(|| Error::UnknownOrbit(expr.orbit.clone()))?;
    let target_degree = states.orbits()[orbit].degree();
    if expr.sources.len() != target_degree {
        return Err(invalid(alloc::format!(
            "orbit `{source_orbit}`: target `{}` needs {target_degree} source(s), got {}",
            expr.orbit,
            expr.sources.len()
        )));
    }
    // Under an equal case the input is register `j`.
    let mut seen = BTreeSet::new();
    for s in &expr.sources {
        let effective = match (*s, equal_to) {
            (Source::Reg(i), _) if i >= degree => {
                return Err(invalid(alloc::format!(
                    "orbit `{source_orbit}`: register {i} out of range"
                )))
            }
            (Source::Input, Some(j)) => Source::Reg(j),
            (s, _) => s,
        };
        if !seen.insert(effective) {
            return Err(invalid(alloc::format!(
                "orbit `{source_orbit}`: target `{}` repeats a register",
                expr.orbit
            )));
        }
    }
    Ok(Target {
        orbit,
        sources: expr.sources.clone(),
    })
}

/// A pair of concrete states.
type PairState = (usize, Vec<Atom>, usize, Vec<Atom>);

/// Renames the atoms of a pair to `0, 1, …` in order of first appearance.
fn pattern(p: &PairState) -> (usize, Vec<usize>, usize, Vec<usize>) {
    let mut order: Vec<Atom> = Vec::new();
    let mut code = |a: &Atom| match order.iter().position(|x| x == a) {
        Some(i) => i,
        None => {
            order.push(*a);
            order.len() - 1
        }
    };
    let left = p.1.iter().map(&mut code).collect();
    let right = p.3.iter().map(&mut code).collect();
    (p.0, left, p.2, right)
}

/// A shortest word on which the automata disagree, or `None` if they
/// accept the same language.
///
/// Explores pairs of states modulo joint renaming. From a pair it suffices
/// to try the atoms in either register tuple plus a single atom fresh for
/// both: all fresh atoms are related by a permutation fixing the pair.
pub fn counterexample(d1: &NomDfa, d2: &NomDfa) -> Option<Vec<Atom>> {
    let start: PairState = (d1.initial, Vec::new(), d2.initial, Vec::new());
    let mut seen = BTreeSet::from([pattern(&start)]);
    let mut queue = VecDeque::from([(start, Vec::new())]);
    while let Some((pair, word)) = queue.pop_front() {
        if d1.accepting[pair.0] != d2.accepting[pair.2] {
            return Some(word);
        }
        let used: BTreeSet<Atom> = pair.1.iter().chain(&pair.3).copied().collect();
        let inputs = used.iter().copied().chain(core::iter::once(fresh(&used)));
        for b in inputs {
            let (o1, r1) = d1.step_raw(pair.0, &pair.1, b);
            let (o2, r2) = d2.step_raw(pair.2, &pair.3, b);
            let next = (o1, r1, o2, r2);
            if seen.insert(pattern(&next)) {
                let mut w = word.clone();
                w.push(b);
                queue.push_back((next, w));
            }
        }
    }
    None
}

pub fn equivalent(d1: &NomDfa, d2: &NomDfa) -> bool {
    counterexample(d1, d2).is_none()
}

/// Compares the automata on every word of length at most `max_len` over
/// the atoms `0..pool`. Returns a shortest disagreeing word, if any.
///
/// Words reaching the same concrete pair of states have the same futures,
/// so each pair is expanded once.
pub fn brute_counterexample(d1: &NomDfa, d2: &NomDfa, max_len: usize, pool: u32) -> Option<Vec<Atom>> {
    let start: PairState = (d1.initial, Vec::new(), d2.initial, Vec::new());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut layer = alloc::vec![(start, Vec::new())];
    for len in 0..=max_len {
        for (pair, word) in &layer {
            if d1.accepting[pair.0] != d2.accepting[pair.2] {
                return Some(word.clone());
            }
        }
        if len == max_len {
            break;
        }
        let mut next_layer = Vec::new();
        for (pair, word) in &layer {
            for b in (0..pool).map(Atom) {
                let (o1, r1) = d1.step_raw(pair.0, &pair.1, b);
                let (o2, r2) = d2.step_raw(pair.2, &pair.3, b);
                let next = (o1, r1, o2, r2);
                if seen.insert(next.clone()) {
                    let mut w = word.clone();
                    w.push(b);
                    next_layer.push((next, w));
                }
            }
        }
        if next_layer.is_empty() {
            break;
        }
        layer = next_layer;
    }
    None
}

pub fn brute_equiv(d1: &NomDfa, d2: &NomDfa, max_len: usize, pool: u32) -> bool {
    brute_counterexample(d1, d2, max_len, pool).is_none()
}

/// Bounds at which [`brute_equiv`] decides equivalence: a pool with room
/// for both register tuples plus one fresh atom, and a length covering
/// every register pattern a pair of states can have.
pub fn sound_brute_bounds(d1: &NomDfa, d2: &NomDfa) -> (usize, u32) {
    let pool = d1.max_degree() + d2.max_degree() + 1;
    let mut patterns = 0usize;
    for o1 in d1.states.orbits() {
        for o2 in d2.states.orbits() {
            patterns += partial_matchings(o1.degree(), o2.degree());
        }
    }
    (patterns, pool as u32)
}

/// `Σ_k C(n,k)·C(m,k)·k!`: ways two distinct tuples can share atoms.
fn partial_matchings(n: usize, m: usize) -> usize {
    fn choose(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    (0..=n.min(m))
        .map(|k| choose(n, k) * choose(m, k) * (1..=k).product::<usize>())
        .sum()
}
