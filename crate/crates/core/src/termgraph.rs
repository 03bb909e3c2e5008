//! Binding signatures and finite term graphs.
//!
//! A term graph is a finite coalgebra: every state carries one node whose
//! children are again states. Each state denotes a rational, possibly
//! infinite tree. Two notions of equality of those trees are decidable:
//!
//! * raw equality ([`raw_bisim`]), where bound atoms are ordinary atoms;
//! * alpha-equivalence ([`alpha_bisim`]), where bound atoms may be renamed.
//!
//! A node of operation `op` has `atoms` free atom slots, then a list of
//! binder groups. A group with `bound = k` and `children = c` stands for
//! `[V]^k (X^c)`: `k` bound atoms scoping over `c` successors. The node's
//! own atom slots are outside the scope of its binders.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::nomset::pairwise_distinct;
use crate::perm::{Atom, AtomSet, Perm};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub bound: usize,
    pub children: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpSpec {
    pub name: String,
    /// Allowed labels; empty means the operation carries no label.
    pub labels: Vec<String>,
    pub atoms: usize,
    pub groups: Vec<GroupSpec>,
}

impl OpSpec {
    pub fn new(name: impl Into<String>, atoms: usize, groups: Vec<GroupSpec>) -> Self {
        OpSpec {
            name: name.into(),
            labels: Vec::new(),
            atoms,
            groups,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = labels;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingSignature {
    ops: Vec<OpSpec>,
}

impl BindingSignature {
    pub fn new(ops: Vec<OpSpec>) -> Result<Self> {
        let mut names = BTreeSet::new();
        for op in &ops {
            if !names.insert(op.name.as_str()) {
                return Err(Error::Config(alloc::format!("duplicate operation `{}`", op.name)));
            }
            if op.groups.iter().any(|g| g.children == 0) {
                return Err(Error::Config(alloc::format!(
                    "operation `{}` has a binder group without children",
                    op.name
                )));
            }
        }
        Ok(BindingSignature { ops })
    }

    /// `lam` binds one atom over one child, `app` has two children, `var`
    /// holds one free atom.
    pub fn lambda() -> Self {
        BindingSignature {
            ops: alloc::vec![
                OpSpec::new("lam", 0, alloc::vec![GroupSpec { bound: 1, children: 1 }]),
                OpSpec::new("app", 0, alloc::vec![GroupSpec { bound: 0, children: 2 }]),
                OpSpec::new("var", 1, Vec::new()),
            ],
        }
    }

    pub fn ops(&self) -> &[OpSpec] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&OpSpec> {
        self.ops.iter().find(|o| o.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub bound_atoms: Vec<Atom>,
    pub children: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub op: String,
    pub label: Option<String>,
    pub atoms: Vec<Atom>,
    pub groups: Vec<Group>,
}

impl Node {
    pub fn new(op: impl Into<String>, atoms: Vec<Atom>, groups: Vec<Group>) -> Self {
        Node {
            op: op.into(),
            label: None,
            atoms,
            groups,
        }
    }

    fn mentioned_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.atoms
            .iter()
            .chain(self.groups.iter().flat_map(|g| g.bound_atoms.iter()))
            .copied()
    }
}

/// A problem found by [`TermGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub state: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "state `{}`: {}", self.state, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermGraph {
    sig: Arc<BindingSignature>,
    states: BTreeMap<String, Node>,
}

/// Index-based view of a valid graph.
struct Compiled<'g> {
    index: BTreeMap<&'g str, usize>,
    nodes: Vec<CNode<'g>>,
    free: Vec<AtomSet>,
}

struct CNode<'g> {
    op: &'g str,
    label: Option<&'g str>,
    atoms: &'g [Atom],
    groups: Vec<(&'g [Atom], Vec<usize>)>,
}

impl TermGraph {
    pub fn new(sig: Arc<BindingSignature>, states: BTreeMap<String, Node>) -> Self {
        TermGraph { sig, states }
    }

    pub fn signature(&self) -> &Arc<BindingSignature> {
        &self.sig
    }

    pub fn states(&self) -> &BTreeMap<String, Node> {
        &self.states
    }

    pub fn node(&self, state: &str) -> Option<&Node> {
        self.states.get(state)
    }

    /// All structural problems; empty iff the graph is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (name, node) in &self.states {
            let mut report = |message: String| {
                out.push(Violation {
                    state: name.clone(),
                    message,
                })
            };
            let Some(spec) = self.sig.op(&node.op) else {
                report(alloc::format!("unknown operation `{}`", node.op));
                continue;
            };
            match (&node.label, spec.labels.is_empty()) {
                (None, true) => {}
                (Some(l), false) if spec.labels.contains(l) => {}
                (Some(l), _) => report(alloc::format!("label `{l}` not allowed for `{}`", spec.name)),
                (None, false) => report(alloc::format!("operation `{}` needs a label", spec.name)),
            }
            if node.atoms.len() != spec.atoms {
                report(alloc::format!(
                    "expected {} atom(s), found {}",
                    spec.atoms,
                    node.atoms.len()
                ));
            }
            if node.groups.len() != spec.groups.len() {
                report(alloc::format!(
                    "expected {} binder group(s), found {}",
                    spec.groups.len(),
                    node.groups.len()
                ));
            }
            for (i, (g, gs)) in node.groups.iter().zip(&spec.groups).enumerate() {
                if g.bound_atoms.len() != gs.bound {
                    report(alloc::format!(
                        "group {i}: expected {} bound atom(s), found {}",
                        gs.bound,
                        g.bound_atoms.len()
                    ));
                } else if !pairwise_distinct(&g.bound_atoms) {
                    report(alloc::format!("group {i}: bound atoms are not pairwise distinct"));
                }
                if g.children.len() != gs.children {
                    report(alloc::format!(
                        "group {i}: expected {} child(ren), found {}",
                        gs.children,
                        g.children.len()
                    ));
                }
                for c in &g.children {
                    if !self.states.contains_key(c) {
                        report(alloc::format!("unresolved state `{c}`"));
                    }
                }
            }
        }
        out
    }

    fn compile(&self) -> Result<Compiled<'_>> {
        if let Some(v) = self.validate().into_iter().next() {
            return Err(Error::InvalidGraph(v.to_string()));
        }
        let index: BTreeMap<&str, usize> = self
            .states
            .keys()
            .enumerate()
            .map(|(i, k)| (k.as_str(), i))
            .collect();
        let nodes: Vec<CNode<'_>> = self
            .states
            .values()
            .map(|n| CNode {
                op: &n.op,
                label: n.label.as_deref(),
                atoms: &n.atoms,
                groups: n
                    .groups
                    .iter()
                    .map(|g| {
                        (
                            g.bound_atoms.as_slice(),
                            g.children.iter().map(|c| index[c.as_str()]).collect(),
                        )
                    })
                    .collect(),
            })
            .collect();
        let free = free_atom_fixpoint(&nodes);
        Ok(Compiled { index, nodes, free })
    }

    /// Every atom written anywhere in the graph.
    pub fn atoms(&self) -> AtomSet {
        self.states.values().flat_map(|n| n.mentioned_atoms()).collect()
    }

    /// Renames every atom, free slots and binders alike.
    pub fn act(&self, perm: &Perm) -> TermGraph {
        let map = |xs: &[Atom]| xs.iter().map(|&a| perm.apply(a)).collect::<Vec<_>>();
        let states = self
            .states
            .iter()
            .map(|(k, n)| {
                let node = Node {
                    op: n.op.clone(),
                    label: n.label.clone(),
                    atoms: map(&n.atoms),
                    groups: n
                        .groups
                        .iter()
                        .map(|g| Group {
                            bound_atoms: map(&g.bound_atoms),
                            children: g.children.clone(),
                        })
                        .collect(),
                };
                (k.clone(), node)
            })
            .collect();
        TermGraph {
            sig: Arc::clone(&self.sig),
            states,
        }
    }

    /// States reachable from `state`, including itself.
    pub fn reachable(&self, state: &str) -> Result<BTreeSet<String>> {
        let c = self.compile()?;
        let start = c.lookup(state)?;
        let names: Vec<&String> = self.states.keys().collect();
        Ok(c.reachable(start)
            .into_iter()
            .map(|i| names[i].clone())
            .collect())
    }

    /// The free atoms of the tree denoted by `state`.
    pub fn free_atoms(&self, state: &str) -> Result<AtomSet> {
        let c = self.compile()?;
        let i = c.lookup(state)?;
        Ok(c.free[i].clone())
    }

    /// Depth-`k` unfolding; [`FiniteTree::Cut`] marks the frontier at depth `k`.
    pub fn unfold(&self, state: &str, k: usize) -> Result<FiniteTree> {
        let c = self.compile()?;
        let i = c.lookup(state)?;
        Ok(c.unfold(i, k))
    }
}

impl Compiled<'_> {
    fn lookup(&self, state: &str) -> Result<usize> {
        self.index
            .get(state)
            .copied()
            .ok_or_else(|| Error::UnknownState(state.to_string()))
    }

    fn children(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes[i].groups.iter().flat_map(|(_, cs)| cs.iter().copied())
    }

    fn reachable(&self, start: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(i) = stack.pop() {
            for c in self.children(i) {
                if seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        seen
    }

    fn unfold(&self, i: usize, k: usize) -> FiniteTree {
        if k == 0 {
            return FiniteTree::Cut;
        }
        let n = &self.nodes[i];
        FiniteTree::Node {
            op: n.op.to_string(),
            label: n.label.map(str::to_string),
            atoms: n.atoms.to_vec(),
            groups: n
                .groups
                .iter()
                .map(|(bound, cs)| TreeGroup {
                    bound_atoms: bound.to_vec(),
                    children: cs.iter().map(|&c| self.unfold(c, k - 1)).collect(),
                })
                .collect(),
        }
    }
}

/// Least solution of `FV(s) = atoms(s) ∪ ⋃_groups (⋃ FV(children) \ bound)`.
fn free_atom_fixpoint(nodes: &[CNode<'_>]) -> Vec<AtomSet> {
    let mut free: Vec<AtomSet> = alloc::vec![AtomSet::new(); nodes.len()];
    loop {
        let mut changed = false;
        for (i, n) in nodes.iter().enumerate() {
            let mut next: AtomSet = n.atoms.iter().copied().collect();
            for (bound, cs) in &n.groups {
                for &c in cs {
                    next.extend(free[c].iter().filter(|a| !bound.contains(a)));
                }
            }
            if next.len() != free[i].len() {
                free[i] = next;
                changed = true;
            }
        }
        if !changed {
            return free;
        }
    }
}

fn check_signatures(g1: &TermGraph, g2: &TermGraph) -> Result<()> {
    if Arc::ptr_eq(&g1.sig, &g2.sig) || g1.sig == g2.sig {
        Ok(())
    } else {
        Err(Error::SignatureMismatch)
    }
}

/// Whether `s1` and `s2` denote the same tree, atom for atom.
pub fn raw_bisim(g1: &TermGraph, s1: &str, g2: &TermGraph, s2: &str) -> Result<bool> {
    check_signatures(g1, g2)?;
    let (c1, c2) = (g1.compile()?, g2.compile()?);
    let start = (c1.lookup(s1)?, c2.lookup(s2)?);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((i, j)) = queue.pop_front() {
        let (n, m) = (&c1.nodes[i], &c2.nodes[j]);
        if n.op != m.op || n.label != m.label || n.atoms != m.atoms {
            return Ok(false);
        }
        for ((b1, cs1), (b2, cs2)) in n.groups.iter().zip(&m.groups) {
            if b1 != b2 {
                return Ok(false);
            }
            for pair in cs1.iter().copied().zip(cs2.iter().copied()) {
                if seen.insert(pair) {
                    queue.push_back(pair);
                }
            }
        }
    }
    Ok(true)
}

/// A partial injection between atoms, sorted by source.
type Renaming = Vec<(Atom, Atom)>;

/// A pair of states together with the correspondence between their free atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Config {
    left: usize,
    right: usize,
    rho: Renaming,
}

struct AlphaSystem<'a, 'g> {
    left: &'a Compiled<'g>,
    right: &'a Compiled<'g>,
}

impl AlphaSystem<'_, '_> {
    fn config(&self, left: usize, right: usize, rho: &[(Atom, Atom)]) -> Config {
        let (fl, fr) = (&self.left.free[left], &self.right.free[right]);
        let mut rho: Renaming = rho
            .iter()
            .copied()
            .filter(|(a, b)| fl.contains(a) && fr.contains(b))
            .collect();
        rho.sort();
        Config { left, right, rho }
    }

    fn initial(&self, left: usize, right: usize) -> Config {
        let mut shared: AtomSet = self.left.free[left].clone();
        shared.extend(self.right.free[right].iter().copied());
        let identity: Renaming = shared.into_iter().map(|a| (a, a)).collect();
        self.config(left, right, &identity)
    }

    /// Successor configurations, or `None` if the two nodes differ.
    fn step(&self, c: &Config) -> Option<Vec<Config>> {
        let (n, m) = (&self.left.nodes[c.left], &self.right.nodes[c.right]);
        if n.op != m.op || n.label != m.label || n.atoms.len() != m.atoms.len() {
            return None;
        }
        for (x, y) in n.atoms.iter().zip(m.atoms) {
            if !c.rho.iter().any(|p| p == &(*x, *y)) {
                return None;
            }
        }
        let mut next = Vec::new();
        for ((b1, cs1), (b2, cs2)) in n.groups.iter().zip(&m.groups) {
            let mut rho = c.rho.clone();
            for (&x, &y) in b1.iter().zip(b2.iter()) {
                rho.retain(|&(p, q)| p != x && q != y);
                rho.push((x, y));
            }
            for (&l, &r) in cs1.iter().zip(cs2) {
                next.push(self.config(l, r, &rho));
            }
        }
        Some(next)
    }
}

/// Whether `s1` and `s2` denote alpha-equivalent trees.
///
/// Explores configurations `(s, t, ρ)` where `ρ` relates the free atoms of
/// `s` and `t`. Under a binder group `ρ` is extended by pairing the bound
/// atoms positionally, shadowing older entries. The configuration space is
/// finite, and the trees are equivalent iff no reachable configuration
/// has mismatching nodes.
pub fn alpha_bisim(g1: &TermGraph, s1: &str, g2: &TermGraph, s2: &str) -> Result<bool> {
    check_signatures(g1, g2)?;
    let (c1, c2) = (g1.compile()?, g2.compile()?);
    let sys = AlphaSystem { left: &c1, right: &c2 };
    let start = sys.initial(c1.lookup(s1)?, c2.lookup(s2)?);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let Some(next) = sys.step(&c) else {
            return Ok(false);
        };
        for n in next {
            if !seen.contains(&n) {
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    Ok(true)
}

/// Alpha-equivalence of the depth-`k` unfoldings (cuts compare equal).
///
/// Evaluated by `k` rounds of refinement over the reachable
/// configurations, stopping early once a round changes nothing.
pub fn truncation_eq(g1: &TermGraph, s1: &str, g2: &TermGraph, s2: &str, k: usize) -> Result<bool> {
    check_signatures(g1, g2)?;
    let (c1, c2) = (g1.compile()?, g2.compile()?);
    let sys = AlphaSystem { left: &c1, right: &c2 };
    let start = sys.initial(c1.lookup(s1)?, c2.lookup(s2)?);

    let mut ids: BTreeMap<Config, usize> = BTreeMap::from([(start.clone(), 0)]);
    let mut succ: Vec<Option<Vec<usize>>> = Vec::new();
    let mut pending = VecDeque::from([start]);
    while let Some(c) = pending.pop_front() {
        let edges = sys.step(&c).map(|next| {
            next.into_iter()
                .map(|n| {
                    let fresh_id = ids.len();
                    *ids.entry(n.clone()).or_insert_with(|| {
                        pending.push_back(n);
                        fresh_id
                    })
                })
                .collect()
        });
        succ.push(edges);
    }

    // equal[i] holds for the depth-`round` unfoldings of configuration i.
    let mut equal = alloc::vec![true; succ.len()];
    for _ in 0..k {
        let next: Vec<bool> = succ
            .iter()
            .map(|edges| match edges {
                None => false,
                Some(es) => es.iter().all(|&e| equal[e]),
            })
            .collect();
        if next == equal {
            break;
        }
        equal = next;
    }
    Ok(equal[0])
}

/// `|states1| · |states2| · (A + 1)^A` with `A` the number of distinct
/// atoms in both graphs: a cap on the number of configurations, and a
/// depth at which truncations decide alpha-equivalence.
pub fn configuration_bound(g1: &TermGraph, g2: &TermGraph) -> u64 {
    let mut atoms = g1.atoms();
    atoms.extend(g2.atoms());
    let a = atoms.len() as u32;
    let injections = u64::from(a + 1).saturating_pow(a);
    (g1.states.len() as u64)
        .saturating_mul(g2.states.len() as u64)
        .saturating_mul(injections)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeGroup {
    pub bound_atoms: Vec<Atom>,
    pub children: Vec<FiniteTree>,
}

/// A finite tree; `Cut` stands for the collapsed remainder below the
/// truncation depth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FiniteTree {
    Cut,
    Node {
        op: String,
        label: Option<String>,
        atoms: Vec<Atom>,
        groups: Vec<TreeGroup>,
    },
}

/// Locally nameless rendering: bound occurrences become binder coordinates.
#[derive(Debug, PartialEq, Eq)]
enum Nameless<'t> {
    Cut,
    Node {
        op: &'t str,
        label: Option<&'t str>,
        atoms: Vec<Occurrence>,
        groups: Vec<(usize, Vec<Nameless<'t>>)>,
    },
}

#[derive(Debug, PartialEq, Eq)]
enum Occurrence {
    Free(Atom),
    /// `(scopes outward, position in group)`
    Bound(usize, usize),
}

impl FiniteTree {
    pub fn is_cut(&self) -> bool {
        matches!(self, FiniteTree::Cut)
    }

    /// Number of node levels; `Cut` has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            FiniteTree::Cut => 0,
            FiniteTree::Node { groups, .. } => {
                1 + groups
                    .iter()
                    .flat_map(|g| g.children.iter())
                    .map(FiniteTree::depth)
                    .max()
                    .unwrap_or(0)
            }
        }
    }

    /// Renames every atom, bound or free.
    pub fn act(&self, perm: &Perm) -> FiniteTree {
        match self {
            FiniteTree::Cut => FiniteTree::Cut,
            FiniteTree::Node {
                op,
                label,
                atoms,
                groups,
            } => FiniteTree::Node {
                op: op.clone(),
                label: label.clone(),
                atoms: atoms.iter().map(|&a| perm.apply(a)).collect(),
                groups: groups
                    .iter()
                    .map(|g| TreeGroup {
                        bound_atoms: g.bound_atoms.iter().map(|&a| perm.apply(a)).collect(),
                        children: g.children.iter().map(|c| c.act(perm)).collect(),
                    })
                    .collect(),
            },
        }
    }

    /// Replaces every subtree at depth `k` by `Cut`.
    pub fn truncate(&self, k: usize) -> FiniteTree {
        match self {
            _ if k == 0 => FiniteTree::Cut,
            FiniteTree::Cut => FiniteTree::Cut,
            FiniteTree::Node {
                op,
                label,
                atoms,
                groups,
            } => FiniteTree::Node {
                op: op.clone(),
                label: label.clone(),
                atoms: atoms.clone(),
                groups: groups
                    .iter()
                    .map(|g| TreeGroup {
                        bound_atoms: g.bound_atoms.clone(),
                        children: g.children.iter().map(|c| c.truncate(k - 1)).collect(),
                    })
                    .collect(),
            },
        }
    }

    pub fn free_atoms(&self) -> AtomSet {
        match self {
            FiniteTree::Cut => AtomSet::new(),
            FiniteTree::Node { atoms, groups, .. } => {
                let mut out: AtomSet = atoms.iter().copied().collect();
                for g in groups {
                    for c in &g.children {
                        out.extend(c.free_atoms().into_iter().filter(|a| !g.bound_atoms.contains(a)));
                    }
                }
                out
            }
        }
    }

    /// Alpha-equivalence of finite trees, by comparing locally nameless forms.
    pub fn alpha_eq(&self, other: &FiniteTree) -> bool {
        let mut scopes = Vec::new();
        let lhs = self.nameless(&mut scopes);
        let rhs = other.nameless(&mut scopes);
        lhs == rhs
    }

    fn nameless<'t>(&'t self, scopes: &mut Vec<&'t [Atom]>) -> Nameless<'t> {
        match self {
            FiniteTree::Cut => Nameless::Cut,
            FiniteTree::Node {
                op,
                label,
                atoms,
                groups,
            } => {
                let resolve = |a: Atom| {
                    scopes
                        .iter()
                        .rev()
                        .enumerate()
                        .find_map(|(depth, scope)| {
                            scope.iter().position(|&b| b == a).map(|pos| Occurrence::Bound(depth, pos))
                        })
                        .unwrap_or(Occurrence::Free(a))
                };
                let atoms = atoms.iter().map(|&a| resolve(a)).collect();
                let groups = groups
                    .iter()
                    .map(|g| {
                        scopes.push(&g.bound_atoms);
                        let children = g.children.iter().map(|c| c.nameless(scopes)).collect();
                        scopes.pop();
                        (g.bound_atoms.len(), children)
                    })
                    .collect();
                Nameless::Node {
                    op,
                    label: label.as_deref(),
                    atoms,
                    groups,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(i: u32) -> Atom {
        Atom(i)
    }

    fn lam(binder: u32, child: &str) -> Node {
        Node::new(
            "lam",
            vec![],
            vec![Group {
                bound_atoms: vec![a(binder)],
                children: vec![child.into()],
            }],
        )
    }

    fn app(f: &str, x: &str) -> Node {
        Node::new(
            "app",
            vec![],
            vec![Group {
                bound_atoms: vec![],
                children: vec![f.into(), x.into()],
            }],
        )
    }

    fn var(x: u32) -> Node {
        Node::new("var", vec![a(x)], vec![])
    }

    fn graph(states: Vec<(&str, Node)>) -> TermGraph {
        TermGraph::new(
            Arc::new(BindingSignature::lambda()),
            states.into_iter().map(|(k, n)| (k.to_string(), n)).collect(),
        )
    }

    /// s = λx. (x s)
    fn omega_like(binder: u32) -> TermGraph {
        graph(vec![("s", lam(binder, "b")), ("b", app("u", "s")), ("u", var(binder))])
    }

    fn swapped(binder: u32) -> TermGraph {
        graph(vec![("s", lam(binder, "b")), ("b", app("s", "u")), ("u", var(binder))])
    }

    #[test]
    fn validation() {
        assert!(omega_like(0).validate().is_empty());
        let dangling = graph(vec![("s", lam(0, "missing"))]);
        let v = dangling.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].message.contains("unresolved state"));
        let bad = graph(vec![(
            "s",
            Node::new(
                "lam",
                vec![],
                vec![Group {
                    bound_atoms: vec![a(0), a(1)],
                    children: vec!["s".into()],
                }],
            ),
        )]);
        assert_eq!(bad.validate().len(), 1);
        let unknown = graph(vec![("s", Node::new("nope", vec![], vec![]))]);
        assert_eq!(unknown.validate().len(), 1);
        assert!(matches!(unknown.unfold("s", 1), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn unfold_examples() {
        let g = omega_like(0);
        assert_eq!(g.unfold("s", 0).unwrap(), FiniteTree::Cut);
        let one = g.unfold("s", 1).unwrap();
        assert_eq!(
            one,
            FiniteTree::Node {
                op: "lam".into(),
                label: None,
                atoms: vec![],
                groups: vec![TreeGroup {
                    bound_atoms: vec![a(0)],
                    children: vec![FiniteTree::Cut]
                }],
            }
        );
        let three = g.unfold("s", 3).unwrap();
        assert_eq!(three.depth(), 3);
        assert_eq!(three.truncate(1), one);
        assert!(matches!(g.unfold("zz", 1), Err(Error::UnknownState(_))));
    }

    #[test]
    fn free_atom_examples() {
        assert!(omega_like(0).free_atoms("s").unwrap().is_empty());
        let g = graph(vec![("t", app("u", "t")), ("u", var(5))]);
        assert_eq!(g.free_atoms("t").unwrap(), [a(5)].into_iter().collect());
        let g = graph(vec![("v", var(3))]);
        assert_eq!(g.free_atoms("v").unwrap(), [a(3)].into_iter().collect());
    }

    #[test]
    fn raw_examples() {
        let g = omega_like(0);
        assert!(raw_bisim(&g, "s", &g, "s").unwrap());
        assert!(!raw_bisim(&g, "s", &omega_like(1), "s").unwrap());
        // The same tree with the cycle entered one step later.
        let unrolled = graph(vec![
            ("s0", lam(0, "b0")),
            ("b0", app("u", "s")),
            ("s", lam(0, "b")),
            ("b", app("u", "s")),
            ("u", var(0)),
        ]);
        assert!(raw_bisim(&g, "s", &unrolled, "s0").unwrap());
        for k in 0..=(3 * 5) {
            assert!(truncation_eq(&g, "s", &unrolled, "s0", k).unwrap());
            assert_eq!(g.unfold("s", k).unwrap(), unrolled.unfold("s0", k).unwrap());
        }
    }

    #[test]
    fn alpha_examples() {
        let g = omega_like(0);
        assert!(alpha_bisim(&g, "s", &omega_like(1), "s").unwrap());
        assert!(!alpha_bisim(&g, "s", &swapped(0), "s").unwrap());
        assert!(alpha_bisim(&g, "s", &g, "s").unwrap());
        for k in 0..=10 {
            assert!(g.unfold("s", k).unwrap().alpha_eq(&omega_like(1).unfold("s", k).unwrap()));
        }
        assert!(truncation_eq(&g, "s", &swapped(0), "s", 1).unwrap());
        assert!(!truncation_eq(&g, "s", &swapped(0), "s", 3).unwrap());
        assert!(!g.unfold("s", 3).unwrap().alpha_eq(&swapped(0).unfold("s", 3).unwrap()));
    }

    #[test]
    fn shadowing() {
        // λ0.λ1.0  vs  λ0.λ0.0
        let g1 = graph(vec![("s", lam(0, "t")), ("t", lam(1, "u")), ("u", var(0))]);
        let g2 = graph(vec![("s", lam(0, "t")), ("t", lam(0, "u")), ("u", var(0))]);
        assert!(!alpha_bisim(&g1, "s", &g2, "s").unwrap());
        assert!(!g1.unfold("s", 3).unwrap().alpha_eq(&g2.unfold("s", 3).unwrap()));
        // λ1.λ0.1 is the same as λ0.λ1.0
        let g3 = graph(vec![("s", lam(1, "t")), ("t", lam(0, "u")), ("u", var(1))]);
        assert!(alpha_bisim(&g1, "s", &g3, "s").unwrap());
        // λ1.5 vs λ5.5: the second captures the free 5
        let g4 = graph(vec![("s", lam(1, "u")), ("u", var(5))]);
        let g5 = graph(vec![("s", lam(5, "u")), ("u", var(5))]);
        assert!(!alpha_bisim(&g4, "s", &g5, "s").unwrap());
    }

    #[test]
    fn act_examples() {
        let g = omega_like(0);
        let moved = g.act(&Perm::swap(a(0), a(9)));
        assert_eq!(moved, omega_like(9));
        assert!(alpha_bisim(&g, "s", &moved, "s").unwrap());
        let t = graph(vec![("t", app("u", "t")), ("u", var(5))]);
        let t2 = t.act(&Perm::swap(a(5), a(6)));
        assert_eq!(t2.node("u").unwrap().atoms, vec![a(6)]);
        assert!(!alpha_bisim(&t, "t", &t2, "t").unwrap());
        assert_eq!(g.act(&Perm::identity()), g);
    }

    #[test]
    fn signature_mismatch() {
        let other = Arc::new(
            BindingSignature::new(vec![OpSpec::new("var", 1, vec![])]).unwrap(),
        );
        let g2 = TermGraph::new(other, [("v".to_string(), var(0))].into_iter().collect());
        let g1 = graph(vec![("v", var(0))]);
        assert_eq!(alpha_bisim(&g1, "v", &g2, "v"), Err(Error::SignatureMismatch));
        assert_eq!(raw_bisim(&g1, "v", &g2, "v"), Err(Error::SignatureMismatch));
        assert_eq!(truncation_eq(&g1, "v", &g2, "v", 2), Err(Error::SignatureMismatch));
    }

    #[test]
    fn signature_validation() {
        assert!(BindingSignature::new(vec![OpSpec::new("x", 0, vec![]), OpSpec::new("x", 1, vec![])]).is_err());
        assert!(BindingSignature::new(vec![OpSpec::new("x", 0, vec![GroupSpec { bound: 1, children: 0 }])]).is_err());
    }

    #[test]
    fn labels_are_checked() {
        let sig = Arc::new(
            BindingSignature::new(vec![
                OpSpec::new("c", 0, vec![]).with_labels(vec!["red".into(), "blue".into()]),
            ])
            .unwrap(),
        );
        let mut n = Node::new("c", vec![], vec![]);
        let g = TermGraph::new(Arc::clone(&sig), [("x".to_string(), n.clone())].into_iter().collect());
        assert_eq!(g.validate().len(), 1);
        n.label = Some("red".into());
        let red = TermGraph::new(Arc::clone(&sig), [("x".to_string(), n.clone())].into_iter().collect());
        assert!(red.validate().is_empty());
        n.label = Some("blue".into());
        let blue = TermGraph::new(sig, [("x".to_string(), n)].into_iter().collect());
        assert!(!alpha_bisim(&red, "x", &blue, "x").unwrap());
    }

    #[test]
    fn bound() {
        let g = omega_like(0);
        // 3 states each, one atom: 9 * 2^1
        assert_eq!(configuration_bound(&g, &g), 18);
    }
}
