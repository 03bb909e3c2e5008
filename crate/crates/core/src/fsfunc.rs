//! Finitely supported functions `V -> X`.
//!
//! A function is presented by a quadruple `(a, d, keys, values)`: on
//! `keys[i]` it returns `values[i]` (first match wins), and on any other
//! atom `b` it returns `(a b)·d`. Many quadruples present the same
//! function; [`FsFun`] keeps the least one, where `keys` is exactly the
//! support in ascending order and `a` is the least atom outside it.
//!
//! Functions out of `V^n` are nested quadruples ([`NestedFsFun`]).
//! Functions out of the distinct tuples `V^{n≠}` ([`DistinctFsFun`]) are
//! nested functions that are only ever queried on distinct tuples; any of
//! them extends to all of `V^n` through [`fill`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::nominal::{min_support_by, Nominal};
use crate::nomset::{pairwise_distinct, Element, OrbitFiniteSet};
use crate::perm::{fresh, Atom, AtomSet, Perm};
use crate::value::Value;
use crate::{Error, Result};

/// A raw, non-canonical quadruple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadruple<T> {
    pub default_atom: Atom,
    pub default_value: T,
    pub keys: Vec<Atom>,
    pub values: Vec<T>,
}

impl<T: Nominal> Quadruple<T> {
    pub fn new(default_atom: Atom, default_value: T, keys: Vec<Atom>, values: Vec<T>) -> Result<Self> {
        if keys.len() != values.len() {
            return Err(Error::ArityMismatch {
                expected: keys.len(),
                got: values.len(),
            });
        }
        Ok(Quadruple {
            default_atom,
            default_value,
            keys,
            values,
        })
    }

    pub fn apply(&self, b: Atom) -> T {
        match self.keys.iter().position(|&k| k == b) {
            Some(i) => self.values[i].clone(),
            None => self
                .default_value
                .act(&Perm::swap(self.default_atom, b)),
        }
    }

    /// Pointwise action on all four components.
    pub fn act(&self, perm: &Perm) -> Self {
        Quadruple {
            default_atom: perm.apply(self.default_atom),
            default_value: self.default_value.act(perm),
            keys: self.keys.iter().map(|&k| perm.apply(k)).collect(),
            values: self.values.iter().map(|v| v.act(perm)).collect(),
        }
    }

    /// Every atom the quadruple mentions; a support of the function.
    pub fn mentioned_atoms(&self) -> AtomSet {
        let mut atoms: AtomSet = self.keys.iter().copied().collect();
        atoms.insert(self.default_atom);
        atoms.extend(self.default_value.support());
        for v in &self.values {
            atoms.extend(v.support());
        }
        atoms
    }

    /// Extensional equality, decided on the mentioned atoms plus one fresh atom.
    pub fn same_function(&self, other: &Self) -> bool {
        let mut points = self.mentioned_atoms();
        points.extend(other.mentioned_atoms());
        let z = fresh(&points);
        points.insert(z);
        points.iter().all(|&b| self.apply(b) == other.apply(b))
    }
}

/// A finitely supported function in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FsFun<T> {
    repr: Quadruple<T>,
}

impl<T: Nominal> FsFun<T> {
    /// Canonicalises an arbitrary quadruple.
    pub fn from_quadruple(q: Quadruple<T>) -> Self {
        let support = min_support_by(
            &q,
            &q.mentioned_atoms(),
            |x, y| x.same_function(y),
            |p, x| x.act(p),
        );
        Self::with_support(&q, &support)
    }

    /// `support` must be the exact support of the function `q` presents.
    fn with_support(q: &Quadruple<T>, support: &AtomSet) -> Self {
        let a = fresh(support);
        FsFun {
            repr: Quadruple {
                default_atom: a,
                default_value: q.apply(a),
                keys: support.iter().copied().collect(),
                values: support.iter().map(|&k| q.apply(k)).collect(),
            },
        }
    }

    /// The function agreeing with `entries` on their keys and with
    /// `b ↦ (a b)·d` on every other atom.
    pub fn from_table(entries: BTreeMap<Atom, T>, a: Atom, d: T) -> Result<Self> {
        if entries.contains_key(&a) {
            return Err(Error::DefaultAtomNotFresh(a));
        }
        let (keys, values) = entries.into_iter().unzip();
        Ok(Self::from_quadruple(Quadruple {
            default_atom: a,
            default_value: d,
            keys,
            values,
        }))
    }

    /// Tabulates `f` on `support ∪ {fresh}`. The caller promises that
    /// `support` supports `f`.
    pub fn tabulate<F: Fn(Atom) -> T>(support: &AtomSet, f: F) -> Self {
        let a = fresh(support);
        let entries = support.iter().map(|&k| (k, f(k))).collect();
        Self::from_table(entries, a, f(a)).expect("fresh atom lies outside the support")
    }

    pub fn constant(value: T) -> Self {
        Self::tabulate(&value.support(), |_| value.clone())
    }

    pub fn apply(&self, b: Atom) -> T {
        self.repr.apply(b)
    }

    pub fn quadruple(&self) -> &Quadruple<T> {
        &self.repr
    }

    pub fn default_atom(&self) -> Atom {
        self.repr.default_atom
    }

    pub fn default_value(&self) -> &T {
        &self.repr.default_value
    }

    pub fn keys(&self) -> &[Atom] {
        &self.repr.keys
    }

    pub fn values(&self) -> &[T] {
        &self.repr.values
    }

    /// Agreement on the joint support plus one fresh atom.
    pub fn fs_eq(&self, other: &Self) -> bool {
        let mut points = self.support();
        points.extend(other.support());
        points.insert(fresh(&points));
        points.iter().all(|&b| self.apply(b) == other.apply(b))
    }
}

impl FsFun<Value> {
    pub fn identity() -> Self {
        FsFun {
            repr: Quadruple {
                default_atom: Atom(0),
                default_value: Value::Atom(Atom(0)),
                keys: Vec::new(),
                values: Vec::new(),
            },
        }
    }
}

impl<T: Nominal> Nominal for FsFun<T> {
    fn act(&self, perm: &Perm) -> Self {
        let moved = self.repr.act(perm);
        let support = perm.image(&self.support());
        Self::with_support(&moved, &support)
    }

    fn support(&self) -> AtomSet {
        self.repr.keys.iter().copied().collect()
    }
}

/// First occurrences of `t`, in order.
pub fn uniq(t: &[Atom]) -> Vec<Atom> {
    let mut out: Vec<Atom> = Vec::with_capacity(t.len());
    for &a in t {
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// The length-`n` prefix of `uniq(v)` followed by the components of `w`
/// not occurring in `v`. `w` must hold `2n` distinct atoms, `n ≥ 1`.
pub fn fill(v: &[Atom], w: &[Atom]) -> Result<Vec<Atom>> {
    let n = v.len();
    if n == 0 || w.len() != 2 * n {
        return Err(Error::FillArity { n, got: w.len() });
    }
    if !pairwise_distinct(w) {
        return Err(Error::FillNotDistinct);
    }
    let mut out = uniq(v);
    out.extend(w.iter().copied().filter(|a| !v.contains(a)));
    out.truncate(n);
    Ok(out)
}

/// A function `V^depth -> X`, curried as nested [`FsFun`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NestedFsFun {
    depth: usize,
    root: Value,
}

fn has_depth(v: &Value, depth: usize) -> bool {
    if depth == 0 {
        return true;
    }
    match v {
        Value::Fun(f) => {
            has_depth(f.default_value(), depth - 1) && f.values().iter().all(|x| has_depth(x, depth - 1))
        }
        _ => false,
    }
}

impl NestedFsFun {
    pub fn new(depth: usize, root: Value) -> Result<Self> {
        if !has_depth(&root, depth) {
            return Err(Error::ArityMismatch {
                expected: depth,
                got: 0,
            });
        }
        Ok(NestedFsFun { depth, root })
    }

    /// Tabulates `f : V^depth -> Value`. `support` must support `f`.
    pub fn tabulate<F>(depth: usize, support: &AtomSet, f: &F) -> Self
    where
        F: Fn(&[Atom]) -> Value,
    {
        NestedFsFun {
            depth,
            root: tabulate_level(depth, support, &[], f),
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn root(&self) -> &Value {
        &self.root
    }

    pub fn apply(&self, args: &[Atom]) -> Result<Value> {
        if args.len() != self.depth {
            return Err(Error::ArityMismatch {
                expected: self.depth,
                got: args.len(),
            });
        }
        let mut current = self.root.clone();
        for &b in args {
            current = match current {
                Value::Fun(f) => f.apply(b),
                _ => unreachable!("uniform nesting checked at construction"),
            };
        }
        Ok(current)
    }
}

fn tabulate_level<F>(remaining: usize, support: &AtomSet, prefix: &[Atom], f: &F) -> Value
where
    F: Fn(&[Atom]) -> Value,
{
    if remaining == 0 {
        return f(prefix);
    }
    // The curried function at this prefix is supported by the base support
    // together with the atoms already consumed.
    let mut local = support.clone();
    local.extend(prefix.iter().copied());
    let level = FsFun::tabulate(&local, |b| {
        let mut next = prefix.to_vec();
        next.push(b);
        tabulate_level(remaining - 1, support, &next, f)
    });
    Value::from(level)
}

impl Nominal for NestedFsFun {
    fn act(&self, perm: &Perm) -> Self {
        NestedFsFun {
            depth: self.depth,
            root: self.root.act(perm),
        }
    }

    fn support(&self) -> AtomSet {
        self.root.support()
    }
}

/// A function `V^{n≠} -> X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistinctFsFun {
    arity: usize,
    inner: NestedFsFun,
}

impl DistinctFsFun {
    /// Restriction of `g : V^n -> X` along the inclusion `V^{n≠} ⊆ V^n`.
    pub fn restrict(g: NestedFsFun) -> Self {
        DistinctFsFun {
            arity: g.depth,
            inner: g,
        }
    }

    /// Builds the function from a rule that is only consulted on distinct
    /// tuples. `support` must support the rule.
    pub fn tabulate<F>(arity: usize, support: &AtomSet, f: F) -> Self
    where
        F: Fn(&[Atom]) -> Value,
    {
        if arity == 0 {
            return DistinctFsFun::restrict(NestedFsFun::tabulate(0, support, &f));
        }
        let w = fresh_run(support, 2 * arity);
        let mut base = support.clone();
        base.extend(w.iter().copied());
        let extended = NestedFsFun::tabulate(arity, &base, &|v: &[Atom]| {
            f(&fill(v, &w).expect("w holds 2n distinct atoms"))
        });
        DistinctFsFun::restrict(extended)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn inner(&self) -> &NestedFsFun {
        &self.inner
    }

    pub fn apply(&self, args: &[Atom]) -> Result<Value> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        if !pairwise_distinct(args) {
            return Err(Error::NotDistinct);
        }
        self.inner.apply(args)
    }

    /// A preimage under [`DistinctFsFun::restrict`]: the function on all of
    /// `V^n` sending `v` to `self(fill(v, w))`. `w` must hold `2n` distinct
    /// atoms.
    pub fn section(&self, w: &[Atom]) -> Result<NestedFsFun> {
        let n = self.arity;
        if n == 0 {
            return Ok(self.inner.clone());
        }
        if w.len() != 2 * n {
            return Err(Error::FillArity { n, got: w.len() });
        }
        if !pairwise_distinct(w) {
            return Err(Error::FillNotDistinct);
        }
        let mut base = self.inner.support();
        base.extend(w.iter().copied());
        Ok(NestedFsFun::tabulate(n, &base, &|v: &[Atom]| {
            let filled = fill(v, w).expect("w validated above");
            self.apply(&filled).expect("fill yields distinct tuples")
        }))
    }
}

impl Nominal for DistinctFsFun {
    fn act(&self, perm: &Perm) -> Self {
        DistinctFsFun {
            arity: self.arity,
            inner: self.inner.act(perm),
        }
    }

    fn support(&self) -> AtomSet {
        self.inner.support()
    }
}

/// The `count` least atoms outside `used`.
fn fresh_run(used: &AtomSet, count: usize) -> Vec<Atom> {
    let mut taken = used.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let a = fresh(&taken);
        taken.insert(a);
        out.push(a);
    }
    out
}

/// Evaluates a function out of a strong orbit-finite set, given one
/// [`DistinctFsFun`] per orbit (in orbit order, arity = orbit degree).
pub fn strong_exponent_apply(
    set: &OrbitFiniteSet,
    components: &[DistinctFsFun],
    p: &Element,
) -> Result<Value> {
    if !set.is_strong() {
        return Err(Error::NotStrong);
    }
    if components.len() != set.orbits().len() {
        return Err(Error::ArityMismatch {
            expected: set.orbits().len(),
            got: components.len(),
        });
    }
    for (c, o) in components.iter().zip(set.orbits()) {
        if c.arity() != o.degree() {
            return Err(Error::ArityMismatch {
                expected: o.degree(),
                got: c.arity(),
            });
        }
    }
    if **p.set() != *set {
        return Err(Error::SetMismatch);
    }
    components[p.orbit_index()].apply(p.registers())
}
