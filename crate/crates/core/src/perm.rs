//! Atoms and finite permutations.
//!
//! Composition is right-to-left throughout: `f.compose(&g)` applies `g`
//! first, then `f`.

use alloc::collections::{BTreeMap, BTreeSet};
use core::fmt;

/// A name. The universe of atoms is unbounded; equality is integer equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub u32);

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Atom {
    fn from(id: u32) -> Self {
        Atom(id)
    }
}

/// Finite set of atoms, iterated in ascending order.
pub type AtomSet = BTreeSet<Atom>;

/// The least atom not contained in `used`.
pub fn fresh<'a, I>(used: I) -> Atom
where
    I: IntoIterator<Item = &'a Atom>,
{
    let used: BTreeSet<u32> = used.into_iter().map(|a| a.0).collect();
    let mut candidate = 0u32;
    for id in used {
        if id != candidate {
            break;
        }
        candidate += 1;
    }
    Atom(candidate)
}

/// A bijection on atoms that moves finitely many of them.
///
/// Only the non-fixed points are stored, so structural equality is
/// equality of permutations.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    moved: BTreeMap<Atom, Atom>,
}

impl Perm {
    pub fn identity() -> Self {
        Perm::default()
    }

    /// The transposition `(a b)`; the identity when `a == b`.
    pub fn swap(a: Atom, b: Atom) -> Self {
        let mut moved = BTreeMap::new();
        if a != b {
            moved.insert(a, b);
            moved.insert(b, a);
        }
        Perm { moved }
    }

    /// Composite of a word of transpositions, rightmost applied first.
    pub fn from_transpositions(word: &[(Atom, Atom)]) -> Self {
        word.iter()
            .rev()
            .fold(Perm::identity(), |acc, &(a, b)| Perm::swap(a, b).compose(&acc))
    }

    /// Builds a permutation from `(from, to)` pairs. Fixed points in the
    /// input are dropped. Returns `None` unless the pairs describe a
    /// bijection of their (finite) key set.
    pub fn from_pairs<I>(pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (Atom, Atom)>,
    {
        let mut moved = BTreeMap::new();
        for (from, to) in pairs {
            if let Some(prev) = moved.insert(from, to) {
                if prev != to {
                    return None;
                }
            }
        }
        let keys: BTreeSet<Atom> = moved.keys().copied().collect();
        let values: BTreeSet<Atom> = moved.values().copied().collect();
        if keys != values || values.len() != moved.len() {
            return None;
        }
        moved.retain(|k, v| k != v);
        Some(Perm { moved })
    }

    /// Extends a partial injection to a finite permutation that agrees with
    /// it on its domain. Returns `None` if `pairs` is not injective.
    pub fn extend_injection<I>(pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (Atom, Atom)>,
    {
        let mut map = BTreeMap::new();
        for (from, to) in pairs {
            if let Some(prev) = map.insert(from, to) {
                if prev != to {
                    return None;
                }
            }
        }
        let domain: BTreeSet<Atom> = map.keys().copied().collect();
        let range: BTreeSet<Atom> = map.values().copied().collect();
        if range.len() != map.len() {
            return None;
        }
        // Targets outside the domain go back to the atoms the injection vacated.
        let dangling = range.difference(&domain).copied();
        let vacated = domain.difference(&range).copied();
        for (from, to) in dangling.zip(vacated) {
            map.insert(from, to);
        }
        map.retain(|k, v| k != v);
        Some(Perm { moved: map })
    }

    pub fn apply(&self, a: Atom) -> Atom {
        self.moved.get(&a).copied().unwrap_or(a)
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    /// Non-fixed points as ascending `(from, to)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (Atom, Atom)> + '_ {
        self.moved.iter().map(|(&a, &b)| (a, b))
    }

    /// The atoms this permutation moves (its support).
    pub fn moved(&self) -> AtomSet {
        self.moved.keys().copied().collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut moved = BTreeMap::new();
        for &a in self.moved.keys().chain(other.moved.keys()) {
            let b = self.apply(other.apply(a));
            if a != b {
                moved.insert(a, b);
            }
        }
        Perm { moved }
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            moved: self.moved.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    pub fn image(&self, set: &AtomSet) -> AtomSet {
        set.iter().map(|&a| self.apply(a)).collect()
    }

    /// Whether `self` fixes every atom of `set`.
    pub fn fixes_all(&self, set: &AtomSet) -> bool {
        set.iter().all(|&a| self.apply(a) == a)
    }

    /// The restriction of `self` to `w`: agrees with `self` on `w`, sends
    /// each `v ∉ w` to `self^{-n}(v)` for the least `n ≥ 0` with
    /// `self^{-n}(v) ∉ self[w]`.
    ///
    /// Only atoms of `self[w] \ w` need the backward search; everything
    /// outside `w ∪ self[w]` is fixed.
    pub fn restrict(&self, w: &AtomSet) -> Perm {
        let image = self.image(w);
        let inverse = self.inverse();
        let mut moved = BTreeMap::new();
        for &v in w {
            let to = self.apply(v);
            if to != v {
                moved.insert(v, to);
            }
        }
        for &u in image.difference(w) {
            let mut x = inverse.apply(u);
            while image.contains(&x) {
                x = inverse.apply(x);
            }
            moved.insert(u, x);
        }
        Perm { moved }
    }

    /// Splits `self` into `(self|_w, g)` with `self = self|_w ∘ g` and `g`
    /// fixing `w` pointwise.
    pub fn factor(&self, w: &AtomSet) -> (Perm, Perm) {
        let restricted = self.restrict(w);
        let rest = restricted.inverse().compose(self);
        (restricted, rest)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, e.g. `(0 1 2)(5 7)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moved.is_empty() {
            return write!(f, "()");
        }
        let mut seen = BTreeSet::new();
        for &start in self.moved.keys() {
            if !seen.insert(start) {
                continue;
            }
            write!(f, "({start}")?;
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                write!(f, " {x}")?;
                x = self.apply(x);
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
