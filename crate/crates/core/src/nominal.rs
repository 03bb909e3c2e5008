//! The interface every finitely supported value implements.

use alloc::vec::Vec;

use crate::perm::{fresh, Atom, AtomSet, Perm};

/// A value carrying a permutation action with finite support.
///
/// `Eq` must be semantic equality: implementors keep themselves in a
/// canonical form so that structural and semantic equality coincide.
pub trait Nominal: Clone + Eq {
    fn act(&self, perm: &Perm) -> Self;

    /// The least support.
    fn support(&self) -> AtomSet;
}

impl Nominal for Atom {
    fn act(&self, perm: &Perm) -> Self {
        perm.apply(*self)
    }

    fn support(&self) -> AtomSet {
        core::iter::once(*self).collect()
    }
}

impl<T: Nominal> Nominal for Vec<T> {
    fn act(&self, perm: &Perm) -> Self {
        self.iter().map(|x| x.act(perm)).collect()
    }

    fn support(&self) -> AtomSet {
        self.iter().flat_map(|x| x.support()).collect()
    }
}

impl<A: Nominal, B: Nominal> Nominal for (A, B) {
    fn act(&self, perm: &Perm) -> Self {
        (self.0.act(perm), self.1.act(perm))
    }

    fn support(&self) -> AtomSet {
        let mut s = self.0.support();
        s.extend(self.1.support());
        s
    }
}

/// Least support of `x`, given a finite support superset `candidates`.
///
/// An atom `u` is kept iff swapping it with an atom fresh for the
/// candidates changes `x`. Works for any value through the supplied
/// equality and action.
pub fn min_support_by<T, E, A>(x: &T, candidates: &AtomSet, eq: E, act: A) -> AtomSet
where
    E: Fn(&T, &T) -> bool,
    A: Fn(&Perm, &T) -> T,
{
    let z = fresh(candidates);
    candidates
        .iter()
        .copied()
        .filter(|&u| !eq(&act(&Perm::swap(u, z), x), x))
        .collect()
}

/// [`min_support_by`] with the value's own equality and action.
pub fn min_support<T: Nominal>(x: &T, candidates: &AtomSet) -> AtomSet {
    min_support_by(x, candidates, |a, b| a == b, |p, v| v.act(p))
}
