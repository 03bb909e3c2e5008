//! Name abstraction `[V]X`.
//!
//! `⟨v⟩x` is stored with the binder renamed to the least atom outside the
//! free support `supp(x) \ {v}`, so two abstractions are alpha-equivalent
//! iff they are structurally equal.

use crate::nominal::Nominal;
use crate::perm::{fresh, Atom, AtomSet, Perm};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abstraction<T> {
    binder: Atom,
    body: T,
}

impl<T: Nominal> Abstraction<T> {
    /// The class of `(binder, body)`.
    pub fn new(binder: Atom, body: T) -> Self {
        let mut free = body.support();
        free.remove(&binder);
        let canonical = fresh(&free);
        Abstraction {
            body: body.act(&Perm::swap(binder, canonical)),
            binder: canonical,
        }
    }

    pub fn binder(&self) -> Atom {
        self.binder
    }

    pub fn body(&self) -> &T {
        &self.body
    }

    /// `⟨v1⟩x1 ∼ ⟨v2⟩x2` iff `(v1 z)·x1 = (v2 z)·x2` for `z` fresh for
    /// everything involved. Uses the least such `z`.
    pub fn alpha_eq(&self, other: &Self) -> bool {
        let z = fresh(&self.mentioned(other));
        self.swapped_eq(other, z)
    }

    /// The same test with a caller-chosen `z`, which must be fresh for both
    /// binders and both bodies.
    pub fn alpha_eq_at(&self, other: &Self, z: Atom) -> Result<bool> {
        if self.mentioned(other).contains(&z) {
            return Err(Error::AtomNotFresh(z));
        }
        Ok(self.swapped_eq(other, z))
    }

    fn mentioned(&self, other: &Self) -> AtomSet {
        let mut atoms = self.body.support();
        atoms.extend(other.body.support());
        atoms.insert(self.binder);
        atoms.insert(other.binder);
        atoms
    }

    fn swapped_eq(&self, other: &Self, z: Atom) -> bool {
        self.body.act(&Perm::swap(self.binder, z)) == other.body.act(&Perm::swap(other.binder, z))
    }

    /// Instantiates the binder at `w`, which must be fresh for the abstraction.
    pub fn concretize(&self, w: Atom) -> Result<T> {
        if self.support().contains(&w) {
            return Err(Error::AtomNotFresh(w));
        }
        Ok(self.body.act(&Perm::swap(self.binder, w)))
    }
}

impl<T: Nominal> Nominal for Abstraction<T> {
    fn act(&self, perm: &Perm) -> Self {
        Abstraction::new(perm.apply(self.binder), self.body.act(perm))
    }

    fn support(&self) -> AtomSet {
        let mut s = self.body.support();
        s.remove(&self.binder);
        s
    }
}
