//! Orbit-finite nominal sets.
//!
//! A single orbit is represented as `V^{n≠}/Γ`: tuples of `n` pairwise
//! distinct atoms (the registers) modulo a subgroup `Γ` of coordinate
//! permutations. A set is a finite list of named orbits. Elements are kept
//! in canonical form, the lexicographically least tuple of their coset.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::hash::{Hash, Hasher};

use crate::nominal::Nominal;
use crate::perm::{Atom, AtomSet, Perm};
use crate::{Error, Result};

/// Closure is computed eagerly, so degrees are capped.
pub const MAX_DEGREE: usize = 8;

/// A subgroup of the permutations of `{0..degree}`, given by generators.
/// Permutations are written as one-line images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
    elements: Vec<Vec<usize>>,
}

fn is_permutation(images: &[usize], degree: usize) -> bool {
    if images.len() != degree {
        return false;
    }
    let mut seen = alloc::vec![false; degree];
    for &i in images {
        if i >= degree || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

impl CoordGroup {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::Config(alloc::format!(
                "orbit degree {degree} exceeds the maximum of {MAX_DEGREE}"
            )));
        }
        for g in &generators {
            if !is_permutation(g, degree) {
                return Err(Error::Config(alloc::format!(
                    "generator {g:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = BTreeSet::new();
        elements.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &generators {
                let q: Vec<usize> = (0..degree).map(|i| p[g[i]]).collect();
                if elements.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        Ok(CoordGroup {
            degree,
            generators,
            elements: elements.into_iter().collect(),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        CoordGroup::new(degree, Vec::new())
    }

    /// The full symmetric group on the coordinates.
    pub fn full(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..degree).map(|i| (i + 1) % degree).collect());
        }
        CoordGroup::new(degree, gens)
    }

    /// Rotations of the coordinates (necklaces).
    pub fn cyclic(degree: usize) -> Result<Self> {
        let gens = if degree >= 2 {
            alloc::vec![(0..degree).map(|i| (i + 1) % degree).collect()]
        } else {
            Vec::new()
        };
        CoordGroup::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Lexicographically least rearrangement `(x[π(0)], …)` over `π` in the group.
    pub fn canonicalize(&self, registers: &[Atom]) -> Vec<Atom> {
        self.elements
            .iter()
            .map(|p| p.iter().map(|&i| registers[i]).collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }

    /// Whether some group element rearranges `x` into `y`.
    pub fn related(&self, x: &[Atom], y: &[Atom]) -> bool {
        x.len() == self.degree
            && y.len() == self.degree
            && self
                .elements
                .iter()
                .any(|p| p.iter().zip(y).all(|(&i, &b)| x[i] == b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub name: String,
    pub symmetry: CoordGroup,
}

impl OrbitDescriptor {
    pub fn new(name: impl Into<String>, symmetry: CoordGroup) -> Self {
        OrbitDescriptor {
            name: name.into(),
            symmetry,
        }
    }

    /// The strong orbit `V^{n≠}`.
    pub fn distinct_tuples(name: impl Into<String>, degree: usize) -> Result<Self> {
        Ok(OrbitDescriptor::new(name, CoordGroup::trivial(degree)?))
    }

    pub fn degree(&self) -> usize {
        self.symmetry.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFiniteSet {
    orbits: Vec<OrbitDescriptor>,
}

impl OrbitFiniteSet {
    pub fn new(orbits: Vec<OrbitDescriptor>) -> Result<Arc<Self>> {
        let mut names = BTreeSet::new();
        for o in &orbits {
            if !names.insert(o.name.as_str()) {
                return Err(Error::Config(alloc::format!("duplicate orbit name `{}`", o.name)));
            }
        }
        Ok(Arc::new(OrbitFiniteSet { orbits }))
    }

    pub fn orbits(&self) -> &[OrbitDescriptor] {
        &self.orbits
    }

    pub fn orbit_index(&self, name: &str) -> Option<usize> {
        self.orbits.iter().position(|o| o.name == name)
    }

    /// Every orbit has trivial coordinate symmetry.
    pub fn is_strong(&self) -> bool {
        self.orbits.iter().all(|o| o.symmetry.is_trivial())
    }

    /// Builds the element of orbit `orbit` with the given registers.
    pub fn element(self: &Arc<Self>, orbit: &str, registers: Vec<Atom>) -> Result<Element> {
        let idx = self
            .orbit_index(orbit)
            .ok_or_else(|| Error::UnknownOrbit(orbit.to_string()))?;
        Element::from_index(self, idx, registers)
    }

    /// All elements whose support is exactly `support`.
    pub fn enumerate_with_support(self: &Arc<Self>, support: &AtomSet) -> Vec<Element> {
        let atoms: Vec<Atom> = support.iter().copied().collect();
        let mut out = Vec::new();
        for (idx, orbit) in self.orbits.iter().enumerate() {
            if orbit.degree() != atoms.len() {
                continue;
            }
            let mut seen = BTreeSet::new();
            for tuple in permutations(&atoms) {
                let canon = orbit.symmetry.canonicalize(&tuple);
                if seen.insert(canon.clone()) {
                    out.push(Element {
                        set: Arc::clone(self),
                        orbit: idx,
                        registers: canon,
                    });
                }
            }
        }
        out
    }
}

/// All orderings of `atoms`.
pub(crate) fn permutations(atoms: &[Atom]) -> Vec<Vec<Atom>> {
    if atoms.is_empty() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..atoms.len() {
        let mut rest = atoms.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub(crate) fn pairwise_distinct(atoms: &[Atom]) -> bool {
    let set: BTreeSet<&Atom> = atoms.iter().collect();
    set.len() == atoms.len()
}

/// An element of an orbit-finite set, in canonical form.
#[derive(Debug, Clone)]
pub struct Element {
    set: Arc<OrbitFiniteSet>,
    orbit: usize,
    registers: Vec<Atom>,
}

impl Element {
    pub fn from_index(set: &Arc<OrbitFiniteSet>, orbit: usize, registers: Vec<Atom>) -> Result<Self> {
        let descriptor = set
            .orbits
            .get(orbit)
            .ok_or_else(|| Error::UnknownOrbit(alloc::format!("#{orbit}")))?;
        if registers.len() != descriptor.degree() {
            return Err(Error::ArityMismatch {
                expected: descriptor.degree(),
                got: registers.len(),
            });
        }
        if !pairwise_distinct(&registers) {
            return Err(Error::NotDistinct);
        }
        Ok(Element {
            registers: descriptor.symmetry.canonicalize(&registers),
            set: Arc::clone(set),
            orbit,
        })
    }

    pub fn set(&self) -> &Arc<OrbitFiniteSet> {
        &self.set
    }

    pub fn orbit_index(&self) -> usize {
        self.orbit
    }

    pub fn orbit_name(&self) -> &str {
        &self.set.orbits[self.orbit].name
    }

    pub fn registers(&self) -> &[Atom] {
        &self.registers
    }

    fn same_set(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.set, &other.set) || self.set == other.set
    }

    /// Equality that reports elements of different sets as an error.
    pub fn try_eq(&self, other: &Element) -> Result<bool> {
        if !self.same_set(other) {
            return Err(Error::SetMismatch);
        }
        Ok(self.orbit == other.orbit
            && self.set.orbits[self.orbit]
                .symmetry
                .related(&self.registers, &other.registers))
    }

    /// A permutation sending `self` to `other`, if both lie in one orbit.
    pub fn same_orbit(&self, other: &Element) -> Option<Perm> {
        if !self.same_set(other) || self.orbit != other.orbit {
            return None;
        }
        Perm::extend_injection(self.registers.iter().copied().zip(other.registers.iter().copied()))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.orbit == other.orbit && self.registers == other.registers && self.same_set(other)
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit.hash(state);
        self.registers.hash(state);
    }
}

impl Nominal for Element {
    fn act(&self, perm: &Perm) -> Self {
        let mapped: Vec<Atom> = self.registers.iter().map(|&a| perm.apply(a)).collect();
        Element {
            registers: self.set.orbits[self.orbit].symmetry.canonicalize(&mapped),
            set: Arc::clone(&self.set),
            orbit: self.orbit,
        }
    }

    /// Coordinate symmetries permute registers, never erase them.
    fn support(&self) -> AtomSet {
        self.registers.iter().copied().collect()
    }
}
