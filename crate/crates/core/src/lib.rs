//! Computing with nominal sets and rational behaviours with names.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; file formats and the command line live
//! in the `nomfix` crate.
//!
//! * [`perm`]: atoms, finite permutations, restriction and factorisation.
//! * [`nomset`]: orbit-finite nominal sets as register tuples modulo a
//!   coordinate symmetry group.
//! * [`abstraction`]: name abstraction `[V]X` in canonical form.
//! * [`fsfunc`]: finitely supported functions `V -> X` as quadruples, plus
//!   the exponent machinery for `V^{n≠}` and strong exponents.
//! * [`termgraph`]: binding signatures, term graphs, unfolding, raw and
//!   alpha-aware bisimilarity.
//! * [`nomauto`]: deterministic nominal automata over the atom alphabet.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abstraction;
mod error;
pub mod fsfunc;
pub mod nomauto;
pub mod nomset;
pub mod nominal;
pub mod perm;
pub mod termgraph;
pub mod value;

pub use abstraction::Abstraction;
pub use error::Error;
pub use fsfunc::{DistinctFsFun, FsFun, NestedFsFun, Quadruple};
pub use nomauto::{NomDfa, Source, TargetExpr};
pub use nominal::{min_support, min_support_by, Nominal};
pub use nomset::{CoordGroup, Element, OrbitDescriptor, OrbitFiniteSet};
pub use perm::{fresh, Atom, AtomSet, Perm};
pub use termgraph::{BindingSignature, FiniteTree, GroupSpec, Node, OpSpec, TermGraph};
pub use value::Value;

pub type Result<T, E = Error> = core::result::Result<T, E>;
