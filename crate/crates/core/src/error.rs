use alloc::string::String;
use core::fmt;

use crate::perm::Atom;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two elements or automata belong to different orbit-finite sets.
    SetMismatch,
    /// A concretisation or a table needed a fresh atom and got a used one.
    AtomNotFresh(Atom),
    DefaultAtomNotFresh(Atom),
    /// `fill` needs `2n` pairwise distinct atoms.
    FillArity { n: usize, got: usize },
    FillNotDistinct,
    ArityMismatch { expected: usize, got: usize },
    NotDistinct,
    NotStrong,
    UnknownOrbit(String),
    UnknownState(String),
    SignatureMismatch,
    InvalidGraph(String),
    InvalidAutomaton(String),
    /// Bad orbit descriptor: degree too large, malformed generators, duplicate names.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SetMismatch => write!(f, "set mismatch"),
            Error::AtomNotFresh(a) => write!(f, "atom not fresh: {a}"),
            Error::DefaultAtomNotFresh(a) => write!(f, "default atom not fresh: {a}"),
            Error::FillArity { n, got } => {
                write!(f, "fill requires 2n distinct atoms (n = {n}, got {got})")
            }
            Error::FillNotDistinct => write!(f, "fill requires 2n distinct atoms"),
            Error::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected}, got {got}")
            }
            Error::NotDistinct => write!(f, "tuple components are not pairwise distinct"),
            Error::NotStrong => write!(f, "exponent requires a strong nominal set"),
            Error::UnknownOrbit(o) => write!(f, "unknown orbit `{o}`"),
            Error::UnknownState(s) => write!(f, "unknown state `{s}`"),
            Error::SignatureMismatch => write!(f, "signature mismatch"),
            Error::InvalidGraph(m) => write!(f, "invalid term graph: {m}"),
            Error::InvalidAutomaton(m) => write!(f, "invalid automaton: {m}"),
            Error::Config(m) => write!(f, "configuration error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
