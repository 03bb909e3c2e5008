//! A dynamically shaped finitely supported value, so that abstractions and
//! functions can nest to any depth.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::abstraction::Abstraction;
use crate::fsfunc::FsFun;
use crate::nominal::Nominal;
use crate::nomset::Element;
use crate::perm::{Atom, AtomSet, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Atom(Atom),
    /// An equivariant constant (empty support).
    Label(String),
    Tuple(Vec<Value>),
    Elem(Element),
    Abs(Box<Abstraction<Value>>),
    Fun(Box<FsFun<Value>>),
}

impl Value {
    pub fn atom(id: u32) -> Self {
        Value::Atom(Atom(id))
    }

    pub fn atoms<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Value::Tuple(ids.into_iter().map(Value::atom).collect())
    }

    pub fn as_atom(&self) -> Option<Atom> {
        match self {
            Value::Atom(a) => Some(*a),
            _ => None,
        }
    }

    pub fn as_fun(&self) -> Option<&FsFun<Value>> {
        match self {
            Value::Fun(f) => Some(f),
            _ => None,
        }
    }
}

impl From<Atom> for Value {
    fn from(a: Atom) -> Self {
        Value::Atom(a)
    }
}

impl From<FsFun<Value>> for Value {
    fn from(f: FsFun<Value>) -> Self {
        Value::Fun(Box::new(f))
    }
}

impl From<Abstraction<Value>> for Value {
    fn from(a: Abstraction<Value>) -> Self {
        Value::Abs(Box::new(a))
    }
}

impl From<Element> for Value {
    fn from(e: Element) -> Self {
        Value::Elem(e)
    }
}

impl Nominal for Value {
    fn act(&self, perm: &Perm) -> Self {
        match self {
            Value::Atom(a) => Value::Atom(perm.apply(*a)),
            Value::Label(l) => Value::Label(l.clone()),
            Value::Tuple(xs) => Value::Tuple(xs.iter().map(|x| x.act(perm)).collect()),
            Value::Elem(e) => Value::Elem(e.act(perm)),
            Value::Abs(a) => Value::Abs(Box::new(a.act(perm))),
            Value::Fun(f) => Value::Fun(Box::new(f.act(perm))),
        }
    }

    fn support(&self) -> AtomSet {
        match self {
            Value::Atom(a) => core::iter::once(*a).collect(),
            Value::Label(_) => AtomSet::new(),
            Value::Tuple(xs) => xs.iter().flat_map(|x| x.support()).collect(),
            Value::Elem(e) => e.support(),
            Value::Abs(a) => a.support(),
            Value::Fun(f) => f.support(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(a) => write!(f, "{a}"),
            Value::Label(l) => write!(f, "{l:?}"),
            Value::Tuple(xs) => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Value::Elem(e) => {
                write!(f, "{}[", e.orbit_name())?;
                for (i, a) in e.registers().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "]")
            }
            Value::Abs(a) => write!(f, "<{}>{}", a.binder(), a.body()),
            Value::Fun(g) => {
                write!(f, "fun(a={}, d={}", g.default_atom(), g.default_value())?;
                for (k, v) in g.keys().iter().zip(g.values()) {
                    write!(f, ", {k}->{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}
