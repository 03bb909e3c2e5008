//! Text form of finite trees.
//!
//! A node prints as `(op label? atoms... [bound... children...]...)`, one
//! block per binder group. The cut is `⊥`, or `_` in ASCII mode. Reading
//! needs the signature to know how many atoms and children follow.

use nomfix_core::termgraph::TreeGroup;
use nomfix_core::{Atom, BindingSignature, FiniteTree};

use crate::Error;

pub const CUT: &str = "⊥";
pub const CUT_ASCII: &str = "_";

pub fn print_tree(t: &FiniteTree, ascii: bool) -> String {
    let mut out = String::new();
    write_tree(t, ascii, &mut out);
    out
}

fn write_tree(t: &FiniteTree, ascii: bool, out: &mut String) {
    match t {
        FiniteTree::Cut => out.push_str(if ascii { CUT_ASCII } else { CUT }),
        FiniteTree::Node {
            op,
            label,
            atoms,
            groups,
        } => {
            out.push('(');
            out.push_str(op);
            if let Some(l) = label {
                out.push(' ');
                out.push_str(l);
            }
            for a in atoms {
                out.push_str(&format!(" {a}"));
            }
            for g in groups {
                for a in &g.bound_atoms {
                    out.push_str(&format!(" {a}"));
                }
                for c in &g.children {
                    out.push(' ');
                    write_tree(c, ascii, out);
                }
            }
            out.push(')');
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Word(String),
}

fn tokenize(text: &str) -> Vec<(Token, usize)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        match c {
            '(' => out.push((Token::Open, pos)),
            ')' => out.push((Token::Close, pos)),
            c if c.is_whitespace() => {}
            _ => {
                let mut word = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if d == '(' || d == ')' || d.is_whitespace() {
                        break;
                    }
                    word.push(d);
                    chars.next();
                }
                out.push((Token::Word(word), pos));
            }
        }
    }
    out
}

struct Parser<'s> {
    sig: &'s BindingSignature,
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        let at = self.tokens.get(self.pos).map_or(usize::MAX, |t| t.1);
        let msg = msg.into();
        if at == usize::MAX {
            Error::Invalid(format!("{msg} at end of input"))
        } else {
            Error::Invalid(format!("{msg} at offset {at}"))
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn word(&mut self, what: &str) -> Result<String, Error> {
        match self.tokens.get(self.pos) {
            Some((Token::Word(w), _)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn atom(&mut self) -> Result<Atom, Error> {
        let save = self.pos;
        let w = self.word("an atom")?;
        w.parse::<u32>().map(Atom).map_err(|_| {
            self.pos = save;
            self.error(format!("expected an atom, found `{w}`"))
        })
    }

    fn tree(&mut self) -> Result<FiniteTree, Error> {
        let save = self.pos;
        match self.next() {
            Some(Token::Word(w)) if w == CUT || w == CUT_ASCII => Ok(FiniteTree::Cut),
            Some(Token::Open) => {
                let op_name = self.word("an operation")?;
                let op = self.sig.op(&op_name).ok_or_else(|| {
                    self.pos -= 1;
                    self.error(format!("unknown operation `{op_name}`"))
                })?;
                let label = if op.labels.is_empty() {
                    None
                } else {
                    let l = self.word("a label")?;
                    if !op.labels.contains(&l) {
                        self.pos -= 1;
                        return Err(self.error(format!("label `{l}` not allowed for `{op_name}`")));
                    }
                    Some(l)
                };
                let atoms = (0..op.atoms).map(|_| self.atom()).collect::<Result<_, _>>()?;
                let mut groups = Vec::new();
                for g in &op.groups {
                    let bound_atoms = (0..g.bound).map(|_| self.atom()).collect::<Result<_, _>>()?;
                    let children = (0..g.children).map(|_| self.tree()).collect::<Result<_, _>>()?;
                    groups.push(TreeGroup {
                        bound_atoms,
                        children,
                    });
                }
                if self.next() != Some(Token::Close) {
                    self.pos -= 1;
                    return Err(self.error("expected `)`"));
                }
                Ok(FiniteTree::Node {
                    op: op_name,
                    label,
                    atoms,
                    groups,
                })
            }
            _ => {
                self.pos = save;
                Err(self.error("expected a tree"))
            }
        }
    }
}

pub fn parse_tree(sig: &BindingSignature, text: &str) -> Result<FiniteTree, Error> {
    let mut p = Parser {
        sig,
        tokens: tokenize(text),
        pos: 0,
    };
    let t = p.tree()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}
