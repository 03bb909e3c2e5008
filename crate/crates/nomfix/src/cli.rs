//! The `nomfix` command line.
//!
//! Exit codes: 0 for yes/success, 1 for no (inequivalent, rejected), 2 for
//! usage and file errors.

use std::fs;

use clap::{Parser, Subcommand};
use nomfix_core::termgraph::{alpha_bisim, raw_bisim};
use nomfix_core::{nomauto, Atom, NomDfa, TermGraph};

use crate::format::{self, AutomatonJson, GraphJson, OrbitSetJson};
use crate::tree::print_tree;
use crate::Error;

pub const YES: i32 = 0;
pub const NO: i32 = 1;
pub const FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nomfix", version, about = "Nominal sets and rational behaviours with names")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide alpha-equivalence of two graph states.
    AlphaEq {
        g1: String,
        s1: String,
        g2: String,
        s2: String,
    },
    /// Decide equality of two graph states, atoms compared literally.
    RawEq {
        g1: String,
        s1: String,
        g2: String,
        s2: String,
    },
    /// Print the depth-K unfolding of a state.
    Unfold {
        g: String,
        s: String,
        #[arg(long)]
        depth: usize,
        /// Print the cut as `_` instead of `⊥`.
        #[arg(long)]
        ascii: bool,
    },
    /// Print the free atoms of a state.
    Support { g: String, s: String },
    /// Describe the orbits of an orbit-finite set.
    Orbits { set: String },
    /// Run an automaton on a comma-separated word of atoms.
    DfaRun { automaton: String, word: String },
    /// Decide language equivalence of two automata.
    DfaEquiv {
        a1: String,
        a2: String,
        /// Compare by exhaustive search instead: words up to MAXLEN over POOL atoms.
        #[arg(long, num_args = 2, value_names = ["MAXLEN", "POOL"])]
        brute: Option<Vec<u64>>,
    },
}

fn read(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })
}

fn in_file<T>(path: &str, r: Result<T, Error>) -> Result<T, Error> {
    r.map_err(|e| match e {
        Error::Io { .. } => e,
        other => Error::Invalid(format!("{path}: {other}")),
    })
}

fn load_graph(path: &str) -> Result<TermGraph, Error> {
    let text = read(path)?;
    in_file(path, format::parse::<GraphJson>(&text).and_then(|j| format::graph_from_json(&j)))
}

fn load_automaton(path: &str) -> Result<NomDfa, Error> {
    let text = read(path)?;
    in_file(
        path,
        format::parse::<AutomatonJson>(&text).and_then(|j| format::automaton_from_json(&j)),
    )
}

fn parse_word(text: &str) -> Result<Vec<Atom>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map(Atom)
                .map_err(|_| Error::Invalid(format!("bad atom `{s}` in word `{text}`")))
        })
        .collect()
}

fn show_word(w: &[Atom]) -> String {
    if w.is_empty() {
        return "(empty word)".into();
    }
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn verdict(yes: bool, pos: &str, neg: &str) -> (i32, String) {
    if yes {
        (YES, format!("{pos}\n"))
    } else {
        (NO, format!("{neg}\n"))
    }
}

fn execute(command: Command) -> Result<(i32, String), Error> {
    match command {
        Command::AlphaEq { g1, s1, g2, s2 } => {
            let (a, b) = (load_graph(&g1)?, load_graph(&g2)?);
            let eq = alpha_bisim(&a, &s1, &b, &s2)?;
            Ok(verdict(eq, "alpha-equivalent", "not alpha-equivalent"))
        }
        Command::RawEq { g1, s1, g2, s2 } => {
            let (a, b) = (load_graph(&g1)?, load_graph(&g2)?);
            let eq = raw_bisim(&a, &s1, &b, &s2)?;
            Ok(verdict(eq, "equal", "not equal"))
        }
        Command::Unfold { g, s, depth, ascii } => {
            let t = load_graph(&g)?.unfold(&s, depth)?;
            Ok((YES, format!("{}\n", print_tree(&t, ascii))))
        }
        Command::Support { g, s } => {
            let free = load_graph(&g)?.free_atoms(&s)?;
            Ok((YES, format!("{:?}\n", format::atom_set_to_json(&free))))
        }
        Command::Orbits { set } => {
            let text = read(&set)?;
            let set = in_file(
                &set,
                format::parse::<OrbitSetJson>(&text).and_then(|j| format::orbit_set_from_json(&j)),
            )?;
            let mut out = String::new();
            for o in set.orbits() {
                let n = o.degree();
                let per_support = (1..=n).product::<usize>() / o.symmetry.order();
                out.push_str(&format!(
                    "{}: degree {}, symmetry order {}, elements per support {}\n",
                    o.name,
                    n,
                    o.symmetry.order(),
                    per_support
                ));
            }
            out.push_str(if set.is_strong() { "strong\n" } else { "not strong\n" });
            Ok((YES, out))
        }
        Command::DfaRun { automaton, word } => {
            let d = load_automaton(&automaton)?;
            let w = parse_word(&word)?;
            Ok(verdict(d.accepts(&w), "accept", "reject"))
        }
        Command::DfaEquiv { a1, a2, brute } => {
            let (d1, d2) = (load_automaton(&a1)?, load_automaton(&a2)?);
            let (witness, yes) = match brute.as_deref() {
                Some(&[max_len, pool]) => {
                    let pool = u32::try_from(pool)
                        .map_err(|_| Error::Invalid(format!("pool size {pool} is too large")))?;
                    let w = nomauto::brute_counterexample(&d1, &d2, max_len as usize, pool);
                    (w, format!("equivalent on words up to length {max_len} over {pool} atoms\n"))
                }
                _ => (nomauto::counterexample(&d1, &d2), "equivalent\n".into()),
            };
            Ok(match witness {
                None => (YES, yes),
                Some(w) => (NO, format!("not equivalent\ncounterexample: {}\n", show_word(&w))),
            })
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { FAILURE } else { YES };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(r) => r,
        Err(e) => (FAILURE, format!("error: {e}\n")),
    }
}
