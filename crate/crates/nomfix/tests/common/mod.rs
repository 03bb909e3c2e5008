#![allow(dead_code)]

pub mod gen;

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

pub struct GoldenCase {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

/// Splits on whitespace; `""` stands for an empty argument.
pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(data_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut words = l.split_whitespace();
            let name = words.next().unwrap().to_string();
            let exit = words.next().unwrap().parse().unwrap();
            let args = words
                .map(|w| if w == "\"\"" { String::new() } else { w.to_string() })
                .collect();
            GoldenCase { name, exit, args }
        })
        .collect()
}

/// Runs the binary from the data directory and returns the mismatches.
pub fn golden_failures() -> Vec<String> {
    let dir = data_dir();
    let mut failures = Vec::new();
    for case in golden_cases() {
        let out = Command::new(env!("CARGO_BIN_EXE_nomfix"))
            .args(&case.args)
            .current_dir(&dir)
            .output()
            .expect("spawn nomfix");
        let mut text = out.stdout;
        text.extend_from_slice(&out.stderr);
        let expected = std::fs::read(dir.join("expected").join(format!("{}.out", case.name)))
            .unwrap_or_default();
        let code = out.status.code().unwrap_or(-1);
        if code != case.exit {
            failures.push(format!("{}: exit {code}, expected {}", case.name, case.exit));
        } else if text != expected {
            failures.push(format!(
                "{}: output differs\n--- got\n{}--- expected\n{}",
                case.name,
                String::from_utf8_lossy(&text),
                String::from_utf8_lossy(&expected)
            ));
        }
    }
    failures
}
