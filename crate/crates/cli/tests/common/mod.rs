#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_decolimit"))
        .args(args)
        .output()
        .expect("spawn decolimit")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Value of a `key = value` report line, up to the first space.
pub fn field(out: &Output, key: &str) -> Option<String> {
    let prefix = format!("{key} = ");
    stdout(out).lines().find_map(|l| {
        l.strip_prefix(&prefix)
            .map(|v| v.split(' ').next().unwrap().to_string())
    })
}

pub fn field_f64(out: &Output, key: &str) -> f64 {
    field(out, key)
        .unwrap_or_else(|| panic!("no `{key}` in:\n{}", stdout(out)))
        .parse()
        .unwrap()
}

pub fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/toffoli_decomposition.qc")
}

/// The fixture's gate lines repeated `times` times inside one period.
pub fn repeated_fixture(times: usize) -> String {
    let body = std::fs::read_to_string(fixture()).unwrap();
    let gates: Vec<&str> = body.lines().filter(|l| l.starts_with("gate")).collect();
    let mut text = String::from("qubits c1 c2 t\n");
    for _ in 0..times {
        for g in &gates {
            text.push_str(g);
            text.push('\n');
        }
    }
    text
}
