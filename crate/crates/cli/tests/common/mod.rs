#![allow(dead_code)]

use std::path::PathBuf;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Output {
    run_mutated(args, None)
}

pub fn run_mutated(args: &[&str], mutate: Option<stackycovers_core::oracle::Identity>) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stackycovers").chain(args.iter().copied());
    let code = stackycovers::run_with_mutation(argv, mutate, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).expect("utf-8 stdout"),
        stderr: String::from_utf8(err).expect("utf-8 stderr"),
    }
}

pub fn sweep(name: &str) -> String {
    fixture("sweeps", name).to_string_lossy().into_owned()
}

pub fn fixture(dir: &str, name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(dir).join(name)
}

/// Parses CSV output into header plus rows.
pub fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().unwrap().iter().map(str::to_string).collect();
    let rows = rdr
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect();
    (header, rows)
}

pub fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}

/// Compares against `tests/golden/<name>`; `BLESS=1` rewrites the file.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = fixture("golden", name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        let line = expected
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .map_or_else(|| expected.lines().count().min(actual.lines().count()), |i| i);
        Err(format!("{name} differs from golden output at line {}", line + 1))
    }
}
