mod common;

use common::{check_golden, run, sweep};

fn table(sweep_name: &str, format: &str) -> String {
    let out = run(&["table", "--sweep", &sweep(sweep_name), "--format", format]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

fn pin(sweep_name: &str, format: &str) {
    let stem = sweep_name.trim_end_matches(".sweep");
    let actual = table(sweep_name, format);
    check_golden(&format!("{stem}.{format}"), &actual).unwrap();
    assert_eq!(table(sweep_name, format), actual, "output not deterministic");
}

#[test]
fn golden_rational_n1_csv() {
    pin("rational_n1.sweep", "csv");
}

#[test]
fn golden_rational_n1_md() {
    pin("rational_n1.sweep", "md");
}

#[test]
fn golden_rational_n2_large_csv() {
    pin("rational_n2_large.sweep", "csv");
}

#[test]
fn golden_rational_n2_large_md() {
    pin("rational_n2_large.sweep", "md");
}

#[test]
fn golden_triple_diagonal_csv() {
    pin("triple_diagonal.sweep", "csv");
}

#[test]
fn golden_triple_diagonal_md() {
    pin("triple_diagonal.sweep", "md");
}
