use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rookfft::algebra::to_groupoid;
use rookfft::rook::{enumerate, size};
use rookfft::{AlgebraElement, Basis, Complex64, FourierCoefficients};

fn rookfft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookfft"))
        .args(args)
        .output()
        .expect("run rookfft")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn sample(n: usize) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        Basis::Semigroup,
        enumerate(n)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, Complex64::new((i % 5) as f64 - 2.0, (i % 3) as f64))),
    )
    .unwrap()
}

#[test]
fn enumerate_lists_every_element_with_a_count_footer() {
    let out = rookfft(&["enumerate", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "cycle_link,flat");
    assert_eq!(rows.len() as u64 - 1, size(3));
    assert!(text.lines().last().unwrap().contains("34"));
}

#[test]
fn transform_then_invert_recovers_the_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("f.json");
    let hat = dir.path().join("hat.json");
    let back = dir.path().join("back.json");
    let f = sample(3);
    fs::write(&input, f.to_json()).unwrap();

    let out = rookfft(&[
        "transform", "--input", path(&input), "--algorithm", "stein", "--convert", "--output", path(&hat),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&hat).unwrap();
    assert!(text.contains("\"within_bound\": true"));
    FourierCoefficients::from_json(&text).unwrap();

    let out = rookfft(&["invert", "--input", path(&hat), "--output", path(&back)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recovered = AlgebraElement::from_json(&fs::read_to_string(&back).unwrap()).unwrap();
    assert!(recovered.approx_eq(&to_groupoid(&f).unwrap(), 1e-9));
}

#[test]
fn recursive_transform_refuses_groupoid_input_without_convert() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.json");
    fs::write(&input, to_groupoid(&sample(2)).unwrap().to_json()).unwrap();
    let out = rookfft(&["transform", "--input", path(&input), "--algorithm", "recursive"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error["), "{err}");
    assert_eq!(err.trim_end().lines().count(), 1);
}

#[test]
fn analyze_reports_energies_that_sum_to_the_total() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ballots.csv");
    fs::write(&input, "ballot,count\n1->1;2->2;3->3,10\n1->2;2->1,4\n\n3->1,2\n").unwrap();
    let out = rookfft(&["analyze", "--input", path(&input), "--n", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let total = doc["total"].as_f64().unwrap();
    let sum: f64 = doc["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["energy"].as_f64().unwrap())
        .sum();
    assert!((total - sum).abs() <= 1e-9 * total.max(1.0));
}

#[test]
fn malformed_ballots_report_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    fs::write(&input, "ballot,count\n1->1,2\n1->4,1\n").unwrap();
    let out = rookfft(&["analyze", "--input", path(&input), "--n", "3"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(rookfft(&["transform"]).status.code(), Some(2));
    assert_eq!(rookfft(&["enumerate", "--n", "12"]).status.code(), Some(2));
    assert_eq!(rookfft(&["--help"]).status.code(), Some(0));
}
