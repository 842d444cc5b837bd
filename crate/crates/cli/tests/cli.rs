//! End-to-end runs of the `coarseflag` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use coarseflag::corpus::{arrangement, arrangements};
use coarseflag::matroid::{fano, from_arrangement, render_flats};
use coarseflag::oriented::covectors_from_arrangement;
use coarseflag::series::coarse_numerator;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coarseflag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn corpus_file(dir: &Path, name: &str) -> String {
    write(dir, &format!("{name}.arr"), &arrangement(name).unwrap().render())
}

#[test]
fn series_examples() {
    let o = run(&["series", "--uniform", "3,4", "--y1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "14 + 68*T + 14*T^2\n"));
    let o = run(&["series", "--pg", "3,2", "--normalized", "--y1"]);
    assert_eq!(stdout(&o), "1 + 18/5*T + T^2\n");
    let o = run(&["series", "--uniform", "1,1"]);
    assert_eq!(stdout(&o), "1 + Y\n");
    let o = run(&["series", "--fano", "--y1"]);
    assert_eq!(stdout(&o), "30 + 108*T + 30*T^2\n");
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&run(&["series", "--pg", "3,3", "--normalized", "--y1"]));
    let json: Value = serde_json::from_str(&stdout(&run(&["series", "--pg", "3,3", "--normalized", "--y1", "--format", "json"]))).unwrap();
    assert_eq!(json["text"].as_str().unwrap(), text.trim_end());
    let res = coarse_numerator(&coarseflag::matroid::pg(3, 3).unwrap()).unwrap();
    let coeffs: Vec<(i64, i64)> = json["value"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c[0].as_i64().unwrap(), c[1].as_i64().unwrap()))
        .collect();
    let expected: Vec<(i64, i64)> = res
        .normalized_y1
        .coeffs()
        .iter()
        .map(|c| (c.numer().try_into().unwrap(), c.denom().try_into().unwrap()))
        .collect();
    assert_eq!(coeffs, expected);

    let full: Value = serde_json::from_str(&stdout(&run(&["series", "--uniform", "3,4", "--format", "json"]))).unwrap();
    assert_eq!(full["numerator"]["t1"], serde_json::json!([[8, 1], [26, 1], [26, 1], [8, 1]]));
    assert_eq!(full["pi1"], serde_json::json!([14, 1]));
}

#[test]
fn series_tsv() {
    let o = run(&["series", "--uniform", "3,4", "--y1", "--format", "tsv"]);
    assert_eq!(stdout(&o), "t\ty\tcoefficient\n0\t-\t14\n1\t-\t68\n2\t-\t14\n");
}

#[test]
fn topes_census_and_totals() {
    let dir = TempDir::new().unwrap();
    let u34 = corpus_file(dir.path(), "u34");
    let o = run(&["topes", "--arr", &u34]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "topes 14\n8 x (1 + 4*T + T^2) simplicial\n6 x (1 + 6*T + T^2)\ntotal 14 + 68*T + 14*T^2\nmatches series: yes\n"
    );
    let coord = corpus_file(dir.path(), "coordinate3");
    let o = run(&["topes", "--arr", &coord]);
    assert!(stdout(&o).contains("8 x (1 + 4*T + T^2) simplicial\n"));

    let u47 = corpus_file(dir.path(), "u47");
    let o = run(&["topes", "--arr", &u47, "--format", "tsv"]);
    assert_eq!(
        stdout(&o),
        "count\th\tsimplicial\n22\t1 + 11*T + 11*T^2 + T^3\ttrue\n22\t1 + 17*T + 17*T^2 + T^3\tfalse\n\
         30\t1 + 23*T + 23*T^2 + T^3\tfalse\n10\t1 + 29*T + 29*T^2 + T^3\tfalse\n"
    );
}

#[test]
fn topes_total_equals_series_on_corpus() {
    let dir = TempDir::new().unwrap();
    for a in arrangements() {
        let path = corpus_file(dir.path(), a.name);
        let topes: Value = serde_json::from_str(&stdout(&run(&["topes", "--arr", &path, "--format", "json"]))).unwrap();
        let series: Value = serde_json::from_str(&stdout(&run(&["series", "--arr", &path, "--y1", "--format", "json"]))).unwrap();
        assert_eq!(topes["total"], series["value"], "{}", a.name);
        assert_eq!(topes["matches_series"], true);
    }
}

#[test]
fn covector_files_are_accepted() {
    let dir = TempDir::new().unwrap();
    let c = covectors_from_arrangement(&arrangement("u34").unwrap().rows()).unwrap();
    let path = write(dir.path(), "u34.cov", &c.render());
    let o = run(&["topes", "--cov", &path]);
    assert!(stdout(&o).contains("total 14 + 68*T + 14*T^2"));
    let o = run(&["series", "--cov", &path, "--y1"]);
    assert_eq!(stdout(&o), "14 + 68*T + 14*T^2\n");
}

#[test]
fn check_examples() {
    let o = run(&["check", "--fano", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = rep["checks"].as_array().unwrap();
    let find = |name: &str| checks.iter().find(|c| c["name"] == name).unwrap().clone();
    assert_eq!(find("rank3-nonorientability")["outcome"], "non-orientable");

    let dir = TempDir::new().unwrap();
    let u34 = corpus_file(dir.path(), "u34");
    let o = run(&["check", "--arr", &u34, "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("lower-bound\tholds\tstrict\ttrue\n"));
    assert!(out.contains("rank3-simpliciality\tholds\tno\ttrue\n"));

    let o = run(&["check", "--uniform", "2,5", "--format", "tsv"]);
    let out = stdout(&o);
    assert!(out.contains("conjecture-bounds\tnot-applicable"));
    assert!(out.contains("palindromicity\tholds\tpalindromic\ttrue"));
}

#[test]
fn check_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let path = corpus_file(dir.path(), "nine_a");
    let a = run(&["check", "--arr", &path, "--format", "json"]);
    let b = run(&["check", "--arr", &path, "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad_syntax = write(dir.path(), "bad.flats", "matroid\nn three\n");
    assert_eq!(code(&run(&["series", "--flats", &bad_syntax])), 2);
    let invalid = write(dir.path(), "invalid.flats", "matroid\nn 2\nrank 1\nflat 0\nflat 1 0\n");
    assert_eq!(code(&run(&["series", "--flats", &invalid])), 3);
    let ragged = write(dir.path(), "ragged.arr", "1 0\n1\n");
    assert_eq!(code(&run(&["series", "--arr", &ragged])), 2);
    let bad_cov = write(dir.path(), "bad.cov", "covectors\nn 2\n00\n+0\n");
    assert_eq!(code(&run(&["topes", "--cov", &bad_cov])), 3);
    assert_eq!(code(&run(&["series", "--flats", "/nonexistent/x.flats"])), 2);
    assert_eq!(code(&run(&["series", "--uniform", "5,3"])), 3);
    assert_eq!(code(&run(&["series", "--pg", "3,6"])), 3);
    assert_eq!(code(&run(&["series", "--fano", "--uniform", "3,4"])), 2);
    assert_eq!(code(&run(&["series"])), 2);
    assert_eq!(code(&run(&["series", "--fano", "--bogus"])), 2);
    assert_eq!(code(&run(&["topes", "--fano"])), 2);
}

#[test]
fn verify_small_passes() {
    let o = run(&["verify", "small"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("PASS pg-closed-form r=3 q=3"));
    assert!(out.contains("PASS rank3-closed-form 20/20"));
    assert!(!out.contains("FAIL"));
}

const HEADER: &str = "file\trank\tpi1\tn_y1\tlower_bound\tconjecture_bounds\tlinear_bound\treal_rooted\tnonorientable\terror";

#[test]
fn scan_two_files_and_empty_dir() {
    let dir = TempDir::new().unwrap();
    corpus_file(dir.path(), "u34");
    write(dir.path(), "fano.flats", &render_flats(&fano()));
    write(dir.path(), "notes.txt", "ignored");
    let o = run(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], HEADER);
    assert_eq!(lines[1], "fano.flats\t3\t30\t30,108,30\tnot-applicable\tholds\tnot-applicable\tholds\tholds\t-");
    assert_eq!(lines[2], "u34.arr\t3\t14\t14,68,14\tholds\tholds\tholds\tholds\tinconclusive\t-");

    let empty = TempDir::new().unwrap();
    let o = run(&["scan", empty.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), format!("{HEADER}\n"));
}

#[test]
fn scan_is_parallel_deterministic_and_records_errors() {
    let dir = TempDir::new().unwrap();
    for a in arrangements() {
        corpus_file(dir.path(), a.name);
    }
    write(dir.path(), "broken.arr", "1 0\n1\n");
    let d = dir.path().to_str().unwrap();
    let serial = stdout(&run(&["scan", d]));
    let parallel = stdout(&run(&["scan", d, "--jobs", "4"]));
    assert_eq!(serial, parallel);

    let rows: Vec<&str> = serial.lines().skip(1).collect();
    assert_eq!(rows.len(), arrangements().len() + 1);
    let broken = rows.iter().find(|r| r.starts_with("broken.arr")).unwrap();
    assert_eq!(*broken, "broken.arr\t-\t-\t-\t-\t-\t-\t-\t-\tline 2: expected 2 entries, found 1");
    for a in arrangements() {
        let row = rows.iter().find(|r| r.starts_with(&format!("{}.arr\t", a.name))).unwrap();
        let cells: Vec<&str> = row.split('\t').collect();
        let res = coarse_numerator(&from_arrangement(&a.rows()).unwrap()).unwrap();
        let coeffs: Vec<String> = res.at_y1().coeffs().iter().map(ToString::to_string).collect();
        assert_eq!(cells[1], a.rank.to_string());
        assert_eq!(cells[2], res.poincare_at_one().to_string());
        assert_eq!(cells[3], coeffs.join(","));
        assert_eq!(cells[9], "-");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("n.txt");
    let o = run(&["series", "--uniform", "3,4", "--y1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(out).unwrap(), "14 + 68*T + 14*T^2\n");
}

#[test]
fn help_and_version() {
    let o = run(&["--version"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("coarseflag "));
    let o = run(&["scan", "--help"]);
    assert!(stdout(&o).contains("lower_bound, conjecture_bounds, linear_bound, real_rooted"));
}
