use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use gramdet::render::{closed_from_json, closed_to_json, poly_from_json, poly_to_json};
use gramdet_core::closed::closed_det;
use gramdet_core::poly::{IntPolynomial, Variable};
use gramdet_core::Category;
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;

fn gramdet(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gramdet"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .env_remove("GRAMDET_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn oplus_four_factored_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = gramdet(
        dir.path(),
        &["det", "o+", "4", "--poly", "--format", "json"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["category"], "o_plus");
    let factors: Vec<(String, i64)> = v["factored"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            (
                f["factor"].as_str().unwrap().to_string(),
                f["exp"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        factors,
        vec![("P_1".to_string(), 2), ("P_2".to_string(), 1)]
    );
    let p = poly_from_json(&v["poly"]).unwrap();
    assert_eq!(p, IntPolynomial::from_i64s(Variable::N, &[0, 0, -1, 0, 1]));
}

#[test]
fn odd_free_orthogonal_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = gramdet(dir.path(), &["det", "o+", "3", "--poly"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn verify_small_symmetric_range() {
    let dir = tempfile::tempdir().unwrap();
    let o = gramdet(dir.path(), &["verify", "s", "--max-k", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "4 determinants compared, 0 failures\n");
}

#[test]
fn verify_all_categories_reports_totals() {
    let dir = tempfile::tempdir().unwrap();
    let o = gramdet(dir.path(), &["verify", "--max-k", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["compared"], 30);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["categories"].as_array().unwrap().len(), 10);
}

#[test]
fn methods_agree_at_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let values: Vec<String> = ["brute", "closed", "epi"]
        .iter()
        .map(|m| {
            stdout(&gramdet(
                dir.path(),
                &["det", "s+", "4", "--n", "6", "--method", m],
            ))
        })
        .collect();
    assert_eq!(values[0], values[1]);
    assert_eq!(values[0], values[2]);
    let o = gramdet(
        dir.path(),
        &["det", "h", "3", "--n", "5", "--method", "both"],
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "det", "b", "4", "--poly", "--method", "brute", "--format", "json",
    ];
    let first = gramdet(dir.path(), &args);
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = gramdet(dir.path(), &args);
    assert_eq!(first.stdout, second.stdout);
    let fresh = gramdet(
        dir.path(),
        &[
            "--no-cache",
            args[0],
            args[1],
            args[2],
            args[3],
            args[4],
            args[5],
        ],
    );
    assert_eq!(fresh.status.code(), Some(0), "{}", stderr(&fresh));
}

#[test]
fn tampered_cache_fails_no_cache_check() {
    let dir = tempfile::tempdir().unwrap();
    gramdet(
        dir.path(),
        &["det", "s", "3", "--poly", "--method", "brute"],
    );
    let entry = fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let text = fs::read_to_string(&entry)
        .unwrap()
        .replace("\"1\"", "\"2\"");
    fs::write(&entry, text).unwrap();
    let o = gramdet(
        dir.path(),
        &["--no-cache", "det", "s", "3", "--poly", "--method", "brute"],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupt_cache_warns_and_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let clean = gramdet(
        dir.path(),
        &["det", "s", "3", "--poly", "--method", "brute"],
    );
    let entry = fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    fs::write(&entry, "{truncated").unwrap();
    let o = gramdet(
        dir.path(),
        &["det", "s", "3", "--poly", "--method", "brute"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    assert_eq!(o.stdout, clean.stdout);
    let repaired: Value = serde_json::from_str(&fs::read_to_string(&entry).unwrap()).unwrap();
    assert!(repaired["value"].is_object());
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["det", "s", "3"][..],
        &["det", "s", "3", "--n", "2", "--poly"],
        &["det", "q", "3", "--poly"],
        &["frobnicate"],
        &["weingarten", "o+", "4", "--n", "1"],
        &["epi", "s", "3"],
        &["orthopoly", "h"],
    ] {
        let o = gramdet(dir.path(), args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
    let help = gramdet(dir.path(), &["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn hplus_table_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = gramdet(
        dir.path(),
        &["orthopoly", "--depth", "3", "--format", "csv"],
    );
    assert_eq!(
        stdout(&o),
        "k,gamma,beta,conjectured_beta,match\n1,1,1,1,true\n2,2,2,2,true\n3,3,3/2,3/2,true\n"
    );
}

#[test]
fn matrix_verbs_share_labels() {
    let dir = tempfile::tempdir().unwrap();
    let g: Value = serde_json::from_str(&stdout(&gramdet(
        dir.path(),
        &["gram", "o", "4", "--n", "3", "--format", "json"],
    )))
    .unwrap();
    let w: Value = serde_json::from_str(&stdout(&gramdet(
        dir.path(),
        &["weingarten", "o", "4", "--n", "3", "--format", "json"],
    )))
    .unwrap();
    assert_eq!(g["partitions"], w["partitions"]);
    assert_eq!(g["matrix"][0][0], "9");
    assert_eq!(w["matrix"].as_array().unwrap().len(), 3);
}

#[test]
fn closed_form_json_round_trip() {
    for cat in Category::ALL {
        for k in 0..=4 {
            let c = closed_det(cat, k).unwrap();
            assert_eq!(closed_from_json(&closed_to_json(&c)).unwrap(), c);
        }
    }
}

proptest! {
    #[test]
    fn polynomial_json_round_trip(coeffs in prop::collection::vec(any::<i64>(), 0..12), t in any::<bool>()) {
        let var = if t { Variable::T } else { Variable::N };
        let p = IntPolynomial::new(var, coeffs.into_iter().map(BigInt::from).collect());
        let v = poly_to_json(&p);
        prop_assert_eq!(poly_from_json(&v).unwrap(), p);
    }
}
