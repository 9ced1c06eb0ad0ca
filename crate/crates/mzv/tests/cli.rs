use std::process::{Command, Output};

use mzv_core::algebra::{int, Rational};
use mzv_core::sums::{eval_z_dia, zeta_dia};
use mzv_core::{Index, WordCombo};
use serde_json::Value;

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn expand_prints_exact_json() {
    let o = mzv(&["expand", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"index":[1,2],"weight":3,"terms":[{"index":[3],"coeff":"1"}]}"#);
}

#[test]
fn expansion_round_trips_through_evaluation() {
    for s in ["1,2", "1,1,3", "2,1,2", "1,2,1,2", "3,1,4", "1,1,1,1,2"] {
        let o = mzv(&["expand", s]);
        assert_eq!(o.status.code(), Some(0), "{s}");
        let v = &json_lines(&o)[0];
        let mut combo = WordCombo::zero();
        for term in v["terms"].as_array().unwrap() {
            let entries: Vec<u32> = term["index"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as u32).collect();
            let k = Index::from_slice(&entries);
            assert!(k.is_ge2());
            let c: i64 = term["coeff"].as_str().unwrap().parse().unwrap();
            combo = combo + WordCombo::from_index(&k).scale_rational(&int(c));
        }
        let k: Vec<u32> = s.split(',').map(|x| x.parse().unwrap()).collect();
        let k = Index::from_slice(&k);
        assert_eq!(eval_z_dia(&combo, 10).unwrap(), zeta_dia(&k, 10).unwrap(), "{s}");
    }
}

#[test]
fn expand_accepts_compositions_and_interpolation() {
    let a = stdout(&mzv(&["expand", "--composition", "2,1,1,2"]));
    let b = stdout(&mzv(&["expand", "1,2,3"]));
    assert_eq!(a, b);
    let o = mzv(&["expand", "1,2", "--interpolated"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert!(v["terms"].is_array());
}

#[test]
fn invalid_input_exits_with_one() {
    for args in [
        &["expand", "2,1"][..],
        &["expand", "0,2"],
        &["eval", "zeta", "1,2", "--n", "3", "--t", "1/2"],
        &["eval", "kawashima-f", "1", "--n", "3", "--t", "2"],
        &["verify", "--family", "nonsense"],
        &["enumerate", "--weight", "5", "--class", "odd"],
    ] {
        let o = mzv(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = mzv(&["expand", "2,1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not admissible"));
}

#[test]
fn eval_values() {
    let v = &json_lines(&mzv(&["eval", "dia", "1,2", "--n", "3"]))[0];
    assert_eq!(v["value"], "9/8");
    assert_eq!(v["N"], 3);
    let v = &json_lines(&mzv(&["eval", "kawashima-f", "1", "--n", "2", "--t", "1/2"]))[0];
    assert_eq!(v["value"], "1/3");
    assert_eq!(v["t"], "1/2");
    let lines = json_lines(&mzv(&["eval", "combo", r#"{"1,2":"1","3":"-1"}"#, "--n-max", "6"]));
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l["value"] == "0"));
    let text = stdout(&mzv(&["--format", "text", "eval", "h", "--composition", "1,1", "--n", "4"]));
    let h: Rational = text.trim().parse().unwrap();
    assert_eq!(h, mzv_core::sums::h_n(&mzv_core::Composition::new(vec![1, 1]).unwrap(), 4));
}

#[test]
fn enumerate_counts() {
    let lines = json_lines(&mzv(&["enumerate", "--weight", "7", "--class", "ge2"]));
    assert_eq!(lines.len(), 8);
    for l in &lines {
        assert_eq!(l["weight"], 7);
        assert!(l["depth"].is_u64() && l["height"].is_u64());
    }
    let text = stdout(&mzv(&["--format", "text", "enumerate", "--weight", "4", "--class", "adm"]));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn verify_reports_per_outcome_and_summary() {
    let o = mzv(&["verify", "--family", "kaneko-sakata", "--max-weight", "5", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["ok"] == true && l["family"] == "kaneko-sakata"));
    let summary: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).lines().last().unwrap()).unwrap();
    assert_eq!(summary["failures"], 0);
    assert_eq!(summary["checks"].as_u64().unwrap() as usize, lines.len());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--family", "harmonic", "--max-weight", "4", "--n-max", "5"];
    let one = mzv(&[&["--jobs", "1"][..], &args].concat());
    let many = mzv(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(one.stdout, many.stdout);
    let sampled = ["--seed", "17", "verify", "--family", "msw", "--max-weight", "5", "--n-max", "4", "--sample", "5"];
    assert_eq!(mzv(&sampled).stdout, mzv(&sampled).stdout);
    assert_eq!(json_lines(&mzv(&sampled)).iter().filter(|l| l["N"] == 1).count(), 5);
}

#[test]
fn conjecture_exit_status_tracks_the_target() {
    let o = mzv(&["conjecture", "--weight", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["met"], true);
    assert_eq!(v["target"], 5);
    let o = mzv(&["conjecture", "--weight", "6", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json_lines(&o)[0]["exhausted"], true);
}

#[test]
fn latex_block() {
    let s = stdout(&mzv(&["latex", "3,1,4"]));
    assert!(s.contains(r"\zeta(3,1,4) &= \zeta(5,3)"));
    assert!(s.starts_with(r"\begin{align*}"));
}
