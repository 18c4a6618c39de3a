//! The command-line binary: exit statuses, output streams, determinism and
//! the JSON schemas.

mod common;

use std::process::{Command, Output};

use serde_json::Value;
use ymseries::closedforms::{sp_flat, sun_flat};
use ymseries::exactalg::{series_expand, RatFun};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ymseries"))
        .args(args)
        .env_remove("YM_TRUNCATION_DEFAULT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sp1_latex_at_genus_three() {
    let o = run(&[
        "poincare", "--group", "sp", "--rank", "1", "--genus", "3", "--format", "latex",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), sp_flat(1, 3).unwrap().to_latex());
    let sp1 = common::printed_examples()
        .into_iter()
        .find(|e| e.name == "sp1")
        .unwrap();
    assert_eq!(stdout(&o).trim(), sp1.eval(3).to_latex());
    assert!(o.stderr.is_empty());
}

#[test]
fn su2_coefficient_row() {
    let o = run(&[
        "series", "--group", "su", "--rank", "2", "--genus", "2", "--order", "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let want: Vec<String> = series_expand(&sun_flat(2, 2).unwrap(), 6)
        .unwrap()
        .coeffs
        .iter()
        .map(|c| c.to_string())
        .collect();
    assert_eq!(stdout(&o).trim(), want.join(" "));
}

#[test]
fn verification_verbs_succeed() {
    assert_eq!(
        run(&["verify-isomorphisms", "--genus", "2"]).status.code(),
        Some(0)
    );
    let o = run(&[
        "verify-recursion",
        "--group",
        "so-odd",
        "--rank",
        "2",
        "--w2",
        "1",
        "--genus",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS SO(5) w2=1 l=2 degree=40"));
    let o = run(&[
        "verify-appendix",
        "--cone-specs",
        "20",
        "--samples",
        "50",
        "--order",
        "30",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_with_two_on_stderr() {
    for args in [
        vec!["poincare", "--group", "sp", "--rank", "1"],
        vec![
            "poincare", "--group", "so-even", "--rank", "1", "--genus", "2",
        ],
        vec![
            "poincare", "--group", "u", "--rank", "2", "--genus", "2", "--w2", "1",
        ],
        vec![
            "stratum",
            "--group",
            "u",
            "--rank",
            "2",
            "--genus",
            "2",
            "--mu",
            "(1,1);(0,1)",
        ],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn truncation_default_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ymseries"))
        .args(["series", "--group", "sp", "--rank", "1", "--genus", "2"])
        .env("YM_TRUNCATION_DEFAULT", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().count(), 6);
    let o = run(&["series", "--group", "sp", "--rank", "1", "--genus", "2"]);
    assert_eq!(stdout(&o).split_whitespace().count(), 41);
}

#[test]
fn output_is_deterministic() {
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "strata-list",
            "--group",
            "so-even",
            "--rank",
            "3",
            "--w2",
            "1",
            "--genus",
            "2",
            "--degree",
            "12",
            "--format",
            "json",
        ],
        vec![
            "components",
            "--group",
            "so-odd",
            "--rank",
            "3",
            "--surface-i",
            "2",
            "--format",
            "json",
        ],
        vec![
            "verify-recursion",
            "--group",
            "u",
            "--rank",
            "3",
            "--k",
            "2",
            "--genus",
            "3",
            "--format",
            "json",
        ],
    ];
    for args in cases {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_schemas() {
    let o = run(&[
        "poincare", "--group", "u", "--rank", "2", "--k", "1", "--genus", "2", "--format", "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let f = RatFun::parse(v["series"].as_str().unwrap()).unwrap();
    assert_eq!(f, ymseries::closedforms::zagier_un(2, 1, 2).unwrap());
    assert_eq!(v["group"], "U(2)");

    let o = run(&[
        "components",
        "--group",
        "so-even",
        "--rank",
        "3",
        "--surface-i",
        "1",
        "--mu",
        "(2,1);(1,0)[zero]",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["validity"]["l_min"], 2);
    assert_eq!(v["validity"]["o_factors_above_rank_two"], false);
    assert_eq!(v["components"][0]["w2"], 0);
    assert_eq!(v["components"][1]["bundle"], "nontrivial_bundle");

    let o = run(&[
        "verify-recursion",
        "--group",
        "sp",
        "--rank",
        "2",
        "--genus",
        "2",
        "--degree",
        "20",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(
        v["strata_used"].as_u64().unwrap() as usize,
        v["strata"].as_array().unwrap().len()
    );
    assert!(v["residual"].as_array().unwrap().iter().all(|c| c == "0"));

    let o = run(&[
        "stratum",
        "--group",
        "so-odd",
        "--rank",
        "2",
        "--w2",
        "1",
        "--genus",
        "2",
        "--mu",
        "(1,1);(1,0)[zero]",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["component"], "plus");
    assert_eq!(v["factors"][0]["kind"], "central_u");
    assert_eq!(v["factors"][1]["kind"], "flat_so_odd");
}
