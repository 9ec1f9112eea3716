//! End-to-end tests of the `equihom` binary: output shapes, determinism,
//! and the exit-code contract (0 ok, 1 check fail, 2 usage, 3 resource).

use std::process::{Command, Output};

use equihom::mackey::{isomorphic, norm_f2};
use equihom::report::HomologyTable;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equihom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equihom"))
        .args(args)
        .env(key, value)
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
fn homology_of_the_point_round_trips() {
    let out = run(&["homology", "--space", "pt", "--coeff", "B", "--max-degree", "1"]);
    assert!(out.status.success());
    let table: HomologyTable = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(table.space, "pt");
    assert_eq!(table.coefficient, "B");
    assert_eq!(table.rows.len(), 2);
    let h0 = table.rows[0].homology.to_functor().unwrap();
    assert!(isomorphic(&h0, &norm_f2()));
    assert!(table.rows[1].homology.to_functor().unwrap().is_zero());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["homology", "--space", "wedge(S1,S1)", "--max-degree", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let csv_args = ["homology", "--space", "Ssigma", "--max-degree", "2", "--format", "csv"];
    let c = run(&csv_args);
    let d = run(&csv_args);
    assert!(c.status.success());
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn reduced_sign_circle_csv() {
    let out = run(&[
        "homology", "--space", "Ssigma", "--coeff", "B", "--max-degree", "1", "--reduced",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "degree,top,bot,res,tr,weyl\n0,Z/2,0,,,\n1,0,Z/2,,,1\n"
    );
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    let out = run(&["homology", "--space", "S3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("S3"));

    let out = run(&["coind-check", "--space", "wedge(S1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cell_budget_exits_3() {
    let out = run_with_env(
        &["homology", "--space", "coind(RP2)", "--max-degree", "3"],
        "EQUIHOM_MAX_CELLS",
        "10",
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn config_answers() {
    let out = run(&["config", "pi0-emb-sigma", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8\n");

    let out = run(&["config", "norm-status", "--p", "0", "--q", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "MULTIPLE(2)\n");

    let out = run(&["config", "graph-count", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");

    let out = run(&["config", "aut-order", "--fixed", "3", "--free", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "48\n");

    let out = run(&["config", "emb", "--fixed", "2", "--q", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "false\n");

    let out = run(&["config", "graph-count", "--n", "12"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["config", "pi0-emb", "--fixed", "1", "--free", "1", "--q", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not supported"));
}

#[test]
fn check_commands_pass_and_report() {
    let out = run(&["coind-check", "--space", "pt", "--max-degree", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));

    let out = run(&["james-check", "--stage", "1", "--max-degree", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));

    let out = run(&["james-check", "--stage", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["splitting-check", "--space", "C2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_table() {
    let path = std::env::temp_dir().join("equihom-cli-test-table.json");
    let out = run(&[
        "homology", "--space", "S1", "--max-degree", "1", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let table: HomologyTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table.space, "S1");
    std::fs::remove_file(&path).ok();
}
