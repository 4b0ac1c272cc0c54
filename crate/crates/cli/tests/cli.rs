use std::process::{Command, Output};

use specht_core::filtration::LayerRecord;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn dims_print_exact_integers() {
    let o = specht(&["dims", "4,1,1,1,1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim M = 15120, dim S = 56"));
    let o = specht(&["dims", "5,5,4,2,2"]);
    assert!(stdout(&o).contains("dim M = 4631346720, dim S = 4594590"));
    let o = specht(&["dims", "3"]);
    assert!(stdout(&o).contains("dim M = 1, dim S = 1"));
    assert_eq!(code(&specht(&["dims", "3,x"])), 2);
}

#[test]
fn hook_filtration_diagrams() {
    let o = specht(&["filtration", "4,1,1,1,1,1", "--e", "10"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for d in ["dim 56 ", "dim 70 ", "dim 504 ", "dim 1890 ", "dim 5040 ", "dim 7560 "] {
        assert!(out.contains(d), "{d}");
    }
    assert!(out.contains("weight L0+L9+L8+L7+L5"));
    assert!(out.contains("| 0 | 1 | 2 | 3 |\n+---+---+---+---+\n| 9 |"));
    assert!(out.contains("total 15120"));
}

#[test]
fn filtration_json_round_trips() {
    let o = specht(&["filtration", "5,5,4,2,2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let recs: Vec<LayerRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs.len(), 5);
    assert_eq!(recs[0].dim, "4594590");
    assert_eq!(recs[1].resolution[0].shape, "4|6,4,2,2");
    let again = serde_json::to_string_pretty(&recs).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
    let o = specht(&["filtration", "2,2", "--kind", "two-row", "--format", "json"]);
    let recs: Vec<LayerRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(code(&specht(&["filtration", "3,2", "--kind", "hook"])), 2);
}

#[test]
fn filtration_check_and_cap() {
    let o = specht(&["filtration", "3,1,1", "--e", "4", "--check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));
    let o = specht(&["filtration", "4,1,1,1,1,1", "--e", "10", "--check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("SKIPPED(cap)"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&specht(&["verify", "two-row-step-up", "--shape", "2,2", "--s", "1"])), 0);
    assert_eq!(code(&specht(&["verify", "relations", "--shape", "2,1", "--e", "3"])), 0);
    assert_eq!(code(&specht(&["verify", "two-row-step-up", "--shape", "1"])), 2);
    assert_eq!(code(&specht(&["verify", "no-such", "--shape", "2,2"])), 2);
    assert_eq!(code(&specht(&["verify", "hook-leg-y", "--shape", "3,1,1", "--e", "4"])), 0);
    assert_eq!(code(&specht(&["verify", "two-row-cyclic", "--shape", "3,2"])), 0);
    assert_eq!(code(&specht(&["verify", "relations", "--shape", "2,1", "--e", "2"])), 2);
    assert_eq!(code(&specht(&["bogus"])), 2);
}

#[test]
fn scans() {
    let o = specht(&["scan", "std-mu-unique", "--max-n", "8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("violations: 0"));
    let o = specht(&["scan", "hook-dims", "--max-n", "40"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 violations"));
    let o = specht(&["scan", "hook-inequality", "--max-n", "12", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn garnir_words() {
    let o = specht(&["garnir", "4,2", "--node", "1,2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("word    3 4 5 2 3 4"));
    let o = specht(&["garnir", "3,1,1", "--node", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["word"], serde_json::json!([4]));
    let o = specht(&["garnir", "5"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 Garnir nodes"));
}

#[test]
fn decomposition_numbers() {
    let o = specht(&["decomp", "1|3,2", "∅|3,3", "--charges", "0,-1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("d = 1"));
    let o = specht(&["decomp", "--pattern", "2,2,2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 deviations"));
    assert_eq!(code(&specht(&["decomp", "2|1", "2|1", "--charges", "0,0"])), 2);
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&specht(&["filtration", "3,2,2", "--check"]));
    let b = stdout(&specht(&["filtration", "3,2,2", "--check"]));
    assert_eq!(a, b);
}
