use std::process::{Command, Output};

use serde_json::Value;

fn bfcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bfcorr"))
        .args(args)
        .env_remove("BFCORR_CUTOFF")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cauchy_passes() {
    let o = bfcorr(&["verify", "cauchy", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS cauchy (model A, n 3, D 10, seed 0)"));
}

#[test]
fn neutral_two_point_as_json() {
    let o = bfcorr(&["vev", "--model", "B", "--side", "fermion", "--points", "2", "--cutoff", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["word"], serde_json::json!(["phi(z1)", "phi(z2)"]));
    let terms = v["series"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 7);
    for t in terms {
        let e = t["exponents"].as_array().unwrap();
        let k = e[1].as_i64().unwrap();
        assert_eq!(e[0].as_i64().unwrap(), -k);
        let expected = match k {
            0 => "1",
            _ if k % 2 == 1 => "-2",
            _ => "2",
        };
        assert_eq!(t["coefficient"], expected);
    }
}

#[test]
fn report_schema() {
    let o = bfcorr(&["verify", "vev-match", "--model", "B", "--n", "1", "--cutoff", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["check", "elapsed_ms", "params", "status", "witnesses"]);
    let mut params: Vec<&str> = v["params"].as_object().unwrap().keys().map(String::as_str).collect();
    params.sort();
    assert_eq!(params, ["cutoff", "model", "n", "seed"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["params"]["model"], "B");
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["verify", "kernel", "--seed", "17", "--format", "json"];
    let a = bfcorr(&args);
    let b = bfcorr(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["params"]["seed"], 17);
}

#[test]
fn parallel_runs_are_sorted_and_identical() {
    let serial = bfcorr(&["verify", "all", "--quick", "--cutoff", "3"]);
    let parallel = bfcorr(&["verify", "all", "--quick", "--cutoff", "3", "--parallel"]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    let names: Vec<String> = stdout(&serial)
        .lines()
        .filter_map(|l| l.strip_prefix("PASS ").map(|r| r.split(' ').next().unwrap().to_string()))
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 18);
}

#[test]
fn cutoff_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bfcorr"))
        .args(["verify", "ope-residues"])
        .env("BFCORR_CUTOFF", "5")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("(D 5, seed 0)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bfcorr(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(bfcorr(&["verify", "cauchy", "--cutoff", "0"]).status.code(), Some(2));
    assert_eq!(bfcorr(&["verify", "det-formula", "--model", "B"]).status.code(), Some(2));
    assert_eq!(bfcorr(&["vev", "--model", "A", "--points", "3"]).status.code(), Some(2));
    assert_eq!(bfcorr(&["expand", "1/(z-q)", "--order", "z,w"]).status.code(), Some(2));
    // A pole off z = 0 and z = ±w.
    assert_eq!(bfcorr(&["expand", "1/(2*z - w)", "--order", "z,w"]).status.code(), Some(2));
}

#[test]
fn expand_prints_exact_coefficients() {
    let o = bfcorr(&["expand", "1/(2*z - 2*w)", "--order", "z,w", "--cutoff", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "series[z,w; D=2]: 1/2*z^-1 + 1/2*z^-2*w");
}

#[test]
fn characters_agree() {
    let o = bfcorr(&["character", "--model", "A", "--max-level", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let dims: Vec<i64> = v["levels"].as_array().unwrap().iter().map(|l| l["fermion"].as_i64().unwrap()).collect();
    assert_eq!(dims, [1, 1, 2, 3, 5, 7, 11]);
    assert!(v["levels"].as_array().unwrap().iter().all(|l| l["fermion"] == l["boson"]));
}
