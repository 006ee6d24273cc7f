use std::io::Write;
use std::process::{Command, Stdio};

use posbasis::cli::{run, Outcome};
use posbasis::{BasisFamilyJson, CompactSet};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("posbasis").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout))
}

#[test]
fn headline_values() {
    assert_eq!(cli(&["dn", "[0,1]", "4"]).stdout, "5\n");
    assert_eq!(cli(&["maxdim", "[0,1]", "4"]).stdout, "3\n");
    assert_eq!(cli(&["tau", "111"]).stdout, "4\n");
    assert_eq!(cli(&["sigma", "0110"]).stdout, "3\n");
    assert_eq!(cli(&["nodes", "[0,1]", "3"]).stdout, "0 1/2 1\n");
    assert_eq!(cli(&["lorentz", "2,0,1"]).stdout, "2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["dn", "[1,0]", "3"]).code, 2);
    assert_eq!(cli(&["dn", "[0,1", "3"]).code, 2);
    assert_eq!(cli(&["tau", "1021"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["dn", "{0} U {1}", "3"]).code, 1);
    assert_eq!(cli(&["maxdim", "{0} U {1}", "3"]).code, 1);
    assert_eq!(cli(&["interval-basis", "0", "1", "3", "--variant", "unanchored"]).code, 1);
    assert_eq!(cli(&["lorentz", "0,1"]).code, 1);
    assert_eq!(cli(&["lorentz", "1/4,0,1", "--cap", "3"]).code, 1);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn json_outputs_follow_the_schemas() {
    let v = json(&["dn", "{0} U [1,2] U {3}", "5", "--json"]);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["tag"], "LAMBDA_HALF_ODD");
    let set: CompactSet = serde_json::from_value(v["set"].clone()).unwrap();
    assert_eq!(set.to_string(), "{0} U [1,2] U {3}");

    let v = json(&["profile", "{0} U [1,2] U {3}", "--json"]);
    assert_eq!(v["profile"]["lambda"], 2);
    assert_eq!(v["profile"]["theta_left"], 1);

    let v = json(&["tau", "10010110001", "--json"]);
    assert_eq!(v["tau"], 12);
    assert_eq!(json(&["maxdim", "[0,1]", "4", "--json"])["max_dim"], 3);
    assert_eq!(json(&["sigma", "111", "--json"])["sigma"], 2);
    assert_eq!(json(&["nodes", "[0,1] U [2,3]", "4", "--json"])["sigma"], 4);

    let v = json(&["lorentz", "[\"1/4\", 0, 1]", "--json"]);
    assert_eq!(v["lorentz_degree"], 5);
    assert_eq!(v["theorem_applies"], false);
}

#[test]
fn basis_json_round_trips() {
    for args in [
        vec!["basis", "{0} U [1,2] U {3}", "5", "--json"],
        vec!["basis", "[0,1] U [2,3]", "4", "--nodes", "0,1,2,3", "--json"],
        vec!["interval-basis", "-1", "1", "4", "--variant", "left-anchored", "--json"],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let parsed: BasisFamilyJson = serde_json::from_str(&out.stdout).unwrap();
        let fam = parsed.clone().into_family().unwrap();
        assert_eq!(serde_json::to_value(fam.to_json().unwrap()).unwrap(), serde_json::to_value(&parsed).unwrap());
        let verdict = cli(&["verify", &fam.omega_set.to_string(), &out.stdout]);
        assert_eq!(verdict.code, 0, "{}", verdict.stdout);
        assert_eq!(verdict.stdout, "ACCEPT\n");
    }
}

#[test]
fn verify_rejections() {
    let out = cli(&["verify", "[-1,1]", "[[1,-2,1],[1,0,-1],[1,2,1]]", "--json"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "REJECT");
    assert_eq!(v["reasons"][0]["code"], "NO_EXACT_NODE");
    assert_eq!(cli(&["verify", "[0,1]", "[[0,0,1],[0,0,1]]"]).code, 1);
    assert_eq!(cli(&["verify", "[0,1]", "[[0,1],[\"-1\",1]]"]).code, 1);
    assert_eq!(cli(&["verify", "[0,1]", "{not json"]).code, 2);
    assert_eq!(cli(&["verify", "[0,1]", "/nonexistent/basis.json"]).code, 1);
}

#[test]
fn oracle_subcommands() {
    let v = json(&["oracle", "tau", "111", "--nodes", "0,1", "--json"]);
    assert_eq!((v["formula"].as_u64(), v["oracle"].as_u64(), v["status"].as_str()), (Some(4), Some(4), Some("MATCH")));
    let v = json(&["oracle", "dn", "{0} U [1,2] U {3}", "5", "--json"]);
    assert_eq!(v["oracle"], 6);
    assert_eq!(v["status"], "MATCH");
    assert_eq!(cli(&["oracle", "dn", "[0,1] U [2,3] U [4,5]", "6", "--limit", "5"]).code, 1);
}

#[test]
fn binary_pipes_basis_into_verify() {
    let exe = env!("CARGO_BIN_EXE_posbasis");
    let set = "[0,1/2] U {1} U {2} U [3,4]";
    let basis = Command::new(exe).args(["basis", set, "5", "--json"]).output().unwrap();
    assert!(basis.status.success());
    let mut child = Command::new(exe)
        .args(["verify", set, "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&basis.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ACCEPT\n");

    let bad = Command::new(exe).args(["tau", "12"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn lorentz_cap_from_environment() {
    let exe = env!("CARGO_BIN_EXE_posbasis");
    let capped = Command::new(exe).args(["lorentz", "1/4,0,1"]).env("POSBASIS_LORENTZ_CAP", "4").output().unwrap();
    assert_eq!(capped.status.code(), Some(1));
    let roomy = Command::new(exe).args(["lorentz", "1/4,0,1"]).env("POSBASIS_LORENTZ_CAP", "5").output().unwrap();
    assert_eq!(String::from_utf8(roomy.stdout).unwrap(), "5\n");
}
