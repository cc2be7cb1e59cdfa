// Copyright 2026 The pairdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pairdecomp"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    stdout
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut with = vec!["--json"];
    with.extend_from_slice(args);
    serde_json::from_str(&ok(&with)).unwrap()
}

#[test]
fn vote_rules_on_cycle_profile() {
    let p = data("cycle3.profile");
    let p = p.to_str().unwrap();
    assert!(ok(&["vote", "borda", p]).contains("Borda tallies: A1 72, A2 71, A3 67"));
    assert!(ok(&["vote", "condorcet", p]).contains("no Condorcet winner (cycle)"));
    let d = json(&["vote", "dodgson", p]);
    assert_eq!(d["winners"], serde_json::json!(["A1"]));
    assert_eq!(d["scores"][0]["value"], 11);
    assert!(ok(&["vote", "iiia", p, "--pair", "A1", "A3"]).contains("IIIA A1 vs A3: 5"));
    let k = json(&["vote", "kemeny", p]);
    assert_eq!(k["optima"], serde_json::json!(["A1 > A2 > A3"]));
    let c = json(&["vote", "committee", p, "--size", "2"]);
    assert_eq!(c["committees"], serde_json::json!([["A1", "A2"]]));
}

#[test]
fn decompose_reports_components() {
    let p = data("cycle3.profile");
    let out = ok(&["decompose", p.to_str().unwrap()]);
    assert!(out.contains("A1 > A2 > A3 > A1: 35/3"), "{out}");
    let s = json(&["decompose", data("sym6.graph").to_str().unwrap()]);
    assert_eq!(s["T"], "24");
    assert_eq!(s["edges"][0]["cyclic"], "-2");
    assert_eq!(s["edges"][4]["cyclic"], "-2.5");
    let a = ok(&["decompose", data("asym6.graph").to_str().unwrap(), "--dot"]);
    assert!(a.contains("A1 A2: d -3, cpi -5, cyclic 2"));
    assert!(a.contains("digraph cyclic {"));
}

#[test]
fn zero_graph_decomposes_to_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("zero.graph");
    std::fs::write(&f, "asym 3\n1 2 0\n1 3 0\n2 3 0\n").unwrap();
    let v = json(&["decompose", f.to_str().unwrap()]);
    for key in ["d", "cpi", "cyclic"] {
        assert!(v[key].as_array().unwrap().iter().all(|x| x == "0"), "{key}");
    }
}

#[test]
fn tsp_actions() {
    let a = data("asym6.graph");
    let a = a.to_str().unwrap();
    let s = data("sym6.graph");
    let s = s.to_str().unwrap();
    assert_eq!(
        json(&["tsp", "exact", a, "--longest"])["exact"]["length"],
        "10"
    );
    assert_eq!(
        json(&["tsp", "exact", a, "--shortest"])["exact"]["length"],
        "-10"
    );
    assert_eq!(json(&["tsp", "bound", s])["lower_bound"], "12");
    let h = json(&["tsp", "heuristic", s, "--shortest", "--compare"]);
    assert_eq!(h["heuristic"]["length"], "13");
    assert_eq!(
        h["heuristic"]["tour"],
        serde_json::json!([1, 2, 5, 4, 3, 6])
    );
    assert_eq!(h["gap"], "0");
    let p = json(&["tsp", "pathlen", a, "--path", "1,2,4,3,2,5"]);
    assert_eq!(
        (&p["length"], &p["cyclic"], &p["cpi"]),
        (&"-1".into(), &"4".into(), &"-5".into())
    );
    let c = json(&[
        "tsp",
        "pathlen",
        a,
        "--path",
        "A1 A2 A4 A6 A3 A5",
        "--closed",
    ]);
    assert_eq!(c["length"], "-2");
}

#[test]
fn exit_codes() {
    let a = data("asym6.graph");
    let a = a.to_str().unwrap();
    assert_eq!(run(&["tsp", "bound", a]).0, 2, "mode error");
    assert_eq!(
        run(&["tsp", "exact", a, "--limit", "5"]).0,
        3,
        "capacity error"
    );
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(run(&["search-ratliff", "--n", "3", "--k", "1"]).0, 2);
    assert_eq!(run(&["vote", "borda", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["vote", "borda", a]).0, 2, "graph is not a profile");
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("dup.graph");
    std::fs::write(&f, "sym 3\n1 2 1\n1 2 2\n2 3 1\n").unwrap();
    let (code, _, err) = run(&["decompose", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn verify_runs_and_is_deterministic() {
    let args = [
        "verify",
        "decomposition",
        "--n",
        "5",
        "--trials",
        "1000",
        "--seed",
        "7",
    ];
    let first = ok(&args);
    assert!(first.contains("violations: 0") && first.contains("result: pass"));
    assert_eq!(first, ok(&args));
    let v = json(&["verify", "kemeny-borda", "--n", "6", "--trials", "1"]);
    assert_eq!(v["trials"], 1);
}

#[test]
fn ratliff_witness_is_replayable() {
    let out = ok(&["search-ratliff", "--n", "4", "--k", "1", "--trials", "100"]);
    let profile = out.split("profile:\n").nth(1).expect("witness emitted");
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("w.profile");
    std::fs::write(&f, profile).unwrap();
    let ranking = out
        .lines()
        .find_map(|l| l.strip_prefix("Kemeny ranking: "))
        .unwrap();
    let k = json(&["vote", "kemeny", f.to_str().unwrap()]);
    assert_eq!(k["optima"], serde_json::json!([ranking]));
}
