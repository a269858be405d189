// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::process::{Command, Output};

use serde_json::Value;

fn edomset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edomset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let out = edomset(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    edomset(args).status.code().expect("exit code")
}

#[test]
fn generate_triangle_edgelist() {
    let text = ok(&["generate", "--family", "web", "--n", "1"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "# family=web n=1 vertices=3 edges=3 anchors=0,1,2"
    );
    assert_eq!(&lines[1..], ["0 1", "0 2", "1 2"]);
}

#[test]
fn generate_web_edgelist_is_sorted_and_complete() {
    let text = ok(&[
        "generate", "--family", "web", "--n", "4", "--format", "edgelist",
    ]);
    let body: Vec<(usize, usize)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(' ').map(|t| t.parse::<usize>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert_eq!(body.len(), 81);
    assert!(body.iter().all(|(u, v)| u < v));
    assert!(body.windows(2).all(|w| w[0] < w[1]));
    assert!(text.starts_with("# family=web n=4 vertices=42 edges=81 anchors="));
}

#[test]
fn generate_gasket_json() {
    let doc: Value = serde_json::from_str(&ok(&[
        "generate", "--family", "gasket", "--n", "3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(doc["family"], "gasket");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["vertices"], 15);
    assert_eq!(doc["anchors"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 27);
}

#[test]
fn generate_dot_marks_anchors() {
    let text = ok(&[
        "generate", "--family", "gasket", "--n", "2", "--format", "dot",
    ]);
    assert!(text.starts_with("graph gasket_2 {"));
    assert_eq!(text.matches("anchor=").count(), 3);
    assert_eq!(text.matches(" -- ").count(), 9);
}

#[test]
fn generate_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let printed = ok(&["generate", "--family", "web", "--n", "3", "--format", "csv"]);
    ok(&[
        "generate",
        "--family",
        "web",
        "--n",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    assert!(printed.starts_with("u,v\n"));
    assert_eq!(printed.lines().count(), 28);
}

#[test]
fn gamma_by_every_method() {
    assert_eq!(
        ok(&[
            "gamma",
            "--family",
            "web",
            "--n",
            "3",
            "--method",
            "bruteforce"
        ]),
        "3\n"
    );
    assert_eq!(
        ok(&[
            "gamma",
            "--family",
            "gasket",
            "--n",
            "3",
            "--method",
            "bruteforce"
        ]),
        "5\n"
    );
    assert_eq!(
        ok(&[
            "gamma",
            "--family",
            "gasket",
            "--n",
            "5",
            "--method",
            "recursion"
        ]),
        "45\n"
    );
    assert_eq!(
        ok(&[
            "gamma",
            "--family",
            "web",
            "--n",
            "6",
            "--method",
            "closedform"
        ]),
        "81\n"
    );
    for n in ["3", "4", "7", "12"] {
        assert_eq!(
            ok(&[
                "gamma",
                "--family",
                "web",
                "--n",
                n,
                "--method",
                "recursion"
            ]),
            ok(&[
                "gamma",
                "--family",
                "web",
                "--n",
                n,
                "--method",
                "closedform"
            ]),
        );
    }
}

#[test]
fn count_table_values() {
    assert_eq!(ok(&["count", "--family", "gasket", "--n", "4"]), "737\n");
    assert_eq!(
        ok(&[
            "count",
            "--family",
            "gasket",
            "--n",
            "6",
            "--method",
            "recursion"
        ]),
        "11968284390834034602027534554922752\n"
    );
    assert_eq!(ok(&["count", "--family", "web", "--n", "5"]), "223\n");
}

#[test]
fn count_closed_form_is_a_usage_error() {
    assert_eq!(
        code(&[
            "count",
            "--family",
            "web",
            "--n",
            "4",
            "--method",
            "closedform"
        ]),
        2
    );
}

#[test]
fn bruteforce_beyond_cap_is_a_capacity_error() {
    let out = edomset(&[
        "gamma",
        "--family",
        "web",
        "--n",
        "4",
        "--method",
        "bruteforce",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["gamma", "--family", "web", "--n", "2"]), 2);
    assert_eq!(code(&["gamma", "--family", "web", "--n", "0"]), 2);
    assert_eq!(code(&["gamma", "--family", "ring", "--n", "3"]), 2);
    assert_eq!(code(&["generate", "--family", "web"]), 2);
    assert_eq!(code(&["table", "--n", "2"]), 2);
    assert_eq!(code(&["table", "--n", "4", "--format", "dot"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["generate", "--family", "web", "--n", "40"]), 3);
}

#[test]
fn table_csv_rows() {
    assert_eq!(
        ok(&["table", "--n", "3"]),
        "n,E_n,meds_web,meds_gasket\n3,27,1,2\n"
    );
    let text = ok(&["table", "--n", "6", "--format", "csv"]);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(
        rows,
        [
            "n,E_n,meds_web,meds_gasket",
            "3,27,1,2",
            "4,81,5,737",
            "5,243,223,60406401428",
            "6,729,12853595,11968284390834034602027534554922752",
        ]
    );
}

#[test]
fn table_json_extends_past_six() {
    let doc: Value = serde_json::from_str(&ok(&["table", "--n", "8", "--format", "json"])).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(
        rows[3]["meds_gasket"],
        "11968284390834034602027534554922752"
    );
    assert_eq!(rows[5]["n"], 8);
    assert_eq!(rows[5]["E_n"], "6561");
    let csv = ok(&["table", "--n", "8"]);
    let last: Vec<&str> = csv.lines().last().unwrap().split(',').collect();
    assert_eq!(rows[5]["meds_web"], last[2]);
    assert_eq!(rows[5]["meds_gasket"], last[3]);
}

#[test]
fn classes_report_is_json() {
    let doc: Value =
        serde_json::from_str(&ok(&["classes", "--family", "gasket", "--n", "2"])).unwrap();
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 10);
    for c in classes {
        let inhabited = c["inhabited"].as_bool().unwrap();
        assert_eq!(inhabited, c.get("min_cardinality").is_some());
    }
}

#[test]
fn verify_below_three_records_oracle_values() {
    let text = ok(&["verify", "--n", "2"]);
    assert!(text.contains("INFO web n=2 gamma=2"));
    assert!(text.contains("INFO gasket n=2 gamma=2"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_three_reports_every_check() {
    let out = edomset(&["verify", "--n", "3"]);
    let text = stdout(&out);
    for name in [
        "web gamma vs recursion",
        "web gamma vs closed form",
        "gasket gamma vs recursion",
    ] {
        assert!(
            text.lines()
                .any(|l| l.starts_with("PASS ") && l.contains(name)),
            "{name}"
        );
    }
    let checks = text
        .lines()
        .filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL "))
        .count();
    assert_eq!(checks, 10);
    let failed = text.lines().any(|l| l.starts_with("FAIL "));
    assert_eq!(out.status.code(), Some(if failed { 1 } else { 0 }));
}

#[test]
fn verify_four_is_a_capacity_error() {
    assert_eq!(code(&["verify", "--n", "4"]), 3);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "generate", "--family", "gasket", "--n", "5", "--format", "json",
    ];
    assert_eq!(ok(&args), ok(&args));
    let args = ["classes", "--family", "web", "--n", "2"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_edomset"))
            .args([
                "count",
                "--family",
                "gasket",
                "--n",
                "3",
                "--method",
                "bruteforce",
            ])
            .env("EDOM_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    assert_eq!(run("1"), run("4"));
    let bad = Command::new(env!("CARGO_BIN_EXE_edomset"))
        .args(["table", "--n", "3"])
        .env("EDOM_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    let first = ok(&["count", "--family", "gasket", "--n", "5", "--cache", c]);
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(stored["gasket/5/meds_count/recursion"], "60406401428");
    assert_eq!(
        ok(&["count", "--family", "gasket", "--n", "5", "--cache", c]),
        first
    );

    // cached values are served as stored, keyed by method
    std::fs::write(
        &cache,
        r#"{"web/4/gamma/recursion": "9", "web/4/gamma/closedform": "10"}"#,
    )
    .unwrap();
    assert_eq!(
        ok(&["gamma", "--family", "web", "--n", "4", "--cache", c]),
        "9\n"
    );
    assert_eq!(
        ok(&[
            "gamma",
            "--family",
            "web",
            "--n",
            "4",
            "--method",
            "closedform",
            "--cache",
            c
        ]),
        "10\n"
    );

    std::fs::write(&cache, "not json").unwrap();
    assert_eq!(
        code(&["gamma", "--family", "web", "--n", "4", "--cache", c]),
        2
    );
}
