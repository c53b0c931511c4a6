//! Golden-file and round-trip tests for the `univ` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn univ(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_univ"))
        .args(args)
        .output()
        .expect("run univ")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .replace("\r\n", "\n")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .replace("\r\n", "\n")
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["count", "--n", "4", "--k", "2", "--sigma", "2"],
            "count_n4_k2_s2.out",
        ),
        (
            &["arch", "--sigma", "4", "11234432122314332144"],
            "arch_fig1_w.out",
        ),
        (
            &["arch", "--sigma", "4", "12234323134112344412"],
            "arch_fig1_v.out",
        ),
        (
            &["enum", "--n", "4", "--k", "2", "--sigma", "2"],
            "enum_n4_k2_s2.out",
        ),
        (
            &["enum", "--n", "3", "--k", "1", "--sigma", "2"],
            "enum_n3_k1_s2.out",
        ),
        (
            &[
                "enum", "--n", "2", "--k", "1", "--sigma", "2", "--from", "1", "--limit", "1",
            ],
            "enum_n2_k1_s2_from1_limit1.out",
        ),
        (
            &["rank", "--k", "2", "--sigma", "2", "2211"],
            "rank_2211.out",
        ),
        (
            &["closed-forms", "--n", "3", "--sigma", "3"],
            "closed_forms_n3_s3.out",
        ),
        (
            &["count", "--n", "4", "--k", "2", "--sigma", "2", "--json"],
            "count_json.out",
        ),
    ];
    for (args, file) in cases {
        let out = univ(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), golden(file), "{args:?}");
    }
}

#[test]
fn out_of_range_rank_is_domain_error() {
    let out = univ(&["unrank", "--n", "4", "--k", "2", "--sigma", "2", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        golden("unrank_out_of_range.err")
    );
}

#[test]
fn exit_codes() {
    let usage = [
        &["count", "--n", "4", "--sigma", "2"][..],
        &["rank", "--k", "2", "--sigma", "2", "12x"],
        &["unrank", "--n", "4", "--k", "2", "--sigma", "2", "-1"],
        &["count", "--n", "4", "--k", "2", "--sigma", "0"],
        &["frobnicate"],
    ];
    for args in usage {
        let out = univ(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert_eq!(
            String::from_utf8(out.stderr).unwrap().lines().count(),
            1,
            "{args:?}"
        );
    }
    let domain = [
        &["rank", "--k", "2", "--sigma", "2", "13"][..],
        &["unrank", "--n", "3", "--k", "2", "--sigma", "2", "0"],
        &[
            "enum", "--n", "4", "--k", "2", "--sigma", "2", "--from", "5",
        ],
        &["verify", "--n", "30", "--k", "1", "--sigma", "2"],
    ];
    for args in domain {
        assert_eq!(univ(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn enum_words_rank_back_to_their_position() {
    let from = 40;
    let out = univ(&[
        "enum", "--n", "9", "--k", "2", "--sigma", "3", "--from", "40", "--limit", "25",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let words = stdout(&out);
    assert_eq!(words.lines().count(), 25);
    for (i, word) in words.lines().enumerate() {
        let ranked = univ(&["rank", "--k", "2", "--sigma", "3", word]);
        assert_eq!(stdout(&ranked), format!("{}\nmember: true\n", from + i));
    }
}

#[test]
fn json_shapes() {
    let out = univ(&["enum", "--n", "4", "--k", "2", "--sigma", "2", "--json"]);
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3]["command"], "enum");
    assert_eq!(lines[3]["result"]["rank"], "3");
    assert_eq!(lines[3]["result"]["word"], "2121");

    let out = univ(&["rank", "--k", "2", "--sigma", "2", "2121", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["params"]["n"], 4);
    assert_eq!(v["result"]["rank"], "3");
    assert_eq!(v["result"]["member"], true);

    let out = univ(&["arch", "--sigma", "4", "11234432122314332144", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["result"]["index"], 4);
    assert_eq!(
        v["result"]["arch_starts"],
        serde_json::json!([1, 6, 10, 15])
    );
    assert_eq!(v["result"]["suffix"], "4");

    // counts past 64 bits stay exact decimal strings
    let out = univ(&["count", "--n", "80", "--k", "3", "--sigma", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v["result"].as_str().unwrap().len() > 20);
}

#[test]
fn verify_reports_pass() {
    let out = univ(&["verify", "--n", "8", "--k", "2", "--sigma", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for check in [
        "count: pass",
        "enum: pass",
        "rank: pass",
        "unrank: pass",
        "verify: pass",
    ] {
        assert!(text.contains(check), "{text}");
    }
}

#[test]
fn wide_alphabet_round_trip() {
    let out = univ(&[
        "unrank",
        "--n",
        "12",
        "--k",
        "1",
        "--sigma",
        "11",
        "123456789",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let word = stdout(&out).trim().to_string();
    assert!(word.contains(','));
    let ranked = univ(&["rank", "--k", "1", "--sigma", "11", &word]);
    assert_eq!(stdout(&ranked), "123456789\nmember: true\n");
}
