use std::process::{Command, Output};

use demazure_mult::weight_spec::parse_weight;
use demazure_mult_core::{Node, Weight};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure-mult"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn basic_module_squared_has_two_at_drop_four() {
    let rows = json(&[
        "outer-mult",
        "--i",
        "0",
        "--with",
        "Lambda0",
        "--s-max",
        "4",
    ]);
    let hit = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["j"] == 0 && r["s"] == 4)
        .expect("row j=0 s=4");
    assert_eq!(hit["mult"], "2");
    assert_eq!(hit["phi"]["L0"], 2);
    assert_eq!(hit["phi"]["w1"], 0);
    assert_eq!(hit["phi"]["delta"], -4);
}

#[test]
fn methods_produce_identical_tables() {
    for (i, with) in [
        ("0", "Lambda0"),
        ("0", "Lambda1"),
        ("1", "Lambda0"),
        ("1", "Lambda1 - delta"),
    ] {
        let strip = |method: &str| -> Vec<Value> {
            let rows = json(&[
                "outer-mult",
                "--i",
                i,
                "--with",
                with,
                "--s-max",
                "7",
                "--method",
                method,
                "--verbose",
            ]);
            rows.as_array()
                .unwrap()
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.as_object_mut().unwrap().remove("method");
                    r
                })
                .collect()
        };
        let closed = strip("closed-form");
        assert!(!closed.is_empty());
        assert_eq!(closed, strip("limit"), "i={i} with={with}");
        assert_eq!(closed, strip("oracle"), "i={i} with={with}");
    }
}

#[test]
fn flag_mult_two_has_two_rows() {
    let out = run(&["flag-mult", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "lambda,poly\n2,1\n0,q\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["character", "garbage"][..],
        &["character", "2*Lambda0-omega1"],
        &["gamma", "Lambda0 - omega1"],
        &["flag-mult", "-1"],
        &["outer-mult", "--i", "0", "--with", "2*Lambda0"],
        &["outer-mult", "--i", "3", "--with", "Lambda0"],
        &["verify", "nonsense"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_families_pass() {
    for which in [
        "partrel", "bformula", "triple", "orbit", "assembly", "transfer",
    ] {
        let out = run(&[
            "verify", which, "--s-max", "6", "--order", "20", "--k-max", "10", "--format", "csv",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{which}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = stdout(&out);
        assert!(text.starts_with("case,lhs,rhs,pass\n"));
        assert!(text.lines().count() > 1, "{which}");
        assert!(!text.contains(",false\n"), "{which}");
    }
}

#[test]
fn verify_report_is_independent_of_thread_count() {
    let report = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_demazure-mult"))
            .args(["verify", "partrel", "--s-max", "40", "--format", "json"])
            .env("DEMAZURE_MULT_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(report("1"), report("4"));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_demazure-mult"))
        .args(["flag-mult", "1"])
        .env("DEMAZURE_MULT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_reserializes_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "outer-mult",
            "--i",
            "1",
            "--with",
            "Lambda0",
            "--s-max",
            "12",
        ],
        &["character", "Lambda0 + Lambda1", "--depth", "4"],
        &["flag-mult", "9"],
        &["gamma", "3*Lambda0 + 2*omega1", "--lambda-max", "30"],
        &["verify", "bformula", "--order", "15"],
    ];
    for (n, args) in cases.iter().enumerate() {
        let path = dir.path().join(format!("out{n}.json"));
        let mut full = args.to_vec();
        full.extend(["--format", "json", "--out", path.to_str().unwrap()]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(out.stdout.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        let value: Value = serde_json::from_str(&written).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&value).unwrap() + "\n",
            written,
            "{args:?}"
        );
    }
}

#[test]
fn character_rows_parse_back_as_weights() {
    let rows = json(&["character", "2*Lambda0 + omega1 - 3*delta", "--depth", "3"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows[0]["weight"]["L0"], 2);
    assert_eq!(rows[0]["weight"]["w1"], 1);
    assert_eq!(rows[0]["weight"]["delta"], -3);
    assert_eq!(rows[0]["mult"], "1");
    for r in rows {
        assert_eq!(r["weight"]["L0"], 2);
        assert!(r["mult"].as_str().unwrap().parse::<u64>().unwrap() > 0);
    }
    let csv = stdout(&run(&[
        "character",
        "Lambda0",
        "--depth",
        "2",
        "--format",
        "csv",
    ]));
    let listed: Vec<Weight> = csv
        .lines()
        .skip(1)
        .map(|line| parse_weight(line.rsplit_once(',').unwrap().0).unwrap())
        .collect();
    assert_eq!(listed[0], Weight::LAMBDA0);
    assert!(listed.contains(&Weight::LAMBDA0.reflect(Node::Zero)));
    assert!(listed.contains(&Weight::LAMBDA0.shift_delta(-2)));
}
