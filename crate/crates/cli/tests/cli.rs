use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn stiefel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stiefel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Numeric leaves of a JSON tree keyed by dotted path; arrays of numbers are
/// kept whole.
fn json_numbers(v: &Value, prefix: &str, out: &mut BTreeMap<String, String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, c)| json_numbers(c, &key(k), out)),
        Value::Number(n) => {
            out.insert(prefix.to_string(), n.to_string());
        }
        Value::Array(items) if items.iter().all(Value::is_number) => {
            let inner: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            out.insert(prefix.to_string(), format!("[{}]", inner.join(", ")));
        }
        _ => {}
    }
}

fn plain_fields(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

#[test]
fn json_and_plain_carry_the_same_numbers() {
    for cmd in ["presentation", "classes", "invariants"] {
        for (f, n, k) in [
            ("PV", "5", "2"),
            ("Y", "9", "2"),
            ("Y", "7", "1"),
            ("PV", "14", "9"),
        ] {
            let json = stiefel(&[cmd, f, n, k, "--format", "json"]);
            let plain = stiefel(&[cmd, f, n, k]);
            assert!(
                json.status.success() && plain.status.success(),
                "{cmd} {f} {n} {k}"
            );
            let doc: Value = serde_json::from_str(&stdout(&json)).unwrap();
            assert_eq!(doc["spec_version"], "1");
            let mut numbers = BTreeMap::new();
            json_numbers(&doc, "", &mut numbers);
            let fields = plain_fields(&stdout(&plain));
            assert!(!numbers.is_empty());
            for (k, v) in &numbers {
                assert_eq!(fields.get(k), Some(v), "{cmd} {f} {n} {k}");
            }
        }
    }
}

#[test]
fn presentation_reports_cutoff_and_betti() {
    let o = stiefel(&["presentation", "PV", "5", "2", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = &doc["presentation"];
    assert_eq!(p["cutoff"]["name"], "N");
    assert_eq!(p["cutoff"]["value"], 4);
    assert_eq!(p["excluded_generator"], "y_3");
    assert_eq!(p["dim"], 7);
    assert_eq!(p["betti"].as_array().unwrap().len(), 8);
    assert!(!doc["citations"].as_array().unwrap().is_empty());
}

#[test]
fn invalid_ids_fail_loudly() {
    let o = stiefel(&["presentation", "Y", "4", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Y requires n > 2k"), "{}", stderr(&o));

    let o = stiefel(&["classes", "PW", "5", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no tangent SW formula for PW"));

    let o = stiefel(&["invariants", "PV", "3", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invariants_pv_14_9() {
    let o = stiefel(&["invariants", "PV", "14", "9", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let u = &doc["invariants"]["ucharrank"];
    assert_eq!(u["status"], "Determined");
    assert_eq!(u["value"], 5);
    assert!(!u["rule"].as_str().unwrap().is_empty());
}

#[test]
fn sweep_rows_are_valid_ids_only() {
    let o = stiefel(&[
        "sweep", "--family", "Y", "--n", "5..12", "--k", "1..3", "--format", "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    let expected = (5..=12u32)
        .flat_map(|n| (1..=3u32).filter(move |&k| n > 2 * k))
        .count();
    assert_eq!(rows.len(), expected);
    for row in &rows {
        let (n, k): (u32, u32) = (row[1].parse().unwrap(), row[2].parse().unwrap());
        assert!(n > 2 * k);
        if &row[9] == "Determined" {
            assert!(!row[11].is_empty());
        }
    }
    assert!(stderr(&o).contains("skipped"));
}

#[test]
fn markdown_sweep_has_nine_rows() {
    let o = stiefel(&[
        "sweep", "--family", "PV", "--n", "10..10", "--k", "1..9", "--format", "markdown",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("| PV |"))
            .count(),
        9
    );
}

#[test]
fn empty_sweep_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    let o = stiefel(&[
        "sweep",
        "--family",
        "Y",
        "--n",
        "2..4",
        "--k",
        "2..3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("family,n,k,dim"));
}

#[test]
fn unwritable_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = stiefel(&[
        "sweep",
        "--family",
        "PV",
        "--n",
        "5..6",
        "--k",
        "1..2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--family", "PW", "--n", "2..25", "--k", "1..24"];
    assert_eq!(stiefel(&args).stdout, stiefel(&args).stdout);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        stiefel(&["verify", "--suites", "parity", "--max-n", "64"])
            .status
            .code(),
        Some(0)
    );
    let o = stiefel(&["verify", "--max-n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("vacuous"));
    assert_eq!(
        stiefel(&["verify", "--suites", "bogus"]).status.code(),
        Some(1)
    );
}
