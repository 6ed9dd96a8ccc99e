use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn aalpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_star_reports_t33_equality() {
    let o = aalpha(&["eval", "star:4", "--alpha", "0.5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let record = &v[0];
    assert!((record["spectrum"]["eigenvalues"][0].as_f64().unwrap() - 2.0).abs() < 1e-12);
    let t33 = record["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "T33")
        .unwrap();
    assert_eq!(t33["outcome"]["status"], "applicable");
    assert_eq!(t33["outcome"]["equality"], true);
}

#[test]
fn eval_complete_spectrum() {
    let o = aalpha(&["eval", "complete:5", "--alpha", "0.3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let eig: Vec<f64> = v[0]["spectrum"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (got, want) in eig.iter().zip([4.0, 0.5, 0.5, 0.5, 0.5]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn eval_table_and_csv() {
    let table = stdout(&aalpha(&["eval", "Dhc", "--alpha", "0.5"]));
    assert!(table.starts_with("graph Dhc  n=5 m=5 alpha=0.5"));
    assert!(table.contains("T37"));

    let csv = stdout(&aalpha(&["eval", "path:4", "--format", "csv"]));
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "graph6,n,m,alpha,bound_id,applicable,bound_value,observed,gap,equality"
    );
    assert_eq!(lines.len(), 13);
    let c38 = lines.iter().find(|l| l.contains(",C38,")).unwrap();
    assert!(c38.ends_with(",C38,false,,,,false"), "{c38}");
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(aalpha(&["eval", "A"]).status.code(), Some(2));
    assert_eq!(aalpha(&["eval", "star:x"]).status.code(), Some(2));
    assert_eq!(
        aalpha(&["eval", "star:4", "--alpha", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        aalpha(&["verify", "enumerate:3", "--alpha-grid", "0:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        aalpha(&["eval", "/no/such/dir/x.g6"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_enumeration_is_clean() {
    let o = aalpha(&[
        "verify",
        "enumerate:5",
        "--alpha-grid",
        "0:1:0.1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["graphs"], 728);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["per_bound"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_complete_corpus_counts_t36_equalities() {
    let dir = tempdir().unwrap();
    let corpus = dir.path().join("complete.g6");
    let lines: Vec<String> = (2..=8)
        .map(|n| {
            stdout(&aalpha(&["gen", &format!("complete:{n}")]))
                .trim()
                .to_string()
        })
        .collect();
    fs::write(&corpus, lines.join("\n")).unwrap();
    let o = aalpha(&[
        "verify",
        corpus.to_str().unwrap(),
        "--alpha-grid",
        "0:1:0.25",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let t36 = v["per_bound"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["bound_id"] == "T36")
        .unwrap();
    assert_eq!(t36["equalities"], 35);
}

#[test]
fn verify_tiny_tolerance_flags_rounding() {
    let o = aalpha(&["verify", "enumerate:4", "--tol", "1e-15"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_output_is_reproducible_across_thread_counts() {
    let dir = tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let path = dir.path().join(format!("rows-{threads}.csv"));
        let o = Command::new(env!("CARGO_BIN_EXE_aalpha"))
            .args(["verify", "enumerate:5", "--alpha-grid", "0:1:0.5", "--out"])
            .arg(&path)
            .env("AALPHA_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        outputs.push((fs::read(&path).unwrap(), o.stdout));
    }
    assert_eq!(outputs[0], outputs[1]);
    let rows = String::from_utf8(outputs[0].0.clone()).unwrap();
    assert_eq!(rows.lines().count(), 1 + 728 * 3 * 12);
}

#[test]
fn bad_thread_count_is_an_input_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(["gen", "star:3"])
        .env("AALPHA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tightness_t33_ranks_extremal_graphs_first() {
    let o = aalpha(&[
        "tightness",
        "enumerate:5",
        "--bound",
        "T33",
        "--alpha",
        "0.3",
        "--top",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ranked = v.as_array().unwrap();
    assert_eq!(ranked.len(), 5);
    assert!(ranked.iter().all(|r| r["equality"] == true));
    assert!(ranked
        .iter()
        .all(|r| r["gap"].as_f64().unwrap().abs() < 1e-9));
}

#[test]
fn tightness_t31_gaps_positive_and_full_list() {
    let o = aalpha(&[
        "tightness",
        "enumerate:4",
        "--bound",
        "t31",
        "--alpha",
        "0",
        "--top",
        "1000",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let rows: Vec<_> = text.lines().skip(1).collect();
    // T31 applies to the irregular connected graphs: 38 minus K4 and the 3 labeled C4s.
    assert_eq!(rows.len(), 34);
    let gaps: Vec<f64> = rows
        .iter()
        .map(|r| r.split(',').nth(8).unwrap().parse().unwrap())
        .collect();
    assert!(gaps.iter().all(|&g| g > 0.0));
    assert!(gaps.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn gen_round_trips_through_files() {
    let dir = tempdir().unwrap();
    let g6 = stdout(&aalpha(&["gen", "enumerate:4"]));
    assert_eq!(g6.lines().count(), 38);

    let edge_file = dir.path().join("petersen.txt");
    let list = stdout(&aalpha(&["gen", "IheA@GUAo", "--edge-list"]));
    assert!(list.starts_with("10 15\n"));
    fs::write(&edge_file, &list).unwrap();
    let back = stdout(&aalpha(&["gen", edge_file.to_str().unwrap()]));
    assert_eq!(back, "IheA@GUAo\n");

    let out = dir.path().join("h.g6");
    let o = aalpha(&["gen", "h:7:3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 1);
}
