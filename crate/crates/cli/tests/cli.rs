use std::path::Path;
use std::process::{Command, Output};

fn semlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semlab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_triangle() {
    let out = semlab(&["verify", "--family", "cycle:3", "--labels", "1,2,3"]);
    assert_eq!(code(&out), 0);
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["k"], 9);
}

#[test]
fn verify_rejects_four_cycle_identity() {
    let out = semlab(&["verify", "--family", "cycle:4", "--labels", "[1,2,3,4]"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("duplicate sums"), "{}", stderr(&out));
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(code(&semlab(&["verify", "--graph6", "D~", "--labels", "1"])), 64);
    assert_eq!(code(&semlab(&["deficiency", "--family", "wheel:5"])), 64);
    assert_eq!(code(&semlab(&["tables", "--what", "nothing"])), 64);
    assert_eq!(code(&semlab(&["frobnicate"])), 64);
    assert_eq!(code(&semlab(&["--help"])), 0);
}

#[test]
fn cube_deficiency_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("d4.json");
    let out = semlab(&["deficiency", "--family", "prism:4", "--out", path_str(&cert)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("finite 5"));
    let check = semlab(&["verify", "--family", "prism:4", "--certificate", path_str(&cert)]);
    assert_eq!(code(&check), 0, "{}", stderr(&check));
    // the same certificate does not fit a different graph
    let wrong = semlab(&["verify", "--family", "cycle:8", "--certificate", path_str(&cert)]);
    assert_eq!(code(&wrong), 2);
}

#[test]
fn complete_seven_is_infinite() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("k7.json");
    let out = semlab(&["deficiency", "--family", "complete:7", "--out", path_str(&cert)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("infinite"));
    let check = semlab(&["certify-infinite", "--family", "complete:7", "--check", path_str(&cert)]);
    assert_eq!(code(&check), 0, "{}", stderr(&check));

    let mut json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    json["q"] = 20.into();
    std::fs::write(&cert, json.to_string()).unwrap();
    let check = semlab(&["certify-infinite", "--family", "complete:7", "--check", path_str(&cert)]);
    assert_eq!(code(&check), 2);
}

#[test]
fn capped_search_is_unknown() {
    let out = semlab(&["deficiency", "--family", "cycle:4", "--cap", "0"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("unknown (cap 0"));
    let out = semlab(&["deficiency", "--family", "prism:4", "--node-limit", "10"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn batch_file_reports_worst_status() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("graphs.g6");
    std::fs::write(&file, "Bw\n# comment\n\nDhc\n").unwrap();
    let out = semlab(&["deficiency", "--file", path_str(&file), "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);
    std::fs::write(&file, "Bw\nF~~~w\n").unwrap();
    assert_eq!(code(&semlab(&["deficiency", "--file", path_str(&file)])), 1);
}

#[test]
fn labeling_commands() {
    let out = semlab(&["strength", "--family", "tree-enumeration:5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).matches("\"value\":6").count(), 3);
    assert_eq!(code(&semlab(&["alpha", "--family", "cycle:3"])), 1);
    assert_eq!(code(&semlab(&["alpha", "--family", "cycle:5", "--graceful"])), 1);
    let out = semlab(&["alpha", "--family", "prism:6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("deficiency <= 7"));
    assert_eq!(code(&semlab(&["harmonious", "--family", "cycle:4"])), 1);
    assert_eq!(code(&semlab(&["sequential", "--family", "cycle:3"])), 0);
    assert_eq!(code(&semlab(&["strength", "--graph6", "A?"])), 64);
}

#[test]
fn rho_star_command() {
    let out = semlab(&["rho-star", "--n", "7", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["rho_star"], 30);
    assert_eq!(v["kotzig"], 28);
    assert_eq!(code(&semlab(&["rho-star", "--n", "10", "--node-limit", "5"])), 3);
}

fn survey_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn survey_small_orders() {
    let out = semlab(&["survey-trees", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    let rows = survey_rows(&stdout(&out));
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r[4] == "finite(0)"));
    assert!(stderr(&out).contains("verified for all enumerated instances"));

    let out = semlab(&["survey-trees", "--max-n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(survey_rows(&stdout(&out)).len(), 0);
}

#[test]
fn survey_order_seven_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = semlab(&["survey-trees", "--max-n", "7", "--deterministic", "--out", path_str(p)]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).contains("verified for all enumerated instances"));
    }
    let csv = std::fs::read_to_string(&a).unwrap();
    assert_eq!(csv, std::fs::read_to_string(&b).unwrap());
    let seven: Vec<_> = survey_rows(&csv).into_iter().filter(|r| r[1] == "7").collect();
    assert_eq!(seven.len(), 11);
    assert!(seven.iter().all(|r| r[5] == "8" && r[6] == "true"));
}

#[test]
fn tables() {
    let out = semlab(&["tables", "--what", "prism"]);
    assert_eq!(code(&out), 0);
    let csv = stdout(&out);
    assert!(csv.contains("\n8,1,9,11,,open"));
    assert!(csv.contains("\n12,1,13,17,,open"));

    let out = semlab(&["tables", "--what", "prism", "--exact", "6=3"]);
    assert!(stdout(&out).contains("\n6,1,7,,3,exact"));

    let out = semlab(&["tables", "--what", "rho-star"]);
    let rows = survey_rows(&stdout(&out));
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| (r[2].is_empty()) == (r[0].parse::<usize>().unwrap() < 7)));

    let out = semlab(&["tables", "--what", "l-bounds"]);
    let rows = survey_rows(&stdout(&out));
    assert_eq!(rows.iter().map(|r| r[1].as_str()).collect::<Vec<_>>(), ["7", "10", "13", "17", "21"]);
    assert_eq!(rows[4][2], "27");
}

#[test]
fn witness_lower_bound_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("w.json");
    let out = semlab(&["witness-lower-bound", "--n", "9", "--out", path_str(&cert)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("size 25"));
    let check = semlab(&["verify", "--family", "lower-bound-witness:9", "--certificate", path_str(&cert)]);
    assert_eq!(code(&check), 0, "{}", stderr(&check));
}
