//! End-to-end checks of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superweyl"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn enumerate_reports_counts() {
    let out = run(&["enumerate", "--algebra", "gl(1|2)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("count: 6"), "{text}");

    let out = run(&["enumerate", "--algebra", "spo(4|4)"]);
    assert!(stdout(&out).contains("count: 288"));
}

#[test]
fn enumerate_rejects_spo_without_isotropic_roots() {
    let out = run(&["enumerate", "--algebra", "spo(2|1)"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no isotropic roots"));
}

#[test]
fn enumerate_json_schema() {
    let out = run(&["enumerate", "--algebra", "spo(2|2)", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["algebra"], "spo(2|2)");
    assert_eq!(v["count"], 6);
    let systems = v["systems"].as_array().unwrap();
    assert_eq!(systems.len(), 6);
    for (i, sys) in systems.iter().enumerate() {
        assert_eq!(sys["id"], i as u64);
        let roots = sys["roots"].as_array().unwrap();
        assert_eq!(roots.len(), 2);
        for root in roots {
            for pair in root.as_array().unwrap() {
                let pair = pair.as_array().unwrap();
                assert_eq!(pair.len(), 2);
                assert!(pair[1].as_i64().unwrap() >= 1);
            }
        }
        assert_eq!(sys["isotropic_simple"].as_array().unwrap().len(), 2);
    }
    // Four systems of spo(2|2) contain a long root and one isotropic simple
    // root; the other two consist of two isotropic roots.
    let iso_counts: Vec<usize> = systems
        .iter()
        .map(|sys| {
            sys["isotropic_simple"]
                .as_array()
                .unwrap()
                .iter()
                .filter(|b| b.as_bool().unwrap())
                .count()
        })
        .collect();
    assert_eq!(iso_counts.iter().filter(|&&c| c == 1).count(), 4);
    assert_eq!(iso_counts.iter().filter(|&&c| c == 2).count(), 2);
}

#[test]
fn enumerate_output_is_deterministic() {
    let a = stdout(&run(&["enumerate", "--algebra", "spo(2|3)", "--format", "json"]));
    let b = stdout(&run(&["enumerate", "--algebra", "spo(2|3)", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn coxeter_text_and_json() {
    let out = run(&["coxeter", "--algebra", "spo(2|2)", "--format", "text"]);
    let text = stdout(&out);
    assert!(text.contains("algebra: spo(2|2)"));
    // 2x2 matrix [[1, 6], [6, 1]].
    assert!(text.lines().any(|l| l.contains('1') && l.contains('6')), "{text}");

    let out = run(&["coxeter", "--algebra", "D(2,1)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    // The odd generator row carries three 12 entries.
    let odd_row: Vec<u64> = entries[1]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(odd_row.iter().filter(|&&x| x == 12).count(), 3);
}

#[test]
fn coxeter_dot_shape() {
    let out = run(&["coxeter", "--algebra", "gl(2|3)", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph coxeter { node [shape=circle];\n"));
    assert!(dot.trim_end().ends_with('}'));
    // One filled node (the odd generator), two 12-labeled edges at it.
    assert_eq!(dot.matches("style=filled").count(), 1);
    assert_eq!(dot.matches("label=\"12\"").count(), 2);
    // Commuting pairs are omitted entirely.
    assert!(!dot.contains("label=\"2\""));
}

#[test]
fn group_order_command() {
    let out = run(&["group-order", "--algebra", "gl(1|2)", "--check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group order: 12"), "{text}");
    assert!(text.contains("closure order: 12"));

    let out = run(&["group-order", "--algebra", "spo(2|2)"]);
    assert!(stdout(&out).contains("group order: 12"));
}

#[test]
fn defseq_json_schema() {
    let out = run(&["defseq", "--algebra", "spo(2|3)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 8);
    let mut seen = std::collections::HashSet::new();
    for item in items {
        let seq: Vec<String> = item["sequence"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        assert_eq!(seq.len(), 2);
        assert!(seen.insert(seq.join(" ")));
    }
    assert!(seen.contains("b1 1"));
    assert!(seen.contains("-1 b1"));
}

#[test]
fn defseq_rejects_exceptional_families() {
    let out = run(&["defseq", "--algebra", "G(3)"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("defining sequences"));
}

#[test]
fn relations_command_checks_files() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("superweyl-relations-{}.txt", std::process::id()));
    let good = "# spo(2|3)\n(r[-2d1] r[e1])^2\n(r[-2d1] r[d1-e1])^4\n(r[d1-e1] r[e1])^4\n";
    std::fs::write(&path, good).unwrap();
    let out = run(&["relations", "--algebra", "spo(2|3)", "--file", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).matches("ok  ").count(), 3);

    let bad = "(r[-2d1] r[d1-e1])^3\n";
    std::fs::write(&path, bad).unwrap();
    let out = run(&["relations", "--algebra", "spo(2|3)", "--file", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn alpha_flag_controls_the_parameter() {
    let out = run(&["coxeter", "--algebra", "D(2,1)", "--alpha", "2/3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // The generic and the concrete matrix agree away from 0 and -1.
    let generic = run(&["coxeter", "--algebra", "D(2,1)", "--format", "json"]);
    let g: serde_json::Value = serde_json::from_str(&stdout(&generic)).unwrap();
    assert_eq!(v["entries"], g["entries"]);

    let out = run(&["coxeter", "--algebra", "D(2,1)", "--alpha", "0"]);
    assert!(!out.status.success());
    let out = run(&["coxeter", "--algebra", "gl(1|2)", "--alpha", "2"]);
    assert!(!out.status.success());
}

#[test]
fn out_flag_writes_files() {
    let path = std::env::temp_dir().join(format!("superweyl-out-{}.dot", std::process::id()));
    let out = run(&[
        "coxeter",
        "--algebra",
        "spo(2|2)",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("graph coxeter"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_exceptional_suite_passes_strict() {
    let out = run(&["verify", "--suite", "exceptional", "--strict"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("result: PASS"));
}

#[test]
fn golden_dir_override_is_honored() {
    let dir = std::env::temp_dir().join(format!("superweyl-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("golden.json"),
        r#"{"counts": {"G(3)": 1}, "group_orders": {}}"#,
    )
    .unwrap();
    let out = bin()
        .args(["verify", "--suite", "exceptional"])
        .env("SUPERWEYL_GOLDEN_DIR", &dir)
        .output()
        .unwrap();
    // The deliberately wrong golden count must make the suite fail.
    assert!(!out.status.success());
    assert!(stdout(&out).contains("exceptional.G(3).count"));
    std::fs::remove_dir_all(&dir).ok();
}
