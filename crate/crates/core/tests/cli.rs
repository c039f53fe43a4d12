mod common;

use std::process::Command;

use clawfree_zeros::cli;
use clawfree_zeros::families;
use clawfree_zeros::graph::Graph;
use clawfree_zeros::penrose::ENUM_CAP_ENV;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_clawfree"));
    c.env_remove(ENUM_CAP_ENV);
    c
}

fn run_bin(args: &[&str]) -> (String, String, i32) {
    let out = bin().args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn file_arg(dir: &tempfile::TempDir, name: &str, g: &Graph) -> String {
    common::write_graph_file(dir.path(), name, g)
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn analyze_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let f = file_arg(&dir, "k4.txt", &families::complete(4));
    let (out, _, code) = run_bin(&["analyze", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 0 (0.000000)"), "{out}");
    assert!(
        out.contains("C=3.000000 a*=0.333333 radius C*D=9.000000"),
        "{out}"
    );
    assert!(out.contains("q^4 - 6q^3 + 11q^2 - 6q"), "{out}");
    assert!(out.contains("disk verdict: yes"), "{out}");
}

#[test]
fn analyze_explains_missing_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = file_arg(&dir, "c5.txt", &families::cycle(5));
    let (out, _, code) = run_bin(&["analyze", &c5]);
    assert_eq!(code, 0);
    assert!(out.contains("theorem requires max degree >= 3"), "{out}");

    let claw = file_arg(&dir, "claw.txt", &families::star(3));
    let (out, _, code) = run_bin(&["analyze", &claw]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 3/2 (1.500000)"), "{out}");
    assert!(out.contains("kappa exceeds 1"), "{out}");
    assert!(out.contains("graph is not claw-free"), "{out}");
}

#[test]
fn analyze_json_fields() {
    let dir = tempfile::tempdir().unwrap();
    let f = file_arg(&dir, "oct.txt", &families::octahedron());
    let (out, _, code) = run_bin(&["--json", "analyze", &f]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["graph"]["vertices"], 6);
    assert_eq!(v["class"]["class_index"], 0);
    assert_eq!(v["kappa"]["exact"], "1/2");
    assert_eq!(v["bound"]["applicable"], true);
    assert_eq!(v["disk_verdict"], "yes");
    assert_eq!(v["chromatic"]["coefficients"][0], 0);
    assert_eq!(v["roots"]["roots"].as_array().unwrap().len(), 6);
    // fixed six-digit decimals survive as written
    assert!(out.contains("\"decimal\": 0.500000"), "{out}");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let f = file_arg(&dir, "ico.txt", &families::icosahedron());
    let first = run_bin(&["--json", "analyze", &f]);
    let second = run_bin(&["--json", "analyze", &f]);
    assert_eq!(first, second);
    let t1 = run_bin(&["--json", "table1", "--step", "0.25"]);
    assert_eq!(t1, run_bin(&["--json", "table1", "--step", "0.25"]));
}

#[test]
fn bounds_headline_values() {
    let (out, _, code) = run_bin(&["bounds", "--class", "0", "--kappa", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("C=3.802747 a*=0.376232"), "{out}");

    let (out, _, _) = run_bin(&["bounds", "--class", "1", "--kappa", "0.2"]);
    assert!(out.contains("C=3.214447"), "{out}");

    let (out, _, _) = run_bin(&["bounds", "--class", "0", "--kappa", "0", "--delta", "3"]);
    assert!(out.contains("radius=9.000000"), "{out}");
}

#[test]
fn table_check_passes() {
    let (out, _, code) = run_bin(&["table1", "--check"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("0.") || l.starts_with("1."))
            .count(),
        11
    );
}

#[test]
fn verify_scheme_on_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(42);
    let graphs = [
        ("k3.txt", families::complete(3)),
        ("c4.txt", families::cycle(4)),
        ("random7.txt", families::random_gnp(7, 0.5, &mut rng)),
    ];
    for (name, g) in graphs {
        let f = file_arg(&dir, name, &g);
        let (out, err, code) = run_bin(&["verify-scheme", &f]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        assert!(out.contains("partition scheme (|R| <= 6): pass"), "{out}");
        assert!(out.contains("deletion-contraction: pass"), "{out}");
    }
}

#[test]
fn roots_of_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let f = file_arg(&dir, "k3.txt", &families::complete(3));
    let (out, _, code) = run_bin(&["--json", "roots", &f]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let re: Vec<f64> = v["roots"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["re"].as_f64().unwrap())
        .collect();
    assert_eq!(re, [0.0, 1.0, 2.0]);

    let f = file_arg(&dir, "c5.txt", &families::cycle(5));
    let (out, _, _) = run_bin(&["roots", &f]);
    assert!(out.contains("1.000000 +1.000000i"), "{out}");
    assert!(out.contains("1.000000 -1.000000i"), "{out}");

    let f = file_arg(&dir, "e3.txt", &Graph::empty(3));
    let (out, _, code) = run_bin(&["roots", &f]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("0.000000 +0.000000i").count(), 3, "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n").unwrap();
    let (_, err, code) = run_bin(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line"), "{err}");

    assert_eq!(run_bin(&["bounds", "--class", "2", "--kappa", "1"]).2, 1);
    assert_eq!(run_bin(&["bounds", "--class", "0", "--kappa", "1.5"]).2, 1);
    assert_eq!(run_bin(&["frobnicate"]).2, 1);
    assert_eq!(run_bin(&["--help"]).2, 0);

    let big = file_arg(&dir, "c13.txt", &families::cycle(13));
    assert_eq!(run_bin(&["roots", &big]).2, 2);
    assert_eq!(run_bin(&["verify-scheme", &big]).2, 2);
    // analyze degrades to a partial report instead
    let (out, _, code) = run_bin(&["analyze", &big]);
    assert_eq!(code, 0);
    assert!(out.contains("--max-enum"), "{out}");
    assert_eq!(run_bin(&["analyze", &big, "--max-enum", "13"]).2, 0);
}

#[test]
fn cap_can_be_raised_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let big = file_arg(&dir, "c13.txt", &families::cycle(13));
    let out = bin()
        .env(ENUM_CAP_ENV, "13")
        .args(["roots", &big])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn library_entry_point_matches_binary() {
    let args = ["clawfree", "bounds", "--class", "1", "--kappa", "0.5"];
    let lib = cli::run(args);
    let (out, err, code) = run_bin(&args[1..]);
    assert_eq!((lib.stdout, lib.stderr, lib.code), (out, err, code));
}
