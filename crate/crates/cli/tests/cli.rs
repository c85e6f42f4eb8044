use std::process::{Command, Output};

use eigencone::faces::FaceSpec;
use eigencone::rays;
use eigencone::rootdata::RootSystem;
use eigencone::schubert::ProductTable;
use eigencone::tuple::RayTuple;
use serde_json::Value;

const EX1_WORDS: &str = "s4 s3 s1 s2;s3 s1 s2 s4 s3 s1 s2;s1 s2 s4 s2 s3 s1 s2";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigencone"))
        .args(args)
        .env_remove("EIGENCONE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn divisor_of_ex1_pair() {
    let o = run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "2:s3v"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "(ω2, ω3, ω3)");
    // the same pair named by position
    let o = run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "2:s3 w2"]);
    assert_eq!(stdout(&o).trim(), "(ω2, ω3, ω3)");
}

#[test]
fn divisor_json_round_trips() {
    let o = run(&[
        "divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "2:s3v", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let got = RayTuple::from_json(&stdout(&o)).unwrap();
    let rs = RootSystem::parse("D4").unwrap();
    let table = ProductTable::build(&rs).unwrap();
    let face = FaceSpec::parse(&rs, "2", EX1_WORDS).unwrap();
    let v = eigencone::weyl::parse_word(&rs, "s3 s3 s1 s2 s4 s3 s1 s2").unwrap();
    let expected = rays::basic_divisor_class(&table, &face, 1, &v).unwrap();
    assert_eq!(got.weights, expected.weights);
    assert_eq!(got.tag, expected.tag);
}

#[test]
fn face_rays_json_matches_library() {
    let words = "s2s4; s3s1s2s4; s4s2s3s1s2s4";
    let o = run(&["face-rays", "--type", "D4", "--parabolic", "4", "--words", words, "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["q"].as_u64(), v["c"].as_u64(), v["exotic"].as_u64(), v["total"].as_u64()), (Some(4), Some(2), Some(1), Some(19)));
    let face: FaceSpec = {
        let j = serde_json::from_value(v["face"].clone()).unwrap();
        FaceSpec::from_json(&j).unwrap().1
    };
    let rs = RootSystem::parse("D4").unwrap();
    assert_eq!(face, FaceSpec::parse(&rs, "4", words).unwrap());
    let table = ProductTable::build(&rs).unwrap();
    let basics: Vec<RayTuple> = rays::basic_classes(&table, &face).unwrap().into_iter().map(|(_, d)| d).collect();
    let parsed: Vec<RayTuple> =
        v["type_i"].as_array().unwrap().iter().map(|x| RayTuple::from_json_value(x.clone()).unwrap()).collect();
    assert_eq!(parsed, basics);
    assert_eq!(v["face_rays"].as_array().unwrap().len(), 19);
}

#[test]
fn induct_shifts_then_inducts() {
    let o = run(&["induct", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "(ω4, ω4, 0)"]);
    assert_eq!(stdout(&o).trim(), "(ω2, ω2, 0)");
    // the unshifted formula sends (ω2, 0, 0) to (2ω2, 2ω4, 2ω3)
    let o = run(&["induct", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--raw", "0 1 0 0; 0 0 0 0; 0 0 0 0"]);
    assert_eq!(stdout(&o).trim(), "(2ω2, 2ω4, 2ω3)");
    // while its degree-0 shift is zero
    let o = run(&["induct", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "0 1 0 0; 0 0 0 0; 0 0 0 0"]);
    assert_eq!(stdout(&o).trim(), "(0, 0, 0)");
    let o = run(&["membership", "--type", "D4", "-1 2 -1 -1; 0 0 0 0; 0 0 0 0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("in cone false"));
}

#[test]
fn membership_and_oracle() {
    let o = run(&["membership", "--type", "D4", "(2ω2, 2ω4, 2ω3)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("in cone false"));
    let o = run(&["membership", "--type", "D4", "(ω2, ω3, ω3)", "--oracle", "--oracle-max-n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["member"], Value::Bool(true));
    assert_eq!(v["invariant_dims"], serde_json::json!([1, 1]));
}

#[test]
fn facets_and_cone_rays_small() {
    let o = run(&["facets", "--type", "A1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("3 regular facets"));
    let o = run(&["facets", "--type", "A1", "--quotient-symmetry", "entries"]);
    assert!(stdout(&o).trim_end().ends_with("1 regular facets"));
    let o = run(&["cone-rays", "--type", "A1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 3);
    let o = run(&["cone-rays", "--type", "A1", "--quotient-symmetry", "entries"]);
    assert!(stdout(&o).contains("[orbit 3]"));
}

#[test]
fn reproduce_targets_exit_zero() {
    for target in ["ex1", "subbie", "apples", "p4-table"] {
        let o = run(&["reproduce", target]);
        assert_eq!(code(&o), 0, "{target}: {}", stdout(&o));
        assert!(stdout(&o).contains("all values match"));
    }
    let o = run(&["reproduce", "subbie"]);
    let out = stdout(&o);
    assert!(out.contains("type I rays (7)") && out.contains("type II rays (4)"));
    assert!(out.contains("q = 7, c = 5, total = 11"));
    assert_eq!(out.matches(" ↦ ").count(), 9);
}

#[test]
fn reproduce_reports_mismatch_with_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.json");
    let text = eigencone::golden::P4_TABLE_JSON.replacen("\"total\": 19", "\"total\": 18", 1);
    std::fs::write(&path, text).unwrap();
    let o = run(&["reproduce", "p4-table", "--golden", path.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    let out = stdout(&o);
    assert!(out.contains("- (4, 2, 1, 18)") && out.contains("+ (4, 2, 1, 19)"), "{out}");
}

#[test]
fn reproduce_is_byte_identical_and_uses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let a = run(&["reproduce", "ex1", "--cache-dir", d]);
    assert!(dir.path().join("schubert-D4.txt").exists());
    let b = run(&["reproduce", "ex1", "--cache-dir", d]);
    assert_eq!(a.stdout, b.stdout);

    let env_dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_eigencone"))
        .args(["facets", "--type", "A2"])
        .env("EIGENCONE_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(env_dir.path().join("schubert-A2.txt").exists());
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(code(&run(&["facets"])), 2);
    assert_eq!(code(&run(&["facets", "--type", "Q5"])), 2);
    assert_eq!(code(&run(&["reproduce", "p5-table"])), 2);
    assert_eq!(code(&run(&["facets", "--type", "A2", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "2:s3x"])), 2);
    assert_eq!(code(&run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "s3v"])), 2);
    // mathematical preconditions
    assert_eq!(code(&run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--pair", "2:v"])), 3);
    assert_eq!(code(&run(&["divisor", "--type", "D4", "--parabolic", "2", "--words", "e;e;e", "--pair", "1:e"])), 3);
    assert_eq!(code(&run(&["induct", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--raw", "(ω1, 0)"])), 3);
    assert_eq!(
        code(&run(&["induct", "--type", "D4", "--parabolic", "2", "--words", EX1_WORDS, "--s", "2", "(ω1, 0)"])),
        2
    );
}
