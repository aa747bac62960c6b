use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn kmagic(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmagic"))
        .args(args)
        .current_dir(dir)
        .env_remove("MAGIC_SOLVER_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn cycle_spectrum_both_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&kmagic(dir.path(), &["gen", "--family", "cycle", "--n", "4", "-o", "c4.txt"])), 0);
    let o = kmagic(dir.path(), &["spectrum", "c4.txt", "--k", "3", "--method", "both"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(
        out.contains("predict {0,1,2}") && out.contains("oracle  {0,1,2}") && out.contains("agree"),
        "{out}"
    );
}

#[test]
fn excluded_label_exits_one_and_cites_parity() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "cycle", "--n", "3", "-o", "c3.txt"]);
    let o = kmagic(dir.path(), &["label", "c3.txt", "--k", "4", "--c", "1"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("odd cycle") && out.contains("even"), "{out}");
}

#[test]
fn verify_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "cycle", "--n", "4", "-o", "c4.txt"]);
    fs::write(
        dir.path().join("ones.json"),
        r#"{"k": 3, "c": 2, "labels": {"0": 1, "1": 1, "2": 1, "3": 1}}"#,
    )
    .unwrap();
    let o = kmagic(dir.path(), &["verify", "c4.txt", "ones.json"]);
    assert_eq!((code(&o), stdout(&o)), (0, "2\n".to_string()));
    fs::write(dir.path().join("bad.json"), r#"{"k": 3, "c": 2, "labels": {"0": 1, "1": 2, "2": 1, "3": 1}}"#)
        .unwrap();
    let o = kmagic(dir.path(), &["verify", "c4.txt", "bad.json"]);
    assert_eq!((code(&o), stdout(&o)), (1, "not magic\n".to_string()));
}

#[test]
fn label_output_verifies_with_same_sum() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "petersen", "-o", "p.txt"]);
    for c in 0..5 {
        let o = kmagic(dir.path(), &["label", "p.txt", "--k", "5", "--c", &c.to_string(), "-o", "l.json"]);
        assert_eq!(code(&o), 0);
        let v = kmagic(dir.path(), &["verify", "p.txt", "l.json"]);
        assert_eq!(stdout(&v), format!("{c}\n"));
    }
    let o = kmagic(dir.path(), &["label", "p.txt", "--k", "1", "--c", "-7", "-o", "z.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&kmagic(dir.path(), &["verify", "p.txt", "z.json"])), "-7\n");
}

#[test]
fn gen_round_trips_and_needs_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "--family", "random_regular", "--n", "8", "--r", "3", "--seed", "1"];
    let a = stdout(&kmagic(dir.path(), &args));
    assert_eq!(a, stdout(&kmagic(dir.path(), &args)));
    assert!(a.starts_with("p 8 12\n"));
    let o = kmagic(dir.path(), &["gen", "--family", "random_regular", "--n", "8", "--r", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn factorize_modes() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "complete", "--n", "5", "-o", "k5.txt"]);
    let o = kmagic(dir.path(), &["factorize", "k5.txt", "--mode", "two-factors"]);
    assert_eq!(code(&o), 0);
    let dec: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(dec["degrees"], serde_json::json!([2, 2]));
    let o = kmagic(dir.path(), &["factorize", "k5.txt", "--mode", "f-factor", "--h", "1"]);
    assert_eq!(code(&o), 1);
    kmagic(dir.path(), &["gen", "--family", "complete_bipartite", "--n", "3", "-o", "k33.txt"]);
    let o = kmagic(dir.path(), &["factorize", "k33.txt", "--mode", "mod3", "-o", "f.json"]);
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("f.json").exists());
}

#[test]
fn null_set_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "complete", "--n", "4", "-o", "k4.txt"]);
    let o = kmagic(dir.path(), &["null-set", "k4.txt", "--kmax", "6"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["null_set"], serde_json::json!([1, 3, 4, 5, 6]));
    assert_eq!(v["undecided"], serde_json::json!([]));
}

#[test]
fn compare_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    kmagic(&corpus, &["gen", "--family", "complete", "--n", "5", "-o", "k5.txt"]);
    kmagic(&corpus, &["gen", "--family", "disjoint_union", "--parts", "cycle:3,cycle:4", "-o", "c3c4.txt"]);
    let o = kmagic(dir.path(), &["compare", "--corpus", "corpus", "--k-range", "3..6"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("PASS").count(), 8, "{out}");
}

#[test]
fn invalid_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "p 3 1\n0 0\n").unwrap();
    assert_eq!(code(&kmagic(dir.path(), &["label", "bad.txt", "--k", "3", "--c", "0"])), 2);
    assert_eq!(code(&kmagic(dir.path(), &["label", "missing.txt", "--k", "3", "--c", "0"])), 2);
    fs::write(dir.path().join("path.txt"), "p 3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(code(&kmagic(dir.path(), &["spectrum", "path.txt", "--k", "3"])), 2);
}

#[test]
fn tiny_budget_is_undecided() {
    let dir = tempfile::tempdir().unwrap();
    kmagic(dir.path(), &["gen", "--family", "complete", "--n", "6", "-o", "k6.txt"]);
    let o = Command::new(env!("CARGO_BIN_EXE_kmagic"))
        .args(["spectrum", "k6.txt", "--k", "6", "--method", "oracle"])
        .current_dir(dir.path())
        .env("MAGIC_SOLVER_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}
