use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quotring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariant_commands() {
    let o = run(&["invariant", "t1", "--b1", "6", "--c1", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[5:1];[5:2]\n");

    let o = run(&["invariant", "t1", "--b1", "6", "--c1", "8", "--pipeline"]);
    assert!(stdout(&o).contains("invariant: [5:1];[5:2]"));

    let o = run(&["invariant", "t2", "--a0", "5", "--a1", "1"]);
    assert_eq!(stdout(&o), "-5\n");

    let o = run(&["invariant", "t3", "--a", "1", "--b", "1", "--c", "1"]);
    assert_eq!(stdout(&o), "quadratic: t^2 - 2*t + 2\nclass: -1\n");
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(run(&["invariant", "t1", "--b1", "0", "--c1", "0"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "t3", "--a", "2", "--b", "1", "--c", "1"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "t2", "--a0", "x", "--a1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "t1", "--radius", "0"]).status.code(), Some(2));
    assert_eq!(run(&["free", "--matrix", "1,0;0"]).status.code(), Some(2));
}

#[test]
fn ring_and_free() {
    let o = run(&["ring", "--matrix", "1,0,0;6,1,1;8,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("free: true"));
    assert!(out.contains("graded dimensions (degrees 0, 2, ..., 8): 1 3 3 1 0"));
    assert!(out.contains("complete intersection: true"));

    assert_eq!(stdout(&run(&["free", "--matrix", "1,0;0,1"])), "free\n");
    assert_eq!(stdout(&run(&["free", "--matrix", "1,0;0,2"])), "not free\n");
}

#[test]
fn scans_are_deterministic() {
    let a = run(&["scan", "t3", "--radius", "3", "--format", "csv"]);
    let b = run(&["scan", "t3", "--radius", "3", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("a,b,c,invariant,flag\n"));

    let dir = std::env::temp_dir().join(format!("quotring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t1.json");
    let o = run(&["scan", "t1", "--radius", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["distinctCount"], 13);
    assert_eq!(json["searchRadius"], 5);
    assert_eq!(json["family"], "t1");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_suite() {
    let o = run(&["verify", "--suite", "freeness"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS freeness/oracle_agreement_random 400/400"));
}
