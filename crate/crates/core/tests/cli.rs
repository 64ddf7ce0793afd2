use std::path::PathBuf;

use linksep::cli::main_with_args;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["linksep"];
    argv.extend_from_slice(args);
    let code = main_with_args(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn graph_info_for_the_builtin() {
    let (code, out) = run(&["graph", "info", "--builtin", "f090a"]);
    assert_eq!(code, 0);
    assert!(out.contains("n=90 m=135"));
    assert!(out.contains("girth 10 diameter 8"));
}

#[test]
fn pentagon_link_is_a_certified_failure() {
    let (code, out) = run(&["certify", "link", &data("pentagon.txt")]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] Gromov"));
    assert!(out.contains("5/3π"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["certify", "link", "/no/such/file"]).0, 2);
    assert_eq!(run(&["graph", "info"]).0, 2);
    assert_eq!(run(&["graph", "info", &data("pentagon.txt"), "--builtin", "f090a"]).0, 2);
    assert_eq!(run(&["cutset", "search", "--builtin", "f090a", "--at", "1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn given_seeds_stop_the_reproduction() {
    let (code, out) = run(&["f090a", "reproduce"]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] seed cutsets are *-separated"));
    assert!(out.contains("not minimal"));
    assert!(out.contains("[skip] link (not reached"));
}

#[test]
fn reduced_seeds_reproduce_and_reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, out) = run(&["f090a", "reproduce", "--reduce-minimal", "--out", a.to_str().unwrap()]);
    assert_eq!(code, 0, "{}", out);
    assert!(out.contains("720 distinct cutsets"));
    run(&["f090a", "reproduce", "--reduce-minimal", "--out", b.to_str().unwrap()]);
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let v: serde_json::Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["statistics"]["automorphism_order"], "4320");
}

#[test]
fn trace_reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for name in ["1.json", "2.json"] {
        let p = dir.path().join(name);
        let (code, out) = run(&[
            "complex",
            "trace",
            &data("grid5.json"),
            "--seed-vertex",
            "12-13",
            "--cutset",
            &data("grid_seed.txt"),
            "--kind",
            "edge",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{}", out);
        assert!(out.contains("4 segments"));
        bytes.push(std::fs::read(p).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
}

#[test]
fn complex_check_reports_gromov_failures() {
    assert_eq!(run(&["complex", "check", &data("grid5.json")]).0, 0);
    let (code, out) = run(&["complex", "check", &data("cone_c5.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] link at 6"));
}

#[test]
fn gluing_commands_on_the_hexagon() {
    let (code, out) = run(&["gluing", "solve", &data("hexagon_structure.json")]);
    assert_eq!(code, 0, "{}", out);
    assert!(out.starts_with("1 1\n"));
    assert_eq!(run(&["gluing", "verify", &data("hexagon_structure.json")]).0, 0);
}

#[test]
fn searched_family_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt");
    let (code, _) = run(&["cutset", "search", "--builtin", "f090a", "--star", "--at", "1", "--split", "1", "2", "--budget", "200000", "--family-out", fam.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&fam).unwrap();
    assert!(!text.is_empty());
    let (code, out) = run(&["cutset", "check", "--builtin", "f090a", "--family", fam.to_str().unwrap(), "--star"]);
    assert_eq!(code, 0, "{}", out);
}

#[test]
fn edge_cover_of_the_hexagon() {
    let (code, out) = run(&["cutset", "search", &data("hexagon.txt"), "--sigma", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with('E')).count(), 3);
}
