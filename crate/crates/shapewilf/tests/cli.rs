use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    let cache = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_shapewilf"))
        .args(args)
        .env("SHAPEWILF_CACHE_DIR", cache.path())
        .env("SHAPEWILF_OEIS_ENDPOINT", "http://127.0.0.1:9")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_av_rows() {
    let o = run(&["count-av", "--set", "12345,12354", "--n", "5", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,count\n1,1\n2,2\n3,6\n4,24\n5,118\n");

    let o = run(&["count-av", "--set", "312,321,231", "--n", "3", "--format", "csv"]);
    assert!(stdout(&o).ends_with("3,3\n"));

    let o = run(&["count-av", "--set", "12", "--n", "3", "--format", "json-lines"]);
    let counts: Vec<u64> =
        stdout(&o).lines().map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 1, 1]);
}

#[test]
fn bad_notation_is_a_usage_error() {
    assert_eq!(run(&["count-av", "--set", "1223", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["check", "wilf", "--left", "12", "--right", "x"]).status.code(), Some(2));
    assert_eq!(run(&["fillings", "--board", "[1,2]"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "fan", "--from", "213,312", "--to", "123,213", "--verify", "3"]).status.code(), Some(2));
}

#[test]
fn check_exit_codes_follow_verdict() {
    let o = run(&["check", "wilf", "--left", "123", "--right", "132", "--n", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("n,left_count,right_count,equal\n1,1,1,true\n"));

    let o = run(&["check", "shape-wilf", "--left", "213,312", "--right", "123,132", "--n", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("n,board,left_count,right_count,equal\n"));
    assert!(out.contains("4,\"[4,4,4,3]\",8,10,false"), "{out}");
    assert!(!out.lines().any(|l| l.starts_with("5,")), "fail-fast stops after n = 4");

    let o = run(&["check", "shape-wilf", "--left", "12", "--right", "21", "--n", "4", "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["kind"], "shape-wilf");
    assert_eq!(last["passed"], true);
}

#[test]
fn bijection_map_and_precondition() {
    let o = run(&["bijection", "fan", "--from", "312,321", "--to", "123,213", "--filling", "[3,3,3]/123"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[3,3,3]/123 -> [3,3,3]/132\n");

    let o = run(&["bijection", "fan", "--from", "312,321", "--to", "123,213", "--filling", "[3,3,3]/321"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("321"));

    let o = run(&["bijection", "transfer", "--from", "123,213", "--to", "312,321", "--suffix", "12", "--verify", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn boards_and_fillings() {
    let o = run(&["boards", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 14);
    let o = run(&["fillings", "--board", "[3,3,3]", "--avoid", "123"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["fillings", "--board", "[3,3,3]", "--limit", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn suite_json_lines_are_reproducible() {
    let args = ["suite", "all", "--offline", "--format", "json-lines"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().all(|v| v["passed"] == true && v.get("wall_time_ms").is_none()));
    assert!(lines.iter().any(|v| v["label"] == "EVIDENCE"));

    let timed = run(&["suite", "negative-controls", "--offline", "--format", "json-lines", "--timings"]);
    assert!(stdout(&timed).lines().all(|l| l.contains("\"wall_time_ms\":")));
}

#[test]
fn oeis_offline_uses_bundled_snapshot() {
    let o = run(&["oeis", "fetch", "A224295", "--offline", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\n5,118\n"));

    let o = run(&["oeis", "compare", "--set", "12345,12354", "--n", "9", "--offline"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = run(&["oeis", "compare", "--set", "123", "--n", "9", "--offline"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(run(&["oeis", "fetch", "B12", "--offline"]).status.code(), Some(2));
    assert_eq!(run(&["oeis", "fetch", "A000108", "--offline"]).status.code(), Some(1));
}
