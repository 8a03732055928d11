//! End-to-end tests that drive the installed binary through its subcommands.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use forbidden::{enumerate_family, Parameter};
use graph_core::{catalog, graph6, Graph};
use iso::are_isomorphic;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: &str) -> Outcome {
    run_with_env(args, stdin, &[])
}

fn run_with_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Outcome {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_forbiddenkit"));
    cmd.args(args)
        .env_remove("FORBIDDENKIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (key, value) in env {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("spawn forbiddenkit");
    child
        .stdin
        .take()
        .expect("stdin handle")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    let output = child.wait_with_output().expect("collect output");
    Outcome {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8(output.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf8 stderr"),
    }
}

fn g6(g: &Graph) -> String {
    graph6::encode(g)
}

fn decodes_to(line: &str, expected: &Graph) -> bool {
    let g = graph6::decode(line).expect("valid graph6 line");
    are_isomorphic(&g, expected).expect("within budget")
}

#[test]
fn gen_family_writes_members_summary_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chi1.g6");
    let out = run(
        &["gen-family", "--param", "chi", "--k", "1", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "members 4\norder 4: 1\norder 5: 3\n");

    let body = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut sorted = lines.clone();
    sorted.sort_unstable();
    assert_eq!(lines, sorted);
    assert!(lines.iter().any(|l| decodes_to(l, &catalog::claw().unwrap())));

    let fam = enumerate_family(Parameter::Chi, 1).unwrap();
    let sidecar = fs::read_to_string(dir.path().join("chi1.g6.meta")).unwrap();
    let expected = format!(
        "parameter=chi\nk=1\ncount=4\nvertex_range=4..5\nengine_version={}\n",
        fam.engine_version()
    );
    assert_eq!(sidecar, expected);
}

#[test]
fn gen_family_is_deterministic_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.g6");
    let second = dir.path().join("b.g6");
    for path in [&first, &second] {
        let out = run(
            &["gen-family", "--param", "omega", "--k", "2", "--out", path.to_str().unwrap()],
            "",
        );
        assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    }
    assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());
    assert_eq!(
        fs::read(dir.path().join("a.g6.meta")).unwrap(),
        fs::read(dir.path().join("b.g6.meta")).unwrap()
    );
}

#[test]
fn gen_family_streams_graphs_when_no_output_path() {
    let out = run(&["gen-family", "--param", "chi", "--k", "0"], "");
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(decodes_to(lines[0], &catalog::path(3).unwrap()));
    assert_eq!(out.stderr, "members 1\norder 3: 1\n");
}

#[test]
fn gen_family_rejects_gaps_beyond_the_supported_range() {
    let out = run(&["gen-family", "--param", "chi", "--k", "5"], "");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("forbiddenkit:"), "stderr: {}", out.stderr);
}

#[test]
fn resume_populates_and_reuses_a_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("ckpt");
    let first = dir.path().join("first.g6");
    let out = run(
        &[
            "gen-family", "--param", "omega", "--k", "2",
            "--resume", ckpt.to_str().unwrap(),
            "--out", first.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(ckpt.join("params.txt").is_file());
    let shard = ckpt.join("shard_0000.g6");
    assert!(shard.is_file());

    let rerun = |target: &Path| {
        let out = run(
            &[
                "gen-family", "--param", "omega", "--k", "2",
                "--resume", ckpt.to_str().unwrap(),
                "--out", target.to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    };

    let second = dir.path().join("second.g6");
    rerun(&second);
    assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());

    fs::remove_file(&shard).unwrap();
    let third = dir.path().join("third.g6");
    rerun(&third);
    assert_eq!(fs::read(&first).unwrap(), fs::read(&third).unwrap());

    let clash = run(
        &[
            "gen-family", "--param", "omega", "--k", "1",
            "--resume", ckpt.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(clash.code, 2);
    assert!(clash.stderr.contains("forbiddenkit:"), "stderr: {}", clash.stderr);
}

#[test]
fn check_separates_members_from_non_members() {
    let w5 = g6(&catalog::wheel(5).unwrap());
    let k6 = g6(&catalog::complete(6).unwrap());
    let input = format!("{w5}\n{k6}\n");

    let out = run(&["check", "--param", "omega", "--k", "2"], &input);
    assert_eq!(out.code, 3);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        [
            r#"{"index":0,"member":false,"witness":[0,1,2,3,4,5]}"#,
            r#"{"index":1,"member":true,"witness":null}"#,
        ]
    );

    let out = run(&["check", "--param", "omega", "--k", "3"], &input);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        [
            r#"{"index":0,"member":true,"witness":null}"#,
            r#"{"index":1,"member":true,"witness":null}"#,
        ]
    );
}

#[test]
fn check_reads_from_a_file_argument() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    fs::write(&path, format!("{}\n", g6(&catalog::path(3).unwrap()))).unwrap();
    let out = run(
        &["check", "--param", "chi", "--k", "0", path.to_str().unwrap()],
        "",
    );
    assert_eq!(out.code, 3);
    assert_eq!(out.stdout, "{\"index\":0,\"member\":false,\"witness\":[0,1,2]}\n");
}

#[test]
fn index_reports_values_and_witnesses() {
    let input = format!(
        "{}\n{}\n{}\n",
        g6(&catalog::claw().unwrap()),
        g6(&catalog::complete(1).unwrap()),
        g6(&catalog::cycle(5).unwrap())
    );
    let out = run(&["index", "--param", "chi"], &input);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        [
            r#"{"index":0,"value":2,"witness":[0,1,2,3]}"#,
            r#"{"index":1,"value":0,"witness":null}"#,
            r#"{"index":2,"value":1,"witness":[0,1,2]}"#,
        ]
    );
}

#[test]
fn invariants_reports_the_full_panel() {
    let input = format!(
        "{}\n{}\n{}\n",
        g6(&catalog::cycle(5).unwrap()),
        g6(&catalog::complete(4).unwrap()),
        g6(&catalog::claw().unwrap())
    );
    let out = run(&["invariants"], &input);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        [
            concat!(
                r#"{"n":5,"max_degree":2,"clique_number":2,"chromatic_number":3,"#,
                r#""perfect":false,"neighborhood_perfect":true}"#
            ),
            concat!(
                r#"{"n":4,"max_degree":3,"clique_number":4,"chromatic_number":4,"#,
                r#""perfect":true,"neighborhood_perfect":true}"#
            ),
            concat!(
                r#"{"n":4,"max_degree":3,"clique_number":2,"chromatic_number":2,"#,
                r#""perfect":true,"neighborhood_perfect":true}"#
            ),
        ]
    );
}

#[test]
fn diff_prints_one_line_per_unmatched_class() {
    let dir = tempfile::tempdir().unwrap();
    let chi = dir.path().join("chi2.g6");
    let omega = dir.path().join("omega2.g6");
    for (param, path) in [("chi", &chi), ("omega", &omega)] {
        let out = run(
            &["gen-family", "--param", param, "--k", "2", "--out", path.to_str().unwrap()],
            "",
        );
        assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    }

    let out = run(&["diff", chi.to_str().unwrap(), omega.to_str().unwrap()], "");
    assert_eq!(out.code, 3);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    let a_only: Vec<&str> = lines
        .iter()
        .filter_map(|l| l.strip_prefix("A-only "))
        .collect();
    let b_only: Vec<&str> = lines
        .iter()
        .filter_map(|l| l.strip_prefix("B-only "))
        .collect();
    assert_eq!(a_only.len(), 2);
    assert_eq!(b_only.len(), 1);
    for line in &a_only {
        assert_eq!(graph6::decode(line).unwrap().n(), 7);
    }
    assert!(decodes_to(b_only[0], &catalog::wheel(5).unwrap()));

    let same = run(&["diff", chi.to_str().unwrap(), chi.to_str().unwrap()], "");
    assert_eq!(same.code, 0);
    assert_eq!(same.stdout, "");
}

#[test]
fn encode_and_decode_round_trip() {
    let out = run(&["encode"], "3 2\n0 1\n1 2\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "Bg\n");

    let out = run(&["decode"], "Bg\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");

    let out = run(&["decode", "--format", "g6"], "Bg\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "Bg\n");

    let c5 = g6(&catalog::cycle(5).unwrap());
    let encoded = run(&["encode"], "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    assert_eq!(encoded.stdout.trim_end(), c5);
}

#[test]
fn rejects_malformed_graph_input() {
    let out = run(&["invariants"], "garbage\n");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 1"), "stderr: {}", out.stderr);
}

#[test]
fn budget_override_controls_the_vertex_cap() {
    let p15 = format!("{}\n", g6(&catalog::path(15).unwrap()));

    let out = run(&["index", "--param", "chi"], &p15);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("budget"), "stderr: {}", out.stderr);

    let out = run_with_env(
        &["index", "--param", "chi"],
        &p15,
        &[("FORBIDDENKIT_BUDGET", "16")],
    );
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "{\"index\":0,\"value\":1,\"witness\":[0,1,2]}\n");

    let out = run_with_env(
        &["index", "--param", "chi"],
        &p15,
        &[("FORBIDDENKIT_BUDGET", "zero")],
    );
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("FORBIDDENKIT_BUDGET"), "stderr: {}", out.stderr);
}

#[test]
fn jobs_flag_configures_the_thread_pool() {
    let base = run(&["gen-family", "--param", "chi", "--k", "1"], "");
    let single = run(&["--jobs", "1", "gen-family", "--param", "chi", "--k", "1"], "");
    assert_eq!(single.code, 0, "stderr: {}", single.stderr);
    assert_eq!(single.stdout, base.stdout);

    let zero = run(&["--jobs", "0", "gen-family", "--param", "chi", "--k", "1"], "");
    assert_eq!(zero.code, 2);
}
