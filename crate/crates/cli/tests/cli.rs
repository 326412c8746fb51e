use std::process::Command;

use grassq_cli::{element_from_json, element_json, run, ElementJson, VerifyJson};

fn grassq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_grassq")).args(args).env_remove("GRASSQ_MAX_N").output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = grassq(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn lib(args: &[&str]) -> grassq_cli::Outcome {
    run(std::iter::once("grassq").chain(args.iter().copied()))
}

#[test]
fn spec_examples() {
    assert_eq!(ok(&["gw", "--type", "C", "--m", "3", "--n", "5", "--d", "2", "4,2,2", "5,3,1", "7,6,4"]), "1\n");
    assert_eq!(
        ok(&["pieri", "--type", "D", "--m", "5", "--n", "6", "--p", "2", "--primed", "8,7,2,1,1:1"]),
        "1*s[8,7,4,1,1] + 1*s[8,7,3,2,1:1]\n"
    );
    assert_eq!(ok(&["dual", "--type", "C", "--m", "4", "--n", "7", "7,4,2"]), "10,6,3,2\n");
}

#[test]
fn quantum_commands() {
    let out = ok(&["qpieri", "--type", "C", "--m", "4", "--n", "6", "--p", "4", "5,3,2,2"]);
    assert_eq!(
        out,
        "1*s[8,4,3,1] + 4*s[8,4,2,2] + 2*s[7,5,2,2] + 2*s[7,4,3,2] + 1*s[6,5,3,2] \
         + 2*s[4,2,1]*q + 2*s[3,2,2]*q + 1*s[3,2,1,1]*q\n"
    );
    let out = ok(&["qproduct", "--type", "C", "--m", "3", "--n", "5", "4,2,2", "5,3,1"]);
    assert!(out.starts_with("1*s[7,6,4] + "));
    assert!(out.trim_end().ends_with("1*s[1]*q^2"));
    let out = ok(&["qproduct", "--type", "Dmax", "--m", "2", "--n", "2", "3", "3"]);
    assert_eq!(out, "1*s[]*q1*q2\n");
    assert_eq!(ok(&["gw", "--type", "Dmax", "--m", "2", "--n", "2", "--d1", "1", "--d2", "1", "3", "3", "3,2"]), "1\n");
}

#[test]
fn oracle_flag_matches_default() {
    for args in [
        vec!["pieri", "--type", "B", "--m", "4", "--n", "6", "--p", "4", "5,3,2,2"],
        vec!["pieri", "--type", "D", "--m", "5", "--n", "6", "--p", "2", "8,7,2,1,1:1"],
        vec!["product", "--type", "D", "--m", "3", "--n", "4", "3,2:1", "4,2:2"],
        vec!["product", "--type", "C", "--m", "3", "--n", "4", "4,2", "3,1"],
        vec!["gw", "--type", "C", "--m", "3", "--n", "5", "1,1", "4,1", "6,5"],
    ] {
        let mut with = args.clone();
        with.push("--oracle");
        assert_eq!(ok(&args), ok(&with), "{args:?}");
    }
}

#[test]
fn json_round_trip() {
    for args in [
        vec!["qpieri", "--type", "B", "--m", "4", "--n", "6", "--p", "5", "8,4,1,1", "--json"],
        vec!["qpieri", "--type", "Dmax", "--m", "3", "--n", "3", "--p", "1", "--primed", "1,1,1:2", "--json"],
        vec!["product", "--type", "C", "--m", "2", "--n", "3", "1", "1", "--json"],
    ] {
        let text = ok(&args);
        let parsed: ElementJson = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string(&parsed).unwrap() + "\n";
        assert_eq!(again, text);
        let (spec, e) = element_from_json(&parsed).unwrap();
        assert_eq!(serde_json::to_string(&element_json(&spec, &e)).unwrap() + "\n", text);
        let mut plain = args.clone();
        plain.pop();
        assert_eq!(ok(&plain), format!("{}\n", e.render(spec.num_q())));
    }
    let text = ok(&["pieri", "--type", "D", "--m", "5", "--n", "6", "--p", "2", "8,7,2,1,1:1", "--json"]);
    assert_eq!(
        text,
        "{\"spec\":{\"type\":\"D\",\"m\":5,\"n\":6,\"k\":2},\"terms\":[\
         {\"partition\":[8,7,6],\"type\":0,\"q\":[0],\"coeff\":\"1\"},\
         {\"partition\":[8,7,4,1,1],\"type\":0,\"q\":[0],\"coeff\":\"1\"},\
         {\"partition\":[8,7,3,2,1],\"type\":1,\"q\":[0],\"coeff\":\"1\"}]}\n"
    );
}

#[test]
fn convert_and_basis() {
    assert_eq!(ok(&["convert", "--type", "C", "--m", "4", "--n", "7", "7,4,2"]), "partition 7,4,2\nindex {4,7,10,14}\npair 3,3,2/4,1\n");
    assert_eq!(ok(&["convert", "--type", "C", "--m", "3", "--n", "5", "--index", "3,5,9"]).lines().next(), Some("partition 5,3,1"));
    assert_eq!(ok(&["convert", "--type", "C", "--m", "3", "--n", "4", "--pair", "1/4"]).lines().next(), Some("partition 5"));
    let out = ok(&["basis", "--type", "B", "--m", "1", "--n", "2"]);
    assert_eq!(out, "-\n1\n2\n3\ncount 4\n");
    let out = ok(&["basis", "--type", "D", "--m", "2", "--n", "2", "--json"]);
    assert!(out.contains("\"count\":12"));
}

#[test]
fn verify_command() {
    let out = ok(&["verify", "--type", "C", "--m", "2", "--n", "3"]);
    assert!(out.lines().count() >= 5);
    assert!(out.lines().skip(1).all(|l| l.contains("  pass  ")));
    let out = ok(&["verify", "--type", "D", "--m", "2", "--n", "3", "--json"]);
    let v: VerifyJson = serde_json::from_str(&out).unwrap();
    assert!(v.passed);
    assert_eq!(v.checks.len(), 4);
    let out = ok(&["verify", "--type", "B", "--m", "3", "--n", "3"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("presentation")).count(), 1);
}

#[test]
fn errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["pieri", "--type", "C", "--m", "3", "--n", "5", "--p", "3", "5,5"],
        &["pieri", "--type", "X", "--m", "3", "--n", "5", "--p", "3", "1"],
        &["pieri", "--type", "C", "--m", "6", "--n", "5", "--p", "3", "1"],
        &["pieri", "--type", "C", "--m", "3", "--n", "5", "--p", "9", "1"],
        &["pieri", "--type", "D", "--m", "3", "--n", "4", "--p", "1", "--primed", "1"],
        &["pieri", "--type", "D", "--m", "3", "--n", "4", "--p", "2", "2"],
        &["gw", "--type", "C", "--m", "3", "--n", "5", "--d", "1", "4,2,2", "5,3,1", "7,6,4"],
        &["qpieri", "--type", "B", "--m", "3", "--n", "3", "--p", "1", "1"],
        &["gw", "--type", "C", "--m", "3", "--n", "5", "--d1", "1", "1", "1", "1"],
        &["pieri", "--type", "C", "--m", "3"],
        &["frobnicate"],
        &["convert", "--type", "C", "--m", "2", "--n", "3", "--index", "1,6"],
    ];
    for args in cases {
        let (code, out, err) = grassq(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.starts_with("error"), "{args:?}: {err}");
    }
}

#[test]
fn size_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_grassq"))
        .args(["basis", "--type", "C", "--m", "2", "--n", "9"])
        .env_remove("GRASSQ_MAX_N")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("GRASSQ_MAX_N"));
    let out = Command::new(env!("CARGO_BIN_EXE_grassq"))
        .args(["basis", "--type", "C", "--m", "1", "--n", "9"])
        .env("GRASSQ_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn library_entry_point() {
    let o = lib(&["dual", "--type", "C", "--m", "2", "--n", "3", "-"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "4,3\n"));
    let o = lib(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verify"));
}
