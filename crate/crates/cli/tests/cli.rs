use std::path::PathBuf;
use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).env_remove("HURWITZ_CACHE").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hurwitz-{}-{name}", std::process::id()));
    let _ = std::fs::remove_file(&path);
    path
}

#[test]
fn compute_example() {
    let out = hurwitz(&["compute", "--family", "pruned-simple", "--g", "1", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"value\":\"1/6\",\"m\":\"3\",\"K\":\"1\"}\n");
}

#[test]
fn poly_example() {
    let out = hurwitz(&["poly", "--family", "pruned-simple", "--g", "0", "--n", "3"]);
    assert_eq!(
        stdout(&out),
        "{\"family\":\"pruned-simple\",\"g\":0,\"n\":3,\"poly\":[{\"exp\":[1,1,1],\"coef\":\"1\"}]}\n"
    );
}

#[test]
fn intersect_examples() {
    let out = hurwitz(&["intersect", "--g", "2", "--d", "4"]);
    assert_eq!(stdout(&out), "{\"g\":2,\"d\":[4],\"lambda\":0,\"value\":\"1/1152\"}\n");
    let out = hurwitz(&["intersect", "--g", "1", "--d", "0", "--lambda", "1"]);
    assert_eq!(stdout(&out), "{\"g\":1,\"d\":[0],\"lambda\":1,\"value\":\"1/24\"}\n");
}

#[test]
fn oracle_and_recursion_sources_agree() {
    let args = |source| {
        ["compute", "--family", "pruned-orbifold", "--a", "2", "--g", "0", "--mu", "2,2,2", "--source", source]
    };
    assert_eq!(stdout(&hurwitz(&args("oracle"))), stdout(&hurwitz(&args("recursion"))));
}

#[test]
fn belyi_reports_both_normalisations() {
    let out = hurwitz(&["compute", "--family", "pruned-belyi", "--g", "1", "--mu", "6", "--source", "lattice"]);
    assert_eq!(stdout(&out), "{\"value\":\"2/3\",\"value_times_prod_mu\":\"4\"}\n");
}

#[test]
fn csv_flattens_mu() {
    let out = hurwitz(&["compute", "--family", "simple", "--g", "0", "--mu", "2,1", "--format", "csv"]);
    assert_eq!(stdout(&out), "mu1,mu2,value,m,H\n2,1,4/3,3,8\n");
}

#[test]
fn transform_agrees_with_direct_value() {
    let out = hurwitz(&["transform", "--family", "simple", "--direction", "pruned-to-full", "--g", "1", "--mu", "2,1"]);
    assert!(stdout(&out).contains("\"agrees\":true"), "{}", stdout(&out));
}

#[test]
fn exit_codes() {
    let budget =
        hurwitz(&["compute", "--family", "simple", "--g", "5", "--mu", "6", "--source", "oracle", "--budget", "100"]);
    assert_eq!(budget.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("\"kind\":\"budget\""));
    assert_eq!(hurwitz(&["compute", "--family", "simple", "--g", "0", "--mu", "x"]).status.code(), Some(1));
    assert_eq!(hurwitz(&["compute", "--bogus"]).status.code(), Some(1));
    assert_eq!(hurwitz(&["--help"]).status.code(), Some(0));
    assert_eq!(hurwitz(&["verify", "--suite", "nope"]).status.code(), Some(1));
}

#[test]
fn incompatible_requests_are_refused() {
    for args in [
        &["compute", "--family", "simple", "--a", "2", "--g", "0", "--mu", "2"][..],
        &["compute", "--family", "pruned-orbifold", "--g", "0", "--mu", "2"],
        &["compute", "--family", "cycle", "--g", "0", "--mu", "2,2,1", "--source", "recursion"],
        &["poly", "--family", "simple", "--g", "0", "--n", "3"],
        &["compute", "--family", "simple", "--g", "0", "--mu", "0,2"],
    ] {
        let out = hurwitz(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("\"kind\":\"domain\""), "{args:?}");
    }
}

#[test]
fn cache_round_trip() {
    let path = scratch("cache.jsonl");
    let p = path.to_str().unwrap();
    let first = hurwitz(&["--cache", p, "compute", "--family", "pruned-simple", "--g", "1", "--mu", "3,2"]);
    assert_eq!(first.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().lines().count() > 0);
    let second =
        hurwitz(&["--cache", p, "--verify-cache", "compute", "--family", "pruned-simple", "--g", "1", "--mu", "3,2"]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert!(String::from_utf8_lossy(&second.stderr).contains("0 mismatches"));
    let text = std::fs::read_to_string(&path).unwrap().replacen("\"value\":\"", "\"value\":\"9", 1);
    std::fs::write(&path, text).unwrap();
    let tampered =
        hurwitz(&["--cache", p, "--verify-cache", "compute", "--family", "pruned-simple", "--g", "0", "--mu", "1,1,1"]);
    assert_eq!(tampered.status.code(), Some(1));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["poly", "--family", "pruned-orbifold", "--a", "2", "--g", "0", "--n", "3"][..],
        &["intersect", "--g", "1", "--n", "2", "--format", "text"],
        &["table", "--which", "gw", "--format", "csv"],
    ] {
        assert_eq!(stdout(&hurwitz(args)), stdout(&hurwitz(args)), "{args:?}");
    }
}

#[test]
fn tables_match() {
    for which in ["khat", "q", "gw"] {
        let out = stdout(&hurwitz(&["table", "--which", which, "--format", "csv"]));
        assert!(out.lines().count() > 1);
        assert!(out.lines().skip(1).all(|l| l.ends_with(",true")), "{which}: {out}");
    }
}

#[test]
fn verify_small_suite() {
    let out = hurwitz(&["verify", "--suite", "q", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().skip(1).all(|l| l.starts_with("pass")));
}
